//! Finite matrix groups given by generators, with cached closures and
//! identity-component bookkeeping.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::exactalg::{Fe, Field, Mat};

use super::realization::Realization;

/// Every element of a finite group, in breadth-first discovery order.
#[derive(Debug)]
pub struct Closure {
    elements: Vec<Mat>,
    index: HashMap<Mat, u32>,
}

impl Closure {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Mat] {
        &self.elements
    }

    pub fn contains(&self, g: &Mat) -> bool {
        self.index.contains_key(g)
    }

    pub fn position(&self, g: &Mat) -> Option<usize> {
        self.index.get(g).map(|&i| i as usize)
    }

    fn from_elements(elements: Vec<Mat>) -> Self {
        let index = elements.iter().enumerate().map(|(i, g)| (g.clone(), i as u32)).collect();
        Closure { elements, index }
    }
}

/// Breadth-first closure of `gens` under right multiplication, starting at the
/// identity. Fails once more than `cap` elements have been found.
pub fn group_closure(gens: &[Mat], n: usize, f: &Field, cap: usize) -> Result<Closure> {
    let id = Mat::identity(n);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0u32)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for s in gens {
            let y = elements[i].mul(s, f);
            if !index.contains_key(&y) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { what: "group closure".into(), partial: elements.len(), cap });
                }
                index.insert(y.clone(), elements.len() as u32);
                queue.push_back(elements.len());
                elements.push(y);
            }
        }
    }
    let c = Closure { elements, index };
    // Finite, so closure under generators is closure under inverses; spot-check it.
    for s in gens {
        let inv = s.inverse(f).ok_or(Error::NotInvertible)?;
        debug_assert!(c.contains(&inv));
    }
    Ok(c)
}

/// Closure cap from `REGUNIP_CAP`, or the default.
pub fn default_cap() -> usize {
    std::env::var("REGUNIP_CAP").ok().and_then(|v| v.parse().ok()).unwrap_or(crate::DEFAULT_CLOSURE_CAP)
}

/// A finite matrix group `G`, optionally realized (its identity component is
/// then `G^0 = realization(F)`), with designated identity-component generators.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    field: Field,
    n: usize,
    label: String,
    realization: Option<Realization>,
    generators: Vec<Mat>,
    identity_generators: Vec<Mat>,
    cap: usize,
    closure: OnceLock<Result<Arc<Closure>>>,
    identity_closure: OnceLock<Result<Arc<Closure>>>,
}

impl MatrixGroup {
    /// `G(F)` for a connected realization.
    pub fn realized(real: &Realization, f: &Field) -> Self {
        MatrixGroup::realized_with_outer(real, f, Vec::new())
    }

    /// `G(F)` extended by elements of other components (they must normalize `G^0`).
    pub fn realized_with_outer(real: &Realization, f: &Field, outer: Vec<Mat>) -> Self {
        let id_gens = real.generators(f);
        let mut gens = id_gens.clone();
        gens.extend(outer.iter().cloned());
        let mut label = format!("{}(F{})", real.label(), f.order());
        if !outer.is_empty() {
            label.push_str("+outer");
        }
        MatrixGroup {
            field: f.clone(),
            n: real.dim(),
            label,
            realization: Some(real.clone()),
            generators: gens,
            identity_generators: id_gens,
            cap: default_cap(),
            closure: OnceLock::new(),
            identity_closure: OnceLock::new(),
        }
    }

    /// The group generated by `gens`, treated as its own identity component
    /// unless [`MatrixGroup::with_identity_generators`] says otherwise.
    pub fn generated(f: &Field, gens: Vec<Mat>) -> Result<Self> {
        let n = gens.first().map(Mat::rows).ok_or(Error::DimensionMismatch { expected: 1, found: 0 })?;
        for g in &gens {
            if g.rows() != n || g.cols() != n {
                return Err(Error::DimensionMismatch { expected: n, found: g.rows() });
            }
            if g.det(f).is_zero() {
                return Err(Error::NotInvertible);
            }
        }
        Ok(MatrixGroup {
            field: f.clone(),
            n,
            label: format!("<{} gens>(F{})", gens.len(), f.order()),
            realization: None,
            identity_generators: gens.clone(),
            generators: gens,
            cap: default_cap(),
            closure: OnceLock::new(),
            identity_closure: OnceLock::new(),
        })
    }

    /// A group from its full element list (which must be closed). Generators
    /// are picked greedily in list order.
    pub fn from_elements(f: &Field, n: usize, elements: Vec<Mat>) -> Result<Self> {
        let mut gens: Vec<Mat> = Vec::new();
        let mut current = group_closure(&gens, n, f, usize::MAX)?;
        for x in &elements {
            if !current.contains(x) {
                gens.push(x.clone());
                current = group_closure(&gens, n, f, elements.len() + 1)?;
            }
        }
        if current.len() != elements.len() {
            return Err(Error::NotContained);
        }
        let closure = Arc::new(Closure::from_elements(elements));
        let g = MatrixGroup {
            field: f.clone(),
            n,
            label: format!("<{} elts>(F{})", closure.len(), f.order()),
            realization: None,
            identity_generators: gens.clone(),
            generators: gens,
            cap: default_cap(),
            closure: OnceLock::new(),
            identity_closure: OnceLock::new(),
        };
        let _ = g.closure.set(Ok(closure.clone()));
        let _ = g.identity_closure.set(Ok(closure));
        Ok(g)
    }

    pub fn with_identity_generators(mut self, gens: Vec<Mat>) -> Self {
        self.identity_generators = gens;
        self.identity_closure = OnceLock::new();
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self.closure = OnceLock::new();
        self.identity_closure = OnceLock::new();
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn realization(&self) -> Option<&Realization> {
        self.realization.as_ref()
    }

    pub fn require_realization(&self) -> Result<&Realization> {
        self.realization.as_ref().ok_or_else(|| Error::UnsupportedRealization(self.label.clone()))
    }

    pub fn generators(&self) -> &[Mat] {
        &self.generators
    }

    pub fn identity_generators(&self) -> &[Mat] {
        &self.identity_generators
    }

    /// Generators lying outside the identity-component generator list.
    pub fn outer_generators(&self) -> Vec<Mat> {
        self.generators.iter().filter(|g| !self.identity_generators.contains(g)).cloned().collect()
    }

    pub fn closure(&self) -> Result<Arc<Closure>> {
        self.closure
            .get_or_init(|| group_closure(&self.generators, self.n, &self.field, self.cap).map(Arc::new))
            .clone()
    }

    pub fn identity_closure(&self) -> Result<Arc<Closure>> {
        self.identity_closure
            .get_or_init(|| group_closure(&self.identity_generators, self.n, &self.field, self.cap).map(Arc::new))
            .clone()
    }

    pub fn order(&self) -> Result<usize> {
        Ok(self.closure()?.len())
    }

    /// Membership in `G^0`: by the realization predicate when realized, else
    /// by lookup in the identity-component closure.
    pub fn in_identity_component(&self, g: &Mat) -> Result<bool> {
        match &self.realization {
            Some(r) => Ok(r.contains(g, &self.field)),
            None => Ok(self.identity_closure()?.contains(g)),
        }
    }

    /// Membership in `G`.
    pub fn contains(&self, g: &Mat) -> Result<bool> {
        if self.realization.is_some() && self.outer_generators().is_empty() {
            return self.in_identity_component(g);
        }
        if let Ok(c) = self.closure() {
            return Ok(c.contains(g));
        }
        // Beyond the cap: search the finitely many cosets of G^0.
        for r in self.component_reps()? {
            let ri = r.inverse(&self.field).ok_or(Error::NotInvertible)?;
            if self.in_identity_component(&ri.mul(g, &self.field))? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn is_connected(&self) -> Result<bool> {
        for g in &self.generators {
            if !self.in_identity_component(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn coset_index(&self, reps: &[(Mat, Mat)], g: &Mat) -> Result<Option<usize>> {
        for (i, (_, ri)) in reps.iter().enumerate() {
            if self.in_identity_component(&ri.mul(g, &self.field))? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Representatives of the cosets `g G^0`, found by breadth-first search
    /// from the identity; the identity comes first.
    pub fn component_reps(&self) -> Result<Vec<Mat>> {
        Ok(self.component_bfs(&self.generators)?.into_iter().map(|(r, _)| r).collect())
    }

    fn component_bfs(&self, gens: &[Mat]) -> Result<Vec<(Mat, Mat)>> {
        let f = &self.field;
        let id = Mat::identity(self.n);
        let mut reps = vec![(id.clone(), id)];
        let mut i = 0;
        while i < reps.len() {
            for s in gens {
                let y = s.mul(&reps[i].0, f);
                if self.coset_index(&reps, &y)?.is_none() {
                    let yi = y.inverse(f).ok_or(Error::NotInvertible)?;
                    reps.push((y, yi));
                }
            }
            i += 1;
        }
        Ok(reps)
    }

    /// Whether the subgroup generated by `h_gens` meets every coset of `G^0`.
    pub fn meets_every_component(&self, h_gens: &[Mat]) -> Result<bool> {
        let all = self.component_bfs(&self.generators)?.len();
        let hit = self.component_bfs(h_gens)?.len();
        Ok(hit == all)
    }

    /// The same group over `F_{q^d}`: a realized group is rebuilt over the
    /// extension (the outer generators are embedded), while an abstract group
    /// keeps its finitely many elements.
    pub fn at_level(&self, d: u32) -> Result<MatrixGroup> {
        if d == 1 {
            return Ok(self.clone());
        }
        let big = self.field.extension(d)?;
        let table = big.embedding_from(&self.field)?;
        let embed = |v: &[Mat]| v.iter().map(|g| g.embed(&table)).collect::<Vec<_>>();
        let g = match &self.realization {
            Some(r) => MatrixGroup::realized_with_outer(r, &big, embed(&self.outer_generators())),
            None => MatrixGroup::generated(&big, embed(&self.generators))?
                .with_identity_generators(embed(&self.identity_generators)),
        };
        Ok(g.with_cap(self.cap).with_label(format!("{}@F{}", self.label, big.order())))
    }

    /// Embeds matrices over this group's field into `big`.
    pub fn embed_into(&self, mats: &[Mat], big: &Field) -> Result<Vec<Mat>> {
        let table: Vec<Fe> = big.embedding_from(&self.field)?;
        Ok(mats.iter().map(|g| g.embed(&table)).collect())
    }
}

/// Block-diagonal matrix `diag(a, b)`.
pub fn block_diag(a: &Mat, b: &Mat) -> Mat {
    let (n, m) = (a.rows(), b.rows());
    Mat::from_fn(n + m, n + m, |i, j| {
        if i < n && j < n {
            a.get(i, j)
        } else if i >= n && j >= n {
            b.get(i - n, j - n)
        } else {
            Fe::ZERO
        }
    })
}

/// Permutation matrix exchanging the two diagonal blocks of size `b`.
pub fn block_swap(b: usize) -> Mat {
    let perm: Vec<usize> = (0..2 * b).map(|j| (j + b) % (2 * b)).collect();
    Mat::permutation(&perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_sizes() {
        let f2 = Field::prime(2).unwrap();
        let id = MatrixGroup::generated(&f2, vec![Mat::identity(3)]).unwrap();
        assert_eq!(id.order().unwrap(), 1);
        let f3 = Field::prime(3).unwrap();
        assert_eq!(MatrixGroup::realized(&Realization::sl(2).unwrap(), &f3).order().unwrap(), 24);
        assert_eq!(MatrixGroup::realized(&Realization::sp(4).unwrap(), &f2).order().unwrap(), 720);
        assert_eq!(MatrixGroup::realized(&Realization::gl(2).unwrap(), &f3).order().unwrap(), 48);
        let f4 = Field::new(2, 2).unwrap();
        assert_eq!(MatrixGroup::realized(&Realization::sl(2).unwrap(), &f4).order().unwrap(), 60);
    }

    #[test]
    fn cap_is_enforced() {
        let f3 = Field::prime(3).unwrap();
        let g = MatrixGroup::realized(&Realization::sl(3).unwrap(), &f3).with_cap(100);
        match g.order() {
            Err(Error::CapExceeded { partial, cap, .. }) => assert_eq!((partial, cap), (100, 100)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn wreath_components() {
        let f2 = Field::prime(2).unwrap();
        let r = Realization::parse("SL2xSL2").unwrap();
        let g = MatrixGroup::realized_with_outer(&r, &f2, vec![block_swap(2)]);
        assert_eq!(g.order().unwrap(), 72);
        let reps = g.component_reps().unwrap();
        assert_eq!(reps.len(), 2);
        assert!(!g.is_connected().unwrap());
        let diag: Vec<Mat> = Realization::sl(2).unwrap().generators(&f2).iter().map(|s| block_diag(s, s)).collect();
        assert!(!g.meets_every_component(&diag).unwrap());
        let mut with_swap = diag.clone();
        with_swap.push(block_swap(2));
        assert!(g.meets_every_component(&with_swap).unwrap());
    }

    #[test]
    fn from_elements_round_trip() {
        let f2 = Field::prime(2).unwrap();
        let g = MatrixGroup::realized(&Realization::sl(3).unwrap(), &f2);
        let elems = g.closure().unwrap().elements().to_vec();
        let h = MatrixGroup::from_elements(&f2, 3, elems).unwrap();
        assert_eq!(h.order().unwrap(), 168);
        assert!(h.generators().len() <= 4);
    }
}
