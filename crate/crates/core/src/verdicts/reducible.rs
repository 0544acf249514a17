use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::chevalley::{GModule, MatrixGroup, Realization};
use crate::error::{Error, Result};
use crate::exactalg::subspace::projective_points;
use crate::exactalg::{Fe, Field, Mat, RowBasis, Subspace};
use crate::parabolics::{enumerate_parabolics, radical_roots, shape_levi, ParabolicDescriptor};
use crate::MAX_MODULE_DIM;

use super::irreducible::proper_subsets;
use super::{subspace_rows, Exactness, Question, Verdict, Witness};

/// The smallest subspace containing `v` and stable under `action`.
pub fn spin(v: &[Fe], action: &[Mat], f: &Field) -> Subspace {
    let n = v.len();
    let mut basis = RowBasis::new(n);
    let mut queue = Vec::new();
    if basis.insert(v, f) {
        queue.push(v.to_vec());
    }
    while let Some(w) = queue.pop() {
        for g in action {
            let gw = g.apply(&w, f);
            if basis.insert(&gw, f) {
                queue.push(gw);
            }
        }
    }
    Subspace::span(n, basis.rows(), f)
}

/// All invariant subspaces, sorted by dimension then basis.
#[derive(Clone, Debug)]
pub struct Submodules {
    pub all: Vec<Subspace>,
}

impl Submodules {
    /// Nonzero submodules containing no other nonzero submodule.
    pub fn minimal(&self, f: &Field) -> Vec<&Subspace> {
        let below = |a: &Subspace, b: &Subspace| a.dim() > 0 && a.dim() < b.dim() && b.contains_space(a, f);
        self.all.iter().filter(|s| s.dim() > 0 && !self.all.iter().any(|t| below(t, s))).collect()
    }

    /// A submodule `C` with `W + C = V` and `W ∩ C = 0`.
    pub fn complement(&self, w: &Subspace, f: &Field) -> Option<&Subspace> {
        let n = w.ambient_dim();
        self.all.iter().find(|c| c.dim() + w.dim() == n && w.sum(c, f).dim() == n)
    }
}

/// Invariant subspaces under `action`: sums of the cyclic submodules.
pub fn invariant_subspaces(action: &[Mat], n: usize, f: &Field) -> Submodules {
    let cyclic: BTreeSet<Subspace> = projective_points(n, f).iter().map(|v| spin(v, action, f)).collect();
    let mut all: BTreeSet<Subspace> = BTreeSet::from([Subspace::zero(n)]);
    let mut queue = vec![Subspace::zero(n)];
    while let Some(s) = queue.pop() {
        for c in &cyclic {
            let t = s.sum(c, f);
            if all.insert(t.clone()) {
                queue.push(t);
            }
        }
    }
    let mut all: Vec<Subspace> = all.into_iter().collect();
    all.sort_by(|a, b| (a.dim(), a).cmp(&(b.dim(), b)));
    Submodules { all }
}

/// Sum of the minimal submodules.
pub fn socle(subs: &Submodules, n: usize, f: &Field) -> Subspace {
    subs.minimal(f).into_iter().fold(Subspace::zero(n), |acc, s| acc.sum(s, f))
}

fn projective_count(q: u32, n: usize) -> f64 {
    let q = q as f64;
    (q.powi(n as i32) - 1.0) / (q - 1.0)
}

/// Complete reducibility of a module, by enumerating all submodules at levels
/// `1..=d_max` that fit the vector budget.
pub fn module_semisimple(m: &GModule, d_max: u32) -> Result<Verdict> {
    let n = m.dim();
    if n > MAX_MODULE_DIM {
        return Err(Error::DimensionTooLarge(n));
    }
    let budget = m.group().cap();
    let mut levels = Vec::new();
    let mut notes = Vec::new();
    let mut last = None;
    for d in 1..=d_max.max(1) {
        let md = match m.at_level(d) {
            Ok(md) => md,
            Err(e) if d > 1 => {
                notes.push(format!("level {d} skipped: {e}"));
                break;
            }
            Err(e) => return Err(e),
        };
        let f = md.field().clone();
        if projective_count(f.order(), n) > budget as f64 {
            if d == 1 {
                return Err(Error::CapExceeded { what: "module vectors".into(), partial: 0, cap: budget });
            }
            notes.push(format!("level {d} skipped: more than {budget} projective points"));
            break;
        }
        let subs = invariant_subspaces(md.action(), n, &f);
        let soc = socle(&subs, n, &f);
        let bad = subs.all.iter().find(|w| w.dim() > 0 && w.dim() < n && subs.complement(w, &f).is_none());
        if let Some(w) = bad {
            return Ok(Verdict::new(Question::ModuleSemisimple, false, Exactness::AtLevel(d), d)
                .with(Witness::Uncomplemented { basis: subspace_rows(w) })
                .with(Witness::Socle { basis: subspace_rows(&soc) }));
        }
        levels.push(d);
        last = Some((soc, subs.all.len()));
    }
    let top = *levels.last().expect("level 1 completed");
    let (soc, count) = last.expect("level 1 completed");
    let mut v = Verdict::new(Question::ModuleSemisimple, true, Exactness::AtLevel(top), top)
        .with(Witness::Socle { basis: subspace_rows(&soc) })
        .with(Witness::Bound { what: "submodules at the top level".into(), levels, checked: count });
    for n in notes {
        v = v.with(Witness::note(n));
    }
    Ok(v)
}

/// Every element `prod x_alpha(s_alpha)` of the unipotent radical of a standard parabolic.
pub(crate) fn radical_elements(real: &Realization, roots: &[usize], f: &Field) -> Vec<Mat> {
    let n = real.dim();
    let mut out = vec![Mat::identity(n)];
    for &a in roots {
        let xs: Vec<Mat> = f.elements().map(|s| real.root_element(a, s, f)).collect();
        out = out.iter().flat_map(|w| xs.iter().map(move |x| (w, x))).map(|(w, x)| w.mul(x, f)).collect();
    }
    out
}

/// A `w` in `R_u(P)` with `w y w^{-1}` in the standard Levi for every standardized `y`.
fn levi_conjugator(ys: &[Mat], radical: &[Mat], exps: &[i64], f: &Field) -> Option<Mat> {
    radical
        .par_iter()
        .find_first(|w| {
            let wi = w.inverse(f).expect("unipotent");
            ys.iter().all(|y| shape_levi(&w.mul(y, f).mul(&wi, f), exps))
        })
        .cloned()
}

/// Parabolics at one level that contain `H` and admit no Levi containing it.
fn scan_level(gd: &MatrixGroup, hd: &[Mat], d: u32, first_only: bool) -> Result<(usize, Vec<ParabolicDescriptor>)> {
    let real = gd.require_realization()?;
    let f = gd.field();
    let mut containing = 0;
    let mut failing = Vec::new();
    for ty in proper_subsets(real.datum().rank()) {
        let ps = enumerate_parabolics(gd, &ty, d)?;
        let roots = radical_roots(real.datum(), &ty);
        let size = (f.order() as f64).powi(roots.len() as i32);
        let mut radical = None;
        for p in ps.iter().filter(|p| hd.iter().all(|y| p.in_parabolic(y, f))) {
            containing += 1;
            if radical.is_none() {
                if size > gd.cap() as f64 {
                    return Err(Error::CapExceeded { what: "unipotent radical".into(), partial: 0, cap: gd.cap() });
                }
                radical = Some(radical_elements(real, &roots, f));
            }
            let ys: Vec<Mat> = hd.iter().map(|y| p.conjugator_inv().mul(y, f).mul(&p.conjugator, f)).collect();
            if levi_conjugator(&ys, radical.as_ref().unwrap(), p.exponents(), f).is_none() {
                failing.push(p.clone());
                if first_only {
                    return Ok((containing, failing));
                }
            }
        }
    }
    Ok((containing, failing))
}

/// All parabolics of `G` at `level` containing `H` for which no R-Levi contains `H`.
pub fn gcr_failing_parabolics(h: &MatrixGroup, g: &MatrixGroup, level: u32) -> Result<Vec<ParabolicDescriptor>> {
    let gd = g.at_level(level)?;
    let hd = g.embed_into(h.generators(), gd.field())?;
    Ok(scan_level(&gd, &hd, level, false)?.1)
}

/// G-complete reducibility at levels `1..=d_max`: each parabolic containing
/// `H` must have a Levi subgroup containing `H`, searched among the
/// `R_u(P)`-conjugates of the standard Levi.
pub fn gcr_check(h: &MatrixGroup, g: &MatrixGroup, d_max: u32) -> Result<Verdict> {
    let real = g.require_realization()?;
    let mut levels = Vec::new();
    let mut notes = Vec::new();
    let mut checked = 0;
    let mut result = None;
    for d in 1..=d_max.max(1) {
        let gd = match g.at_level(d) {
            Ok(x) => x,
            Err(e) if d > 1 => {
                notes.push(format!("level {d} skipped: {e}"));
                break;
            }
            Err(e) => return Err(e),
        };
        let hd = g.embed_into(h.generators(), gd.field())?;
        match scan_level(&gd, &hd, d, true) {
            Ok((containing, failing)) => {
                checked += containing;
                if let Some(p) = failing.first() {
                    result = Some(Verdict::new(Question::GCompletelyReducible, false, Exactness::AtLevel(d), d).with(
                        Witness::Parabolic { subset: p.subset.clone(), conjugator: p.conjugator.clone(), level: d },
                    ));
                    break;
                }
                levels.push(d);
            }
            Err(e @ Error::CapExceeded { .. }) if d > 1 => {
                notes.push(format!("level {d} skipped: {e}"));
                break;
            }
            Err(e) => return Err(e),
        }
    }
    let mut v = result.unwrap_or_else(|| {
        let top = *levels.last().expect("level 1 completed");
        Verdict::new(Question::GCompletelyReducible, true, Exactness::AtLevel(top), top).with(Witness::Bound {
            what: "parabolics containing H".into(),
            levels: levels.clone(),
            checked,
        })
    });
    for n in notes {
        v = v.with(Witness::note(n));
    }
    if real.is_type_a_single() && h.dim() <= MAX_MODULE_DIM {
        let natural = GModule::natural(h.clone());
        if let Ok(ms) = module_semisimple(&natural, d_max) {
            let agrees = ms.answer == v.answer;
            v = v.with(Witness::CrossCheck { what: "semisimplicity of the natural module".into(), agrees });
            if !agrees {
                v = v.with(Witness::note("G-complete reducibility disagrees with module semisimplicity"));
            }
        }
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::{a5_permutation_module, adjoint_sl2_module, Realization};

    #[test]
    fn natural_sl2_is_irreducible() {
        let f4 = Field::new(2, 2).unwrap();
        let g = MatrixGroup::realized(&Realization::sl(2).unwrap(), &f4);
        let v = module_semisimple(&GModule::natural(g), 2).unwrap();
        assert!(v.answer);
        assert_eq!(v.exactness, Exactness::AtLevel(2));
    }

    #[test]
    fn counterexample_modules() {
        let f4 = Field::new(2, 2).unwrap();
        let v = module_semisimple(&adjoint_sl2_module(&f4).unwrap(), 4).unwrap();
        assert!(!v.answer);
        assert_eq!(v.witness("uncomplemented"), Some(&Witness::Uncomplemented { basis: vec![vec![0, 1, 0]] }));

        let f5 = Field::prime(5).unwrap();
        let v = module_semisimple(&a5_permutation_module(&f5).unwrap(), 4).unwrap();
        assert!(!v.answer);
        assert_eq!(v.witness("socle"), Some(&Witness::Socle { basis: vec![vec![1; 5]] }));
        assert_eq!(v.witness("uncomplemented"), Some(&Witness::Uncomplemented { basis: vec![vec![1; 5]] }));
    }

    #[test]
    fn a5_submodule_lattice() {
        let f5 = Field::prime(5).unwrap();
        let m = a5_permutation_module(&f5).unwrap();
        let subs = invariant_subspaces(m.action(), 5, &f5);
        assert_eq!(subs.all.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![0, 1, 4, 5]);
    }

    #[test]
    fn gcr_examples() {
        let f4 = Field::new(2, 2).unwrap();
        let sl3 = MatrixGroup::realized(&Realization::sl(3).unwrap(), &f4);
        let image = adjoint_sl2_module(&f4).unwrap().image_group().unwrap();
        let v = gcr_check(&image, &sl3, 2).unwrap();
        assert!(!v.answer);
        assert!(v.witness("parabolic").is_some());
        assert_eq!(
            v.witness("cross_check"),
            Some(&Witness::CrossCheck { what: "semisimplicity of the natural module".into(), agrees: true })
        );

        let f2 = Field::prime(2).unwrap();
        let sl2 = MatrixGroup::realized(&Realization::sl(2).unwrap(), &f2);
        assert!(gcr_check(&sl2, &sl2, 2).unwrap().answer);
    }

    #[test]
    fn radical_enumeration_is_a_bijection() {
        let f3 = Field::prime(3).unwrap();
        let sl3 = Realization::sl(3).unwrap();
        let roots = radical_roots(sl3.datum(), &[]);
        let els: BTreeSet<Mat> = radical_elements(&sl3, &roots, &f3).into_iter().collect();
        assert_eq!(els.len(), 27);
        assert!(els.iter().all(|u| u.is_unipotent(&f3) && (0..3).all(|i| (0..i).all(|j| u.get(i, j).is_zero()))));
    }
}
