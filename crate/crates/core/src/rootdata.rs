//! Root systems generated from Cartan matrices, integer cocharacters and the
//! combinatorics of standard parabolic subgroups.
//!
//! Roots are integer vectors in the simple-root basis. A separate torus map
//! sends each root to its character on the diagonal torus of the matrix
//! realization:
//!
//! | type | torus coordinates | simple roots |
//! |------|-------------------|--------------|
//! | `A_r` | `r+1` | `e_i - e_{i+1}` |
//! | `B_r` | `r` | `e_i - e_{i+1}`, `e_r` |
//! | `C_r` | `r` | `e_i - e_{i+1}`, `2e_r` |
//! | `D_r` | `r` | `e_i - e_{i+1}`, `e_{r-1} + e_r` |
//! | `G_2` | `2` | coweight coordinates |
//!
//! Products concatenate both the simple roots and the torus coordinates.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::Mat;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    G,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
            CartanType::G => "G",
        };
        f.write_str(s)
    }
}

impl CartanType {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            "G" => Ok(CartanType::G),
            _ => Err(Error::UnsupportedType(s.to_string())),
        }
    }

    fn check_rank(self, rank: usize) -> Result<()> {
        let ok = match self {
            CartanType::A | CartanType::C => rank >= 1,
            CartanType::B => rank >= 2,
            CartanType::D => rank >= 3,
            CartanType::G => rank == 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedType(format!("{self}{rank}")))
        }
    }

    fn cartan(self, r: usize) -> Vec<Vec<i64>> {
        let mut a = vec![vec![0i64; r]; r];
        for i in 0..r {
            a[i][i] = 2;
            if i + 1 < r {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        match self {
            CartanType::A => {}
            CartanType::B => a[r - 1][r - 2] = -2,
            CartanType::C if r >= 2 => a[r - 2][r - 1] = -2,
            CartanType::C => {}
            CartanType::D => {
                a[r - 2][r - 1] = 0;
                a[r - 1][r - 2] = 0;
                a[r - 3][r - 1] = -1;
                a[r - 1][r - 3] = -1;
            }
            CartanType::G => a[0][1] = -3,
        }
        a
    }

    fn torus_dim(self, r: usize) -> usize {
        match self {
            CartanType::A => r + 1,
            _ => r,
        }
    }

    /// Torus vectors of the simple roots.
    fn simple_torus(self, r: usize) -> Vec<Vec<i64>> {
        let d = self.torus_dim(r);
        (0..r)
            .map(|i| {
                let mut v = vec![0i64; d];
                match self {
                    CartanType::G => v[i] = 1,
                    _ if i + 1 < r => {
                        v[i] = 1;
                        v[i + 1] = -1;
                    }
                    CartanType::A => {
                        v[i] = 1;
                        v[i + 1] = -1;
                    }
                    CartanType::B => v[i] = 1,
                    CartanType::C => v[i] = 2,
                    CartanType::D => {
                        v[i - 1] = 1;
                        v[i] = 1;
                    }
                }
                v
            })
            .collect()
    }

    fn expected_roots(self, r: usize) -> usize {
        match self {
            CartanType::A => r * (r + 1),
            CartanType::B | CartanType::C => 2 * r * r,
            CartanType::D => 2 * r * (r - 1),
            CartanType::G => 12,
        }
    }
}

/// An irreducible factor of a datum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub ty: CartanType,
    pub rank: usize,
    /// Index of the first simple root of this factor.
    pub offset: usize,
    /// Index of the first torus coordinate of this factor.
    pub torus_offset: usize,
}

impl Component {
    pub fn torus_dim(&self) -> usize {
        self.ty.torus_dim(self.rank)
    }

    pub fn simple_range(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.rank
    }
}

/// A (possibly decomposable) root system with its torus realization.
///
/// Root indices: positive roots ordered by height and then with earlier simple
/// roots first, followed by their negatives in the same order. Hence root `i`
/// for `i < rank` is the `i`-th simple root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    label: String,
    components: Vec<Component>,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    n_pos: usize,
    torus_dim: usize,
    simple_torus: Vec<Vec<i64>>,
}

impl RootDatum {
    /// Irreducible datum of the given type and rank.
    pub fn new(ty: CartanType, rank: usize) -> Result<Self> {
        RootDatum::product(&[(ty, rank)])
    }

    /// Direct product of irreducible data, in the given order.
    pub fn product(factors: &[(CartanType, usize)]) -> Result<Self> {
        let mut components = Vec::new();
        let (mut off, mut toff) = (0, 0);
        for &(ty, rank) in factors {
            ty.check_rank(rank)?;
            components.push(Component { ty, rank, offset: off, torus_offset: toff });
            off += rank;
            toff += ty.torus_dim(rank);
        }
        let r = off;
        let mut cartan = vec![vec![0i64; r]; r];
        let mut simple_torus = vec![vec![0i64; toff]; r];
        for c in &components {
            let a = c.ty.cartan(c.rank);
            let st = c.ty.simple_torus(c.rank);
            for i in 0..c.rank {
                for j in 0..c.rank {
                    cartan[c.offset + i][c.offset + j] = a[i][j];
                }
                for (t, &x) in st[i].iter().enumerate() {
                    simple_torus[c.offset + i][c.torus_offset + t] = x;
                }
            }
        }
        let label = if components.is_empty() {
            "T".to_string()
        } else {
            components.iter().map(|c| format!("{}{}", c.ty, c.rank)).collect::<Vec<_>>().join("x")
        };
        let positive = reflection_closure(&cartan);
        let expected: usize = components.iter().map(|c| c.ty.expected_roots(c.rank)).sum();
        assert_eq!(2 * positive.len(), expected, "root count mismatch for {label}");
        let n_pos = positive.len();
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|v| v.iter().map(|x| -x).collect::<Vec<i64>>()));
        let index = roots.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        Ok(RootDatum { label, components, cartan, roots, index, n_pos, torus_dim: toff, simple_torus })
    }

    /// Parses labels such as `A2`, `C3` or `A1xA1`.
    pub fn parse(label: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for part in label.split(['x', '*']) {
            let part = part.trim();
            let (t, r) = part.split_at(part.len().min(1));
            let ty = CartanType::parse(t)?;
            let rank: usize = r.parse().map_err(|_| Error::UnsupportedType(part.to_string()))?;
            factors.push((ty, rank));
        }
        RootDatum::product(&factors)
    }

    /// The datum with no roots, for a torus of the given dimension.
    pub fn torus(dim: usize) -> Self {
        RootDatum {
            label: "T".to_string(),
            components: Vec::new(),
            cartan: Vec::new(),
            roots: Vec::new(),
            index: HashMap::new(),
            n_pos: 0,
            torus_dim: dim,
            simple_torus: Vec::new(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn torus_dim(&self) -> usize {
        self.torus_dim
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots[..self.n_pos]
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.n_pos
    }

    /// Index of `-alpha`.
    pub fn negative(&self, i: usize) -> usize {
        if i < self.n_pos {
            i + self.n_pos
        } else {
            i - self.n_pos
        }
    }

    pub fn height(&self, i: usize) -> i64 {
        self.roots[i].iter().sum()
    }

    /// Index of the component whose simple roots support root `i`.
    pub fn component_of(&self, i: usize) -> usize {
        let j = self.roots[i].iter().position(|&x| x != 0).expect("roots are nonzero");
        self.component_of_simple(j)
    }

    pub fn component_of_simple(&self, j: usize) -> usize {
        self.components.iter().position(|c| c.simple_range().contains(&j)).expect("simple root index")
    }

    /// Character of root `i` on the diagonal torus.
    pub fn torus_vector(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0i64; self.torus_dim];
        for (j, &b) in self.roots[i].iter().enumerate() {
            for (t, &x) in self.simple_torus[j].iter().enumerate() {
                v[t] += b * x;
            }
        }
        v
    }

    /// Roots whose support lies in the simple roots of `subset`.
    pub fn subsystem_roots(&self, subset: &[usize]) -> Vec<usize> {
        (0..self.num_roots())
            .filter(|&i| self.roots[i].iter().enumerate().all(|(j, &b)| b == 0 || subset.contains(&j)))
            .collect()
    }
}

fn reflection_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let simple: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            let mut v = vec![0; r];
            v[i] = 1;
            v
        })
        .collect();
    let mut seen: BTreeSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut queue: VecDeque<Vec<i64>> = simple.into_iter().collect();
    while let Some(beta) = queue.pop_front() {
        for i in 0..r {
            let c: i64 = (0..r).map(|j| beta[j] * cartan[i][j]).sum();
            let mut img = beta.clone();
            img[i] -= c;
            if seen.insert(img.clone()) {
                queue.push_back(img);
            }
        }
    }
    let mut pos: Vec<Vec<i64>> = seen.into_iter().filter(|v| v.iter().all(|&x| x >= 0)).collect();
    for v in &pos {
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        debug_assert!(neg.iter().all(|&x| x <= 0));
    }
    pos.sort_by(|a, b| {
        let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    pos
}

/// A cocharacter of the diagonal torus, optionally conjugated by a group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocharacter {
    datum: Arc<RootDatum>,
    weights: Vec<i64>,
    conjugator: Option<Mat>,
}

impl Cocharacter {
    /// Validates the weight vector: one entry per torus coordinate, and the
    /// entries of every type-A block sum to zero.
    pub fn new(datum: &Arc<RootDatum>, weights: Vec<i64>) -> Result<Self> {
        if weights.len() != datum.torus_dim() {
            return Err(Error::InvalidCocharacter(format!(
                "expected {} weights, found {}",
                datum.torus_dim(),
                weights.len()
            )));
        }
        for c in datum.components() {
            if c.ty == CartanType::A {
                let s: i64 = weights[c.torus_offset..c.torus_offset + c.torus_dim()].iter().sum();
                if s != 0 {
                    return Err(Error::InvalidCocharacter(format!("weights of {}{} sum to {s}", c.ty, c.rank)));
                }
            }
        }
        Ok(Cocharacter { datum: datum.clone(), weights, conjugator: None })
    }

    pub fn zero(datum: &Arc<RootDatum>) -> Self {
        Cocharacter { datum: datum.clone(), weights: vec![0; datum.torus_dim()], conjugator: None }
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn conjugator(&self) -> Option<&Mat> {
        self.conjugator.as_ref()
    }

    pub fn with_conjugator(mut self, c: Mat) -> Self {
        self.conjugator = if c.is_identity() { None } else { Some(c) };
        self
    }

    /// The opposite cocharacter `-lambda`, with the same conjugator.
    pub fn neg(&self) -> Self {
        Cocharacter {
            datum: self.datum.clone(),
            weights: self.weights.iter().map(|w| -w).collect(),
            conjugator: self.conjugator.clone(),
        }
    }

    fn require_unconjugated(&self) -> Result<()> {
        match &self.conjugator {
            Some(_) => Err(Error::ConjugatedCocharacter),
            None => Ok(()),
        }
    }

    /// `<lambda, alpha>` for root index `alpha`.
    pub fn pairing(&self, alpha: usize) -> Result<i64> {
        self.require_unconjugated()?;
        Ok(self.datum.torus_vector(alpha).iter().zip(&self.weights).map(|(a, w)| a * w).sum())
    }
}

/// `<lambda, alpha>`.
pub fn pairing(lambda: &Cocharacter, alpha: usize) -> Result<i64> {
    lambda.pairing(alpha)
}

/// Root indices split by the sign of their pairing with a cocharacter.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootPartition {
    pub levi: Vec<usize>,
    pub radical: Vec<usize>,
    pub outside: Vec<usize>,
}

pub fn parabolic_root_partition(lambda: &Cocharacter) -> Result<RootPartition> {
    let mut out = RootPartition::default();
    for i in 0..lambda.datum.num_roots() {
        match lambda.pairing(i)?.signum() {
            0 => out.levi.push(i),
            1 => out.radical.push(i),
            _ => out.outside.push(i),
        }
    }
    Ok(out)
}

/// Whether every positive root pairs strictly positively.
pub fn is_borel_cocharacter(lambda: &Cocharacter) -> Result<bool> {
    let d = &lambda.datum;
    for i in 0..d.num_positive() {
        if lambda.pairing(i)? <= 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest subset of roots containing `seed` that is closed under negation
/// and under sums that are roots.
pub fn root_closure(datum: &RootDatum, seed: &[usize]) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = seed.iter().flat_map(|&i| [i, datum.negative(i)]).collect();
    loop {
        let cur: Vec<usize> = set.iter().copied().collect();
        let mut grew = false;
        for &a in &cur {
            for &b in &cur {
                let s: Vec<i64> = datum.root(a).iter().zip(datum.root(b)).map(|(x, y)| x + y).collect();
                if let Some(c) = datum.root_index(&s) {
                    grew |= set.insert(c);
                }
            }
        }
        if !grew {
            return set;
        }
    }
}

/// Whether the roots of the unipotent radicals of `P_I` and its opposite
/// generate the whole root system.
pub fn radical_generation_check(datum: &RootDatum, subset: &[usize]) -> bool {
    let levi: BTreeSet<usize> = datum.subsystem_roots(subset).into_iter().collect();
    let radical: Vec<usize> = (0..datum.num_positive()).filter(|i| !levi.contains(i)).collect();
    !radical.is_empty() && root_closure(datum, &radical).len() == datum.num_roots()
}

/// Whether no irreducible component of the datum lies inside the span of `subset`.
pub fn no_component_inside(datum: &RootDatum, subset: &[usize]) -> bool {
    datum.components().iter().all(|c| !c.simple_range().all(|j| subset.contains(&j)))
}

/// For a Borel cocharacter: whether it pairs nontrivially with some root of
/// every irreducible component.
pub fn simple_factor_projection_check(lambda: &Cocharacter) -> Result<bool> {
    if !is_borel_cocharacter(lambda)? {
        return Err(Error::NotBorel);
    }
    pairs_nontrivially_on_each_factor(lambda)
}

/// The same test without the Borel precondition.
pub fn pairs_nontrivially_on_each_factor(lambda: &Cocharacter) -> Result<bool> {
    let d = &lambda.datum;
    for (ci, _) in d.components().iter().enumerate() {
        let mut hit = false;
        for i in 0..d.num_roots() {
            if d.component_of(i) == ci && lambda.pairing(i)? != 0 {
                hit = true;
                break;
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A standard parabolic `P_I` with its canonical cocharacter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardParabolic {
    /// Sorted simple-root indices in the Levi factor.
    pub subset: Vec<usize>,
    pub cocharacter: Cocharacter,
}

impl StandardParabolic {
    pub fn is_borel(&self) -> bool {
        self.subset.is_empty()
    }

    pub fn contains(&self, other: &StandardParabolic) -> bool {
        other.subset.iter().all(|j| self.subset.contains(j))
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// The canonical cocharacter of `P_I`: pairing zero on `I`, and a common
/// positive value `m` on the other simple roots, with `m` the least positive
/// integer that makes the weights integral.
pub fn canonical_cocharacter(datum: &Arc<RootDatum>, subset: &[usize]) -> Cocharacter {
    // Each component yields numerators over a denominator; rescale to a common one.
    let mut parts: Vec<(Vec<i64>, i64)> = Vec::new();
    for c in datum.components() {
        let r = c.rank;
        let val: Vec<i64> = c.simple_range().map(|j| if subset.contains(&j) { 0 } else { 1 }).collect();
        let (nums, den) = match c.ty {
            CartanType::A => {
                let mut a = vec![0i64; r + 1];
                for i in (0..r).rev() {
                    a[i] = a[i + 1] + val[i];
                }
                let s: i64 = a.iter().sum();
                let den = (r + 1) as i64;
                (a.iter().map(|x| x * den - s).collect::<Vec<_>>(), den)
            }
            CartanType::B | CartanType::C => {
                let last = if c.ty == CartanType::B { 2 * val[r - 1] } else { val[r - 1] };
                let mut a = vec![0i64; r];
                a[r - 1] = last;
                for i in (0..r - 1).rev() {
                    a[i] = a[i + 1] + 2 * val[i];
                }
                (a, 2)
            }
            CartanType::D => {
                let mut a = vec![0i64; r];
                a[r - 1] = val[r - 1] - val[r - 2];
                a[r - 2] = val[r - 1] + val[r - 2];
                for i in (0..r - 2).rev() {
                    a[i] = a[i + 1] + 2 * val[i];
                }
                (a, 2)
            }
            CartanType::G => (val, 1),
        };
        let g = nums.iter().fold(den, |acc, &x| gcd(acc, x));
        parts.push((nums.iter().map(|x| x / g).collect(), den / g));
    }
    let m = parts.iter().fold(1i64, |acc, (_, d)| acc / gcd(acc, *d) * d);
    let weights = parts.into_iter().flat_map(|(nums, d)| nums.into_iter().map(move |x| x * (m / d))).collect();
    Cocharacter::new(datum, weights).expect("canonical weights satisfy the realization constraint")
}

/// All `2^r` standard parabolics, indexed by the bitmask of their subset.
pub fn standard_parabolic_lattice(datum: &Arc<RootDatum>) -> Vec<StandardParabolic> {
    let r = datum.rank();
    (0..1u64 << r)
        .map(|mask| {
            let subset: Vec<usize> = (0..r).filter(|j| mask >> j & 1 == 1).collect();
            let cocharacter = canonical_cocharacter(datum, &subset);
            StandardParabolic { subset, cocharacter }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(label: &str) -> Arc<RootDatum> {
        Arc::new(RootDatum::parse(label).unwrap())
    }

    fn root_of(d: &RootDatum, coords: &[i64]) -> usize {
        d.root_index(coords).unwrap()
    }

    #[test]
    fn root_counts() {
        assert_eq!(datum("A1").num_roots(), 2);
        let a2 = datum("A2");
        assert_eq!((a2.num_roots(), a2.num_positive()), (6, 3));
        let c2 = datum("C2");
        assert_eq!((c2.num_roots(), c2.num_positive()), (8, 4));
        for r in 1..=4 {
            assert_eq!(datum(&format!("A{r}")).num_roots(), r * (r + 1));
            assert_eq!(datum(&format!("C{r}")).num_roots(), 2 * r * r);
        }
        assert_eq!(datum("B3").num_roots(), 18);
        assert_eq!(datum("D4").num_roots(), 24);
        assert_eq!(datum("G2").num_roots(), 12);
        assert_eq!(datum("A1xA1").num_roots(), 4);
        assert!(RootDatum::parse("E6").is_err());
    }

    #[test]
    fn ordering_starts_with_simple_roots() {
        let a3 = datum("A3");
        assert_eq!(a3.root(0), &[1, 0, 0]);
        assert_eq!(a3.root(2), &[0, 0, 1]);
        assert_eq!(a3.root(5), &[1, 1, 1]);
        assert_eq!(a3.root(a3.negative(0)), &[-1, 0, 0]);
    }

    #[test]
    fn pairing_examples() {
        let a1 = datum("A1");
        let l = Cocharacter::new(&a1, vec![1, -1]).unwrap();
        assert_eq!(l.pairing(0).unwrap(), 2);
        assert_eq!(l.pairing(1).unwrap(), -2);

        let a2 = datum("A2");
        let l = Cocharacter::new(&a2, vec![1, 0, -1]).unwrap();
        assert_eq!(l.pairing(0).unwrap(), 1);
        assert_eq!(l.pairing(1).unwrap(), 1);
        assert_eq!(l.pairing(root_of(&a2, &[1, 1])).unwrap(), 2);
        assert!(is_borel_cocharacter(&l).unwrap());

        let c = l.clone().with_conjugator(Mat::from_rows(&[[0, 1, 0], [1, 0, 0], [0, 0, 1]]));
        assert_eq!(c.pairing(0), Err(Error::ConjugatedCocharacter));
        assert!(Cocharacter::new(&a2, vec![1, 0, 0]).is_err());
    }

    #[test]
    fn partition_examples() {
        let a2 = datum("A2");
        let z = parabolic_root_partition(&Cocharacter::zero(&a2)).unwrap();
        assert_eq!((z.levi.len(), z.radical.len(), z.outside.len()), (6, 0, 0));

        let p = parabolic_root_partition(&Cocharacter::new(&a2, vec![2, -1, -1]).unwrap()).unwrap();
        let a23 = root_of(&a2, &[0, 1]);
        assert_eq!(p.levi, vec![a23, a2.negative(a23)]);
        assert_eq!(p.radical, vec![root_of(&a2, &[1, 0]), root_of(&a2, &[1, 1])]);

        let b = Cocharacter::new(&a2, vec![2, 1, -3]).unwrap();
        assert!(parabolic_root_partition(&b).unwrap().levi.is_empty());
        assert!(!is_borel_cocharacter(&Cocharacter::zero(&a2)).unwrap());

        let c2 = datum("C2");
        assert!(is_borel_cocharacter(&Cocharacter::new(&c2, vec![2, 1]).unwrap()).unwrap());
    }

    #[test]
    fn radical_generation_examples() {
        let a2 = datum("A2");
        assert!(!radical_generation_check(&a2, &[0, 1]));
        assert!(radical_generation_check(&a2, &[]));
        let a1a1 = datum("A1xA1");
        assert!(!radical_generation_check(&a1a1, &[0]));
        assert!(radical_generation_check(&a1a1, &[]));
    }

    #[test]
    fn factor_projection() {
        let a1a1 = datum("A1xA1");
        let both = Cocharacter::new(&a1a1, vec![1, -1, 1, -1]).unwrap();
        assert!(simple_factor_projection_check(&both).unwrap());
        let one = Cocharacter::new(&a1a1, vec![1, -1, 0, 0]).unwrap();
        assert_eq!(simple_factor_projection_check(&one), Err(Error::NotBorel));
        assert!(!pairs_nontrivially_on_each_factor(&one).unwrap());
        let a2 = datum("A2");
        assert!(simple_factor_projection_check(&canonical_cocharacter(&a2, &[])).unwrap());
    }

    #[test]
    fn canonical_cocharacters() {
        assert_eq!(canonical_cocharacter(&datum("A1"), &[]).weights(), &[1, -1]);
        assert_eq!(canonical_cocharacter(&datum("A2"), &[]).weights(), &[1, 0, -1]);
        assert_eq!(canonical_cocharacter(&datum("C2"), &[]).weights(), &[3, 1]);
        assert_eq!(canonical_cocharacter(&datum("A1xA1"), &[]).weights(), &[1, -1, 1, -1]);
        assert_eq!(standard_parabolic_lattice(&datum("A1")).len(), 2);
        assert_eq!(standard_parabolic_lattice(&datum("A2")).len(), 4);
        assert_eq!(standard_parabolic_lattice(&datum("C2")).len(), 4);
    }

    #[test]
    fn canonical_levi_is_subsystem_exhaustive() {
        for label in ["A1", "A2", "A3", "B2", "B3", "C1", "C2", "C3", "D3", "G2", "A1xA1", "A2xC2"] {
            let d = datum(label);
            for sp in standard_parabolic_lattice(&d) {
                let part = parabolic_root_partition(&sp.cocharacter).unwrap();
                assert_eq!(part.levi, d.subsystem_roots(&sp.subset), "{label} {:?}", sp.subset);
                let m = (0..d.rank()).map(|j| sp.cocharacter.pairing(j).unwrap()).max().unwrap();
                for j in 0..d.rank() {
                    let want = if sp.subset.contains(&j) { 0 } else { m };
                    assert_eq!(sp.cocharacter.pairing(j).unwrap(), want);
                }
            }
        }
    }

    #[test]
    fn radical_generation_matches_factor_criterion() {
        for label in ["A1", "A2", "A3", "C1", "C2", "C3", "A1xA1"] {
            let d = datum(label);
            for sp in standard_parabolic_lattice(&d) {
                assert_eq!(
                    radical_generation_check(&d, &sp.subset),
                    no_component_inside(&d, &sp.subset),
                    "{label} {:?}",
                    sp.subset
                );
            }
        }
    }
}
