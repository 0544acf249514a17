//! Borel and parabolic subgroups as flag configurations, and the limit
//! description of `P_lambda`, `L_lambda` and `R_u(P_lambda)`.
//!
//! A parabolic of type `I` is stored as the tuple of subspaces
//! `c * S_j` (one per simple root `j` outside `I`), where `S_j` is the
//! standard flag subspace of `j` and `c` lies in `G^0`. Its stabilizer in
//! `G^0` is `c P_I c^{-1}`. Membership uses shape conditions on `c^{-1} g c`
//! read off from the canonical cocharacter of `P_I`, so it does not depend on
//! the field.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::chevalley::{LieElement, MatrixGroup, Realization};
use crate::error::{Error, Result};
use crate::exactalg::subspace::projective_points;
use crate::exactalg::{Fe, Field, LaurentMatrix, Limit, Mat, RowBasis, Subspace};
use crate::rootdata::{canonical_cocharacter, parabolic_root_partition, CartanType, Cocharacter, RootDatum};

/// Sort/dedup key of a configuration: its subspace keys, sorted.
pub type ConfigKey = Vec<Vec<u16>>;

pub fn config_key(config: &[Subspace]) -> ConfigKey {
    let mut k: Vec<Vec<u16>> = config.iter().map(Subspace::key).collect();
    k.sort();
    k
}

/// The standard configuration of type `subset` (or of the opposite parabolic).
pub fn standard_config(real: &Realization, subset: &[usize], opposite: bool) -> Vec<Subspace> {
    (0..real.datum().rank()).filter(|j| !subset.contains(j)).map(|j| real.flag_subspace(j, opposite)).collect()
}

/// A conjugate `c P_I c^{-1}` of a standard parabolic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParabolicDescriptor {
    /// Simple roots of the Levi factor.
    pub subset: Vec<usize>,
    pub config: Vec<Subspace>,
    pub conjugator: Mat,
    #[serde(skip)]
    conjugator_inv: Mat,
    /// Diagonal exponents of the canonical cocharacter of `P_I`.
    #[serde(skip)]
    exponents: Vec<i64>,
    /// Extension degree of the working field over the base field.
    pub level: u32,
}

impl ParabolicDescriptor {
    pub fn standard(real: &Realization, subset: &[usize], level: u32) -> Self {
        let n = real.dim();
        let lambda = canonical_cocharacter(real.datum(), subset);
        ParabolicDescriptor {
            subset: subset.to_vec(),
            config: standard_config(real, subset, false),
            conjugator: Mat::identity(n),
            conjugator_inv: Mat::identity(n),
            exponents: real.diagonal_exponents(lambda.weights()),
            level,
        }
    }

    /// `c P c^{-1}`.
    pub fn conjugate(&self, c: &Mat, f: &Field) -> Result<Self> {
        let ci = c.inverse(f).ok_or(Error::NotInvertible)?;
        let conj = c.mul(&self.conjugator, f);
        Ok(ParabolicDescriptor {
            subset: self.subset.clone(),
            config: self.config.iter().map(|s| s.image(c, f)).collect(),
            conjugator_inv: self.conjugator_inv.mul(&ci, f),
            conjugator: conj,
            exponents: self.exponents.clone(),
            level: self.level,
        })
    }

    pub fn conjugator_inv(&self) -> &Mat {
        &self.conjugator_inv
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn is_borel(&self) -> bool {
        self.subset.is_empty()
    }

    pub fn key(&self) -> ConfigKey {
        config_key(&self.config)
    }

    /// The canonical cocharacter of this parabolic: that of `P_I`, carrying the conjugator.
    pub fn cocharacter(&self, real: &Realization) -> Cocharacter {
        canonical_cocharacter(real.datum(), &self.subset).with_conjugator(self.conjugator.clone())
    }

    fn standardize(&self, g: &Mat, f: &Field) -> Mat {
        self.conjugator_inv.mul(g, f).mul(&self.conjugator, f)
    }

    /// `g` in the R-parabolic: the limit of `lambda(t) g lambda(t)^{-1}` exists.
    pub fn in_parabolic(&self, g: &Mat, f: &Field) -> bool {
        shape_parabolic(&self.standardize(g, f), &self.exponents)
    }

    /// `g` in the R-Levi: `g` commutes with `lambda`.
    pub fn in_levi(&self, g: &Mat, f: &Field) -> bool {
        shape_levi(&self.standardize(g, f), &self.exponents)
    }

    /// `g` in the unipotent radical: the limit exists and is the identity.
    pub fn in_radical(&self, g: &Mat, f: &Field) -> bool {
        let y = self.standardize(g, f);
        let d = &self.exponents;
        shape_parabolic(&y, d)
            && (0..y.rows())
                .all(|a| (0..y.cols()).all(|b| d[a] != d[b] || y.get(a, b) == if a == b { Fe::ONE } else { Fe::ZERO }))
    }

    /// Whether `g` maps the configuration onto itself, i.e. normalizes `P`.
    pub fn normalized_by(&self, g: &Mat, f: &Field) -> bool {
        let img: Vec<Subspace> = self.config.iter().map(|s| s.image(g, f)).collect();
        if img == self.config {
            return true;
        }
        config_key(&img) == self.key()
    }

    /// The standard configuration of the opposite parabolic, moved by the conjugator.
    pub fn opposite_config(&self, real: &Realization, f: &Field) -> Vec<Subspace> {
        standard_config(real, &self.subset, true).iter().map(|s| s.image(&self.conjugator, f)).collect()
    }
}

/// `y_ab = 0` whenever `d_a < d_b`.
pub fn shape_parabolic(y: &Mat, d: &[i64]) -> bool {
    (0..y.rows()).all(|a| (0..y.cols()).all(|b| d[a] >= d[b] || y.get(a, b).is_zero()))
}

/// `y_ab = 0` whenever `d_a != d_b`.
pub fn shape_levi(y: &Mat, d: &[i64]) -> bool {
    (0..y.rows()).all(|a| (0..y.cols()).all(|b| d[a] == d[b] || y.get(a, b).is_zero()))
}

/// Whether `g` stabilizes every subspace of the standard flag of type `subset`.
pub fn standard_parabolic_membership(real: &Realization, subset: &[usize], g: &Mat, f: &Field) -> bool {
    standard_config(real, subset, false).iter().all(|s| s.is_stable(g, f))
}

/// Upper bound (exact in type A) for the number of parabolics of type `subset`
/// in `G^0(F_q)`, as a float so it never overflows.
pub fn parabolic_count_bound(real: &Realization, subset: &[usize], q: u64) -> f64 {
    let q = q as f64;
    let qint = |k: usize| (q.powi(k as i32) - 1.0) / (q - 1.0);
    let qfact = |k: usize| (1..=k).map(qint).product::<f64>();
    let mut total = 1.0;
    for c in real.datum().components() {
        match c.ty {
            CartanType::A => {
                // composition of r + 1 cut after each simple root outside I
                let mut parts = Vec::new();
                let mut run = 1;
                for j in c.simple_range() {
                    if subset.contains(&j) {
                        run += 1;
                    } else {
                        parts.push(run);
                        run = 1;
                    }
                }
                parts.push(run);
                total *= qfact(c.rank + 1) / parts.iter().map(|&k| qfact(k)).product::<f64>();
            }
            _ => total *= (1..=c.rank).map(|i| qint(2 * i)).product::<f64>(),
        }
    }
    total
}

/// All `G^0`-conjugates of `P_I`, by orbit search on configurations under the
/// identity-component generators, sorted by configuration key.
pub fn enumerate_parabolics(g: &MatrixGroup, subset: &[usize], level: u32) -> Result<Vec<ParabolicDescriptor>> {
    let real = g.require_realization()?;
    let f = g.field();
    let cap = g.cap();
    if parabolic_count_bound(real, subset, f.order() as u64) > cap as f64 {
        return Err(Error::CapExceeded { what: format!("parabolics of type {subset:?}"), partial: 0, cap });
    }
    let start = ParabolicDescriptor::standard(real, subset, level);
    let mut seen: HashMap<ConfigKey, usize> = HashMap::from([(start.key(), 0)]);
    let mut found = vec![start];
    let mut queue = VecDeque::from([0usize]);
    let gens = g.identity_generators();
    while let Some(i) = queue.pop_front() {
        for s in gens {
            let img: Vec<Subspace> = found[i].config.iter().map(|x| x.image(s, f)).collect();
            let key = config_key(&img);
            if seen.contains_key(&key) {
                continue;
            }
            if found.len() >= cap {
                return Err(Error::CapExceeded {
                    what: format!("parabolics of type {subset:?}"),
                    partial: found.len(),
                    cap,
                });
            }
            let c = s.mul(&found[i].conjugator, f);
            let ci = found[i].conjugator_inv.mul(&s.inverse(f).ok_or(Error::NotInvertible)?, f);
            seen.insert(key, found.len());
            queue.push_back(found.len());
            found.push(ParabolicDescriptor {
                subset: subset.to_vec(),
                config: img,
                conjugator: c,
                conjugator_inv: ci,
                exponents: found[i].exponents.clone(),
                level,
            });
        }
    }
    let mut keyed: Vec<(ConfigKey, ParabolicDescriptor)> = found.into_iter().map(|p| (p.key(), p)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, p)| p).collect())
}

/// Number of Borel subgroups of `G^0(F)` predicted by the degree formula.
pub fn borel_count(g: &MatrixGroup) -> Result<u128> {
    Ok(g.require_realization()?.borel_count(g.field().order() as u64))
}

/// All Borel subgroups of `G^0`.
pub fn enumerate_borels(g: &MatrixGroup) -> Result<Vec<ParabolicDescriptor>> {
    let count = borel_count(g).map_err(|_| Error::ClosureUnavailable)?;
    if count > g.cap() as u128 {
        return Err(Error::CapExceeded { what: "Borel subgroups".into(), partial: 0, cap: g.cap() });
    }
    enumerate_parabolics(g, &[], 1)
}

/// Borels normalized by `x`. For `SL_n`/`GL_n` beyond the enumeration budget,
/// the `x`-stable complete flags are found recursively instead (at most
/// `limit` of them).
pub fn borels_normalized_by(x: &Mat, g: &MatrixGroup) -> Result<Vec<ParabolicDescriptor>> {
    borels_normalized_by_limited(x, g, usize::MAX)
}

pub fn borels_normalized_by_limited(x: &Mat, g: &MatrixGroup, limit: usize) -> Result<Vec<ParabolicDescriptor>> {
    let real = g.require_realization()?;
    let f = g.field();
    if borel_count(g)? <= g.cap() as u128 {
        let all = enumerate_borels(g)?;
        return Ok(all.into_iter().filter(|b| b.normalized_by(x, f)).take(limit).collect());
    }
    if real.is_type_a_single() {
        let flags = stable_complete_flags(x, f, limit.min(g.cap()));
        let mut out: Vec<ParabolicDescriptor> =
            flags.into_iter().map(|fl| flag_descriptor(real, fl, f)).collect::<Result<_>>()?;
        out.sort_by_key(|p| p.key());
        return Ok(out);
    }
    Err(Error::CapExceeded { what: "Borel subgroups".into(), partial: 0, cap: g.cap() })
}

/// Builds the descriptor of a complete flag, with a conjugator of determinant 1.
fn flag_descriptor(real: &Realization, flag: Vec<Subspace>, f: &Field) -> Result<ParabolicDescriptor> {
    let n = real.dim();
    let mut cols: Vec<Vec<Fe>> = Vec::new();
    let mut basis = RowBasis::new(n);
    let full = Subspace::full(n);
    for s in flag.iter().chain(std::iter::once(&full)) {
        let v = s.basis().iter().find(|v| !basis.contains(v, f)).expect("flag is strictly increasing").clone();
        basis.insert(&v, f);
        cols.push(v);
    }
    let mut c = Mat::from_fn(n, n, |i, j| cols[j][i]);
    if real.is_special_linear() {
        let dinv = f.inv(c.det(f)).ok_or(Error::NotInvertible)?;
        for i in 0..n {
            let v = f.mul(c.get(i, n - 1), dinv);
            c.set(i, n - 1, v);
        }
    }
    ParabolicDescriptor::standard(real, &[], 1).conjugate(&c, f)
}

/// `x`-stable complete flags `0 < W_1 < .. < W_{n-1} < F^n`, depth first in
/// projective-point order, stopping after `limit`.
pub fn stable_complete_flags(x: &Mat, f: &Field, limit: usize) -> Vec<Vec<Subspace>> {
    let n = x.rows();
    let nil = x.sub(&Mat::identity(n), f);
    let mut out = Vec::new();
    let mut flag = Vec::new();
    flag_search(&nil, f, &Subspace::zero(n), &mut flag, &mut out, limit);
    out
}

fn flag_search(
    nil: &Mat,
    f: &Field,
    current: &Subspace,
    flag: &mut Vec<Subspace>,
    out: &mut Vec<Vec<Subspace>>,
    limit: usize,
) {
    let n = nil.rows();
    if out.len() >= limit {
        return;
    }
    if current.dim() + 1 == n {
        out.push(flag.clone());
        return;
    }
    // K = {v : (x - 1) v in current}; the next flag member is current + <v>, v in K.
    let ann = if current.dim() == 0 {
        Mat::identity(n)
    } else {
        let w = Mat::from_fn(current.dim(), n, |i, j| current.basis()[i][j]);
        let rows = w.nullspace(f);
        Mat::from_fn(rows.len(), n, |i, j| rows[i][j])
    };
    let k = ann.mul(nil, f).nullspace(f);
    let mut quotient = RowBasis::new(n);
    for v in current.basis() {
        quotient.insert(v, f);
    }
    let mut reps = Vec::new();
    for v in &k {
        if quotient.insert(v, f) {
            reps.push(v.clone());
        }
    }
    for coeffs in projective_points(reps.len(), f) {
        let v: Vec<Fe> = (0..n)
            .map(|i| reps.iter().zip(&coeffs).fold(Fe::ZERO, |acc, (r, &c)| f.add(acc, f.mul(c, r[i]))))
            .collect();
        let next = current.sum(&Subspace::span(n, &[v], f), f);
        flag.push(next.clone());
        flag_search(nil, f, &next, flag, out, limit);
        flag.pop();
        if out.len() >= limit {
            return;
        }
    }
}

/// An element `g` of `G^0` with `g B g^{-1}` the standard Borel.
pub fn conjugator_to_standard_borel(b: &ParabolicDescriptor, g: &MatrixGroup) -> Result<Mat> {
    let real = g.require_realization()?;
    if !b.is_borel() {
        return Err(Error::NotABorel);
    }
    let f = g.field();
    let x = b.conjugator_inv.clone();
    let std = ParabolicDescriptor::standard(real, &[], b.level);
    let moved: Vec<Subspace> = b.config.iter().map(|s| s.image(&x, f)).collect();
    if config_key(&moved) != std.key() || !g.in_identity_component(&x)? {
        return Err(Error::NotABorel);
    }
    Ok(x)
}

/// Where `g` falls relative to `P_lambda`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LimitClass {
    Outside,
    InRadical,
    InLevi,
    InPNotLeviNotRadical,
}

/// Lie algebra counterpart of [`LimitClass`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LieLimitClass {
    Outside,
    InRadicalAlg,
    InLeviAlg,
    InPAlg,
}

fn lambda_laurent(lambda: &Cocharacter, real: &Realization, f: &Field) -> (LaurentMatrix, LaurentMatrix) {
    let d = real.diagonal_exponents(lambda.weights());
    let neg: Vec<i64> = d.iter().map(|x| -x).collect();
    let (l, li) = (LaurentMatrix::diagonal_monomials(&d), LaurentMatrix::diagonal_monomials(&neg));
    match lambda.conjugator() {
        None => (l, li),
        Some(c) => {
            let ci = c.inverse(f).expect("conjugator is invertible");
            let cl = LaurentMatrix::constant(c);
            (cl.mul(&l, f).mul_const(&ci, f), cl.mul(&li, f).mul_const(&ci, f))
        }
    }
}

/// `lim_{t->0} lambda(t) g lambda(t)^{-1}` for `lambda` possibly conjugated.
pub fn cochar_limit_element(lambda: &Cocharacter, real: &Realization, g: &Mat, f: &Field) -> Limit {
    let (l, li) = lambda_laurent(lambda, real, f);
    l.mul_const(g, f).mul(&li, f).limit()
}

pub fn limit_membership_classify(lambda: &Cocharacter, real: &Realization, g: &Mat, f: &Field) -> (LimitClass, Limit) {
    let lim = cochar_limit_element(lambda, real, g, f);
    let class = match lim.value() {
        None => LimitClass::Outside,
        Some(m) if m == g => LimitClass::InLevi,
        Some(m) if m.is_identity() => LimitClass::InRadical,
        Some(_) => LimitClass::InPNotLeviNotRadical,
    };
    (class, lim)
}

pub fn ad_limit_classify(lambda: &Cocharacter, real: &Realization, x: &LieElement, f: &Field) -> Result<LieLimitClass> {
    if !real.lie_contains(x.mat(), f) {
        return Err(Error::ConstraintViolated);
    }
    let lim = cochar_limit_element(lambda, real, x.mat(), f);
    Ok(match lim.value() {
        None => LieLimitClass::Outside,
        Some(m) if m == x.mat() => LieLimitClass::InLeviAlg,
        Some(m) if m.is_zero() => LieLimitClass::InRadicalAlg,
        Some(_) => LieLimitClass::InPAlg,
    })
}

/// Flattens a matrix into a vector of `F^{n^2}`.
pub fn mat_vector(m: &Mat) -> Vec<Fe> {
    m.entries().to_vec()
}

/// The Borel subalgebra `Ad(c) Lie(B_std)` of a Borel descriptor, as a subspace of `F^{n^2}`.
pub fn borel_subalgebra(b: &ParabolicDescriptor, real: &Realization, f: &Field) -> Subspace {
    let n = real.dim();
    let vs: Vec<Vec<Fe>> = real
        .borel_subalgebra_basis(f)
        .iter()
        .map(|x| mat_vector(&x.conj(&b.conjugator, &b.conjugator_inv, f)))
        .collect();
    Subspace::span(n * n, &vs, f)
}

/// Borel subalgebras (deduplicated as subspaces, sorted) containing the nilpotent `e`.
pub fn borel_subalgebras_containing(e: &LieElement, g: &MatrixGroup) -> Result<Vec<Subspace>> {
    let real = g.require_realization()?;
    let f = g.field();
    if !e.is_nilpotent(f) {
        return Err(Error::NotNilpotent);
    }
    let mut subs: Vec<Subspace> = enumerate_borels(g)?.iter().map(|b| borel_subalgebra(b, real, f)).collect();
    subs.sort();
    subs.dedup();
    let v = mat_vector(e.mat());
    Ok(subs.into_iter().filter(|s| s.contains(&v, f)).collect())
}

/// Radical roots of a standard parabolic: positive pairing with its canonical cocharacter.
pub fn radical_roots(datum: &Arc<RootDatum>, subset: &[usize]) -> Vec<usize> {
    parabolic_root_partition(&canonical_cocharacter(datum, subset)).expect("unconjugated").radical
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Field;

    fn group(label: &str, p: u32, k: u32) -> MatrixGroup {
        MatrixGroup::realized(&Realization::parse(label).unwrap(), &Field::new(p, k).unwrap())
    }

    #[test]
    fn borel_counts() {
        assert_eq!(enumerate_borels(&group("SL2", 2, 1)).unwrap().len(), 3);
        assert_eq!(enumerate_borels(&group("SL3", 2, 1)).unwrap().len(), 21);
        assert_eq!(enumerate_borels(&group("Sp4", 2, 1)).unwrap().len(), 45);
        assert_eq!(enumerate_borels(&group("SL2", 2, 2)).unwrap().len(), 5);
        assert_eq!(enumerate_borels(&group("Sp4", 2, 2)).unwrap().len(), 425);
    }

    #[test]
    fn count_bounds() {
        let sl5 = Realization::sl(5).unwrap();
        assert_eq!(parabolic_count_bound(&sl5, &[1, 2, 3], 5), 781.0);
        assert_eq!(parabolic_count_bound(&sl5, &[0, 2, 3], 5), 20306.0);
        let sl3 = Realization::sl(3).unwrap();
        assert_eq!(parabolic_count_bound(&sl3, &[], 2), 21.0);
        let g = group("SL3", 3, 1);
        assert_eq!(enumerate_parabolics(&g, &[1], 1).unwrap().len(), 13);
    }

    #[test]
    fn borel_times_order_is_group_order() {
        for (label, p) in [("SL2", 2), ("SL2", 3), ("SL3", 2), ("Sp4", 2)] {
            let g = group(label, p, 1);
            let f = g.field().clone();
            let borels = enumerate_borels(&g).unwrap();
            let cl = g.closure().unwrap();
            let b0 = cl.elements().iter().filter(|x| borels[0].in_parabolic(x, &f)).count();
            assert_eq!(borels.len() * b0, cl.len(), "{label} over F{p}");
        }
    }

    #[test]
    fn normalized_borels() {
        let g = group("SL3", 2, 1);
        let f = g.field().clone();
        let u = g.require_realization().unwrap().standard_regular_unipotent(&f);
        let bs = borels_normalized_by(&u, &g).unwrap();
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].key(), ParabolicDescriptor::standard(g.require_realization().unwrap(), &[], 1).key());
        let e13 = Mat::from_rows(&[[1, 0, 1], [0, 1, 0], [0, 0, 1]]);
        // two projective lines of flags meeting in one point: 2q + 1
        assert_eq!(borels_normalized_by(&e13, &g).unwrap().len(), 5);
        assert_eq!(borels_normalized_by(&Mat::identity(3), &g).unwrap().len(), 21);
    }

    #[test]
    fn recursive_flags_agree_with_enumeration() {
        let g = group("SL3", 2, 1);
        let f = g.field().clone();
        for x in g.closure().unwrap().elements().iter().filter(|x| x.is_unipotent(&f)) {
            let direct = borels_normalized_by(x, &g).unwrap().len();
            assert_eq!(stable_complete_flags(x, &f, usize::MAX).len(), direct);
        }
    }

    #[test]
    fn conjugators_round_trip() {
        let g = group("SL3", 2, 1);
        let f = g.field().clone();
        let real = g.require_realization().unwrap().clone();
        let std = ParabolicDescriptor::standard(&real, &[], 1);
        for b in enumerate_borels(&g).unwrap() {
            let x = conjugator_to_standard_borel(&b, &g).unwrap();
            let moved: Vec<Subspace> = b.config.iter().map(|s| s.image(&x, &f)).collect();
            assert_eq!(config_key(&moved), std.key());
        }
        assert!(conjugator_to_standard_borel(&std, &g).unwrap().is_identity());
        let g2 = group("SL2", 2, 1);
        let lower = ParabolicDescriptor {
            config: vec![Subspace::coordinate(2, [1])],
            ..ParabolicDescriptor::standard(g2.require_realization().unwrap(), &[], 1)
        };
        let all = enumerate_borels(&g2).unwrap();
        let found = all.iter().find(|b| b.key() == lower.key()).unwrap();
        let w = conjugator_to_standard_borel(found, &g2).unwrap();
        assert_eq!(Subspace::coordinate(2, [1]).image(&w, g2.field()), Subspace::coordinate(2, [0]));
    }

    #[test]
    fn membership_examples() {
        let f3 = Field::prime(3).unwrap();
        let sl3 = Realization::sl(3).unwrap();
        let up = Mat::from_rows(&[[1, 2, 1], [0, 2, 1], [0, 0, 2]]);
        let low = Mat::from_rows(&[[1, 0, 0], [1, 1, 0], [0, 0, 1]]);
        assert!(standard_parabolic_membership(&sl3, &[], &up, &f3));
        assert!(!standard_parabolic_membership(&sl3, &[], &low, &f3));
        assert!(standard_parabolic_membership(&sl3, &[0, 1], &low, &f3));
        let sp4 = Realization::sp(4).unwrap();
        let f2 = Field::prime(2).unwrap();
        // I = {long simple root}: stabilizer of the line <e_1>.
        let x = sp4.root_element(1, Fe::ONE, &f2);
        assert!(standard_parabolic_membership(&sp4, &[1], &x, &f2));
        let y = sp4.root_element(sp4.datum().negative(0), Fe::ONE, &f2);
        assert!(!standard_parabolic_membership(&sp4, &[1], &y, &f2));
    }

    #[test]
    fn limit_examples() {
        let f3 = Field::prime(3).unwrap();
        let sl3 = Realization::sl(3).unwrap();
        let d = sl3.datum().clone();
        let lambda = canonical_cocharacter(&d, &[]);
        let (c, _) = limit_membership_classify(&lambda, &sl3, &Mat::identity(3), &f3);
        assert_eq!(c, LimitClass::InLevi);
        let x0 = sl3.root_element(0, Fe::ONE, &f3);
        assert_eq!(limit_membership_classify(&lambda, &sl3, &x0, &f3).0, LimitClass::InRadical);
        let xm = sl3.root_element(d.negative(0), Fe::ONE, &f3);
        assert_eq!(limit_membership_classify(&lambda, &sl3, &xm, &f3).0, LimitClass::Outside);

        // <lambda, alpha_1> = 0 < <lambda, alpha_2> for lambda of P_{alpha_1}
        let mu = canonical_cocharacter(&d, &[0]);
        let xa = sl3.root_element(d.negative(0), Fe::ONE, &f3);
        let xb = sl3.root_element(1, Fe::ONE, &f3);
        let (c, lim) = limit_membership_classify(&mu, &sl3, &xa.mul(&xb, &f3), &f3);
        assert_eq!(c, LimitClass::InPNotLeviNotRadical);
        assert_eq!(lim.value(), Some(&xa));
    }

    #[test]
    fn lie_limits() {
        let f3 = Field::prime(3).unwrap();
        let sl2 = Realization::sl(2).unwrap();
        let lambda = canonical_cocharacter(sl2.datum(), &[]);
        assert_eq!(ad_limit_classify(&lambda, &sl2, &LieElement::zero(&sl2), &f3).unwrap(), LieLimitClass::InLeviAlg);
        let e = LieElement::new(&sl2, Mat::unit(2, 0, 1), &f3).unwrap();
        assert_eq!(ad_limit_classify(&lambda, &sl2, &e, &f3).unwrap(), LieLimitClass::InRadicalAlg);
    }

    #[test]
    fn borel_subalgebras() {
        let g = group("SL3", 2, 1);
        let f = g.field().clone();
        let real = g.require_realization().unwrap().clone();
        let all = borel_subalgebras_containing(&LieElement::zero(&real), &g).unwrap();
        assert_eq!(all.len(), 21);
        let e = LieElement::regular_nilpotent(&real, &f);
        assert_eq!(borel_subalgebras_containing(&e, &g).unwrap().len(), 1);
        let e13 = LieElement::new(&real, Mat::unit(3, 0, 2), &f).unwrap();
        assert_eq!(borel_subalgebras_containing(&e13, &g).unwrap().len(), 5);
    }
}
