use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::chevalley::{fixed_point_subgroup, group_closure, Endomorphism, MatrixGroup, Realization};
use crate::error::{Error, Result};
use crate::exactalg::field::power_exponent;
use crate::exactalg::{Field, Mat, Subspace};
use crate::parabolics::{
    borels_normalized_by_limited, cochar_limit_element, config_key, enumerate_borels, radical_roots, ConfigKey,
    ParabolicDescriptor,
};

use super::reducible::radical_elements;
use super::{Exactness, Question, Verdict, Witness};

fn is_monomial(m: &Mat) -> bool {
    let n = m.rows();
    (0..n).all(|i| (0..n).filter(|&j| !m.get(i, j).is_zero()).count() == 1)
        && (0..n).all(|j| (0..n).filter(|&i| !m.get(i, j).is_zero()).count() == 1)
}

/// Limit of `g` along the Borel cocharacter of the standard Borel if `g`
/// normalizes it, else of the first Borel it normalizes.
/// The verdict says whether the limit normalizes that Borel and a maximal
/// torus in it (the conjugate of the diagonal torus).
pub fn semisimplify_element(g: &Mat, group: &MatrixGroup) -> Result<(Mat, Verdict)> {
    let f = group.field();
    let real = group.require_realization()?;
    if !group.contains(g)? {
        return Err(Error::NotContained);
    }
    let std = ParabolicDescriptor::standard(real, &[], 1);
    let bs = if std.normalized_by(g, f) { vec![std] } else { borels_normalized_by_limited(g, group, 1)? };
    let b = bs.first().ok_or(Error::NoNormalizedBorel)?;
    let lambda = b.cocharacter(real);
    // g normalizes B and the Borel cocharacter is fixed by diagram symmetries, so the limit exists
    let x = cochar_limit_element(&lambda, real, g, f).value().cloned().ok_or(Error::NoNormalizedBorel)?;
    let standardized = b.conjugator_inv().mul(&x, f).mul(&b.conjugator, f);
    let mut answer = b.normalized_by(&x, f) && is_monomial(&standardized);
    let mut v = Verdict::new(Question::Quasisemisimple, false, Exactness::AtLevel(1), 1)
        .with(Witness::LimitElement { limit: x.clone() })
        .with(Witness::Parabolic { subset: Vec::new(), conjugator: b.conjugator.clone(), level: 1 });
    if g.is_unipotent(f) {
        let unip = x.is_unipotent(f);
        v = v.with(Witness::CrossCheck { what: "limit of a unipotent element is unipotent".into(), agrees: unip });
        answer &= unip;
    }
    v.answer = answer;
    Ok((x, v))
}

/// A `sigma`-fixed regular unipotent in the component `rep * G^0` (the
/// identity component if `rep` is `None`). The standard regular unipotent is
/// tried first, then the fixed points in sorted order.
pub fn find_sigma_fixed_regular(g: &MatrixGroup, sigma: &Endomorphism, rep: Option<&Mat>) -> Result<Mat> {
    let f = g.field();
    let real = g.require_realization()?;
    let rep_inv = match rep {
        Some(r) => {
            let ri = r.inverse(f).ok_or(Error::NotInvertible)?;
            let sr = sigma.apply(r, f)?;
            if !g.in_identity_component(&ri.mul(&sr, f))? {
                return Err(Error::NotStable);
            }
            Some(ri)
        }
        None => None,
    };
    let in_component = |x: &Mat| -> Result<bool> {
        match &rep_inv {
            Some(ri) => g.in_identity_component(&ri.mul(x, f)),
            None => g.in_identity_component(x),
        }
    };
    let regular =
        |x: &Mat| -> Result<bool> { Ok(x.is_unipotent(f) && borels_normalized_by_limited(x, g, 2)?.len() == 1) };
    let std = real.standard_regular_unipotent(f);
    if sigma.apply(&std, f)? == std && in_component(&std)? && regular(&std)? {
        return Ok(std);
    }
    let fixed = fixed_point_subgroup(g, sigma)?;
    let mut els: Vec<Mat> = fixed.closure()?.elements().to_vec();
    els.sort();
    for x in &els {
        if in_component(x)? && regular(x)? {
            return Ok(x.clone());
        }
    }
    Err(Error::NoneFound { level: f.k() })
}

/// Elements of the unipotent radical of the standard Borel.
pub fn unipotent_radical_elements(real: &Realization, f: &Field) -> Vec<Mat> {
    radical_elements(real, &radical_roots(real.datum(), &[]), f)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaBorelTorusCounts {
    pub borels: usize,
    pub stable_borels: usize,
    /// Fewest sigma-stable maximal tori in a sigma-stable Borel.
    pub min_stable_tori: usize,
    pub stable_pairs: usize,
    /// Size of the orbit of the first stable pair under the fixed points.
    pub orbit: usize,
}

type FrameKey = Vec<Vec<u16>>;

fn frame_key(lines: &[Subspace]) -> FrameKey {
    let mut k: Vec<Vec<u16>> = lines.iter().map(Subspace::key).collect();
    k.sort();
    k
}

/// For a Frobenius map on connected `G`: a sigma-stable Borel exists, each
/// contains a sigma-stable maximal torus, and all sigma-stable pairs are
/// conjugate under `G_sigma`. Tori in a Borel `c B c^{-1}` are the frames of
/// lines `c u e_i` for `u` in the unipotent radical.
pub fn sigma_stable_borel_torus_check(
    g: &MatrixGroup,
    sigma: &Endomorphism,
) -> Result<(Verdict, SigmaBorelTorusCounts)> {
    let f = g.field();
    let real = g.require_realization()?;
    let q = sigma
        .frobenius_q()
        .ok_or_else(|| Error::UnsupportedRealization("sigma-stable pairs need a Frobenius map".into()))?;
    let e = power_exponent(f.p(), q).ok_or(Error::WrongCharacteristic { expected: f.p(), found: q })?;
    let g0 = MatrixGroup::realized(real, f).with_cap(g.cap());
    let n = real.dim();
    let frob = |s: &Subspace| s.map_entries(|a| f.frobenius(a, e), f);

    let borels = enumerate_borels(&g0)?;
    let stable: Vec<_> =
        borels.iter().filter(|b| config_key(&b.config.iter().map(frob).collect::<Vec<_>>()) == b.key()).collect();
    let radical = unipotent_radical_elements(real, f);
    let mut pairs: BTreeSet<(ConfigKey, FrameKey)> = BTreeSet::new();
    let mut first: Option<(Vec<Subspace>, Vec<Subspace>)> = None;
    let mut min_tori = usize::MAX;
    for b in &stable {
        let mut count = 0;
        for u in &radical {
            let m = b.conjugator.mul(u, f);
            let lines: Vec<Subspace> =
                (0..n).map(|j| Subspace::span(n, &[(0..n).map(|i| m.get(i, j)).collect::<Vec<_>>()], f)).collect();
            let key = frame_key(&lines);
            if frame_key(&lines.iter().map(frob).collect::<Vec<_>>()) == key {
                count += 1;
                pairs.insert((b.key(), key));
                if first.is_none() {
                    first = Some((b.config.clone(), lines));
                }
            }
        }
        min_tori = min_tori.min(count);
    }
    if stable.is_empty() {
        min_tori = 0;
    }

    let mut orbit = 0;
    if let Some((config, lines)) = first {
        let fixed = fixed_point_subgroup(&g0, sigma)?;
        let gens = fixed.generators().to_vec();
        let key = |c: &[Subspace], l: &[Subspace]| (config_key(c), frame_key(l));
        let mut seen: HashMap<(ConfigKey, FrameKey), ()> = HashMap::from([(key(&config, &lines), ())]);
        let mut queue = VecDeque::from([(config, lines)]);
        while let Some((c, l)) = queue.pop_front() {
            for s in &gens {
                let c2: Vec<Subspace> = c.iter().map(|x| x.image(s, f)).collect();
                let l2: Vec<Subspace> = l.iter().map(|x| x.image(s, f)).collect();
                if seen.insert(key(&c2, &l2), ()).is_none() {
                    queue.push_back((c2, l2));
                }
            }
        }
        orbit = seen.len();
        if seen.keys().any(|k| !pairs.contains(k)) {
            return Err(Error::ConstraintViolated);
        }
    }
    let counts = SigmaBorelTorusCounts {
        borels: borels.len(),
        stable_borels: stable.len(),
        min_stable_tori: min_tori,
        stable_pairs: pairs.len(),
        orbit,
    };
    let answer = counts.stable_borels > 0 && counts.min_stable_tori > 0 && counts.orbit == counts.stable_pairs;
    let mut v = Verdict::new(Question::SigmaStableBorelTorus, answer, Exactness::AtLevel(f.k()), 1);
    for (what, value) in [
        ("borels", counts.borels),
        ("stable borels", counts.stable_borels),
        ("fewest stable tori in a stable borel", counts.min_stable_tori),
        ("stable pairs", counts.stable_pairs),
        ("orbit of the first pair", counts.orbit),
    ] {
        v = v.with(Witness::Count { what: what.into(), value });
    }
    Ok((v, counts))
}

/// Orders of the group generated by the radicals of the standard Borel and
/// its opposite, and of `G^0`.
pub fn opposite_radical_closure_order(g: &MatrixGroup) -> Result<(usize, usize)> {
    let f = g.field();
    let real = g.require_realization()?;
    let datum = real.datum();
    let mut gens = Vec::new();
    for a in 0..datum.num_roots() {
        for s in f.additive_basis() {
            gens.push(real.root_element(a, s, f));
        }
    }
    let generated = group_closure(&gens, real.dim(), f, g.cap())?;
    Ok((generated.len(), g.identity_closure()?.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::{block_swap, sl2_wreath};
    use crate::exactalg::Fe;

    fn group(label: &str, p: u32, k: u32) -> MatrixGroup {
        MatrixGroup::realized(&Realization::parse(label).unwrap(), &Field::new(p, k).unwrap())
    }

    #[test]
    fn semisimplify_examples() {
        let g = group("SL3", 5, 1);
        let d = Mat::diag(&[Fe(2), Fe(3), Fe(1)]);
        let (x, v) = semisimplify_element(&d, &g).unwrap();
        assert_eq!(x, d);
        assert!(v.answer);

        let g2 = group("SL3", 2, 1);
        let u = g2.require_realization().unwrap().standard_regular_unipotent(g2.field());
        let (x, v) = semisimplify_element(&u, &g2).unwrap();
        assert!(x.is_identity() && v.answer);
    }

    #[test]
    fn semisimplify_in_wreath() {
        let f2 = Field::prime(2).unwrap();
        let w = sl2_wreath(&f2).unwrap();
        let real = w.require_realization().unwrap().clone();
        let g = block_swap(2).mul(&real.root_element(0, Fe::ONE, &f2), &f2);
        let (x, v) = semisimplify_element(&g, &w).unwrap();
        assert!(v.answer);
        assert!(!w.in_identity_component(&x).unwrap());
    }

    #[test]
    fn sigma_fixed_regular() {
        let g = group("SL2", 2, 2);
        let u = find_sigma_fixed_regular(&g, &Endomorphism::Frobenius { q: 2 }, None).unwrap();
        assert_eq!(u, Mat::from_rows(&[[1, 1], [0, 1]]));
        let sp = group("Sp4", 2, 2);
        let u = find_sigma_fixed_regular(&sp, &Endomorphism::Frobenius { q: 2 }, None).unwrap();
        assert!(u.entries_in(&sp.field().subfield(2).unwrap()));
        assert!(find_sigma_fixed_regular(&g, &Endomorphism::Identity, None).is_ok());
    }

    #[test]
    fn sigma_stable_pairs_sl2() {
        let g = group("SL2", 2, 2);
        let (v, c) = sigma_stable_borel_torus_check(&g, &Endomorphism::Frobenius { q: 2 }).unwrap();
        assert!(v.answer);
        assert_eq!(
            c,
            SigmaBorelTorusCounts { borels: 5, stable_borels: 3, min_stable_tori: 2, stable_pairs: 6, orbit: 6 }
        );
    }

    #[test]
    fn opposite_radicals() {
        for label in ["SL3", "Sp4"] {
            let (a, b) = opposite_radical_closure_order(&group(label, 2, 1)).unwrap();
            assert_eq!(a, b);
        }
    }
}
