use crate::chevalley::MatrixGroup;
use crate::error::{Error, Result};
use crate::exactalg::{Mat, RowBasis};
use crate::parabolics::{
    borels_normalized_by_limited, conjugator_to_standard_borel, enumerate_parabolics, ParabolicDescriptor,
};

use super::{Exactness, Question, Verdict, Witness};

/// Proper subsets of `0..rank` as bitmasks, in increasing order.
pub(crate) fn proper_subsets(rank: usize) -> Vec<Vec<usize>> {
    (0..(1u32 << rank) - 1).map(|m| (0..rank).filter(|j| m >> j & 1 == 1).collect()).collect()
}

/// Exact G-irreducibility of `H` containing a regular unipotent `u`.
///
/// `H` is moved by the conjugator taking the Borel of `u` to the standard one;
/// then `H` is G-irreducible iff it normalizes none of the proper standard
/// parabolics. For elements of `G^0` normalizing and lying in a parabolic agree.
pub fn girr_overgroup_of_regular_unipotent(h: &MatrixGroup, u: &Mat, g: &MatrixGroup) -> Result<Verdict> {
    let f = g.field();
    let real = g.require_realization()?;
    if !h.contains(u)? {
        return Err(Error::NotContained);
    }
    for y in h.generators() {
        if !g.contains(y)? {
            return Err(Error::NotContained);
        }
    }
    if !u.is_unipotent(f) {
        return Err(Error::NotRegular);
    }
    let borels = borels_normalized_by_limited(u, g, 2)?;
    if borels.len() != 1 {
        return Err(Error::NotRegular);
    }
    let b = &borels[0];
    let x = conjugator_to_standard_borel(b, g)?;
    let moved: Vec<Mat> = h.generators().iter().map(|y| x.mul(y, f).mul(&b.conjugator, f)).collect();
    let subsets = proper_subsets(real.datum().rank());
    let mut v = None;
    for subset in &subsets {
        let p = ParabolicDescriptor::standard(real, subset, 1);
        if moved.iter().all(|y| p.normalized_by(y, f)) {
            v = Some(Verdict::new(Question::GIrreducible, false, Exactness::Exact, 1).with(Witness::Parabolic {
                subset: subset.clone(),
                conjugator: b.conjugator.clone(),
                level: 1,
            }));
            break;
        }
    }
    let mut v = v.unwrap_or_else(|| {
        Verdict::new(Question::GIrreducible, true, Exactness::Exact, 1)
            .with(Witness::UniqueBorel { config: b.config.clone(), conjugator: b.conjugator.clone() })
            .with(Witness::Bound {
                what: "proper standard parabolics over the Borel of u".into(),
                levels: vec![1],
                checked: subsets.len(),
            })
    });
    if !g.meets_every_component(h.generators())? {
        v = v
            .with(Witness::note("H misses a component of G: the answer concerns parabolics of the identity component"));
    }
    Ok(v)
}

/// G-irreducibility by testing every parabolic of the relevant types at
/// levels `1..=d_max`. For connected `G` the maximal types suffice.
pub fn girr_brute(h: &MatrixGroup, g: &MatrixGroup, d_max: u32) -> Result<Verdict> {
    let real = g.require_realization()?;
    let rank = real.datum().rank();
    let types: Vec<Vec<usize>> = if g.is_connected()? {
        (0..rank).map(|j| (0..rank).filter(|&i| i != j).collect()).collect()
    } else {
        proper_subsets(rank)
    };
    let mut levels = Vec::new();
    let mut checked = 0;
    let mut notes = Vec::new();
    'levels: for d in 1..=d_max.max(1) {
        let gd = match g.at_level(d) {
            Ok(x) => x,
            Err(e) if d > 1 => {
                notes.push(format!("level {d} skipped: {e}"));
                break;
            }
            Err(e) => return Err(e),
        };
        let fd = gd.field().clone();
        let hd = g.embed_into(h.generators(), &fd)?;
        for ty in &types {
            let ps = match enumerate_parabolics(&gd, ty, d) {
                Ok(ps) => ps,
                Err(e @ Error::CapExceeded { .. }) => {
                    if d == 1 {
                        return Err(e);
                    }
                    notes.push(format!("level {d} skipped: {e}"));
                    break 'levels;
                }
                Err(e) => return Err(e),
            };
            for p in &ps {
                checked += 1;
                if hd.iter().all(|y| p.in_parabolic(y, &fd)) {
                    return Ok(Verdict::new(Question::GIrreducible, false, Exactness::Exact, d)
                        .with(Witness::Parabolic { subset: ty.clone(), conjugator: p.conjugator.clone(), level: d }));
                }
            }
        }
        levels.push(d);
    }
    let top = *levels.last().expect("level 1 completed");
    let mut v = Verdict::new(Question::GIrreducible, true, Exactness::AtLevel(top), top).with(Witness::Bound {
        what: "parabolics of the tested types".into(),
        levels,
        checked,
    });
    for n in notes {
        v = v.with(Witness::note(n));
    }
    Ok(v)
}

/// Dimension of the matrix algebra spanned by a group, via its generators.
pub fn algebra_span_dimension(gens: &[Mat], n: usize, f: &crate::exactalg::Field) -> usize {
    let id = Mat::identity(n);
    let mut basis = RowBasis::new(n * n);
    basis.insert(id.entries(), f);
    let mut queue = vec![id];
    while let Some(m) = queue.pop() {
        for s in gens {
            let y = m.mul(s, f);
            if basis.insert(y.entries(), f) {
                queue.push(y);
            }
        }
    }
    basis.dim()
}

/// A group acts absolutely irreducibly iff it spans the full matrix algebra.
pub fn burnside_absolutely_irreducible(h: &MatrixGroup) -> Verdict {
    let n = h.dim();
    let dim = algebra_span_dimension(h.generators(), n, h.field());
    Verdict::new(Question::AbsolutelyIrreducible, dim == n * n, Exactness::Exact, 1)
        .with(Witness::SpanDimension { dim, full: n * n })
}
