use crate::chevalley::{BlockKind, MatrixGroup, Realization};
use crate::error::{Error, Result};
use crate::exactalg::{jordan_partition, Mat};
use crate::parabolics::borels_normalized_by_limited;

use super::{Exactness, Question, Verdict, Witness};

/// How many conjugators a negative answer lists.
const LISTED_BORELS: usize = 4;

/// `u` is regular iff it normalizes exactly one Borel of `G^0`.
pub fn is_regular_unipotent(u: &Mat, g: &MatrixGroup) -> Result<Verdict> {
    let f = g.field();
    if !u.is_unipotent(f) {
        return Err(Error::NotUnipotent);
    }
    if !g.contains(u)? {
        return Err(Error::NotContained);
    }
    let real = g.require_realization()?;
    let parts = jordan_partition(u, f)?;
    if real.datum().num_roots() == 0 {
        return Ok(Verdict::new(Question::RegularUnipotent, false, Exactness::Exact, 1)
            .with(Witness::note("identity component is a torus: no regular unipotent elements"))
            .with(Witness::JordanPartition { parts }));
    }
    let borels = borels_normalized_by_limited(u, g, g.cap())?;
    let answer = borels.len() == 1;
    let mut exactness = Exactness::AtLevel(1);
    let mut v = Verdict::new(Question::RegularUnipotent, answer, exactness, 1);
    if answer {
        v = v.with(Witness::UniqueBorel { config: borels[0].config.clone(), conjugator: borels[0].conjugator.clone() });
    } else {
        v = v.with(Witness::NormalizedBorels {
            count: borels.len(),
            truncated: borels.len() >= g.cap(),
            conjugators: borels.iter().take(LISTED_BORELS).map(|b| b.conjugator.clone()).collect(),
        });
    }
    if let Some(predicted) = jordan_prediction(u, real, g)? {
        let agrees = predicted == answer;
        v = v.with(Witness::CrossCheck { what: "single Jordan block in every block".into(), agrees });
        if agrees {
            exactness = Exactness::Exact;
        } else {
            v = v.with(Witness::note("Borel count disagrees with the Jordan type"));
        }
    }
    v.exactness = exactness;
    Ok(v.with(Witness::JordanPartition { parts }))
}

/// For `u` in a product of `SL`/`GL` blocks, regularity means one Jordan block per block.
fn jordan_prediction(u: &Mat, real: &Realization, g: &MatrixGroup) -> Result<Option<bool>> {
    if real.blocks().iter().any(|b| b.kind == BlockKind::Sp) || !g.in_identity_component(u)? {
        return Ok(None);
    }
    let f = g.field();
    for b in real.blocks() {
        if jordan_partition(&u.block(b.offset, b.dim), f)?.len() != 1 {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}

/// Regularity of `u` inside a realized subgroup `H`.
pub fn regular_in_subgroup_check(u: &Mat, h: &MatrixGroup) -> Result<Verdict> {
    h.require_realization()?;
    is_regular_unipotent(u, h)
}

/// Regularity of the image of `u` under the projection to block `factor` of a product.
pub fn regular_in_quotient_check(u: &Mat, g: &MatrixGroup, factor: usize) -> Result<Verdict> {
    let real = g.require_realization()?;
    let b = real
        .blocks()
        .get(factor)
        .ok_or_else(|| Error::UnsupportedRealization(format!("{} has no factor {factor}", real.label())))?;
    if !g.in_identity_component(u)? {
        return Err(Error::NotContained);
    }
    let image = match b.kind {
        BlockKind::SL => Realization::sl(b.dim)?,
        BlockKind::GL => Realization::gl(b.dim)?,
        BlockKind::Sp => Realization::sp(b.dim)?,
    };
    let target = MatrixGroup::realized(&image, g.field()).with_cap(g.cap());
    is_regular_unipotent(&u.block(b.offset, b.dim), &target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::sl2_torus_normalizer;
    use crate::exactalg::{Fe, Field};

    fn group(label: &str, p: u32, k: u32) -> MatrixGroup {
        MatrixGroup::realized(&Realization::parse(label).unwrap(), &Field::new(p, k).unwrap())
    }

    #[test]
    fn examples() {
        let g = group("SL4", 2, 1);
        let u = g.require_realization().unwrap().standard_regular_unipotent(g.field());
        let v = is_regular_unipotent(&u, &g).unwrap();
        assert!(v.answer && v.is_exact());

        let g3 = group("SL3", 2, 1);
        let x = Mat::from_rows(&[[1, 0, 1], [0, 1, 0], [0, 0, 1]]);
        let v = is_regular_unipotent(&x, &g3).unwrap();
        assert!(!v.answer);
        assert!(matches!(v.witness("normalized_borels"), Some(Witness::NormalizedBorels { count: 5, .. })));

        let f4 = Field::new(2, 2).unwrap();
        let n = sl2_torus_normalizer(&f4).unwrap();
        let swap = Mat::from_rows(&[[0, 1], [1, 0]]);
        let sl2 = MatrixGroup::realized(&Realization::sl(2).unwrap(), &f4);
        assert!(n.contains(&swap).unwrap());
        assert!(is_regular_unipotent(&swap, &sl2).unwrap().answer);

        assert!(matches!(
            is_regular_unipotent(&Mat::diag(&[Fe(1), Fe(1)]).scale(Fe(2), &f4), &sl2),
            Err(Error::NotUnipotent)
        ));
        assert!(!is_regular_unipotent(&Mat::identity(2), &sl2).unwrap().answer);
    }

    #[test]
    fn torus_has_no_regular_elements() {
        let g = group("GL1", 3, 1);
        let v = is_regular_unipotent(&Mat::identity(1), &g).unwrap();
        assert!(!v.answer);
        assert!(v.witness("note").is_some());
    }

    #[test]
    fn beyond_enumeration_budget() {
        let f5 = Field::prime(5).unwrap();
        let gl5 = MatrixGroup::realized(&Realization::gl(5).unwrap(), &f5);
        let cycle = Mat::permutation(&[1, 2, 3, 4, 0]);
        let v = is_regular_unipotent(&cycle, &gl5).unwrap();
        assert!(v.answer && v.is_exact());
    }

    #[test]
    fn inheritance() {
        let f2 = Field::prime(2).unwrap();
        let sp4 = MatrixGroup::realized(&Realization::sp(4).unwrap(), &f2);
        let u = sp4.require_realization().unwrap().standard_regular_unipotent(&f2);
        assert!(regular_in_subgroup_check(&u, &sp4).unwrap().answer);

        let g = group("SL2xSL2", 2, 1);
        let u = g.require_realization().unwrap().standard_regular_unipotent(&f2);
        for factor in 0..2 {
            assert!(regular_in_quotient_check(&u, &g, factor).unwrap().answer);
        }
        let abstract_group = MatrixGroup::generated(&f2, vec![u.clone()]).unwrap();
        assert!(regular_in_subgroup_check(&u, &abstract_group).is_err());
    }
}
