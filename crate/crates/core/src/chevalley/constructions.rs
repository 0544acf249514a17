//! Specific subgroups built from the realizations.

use crate::error::{Error, Result};
use crate::exactalg::field::power_exponent;
use crate::exactalg::{Fe, Field, Mat};

use super::endo::Endomorphism;
use super::group::{block_diag, block_swap, MatrixGroup};
use super::realization::Realization;

/// `H_q = {(g, g^{[q]}) : g in SL_2(F_Q)}` inside `SL_2 x SL_2`, where `g^{[q]}`
/// raises every entry to the `q`-th power. `q = 1` gives the diagonal copy.
///
/// Requires `q^2 <= Q` so that distinct twists act differently on `F_Q`.
pub fn twisted_diagonal_subgroup(q: u32, f: &Field) -> Result<MatrixGroup> {
    if q != 1 {
        let e = power_exponent(f.p(), q).ok_or(Error::WrongCharacteristic { expected: f.p(), found: q })?;
        if 2 * e > f.k() {
            return Err(Error::FieldTooSmall(format!("twist by {q} needs a field of order at least {}", q * q)));
        }
    }
    let sigma = Endomorphism::Frobenius { q };
    let gens = Realization::sl(2)?
        .generators(f)
        .iter()
        .map(|s| Ok(block_diag(s, &sigma.apply(s, f)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(MatrixGroup::generated(f, gens)?.with_label(format!("H_{q}(F{})", f.order())))
}

/// Membership in `H_q`, by the defining predicate.
pub fn twisted_diagonal_contains(q: u32, g: &Mat, f: &Field) -> Result<bool> {
    if g.rows() != 4 {
        return Ok(false);
    }
    let (a, b) = (g.block(0, 2), g.block(2, 2));
    let off_block = (0..4).all(|i| (0..4).all(|j| (i < 2) == (j < 2) || g.get(i, j).is_zero()));
    Ok(off_block && a.det(f) == Fe::ONE && Endomorphism::Frobenius { q }.apply(&a, f)? == b)
}

/// `(SL_2 x SL_2) x| <swap>` over `F`.
pub fn sl2_wreath(f: &Field) -> Result<MatrixGroup> {
    let r = Realization::parse("SL2xSL2")?;
    Ok(MatrixGroup::realized_with_outer(&r, f, vec![block_swap(2)]).with_label(format!("SL2wrC2(F{})", f.order())))
}

/// Normalizer of the diagonal torus in `SL_2(F)`, generated by a generator of
/// the torus and the antidiagonal Weyl element. Its identity component is the torus.
pub fn sl2_torus_normalizer(f: &Field) -> Result<MatrixGroup> {
    let z = f.primitive();
    let t = Mat::diag(&[z, f.inv(z).expect("nonzero")]);
    let w = Mat::from_fn(2, 2, |i, j| match (i, j) {
        (0, 1) => Fe::ONE,
        (1, 0) => f.neg(Fe::ONE),
        _ => Fe::ZERO,
    });
    Ok(MatrixGroup::generated(f, vec![t.clone(), w])?
        .with_identity_generators(vec![t])
        .with_label(format!("N(T)(F{})", f.order())))
}
