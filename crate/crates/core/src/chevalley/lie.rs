//! Elements of the Lie algebra of a realization.

use crate::error::{Error, Result};
use crate::exactalg::{Field, Mat};

use super::realization::Realization;

/// A matrix satisfying the Lie algebra constraint of its realization
/// (trace zero for `sl_n`, `X^T J + J X = 0` for `sp_2m`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement {
    mat: Mat,
}

impl LieElement {
    pub fn new(real: &Realization, mat: Mat, f: &Field) -> Result<Self> {
        if real.lie_contains(&mat, f) {
            Ok(LieElement { mat })
        } else {
            Err(Error::ConstraintViolated)
        }
    }

    pub fn zero(real: &Realization) -> Self {
        LieElement { mat: Mat::zero(real.dim(), real.dim()) }
    }

    /// `sum_{alpha simple} X_alpha`.
    pub fn regular_nilpotent(real: &Realization, f: &Field) -> Self {
        let n = real.dim();
        let mat = (0..real.datum().rank()).fold(Mat::zero(n, n), |acc, i| acc.add(&real.root_vector(i, f), f));
        LieElement { mat }
    }

    pub fn mat(&self) -> &Mat {
        &self.mat
    }

    pub fn is_nilpotent(&self, f: &Field) -> bool {
        self.mat.pow(self.mat.rows() as u64, f).is_zero()
    }

    /// `Ad(g) X = g X g^{-1}`.
    pub fn adjoint(&self, g: &Mat, g_inv: &Mat, f: &Field) -> LieElement {
        LieElement { mat: self.mat.conj(g, g_inv, f) }
    }
}
