//! Representations of matrix groups and the two small modules used as
//! counterexamples.

use crate::error::{Error, Result};
use crate::exactalg::{Fe, Field, Mat};

use super::group::{group_closure, MatrixGroup};
use super::realization::Realization;

/// A module for a group: a matrix for each group generator.
#[derive(Clone, Debug)]
pub struct GModule {
    group: MatrixGroup,
    dim: usize,
    rho: Vec<Mat>,
}

impl GModule {
    pub fn new(group: MatrixGroup, rho: Vec<Mat>) -> Result<Self> {
        if rho.len() != group.generators().len() {
            return Err(Error::DimensionMismatch { expected: group.generators().len(), found: rho.len() });
        }
        let dim = rho.first().map_or(0, Mat::rows);
        if let Some(bad) = rho.iter().find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: bad.rows() });
        }
        Ok(GModule { group, dim, rho })
    }

    /// The natural module `F^n` of a matrix group.
    pub fn natural(group: MatrixGroup) -> Self {
        let rho = group.generators().to_vec();
        let dim = group.dim();
        GModule { group, dim, rho }
    }

    pub fn group(&self) -> &MatrixGroup {
        &self.group
    }

    pub fn field(&self) -> &Field {
        self.group.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Mat] {
        &self.rho
    }

    /// The matrix group generated by the images.
    pub fn image_group(&self) -> Result<MatrixGroup> {
        MatrixGroup::generated(self.field(), self.rho.clone())
    }

    /// Exact homomorphism test: the graph `{(g, rho(g))}` generated by the
    /// pairs is a group of the same order as the source group.
    pub fn is_homomorphism(&self) -> Result<bool> {
        let f = self.field();
        let n = self.group.dim();
        let pairs: Vec<Mat> =
            self.group.generators().iter().zip(&self.rho).map(|(g, r)| super::group::block_diag(g, r)).collect();
        let graph = group_closure(&pairs, n + self.dim, f, self.group.cap())?;
        Ok(graph.len() == self.group.order()?)
    }

    /// Same module over `F_{q^d}`.
    pub fn at_level(&self, d: u32) -> Result<GModule> {
        if d == 1 {
            return Ok(self.clone());
        }
        let big = self.field().extension(d)?;
        let group = MatrixGroup::generated(&big, self.group.embed_into(self.group.generators(), &big)?)?;
        let rho = self.group.embed_into(&self.rho, &big)?;
        GModule::new(group, rho)
    }
}

/// Coordinates of a trace-zero 2x2 matrix in the basis `e = E_12`, `h = diag(1,-1)`, `f = E_21`.
fn sl2_coords(x: &Mat) -> [Fe; 3] {
    [x.get(0, 1), x.get(0, 0), x.get(1, 0)]
}

/// `SL_2(F)` acting on `sl_2` by conjugation, in the basis `{e, h, f}`.
/// Characteristic 2 only: there `h` is central and spans a submodule.
pub fn adjoint_sl2_module(f: &Field) -> Result<GModule> {
    if f.p() != 2 {
        return Err(Error::WrongCharacteristic { expected: 2, found: f.p() });
    }
    let group = MatrixGroup::realized(&Realization::sl(2)?, f);
    let rho = group.generators().iter().map(|g| adjoint_sl2_image(g, f)).collect();
    GModule::new(group, rho)
}

/// Image of a single element under the adjoint action.
pub fn adjoint_sl2_image(g: &Mat, f: &Field) -> Mat {
    let gi = g.inverse(f).expect("invertible");
    let basis = [Mat::unit(2, 0, 1), Mat::diag(&[Fe::ONE, f.neg(Fe::ONE)]), Mat::unit(2, 1, 0)];
    let cols: Vec<[Fe; 3]> = basis.iter().map(|b| sl2_coords(&b.conj(g, &gi, f))).collect();
    Mat::from_fn(3, 3, |i, j| cols[j][i])
}

/// The alternating group on 5 points permuting the coordinates of `F_5^5`,
/// generated by the 5-cycle and a 3-cycle.
pub fn a5_permutation_module(f: &Field) -> Result<GModule> {
    if f.p() != 5 {
        return Err(Error::WrongCharacteristic { expected: 5, found: f.p() });
    }
    let group = MatrixGroup::generated(f, a5_generators())?.with_label("A5 on 5 points");
    Ok(GModule::natural(group))
}

/// Permutation matrices of `(1 2 3 4 5)` and `(1 2 3)`.
pub fn a5_generators() -> Vec<Mat> {
    vec![Mat::permutation(&[1, 2, 3, 4, 0]), Mat::permutation(&[1, 2, 0, 3, 4])]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{jordan_partition, Subspace};

    #[test]
    fn adjoint_module_basics() {
        let f4 = Field::new(2, 2).unwrap();
        let m = adjoint_sl2_module(&f4).unwrap();
        assert!(m.is_homomorphism().unwrap());
        assert!(adjoint_sl2_image(&Mat::identity(2), &f4).is_identity());
        let f2 = Field::prime(2).unwrap();
        // x(1) e x(1)^-1 = e; x h x^-1 = h; x f x^-1 = f + h + e in characteristic 2
        let x = Mat::from_rows(&[[1, 1], [0, 1]]);
        assert_eq!(adjoint_sl2_image(&x, &f2), Mat::from_rows(&[[1, 0, 1], [0, 1, 1], [0, 0, 1]]));
        let h_line = Subspace::coordinate(3, [1]);
        for g in m.action() {
            assert!(h_line.is_stable(g, &f4));
        }
        assert!(adjoint_sl2_module(&Field::prime(3).unwrap()).is_err());
    }

    #[test]
    fn a5_module_basics() {
        let f5 = Field::prime(5).unwrap();
        let m = a5_permutation_module(&f5).unwrap();
        assert_eq!(m.group().order().unwrap(), 60);
        assert_eq!(jordan_partition(&m.action()[0], &f5).unwrap(), vec![5]);
        let ones = Subspace::span(5, &[vec![Fe(1); 5]], &f5);
        assert!(m.action().iter().all(|g| ones.is_stable(g, &f5)));
    }
}
