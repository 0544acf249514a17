//! Laurent polynomials and matrices in one parameter `t`, and their limits
//! as `t -> 0`.

use serde::{Deserialize, Serialize};

use super::field::{Fe, Field};
use super::matrix::Mat;

/// Largest exponent magnitude that may appear. Cocharacter weights at desk
/// scale stay far below this, so hitting it indicates a logic error.
pub const MAX_EXPONENT: i32 = 64;

/// A Laurent polynomial: `(exponent, coefficient)` terms, sorted by exponent,
/// with no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: Vec<(i32, Fe)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn monomial(e: i32, c: Fe) -> Self {
        assert!(e.abs() <= MAX_EXPONENT, "Laurent exponent {e} out of range");
        if c.is_zero() {
            LaurentPoly::zero()
        } else {
            LaurentPoly { terms: vec![(e, c)] }
        }
    }

    pub fn terms(&self) -> &[(i32, Fe)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Least exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    /// Coefficient of `t^0`.
    pub fn constant(&self) -> Fe {
        self.terms.iter().find(|t| t.0 == 0).map_or(Fe::ZERO, |t| t.1)
    }

    fn push_term(terms: &mut Vec<(i32, Fe)>, e: i32, c: Fe, f: &Field) {
        assert!(e.abs() <= MAX_EXPONENT, "Laurent exponent {e} out of range");
        match terms.binary_search_by_key(&e, |t| t.0) {
            Ok(i) => {
                let s = f.add(terms[i].1, c);
                if s.is_zero() {
                    terms.remove(i);
                } else {
                    terms[i].1 = s;
                }
            }
            Err(i) => {
                if !c.is_zero() {
                    terms.insert(i, (e, c));
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly, f: &Field) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for &(e, c) in &other.terms {
            Self::push_term(&mut terms, e, c, f);
        }
        LaurentPoly { terms }
    }

    pub fn mul(&self, other: &LaurentPoly, f: &Field) -> LaurentPoly {
        let mut terms = Vec::new();
        for &(e1, c1) in &self.terms {
            for &(e2, c2) in &other.terms {
                Self::push_term(&mut terms, e1 + e2, f.mul(c1, c2), f);
            }
        }
        LaurentPoly { terms }
    }
}

/// Square matrix of Laurent polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    n: usize,
    entries: Vec<LaurentPoly>,
}

/// Result of taking `t -> 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Limit {
    Exists {
        limit: Mat,
    },
    /// Witness entry whose valuation is negative.
    NoLimit {
        row: usize,
        col: usize,
        valuation: i32,
    },
}

impl Limit {
    pub fn value(&self) -> Option<&Mat> {
        match self {
            Limit::Exists { limit } => Some(limit),
            Limit::NoLimit { .. } => None,
        }
    }
}

impl LaurentMatrix {
    pub fn constant(m: &Mat) -> Self {
        let n = m.dim();
        let entries = m.entries().iter().map(|&c| LaurentPoly::monomial(0, c)).collect();
        LaurentMatrix { n, entries }
    }

    /// `diag(t^{e_0}, .., t^{e_{n-1}})`.
    pub fn diagonal_monomials(exps: &[i64]) -> Self {
        let n = exps.len();
        let mut entries = vec![LaurentPoly::zero(); n * n];
        for (i, &e) in exps.iter().enumerate() {
            entries[i * n + i] = LaurentPoly::monomial(e as i32, Fe::ONE);
        }
        LaurentMatrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.n + j]
    }

    pub fn mul(&self, rhs: &LaurentMatrix, f: &Field) -> LaurentMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut entries = vec![LaurentPoly::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(l, j);
                    if !b.is_zero() {
                        let e = &mut entries[i * n + j];
                        *e = e.add(&a.mul(b, f), f);
                    }
                }
            }
        }
        LaurentMatrix { n, entries }
    }

    /// `self * m` with `m` constant.
    pub fn mul_const(&self, m: &Mat, f: &Field) -> LaurentMatrix {
        self.mul(&LaurentMatrix::constant(m), f)
    }

    /// The limit at `t = 0`; the witness is the first offending entry in row-major order.
    pub fn limit(&self) -> Limit {
        for i in 0..self.n {
            for j in 0..self.n {
                if let Some(v) = self.get(i, j).valuation() {
                    if v < 0 {
                        return Limit::NoLimit { row: i, col: j, valuation: v };
                    }
                }
            }
        }
        Limit::Exists { limit: Mat::from_fn(self.n, self.n, |i, j| self.get(i, j).constant()) }
    }
}

/// Free-function form of [`LaurentMatrix::limit`].
pub fn laurent_limit(m: &LaurentMatrix) -> Limit {
    m.limit()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn conj(exps: &[i64], g: &Mat, f: &Field) -> LaurentMatrix {
        let neg: Vec<i64> = exps.iter().map(|e| -e).collect();
        LaurentMatrix::diagonal_monomials(exps).mul_const(g, f).mul(&LaurentMatrix::diagonal_monomials(&neg), f)
    }

    #[test]
    fn sl2_limits() {
        let f = Field::prime(3).unwrap();
        let upper = Mat::from_rows(&[[1, 1], [0, 1]]);
        let c = conj(&[1, -1], &upper, &f);
        assert_eq!(c.get(0, 1).terms(), &[(2, Fe(1))]);
        assert_eq!(c.limit(), Limit::Exists { limit: Mat::identity(2) });

        let lower = Mat::from_rows(&[[1, 0], [1, 1]]);
        assert_eq!(conj(&[1, -1], &lower, &f).limit(), Limit::NoLimit { row: 1, col: 0, valuation: -2 });

        let d = Mat::from_rows(&[[2, 0], [0, 2]]);
        assert_eq!(conj(&[1, -1], &d, &f).limit(), Limit::Exists { limit: d });
    }

    #[test]
    fn cancellation_removes_terms() {
        let f = Field::prime(2).unwrap();
        let a = LaurentPoly::monomial(-1, Fe(1));
        assert!(a.add(&a, &f).is_zero());
    }
}
