//! Endomorphisms of matrix groups: Frobenius maps, graph twists, conjugations
//! and their composites.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::field::power_exponent;
use crate::exactalg::{Field, Mat};

use super::group::{block_swap, MatrixGroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Endomorphism {
    Identity,
    /// Entrywise `a -> a^q`.
    Frobenius {
        q: u32,
    },
    /// `g -> (g^{-1})^T`.
    InverseTranspose,
    /// Exchange of the two diagonal blocks of size `block`.
    BlockSwap {
        block: usize,
    },
    /// `x -> g x g^{-1}`.
    Conjugation {
        g: Mat,
        g_inv: Mat,
    },
    /// `sigma_1 o sigma_2 o ..`, applied right to left.
    Composite(Vec<Endomorphism>),
}

impl Endomorphism {
    pub fn conjugation(g: &Mat, f: &Field) -> Result<Self> {
        let g_inv = g.inverse(f).ok_or(Error::NotInvertible)?;
        Ok(Endomorphism::Conjugation { g: g.clone(), g_inv })
    }

    pub fn apply(&self, g: &Mat, f: &Field) -> Result<Mat> {
        match self {
            Endomorphism::Identity => Ok(g.clone()),
            Endomorphism::Frobenius { q } => {
                let e = power_exponent(f.p(), *q).ok_or(Error::WrongCharacteristic { expected: f.p(), found: *q })?;
                Ok(g.map(|a| f.frobenius(a, e)))
            }
            Endomorphism::InverseTranspose => Ok(g.inverse(f).ok_or(Error::NotInvertible)?.transpose()),
            Endomorphism::BlockSwap { block } => {
                if g.rows() != 2 * block {
                    return Err(Error::DimensionMismatch { expected: 2 * block, found: g.rows() });
                }
                let s = block_swap(*block);
                Ok(s.mul(g, f).mul(&s, f))
            }
            Endomorphism::Conjugation { g: c, g_inv } => {
                if c.rows() != g.rows() {
                    return Err(Error::DimensionMismatch { expected: c.rows(), found: g.rows() });
                }
                Ok(g.conj(c, g_inv, f))
            }
            Endomorphism::Composite(parts) => parts.iter().rev().try_fold(g.clone(), |acc, s| s.apply(&acc, f)),
        }
    }

    /// Whether this is a pure field automorphism.
    pub fn frobenius_q(&self) -> Option<u32> {
        match self {
            Endomorphism::Frobenius { q } => Some(*q),
            Endomorphism::Identity => Some(1),
            _ => None,
        }
    }

    /// Checks `sigma(ab) = sigma(a) sigma(b)` on all pairs of generators.
    pub fn is_homomorphism_on(&self, gens: &[Mat], f: &Field) -> Result<bool> {
        for a in gens {
            for b in gens {
                if self.apply(&a.mul(b, f), f)? != self.apply(a, f)?.mul(&self.apply(b, f)?, f) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

pub fn apply_endo(sigma: &Endomorphism, g: &Mat, f: &Field) -> Result<Mat> {
    sigma.apply(g, f)
}

/// `sigma_1 o sigma_2`, flattening nested composites.
pub fn compose_endo(s1: &Endomorphism, s2: &Endomorphism) -> Endomorphism {
    let mut parts = Vec::new();
    for s in [s1, s2] {
        match s {
            Endomorphism::Composite(p) => parts.extend(p.iter().cloned()),
            Endomorphism::Identity => {}
            other => parts.push(other.clone()),
        }
    }
    Endomorphism::Composite(parts)
}

/// Largest number of candidate matrices the rational-point fallback enumerates.
const RATIONAL_ENUMERATION_LIMIT: u64 = 1 << 20;

/// `G_sigma`. Uses the closure when it fits under the cap; otherwise, for a
/// Frobenius map on a connected realized group, enumerates the matrices with
/// entries in the fixed subfield that satisfy the realization predicate.
pub fn fixed_point_subgroup(g: &MatrixGroup, sigma: &Endomorphism) -> Result<MatrixGroup> {
    let f = g.field();
    match g.closure() {
        Ok(cl) => {
            for s in g.generators() {
                if !cl.contains(&sigma.apply(s, f)?) {
                    return Err(Error::NotStable);
                }
            }
            let mut fixed = Vec::new();
            for x in cl.elements() {
                if sigma.apply(x, f)? == *x {
                    fixed.push(x.clone());
                }
            }
            MatrixGroup::from_elements(f, g.dim(), fixed)
        }
        Err(Error::CapExceeded { .. }) => {
            let (Some(q), Some(real)) = (sigma.frobenius_q(), g.realization()) else {
                return Err(Error::ClosureUnavailable);
            };
            if !g.is_connected()? {
                return Err(Error::ClosureUnavailable);
            }
            let sub = f.subfield(q)?;
            let n = g.dim();
            let cells = (n * n) as u32;
            if (sub.len() as u64).checked_pow(cells).is_none_or(|c| c > RATIONAL_ENUMERATION_LIMIT) {
                return Err(Error::ClosureUnavailable);
            }
            let total = (sub.len() as u64).pow(cells);
            let mut fixed = Vec::new();
            for code in 0..total {
                let mut c = code;
                let mut entries = vec![0u16; n * n];
                for e in entries.iter_mut().rev() {
                    *e = sub[(c % sub.len() as u64) as usize].0;
                    c /= sub.len() as u64;
                }
                let rows: Vec<&[u16]> = entries.chunks(n).collect();
                let m = Mat::from_rows(&rows);
                if real.contains(&m, f) {
                    fixed.push(m);
                }
            }
            MatrixGroup::from_elements(f, n, fixed)
        }
        Err(e) => Err(e),
    }
}
