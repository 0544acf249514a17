//! Subspaces of `F^n` in reduced row echelon form.

use serde::{Deserialize, Serialize};

use super::field::{Fe, Field};
use super::matrix::Mat;

/// A subspace of `F^n`, stored as its unique RREF basis, so that equality of
/// values is equality of subspaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subspace {
    n: usize,
    basis: Vec<Vec<Fe>>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace { n, basis: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Subspace::coordinate(n, 0..n)
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(n: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut idx: Vec<usize> = idx.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        let basis = idx
            .into_iter()
            .map(|i| {
                let mut v = vec![Fe::ZERO; n];
                v[i] = Fe::ONE;
                v
            })
            .collect();
        Subspace { n, basis }
    }

    pub fn span<V: AsRef<[Fe]>>(n: usize, vectors: &[V], f: &Field) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(n);
        }
        let m = Mat::from_fn(vectors.len(), n, |i, j| vectors[i].as_ref()[j]);
        let (r, piv) = m.rref(f);
        Subspace { n, basis: (0..piv.len()).map(|i| r.row(i).to_vec()).collect() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Fe>] {
        &self.basis
    }

    /// Flat encoding used as a canonical sort and dedup key.
    pub fn key(&self) -> Vec<u16> {
        let mut k = Vec::with_capacity(1 + self.n * self.basis.len());
        k.push(self.basis.len() as u16);
        for row in &self.basis {
            k.extend(row.iter().map(|x| x.0));
        }
        k
    }

    /// Membership by reduction against the RREF pivots.
    pub fn contains(&self, v: &[Fe], f: &Field) -> bool {
        let mut v = v.to_vec();
        for row in &self.basis {
            let pc = row.iter().position(|x| !x.is_zero()).unwrap();
            let c = v[pc];
            if !c.is_zero() {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }

    pub fn contains_space(&self, other: &Subspace, f: &Field) -> bool {
        other.dim() <= self.dim() && other.basis.iter().all(|v| self.contains(v, f))
    }

    /// `g W`.
    pub fn image(&self, g: &Mat, f: &Field) -> Subspace {
        let vs: Vec<Vec<Fe>> = self.basis.iter().map(|v| g.apply(v, f)).collect();
        Subspace::span(self.n, &vs, f)
    }

    pub fn is_stable(&self, g: &Mat, f: &Field) -> bool {
        self.basis.iter().all(|v| self.contains(&g.apply(v, f), f))
    }

    pub fn sum(&self, other: &Subspace, f: &Field) -> Subspace {
        let vs: Vec<&[Fe]> = self.basis.iter().chain(&other.basis).map(|v| v.as_slice()).collect();
        Subspace::span(self.n, &vs, f)
    }

    pub fn intersection(&self, other: &Subspace, f: &Field) -> Subspace {
        // Kernel of [A^T | -B^T] gives coefficient pairs with sum a_i x_i = sum b_j y_j.
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Subspace::zero(self.n);
        }
        let m = Mat::from_fn(self.n, a + b, |i, j| if j < a { self.basis[j][i] } else { f.neg(other.basis[j - a][i]) });
        let vs: Vec<Vec<Fe>> = m
            .nullspace(f)
            .into_iter()
            .map(|c| {
                (0..self.n).map(|i| (0..a).fold(Fe::ZERO, |acc, j| f.add(acc, f.mul(c[j], self.basis[j][i])))).collect()
            })
            .collect();
        Subspace::span(self.n, &vs, f)
    }

    /// Applies a coordinatewise map (such as a field automorphism) to the basis.
    pub fn map_entries(&self, map: impl Fn(Fe) -> Fe, f: &Field) -> Subspace {
        let vs: Vec<Vec<Fe>> = self.basis.iter().map(|v| v.iter().map(|&x| map(x)).collect()).collect();
        Subspace::span(self.n, &vs, f)
    }
}

/// Every nonzero vector of `F^n` up to scalars, normalized so that the first
/// nonzero coordinate is 1, in increasing encoding order.
pub fn projective_points(n: usize, f: &Field) -> Vec<Vec<Fe>> {
    let q = f.order() as usize;
    let mut out = Vec::new();
    for lead in 0..n {
        let tail = n - lead - 1;
        let count = q.pow(tail as u32);
        for code in 0..count {
            let mut v = vec![Fe::ZERO; n];
            v[lead] = Fe::ONE;
            let mut c = code;
            for j in (lead + 1..n).rev() {
                v[j] = Fe((c % q) as u16);
                c /= q;
            }
            out.push(v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_and_intersection() {
        let f = Field::prime(3).unwrap();
        let a = Subspace::coordinate(3, [0, 1]);
        let b = Subspace::coordinate(3, [1, 2]);
        assert_eq!(a.sum(&b, &f).dim(), 3);
        assert_eq!(a.intersection(&b, &f), Subspace::coordinate(3, [1]));
        let diag = Subspace::span(2, &[vec![Fe(1), Fe(1)]], &f);
        assert_eq!(diag.intersection(&Subspace::coordinate(2, [0]), &f).dim(), 0);
    }

    #[test]
    fn image_and_stability() {
        let f = Field::prime(2).unwrap();
        let swap = Mat::from_rows(&[[0, 1], [1, 0]]);
        let line = Subspace::span(2, &[vec![Fe(1), Fe(1)]], &f);
        assert!(line.is_stable(&swap, &f));
        assert_eq!(Subspace::coordinate(2, [0]).image(&swap, &f), Subspace::coordinate(2, [1]));
    }

    #[test]
    fn projective_point_count() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(projective_points(3, &f).len(), 21);
        assert_eq!(projective_points(2, &Field::prime(5).unwrap()).len(), 6);
    }
}
