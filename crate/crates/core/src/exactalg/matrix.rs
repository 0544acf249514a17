//! Dense matrices over a [`Field`], exact Gaussian elimination and
//! rank-sequence Jordan types.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::field::{Fe, Field};
use crate::error::{Error, Result};

/// A dense `rows x cols` matrix of field elements. Group elements are square.
///
/// The field is not stored; every arithmetic operation takes it explicitly.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

impl Serialize for Mat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Mat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows: Vec<Vec<u16>> = Vec::deserialize(d)?;
        Ok(Mat::from_rows(&rows))
    }
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![Fe::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = Fe::ONE;
        }
        m
    }

    /// Builds a matrix from rows of element encodings.
    pub fn from_rows<R: AsRef<[u16]>>(rows: &[R]) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.as_ref().len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.as_ref().len(), c, "ragged rows");
            data.extend(row.as_ref().iter().map(|&x| Fe(x)));
        }
        Mat { rows: r, cols: c, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Fe) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn diag(entries: &[Fe]) -> Mat {
        let n = entries.len();
        Mat::from_fn(n, n, |i, j| if i == j { entries[i] } else { Fe::ZERO })
    }

    /// Permutation matrix sending basis vector `e_j` to `e_{perm[j]}`.
    pub fn permutation(perm: &[usize]) -> Mat {
        let n = perm.len();
        let mut m = Mat::zero(n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.set(i, j, Fe::ONE);
        }
        m
    }

    /// Single-entry matrix `E_{ij}` of size `n`.
    pub fn unit(n: usize, i: usize, j: usize) -> Mat {
        let mut m = Mat::zero(n, n);
        m.set(i, j, Fe::ONE);
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dim(&self) -> usize {
        debug_assert_eq!(self.rows, self.cols);
        self.rows
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Fe] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<u16>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|x| x.0).collect()).collect()
    }

    pub fn map(&self, f: impl Fn(Fe) -> Fe) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| f(x)).collect() }
    }

    /// Re-encodes entries through a field embedding table.
    pub fn embed(&self, table: &[Fe]) -> Mat {
        self.map(|x| table[x.0 as usize])
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == if i == j { Fe::ONE } else { Fe::ZERO }))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, rhs: &Mat, f: &Field) -> Mat {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = Mat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(l, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j);
                        out.set(i, j, f.add(cur, f.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Mat, f: &Field) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Mat, f: &Field) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.sub(a, b)).collect(),
        }
    }

    pub fn scale(&self, s: Fe, f: &Field) -> Mat {
        self.map(|x| f.mul(s, x))
    }

    pub fn pow(&self, mut e: u64, f: &Field) -> Mat {
        let mut base = self.clone();
        let mut acc = Mat::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            base = base.mul(&base, f);
            e >>= 1;
        }
        acc
    }

    /// `g x g^{-1}`.
    pub fn conj(&self, g: &Mat, g_inv: &Mat, f: &Field) -> Mat {
        g.mul(self, f).mul(g_inv, f)
    }

    /// Column action on a vector.
    pub fn apply(&self, v: &[Fe], f: &Field) -> Vec<Fe> {
        (0..self.rows)
            .map(|i| (0..self.cols).fold(Fe::ZERO, |acc, j| f.add(acc, f.mul(self.get(i, j), v[j]))))
            .collect()
    }

    pub fn trace(&self, f: &Field) -> Fe {
        (0..self.rows).fold(Fe::ZERO, |acc, i| f.add(acc, self.get(i, i)))
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self, f: &Field) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c)).unwrap();
            for j in 0..m.cols {
                let v = m.get(r, j);
                m.set(r, j, f.mul(inv, v));
            }
            for i in 0..m.rows {
                if i != r {
                    let factor = m.get(i, c);
                    if !factor.is_zero() {
                        for j in 0..m.cols {
                            let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                            m.set(i, j, v);
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Row rank by exact elimination.
    pub fn rank(&self, f: &Field) -> usize {
        self.rref(f).1.len()
    }

    pub fn det(&self, f: &Field) -> Fe {
        assert!(self.is_square());
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Fe::ONE;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !m.get(i, c).is_zero()) else { return Fe::ZERO };
            if pr != c {
                m.swap_rows(c, pr);
                det = f.neg(det);
            }
            let piv = m.get(c, c);
            det = f.mul(det, piv);
            let inv = f.inv(piv).unwrap();
            for i in c + 1..n {
                let factor = f.mul(m.get(i, c), inv);
                if !factor.is_zero() {
                    for j in c..n {
                        let v = f.sub(m.get(i, j), f.mul(factor, m.get(c, j)));
                        m.set(i, j, v);
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self, f: &Field) -> Option<Mat> {
        let n = self.rows;
        if !self.is_square() {
            return None;
        }
        let aug = Mat::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j)
            } else if j - n == i {
                Fe::ONE
            } else {
                Fe::ZERO
            }
        });
        let (r, piv) = aug.rref(f);
        if piv.len() < n || piv[n - 1] >= n {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| r.get(i, n + j)))
    }

    /// Basis (as rows) of the right kernel `{x : self x = 0}`.
    pub fn nullspace(&self, f: &Field) -> Vec<Vec<Fe>> {
        let (r, piv) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Fe::ZERO; self.cols];
                v[fc] = Fe::ONE;
                for (i, &pc) in piv.iter().enumerate() {
                    v[pc] = f.neg(r.get(i, fc));
                }
                v
            })
            .collect()
    }

    /// `(self - 1)^n == 0`.
    pub fn is_unipotent(&self, f: &Field) -> bool {
        let n = self.dim();
        self.sub(&Mat::identity(n), f).pow(n as u64, f).is_zero()
    }

    /// Entrywise test of membership in a subfield given by its element set.
    pub fn entries_in(&self, sub: &[Fe]) -> bool {
        self.data.iter().all(|x| sub.contains(x))
    }

    /// `(entries lie in one block-diagonal pattern)`: zero outside `[off, off+len)` squares.
    pub fn block(&self, off: usize, len: usize) -> Mat {
        Mat::from_fn(len, len, |i, j| self.get(off + i, off + j))
    }
}

/// Rank of any (rectangular) matrix.
pub fn mat_rank(m: &Mat, f: &Field) -> usize {
    m.rank(f)
}

/// Jordan block sizes (descending) of a unipotent matrix, from the ranks
/// `r_k = rank((u-1)^k)`: the number of blocks of size at least `k` is
/// `r_{k-1} - r_k`.
pub fn jordan_partition(u: &Mat, f: &Field) -> Result<Vec<usize>> {
    let n = u.dim();
    let nil = u.sub(&Mat::identity(n), f);
    let mut ranks = vec![n];
    let mut power = Mat::identity(n);
    for _ in 0..n {
        power = power.mul(&nil, f);
        ranks.push(power.rank(f));
    }
    if ranks[n] != 0 {
        return Err(Error::NotUnipotent);
    }
    let at_least: Vec<usize> = (1..=n).map(|k| ranks[k - 1] - ranks[k]).collect();
    let mut parts = Vec::new();
    for k in (1..=n).rev() {
        let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        parts.extend(std::iter::repeat_n(k, exactly));
    }
    Ok(parts)
}

/// Dimension of the linear span of `mats` inside the `n^2`-dimensional matrix space.
pub fn span_dimension<'a>(mats: impl IntoIterator<Item = &'a Mat>, n: usize, f: &Field) -> usize {
    let mut basis = RowBasis::new(n * n);
    for m in mats {
        basis.insert(m.entries(), f);
        if basis.dim() == n * n {
            break;
        }
    }
    basis.dim()
}

/// Incrementally maintained echelon basis of a subspace of `F^len`.
#[derive(Clone, Debug)]
pub struct RowBasis {
    len: usize,
    rows: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

impl RowBasis {
    pub fn new(len: usize) -> Self {
        RowBasis { len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Fe>] {
        &self.rows
    }

    /// Reduces `v` against the basis; the remainder is zero iff `v` is in the span.
    pub fn reduce(&self, v: &[Fe], f: &Field) -> Vec<Fe> {
        let mut v = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if !c.is_zero() {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Fe], f: &Field) -> bool {
        self.reduce(v, f).iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Fe], f: &Field) -> bool {
        debug_assert_eq!(v.len(), self.len);
        let mut r = self.reduce(v, f);
        let Some(pc) = r.iter().position(|x| !x.is_zero()) else { return false };
        let inv = f.inv(r[pc]).unwrap();
        for x in r.iter_mut() {
            *x = f.mul(inv, *x);
        }
        for (row, _) in self.rows.iter_mut().zip(&self.pivots) {
            let c = row[pc];
            if !c.is_zero() {
                for (x, &y) in row.iter_mut().zip(&r) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        self.rows.push(r);
        self.pivots.push(pc);
        true
    }
}
