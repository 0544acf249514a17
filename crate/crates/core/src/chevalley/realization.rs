//! Matrix realizations of split classical groups: `SL_n`, `GL_n`, `Sp_2m` and
//! block-diagonal products of these.
//!
//! The symplectic form on `F^{2m}` is the antidiagonal matrix `J` with
//! `J[i][2m-1-i] = 1` for `i < m` and `-1` for `i >= m`. The diagonal torus of
//! `Sp_2m` is `diag(t^{a_1}, .., t^{a_m}, t^{-a_m}, .., t^{-a_1})`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::{Fe, Field, Mat, Subspace};
use crate::rootdata::{CartanType, RootDatum};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum BlockKind {
    SL,
    GL,
    Sp,
}

/// One diagonal block of a realization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub kind: BlockKind,
    pub dim: usize,
    /// First matrix row/column of the block.
    pub offset: usize,
    /// Index of the datum component, if the block has roots.
    pub component: Option<usize>,
    /// First torus coordinate of the block.
    pub torus_offset: usize,
}

impl Block {
    fn torus_dim(&self) -> usize {
        match self.kind {
            BlockKind::SL => self.dim,
            BlockKind::GL if self.dim == 1 => 0,
            BlockKind::GL => self.dim,
            BlockKind::Sp => self.dim / 2,
        }
    }

    /// Torus character of the basis vector `e_{offset+a}` as `(coordinate, sign)`.
    fn weight_of(&self, a: usize) -> Option<(usize, i64)> {
        match self.kind {
            BlockKind::GL if self.dim == 1 => None,
            BlockKind::SL | BlockKind::GL => Some((self.torus_offset + a, 1)),
            BlockKind::Sp => {
                let m = self.dim / 2;
                if a < m {
                    Some((self.torus_offset + a, 1))
                } else {
                    Some((self.torus_offset + self.dim - 1 - a, -1))
                }
            }
        }
    }

    fn label(&self) -> String {
        let k = match self.kind {
            BlockKind::SL => "SL",
            BlockKind::GL => "GL",
            BlockKind::Sp => "Sp",
        };
        format!("{k}{}", self.dim)
    }
}

/// Sparse integer matrix `sum c E_{ab}`.
type IntEntries = Vec<(usize, usize, i64)>;

/// A realization of a connected reductive group by matrices.
#[derive(Clone)]
pub struct Realization {
    blocks: Vec<Block>,
    n: usize,
    datum: Arc<RootDatum>,
    root_vectors: Vec<IntEntries>,
}

impl PartialEq for Realization {
    fn eq(&self, other: &Self) -> bool {
        self.blocks == other.blocks
    }
}

impl Eq for Realization {}

impl fmt::Debug for Realization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl fmt::Display for Realization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl Serialize for Realization {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

impl<'de> Deserialize<'de> for Realization {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Realization::parse(&s).map_err(serde::de::Error::custom)
    }
}

impl Realization {
    pub fn sl(n: usize) -> Result<Self> {
        Realization::from_blocks(&[(BlockKind::SL, n)])
    }

    pub fn gl(n: usize) -> Result<Self> {
        Realization::from_blocks(&[(BlockKind::GL, n)])
    }

    /// `Sp_n` for even `n`.
    pub fn sp(n: usize) -> Result<Self> {
        Realization::from_blocks(&[(BlockKind::Sp, n)])
    }

    /// Block-diagonal product; nested products are flattened.
    pub fn product(factors: &[Realization]) -> Result<Self> {
        let parts: Vec<(BlockKind, usize)> =
            factors.iter().flat_map(|r| r.blocks.iter().map(|b| (b.kind, b.dim))).collect();
        Realization::from_blocks(&parts)
    }

    /// Parses labels such as `SL3`, `Sp4`, `GL5` or `SL2xSL2`.
    pub fn parse(label: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for part in label.split('x') {
            let (kind, rest) = if let Some(r) = part.strip_prefix("SL") {
                (BlockKind::SL, r)
            } else if let Some(r) = part.strip_prefix("GL") {
                (BlockKind::GL, r)
            } else if let Some(r) = part.strip_prefix("Sp") {
                (BlockKind::Sp, r)
            } else {
                return Err(Error::UnsupportedRealization(part.to_string()));
            };
            let n: usize = rest.parse().map_err(|_| Error::UnsupportedRealization(part.to_string()))?;
            parts.push((kind, n));
        }
        Realization::from_blocks(&parts)
    }

    fn from_blocks(parts: &[(BlockKind, usize)]) -> Result<Self> {
        let mut blocks = Vec::new();
        let mut factors = Vec::new();
        let (mut off, mut toff) = (0, 0);
        for &(kind, dim) in parts {
            let ok = match kind {
                BlockKind::SL => dim >= 2,
                BlockKind::GL => dim >= 1,
                BlockKind::Sp => dim >= 2 && dim % 2 == 0,
            };
            if !ok || dim > crate::MAX_DIM {
                return Err(Error::UnsupportedRealization(format!("{kind:?}{dim}")));
            }
            let component = match kind {
                BlockKind::GL if dim == 1 => None,
                BlockKind::SL | BlockKind::GL => {
                    factors.push((CartanType::A, dim - 1));
                    Some(factors.len() - 1)
                }
                BlockKind::Sp => {
                    factors.push((CartanType::C, dim / 2));
                    Some(factors.len() - 1)
                }
            };
            let b = Block { kind, dim, offset: off, component, torus_offset: toff };
            off += dim;
            toff += b.torus_dim();
            blocks.push(b);
        }
        let datum = if factors.is_empty() { RootDatum::torus(toff) } else { RootDatum::product(&factors)? };
        if datum.torus_dim() != toff {
            return Err(Error::UnsupportedRealization("torus coordinates do not match".into()));
        }
        let mut r = Realization { blocks, n: off, datum: Arc::new(datum), root_vectors: Vec::new() };
        r.root_vectors = (0..r.datum.num_roots()).map(|a| r.solve_root_vector(a)).collect::<Result<_>>()?;
        Ok(r)
    }

    pub fn label(&self) -> String {
        self.blocks.iter().map(Block::label).collect::<Vec<_>>().join("x")
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn is_special_linear(&self) -> bool {
        self.blocks.len() == 1 && self.blocks[0].kind == BlockKind::SL
    }

    /// `SL_n` or `GL_n`: the natural module is the whole story.
    pub fn is_type_a_single(&self) -> bool {
        self.blocks.len() == 1 && matches!(self.blocks[0].kind, BlockKind::SL | BlockKind::GL)
    }

    fn block_of_component(&self, c: usize) -> &Block {
        self.blocks.iter().find(|b| b.component == Some(c)).expect("component has a block")
    }

    /// Diagonal exponents of `lambda(t)` for torus weights `w`.
    pub fn diagonal_exponents(&self, w: &[i64]) -> Vec<i64> {
        let mut d = vec![0i64; self.n];
        for b in &self.blocks {
            for a in 0..b.dim {
                if let Some((t, s)) = b.weight_of(a) {
                    d[b.offset + a] = s * w[t];
                }
            }
        }
        d
    }

    fn position_character(&self, b: &Block, a: usize, c: usize) -> Vec<i64> {
        let mut v = vec![0i64; self.datum.torus_dim()];
        if let Some((t, s)) = b.weight_of(a) {
            v[t] += s;
        }
        if let Some((t, s)) = b.weight_of(c) {
            v[t] -= s;
        }
        v
    }

    fn solve_root_vector(&self, alpha: usize) -> Result<IntEntries> {
        let tau = self.datum.torus_vector(alpha);
        let b = self.block_of_component(self.datum.component_of(alpha));
        let mut pos = Vec::new();
        for a in 0..b.dim {
            for c in 0..b.dim {
                if a != c && self.position_character(b, a, c) == tau {
                    pos.push((b.offset + a, b.offset + c));
                }
            }
        }
        match (b.kind, pos.as_slice()) {
            (_, [p]) => Ok(vec![(p.0, p.1, 1)]),
            (BlockKind::Sp, [p1, p2]) => {
                // Solve X^T J + J X = 0 for X = E_{p1} + c E_{p2}, c = +-1.
                for c in [1i64, -1] {
                    let x = vec![(p1.0, p1.1, 1), (p2.0, p2.1, c)];
                    if self.int_lie_sp_ok(b, &x) {
                        return Ok(x);
                    }
                }
                Err(Error::UnsupportedRealization("no symplectic root vector".into()))
            }
            _ => Err(Error::UnsupportedRealization(format!("root {alpha} has {} positions", pos.len()))),
        }
    }

    fn int_form(&self, b: &Block, i: usize) -> (usize, i64) {
        // Row i of J (block-local): single entry.
        let m = b.dim / 2;
        (b.dim - 1 - i, if i < m { 1 } else { -1 })
    }

    fn int_lie_sp_ok(&self, b: &Block, x: &IntEntries) -> bool {
        let d = b.dim;
        let mut xm = vec![vec![0i64; d]; d];
        for &(r, c, v) in x {
            xm[r - b.offset][c - b.offset] += v;
        }
        let mut j = vec![vec![0i64; d]; d];
        for (i, row) in j.iter_mut().enumerate() {
            let (c, v) = self.int_form(b, i);
            row[c] = v;
        }
        for r in 0..d {
            for c in 0..d {
                let mut s = 0;
                for l in 0..d {
                    s += xm[l][r] * j[l][c] + j[r][l] * xm[l][c];
                }
                if s != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// The root vector `X_alpha` over `f`.
    pub fn root_vector(&self, alpha: usize, f: &Field) -> Mat {
        let mut m = Mat::zero(self.n, self.n);
        for &(r, c, v) in &self.root_vectors[alpha] {
            m.set(r, c, f.from_int(v));
        }
        m
    }

    /// Matrix positions occupied by `X_alpha`.
    pub fn root_positions(&self, alpha: usize) -> Vec<(usize, usize)> {
        self.root_vectors[alpha].iter().map(|&(r, c, _)| (r, c)).collect()
    }

    /// `x_alpha(s) = 1 + s X_alpha`.
    pub fn root_element(&self, alpha: usize, s: Fe, f: &Field) -> Mat {
        let mut m = Mat::identity(self.n);
        for &(r, c, v) in &self.root_vectors[alpha] {
            m.set(r, c, f.mul(s, f.from_int(v)));
        }
        m
    }

    /// `x_{alpha_r}(1) .. x_{alpha_1}(1)`: the product over the simple roots,
    /// with the first simple root acting first. For `SL_n` this is the upper
    /// bidiagonal matrix with all ones.
    pub fn standard_regular_unipotent(&self, f: &Field) -> Mat {
        (0..self.datum.rank()).fold(Mat::identity(self.n), |acc, i| self.root_element(i, Fe::ONE, f).mul(&acc, f))
    }

    /// Generators of `G(F)`: `x_alpha(b)` for `alpha` in `+-Delta` and `b` an
    /// additive basis of `F`, then one torus generator per `GL` block.
    pub fn generators(&self, f: &Field) -> Vec<Mat> {
        let d = &self.datum;
        let basis = f.additive_basis();
        let mut gens = Vec::new();
        for i in 0..d.rank() {
            for alpha in [i, d.negative(i)] {
                for &b in &basis {
                    gens.push(self.root_element(alpha, b, f));
                }
            }
        }
        for b in self.blocks.iter().filter(|b| b.kind == BlockKind::GL) {
            let mut t = Mat::identity(self.n);
            t.set(b.offset, b.offset, f.primitive());
            if !t.is_identity() {
                gens.push(t);
            }
        }
        gens
    }

    /// The Gram matrix of the invariant form of an `Sp` block (identity elsewhere).
    pub fn form(&self, f: &Field) -> Mat {
        let mut j = Mat::zero(self.n, self.n);
        for b in &self.blocks {
            for i in 0..b.dim {
                if b.kind == BlockKind::Sp {
                    let (c, v) = self.int_form(b, i);
                    j.set(b.offset + i, b.offset + c, f.from_int(v));
                } else {
                    j.set(b.offset + i, b.offset + i, Fe::ONE);
                }
            }
        }
        j
    }

    fn block_diagonal(&self, g: &Mat) -> bool {
        let owner: Vec<usize> =
            self.blocks.iter().enumerate().flat_map(|(i, b)| std::iter::repeat_n(i, b.dim)).collect();
        (0..self.n).all(|r| (0..self.n).all(|c| owner[r] == owner[c] || g.get(r, c).is_zero()))
    }

    /// Whether `g` lies in `G(F)`.
    pub fn contains(&self, g: &Mat, f: &Field) -> bool {
        if g.rows() != self.n || g.cols() != self.n || !self.block_diagonal(g) {
            return false;
        }
        self.blocks.iter().all(|b| {
            let m = g.block(b.offset, b.dim);
            match b.kind {
                BlockKind::SL => m.det(f) == Fe::ONE,
                BlockKind::GL => !m.det(f).is_zero(),
                BlockKind::Sp => {
                    let j = Realization::sp(b.dim).expect("valid block").form(f);
                    m.transpose().mul(&j, f).mul(&m, f) == j
                }
            }
        })
    }

    /// Whether `x` lies in `Lie(G)`.
    pub fn lie_contains(&self, x: &Mat, f: &Field) -> bool {
        if x.rows() != self.n || x.cols() != self.n || !self.block_diagonal(x) {
            return false;
        }
        self.blocks.iter().all(|b| {
            let m = x.block(b.offset, b.dim);
            match b.kind {
                BlockKind::SL => m.trace(f).is_zero(),
                BlockKind::GL => true,
                BlockKind::Sp => {
                    let j = Realization::sp(b.dim).expect("valid block").form(f);
                    m.transpose().mul(&j, f).add(&j.mul(&m, f), f).is_zero()
                }
            }
        })
    }

    /// A basis of the Lie algebra of the diagonal torus.
    pub fn lie_torus_basis(&self, f: &Field) -> Vec<Mat> {
        let mut out = Vec::new();
        for b in &self.blocks {
            let o = b.offset;
            match b.kind {
                BlockKind::SL => {
                    for i in 0..b.dim - 1 {
                        let mut m = Mat::unit(self.n, o + i, o + i);
                        m.set(o + i + 1, o + i + 1, f.neg(Fe::ONE));
                        out.push(m);
                    }
                }
                BlockKind::GL => out.extend((0..b.dim).map(|i| Mat::unit(self.n, o + i, o + i))),
                BlockKind::Sp => {
                    for i in 0..b.dim / 2 {
                        let mut m = Mat::unit(self.n, o + i, o + i);
                        m.set(o + b.dim - 1 - i, o + b.dim - 1 - i, f.neg(Fe::ONE));
                        out.push(m);
                    }
                }
            }
        }
        out
    }

    /// Basis of the standard Borel subalgebra: torus plus positive root vectors.
    pub fn borel_subalgebra_basis(&self, f: &Field) -> Vec<Mat> {
        let mut out = self.lie_torus_basis(f);
        out.extend((0..self.datum.num_positive()).map(|a| self.root_vector(a, f)));
        out
    }

    /// Block and block-local index of simple root `j`.
    pub fn simple_root_block(&self, j: usize) -> (&Block, usize) {
        let c = self.datum.component_of_simple(j);
        let local = j - self.datum.components()[c].offset;
        (self.block_of_component(c), local)
    }

    /// The flag subspace attached to simple root `j`: the span of the first
    /// `local + 1` basis vectors of its block, or the last ones if `opposite`.
    pub fn flag_subspace(&self, j: usize, opposite: bool) -> Subspace {
        let (b, local) = self.simple_root_block(j);
        if opposite {
            Subspace::coordinate(self.n, b.offset + b.dim - 1 - local..b.offset + b.dim)
        } else {
            Subspace::coordinate(self.n, b.offset..b.offset + local + 1)
        }
    }

    /// Number of Borel subgroups of `G(F_Q)`: `prod (Q^{d_i} - 1)/(Q - 1)` over the degrees.
    pub fn borel_count(&self, q: u64) -> u128 {
        let mut total: u128 = 1;
        for c in self.datum.components() {
            let degrees: Vec<u32> = match c.ty {
                CartanType::A => (2..=c.rank as u32 + 1).collect(),
                _ => (1..=c.rank as u32).map(|i| 2 * i).collect(),
            };
            for d in degrees {
                total *= ((q as u128).pow(d) - 1) / (q as u128 - 1);
            }
        }
        total
    }

    /// Order of `G(F_Q)`.
    pub fn group_order(&self, q: u64) -> u128 {
        let q = q as u128;
        let mut total: u128 = 1;
        for b in &self.blocks {
            let n = b.dim as u32;
            match b.kind {
                BlockKind::SL | BlockKind::GL => {
                    let mut o = q.pow(n * (n - 1) / 2);
                    for i in 2..=n {
                        o *= q.pow(i) - 1;
                    }
                    if b.kind == BlockKind::GL {
                        o *= q - 1;
                    }
                    total *= o;
                }
                BlockKind::Sp => {
                    let m = n / 2;
                    let mut o = q.pow(m * m);
                    for i in 1..=m {
                        o *= q.pow(2 * i) - 1;
                    }
                    total *= o;
                }
            }
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl3_root_elements() {
        let f = Field::prime(3).unwrap();
        let r = Realization::sl(3).unwrap();
        let x = r.root_element(0, Fe(2), &f);
        assert_eq!(x, Mat::from_rows(&[[1, 2, 0], [0, 1, 0], [0, 0, 1]]));
        assert!(r.root_element(4, Fe::ZERO, &f).is_identity());
        for a in 0..r.datum().num_roots() {
            for s in f.elements() {
                for t in f.elements() {
                    let lhs = r.root_element(a, s, &f).mul(&r.root_element(a, t, &f), &f);
                    assert_eq!(lhs, r.root_element(a, f.add(s, t), &f));
                }
            }
        }
    }

    #[test]
    fn sp4_root_elements_preserve_form() {
        for p in [2, 3, 5] {
            let f = Field::prime(p).unwrap();
            let r = Realization::sp(4).unwrap();
            let d = r.datum();
            for a in 0..d.num_roots() {
                let x = r.root_element(a, Fe::ONE, &f);
                assert!(r.contains(&x, &f), "root {a} over F{p}");
                assert!(r.lie_contains(&r.root_vector(a, &f), &f));
            }
            // the long simple root 2e_2 and the highest root 2e_1
            let long = d.root_index(&[2, 1]).unwrap();
            assert_eq!(r.root_positions(long), vec![(0, 3)]);
            assert_eq!(r.root_positions(1), vec![(1, 2)]);
        }
    }

    #[test]
    fn standard_regular_shapes() {
        let f = Field::prime(2).unwrap();
        let u = Realization::sl(4).unwrap().standard_regular_unipotent(&f);
        assert_eq!(u, Mat::from_rows(&[[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 0, 1]]));
        let u2 = Realization::sl(2).unwrap().standard_regular_unipotent(&Field::prime(5).unwrap());
        assert_eq!(u2, Mat::from_rows(&[[1, 1], [0, 1]]));
        let sp = Realization::sp(4).unwrap();
        let u = sp.standard_regular_unipotent(&f);
        assert_eq!(crate::exactalg::jordan_partition(&u, &f).unwrap(), vec![4]);
        assert!(sp.contains(&u, &f));
    }

    #[test]
    fn commuting_simple_root_elements() {
        for n in 3..=4 {
            let r = Realization::sl(n).unwrap();
            let d = r.datum().clone();
            for p in [2, 3] {
                let f = Field::prime(p).unwrap();
                for a in 0..d.num_roots() {
                    for b in 0..d.num_roots() {
                        let sum: Vec<i64> = d.root(a).iter().zip(d.root(b)).map(|(x, y)| x + y).collect();
                        if d.root_index(&sum).is_some() || sum.iter().all(|&x| x == 0) {
                            continue;
                        }
                        for s in f.elements() {
                            let x = r.root_element(a, s, &f);
                            let y = r.root_element(b, Fe::ONE, &f);
                            assert_eq!(x.mul(&y, &f), y.mul(&x, &f));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn counts_and_labels() {
        let r = Realization::parse("SL2xSL2").unwrap();
        assert_eq!(r.label(), "SL2xSL2");
        assert_eq!(r.dim(), 4);
        assert_eq!(Realization::sl(3).unwrap().borel_count(2), 21);
        assert_eq!(Realization::sp(4).unwrap().borel_count(2), 45);
        assert_eq!(Realization::sl(3).unwrap().group_order(3), 5616);
        assert_eq!(Realization::sp(4).unwrap().group_order(2), 720);
        assert_eq!(Realization::gl(2).unwrap().group_order(3), 48);
        assert!(Realization::parse("SO5").is_err());
    }
}
