//! Finite fields `F_{p^k}` with `p^k <= 2^16`.
//!
//! Elements are encoded as integers `sum a_i p^i`, where `a_i` is the
//! coefficient of `x^i` in `F_p[x]/(modulus)`. The modulus for each `(p, k)`
//! is the monic primitive polynomial of degree `k` whose lower coefficients
//! `(c_0, .., c_{k-1})` have the least encoding `sum c_i p^i`. Because the
//! modulus is primitive, the class of `x` generates the multiplicative group
//! and doubles as the log-table base.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A field element, as its integer encoding.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Fe(pub u16);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Serializable description of a field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldInfo {
    pub p: u32,
    pub k: u32,
    /// Modulus coefficients from `x^0` up to the leading `x^k`.
    pub modulus: Vec<u32>,
}

struct FieldData {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u16>,
    log: Vec<u32>,
    add: Option<Vec<u16>>,
    neg: Vec<u16>,
}

/// Handle to an immutable finite field; cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.k == other.0.k && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn digits(mut a: u32, p: u32, k: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(k as usize);
    for _ in 0..k {
        out.push(a % p);
        a /= p;
    }
    out
}

fn from_digits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `a` modulo the monic polynomial `m` over `F_p` (coefficients low to high).
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                let idx = shift + i;
                r[idx] = (r[idx] + p - (lead * c) % p) % p;
            }
        }
        r.pop();
    }
    r
}

/// Trial factorization by every monic polynomial of degree `1..=k/2`.
pub(crate) fn is_irreducible(m: &[u32], p: u32) -> bool {
    let k = m.len() - 1;
    if k == 1 {
        return true;
    }
    for d in 1..=k / 2 {
        for code in 0..p.pow(d as u32) {
            let mut cand = digits(code, p, d as u32);
            cand.push(1);
            if poly_rem(m, &cand, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Multiplies a residue (in digit form) by `x` modulo the monic `m`.
fn times_x(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let k = a.len();
    let top = a[k - 1];
    let mut out = vec![0; k];
    for i in 0..k {
        let lower = if i == 0 { 0 } else { a[i - 1] };
        out[i] = (lower + p - (top * m[i]) % p) % p;
    }
    out
}

fn order_of_x(m: &[u32], p: u32, q: u32) -> Option<u32> {
    let k = m.len() - 1;
    let mut one = vec![0; k];
    one[0] = 1;
    let mut cur = one.clone();
    for i in 1..q {
        cur = times_x(&cur, m, p);
        if cur.iter().all(|&c| c == 0) {
            return None;
        }
        if cur == one {
            return Some(i);
        }
    }
    None
}

/// The canonical modulus for `F_{p^k}` (see module docs).
pub fn canonical_modulus(p: u32, k: u32) -> Result<Vec<u32>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let q = checked_order(p, k)?;
    for code in 0..q {
        let mut m = digits(code, p, k);
        if m[0] == 0 {
            continue;
        }
        m.push(1);
        if is_irreducible(&m, p) && order_of_x(&m, p, q) == Some(q - 1) {
            return Ok(m);
        }
    }
    unreachable!("every finite field has a primitive polynomial")
}

fn checked_order(p: u32, k: u32) -> Result<u32> {
    if k == 0 {
        return Err(Error::FieldTooLarge { p, k });
    }
    let mut q: u64 = 1;
    for _ in 0..k {
        q *= p as u64;
        if q > 1 << 16 {
            return Err(Error::FieldTooLarge { p, k });
        }
    }
    Ok(q as u32)
}

impl Field {
    /// `F_{p^k}` with its canonical modulus.
    pub fn new(p: u32, k: u32) -> Result<Field> {
        let m = canonical_modulus(p, k)?;
        Field::with_modulus(p, m)
    }

    /// Prime field `F_p`.
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1)
    }

    /// Field with an explicit monic modulus (coefficients low to high). The
    /// modulus must be irreducible; if it is not primitive a generator is
    /// searched for instead.
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::ModulusNotIrreducible(p));
        }
        let k = (modulus.len() - 1) as u32;
        let q = checked_order(p, k)?;
        if !is_irreducible(&modulus, p) {
            return Err(Error::ModulusNotIrreducible(p));
        }
        // Residue arithmetic in digit form, used only while building tables.
        let mul_digits = |a: &[u32], b: &[u32]| -> Vec<u32> {
            let mut prod = vec![0u32; 2 * k as usize];
            for (i, &x) in a.iter().enumerate() {
                for (j, &y) in b.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            let mut r = poly_rem(&prod, &modulus, p);
            r.resize(k as usize, 0);
            r
        };
        let gen = if q == 2 {
            vec![1]
        } else if order_of_x(&modulus, p, q) == Some(q - 1) {
            let mut v = vec![0; k as usize];
            if k == 1 {
                v[0] = (p - modulus[0]) % p;
            } else {
                v[1] = 1;
            }
            v
        } else {
            (2..q)
                .map(|g| digits(g, p, k))
                .find(|gd| {
                    let mut cur = gd.clone();
                    let mut ord = 1;
                    while from_digits(&cur, p) != 1 {
                        cur = mul_digits(&cur, gd);
                        ord += 1;
                    }
                    ord == q - 1
                })
                .expect("multiplicative group is cyclic")
        };
        let n = (q - 1) as usize;
        let mut exp = vec![0u16; 2 * n.max(1)];
        let mut log = vec![0u32; q as usize];
        let mut cur = digits(1, p, k);
        for i in 0..n {
            let e = from_digits(&cur, p);
            exp[i] = e as u16;
            exp[i + n] = e as u16;
            log[e as usize] = i as u32;
            cur = mul_digits(&cur, &gen);
        }
        let neg: Vec<u16> = (0..q)
            .map(|a| {
                let d: Vec<u32> = digits(a, p, k).iter().map(|&c| (p - c) % p).collect();
                from_digits(&d, p) as u16
            })
            .collect();
        let add = if p != 2 && k > 1 && q <= 1024 {
            let mut t = vec![0u16; (q * q) as usize];
            for a in 0..q {
                let da = digits(a, p, k);
                for b in 0..q {
                    let db = digits(b, p, k);
                    let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    t[(a * q + b) as usize] = from_digits(&s, p) as u16;
                }
            }
            Some(t)
        } else {
            None
        };
        Ok(Field(Arc::new(FieldData { p, k, q, modulus, exp, log, add, neg })))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn k(&self) -> u32 {
        self.0.k
    }

    /// Number of elements.
    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn info(&self) -> FieldInfo {
        FieldInfo { p: self.p(), k: self.k(), modulus: self.0.modulus.clone() }
    }

    /// `F_{q^d}` for this field `F_q`, with canonical modulus.
    pub fn extension(&self, d: u32) -> Result<Field> {
        if d == 1 {
            return Ok(self.clone());
        }
        Field::new(self.p(), self.k() * d)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.0.q).map(|a| Fe(a as u16))
    }

    /// Encodes an integer, reducing mod p (only meaningful in the prime subfield).
    pub fn from_int(&self, a: i64) -> Fe {
        let p = self.p() as i64;
        Fe(a.rem_euclid(p) as u16)
    }

    /// A generator of the multiplicative group.
    pub fn primitive(&self) -> Fe {
        Fe(self.0.exp[if self.0.q == 2 { 0 } else { 1 }])
    }

    /// An `F_p`-basis of the field: `1, x, .., x^{k-1}`.
    pub fn additive_basis(&self) -> Vec<Fe> {
        let p = self.p();
        (0..self.k()).map(|i| Fe(p.pow(i) as u16)).collect()
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let d = &*self.0;
        if d.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        if d.k == 1 {
            return Fe(((a.0 as u32 + b.0 as u32) % d.p) as u16);
        }
        if let Some(t) = &d.add {
            return Fe(t[(a.0 as u32 * d.q + b.0 as u32) as usize]);
        }
        let (mut x, mut y) = (a.0 as u32, b.0 as u32);
        let (mut out, mut place) = (0u32, 1u32);
        for _ in 0..d.k {
            out += ((x % d.p + y % d.p) % d.p) * place;
            x /= d.p;
            y /= d.p;
            place *= d.p;
        }
        Fe(out as u16)
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        Fe(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.is_zero() || b.is_zero() {
            return Fe::ZERO;
        }
        let d = &*self.0;
        Fe(d.exp[(d.log[a.0 as usize] + d.log[b.0 as usize]) as usize])
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Fe) -> Option<Fe> {
        if a.is_zero() {
            return None;
        }
        let d = &*self.0;
        let n = d.q - 1;
        Some(Fe(d.exp[((n - d.log[a.0 as usize]) % n) as usize]))
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe::ONE;
        }
        if a.is_zero() {
            return Fe::ZERO;
        }
        let d = &*self.0;
        let n = (d.q - 1) as u64;
        Fe(d.exp[((d.log[a.0 as usize] as u64 * (e % n)) % n) as usize])
    }

    /// `a^{p^e}`.
    pub fn frobenius(&self, a: Fe, e: u32) -> Fe {
        self.pow(a, (self.p() as u64).pow(e))
    }

    /// Elements fixed by `a -> a^s`, i.e. the subfield `F_s` when `s` is a
    /// power of `p` whose exponent divides `k`.
    pub fn subfield(&self, s: u32) -> Result<Vec<Fe>> {
        let e = power_exponent(self.p(), s)
            .filter(|&e| e >= 1 && self.k().is_multiple_of(e))
            .ok_or(Error::NotSubfield { small: s, big: self.order() })?;
        Ok(self.elements().filter(|&a| self.frobenius(a, e) == a).collect())
    }

    /// Embedding table `small -> self` sending the class of `x` in `small` to
    /// the least-encoded root of `small`'s modulus in `self`.
    pub fn embedding_from(&self, small: &Field) -> Result<Vec<Fe>> {
        let err = Error::NotSubfield { small: small.order(), big: self.order() };
        if small.p() != self.p() || !self.k().is_multiple_of(small.k()) {
            return Err(err);
        }
        let p = self.p();
        let m = small.modulus();
        let eval = |r: Fe| {
            let mut acc = Fe::ZERO;
            for &c in m.iter().rev() {
                acc = self.add(self.mul(acc, r), Fe(c as u16));
            }
            acc
        };
        let root = self.elements().find(|&r| eval(r).is_zero()).ok_or(err)?;
        let powers: Vec<Fe> = (0..small.k()).map(|i| self.pow(root, i as u64)).collect();
        Ok(small
            .elements()
            .map(|a| {
                let d = digits(a.0 as u32, p, small.k());
                d.iter().zip(&powers).fold(Fe::ZERO, |acc, (&c, &w)| self.add(acc, self.mul(Fe(c as u16), w)))
            })
            .collect())
    }
}

/// `e` with `p^e = s`, if any.
pub fn power_exponent(p: u32, s: u32) -> Option<u32> {
    let (mut e, mut v) = (0, 1u64);
    while v < s as u64 {
        v *= p as u64;
        e += 1;
    }
    (v == s as u64).then_some(e)
}
