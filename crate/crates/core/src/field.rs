//! Finite fields `GF(p^e)` as polynomial residues modulo a monic irreducible.
//!
//! Elements are encoded as integers in `[0, q)` by evaluating the residue
//! polynomial at `p` (constant term least significant). The encoding is the
//! one used in every serialized matrix.

use std::fmt;

use crate::error::{Error, Result};

/// Default bound on the extension degree accepted by [`make_field`].
pub const DEFAULT_MAX_DEGREE: u32 = 4;

/// Fields up to this order get precomputed operation tables.
const TABLE_LIMIT: u64 = 256;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `Some((p, e))` when `q = p^e` with `p` prime and `e >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// A scalar of `GF(q)`, stored as its base-`p` code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

// Dense polynomials over GF(p), coefficients from the constant term up.

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // a^(p-2) mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(*x, *y, p)) % p;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + p - y) % p;
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
fn poly_divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![0u64; rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = mulmod(*rem.last().unwrap(), lead_inv, p);
        quot[shift] = c;
        for (i, y) in b.iter().enumerate() {
            let slot = &mut rem[shift + i];
            *slot = (*slot + p - mulmod(c, *y, p)) % p;
        }
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// All monic polynomials of degree `d`, in lexicographic order of their
/// coefficient tuple read from the constant term up.
fn monic_polys(p: u64, d: u32) -> impl Iterator<Item = Vec<u64>> {
    let count = p.pow(d);
    (0..count).map(move |idx| {
        // constant term is the most significant digit of idx
        let mut coeffs = vec![0u64; d as usize + 1];
        let mut rest = idx;
        for slot in coeffs[..d as usize].iter_mut().rev() {
            *slot = rest % p;
            rest /= p;
        }
        coeffs[d as usize] = 1;
        coeffs
    })
}

/// Monic irreducible polynomials of degree `d` over `GF(p)`, by trial division
/// with every monic irreducible of degree `<= d/2`.
pub fn monic_irreducibles(p: u64, d: u32) -> Vec<Vec<u64>> {
    let divisors: Vec<Vec<u64>> = (1..=d / 2).flat_map(|k| monic_irreducibles(p, k)).collect();
    monic_polys(p, d)
        .filter(|f| {
            divisors
                .iter()
                .all(|g| !poly_divrem(f, g, p).1.is_empty())
        })
        .collect()
}

#[derive(Debug, Clone)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

/// Arithmetic context for `GF(p^e)`.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    p: u64,
    e: u32,
    q: u64,
    modulus: Vec<u64>,
    tables: Option<Tables>,
}

/// `GF(p^e)` with the default degree bound.
pub fn make_field(p: u64, e: u32) -> Result<FieldCtx> {
    FieldCtx::new(p, e, DEFAULT_MAX_DEGREE)
}

impl FieldCtx {
    pub fn new(p: u64, e: u32, max_degree: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 || e > max_degree {
            return Err(Error::ExtensionDegree {
                degree: e,
                bound: max_degree,
            });
        }
        let q = p
            .checked_pow(e)
            .filter(|q| *q <= u64::from(u32::MAX))
            .ok_or(Error::FieldTooLarge { p, e })?;
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            monic_irreducibles(p, e)
                .into_iter()
                .next()
                .expect("an irreducible polynomial exists in every degree")
        };
        let mut ctx = FieldCtx {
            p,
            e,
            q,
            modulus,
            tables: None,
        };
        if q <= TABLE_LIMIT {
            ctx.tables = Some(ctx.build_tables());
        }
        Ok(ctx)
    }

    /// The field of order `q`; `q` must be a prime power.
    pub fn for_order(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        make_field(p, e)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients from the constant term up; monic of degree `e`.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn elem(&self, code: u32) -> Result<FieldElem> {
        if u64::from(code) >= self.q {
            return Err(Error::ElementOutOfRange { code, q: self.q });
        }
        Ok(FieldElem(code))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q as u32).map(FieldElem)
    }

    /// Residue polynomial of `a`, exactly `e` coefficients from the constant up.
    pub fn residue(&self, a: FieldElem) -> Vec<u64> {
        let mut rest = u64::from(a.0);
        (0..self.e)
            .map(|_| {
                let c = rest % self.p;
                rest /= self.p;
                c
            })
            .collect()
    }

    /// Encodes a residue after reducing it modulo the field polynomial.
    pub fn from_residue(&self, coeffs: &[u64]) -> FieldElem {
        let reduced: Vec<u64> = coeffs.iter().map(|c| c % self.p).collect();
        let (_, rem) = poly_divrem(&reduced, &self.modulus, self.p);
        let code = rem.iter().rev().fold(0u64, |acc, c| acc * self.p + c);
        FieldElem(code as u32)
    }

    fn idx(&self, a: FieldElem, b: FieldElem) -> usize {
        a.0 as usize * self.q as usize + b.0 as usize
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        match &self.tables {
            Some(t) => FieldElem(t.add[self.idx(a, b)]),
            None => self.add_slow(a, b),
        }
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        match &self.tables {
            Some(t) => FieldElem(t.neg[a.0 as usize]),
            None => self.neg_slow(a),
        }
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        match &self.tables {
            Some(t) => FieldElem(t.mul[self.idx(a, b)]),
            None => self.mul_slow(a, b),
        }
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(match &self.tables {
            Some(t) => FieldElem(t.inv[a.0 as usize]),
            None => self.inv_slow(a),
        })
    }

    pub fn pow(&self, a: FieldElem, mut exp: u64) -> FieldElem {
        let mut base = a;
        let mut acc = FieldElem::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    fn add_slow(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let (ra, rb) = (self.residue(a), self.residue(b));
        let sum: Vec<u64> = ra.iter().zip(&rb).map(|(x, y)| (x + y) % self.p).collect();
        self.from_residue(&sum)
    }

    fn neg_slow(&self, a: FieldElem) -> FieldElem {
        let r: Vec<u64> = self
            .residue(a)
            .iter()
            .map(|c| (self.p - c) % self.p)
            .collect();
        self.from_residue(&r)
    }

    fn mul_slow(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let prod = poly_mul(&self.residue(a), &self.residue(b), self.p);
        self.from_residue(&prod)
    }

    /// Extended Euclid on (residue, modulus).
    fn inv_slow(&self, a: FieldElem) -> FieldElem {
        let p = self.p;
        let mut r0 = self.modulus.clone();
        let mut r1 = self.residue(a);
        trim(&mut r1);
        let mut s0: Vec<u64> = Vec::new();
        let mut s1: Vec<u64> = vec![1];
        while !r1.is_empty() {
            let (quot, rem) = poly_divrem(&r0, &r1, p);
            let next = poly_sub(&s0, &poly_mul(&quot, &s1, p), p);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, next);
        }
        // r0 is a nonzero constant: the gcd up to a unit
        let scale = inv_mod(r0[0], p);
        let inv: Vec<u64> = s0.iter().map(|c| mulmod(*c, scale, p)).collect();
        self.from_residue(&inv)
    }

    fn build_tables(&self) -> Tables {
        let q = self.q as usize;
        let mut add = vec![0u32; q * q];
        let mut mul = vec![0u32; q * q];
        let mut neg = vec![0u32; q];
        let mut inv = vec![0u32; q];
        for a in self.elements() {
            neg[a.0 as usize] = self.neg_slow(a).0;
            if !a.is_zero() {
                inv[a.0 as usize] = self.inv_slow(a).0;
            }
            for b in self.elements() {
                let i = self.idx(a, b);
                add[i] = self.add_slow(a, b).0;
                mul[i] = self.mul_slow(a, b).0;
            }
        }
        Tables { add, mul, neg, inv }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(64), Some((2, 6)));
        assert_eq!(prime_power(97), Some((97, 1)));
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(0), None);
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(12), None);
    }

    #[test]
    fn small_fields() {
        let f2 = make_field(2, 1).unwrap();
        assert_eq!(f2.order(), 2);
        assert_eq!(f2.elements().count(), 2);

        let f4 = make_field(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);

        let f9 = make_field(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn rejects_bad_fields() {
        assert_eq!(make_field(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(make_field(1, 1).unwrap_err(), Error::NotPrime(1));
        assert_eq!(
            make_field(2, 5).unwrap_err(),
            Error::ExtensionDegree { degree: 5, bound: 4 }
        );
        assert_eq!(
            make_field(2, 0).unwrap_err(),
            Error::ExtensionDegree { degree: 0, bound: 4 }
        );
        assert_eq!(FieldCtx::for_order(10).unwrap_err(), Error::NotPrimePower(10));
        assert!(FieldCtx::new(2, 6, 6).is_ok());
    }

    #[test]
    fn gf4_x_squared() {
        let f4 = make_field(2, 2).unwrap();
        let x = f4.from_residue(&[0, 1]);
        let x_plus_1 = f4.from_residue(&[1, 1]);
        assert_eq!(f4.mul(x, x), x_plus_1);
        assert_eq!(x_plus_1.code(), 3);
    }

    #[test]
    fn gf5_inverse() {
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(f5.inv(f5.elem(2).unwrap()).unwrap(), f5.elem(3).unwrap());
        assert_eq!(f5.inv(FieldElem::ZERO), Err(Error::ZeroInverse));
        assert!(f5.elem(5).is_err());
    }

    #[test]
    fn untabled_field_agrees_with_axioms() {
        // 17^2 = 289 is above the table limit
        let f = make_field(17, 2).unwrap();
        assert!(f.tables.is_none());
        for code in [1u32, 2, 18, 100, 288] {
            let a = f.elem(code).unwrap();
            assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElem::ONE);
            assert_eq!(f.add(a, f.neg(a)), FieldElem::ZERO);
            assert_eq!(f.pow(a, f.order() - 1), FieldElem::ONE);
        }
    }

    #[test]
    fn irreducible_counts() {
        // number of monic irreducibles of degree d over GF(2): 2, 1, 2, 3
        let counts: Vec<usize> = (1..=4).map(|d| monic_irreducibles(2, d).len()).collect();
        assert_eq!(counts, vec![2, 1, 2, 3]);
        assert_eq!(monic_irreducibles(3, 2).len(), 3);
    }
}
