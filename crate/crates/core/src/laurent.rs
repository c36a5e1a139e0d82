//! Laurent polynomials in one indeterminate `q` with arbitrary-precision
//! integer coefficients.
//!
//! Values are stored sparsely as an exponent → coefficient map and kept
//! normalized (no zero coefficient is ever stored), so equality of two
//! polynomials is plain structural equality of their maps.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs. Repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn add_term_ref(&mut self, exp: i64, c: &BigInt) {
        match self.terms.entry(exp) {
            Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power, or zero for the zero polynomial.
    pub fn leading_coeff(&self) -> BigInt {
        self.terms.values().next_back().cloned().unwrap_or_default()
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.min_exponent().is_none_or(|e| e >= 0)
    }

    /// Sum of all coefficients, i.e. the value at `q = 1`.
    pub fn coeff_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Multiplication by the monomial `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(x, c)| (x + e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact value at the integer point `q = q0`.
    pub fn eval(&self, q0: i64) -> Result<BigRational> {
        if q0 < 2 {
            return Err(Error::EvalPoint(q0));
        }
        Ok(self.eval_big(&BigInt::from(q0)))
    }

    pub(crate) fn eval_big(&self, q0: &BigInt) -> BigRational {
        let Some(low) = self.min_exponent() else {
            return BigRational::zero();
        };
        // Horner over the shifted polynomial q^{-low} * self, then divide back.
        let high = self.max_exponent().unwrap_or(low);
        let mut num = BigInt::zero();
        for e in (low..=high).rev() {
            num *= q0;
            if let Some(c) = self.terms.get(&e) {
                num += c;
            }
        }
        if low >= 0 {
            BigRational::from_integer(num * num_traits::pow(q0.clone(), low as usize))
        } else {
            BigRational::new(num, num_traits::pow(q0.clone(), (-low) as usize))
        }
    }

    /// Exact value at `q = q0` when that value is an integer.
    pub fn eval_integer(&self, q0: i64) -> Result<Option<BigInt>> {
        let r = self.eval(q0)?;
        Ok(r.is_integer().then(|| r.to_integer()))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Decreasing exponent order: `q^4 + q^3 + 2*q^2 + q + 1`, `-q^-1 - q^-2`, `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let unit = mag.is_one();
            if *e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !unit {
                write!(f, "{mag}*")?;
            }
            if *e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

/// Parses the canonical rendering (and any term order or spacing of it).
impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: s.to_owned(),
            reason: reason.to_owned(),
        };
        let compact: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        let mut out = Self::zero();
        let mut pos = 0;
        while pos < compact.len() {
            let mut negative = false;
            match compact[pos] {
                '+' if pos > 0 => pos += 1,
                '-' => {
                    negative = true;
                    pos += 1;
                }
                _ if pos > 0 => return Err(err("expected '+' or '-' between terms")),
                _ => {}
            }
            let start = pos;
            while pos < compact.len() && compact[pos].is_ascii_digit() {
                pos += 1;
            }
            let digits: String = compact[start..pos].iter().collect();
            let has_digits = !digits.is_empty();
            let mut coeff = if has_digits {
                digits.parse::<BigInt>().map_err(|_| err("bad coefficient"))?
            } else {
                BigInt::one()
            };
            let mut exp = 0i64;
            let mut has_q = false;
            if has_digits && compact.get(pos) == Some(&'*') {
                pos += 1;
                if compact.get(pos) != Some(&'q') {
                    return Err(err("expected 'q' after '*'"));
                }
            }
            if compact.get(pos) == Some(&'q') {
                has_q = true;
                pos += 1;
                exp = 1;
                if compact.get(pos) == Some(&'^') {
                    pos += 1;
                    let estart = pos;
                    if compact.get(pos) == Some(&'-') {
                        pos += 1;
                    }
                    while pos < compact.len() && compact[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let etext: String = compact[estart..pos].iter().collect();
                    exp = etext.parse().map_err(|_| err("bad exponent"))?;
                }
            }
            if !has_digits && !has_q {
                return Err(err("empty term"));
            }
            if negative {
                coeff = -coeff;
            }
            out.add_term(exp, coeff);
        }
        Ok(out)
    }
}

impl serde::Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term_ref(*e, c);
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl SubAssign for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl Add<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: &LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= rhs;
        self
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Mul<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        &self * rhs
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl<'a> Sum<&'a LaurentPoly> for LaurentPoly {
    fn sum<I: Iterator<Item = &'a LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn addition_cancels_and_normalizes() {
        let sum = &(LaurentPoly::q() + LaurentPoly::one()) + &LaurentPoly::constant(-1);
        assert_eq!(sum, LaurentPoly::q());
        assert_eq!(sum.num_terms(), 1);

        let p = lp("3*q^2 - q^-4");
        assert_eq!(&LaurentPoly::zero() + &p, p);

        let inv = LaurentPoly::monomial(1, -1);
        assert_eq!(&inv + &inv, LaurentPoly::monomial(2, -1));

        let z = &p - &p;
        assert!(z.is_zero());
        assert_eq!(z, LaurentPoly::zero());
    }

    #[test]
    fn multiplication() {
        let a = LaurentPoly::q() + LaurentPoly::one();
        let b = LaurentPoly::q() - LaurentPoly::one();
        assert_eq!(&a * &b, lp("q^2 - 1"));
        assert_eq!(&LaurentPoly::monomial(1, -1) * &LaurentPoly::q(), LaurentPoly::one());
        assert!((&a * &LaurentPoly::zero()).is_zero());
    }

    #[test]
    fn shifting() {
        let a = lp("q + 1");
        assert_eq!(a.shift(-2), lp("q^-1 + q^-2"));
        assert!(LaurentPoly::zero().shift(5).is_zero());
        assert_eq!(LaurentPoly::one().shift(3), lp("q^3"));
    }

    #[test]
    fn evaluation() {
        let g = lp("1 + q + 2*q^2 + q^3 + q^4");
        assert_eq!(g.eval(2).unwrap(), BigRational::from_integer(35.into()));
        let r = LaurentPoly::monomial(-1, -1).eval(2).unwrap();
        assert_eq!(r, BigRational::new((-1).into(), 2.into()));
        assert!(LaurentPoly::zero().eval(7).unwrap().is_zero());
        assert_eq!(lp("q^3").eval(3).unwrap(), BigRational::from_integer(27.into()));
    }

    #[test]
    fn evaluation_rejects_small_points() {
        assert_eq!(LaurentPoly::one().eval(1), Err(Error::EvalPoint(1)));
        assert_eq!(LaurentPoly::one().eval(-3), Err(Error::EvalPoint(-3)));
    }

    #[test]
    fn rendering() {
        assert_eq!(lp("1 + q + 2*q^2 + q^3 + q^4").to_string(), "q^4 + q^3 + 2*q^2 + q + 1");
        assert_eq!(LaurentPoly::from_terms([(-1, -1), (-2, -1)]).to_string(), "-q^-1 - q^-2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::constant(-7).to_string(), "-7");
        assert_eq!(LaurentPoly::from_terms([(2, -3), (0, 5)]).to_string(), "-3*q^2 + 5");
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("q +".parse::<LaurentPoly>().is_err());
        assert!("2*".parse::<LaurentPoly>().is_err());
        assert!("x^2".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn queries() {
        let p = lp("-2*q^3 + q^-1");
        assert_eq!(p.min_exponent(), Some(-1));
        assert_eq!(p.max_exponent(), Some(3));
        assert_eq!(p.leading_coeff(), BigInt::from(-2));
        assert!(!p.is_polynomial());
        assert_eq!(p.coeff_sum(), BigInt::from(-1));
        assert!(LaurentPoly::zero().is_polynomial());
        assert_eq!(lp("q + 1").pow(2), lp("q^2 + 2*q + 1"));
    }
}
