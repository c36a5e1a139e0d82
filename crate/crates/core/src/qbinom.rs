//! Gaussian binomial coefficients `[n choose i]_q`.
//!
//! For `n >= 0` the coefficient is built with the Pascal-type recurrence
//!
//! ```text
//! [n choose i] = [n-1 choose i-1] + q^i [n-1 choose i]
//! ```
//!
//! and for `n < 0` it is reduced to the polynomial regime through the
//! negation rule
//!
//! ```text
//! [n choose i] = (-1)^i q^(n*i - i(i-1)/2) [-n+i-1 choose i].
//! ```
//!
//! The defining product is kept separately as [`gauss_eval_product`], an
//! independent route used to check both of the above.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// `i(i-1)/2`.
pub fn choose2(i: i64) -> i64 {
    i * (i - 1) / 2
}

/// Memoizing evaluator for `[n choose i]_q`.
///
/// Safe to share between threads; a value computed twice is identical, so
/// concurrent fills are idempotent.
#[derive(Default)]
pub struct GaussTable {
    cache: RwLock<HashMap<(i64, u32), LaurentPoly>>,
}

impl GaussTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Like [`GaussTable::get`], but validates `i >= 0`.
    pub fn try_get(&self, n: i64, i: i64) -> Result<LaurentPoly> {
        let i = u32::try_from(i).map_err(|_| Error::NegativeIndex(i))?;
        Ok(self.get(n, i))
    }

    pub fn get(&self, n: i64, i: u32) -> LaurentPoly {
        if i == 0 {
            return LaurentPoly::one();
        }
        let ii = i64::from(i);
        if n < 0 {
            let sign = if i.is_multiple_of(2) { 1 } else { -1 };
            let reduced = self.get(-n + ii - 1, i);
            return reduced.shift(n * ii - choose2(ii)).scale(&BigInt::from(sign));
        }
        if n < ii {
            return LaurentPoly::zero();
        }
        if let Some(hit) = self.lookup(n, i) {
            return hit;
        }
        self.fill(n, i)
    }

    fn lookup(&self, n: i64, i: u32) -> Option<LaurentPoly> {
        self.cache
            .read()
            .unwrap_or_else(|e| e.into_inner())
            .get(&(n, i))
            .cloned()
    }

    /// Pascal triangle rows `0..=n`, columns `0..=i`, reusing cached cells.
    fn fill(&self, n: i64, i: u32) -> LaurentPoly {
        let width = i as usize + 1;
        let mut prev: Vec<LaurentPoly> = vec![LaurentPoly::zero(); width];
        prev[0] = LaurentPoly::one();
        let mut fresh = Vec::new();
        for m in 1..=n {
            let mut row = vec![LaurentPoly::zero(); width];
            row[0] = LaurentPoly::one();
            for c in 1..width {
                if (c as i64) > m {
                    break;
                }
                if let Some(hit) = self.lookup(m, c as u32) {
                    row[c] = hit;
                    continue;
                }
                let mut cell = prev[c - 1].clone();
                cell += prev[c].shift(c as i64);
                fresh.push(((m, c as u32), cell.clone()));
                row[c] = cell;
            }
            prev = row;
        }
        let mut cache = self.cache.write().unwrap_or_else(|e| e.into_inner());
        cache.extend(fresh);
        prev.pop().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.cache.read().unwrap_or_else(|e| e.into_inner()).len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `[n choose i]_q` as an exact Laurent polynomial.
///
/// Total over all integers `n`; `i` must be nonnegative.
pub fn gauss(n: i64, i: i64) -> Result<LaurentPoly> {
    GaussTable::new().try_get(n, i)
}

/// The defining product `prod_{j<i} (q0^(n-j) - 1) / (q0^(i-j) - 1)`,
/// evaluated directly in exact rationals.
pub fn gauss_eval_product(n: i64, i: i64, q0: i64) -> Result<BigRational> {
    if i < 0 {
        return Err(Error::NegativeIndex(i));
    }
    if q0 < 2 {
        return Err(Error::EvalPoint(q0));
    }
    let base = BigRational::from_integer(BigInt::from(q0));
    let power = |e: i64| -> BigRational {
        let p = num_traits::pow(base.clone(), e.unsigned_abs() as usize);
        if e < 0 {
            p.recip()
        } else {
            p
        }
    };
    let one = BigRational::one();
    let mut acc = BigRational::one();
    for j in 0..i {
        let num = power(n - j) - &one;
        if num.is_zero() {
            return Ok(BigRational::zero());
        }
        let den = power(i - j) - &one;
        acc = acc * num / den;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn zero_index_is_one() {
        for n in [-5, 0, 7] {
            assert_eq!(gauss(n, 0).unwrap(), LaurentPoly::one());
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(gauss(4, 2).unwrap(), lp("q^4 + q^3 + 2*q^2 + q + 1"));
        assert_eq!(gauss(2, 1).unwrap(), lp("q + 1"));
        assert_eq!(gauss(-1, 1).unwrap(), lp("-q^-1"));
        assert!(gauss(3, 5).unwrap().is_zero());
        assert_eq!(gauss(-2, 1).unwrap(), lp("-q^-1 - q^-2"));
    }

    #[test]
    fn negative_index_rejected() {
        assert_eq!(gauss(3, -1), Err(Error::NegativeIndex(-1)));
        assert_eq!(gauss_eval_product(3, -2, 2), Err(Error::NegativeIndex(-2)));
        assert_eq!(gauss_eval_product(3, 1, 1), Err(Error::EvalPoint(1)));
    }

    #[test]
    fn product_formula() {
        assert_eq!(gauss_eval_product(4, 2, 2).unwrap(), rat(35, 1));
        assert_eq!(gauss_eval_product(-9, 0, 3).unwrap(), rat(1, 1));
        assert_eq!(gauss_eval_product(-2, 1, 2).unwrap(), rat(-3, 4));
        assert_eq!(gauss(-2, 1).unwrap().eval(2).unwrap(), rat(-3, 4));
        assert_eq!(gauss_eval_product(2, 3, 5).unwrap(), rat(0, 1));
    }

    #[test]
    fn cache_reuse_is_consistent() {
        let table = GaussTable::new();
        let a = table.get(9, 4);
        assert!(!table.is_empty());
        let b = table.get(9, 4);
        assert_eq!(a, b);
        // a smaller entry served from the cache agrees with a fresh table
        assert_eq!(table.get(7, 3), GaussTable::new().get(7, 3));
        assert_eq!(table.get(-6, 3), gauss(-6, 3).unwrap());
    }

    #[test]
    fn large_coefficients_exceed_u64() {
        let g = gauss(70, 35).unwrap();
        assert_eq!(g.max_exponent(), Some(35 * 35));
        let binom: BigInt = (1..=35u32).fold(BigInt::one(), |acc, j| acc * (35 + j) / j);
        assert_eq!(g.coeff_sum(), binom);
        assert!(binom > BigInt::from(u64::MAX));
    }
}
