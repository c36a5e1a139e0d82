//! Exact verification of q-binomial summation identities.
//!
//! Each check expands both sides of an identity for one parameter tuple as
//! Laurent polynomials in `q` and compares them structurally. Equality of the
//! two polynomials proves the instance for every `q` at once.
//!
//! The identities checked:
//!
//! | id           | statement                                                                 |
//! |--------------|---------------------------------------------------------------------------|
//! | `pascal`     | `[n,i] = [n-1,i-1] + q^i [n-1,i]`                                         |
//! | `lemma1`     | `[n,i] = (-1)^i q^(ni - C(i,2)) [-n+i-1,i]`                               |
//! | `lemma2`     | `sum_{s<=a} (-1)^s q^C(s,2) [n,s] = q^(na) [a-n,a]`                        |
//! | `lemma3`     | `sum_{s<=a} (-1)^s q^C(s,2) [m,s][a-s,t] = q^(m(a-t)) [a-m,a-t]`, `t<=a<=m` |
//! | `theorem2`   | same sum with `s <= m`, for `a >= m`, `a >= t`                             |
//! | `corollary1` | `sum_{s<=m} (-1)^s q^C(s,2) [m,s][a-s,a-m] = q^(m^2) [a-m,m]`, `a >= m`    |

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::qbinom::{choose2, gauss_eval_product, GaussTable};

/// Largest magnitude accepted for any grid parameter.
pub const GRID_LIMIT: i64 = 40;

/// Evaluation points for the product-formula cross-check of the negation rule.
pub const ORACLE_POINTS: [i64; 3] = [2, 3, 5];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IdentityId {
    Pascal,
    Lemma1,
    Lemma2,
    Lemma3,
    Theorem2,
    Corollary1,
}

impl IdentityId {
    pub const ALL: [IdentityId; 6] = [
        IdentityId::Pascal,
        IdentityId::Lemma1,
        IdentityId::Lemma2,
        IdentityId::Lemma3,
        IdentityId::Theorem2,
        IdentityId::Corollary1,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Pascal => "pascal",
            IdentityId::Lemma1 => "lemma1",
            IdentityId::Lemma2 => "lemma2",
            IdentityId::Lemma3 => "lemma3",
            IdentityId::Theorem2 => "theorem2",
            IdentityId::Corollary1 => "corollary1",
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            IdentityId::Pascal | IdentityId::Lemma1 => &["n", "i"],
            IdentityId::Lemma2 => &["n", "a"],
            IdentityId::Lemma3 | IdentityId::Theorem2 => &["m", "a", "t"],
            IdentityId::Corollary1 => &["m", "a"],
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| format!("unknown identity {s:?}"))
    }
}

/// Parameter ranges for a grid run.
///
/// `n` ranges over `n_min..=n_max` for the single-index identities (`pascal`,
/// `lemma1`, `lemma2`), whose lower index runs over `0..=index_max`. The
/// three-parameter identities take every admissible `m, a, t` in
/// `0..=param_max`. A negative maximum or `n_min > n_max` gives an empty grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridBounds {
    pub n_min: i64,
    pub n_max: i64,
    pub index_max: i64,
    pub param_max: i64,
}

impl GridBounds {
    pub fn new(n_min: i64, n_max: i64, index_max: i64, param_max: i64) -> Result<Self> {
        for value in [n_min, n_max, index_max, param_max] {
            if value.abs() > GRID_LIMIT {
                return Err(Error::GridLimit {
                    value,
                    limit: GRID_LIMIT,
                });
            }
        }
        Ok(Self {
            n_min,
            n_max,
            index_max,
            param_max,
        })
    }

    /// `n` in `-max..=max`, every other parameter in `0..=max`.
    pub fn uniform(max: i64) -> Result<Self> {
        Self::new(-max, max, max, max)
    }

    pub fn empty() -> Self {
        Self {
            n_min: 0,
            n_max: -1,
            index_max: -1,
            param_max: -1,
        }
    }

    /// Admissible parameter tuples for `id`, in lexicographic order.
    pub fn tuples(&self, id: IdentityId) -> Vec<Vec<i64>> {
        let ns = self.n_min..=self.n_max;
        let ps = 0..=self.param_max;
        let mut out = Vec::new();
        match id {
            IdentityId::Pascal => {
                for n in ns {
                    out.extend((1..=self.index_max).map(|i| vec![n, i]));
                }
            }
            IdentityId::Lemma1 | IdentityId::Lemma2 => {
                for n in ns {
                    out.extend((0..=self.index_max).map(|i| vec![n, i]));
                }
            }
            IdentityId::Lemma3 => {
                for m in ps {
                    for a in 0..=m {
                        out.extend((0..=a).map(|t| vec![m, a, t]));
                    }
                }
            }
            IdentityId::Theorem2 => {
                for m in ps.clone() {
                    for a in m..=self.param_max {
                        out.extend((0..=a).map(|t| vec![m, a, t]));
                    }
                }
            }
            IdentityId::Corollary1 => {
                for m in ps {
                    out.extend((m..=self.param_max).map(|a| vec![m, a]));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityFailure {
    pub params: Vec<i64>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub bounds: GridBounds,
    pub instances: usize,
    pub failures: Vec<IdentityFailure>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Identity checker sharing one Gaussian-coefficient cache across checks.
///
/// `with_rhs_exponent_offset` deliberately breaks every identity by adding a
/// constant to the exponent of the monomial factor on its right-hand side.
/// It exists for negative controls.
#[derive(Default)]
pub struct IdentityChecker {
    table: GaussTable,
    rhs_offset: i64,
}

fn sign(s: i64) -> BigInt {
    BigInt::from(if s % 2 == 0 { 1 } else { -1 })
}

fn domain(identity: &'static str, reason: impl Into<String>) -> Error {
    Error::IdentityDomain {
        identity,
        reason: reason.into(),
    }
}

impl IdentityChecker {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_rhs_exponent_offset(offset: i64) -> Self {
        Self {
            table: GaussTable::new(),
            rhs_offset: offset,
        }
    }

    fn g(&self, n: i64, i: i64) -> LaurentPoly {
        debug_assert!(i >= 0);
        self.table.get(n, i as u32)
    }

    /// `(-1)^s q^C(s,2)` times `term`.
    fn alternating(&self, s: i64, term: LaurentPoly) -> LaurentPoly {
        term.shift(choose2(s)).scale(&sign(s))
    }

    /// Both sides of the identity at `params`, after validating the domain.
    pub fn sides(&self, id: IdentityId, params: &[i64]) -> Result<(LaurentPoly, LaurentPoly)> {
        let want = id.param_names().len();
        if params.len() != want {
            return Err(domain(id.as_str(), format!("expected {want} parameters")));
        }
        let off = self.rhs_offset;
        match id {
            IdentityId::Pascal => {
                let (n, i) = (params[0], params[1]);
                if i < 1 {
                    return Err(domain("pascal", format!("i = {i} must be >= 1")));
                }
                let lhs = self.g(n, i);
                let rhs = self.g(n - 1, i - 1) + self.g(n - 1, i).shift(i + off);
                Ok((lhs, rhs))
            }
            IdentityId::Lemma1 => {
                let (n, i) = (params[0], params[1]);
                if i < 0 {
                    return Err(domain("lemma1", format!("i = {i} must be >= 0")));
                }
                let lhs = self.g(n, i);
                let rhs = self
                    .g(-n + i - 1, i)
                    .shift(n * i - choose2(i) + off)
                    .scale(&sign(i));
                Ok((lhs, rhs))
            }
            IdentityId::Lemma2 => {
                let (n, a) = (params[0], params[1]);
                if a < 0 {
                    return Err(domain("lemma2", format!("a = {a} must be >= 0")));
                }
                let lhs = (0..=a).map(|s| self.alternating(s, self.g(n, s))).sum();
                let rhs = self.g(a - n, a).shift(n * a + off);
                Ok((lhs, rhs))
            }
            IdentityId::Lemma3 | IdentityId::Theorem2 => {
                let (m, a, t) = (params[0], params[1], params[2]);
                let upper = if id == IdentityId::Lemma3 {
                    if !(0 <= t && t <= a && a <= m) {
                        return Err(domain(
                            "lemma3",
                            format!("need 0 <= t <= a <= m, got m={m} a={a} t={t}"),
                        ));
                    }
                    a
                } else {
                    if m < 0 || t < 0 || a < m || a < t {
                        return Err(domain(
                            "theorem2",
                            format!("need a >= m >= 0 and a >= t >= 0, got m={m} a={a} t={t}"),
                        ));
                    }
                    m
                };
                Ok(self.mixed_sum_sides(m, a, t, upper))
            }
            IdentityId::Corollary1 => {
                let (m, a) = (params[0], params[1]);
                if m < 0 || a < m {
                    return Err(domain(
                        "corollary1",
                        format!("need a >= m >= 0, got m={m} a={a}"),
                    ));
                }
                let lhs = (0..=m)
                    .map(|s| self.alternating(s, &self.g(m, s) * &self.g(a - s, a - m)))
                    .sum();
                let rhs = self.g(a - m, m).shift(m * m + off);
                Ok((lhs, rhs))
            }
        }
    }

    fn mixed_sum_sides(&self, m: i64, a: i64, t: i64, upper: i64) -> (LaurentPoly, LaurentPoly) {
        let lhs = (0..=upper)
            .map(|s| self.alternating(s, &self.g(m, s) * &self.g(a - s, t)))
            .sum();
        let rhs = self.g(a - m, a - t).shift(m * (a - t) + self.rhs_offset);
        (lhs, rhs)
    }

    /// Negation rule routed through the defining product at [`ORACLE_POINTS`].
    fn lemma1_by_product(&self, n: i64, i: i64) -> Result<bool> {
        for q0 in ORACLE_POINTS {
            let lhs = gauss_eval_product(n, i, q0)?;
            let exp = n * i - choose2(i) + self.rhs_offset;
            let base = BigRational::from_integer(BigInt::from(q0));
            let mono = num_traits::pow(base, exp.unsigned_abs() as usize);
            let mono = if exp < 0 { mono.recip() } else { mono };
            let rhs = gauss_eval_product(-n + i - 1, i, q0)? * mono
                * BigRational::from_integer(sign(i));
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn check(&self, id: IdentityId, params: &[i64]) -> Result<bool> {
        let (lhs, rhs) = self.sides(id, params)?;
        let mut ok = lhs == rhs;
        match id {
            IdentityId::Lemma1 => {
                ok &= self.lemma1_by_product(params[0], params[1])?;
            }
            IdentityId::Corollary1 => {
                let (m, a) = (params[0], params[1]);
                let (th_lhs, th_rhs) = self.sides(IdentityId::Theorem2, &[m, a, a - m])?;
                ok &= th_lhs == lhs && th_rhs == rhs;
            }
            _ => {}
        }
        Ok(ok)
    }

    pub fn check_pascal(&self, n: i64, i: i64) -> Result<bool> {
        self.check(IdentityId::Pascal, &[n, i])
    }

    pub fn check_lemma1(&self, n: i64, i: i64) -> Result<bool> {
        self.check(IdentityId::Lemma1, &[n, i])
    }

    pub fn check_lemma2(&self, n: i64, a: i64) -> Result<bool> {
        self.check(IdentityId::Lemma2, &[n, a])
    }

    pub fn check_lemma3(&self, m: i64, a: i64, t: i64) -> Result<bool> {
        self.check(IdentityId::Lemma3, &[m, a, t])
    }

    pub fn check_theorem2(&self, m: i64, a: i64, t: i64) -> Result<bool> {
        self.check(IdentityId::Theorem2, &[m, a, t])
    }

    pub fn check_corollary1(&self, m: i64, a: i64) -> Result<bool> {
        self.check(IdentityId::Corollary1, &[m, a])
    }

    /// Checks every admissible tuple in `bounds`. Failures are listed in
    /// tuple order.
    pub fn run_grid(&self, id: IdentityId, bounds: &GridBounds) -> IdentityReport {
        let tuples = bounds.tuples(id);
        let failures: Vec<IdentityFailure> = tuples
            .par_iter()
            .filter_map(|params| {
                // tuples are admissible by construction
                let ok = self.check(id, params).unwrap_or(false);
                if ok {
                    return None;
                }
                let (lhs, rhs) = self.sides(id, params).ok()?;
                Some(IdentityFailure {
                    params: params.clone(),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                })
            })
            .collect();
        IdentityReport {
            identity: id,
            bounds: *bounds,
            instances: tuples.len(),
            failures,
        }
    }
}

pub fn check_pascal(n: i64, i: i64) -> Result<bool> {
    IdentityChecker::new().check_pascal(n, i)
}

pub fn check_lemma1(n: i64, i: i64) -> Result<bool> {
    IdentityChecker::new().check_lemma1(n, i)
}

pub fn check_lemma2(n: i64, a: i64) -> Result<bool> {
    IdentityChecker::new().check_lemma2(n, a)
}

pub fn check_lemma3(m: i64, a: i64, t: i64) -> Result<bool> {
    IdentityChecker::new().check_lemma3(m, a, t)
}

pub fn check_theorem2(m: i64, a: i64, t: i64) -> Result<bool> {
    IdentityChecker::new().check_theorem2(m, a, t)
}

pub fn check_corollary1(m: i64, a: i64) -> Result<bool> {
    IdentityChecker::new().check_corollary1(m, a)
}

pub fn run_grid(id: IdentityId, bounds: &GridBounds) -> IdentityReport {
    IdentityChecker::new().run_grid(id, bounds)
}
