//! Eigenvalues and multiplicities of the q-Kneser graph `qK(v, k)`.
//!
//! Two closed forms for the eigenvalue `lambda_j` are provided and kept
//! independent of each other:
//!
//! - [`delsarte_eigenvalue`], the alternating sum
//!   `(-1)^j q^((k-j)j + C(j,2)) sum_s (-1)^s q^C(s,2) [k-j, s] [v-2j-s, v-k-j]`;
//! - [`simple_eigenvalue`], the single term
//!   `(-1)^j q^(C(k,2) + C(k-j+1,2)) [v-k-j, v-2k]`.
//!
//! Multiplicities are `1` for `j = 0` and `[v, j] - [v, j-1]` otherwise.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::prime_power;
use crate::laurent::LaurentPoly;
use crate::qbinom::{choose2, GaussTable};

fn check_graph(v: u32, k: u32) -> Result<()> {
    if v < 2 * k {
        return Err(if k <= v {
            Error::NullGraph { v, k }
        } else {
            Error::DimensionTooLarge { v, k }
        });
    }
    Ok(())
}

fn check_index(k: u32, j: u32) -> Result<()> {
    if j > k {
        return Err(Error::IndexOutOfRange { j, k });
    }
    Ok(())
}

fn signed(j: u32, p: LaurentPoly) -> LaurentPoly {
    if j.is_multiple_of(2) {
        p
    } else {
        -p
    }
}

/// Eigenvalue evaluation with a caller-supplied coefficient cache.
pub struct SpectrumCalc<'a> {
    table: &'a GaussTable,
}

impl<'a> SpectrumCalc<'a> {
    pub fn new(table: &'a GaussTable) -> Self {
        Self { table }
    }

    fn g(&self, n: i64, i: i64) -> LaurentPoly {
        self.table.get(n, i as u32)
    }

    pub fn delsarte_eigenvalue(&self, v: u32, k: u32, j: u32) -> Result<LaurentPoly> {
        check_graph(v, k)?;
        check_index(k, j)?;
        let (v, k, j) = (i64::from(v), i64::from(k), i64::from(j));
        let inner: LaurentPoly = (0..=k - j)
            .map(|s| {
                let term = &self.g(k - j, s) * &self.g(v - 2 * j - s, v - k - j);
                let term = term.shift(choose2(s));
                if s % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum();
        Ok(signed(j as u32, inner.shift((k - j) * j + choose2(j))))
    }

    pub fn simple_eigenvalue(&self, v: u32, k: u32, j: u32) -> Result<LaurentPoly> {
        check_graph(v, k)?;
        check_index(k, j)?;
        let (v, k, jj) = (i64::from(v), i64::from(k), i64::from(j));
        let exp = choose2(k) + choose2(k - jj + 1);
        Ok(signed(j, self.g(v - k - jj, v - 2 * k).shift(exp)))
    }

    pub fn multiplicity(&self, v: u32, k: u32, j: u32) -> Result<LaurentPoly> {
        check_graph(v, k)?;
        if k == 0 {
            return Err(Error::ZeroDimension(k));
        }
        check_index(k, j)?;
        if j == 0 {
            return Ok(LaurentPoly::one());
        }
        let v = i64::from(v);
        let j = i64::from(j);
        Ok(&self.g(v, j) - &self.g(v, j - 1))
    }

    pub fn spectrum_table(&self, v: u32, k: u32) -> Result<SpectrumTable> {
        check_graph(v, k)?;
        if k == 0 {
            return Err(Error::ZeroDimension(k));
        }
        let entries = (0..=k)
            .map(|j| {
                Ok(SpectrumEntry {
                    j,
                    eigenvalue: self.simple_eigenvalue(v, k, j)?,
                    multiplicity: self.multiplicity(v, k, j)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SpectrumTable { v, k, entries })
    }
}

pub fn delsarte_eigenvalue(v: u32, k: u32, j: u32) -> Result<LaurentPoly> {
    SpectrumCalc::new(&GaussTable::new()).delsarte_eigenvalue(v, k, j)
}

pub fn simple_eigenvalue(v: u32, k: u32, j: u32) -> Result<LaurentPoly> {
    SpectrumCalc::new(&GaussTable::new()).simple_eigenvalue(v, k, j)
}

pub fn multiplicity(v: u32, k: u32, j: u32) -> Result<LaurentPoly> {
    SpectrumCalc::new(&GaussTable::new()).multiplicity(v, k, j)
}

pub fn spectrum_table(v: u32, k: u32) -> Result<SpectrumTable> {
    SpectrumCalc::new(&GaussTable::new()).spectrum_table(v, k)
}

/// The spectrum of `qK(v, k)` at a concrete prime power `q0`.
pub fn evaluated_spectrum(v: u32, k: u32, q0: u64) -> Result<EvaluatedSpectrum> {
    spectrum_table(v, k)?.evaluate(q0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    pub j: u32,
    pub eigenvalue: LaurentPoly,
    pub multiplicity: LaurentPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumTable {
    pub v: u32,
    pub k: u32,
    pub entries: Vec<SpectrumEntry>,
}

impl SpectrumTable {
    /// Substitutes `q = q0`, which must be a prime power.
    pub fn evaluate(&self, q0: u64) -> Result<EvaluatedSpectrum> {
        if prime_power(q0).is_none() {
            return Err(Error::NotPrimePower(q0));
        }
        let q0i = BigInt::from(q0);
        let entries = self
            .entries
            .iter()
            .map(|e| EvaluatedEntry {
                j: e.j,
                eigenvalue: e.eigenvalue.eval_big(&q0i).to_integer(),
                multiplicity: e.multiplicity.eval_big(&q0i).to_integer(),
            })
            .collect();
        Ok(EvaluatedSpectrum {
            v: self.v,
            k: self.k,
            q: q0,
            entries,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvaluatedEntry {
    pub j: u32,
    #[serde(serialize_with = "crate::serde_util::bigint")]
    pub eigenvalue: BigInt,
    #[serde(serialize_with = "crate::serde_util::bigint")]
    pub multiplicity: BigInt,
}

/// Integer spectrum of `qK(v, k)` over `GF(q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvaluatedSpectrum {
    pub v: u32,
    pub k: u32,
    pub q: u64,
    pub entries: Vec<EvaluatedEntry>,
}

impl EvaluatedSpectrum {
    /// Builds a prediction directly from `(eigenvalue, multiplicity)` pairs.
    pub fn from_pairs(v: u32, k: u32, q: u64, pairs: &[(i64, i64)]) -> Self {
        let entries = pairs
            .iter()
            .enumerate()
            .map(|(j, (lam, mult))| EvaluatedEntry {
                j: j as u32,
                eigenvalue: BigInt::from(*lam),
                multiplicity: BigInt::from(*mult),
            })
            .collect();
        Self { v, k, q, entries }
    }

    pub fn pairs(&self) -> Vec<(BigInt, BigInt)> {
        self.entries
            .iter()
            .map(|e| (e.eigenvalue.clone(), e.multiplicity.clone()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn delsarte_examples() {
        assert_eq!(delsarte_eigenvalue(4, 2, 1).unwrap(), lp("-q^2"));
        assert_eq!(delsarte_eigenvalue(4, 2, 2).unwrap(), lp("q"));
        assert_eq!(delsarte_eigenvalue(4, 2, 0).unwrap(), lp("q^4"));
    }

    #[test]
    fn simple_examples() {
        assert_eq!(simple_eigenvalue(4, 2, 0).unwrap(), lp("q^4"));
        assert_eq!(simple_eigenvalue(4, 2, 1).unwrap(), lp("-q^2"));
        assert_eq!(simple_eigenvalue(4, 2, 2).unwrap(), lp("q"));
        assert_eq!(simple_eigenvalue(5, 2, 1).unwrap(), lp("-q^3 - q^2"));
        for k in 0..5u32 {
            assert_eq!(
                simple_eigenvalue(2 * k, k, 0).unwrap(),
                LaurentPoly::monomial(1, i64::from(k * k))
            );
        }
    }

    #[test]
    fn multiplicity_examples() {
        assert!(multiplicity(4, 2, 0).unwrap().is_one());
        let m1 = multiplicity(4, 2, 1).unwrap().eval_integer(2).unwrap();
        assert_eq!(m1, Some(14.into()));
        let m2 = multiplicity(4, 2, 2).unwrap().eval_integer(2).unwrap();
        assert_eq!(m2, Some(20.into()));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(simple_eigenvalue(3, 2, 0), Err(Error::NullGraph { v: 3, k: 2 }));
        assert_eq!(delsarte_eigenvalue(3, 2, 0), Err(Error::NullGraph { v: 3, k: 2 }));
        assert_eq!(
            simple_eigenvalue(1, 2, 0),
            Err(Error::DimensionTooLarge { v: 1, k: 2 })
        );
        assert_eq!(
            simple_eigenvalue(6, 2, 3),
            Err(Error::IndexOutOfRange { j: 3, k: 2 })
        );
        assert_eq!(multiplicity(6, 2, 5), Err(Error::IndexOutOfRange { j: 5, k: 2 }));
        assert_eq!(spectrum_table(4, 0), Err(Error::ZeroDimension(0)));
        assert_eq!(evaluated_spectrum(4, 2, 6), Err(Error::NotPrimePower(6)));
        assert_eq!(evaluated_spectrum(4, 2, 1), Err(Error::NotPrimePower(1)));
    }

    #[test]
    fn evaluated_tables() {
        let pairs = |v, k, q| -> Vec<(i64, i64)> {
            evaluated_spectrum(v, k, q)
                .unwrap()
                .pairs()
                .into_iter()
                .map(|(l, m)| (l.try_into().unwrap(), m.try_into().unwrap()))
                .collect()
        };
        assert_eq!(pairs(4, 2, 2), vec![(16, 1), (-4, 14), (2, 20)]);
        assert_eq!(pairs(5, 2, 2), vec![(112, 1), (-12, 30), (2, 124)]);
        assert_eq!(pairs(4, 2, 3), vec![(81, 1), (-9, 39), (3, 90)]);
    }
}
