//! Brute-force ground truth for q-Kneser spectra.
//!
//! Every `k`-subspace of `GF(q)^v` is enumerated as its reduced row echelon
//! form, the trivial-intersection adjacency matrix is built, and a predicted
//! integer spectrum is certified exactly:
//!
//! 1. `prod_j (A - lambda_j I) = 0`. `A` is symmetric and so diagonalizable,
//!    which puts every eigenvalue of `A` in `{lambda_j}`.
//! 2. `tr(A^m) = sum_j mult_j * lambda_j^m` for `m = 0..=k`. With distinct
//!    `lambda_j` the Vandermonde system is invertible, which pins down the
//!    multiplicities.
//!
//! No floating point is involved anywhere.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::qbinom::GaussTable;
use crate::spectrum::EvaluatedSpectrum;

/// Default cap on the number of enumerated vertices.
pub const DEFAULT_VERTEX_BUDGET: u64 = 2000;

/// A `k`-dimensional subspace of `GF(q)^v`, stored as its RREF basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    v: usize,
    q: u64,
    pivots: Vec<usize>,
    /// `k x v`, row-major.
    basis: Vec<FieldElem>,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.v
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &[FieldElem] {
        &self.basis
    }

    pub fn row(&self, r: usize) -> &[FieldElem] {
        &self.basis[r * self.v..(r + 1) * self.v]
    }

    /// Row-reduces the row space of `rows` (each of length `v`). Returns the
    /// canonical representative; its dimension may be below `rows.len()`.
    pub fn from_rows(ctx: &FieldCtx, v: usize, rows: &[Vec<FieldElem>]) -> Result<Self> {
        let mut m: Vec<FieldElem> = Vec::with_capacity(rows.len() * v);
        for row in rows {
            if row.len() != v {
                return Err(Error::AmbientMismatch);
            }
            m.extend_from_slice(row);
        }
        let pivots = rref(ctx, &mut m, rows.len(), v);
        m.truncate(pivots.len() * v);
        Ok(Self {
            v,
            q: ctx.order(),
            pivots,
            basis: m,
        })
    }

    /// Checks the RREF invariants: unit pivots, cleared pivot columns,
    /// strictly increasing pivots, zeros left of each pivot.
    pub fn is_rref(&self) -> bool {
        if !self.pivots.windows(2).all(|w| w[0] < w[1]) {
            return false;
        }
        for (r, &pc) in self.pivots.iter().enumerate() {
            let row = self.row(r);
            if row[pc] != FieldElem::ONE || row[..pc].iter().any(|x| !x.is_zero()) {
                return false;
            }
            for (other, _) in self.pivots.iter().enumerate() {
                if other != r && !self.row(other)[pc].is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Space-separated element codes, row-major.
    pub fn encode_line(&self) -> String {
        let mut line = String::new();
        for (idx, x) in self.basis.iter().enumerate() {
            if idx > 0 {
                line.push(' ');
            }
            let _ = write!(line, "{}", x.code());
        }
        line
    }
}

/// In-place RREF of a `rows x cols` row-major matrix; returns pivot columns.
/// Nonzero rows end up first.
fn rref(ctx: &FieldCtx, m: &mut [FieldElem], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(found) = (r..rows).find(|&i| !m[i * cols + c].is_zero()) else {
            continue;
        };
        if found != r {
            for x in 0..cols {
                m.swap(found * cols + x, r * cols + x);
            }
        }
        let inv = ctx.inv(m[r * cols + c]).expect("pivot is nonzero");
        for x in 0..cols {
            m[r * cols + x] = ctx.mul(m[r * cols + x], inv);
        }
        for i in 0..rows {
            let factor = m[i * cols + c];
            if i == r || factor.is_zero() {
                continue;
            }
            for x in 0..cols {
                let sub = ctx.mul(factor, m[r * cols + x]);
                m[i * cols + x] = ctx.sub(m[i * cols + x], sub);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank by forward elimination only.
fn rank(ctx: &FieldCtx, m: &mut [FieldElem], rows: usize, cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(found) = (r..rows).find(|&i| !m[i * cols + c].is_zero()) else {
            continue;
        };
        if found != r {
            for x in c..cols {
                m.swap(found * cols + x, r * cols + x);
            }
        }
        let inv = ctx.inv(m[r * cols + c]).expect("pivot is nonzero");
        for i in r + 1..rows {
            let factor = ctx.mul(m[i * cols + c], inv);
            if factor.is_zero() {
                continue;
            }
            for x in c..cols {
                let sub = ctx.mul(factor, m[r * cols + x]);
                m[i * cols + x] = ctx.sub(m[i * cols + x], sub);
            }
        }
        r += 1;
    }
    r
}

/// Predicted number of `k`-subspaces of `GF(q)^v`.
pub fn subspace_count(v: u32, k: u32, q: u64) -> BigInt {
    GaussTable::new()
        .get(i64::from(v), k)
        .eval_big(&BigInt::from(q))
        .to_integer()
}

/// All `k`-subspaces of `GF(q)^v` in RREF, sorted by pivot set and then by
/// row-major entry codes.
///
/// Each pivot-column set is expanded by filling its free positions with every
/// combination of field elements; RREF uniqueness makes this duplicate-free.
pub fn enumerate_subspaces(ctx: &FieldCtx, v: usize, k: usize, budget: u64) -> Result<Vec<Subspace>> {
    if k > v {
        return Err(Error::DimensionTooLarge {
            v: v as u32,
            k: k as u32,
        });
    }
    let predicted = subspace_count(v as u32, k as u32, ctx.order());
    if predicted > BigInt::from(budget) {
        return Err(Error::BudgetExceeded {
            predicted: predicted.to_string(),
            budget,
        });
    }
    let q = ctx.order() as u32;
    let mut out = Vec::with_capacity(predicted.to_usize().unwrap_or(0));
    for pivots in combinations(v, k) {
        let mut free = Vec::new();
        for (r, &pc) in pivots.iter().enumerate() {
            for c in pc + 1..v {
                if !pivots.contains(&c) {
                    free.push(r * v + c);
                }
            }
        }
        let mut template = vec![FieldElem::ZERO; k * v];
        for (r, &pc) in pivots.iter().enumerate() {
            template[r * v + pc] = FieldElem::ONE;
        }
        // odometer over free entries, last position fastest
        let mut digits = vec![0u32; free.len()];
        loop {
            let mut basis = template.clone();
            for (slot, d) in free.iter().zip(&digits) {
                basis[*slot] = ctx.elem(*d).expect("digit below q");
            }
            out.push(Subspace {
                v,
                q: ctx.order(),
                pivots: pivots.clone(),
                basis,
            });
            let mut pos = digits.len();
            let advanced = loop {
                if pos == 0 {
                    break false;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < q {
                    break true;
                }
                digits[pos] = 0;
            };
            if !advanced {
                break;
            }
        }
    }
    Ok(out)
}

/// `k`-element subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for x in i + 1..k {
            cur[x] = cur[x - 1] + 1;
        }
    }
}

/// `dim(a ∩ b) = dim a + dim b - rank [a; b]`.
pub fn intersection_dim(ctx: &FieldCtx, a: &Subspace, b: &Subspace) -> Result<usize> {
    if a.v != b.v || a.q != b.q || a.q != ctx.order() {
        return Err(Error::AmbientMismatch);
    }
    Ok(intersection_dim_unchecked(ctx, a, b))
}

fn intersection_dim_unchecked(ctx: &FieldCtx, a: &Subspace, b: &Subspace) -> usize {
    let rows = a.dim() + b.dim();
    let mut stacked = Vec::with_capacity(rows * a.v);
    stacked.extend_from_slice(&a.basis);
    stacked.extend_from_slice(&b.basis);
    rows - rank(ctx, &mut stacked, rows, a.v)
}

/// Symmetric 0/1 adjacency matrix with bit-packed rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adjacency {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Adjacency {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        Self {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, on: bool) {
        let word = &mut self.bits[i * self.words + j / 64];
        let mask = 1u64 << (j % 64);
        if on {
            *word |= mask;
        } else {
            *word &= !mask;
        }
    }

    pub fn degree(&self, i: usize) -> usize {
        self.bits[i * self.words..(i + 1) * self.words]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| self.get(i, j))
    }

    /// Newline-delimited rows of `0`/`1` characters.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.n * (self.n + 1));
        for i in 0..self.n {
            out.extend((0..self.n).map(|j| if self.get(i, j) { '1' } else { '0' }));
            out.push('\n');
        }
        out
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in self.neighbors(i) {
                m.set(i, j, BigInt::one());
            }
        }
        m
    }
}

/// The q-Kneser graph on `subspaces`: adjacent iff the intersection is zero.
/// Loops are never present.
pub fn build_adjacency(ctx: &FieldCtx, subspaces: &[Subspace]) -> Result<Adjacency> {
    if let Some(first) = subspaces.first() {
        if subspaces
            .iter()
            .any(|s| s.v != first.v || s.q != ctx.order())
        {
            return Err(Error::AmbientMismatch);
        }
    }
    let n = subspaces.len();
    let upper: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (i + 1..n)
                .filter(|&j| intersection_dim_unchecked(ctx, &subspaces[i], &subspaces[j]) == 0)
                .collect()
        })
        .collect();
    let mut adj = Adjacency::empty(n);
    for (i, row) in upper.iter().enumerate() {
        for &j in row {
            adj.set(i, j, true);
            adj.set(j, i, true);
        }
    }
    Ok(adj)
}

/// Dense square matrix of big integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::OrderMismatch {
                    matrix: row.len(),
                    expected: n,
                });
            }
            for (j, x) in row.iter().enumerate() {
                m.data[i * n + j] = BigInt::from(*x);
            }
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.n + j] = x;
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| &self.data[i * self.n + i]).sum()
    }

    pub fn row_sum(&self, i: usize) -> BigInt {
        self.data[i * self.n..(i + 1) * self.n].iter().sum()
    }

    /// First off-symmetric position `(i, j)` with `i < j`, if any.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j) != self.get(j, i))
    }

    pub fn first_nonzero(&self) -> Option<(usize, usize, &BigInt)> {
        self.data
            .iter()
            .position(|x| !x.is_zero())
            .map(|p| (p / self.n, p % self.n, &self.data[p]))
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &BigInt, other: &IntMatrix) {
        if c.is_zero() {
            return;
        }
        self.data
            .par_iter_mut()
            .zip(other.data.par_iter())
            .for_each(|(x, y)| {
                if !y.is_zero() {
                    *x += c * y;
                }
            });
    }

    /// `self * rhs`. Zero entries of `self` are skipped, so sparse 0/1 left
    /// factors cost one row addition per nonzero.
    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.n != rhs.n {
            return Err(Error::OrderMismatch {
                matrix: rhs.n,
                expected: self.n,
            });
        }
        let n = self.n;
        if let Some(out) = self.mul_small(rhs) {
            return Ok(out);
        }
        let mut out = IntMatrix::zeros(n);
        if n == 0 {
            return Ok(out);
        }
        out.data
            .par_chunks_mut(n)
            .enumerate()
            .for_each(|(i, out_row)| {
                for l in 0..n {
                    let a = &self.data[i * n + l];
                    if a.is_zero() {
                        continue;
                    }
                    let rhs_row = &rhs.data[l * n..(l + 1) * n];
                    if a.is_one() {
                        for (o, b) in out_row.iter_mut().zip(rhs_row) {
                            *o += b;
                        }
                    } else {
                        for (o, b) in out_row.iter_mut().zip(rhs_row) {
                            if !b.is_zero() {
                                *o += a * b;
                            }
                        }
                    }
                }
            });
        Ok(out)
    }
}

impl IntMatrix {
    fn max_abs(&self) -> Option<u64> {
        self.data.iter().try_fold(0u64, |acc, x| {
            x.magnitude().to_u64().map(|m| acc.max(m))
        })
    }

    /// Machine-word product, taken only when `n * max|a| * max|b|` provably
    /// fits in `i64`.
    fn mul_small(&self, rhs: &IntMatrix) -> Option<IntMatrix> {
        let n = self.n;
        let bound = u128::from(self.max_abs()?)
            .checked_mul(u128::from(rhs.max_abs()?))?
            .checked_mul(n as u128)?;
        if bound > i64::MAX as u128 {
            return None;
        }
        let to_small = |m: &IntMatrix| -> Vec<i64> {
            m.data.iter().map(|x| x.to_i64().expect("bounded")).collect()
        };
        let (a, b) = (to_small(self), to_small(rhs));
        let mut out = vec![0i64; n * n];
        out.par_chunks_mut(n.max(1)).enumerate().for_each(|(i, out_row)| {
            for l in 0..n {
                let x = a[i * n + l];
                if x == 0 {
                    continue;
                }
                for (o, y) in out_row.iter_mut().zip(&b[l * n..(l + 1) * n]) {
                    *o += x * y;
                }
            }
        });
        Some(IntMatrix {
            n,
            data: out.into_iter().map(BigInt::from).collect(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Residual {
    pub row: usize,
    pub col: usize,
    #[serde(serialize_with = "crate::serde_util::bigint")]
    pub value: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificationResult {
    pub v: u32,
    pub k: u32,
    pub q: u64,
    pub vertex_count: usize,
    /// Common row sum, or `None` when the graph is not regular.
    pub degree: Option<u64>,
    pub annihilation_ok: bool,
    pub moments_ok: bool,
    /// `tr(A^m)` for `m = 0..=k`, computed from the matrix.
    #[serde(serialize_with = "crate::serde_util::bigint_vec")]
    pub moments: Vec<BigInt>,
    /// `sum_j mult_j * lambda_j^m` for the same `m`.
    #[serde(serialize_with = "crate::serde_util::bigint_vec")]
    pub predicted_moments: Vec<BigInt>,
    /// First `m` whose moment disagrees.
    pub failed_moment: Option<usize>,
    /// First nonzero entry of the annihilating product, if any.
    pub residual: Option<Residual>,
    #[serde(serialize_with = "crate::serde_util::bigint_vec")]
    pub eigenvalues: Vec<BigInt>,
    /// Multiplicities solved from the measured moments; present only when
    /// they are nonnegative integers.
    #[serde(serialize_with = "crate::serde_util::opt_bigint_vec")]
    pub multiplicities: Option<Vec<BigInt>>,
}

impl CertificationResult {
    pub fn certified(&self) -> bool {
        self.annihilation_ok && self.moments_ok
    }
}

/// Coefficients of `prod_j (x - roots_j)`, constant term first.
fn poly_from_roots(roots: &[BigInt]) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::one()];
    for r in roots {
        let mut next = vec![BigInt::zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * r;
        }
        coeffs = next;
    }
    coeffs
}

/// Solves `sum_j x_j * lambda_j^m = moments[m]` exactly.
fn solve_vandermonde(lambdas: &[BigInt], moments: &[BigInt]) -> Vec<BigRational> {
    let size = lambdas.len();
    let mut rows: Vec<Vec<BigRational>> = (0..size)
        .map(|m| {
            let mut row: Vec<BigRational> = lambdas
                .iter()
                .map(|l| BigRational::from_integer(num_traits::pow(l.clone(), m)))
                .collect();
            row.push(BigRational::from_integer(moments[m].clone()));
            row
        })
        .collect();
    for c in 0..size {
        let p = (c..size)
            .find(|&r| !rows[r][c].is_zero())
            .expect("distinct nodes give an invertible system");
        rows.swap(c, p);
        let inv = rows[c][c].recip();
        for x in rows[c].iter_mut() {
            *x *= &inv;
        }
        for r in 0..size {
            if r == c || rows[r][c].is_zero() {
                continue;
            }
            let factor = rows[r][c].clone();
            for x in 0..=size {
                let delta = &factor * &rows[c][x];
                rows[r][x] -= delta;
            }
        }
    }
    rows.into_iter().map(|mut r| r.pop().unwrap()).collect()
}

/// Certifies that `predicted` is exactly the spectrum of the symmetric matrix
/// `a`.
///
/// A structurally invalid prediction (repeated eigenvalues, none at all) is
/// an error; a wrong but well-formed prediction yields a result with
/// [`CertificationResult::certified`] false.
pub fn certify_spectrum(a: &IntMatrix, predicted: &EvaluatedSpectrum) -> Result<CertificationResult> {
    if let Some((row, col)) = a.asymmetry() {
        return Err(Error::NotSymmetric { row, col });
    }
    let pairs = predicted.pairs();
    if pairs.is_empty() {
        return Err(Error::MalformedPrediction("no eigenvalues".into()));
    }
    let lambdas: Vec<BigInt> = pairs.iter().map(|(l, _)| l.clone()).collect();
    let mults: Vec<BigInt> = pairs.iter().map(|(_, m)| m.clone()).collect();
    for (idx, l) in lambdas.iter().enumerate() {
        if lambdas[..idx].contains(l) {
            return Err(Error::RepeatedEigenvalue(l.to_string()));
        }
    }

    let n = a.order();
    let top = lambdas.len();
    let annihilator = poly_from_roots(&lambdas);

    // Walk A^0 .. A^top once, collecting traces and the annihilator value.
    let mut power = IntMatrix::identity(n);
    let mut residual = IntMatrix::zeros(n);
    let mut moments = Vec::with_capacity(top);
    for m in 0..=top {
        if m > 0 {
            power = a.mul(&power)?;
        }
        if m < top {
            moments.push(power.trace());
        }
        residual.add_scaled(&annihilator[m], &power);
    }

    let predicted_moments: Vec<BigInt> = (0..top)
        .map(|m| {
            lambdas
                .iter()
                .zip(&mults)
                .map(|(l, c)| c * num_traits::pow(l.clone(), m))
                .sum()
        })
        .collect();
    let failed_moment = (0..top).find(|&m| moments[m] != predicted_moments[m]);

    let solved = solve_vandermonde(&lambdas, &moments);
    let multiplicities = solved
        .iter()
        .all(|x| x.is_integer() && !x.is_negative())
        .then(|| solved.iter().map(|x| x.to_integer()).collect());

    let degree = if n == 0 {
        None
    } else {
        let d = a.row_sum(0);
        (0..n)
            .all(|i| a.row_sum(i) == d)
            .then(|| d.to_u64())
            .flatten()
    };

    Ok(CertificationResult {
        v: predicted.v,
        k: predicted.k,
        q: predicted.q,
        vertex_count: n,
        degree,
        annihilation_ok: residual.first_nonzero().is_none(),
        moments_ok: failed_moment.is_none(),
        moments,
        predicted_moments,
        failed_moment,
        residual: residual.first_nonzero().map(|(row, col, value)| Residual {
            row,
            col,
            value: value.clone(),
        }),
        eigenvalues: lambdas,
        multiplicities,
    })
}

/// Everything produced by one brute-force run over `GF(q)`.
pub struct OracleRun {
    pub field: FieldCtx,
    pub subspaces: Vec<Subspace>,
    pub adjacency: Adjacency,
    pub result: CertificationResult,
}

impl OracleRun {
    /// Writes `vertices.txt`, `adjacency.txt` and `certification.json` into `dir`.
    pub fn dump(&self, dir: &Path) -> std::io::Result<()> {
        fs::create_dir_all(dir)?;
        let mut vertices = String::new();
        for s in &self.subspaces {
            vertices.push_str(&s.encode_line());
            vertices.push('\n');
        }
        fs::write(dir.join("vertices.txt"), vertices)?;
        fs::write(dir.join("adjacency.txt"), self.adjacency.to_text())?;
        let json = serde_json::to_string_pretty(&self.result).map_err(std::io::Error::other)?;
        fs::write(dir.join("certification.json"), json + "\n")
    }
}

/// Builds `qK(v, k)` over `GF(q)` and certifies `predicted` against it.
pub fn certify_qkneser(
    v: u32,
    k: u32,
    q: u64,
    predicted: &EvaluatedSpectrum,
    budget: u64,
) -> Result<OracleRun> {
    let field = FieldCtx::for_order(q)?;
    let subspaces = enumerate_subspaces(&field, v as usize, k as usize, budget)?;
    let adjacency = build_adjacency(&field, &subspaces)?;
    let mut result = certify_spectrum(&adjacency.to_int_matrix(), predicted)?;
    result.v = v;
    result.k = k;
    result.q = q;
    Ok(OracleRun {
        field,
        subspaces,
        adjacency,
        result,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn gf(q: u64) -> FieldCtx {
        FieldCtx::for_order(q).unwrap()
    }

    fn vecs(ctx: &FieldCtx, rows: &[&[u32]]) -> Vec<Vec<FieldElem>> {
        rows.iter()
            .map(|r| r.iter().map(|c| ctx.elem(*c).unwrap()).collect())
            .collect()
    }

    #[test]
    fn combination_order() {
        assert_eq!(
            combinations(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn enumeration_counts() {
        let f2 = gf(2);
        assert_eq!(enumerate_subspaces(&f2, 3, 1, 2000).unwrap().len(), 7);
        assert_eq!(enumerate_subspaces(&f2, 4, 2, 2000).unwrap().len(), 35);
        let zero = enumerate_subspaces(&gf(3), 4, 0, 2000).unwrap();
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].dim(), 0);
        assert_eq!(zero[0].encode_line(), "");
    }

    #[test]
    fn enumeration_errors() {
        let f2 = gf(2);
        assert!(matches!(
            enumerate_subspaces(&f2, 2, 3, 2000),
            Err(Error::DimensionTooLarge { .. })
        ));
        assert_eq!(
            enumerate_subspaces(&f2, 6, 3, 100).unwrap_err(),
            Error::BudgetExceeded {
                predicted: "1395".into(),
                budget: 100
            }
        );
    }

    #[test]
    fn enumeration_is_sorted_canonical_and_distinct() {
        let f3 = gf(3);
        let subs = enumerate_subspaces(&f3, 4, 2, 2000).unwrap();
        assert_eq!(subs.len(), 130);
        for w in subs.windows(2) {
            let key = |s: &Subspace| (s.pivots.clone(), s.basis.clone());
            assert!(key(&w[0]) < key(&w[1]));
        }
        for s in &subs {
            assert!(s.is_rref());
            let again = Subspace::from_rows(&f3, 4, &[s.row(0).to_vec(), s.row(1).to_vec()]).unwrap();
            assert_eq!(&again, s);
        }
    }

    #[test]
    fn intersections() {
        let f2 = gf(2);
        let e1e2 = Subspace::from_rows(&f2, 4, &vecs(&f2, &[&[1, 0, 0, 0], &[0, 1, 0, 0]])).unwrap();
        let e2e3 = Subspace::from_rows(&f2, 4, &vecs(&f2, &[&[0, 1, 0, 0], &[0, 0, 1, 0]])).unwrap();
        assert_eq!(intersection_dim(&f2, &e1e2, &e2e3).unwrap(), 1);
        assert_eq!(intersection_dim(&f2, &e1e2, &e1e2).unwrap(), 2);

        let l1 = Subspace::from_rows(&f2, 2, &vecs(&f2, &[&[1, 0]])).unwrap();
        let l2 = Subspace::from_rows(&f2, 2, &vecs(&f2, &[&[1, 1]])).unwrap();
        assert_eq!(intersection_dim(&f2, &l1, &l2).unwrap(), 0);

        assert_eq!(
            intersection_dim(&f2, &l1, &e1e2).unwrap_err(),
            Error::AmbientMismatch
        );
        let f3 = gf(3);
        let l3 = Subspace::from_rows(&f3, 2, &vecs(&f3, &[&[1, 2]])).unwrap();
        assert_eq!(intersection_dim(&f3, &l1, &l3).unwrap_err(), Error::AmbientMismatch);
    }

    #[test]
    fn from_rows_reduces_dependent_rows() {
        let f2 = gf(2);
        let s = Subspace::from_rows(&f2, 3, &vecs(&f2, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.pivots(), &[0, 1]);
        assert_eq!(s.encode_line(), "1 0 1 0 1 1");
    }

    #[test]
    fn triangle_and_trivial_graphs() {
        let f2 = gf(2);
        let lines = enumerate_subspaces(&f2, 2, 1, 2000).unwrap();
        let adj = build_adjacency(&f2, &lines).unwrap();
        assert_eq!(adj.to_text(), "011\n101\n110\n");

        let point = enumerate_subspaces(&f2, 3, 0, 2000).unwrap();
        let adj = build_adjacency(&f2, &point).unwrap();
        assert_eq!(adj.order(), 1);
        assert_eq!(adj.to_text(), "0\n");
    }

    #[test]
    fn regular_degree_qk42() {
        let f2 = gf(2);
        let subs = enumerate_subspaces(&f2, 4, 2, 2000).unwrap();
        let adj = build_adjacency(&f2, &subs).unwrap();
        assert!((0..35).all(|i| adj.degree(i) == 16));
    }

    #[test]
    fn matrix_product_and_trace() {
        let a = IntMatrix::from_rows(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]).unwrap();
        let a2 = a.mul(&a).unwrap();
        assert_eq!(a2, IntMatrix::from_rows(&[vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]]).unwrap());
        assert_eq!(a2.trace(), BigInt::from(6));
        let b = IntMatrix::from_rows(&[vec![2, -3], vec![0, 5]]).unwrap();
        let b2 = b.mul(&b).unwrap();
        assert_eq!(b2, IntMatrix::from_rows(&[vec![4, -21], vec![0, 25]]).unwrap());
        assert!(IntMatrix::from_rows(&[vec![1, 2], vec![3]]).is_err());
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn product_falls_back_to_big_integers() {
        let big = BigInt::from(i64::MAX) * BigInt::from(4);
        let mut a = IntMatrix::identity(2);
        a.set(0, 1, big.clone());
        a.set(1, 0, BigInt::from(3));
        let a2 = a.mul(&a).unwrap();
        let three = BigInt::from(3);
        assert_eq!(a2.get(0, 0), &(BigInt::one() + &big * &three));
        assert_eq!(a2.get(0, 1), &(&big * BigInt::from(2)));
        assert_eq!(a2.get(1, 1), &(&big * &three + BigInt::one()));
        // entries that fit but whose products would overflow
        let near = IntMatrix::from_rows(&[vec![1 << 40, 1 << 40], vec![1, 1]]).unwrap();
        let sq = near.mul(&near).unwrap();
        let t40 = BigInt::from(1i64 << 40);
        assert_eq!(sq.get(0, 0), &(&t40 * &t40 + &t40));
    }

    #[test]
    fn certifies_triangle() {
        let a = IntMatrix::from_rows(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]).unwrap();
        let good = EvaluatedSpectrum::from_pairs(2, 1, 2, &[(2, 1), (-1, 2)]);
        let res = certify_spectrum(&a, &good).unwrap();
        assert!(res.certified());
        assert_eq!(res.degree, Some(2));
        assert_eq!(res.multiplicities, Some(vec![1.into(), 2.into()]));

        let bad = EvaluatedSpectrum::from_pairs(2, 1, 2, &[(2, 1), (-1, 3)]);
        let res = certify_spectrum(&a, &bad).unwrap();
        assert!(!res.certified());
        assert_eq!(res.failed_moment, Some(0));
        assert!(res.annihilation_ok);
    }

    #[test]
    fn certification_errors() {
        let asym = IntMatrix::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
        let pred = EvaluatedSpectrum::from_pairs(2, 1, 2, &[(1, 1), (-1, 1)]);
        assert_eq!(
            certify_spectrum(&asym, &pred).unwrap_err(),
            Error::NotSymmetric { row: 0, col: 1 }
        );
        let sym = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let repeated = EvaluatedSpectrum::from_pairs(2, 1, 2, &[(1, 1), (1, 1)]);
        assert!(matches!(
            certify_spectrum(&sym, &repeated),
            Err(Error::RepeatedEigenvalue(_))
        ));
        let empty = EvaluatedSpectrum::from_pairs(2, 1, 2, &[]);
        assert!(matches!(
            certify_spectrum(&sym, &empty),
            Err(Error::MalformedPrediction(_))
        ));
    }

    #[test]
    fn wrong_eigenvalue_leaves_residual() {
        let sym = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let pred = EvaluatedSpectrum::from_pairs(2, 1, 2, &[(1, 1), (-2, 1)]);
        let res = certify_spectrum(&sym, &pred).unwrap();
        assert!(!res.annihilation_ok);
        assert!(res.residual.is_some());
    }

    #[test]
    fn field_from_parts_matches_order_lookup() {
        assert_eq!(make_field(2, 2).unwrap().order(), gf(4).order());
    }
}
