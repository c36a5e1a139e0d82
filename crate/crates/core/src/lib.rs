//! Exact arithmetic for Gaussian binomial coefficients and the spectra of
//! q-Kneser graphs.
//!
//! The crate is layered bottom-up:
//!
//! - [`laurent`]: Laurent polynomials in `q` with big-integer coefficients.
//! - [`qbinom`]: Gaussian coefficients `[n choose i]_q` for every integer `n`.
//! - [`identities`]: exact, per-instance verification of the q-binomial
//!   summation identities over parameter grids.
//! - [`spectrum`]: eigenvalues (two independent closed forms) and
//!   multiplicities of `qK(v, k)`.
//! - [`field`]: arithmetic in `GF(p^e)`.
//! - [`oracle`]: brute-force subspace enumeration, adjacency construction and
//!   exact spectrum certification.
//! - [`cli`]: command implementations behind the `qkneser` binary.

pub mod cli;
pub mod error;
pub mod field;
pub mod identities;
pub mod laurent;
pub mod oracle;
pub mod qbinom;
mod serde_util;
pub mod spectrum;

pub use error::{Error, Result};
pub use field::{FieldCtx, FieldElem};
pub use identities::{GridBounds, IdentityId, IdentityReport};
pub use laurent::LaurentPoly;
pub use qbinom::{gauss, gauss_eval_product, GaussTable};
pub use spectrum::{SpectrumEntry, SpectrumTable};
