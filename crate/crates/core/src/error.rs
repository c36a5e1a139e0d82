use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("evaluation point q = {0} must be at least 2")]
    EvalPoint(i64),

    #[error("lower index i = {0} must be nonnegative")]
    NegativeIndex(i64),

    #[error("invalid parameters for {identity}: {reason}")]
    IdentityDomain {
        identity: &'static str,
        reason: String,
    },

    #[error("grid bound {value} exceeds the limit {limit}")]
    GridLimit { value: i64, limit: i64 },

    #[error("qK({v},{k}) is the null graph when k <= v < 2k; need v >= 2k")]
    NullGraph { v: u32, k: u32 },

    #[error("k = {k} must be at most v = {v}")]
    DimensionTooLarge { v: u32, k: u32 },

    #[error("k = {0} must be at least 1")]
    ZeroDimension(u32),

    #[error("index j = {j} outside 0..={k}")]
    IndexOutOfRange { j: u32, k: u32 },

    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),

    #[error("p = {0} is not prime")]
    NotPrime(u64),

    #[error("extension degree e = {degree} outside 1..={bound}")]
    ExtensionDegree { degree: u32, bound: u32 },

    #[error("field too large: p^e = {p}^{e} overflows")]
    FieldTooLarge { p: u64, e: u32 },

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("element code {code} outside GF({q})")]
    ElementOutOfRange { code: u32, q: u64 },

    #[error("subspaces live in different ambient spaces")]
    AmbientMismatch,

    #[error("predicted vertex count {predicted} exceeds budget {budget}")]
    BudgetExceeded { predicted: String, budget: u64 },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix order {matrix} does not match {expected}")]
    OrderMismatch { matrix: usize, expected: usize },

    #[error("predicted eigenvalue {0} is repeated")]
    RepeatedEigenvalue(String),

    #[error("predicted spectrum is malformed: {0}")]
    MalformedPrediction(String),

    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
}
