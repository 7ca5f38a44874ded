use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix columns are linearly dependent")]
    DependentColumns,
    #[error("matrix does not have full row rank")]
    RankDeficient,
    #[error("dimension {dim} exceeds the enumeration cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("LLL parameter delta must satisfy 1/4 < delta <= 1")]
    BadDelta,
    #[error("vectors p and r are parallel")]
    ParallelVectors,
    #[error("ratio ordering r_1/p_1 <= ... <= r_n/p_n does not hold")]
    AssumptionViolated,
    #[error("no integer fits in the open interval ({lo}, {hi})")]
    EmptyInterval { lo: String, hi: String },
    #[error("k = {0} is outside the admissible range")]
    InvalidK(String),
    #[error("bad dimension: {0}")]
    BadDimension(String),
    #[error("rho must be a rational in (sqrt(3)/2, 1)")]
    BadRho,
    #[error("gcd of the weight vector is not 1")]
    GcdNotOne,
    #[error("instance too large for the table oracle: {0}")]
    TooLarge(String),
    #[error("division by zero: p_k r_j = p_j r_k")]
    DivisionByZero,
    #[error("split certificate does not hold for the given (p, k)")]
    NotCertified,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("direction is unbounded over the LP relaxation")]
    UnboundedDirection,
}

pub type Result<T> = std::result::Result<T, Error>;
