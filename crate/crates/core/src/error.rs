use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("zero polynomial has no root count")]
    ZeroPolynomial,

    #[error("duplicate interpolation node {0}")]
    DuplicateNode(String),

    #[error("composition degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("empty factor list")]
    EmptyFactorList,

    #[error("not of form (Pn-1): {0}")]
    NotPn1(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("root refinement did not converge (best residual {best_residual})")]
    NonConvergence { best_residual: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("realization budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("unsupported case (odd delta, no guaranteed construction): {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
