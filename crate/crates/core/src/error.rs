use thiserror::Error;

/// Errors surfaced by the estimation library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty log-sum")]
    EmptyLogSum,
    #[error("log-domain value is NaN or +inf")]
    InvalidLogValue,
    #[error("zero total weight")]
    ZeroTotalWeight,
    #[error("non-finite parameter: {0}")]
    NonFinite(&'static str),
    #[error("singular random-effects covariance")]
    SingularReCovariance,
    #[error("singular covariance after ridge regularization")]
    SingularCovariance,
    #[error("covariance is not symmetric")]
    NotSymmetric,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid response time")]
    InvalidResponseTime,
    #[error("proposal/prior support mismatch")]
    SupportMismatch,
    #[error("proposal does not cover posterior")]
    ProposalDoesNotCover,
    #[error("insufficient draws")]
    InsufficientDraws,
    #[error("fewer than 3 finite weights for jackknife")]
    JackknifeTooFew,
    #[error("chain stuck; reduce step_scale or increase inner_N")]
    ChainStuck,
    #[error("exact likelihood unavailable for this model")]
    NoExactLikelihood,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("dataset error: {0}")]
    Dataset(String),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
