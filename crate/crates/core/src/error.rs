use thiserror::Error;

/// Errors produced by sample validation, statistic computation and resampling.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("sample is empty")]
    EmptySample,
    #[error("non-finite value {value} at index {index}")]
    NonFinite { index: usize, value: f64 },
    #[error("invalid resample plan: {0}")]
    InvalidPlan(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("no replication factor k <= {max_k} brings every weight within 0.1 of an integer")]
    NoFeasibleReplication { max_k: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
