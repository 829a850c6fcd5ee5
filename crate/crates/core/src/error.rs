use thiserror::Error;

use crate::TruncatedSeries;
use crate::algebra::ReconstructError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// No closed form was found; the truncated series is kept.
    #[error("reconstruction failed: {source}")]
    Reconstruction {
        source: ReconstructError,
        truncated: TruncatedSeries,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
