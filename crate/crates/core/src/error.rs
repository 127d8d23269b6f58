use thiserror::Error;

use crate::rig::ParseError;

/// Precondition failures of matrix-level operations.
///
/// Partial operations whose failure is a mathematical fact rather than a
/// misuse report through [`crate::Verdict`] instead.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MatError {
    #[error("dimension mismatch in {op}: {detail}")]
    DimensionMismatch { op: &'static str, detail: String },
    #[error("{rig} lacks {structure}")]
    MissingStructure {
        rig: &'static str,
        structure: &'static str,
    },
    #[error("partition {sizes:?} does not sum to {dim}")]
    PartitionMismatch { sizes: Vec<usize>, dim: usize },
    #[error("not an isometry")]
    NotIsometry,
    #[error("not a dagger idempotent")]
    NotDaggerIdempotent,
    #[error("idempotents are not complementary")]
    NotComplementary,
    #[error("not EP")]
    NotEp,
    #[error("pseudoinverse unavailable: {0}")]
    PinvMissing(String),
    #[error("not a mono")]
    NotMono,
    #[error("arrow does not intertwine its idempotents")]
    NotIntertwining,
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
}

pub(crate) fn dims(op: &'static str, detail: impl Into<String>) -> MatError {
    MatError::DimensionMismatch {
        op,
        detail: detail.into(),
    }
}
