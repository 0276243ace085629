use thiserror::Error;

use crate::admissibility::CoverageVerdict;

pub type Result<T> = std::result::Result<T, UrdError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UrdError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid block: {0}")]
    InvalidBlock(String),

    #[error("invalid factor class: {0}")]
    InvalidClass(String),

    #[error("invalid request: {0}")]
    InvalidRequest(String),

    /// The requested pair is not covered by the constructions.
    #[error("pair rejected: {0}")]
    Rejected(CoverageVerdict),

    /// A constructed class failed its own validation. `family` names the
    /// construction family that produced it, e.g. `B3a@d=3`.
    #[error("construction {family} failed validation: {detail}")]
    Construction { family: String, detail: String },
}

impl UrdError {
    pub(crate) fn construction(family: impl ToString, detail: impl ToString) -> Self {
        UrdError::Construction {
            family: family.to_string(),
            detail: detail.to_string(),
        }
    }
}
