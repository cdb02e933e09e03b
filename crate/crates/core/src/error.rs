use thiserror::Error;

/// Failure modes shared by every layer of the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent caller input.
    #[error("input error: {0}")]
    Input(String),
    /// A configured size or search bound was exceeded.
    #[error("resource limit: {0}")]
    Resource(String),
    /// An internal consistency check failed. Indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),
    /// The operation is undefined for this input (e.g. GVZ on an abelian group).
    #[error("not applicable: {0}")]
    NotApplicable(String),
    /// A theorem's hypotheses do not hold for this group.
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    /// The lower central series stabilised above the trivial subgroup.
    #[error("group is not nilpotent")]
    NotNilpotent,
    /// A checked statement was found to be false on a concrete instance.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn internal<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Internal(msg.into()))
}
