use thiserror::Error;

use crate::group::GroupError;
use crate::perm::PermError;

/// Which admissibility gate a datum failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    /// Total defect is odd.
    Parity,
    /// Over RP², `ν < d − 1`.
    BelowProjectiveBound,
    /// Over S², `ν < 2d − 2`, so `χ(M) > 2` and no connected cover exists.
    BelowSphereBound,
    /// Strict inequality required, but the datum sits on the boundary `ν = d − 1`.
    Boundary,
    /// The sphere construction needs `[d−2,1,1]` as the first partition.
    MissingNearFullCycle,
}

impl std::fmt::Display for Gate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Gate::Parity => "parity violation",
            Gate::BelowProjectiveBound => "defect below d-1",
            Gate::BelowSphereBound => "defect below 2d-2",
            Gate::Boundary => "boundary case nu = d-1",
            Gate::MissingNearFullCycle => "first partition must be [d-2,1,1]",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Perm(#[from] PermError),

    #[error(transparent)]
    Group(#[from] GroupError),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("inadmissible datum: {0}")]
    Inadmissible(Gate),

    #[error("degree {0} is even; only odd degrees are handled here")]
    EvenDegree(usize),

    #[error("trivial partition [1,...,1] in branch datum")]
    TrivialPartition,

    #[error("only decomposable realizations (single branch point, composite degree {0})")]
    OnlyDecomposable(usize),

    #[error("search exhausted: {0}")]
    SearchExhausted(String),

    #[error("degree {degree} exceeds cap {cap}")]
    CapExceeded { degree: usize, cap: usize },

    #[error("malformed input: {0}")]
    Format(String),

    /// A construction produced output that failed its own postcondition check.
    #[error("internal defect: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}
