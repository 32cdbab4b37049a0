//! Permutations of `{1, …, d}`, partitions, and the projection/embedding calculus.

mod partition;
mod permutation;
mod subset;

use thiserror::Error;

pub use partition::Partition;
pub use permutation::{parse_cycles, Permutation};
pub use subset::{embed, insertion_recombine, project, PointSubset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("label {label} out of range 1..={degree}")]
    LabelOutOfRange { label: usize, degree: usize },
    #[error("label {0} repeated in cycle notation")]
    RepeatedLabel(usize),
    #[error("image table is not a bijection")]
    NotABijection,
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("cycle types differ: {left} vs {right}")]
    CycleTypeMismatch { left: Partition, right: Partition },
    #[error("non-trivial part is not a single odd cycle")]
    NotSingleOddCycle,
    #[error("empty point subset")]
    EmptySubset,
    #[error("anchors inconsistent with lambda: {0}")]
    AnchorsInconsistent(String),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("point {0} is mapped outside the subset")]
    SubsetNotInvariant(usize),
    #[error("point {0} absent")]
    PointAbsent(usize),
    #[error("parse error: {0}")]
    Parse(String),
}
