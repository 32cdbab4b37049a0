//! Branch data and the constructions that realize them by permutations.

mod appendix;
mod case1;
mod full_cycle;
mod reduce;
mod two;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{Partition, Permutation, PointSubset};

pub use appendix::{appendix_rows, load_appendix, AppendixRow, APPENDIX_DATA};
pub use full_cycle::{full_cycle_datum_construct, single_branch_verdict, FullCycleRealization, SingleBranchVerdict};
pub use reduce::{braid_reorder, fundamental_construct, reduce_collection, Reduction};
pub use two::two_datum_construct;

/// Base surface of the covering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Surface {
    Rp2,
    S2,
}

impl Surface {
    pub fn euler_characteristic(self) -> i64 {
        match self {
            Surface::Rp2 => 1,
            Surface::S2 => 2,
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Surface::Rp2 => "rp2",
            Surface::S2 => "s2",
        })
    }
}

impl FromStr for Surface {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "rp2" => Ok(Surface::Rp2),
            "s2" => Ok(Surface::S2),
            other => Err(Error::Format(format!("unknown base surface {other:?}"))),
        }
    }
}

/// A base surface, a degree and one partition of the degree per branch point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BranchDatum {
    base: Surface,
    degree: usize,
    partitions: Vec<Partition>,
}

impl BranchDatum {
    /// Order of `partitions` is kept; it fixes the order of the branch-point images.
    pub fn new(base: Surface, degree: usize, partitions: Vec<Partition>) -> Result<Self> {
        if partitions.is_empty() {
            return Err(Error::Format("branch datum has no partitions".into()));
        }
        if let Some(p) = partitions.iter().find(|p| p.degree() != degree) {
            return Err(Error::Format(format!("partition {p} does not sum to {degree}")));
        }
        if partitions.iter().any(Partition::is_trivial) {
            return Err(Error::TrivialPartition);
        }
        Ok(BranchDatum { base, degree, partitions })
    }

    /// Parses `[p];[p];...`, inferring the degree from the first partition.
    pub fn parse(base: Surface, literal: &str) -> Result<Self> {
        let partitions = parse_partitions(literal)?;
        let degree = partitions[0].degree();
        Self::new(base, degree, partitions)
    }

    pub fn base(&self) -> Surface {
        self.base
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }

    /// Total defect `ν(𝒟)`.
    pub fn defect(&self) -> usize {
        self.partitions.iter().map(Partition::defect).sum()
    }

    pub fn with_base(&self, base: Surface) -> Self {
        BranchDatum { base, ..self.clone() }
    }

    /// Partitions only, joined by `;`.
    pub fn literal(&self) -> String {
        self.partitions
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl fmt::Display for BranchDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

/// Splits a `;`-separated list of partition literals. Degrees are not checked here.
pub fn parse_partitions(literal: &str) -> Result<Vec<Partition>> {
    let literal = literal.trim();
    if literal.is_empty() {
        return Err(Error::Format("empty datum literal".into()));
    }
    literal
        .split(';')
        .map(|p| p.parse::<Partition>().map_err(|e| Error::Format(e.to_string())))
        .collect()
}

/// Which construction produced a two-partition realization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseTag {
    /// `d = 3`: `β = λ⁻¹`.
    D3,
    /// One partition is `[d]`; the partner comes from a merge against `λ⁻¹`.
    FullCycleDatum,
    Case1,
    Case2Table,
    Case2General,
    Case3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subcase {
    /// `r = 2`: direct threading.
    One,
    TwoA,
    TwoB,
}

/// Intermediate objects of the splitting step in Case 1 with `r > 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitTrace {
    pub d21: Partition,
    pub d22: Partition,
    pub f: usize,
    pub z: usize,
    pub j: usize,
    pub star: usize,
    pub beta1: Permutation,
    pub beta2: Permutation,
    pub tau: Permutation,
    pub sigma: Permutation,
    pub gamma: Permutation,
    pub eta: Permutation,
}

/// Audit record of [`two_datum_construct`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub case: CaseTag,
    pub subcase: Option<Subcase>,
    /// The input pair was exchanged before building and exchanged back afterwards.
    pub swapped: bool,
    pub beta0: Option<Permutation>,
    pub deleted: Option<PointSubset>,
    pub reduced: Option<(Partition, Partition)>,
    pub beta_bar: Option<Permutation>,
    pub split: Option<SplitTrace>,
    pub appendix_row: Option<usize>,
    /// Set when the direct construction did not verify and a verified search replaced it.
    pub fallback: Option<String>,
}

impl ConstructionTrace {
    pub(crate) fn new(case: CaseTag) -> Self {
        ConstructionTrace {
            case,
            subcase: None,
            swapped: false,
            beta0: None,
            deleted: None,
            reduced: None,
            beta_bar: None,
            split: None,
            appendix_row: None,
            fallback: None,
        }
    }
}
