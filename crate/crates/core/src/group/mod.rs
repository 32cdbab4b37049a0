//! Orbits, blocks and primitivity of permutation groups given by generators.

mod blocks;

use num_integer::Integer;
use thiserror::Error;

use crate::perm::Permutation;

pub use blocks::{
    decomposability_verdict, is_primitive, minimal_block, primitivity, BlockSystem,
    Decomposability, Primitivity,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("generator set is empty")]
    NoGenerators,
    #[error("generators have different degrees ({0} and {1})")]
    DegreeMismatch(usize, usize),
    #[error("group is not transitive ({0} orbits)")]
    Intransitive(usize),
    #[error("seed pair must be two distinct points in range, got ({0}, {1})")]
    BadSeedPair(usize, usize),
    #[error("blocks do not form an equal-size partition of the points")]
    MalformedBlocks,
}

/// Non-empty list of generators of a common degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    degree: usize,
    generators: Vec<Permutation>,
}

impl GeneratorSet {
    pub fn new(generators: Vec<Permutation>) -> Result<Self, GroupError> {
        let degree = generators.first().ok_or(GroupError::NoGenerators)?.degree();
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch(degree, g.degree()));
        }
        Ok(GeneratorSet { degree, generators })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }
}

/// Orbits of the generated group, each sorted, ordered by smallest element.
pub fn orbits(gens: &GeneratorSet) -> Vec<Vec<usize>> {
    let d = gens.degree();
    let mut orbit_of = vec![usize::MAX; d];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for start in 1..=d {
        if orbit_of[start - 1] != usize::MAX {
            continue;
        }
        let id = out.len();
        orbit_of[start - 1] = id;
        let mut members = vec![start];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            i += 1;
            for g in gens.generators() {
                let y = g.image(x);
                if orbit_of[y - 1] == usize::MAX {
                    orbit_of[y - 1] = id;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

pub fn is_transitive(gens: &GeneratorSet) -> bool {
    orbits(gens).len() == 1
}

pub(crate) fn require_transitive(gens: &GeneratorSet) -> Result<(), GroupError> {
    match orbits(gens).len() {
        1 => Ok(()),
        n => Err(GroupError::Intransitive(n)),
    }
}

/// Outcome of the cheap primitivity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FastPath {
    Primitive,
    Inconclusive,
}

/// Number-theoretic half of the `l`-cycle criterion: `gcd(l, d) = 1` and `l` exceeds
/// every divisor of `d` strictly between 1 and `d`.
pub fn l_cycle_criterion(d: usize, l: usize) -> bool {
    if d == 0 || l == 0 || l.gcd(&d) != 1 {
        return false;
    }
    let largest_proper = (2..d).rev().find(|k| d.is_multiple_of(*k)).unwrap_or(0);
    l > largest_proper
}

/// A transitive group containing an `l`-cycle whose length passes
/// [`l_cycle_criterion`] is primitive.
///
/// `witness` must be an element of the group (a generator or any product of them);
/// its single non-trivial cycle supplies `l`. The identity counts as `l = 1`. Anything
/// else, or an intransitive group, yields `Inconclusive`.
pub fn primitivity_fast_path(gens: &GeneratorSet, witness: &Permutation) -> FastPath {
    if witness.degree() != gens.degree() || !is_transitive(gens) {
        return FastPath::Inconclusive;
    }
    let l = match witness.cycles().as_slice() {
        [] => 1,
        [c] => c.len(),
        _ => return FastPath::Inconclusive,
    };
    if l_cycle_criterion(gens.degree(), l) {
        FastPath::Primitive
    } else {
        FastPath::Inconclusive
    }
}
