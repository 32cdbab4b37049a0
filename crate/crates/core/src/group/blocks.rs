use petgraph::unionfind::UnionFind;

use super::{require_transitive, GeneratorSet, GroupError};
use crate::perm::{PermError, PointSubset};

/// A partition of `{1, …, d}` into blocks of one common size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    degree: usize,
    blocks: Vec<Vec<usize>>,
}

impl BlockSystem {
    /// Sorts each block and the block list; checks the blocks tile `{1, …, d}` evenly.
    pub fn new(degree: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let mut seen = vec![false; degree];
        for b in &mut blocks {
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 || x > degree || std::mem::replace(&mut seen[x - 1], true) {
                    return Err(GroupError::MalformedBlocks);
                }
            }
        }
        let size = blocks.first().map_or(0, Vec::len);
        if seen.contains(&false) || blocks.iter().any(|b| b.len() != size) {
            return Err(GroupError::MalformedBlocks);
        }
        blocks.sort_unstable();
        Ok(BlockSystem { degree, blocks })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_size(&self) -> usize {
        self.blocks[0].len()
    }

    /// `1 < block size < d`.
    pub fn is_nontrivial(&self) -> bool {
        let k = self.block_size();
        k > 1 && k < self.degree
    }

    /// Every generator maps each block onto a block.
    pub fn is_invariant(&self, gens: &GeneratorSet) -> bool {
        let mut block_of = vec![0; self.degree];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                block_of[x - 1] = i;
            }
        }
        gens.generators().iter().all(|g| {
            self.blocks.iter().all(|b| {
                let target = block_of[g.image(b[0]) - 1];
                b.iter().all(|&x| block_of[g.image(x) - 1] == target)
            })
        })
    }
}

/// Finest invariant equivalence relation identifying `a` and `b`, as classes.
fn closure_classes(gens: &GeneratorSet, a: usize, b: usize) -> Vec<Vec<usize>> {
    let d = gens.degree();
    let mut uf = UnionFind::<usize>::new(d);
    let mut pending = vec![(a - 1, b - 1)];
    uf.union(a - 1, b - 1);
    // every merged pair is pushed once; closing the spanning pairs closes the relation
    while let Some((x, y)) = pending.pop() {
        for g in gens.generators() {
            let (u, v) = (g.image(x + 1) - 1, g.image(y + 1) - 1);
            if uf.union(u, v) {
                pending.push((u, v));
            }
        }
    }
    let labels = uf.into_labeling();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut index = vec![usize::MAX; d];
    for (x, &root) in labels.iter().enumerate() {
        if index[root] == usize::MAX {
            index[root] = classes.len();
            classes.push(Vec::new());
        }
        classes[index[root]].push(x + 1);
    }
    classes
}

/// Smallest block containing both seed points.
pub fn minimal_block(gens: &GeneratorSet, seed: (usize, usize)) -> Result<PointSubset, GroupError> {
    let d = gens.degree();
    let (a, b) = seed;
    if a == b || a == 0 || b == 0 || a > d || b > d {
        return Err(GroupError::BadSeedPair(a, b));
    }
    require_transitive(gens)?;
    let classes = closure_classes(gens, a, b);
    let block = classes.into_iter().find(|c| c.contains(&a)).expect("a is classified");
    PointSubset::new(d, block).map_err(|_: PermError| GroupError::MalformedBlocks)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Primitivity {
    Primitive,
    /// Carries a non-trivial invariant block system.
    Imprimitive(BlockSystem),
}

impl Primitivity {
    pub fn is_primitive(&self) -> bool {
        matches!(self, Primitivity::Primitive)
    }
}

/// Exact primitivity test by minimal-block closure over the pairs `(1, x)`.
pub fn primitivity(gens: &GeneratorSet) -> Result<Primitivity, GroupError> {
    require_transitive(gens)?;
    let d = gens.degree();
    for x in 2..=d {
        let classes = closure_classes(gens, 1, x);
        if classes.len() > 1 {
            let system = BlockSystem::new(d, classes)?;
            return Ok(Primitivity::Imprimitive(system));
        }
    }
    Ok(Primitivity::Primitive)
}

pub fn is_primitive(gens: &GeneratorSet) -> Result<bool, GroupError> {
    Ok(primitivity(gens)?.is_primitive())
}

/// A connected covering is decomposable exactly when its monodromy group is imprimitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposability {
    Indecomposable,
    Decomposable(BlockSystem),
}

pub fn decomposability_verdict(gens: &GeneratorSet) -> Result<Decomposability, GroupError> {
    Ok(match primitivity(gens)? {
        Primitivity::Primitive => Decomposability::Indecomposable,
        Primitivity::Imprimitive(b) => Decomposability::Decomposable(b),
    })
}
