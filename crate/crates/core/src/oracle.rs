//! Brute-force ground truth at small degree, the table replay, and the census.

use std::fmt;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::datum::{appendix_rows, BranchDatum, Surface};
use crate::error::{precondition, Error, Gate, Result};
use crate::group::{self, BlockSystem, GeneratorSet};
use crate::perm::{Partition, Permutation};
use crate::realize::{admissible, realize_rp2, verify_certificate, Admissibility, Verdict};

/// Default degree cap of [`brute_force_two_datum`].
pub const BRUTE_FORCE_CAP: usize = 9;
/// Degree cap of [`exhaustive_blocks`].
pub const BLOCKS_CAP: usize = 8;
pub const CENSUS_MAX_DEGREE: usize = 13;
pub const CENSUS_MAX_S: usize = 4;

/// Functional-graph paths under construction, closed only into cycles whose lengths are
/// still available in a target partition.
#[derive(Clone)]
struct Paths {
    start_of: Vec<usize>,
    end_of: Vec<usize>,
    len: Vec<usize>,
    remaining: Vec<usize>,
}

impl Paths {
    fn new(target: &Partition) -> Self {
        let d = target.degree();
        let mut remaining = vec![0; d + 1];
        for &p in target.parts() {
            remaining[p] += 1;
        }
        Paths {
            start_of: (0..=d).collect(),
            end_of: (0..=d).collect(),
            len: vec![1; d + 1],
            remaining,
        }
    }

    /// Adds the edge `a → b`; false when the partial structure can no longer match.
    fn link(&mut self, a: usize, b: usize) -> bool {
        let s = self.start_of[a];
        if s == b {
            let l = self.len[s];
            if self.remaining[l] == 0 {
                return false;
            }
            self.remaining[l] -= 1;
            return true;
        }
        let e = self.end_of[b];
        let l = self.len[s] + self.len[b];
        self.end_of[s] = e;
        self.start_of[e] = s;
        self.len[s] = l;
        (l..self.remaining.len()).any(|k| self.remaining[k] > 0)
    }
}

struct Scan<'a> {
    lambda: &'a Permutation,
    lambda_inv: Permutation,
    d: usize,
}

impl Scan<'_> {
    fn run(&self, x: usize, b: &mut Vec<usize>, used: &mut Vec<bool>, bp: Paths, pp: Paths) -> Option<Permutation> {
        if x > self.d {
            let beta = Permutation::from_images(b[1..].to_vec()).ok()?;
            let gs = GeneratorSet::new(vec![self.lambda.clone(), beta.clone()]).ok()?;
            return group::is_transitive(&gs).then_some(beta);
        }
        for y in 1..=self.d {
            if used[y] {
                continue;
            }
            let (mut bp2, mut pp2) = (bp.clone(), pp.clone());
            if !bp2.link(x, y) || !pp2.link(self.lambda_inv.image(x), y) {
                continue;
            }
            used[y] = true;
            b[x] = y;
            if let Some(beta) = self.run(x + 1, b, used, bp2, pp2) {
                return Some(beta);
            }
            used[y] = false;
        }
        None
    }
}

/// With `λ` the canonical element of `d1`, the first `β ∈ d2` (lexicographic in image
/// tables) with `λβ ∈ product_class` and `⟨λ,β⟩` transitive.
pub fn brute_force_two_datum(
    d1: &Partition,
    d2: &Partition,
    product_class: &Partition,
) -> Result<Option<(Permutation, Permutation)>> {
    brute_force_two_datum_capped(d1, d2, product_class, BRUTE_FORCE_CAP)
}

pub fn brute_force_two_datum_capped(
    d1: &Partition,
    d2: &Partition,
    product_class: &Partition,
    cap: usize,
) -> Result<Option<(Permutation, Permutation)>> {
    let d = d1.degree();
    if d > cap {
        return Err(Error::CapExceeded { degree: d, cap });
    }
    if d2.degree() != d || product_class.degree() != d {
        return Err(precondition("partitions of different degrees"));
    }
    let lambda = Permutation::canonical(d1);
    let scan = Scan {
        lambda: &lambda,
        lambda_inv: lambda.inverse(),
        d,
    };
    let found = scan.run(1, &mut vec![0; d + 1], &mut vec![false; d + 1], Paths::new(d2), Paths::new(product_class));
    Ok(found.map(|beta| (lambda, beta)))
}

fn equal_partitions(rest: &mut Vec<usize>, k: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
    if rest.is_empty() {
        out.push(cur.clone());
        return;
    }
    let first = rest.remove(0);
    let pool = rest.clone();
    let mut pick = Vec::with_capacity(k - 1);
    choose(&pool, 0, k - 1, &mut pick, &mut |chosen| {
        let mut block = vec![first];
        block.extend_from_slice(chosen);
        let mut left: Vec<usize> = pool.iter().copied().filter(|x| !chosen.contains(x)).collect();
        cur.push(block);
        equal_partitions(&mut left, k, cur, out);
        cur.pop();
    });
    rest.insert(0, first);
}

fn choose(pool: &[usize], from: usize, need: usize, pick: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if need == 0 {
        f(pick);
        return;
    }
    for i in from..pool.len() {
        if pool.len() - i < need {
            break;
        }
        pick.push(pool[i]);
        choose(pool, i + 1, need - 1, pick, f);
        pick.pop();
    }
}

/// Every block system of `gens`, trivial ones included, by testing every partition of
/// `{1, …, d}` into equal parts.
pub fn exhaustive_blocks(gens: &GeneratorSet) -> Result<Vec<BlockSystem>> {
    let d = gens.degree();
    if d > BLOCKS_CAP {
        return Err(Error::CapExceeded { degree: d, cap: BLOCKS_CAP });
    }
    let mut systems = Vec::new();
    for k in (1..=d).filter(|k| d.is_multiple_of(*k)) {
        let mut all = Vec::new();
        equal_partitions(&mut (1..=d).collect(), k, &mut Vec::new(), &mut all);
        for blocks in all {
            let sys = BlockSystem::new(d, blocks)?;
            if sys.is_invariant(gens) {
                systems.push(sys);
            }
        }
    }
    Ok(systems)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowCheck {
    pub index: usize,
    pub degree: usize,
    pub product: Permutation,
    pub transitive: bool,
    pub primitive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppendixReport {
    pub rows: Vec<RowCheck>,
}

/// Replays the table: memberships and products are checked on load, transitivity and
/// primitivity here. Any failure is an error.
pub fn verify_appendix_table() -> Result<AppendixReport> {
    let mut rows = Vec::new();
    for row in appendix_rows()? {
        let gs = GeneratorSet::new(vec![row.lambda.clone(), row.beta.clone()])?;
        let transitive = group::is_transitive(&gs);
        let primitive = transitive && group::is_primitive(&gs)?;
        if !primitive {
            return Err(Error::Internal(format!("table row {} is not primitive", row.index)));
        }
        rows.push(RowCheck {
            index: row.index,
            degree: row.degree,
            product: row.lambda.then(&row.beta),
            transitive,
            primitive,
        });
    }
    Ok(AppendixReport { rows })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CensusClass {
    Inadmissible(Gate),
    Boundary,
    Constructed,
    Failed(String),
}

impl fmt::Display for CensusClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusClass::Inadmissible(_) => f.write_str("inadmissible"),
            CensusClass::Boundary => f.write_str("boundary"),
            CensusClass::Constructed => f.write_str("constructed"),
            CensusClass::Failed(why) => write!(f, "failed:{why}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusLine {
    pub datum: BranchDatum,
    pub nu: usize,
    pub class: CensusClass,
    pub millis: u128,
}

impl fmt::Display for CensusLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}\t{}\t{}", self.datum, self.nu, self.class, self.millis)
    }
}

fn census_caps(d: usize, max_s: usize) -> Result<()> {
    if d.is_multiple_of(2) {
        return Err(Error::EvenDegree(d));
    }
    if d > CENSUS_MAX_DEGREE {
        return Err(Error::CapExceeded { degree: d, cap: CENSUS_MAX_DEGREE });
    }
    if max_s > CENSUS_MAX_S {
        return Err(precondition(format!("at most {CENSUS_MAX_S} branch points")));
    }
    Ok(())
}

/// All multisets of `1..=max_s` non-trivial partitions of `d` over the projective plane:
/// by size, then lexicographically in the index order of [`Partition::all_nontrivial`].
pub fn census_data(d: usize, max_s: usize) -> Result<Vec<BranchDatum>> {
    census_caps(d, max_s)?;
    let parts = Partition::all_nontrivial(d);
    let mut out = Vec::new();
    fn rec(parts: &[Partition], from: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in from..parts.len() {
            cur.push(i);
            rec(parts, i, left - 1, cur, out);
            cur.pop();
        }
    }
    for s in 1..=max_s {
        let mut idx = Vec::new();
        rec(&parts, 0, s, &mut Vec::new(), &mut idx);
        for combo in idx {
            let ps = combo.iter().map(|&i| parts[i].clone()).collect();
            out.push(BranchDatum::new(Surface::Rp2, d, ps)?);
        }
    }
    Ok(out)
}

/// Classifies one datum; admissible data away from the boundary are realized and
/// verified with a generator seeded by `seed`.
pub fn census_classify(datum: &BranchDatum, seed: u64) -> CensusLine {
    let start = Instant::now();
    let report = admissible(datum);
    let d = datum.degree();
    let class = match report.verdict {
        Admissibility::Rejected(g) => CensusClass::Inadmissible(g),
        Admissibility::Admissible { boundary: true } => CensusClass::Boundary,
        Admissibility::Admissible { boundary: false } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            match realize_rp2(datum, &mut rng) {
                Err(e) => CensusClass::Failed(e.to_string()),
                Ok(cert) => {
                    let v = verify_certificate(&cert);
                    let chi_ok = report.nu <= d || v.chi <= 0;
                    if v.verdict == Verdict::ValidIndecomposable && v.relation_ok && chi_ok {
                        CensusClass::Constructed
                    } else {
                        CensusClass::Failed(v.verdict.to_string())
                    }
                }
            }
        }
    };
    CensusLine {
        datum: datum.clone(),
        nu: report.nu,
        class,
        millis: start.elapsed().as_millis(),
    }
}

/// Classifies `data` in parallel; output order follows input order.
pub fn census_batch(data: &[BranchDatum], seed: u64) -> Vec<CensusLine> {
    data.par_iter().map(|datum| census_classify(datum, seed)).collect()
}

pub fn census(d: usize, max_s: usize, seed: u64) -> Result<Vec<CensusLine>> {
    Ok(census_batch(&census_data(d, max_s)?, seed))
}
