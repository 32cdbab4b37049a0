#![allow(dead_code)]

use hurwitz_core::{Partition, Permutation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn perm(s: &str, d: usize) -> Permutation {
    Permutation::parse(s, d).unwrap()
}

pub fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `x ↦ q(p(x))` on raw image tables.
pub fn naive_then(p: &[usize], q: &[usize]) -> Vec<usize> {
    p.iter().map(|&y| q[y - 1]).collect()
}

pub fn naive_inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (x, &y) in p.iter().enumerate() {
        inv[y - 1] = x + 1;
    }
    inv
}

/// Cycle lengths, fixed points included, largest first.
pub fn naive_cycle_lengths(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x] - 1;
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

pub fn naive_transitive(gens: &[&[usize]]) -> bool {
    let d = gens[0].len();
    let mut seen = vec![false; d];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g[x] - 1;
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.into_iter().all(|b| b)
}

/// Every image table of degree `d`, lexicographic.
pub fn all_perms(d: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let d = used.len();
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for y in 1..=d {
            if !used[y - 1] {
                used[y - 1] = true;
                cur.push(y);
                rec(cur, used, out);
                cur.pop();
                used[y - 1] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; d], &mut out);
    out
}

/// Unordered pairs of non-trivial partitions of `d` with `ν > d − 1` and `ν` even.
pub fn admissible_pairs(d: usize) -> Vec<(Partition, Partition)> {
    let ps = Partition::all_nontrivial(d);
    let mut out = Vec::new();
    for i in 0..ps.len() {
        for j in i..ps.len() {
            let nu = ps[i].defect() + ps[j].defect();
            if nu.is_multiple_of(2) && nu > d - 1 {
                out.push((ps[i].clone(), ps[j].clone()));
            }
        }
    }
    out
}
