//! Verified search for a partner permutation `B` of a given cycle type such that
//! `A·B` has a prescribed number of cycles.
//!
//! A seeded random phase runs first; a complete depth-first search with a node budget
//! follows. Both phases check every candidate by direct composition.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::perm::{Partition, Permutation};

pub(crate) type Accept<'a> = &'a dyn Fn(&Permutation) -> bool;

pub(crate) struct PartnerQuery<'a> {
    pub base: &'a Permutation,
    pub shape: &'a Partition,
    /// Required number of cycles of `base · B`, fixed points included.
    pub product_cycles: usize,
    /// `(point, length)`: the point must lie in a cycle of `B` of that length.
    pub anchor: Option<(usize, usize)>,
    /// Extra condition on `B`, checked last.
    pub accept: Option<Accept<'a>>,
    pub random_draws: usize,
    pub node_budget: u64,
}

impl<'a> PartnerQuery<'a> {
    pub fn new(base: &'a Permutation, shape: &'a Partition, product_cycles: usize) -> Self {
        let n = base.degree();
        PartnerQuery {
            base,
            shape,
            product_cycles,
            anchor: None,
            accept: None,
            random_draws: 256 * n.max(4),
            node_budget: 5_000_000,
        }
    }

    pub fn anchor(mut self, point: usize, len: usize) -> Self {
        self.anchor = Some((point, len));
        self
    }

    pub fn accept(mut self, f: Accept<'a>) -> Self {
        self.accept = Some(f);
        self
    }

    pub fn random_draws(mut self, draws: usize) -> Self {
        self.random_draws = draws;
        self
    }

    fn admits(&self, b: &Permutation) -> bool {
        if b.cycle_type() != *self.shape {
            return false;
        }
        if let Some((x, len)) = self.anchor {
            if b.cycle_of(x).len() != len {
                return false;
            }
        }
        if self.base.then(b).cycle_count() != self.product_cycles {
            return false;
        }
        self.accept.is_none_or(|f| f(b))
    }
}

pub(crate) fn find_partner<R: Rng + ?Sized>(q: &PartnerQuery<'_>, rng: &mut R) -> Option<Permutation> {
    let n = q.base.degree();
    if q.shape.degree() != n || q.product_cycles == 0 || q.product_cycles > n {
        return None;
    }
    if let Some((x, len)) = q.anchor {
        if x == 0 || x > n || !q.shape.parts().contains(&len) {
            return None;
        }
    }
    for _ in 0..q.random_draws {
        let b = random_of_shape(q.shape, q.anchor, rng);
        if q.admits(&b) {
            return Some(b);
        }
    }
    Dfs::new(q).run()
}

/// Uniform-ish random permutation of the given cycle type, honoring an anchor.
pub(crate) fn random_of_shape<R: Rng + ?Sized>(
    shape: &Partition,
    anchor: Option<(usize, usize)>,
    rng: &mut R,
) -> Permutation {
    let n = shape.degree();
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut offsets = Vec::with_capacity(shape.len());
    let mut at = 0;
    for &len in shape.parts() {
        offsets.push((at, len));
        at += len;
    }
    if let Some((x, len)) = anchor {
        let slots: Vec<usize> = offsets
            .iter()
            .filter(|(_, l)| *l == len)
            .flat_map(|&(o, l)| o..o + l)
            .collect();
        if let Some(&slot) = slots.get(rng.random_range(0..slots.len().max(1))) {
            let cur = order.iter().position(|&y| y == x).unwrap();
            order.swap(cur, slot);
        }
    }
    let cycles: Vec<&[usize]> = offsets.iter().map(|&(o, l)| &order[o..o + l]).collect();
    Permutation::from_cycles(&cycles, n).expect("shuffled layout is a bijection")
}

/// Depth-first construction of `B` cycle by cycle, tracking the partial functional graph
/// of `P = A·B` as path segments so closed cycles are counted incrementally.
struct Dfs<'q, 'a> {
    q: &'q PartnerQuery<'a>,
    n: usize,
    a_inv: Vec<usize>,
    b: Vec<usize>,
    placed: Vec<bool>,
    placed_count: usize,
    /// Multiplicity of each remaining cycle length, indexed by length.
    remaining: Vec<usize>,
    start_of: Vec<usize>,
    end_of: Vec<usize>,
    closed: usize,
    assigned: usize,
    nodes: u64,
    result: Option<Permutation>,
}

enum Undo {
    Joined { s: usize, e: usize, old_end: usize, old_start: usize },
    Closed,
}

impl<'q, 'a> Dfs<'q, 'a> {
    fn new(q: &'q PartnerQuery<'a>) -> Self {
        let n = q.base.degree();
        let mut remaining = vec![0; n + 1];
        for &p in q.shape.parts() {
            remaining[p] += 1;
        }
        Dfs {
            q,
            n,
            a_inv: q.base.inverse().images().to_vec(),
            b: vec![0; n + 1],
            placed: vec![false; n + 1],
            placed_count: 0,
            remaining,
            start_of: (0..=n).collect(),
            end_of: (0..=n).collect(),
            closed: 0,
            assigned: 0,
            nodes: 0,
            result: None,
        }
    }

    fn run(mut self) -> Option<Permutation> {
        self.new_cycle(true);
        self.result
    }

    fn exhausted(&self) -> bool {
        self.result.is_some() || self.nodes >= self.q.node_budget
    }

    /// Records `B(x) = z`, which fixes the edge `A⁻¹(x) → z` of `P`.
    fn assign(&mut self, x: usize, z: usize) -> Undo {
        self.b[x] = z;
        self.assigned += 1;
        let y = self.a_inv[x - 1];
        let s = self.start_of[y];
        let e = self.end_of[z];
        if s == z {
            self.closed += 1;
            Undo::Closed
        } else {
            let undo = Undo::Joined {
                s,
                e,
                old_end: self.end_of[s],
                old_start: self.start_of[e],
            };
            self.end_of[s] = e;
            self.start_of[e] = s;
            undo
        }
    }

    fn unassign(&mut self, x: usize, undo: Undo) {
        self.b[x] = 0;
        self.assigned -= 1;
        match undo {
            Undo::Closed => self.closed -= 1,
            Undo::Joined { s, e, old_end, old_start } => {
                self.end_of[s] = old_end;
                self.start_of[e] = old_start;
            }
        }
    }

    fn pruned(&self) -> bool {
        let goal = self.q.product_cycles;
        // an unassigned edge of B leaves some P-path open, so another cycle must close
        self.closed > goal || (self.closed == goal && self.assigned < self.n)
    }

    fn place(&mut self, x: usize) {
        self.placed[x] = true;
        self.placed_count += 1;
    }

    fn unplace(&mut self, x: usize) {
        self.placed[x] = false;
        self.placed_count -= 1;
    }

    fn new_cycle(&mut self, first: bool) {
        self.nodes += 1;
        if self.exhausted() {
            return;
        }
        if self.placed_count == self.n {
            self.leaf();
            return;
        }
        let anchored = if first { self.q.anchor } else { None };
        let (start, lengths): (usize, Vec<usize>) = match anchored {
            Some((x, len)) => (x, vec![len]),
            None => {
                let s = (1..=self.n).find(|&x| !self.placed[x]).unwrap();
                let ls = (1..=self.n).rev().filter(|&l| self.remaining[l] > 0).collect();
                (s, ls)
            }
        };
        for len in lengths {
            if self.remaining[len] == 0 {
                continue;
            }
            self.remaining[len] -= 1;
            self.place(start);
            self.extend(start, start, len - 1);
            self.unplace(start);
            self.remaining[len] += 1;
            if self.exhausted() {
                return;
            }
        }
    }

    fn extend(&mut self, start: usize, last: usize, left: usize) {
        self.nodes += 1;
        if self.exhausted() {
            return;
        }
        if left == 0 {
            let undo = self.assign(last, start);
            if !self.pruned() {
                self.new_cycle(false);
            }
            self.unassign(last, undo);
            return;
        }
        for z in 1..=self.n {
            if self.placed[z] {
                continue;
            }
            let undo = self.assign(last, z);
            if !self.pruned() {
                self.place(z);
                self.extend(start, z, left - 1);
                self.unplace(z);
            }
            self.unassign(last, undo);
            if self.exhausted() {
                return;
            }
        }
    }

    fn leaf(&mut self) {
        if self.closed != self.q.product_cycles {
            return;
        }
        let b = Permutation::from_images(self.b[1..].to_vec()).expect("complete assignment");
        if self.q.admits(&b) {
            self.result = Some(b);
        }
    }
}
