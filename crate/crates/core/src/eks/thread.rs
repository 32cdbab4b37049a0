//! Greedy cycle threading: each `k`-cycle of the partner takes one unused element from
//! `k` distinct cycles of the running product and so merges them into one.

use crate::perm::Permutation;

/// One cycle of the partner permutation and where its elements came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergeStep {
    /// `(component id, element)` in cycle order. Component ids index the cycles of the
    /// base permutation sorted by decreasing length.
    pub picks: Vec<(usize, usize)>,
    /// Unused elements left in the merged component before this step; the construction
    /// needs this to stay positive.
    pub available: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MergePlan {
    pub steps: Vec<MergeStep>,
}

impl MergePlan {
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.steps
            .iter()
            .map(|s| s.picks.iter().map(|&(_, x)| x).collect())
            .collect()
    }
}

struct Component {
    size: usize,
    unused: Vec<usize>,
    merged: bool,
}

/// Threads `parts` (processed in the given order, ones skipped) into `base`.
///
/// With an anchor, the first entry of `parts` is the cycle length that must contain
/// the anchor point; the anchor's component seeds the merged component even when that
/// length is 1. Returns `None` when the availability condition fails.
pub(crate) fn thread(
    base: &Permutation,
    parts: &[usize],
    anchor: Option<usize>,
) -> Option<(Permutation, MergePlan)> {
    let n = base.degree();
    let mut cycles = base.cycles_with_fixed();
    cycles.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut comps: Vec<Component> = cycles
        .iter()
        .map(|c| {
            let mut unused = c.clone();
            unused.sort_unstable();
            Component { size: c.len(), unused, merged: false }
        })
        .collect();
    let comp_of = |x: usize| cycles.iter().position(|c| c.contains(&x)).unwrap();

    let mut plan = MergePlan::default();
    let mut merged_unused: Vec<usize> = Vec::new();
    let mut have_merged = false;
    let mut rest = parts;

    if let Some(x) = anchor {
        let (&len, tail) = parts.split_first()?;
        rest = tail;
        let c = comp_of(x);
        comps[c].merged = true;
        have_merged = true;
        merged_unused = std::mem::take(&mut comps[c].unused);
        merged_unused.retain(|&y| y != x);
        let mut picks = vec![(c, x)];
        for id in fresh(&comps, len - 1)? {
            picks.push((id, take_smallest(&mut comps[id])));
            absorb(&mut comps[id], &mut merged_unused);
        }
        if len > 1 {
            plan.steps.push(MergeStep { picks, available: 1 });
        }
    }

    for &k in rest.iter().filter(|&&k| k > 1) {
        let mut picks = Vec::with_capacity(k);
        let available = merged_unused.len();
        let need_fresh = if have_merged {
            if merged_unused.is_empty() {
                return None;
            }
            merged_unused.sort_unstable();
            let x = merged_unused.remove(0);
            picks.push((comp_of(x), x));
            k - 1
        } else {
            k
        };
        for id in fresh(&comps, need_fresh)? {
            picks.push((id, take_smallest(&mut comps[id])));
            absorb(&mut comps[id], &mut merged_unused);
        }
        have_merged = true;
        plan.steps.push(MergeStep { picks, available });
    }

    let beta = Permutation::from_cycles(&plan.cycles(), n).ok()?;
    Some((beta, plan))
}

/// The `count` largest unmerged components, ties broken by position.
fn fresh(comps: &[Component], count: usize) -> Option<Vec<usize>> {
    let mut ids: Vec<usize> = (0..comps.len()).filter(|&i| !comps[i].merged).collect();
    ids.sort_by(|&a, &b| comps[b].size.cmp(&comps[a].size).then(a.cmp(&b)));
    if ids.len() < count {
        return None;
    }
    ids.truncate(count);
    Some(ids)
}

fn take_smallest(c: &mut Component) -> usize {
    c.unused.remove(0)
}

fn absorb(c: &mut Component, merged_unused: &mut Vec<usize>) {
    c.merged = true;
    merged_unused.append(&mut c.unused);
}
