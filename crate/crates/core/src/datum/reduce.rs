//! Three or more branch points: fuse two partitions into the cycle type of a product,
//! recurse, and pull the result back by conjugation.

use rand::Rng;

use super::two::{primitive_span, strict_rp2_gate};
use super::{two_datum_construct, BranchDatum};
use crate::eks::{product_defect_exact, product_defect_reduced};
use crate::error::{internal, precondition, Error, Result};
use crate::perm::{Partition, Permutation};

/// One reduction step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    /// `[D, D₃, …, D_s]` where `D` is the cycle type of `γ₁γ₂`.
    pub reduced: Vec<Partition>,
    pub gamma1: Permutation,
    pub gamma2: Permutation,
    /// `order[i]` is the input index of the partition at position `i` after relabeling;
    /// `γ₁` realizes `order[0]`, `γ₂` realizes `order[1]`.
    pub order: Vec<usize>,
}

fn check_collection(partitions: &[Partition]) -> Result<usize> {
    let d = partitions
        .first()
        .map(Partition::degree)
        .ok_or_else(|| precondition("empty collection"))?;
    if partitions.iter().any(|p| p.degree() != d) {
        return Err(precondition("partitions of different degrees"));
    }
    if partitions.iter().any(Partition::is_trivial) {
        return Err(Error::TrivialPartition);
    }
    strict_rp2_gate(d, partitions.iter().map(Partition::defect).sum())?;
    Ok(d)
}

/// Replaces `D₁, D₂` by the cycle type `D` of a product `γ₁γ₂`, keeping the defect gate.
///
/// With `ν = (d−1) + 2q` and `r = 2q − Σ_{i≥3} ν(D_i)`: for `r ≤ 0` the product keeps
/// `ν(D) = ν(D₁) + ν(D₂)`; otherwise `ν(D) = (d−1) − k` with `k ≡ r (mod 2)`, `k ∈ {0,1}`.
pub fn reduce_collection<R: Rng + ?Sized>(partitions: &[Partition], rng: &mut R) -> Result<Reduction> {
    if partitions.len() < 3 {
        return Err(precondition("reduction needs at least three partitions"));
    }
    let d = check_collection(partitions)?;
    let mut order: Vec<usize> = (0..partitions.len()).collect();
    let nu_of = |i: usize| partitions[i].defect();
    let rest = |order: &[usize]| order[2..].iter().map(|&i| nu_of(i)).sum::<usize>();
    if rest(&order) == 1 {
        let big = if nu_of(order[0]) > 1 { 0 } else { 1 };
        order.swap(big, 2);
    }
    let total: usize = partitions.iter().map(Partition::defect).sum();
    let two_q = total + 1 - d;
    let tail = rest(&order);
    let (a, b) = (&partitions[order[0]], &partitions[order[1]]);
    let (gamma1, gamma2) = if two_q <= tail {
        product_defect_exact(a, b, rng)?
    } else {
        product_defect_reduced(a, b, (two_q - tail) % 2, rng)?
    };
    let fused = gamma1.then(&gamma2).cycle_type();
    let mut reduced = vec![fused];
    reduced.extend(order[2..].iter().map(|&i| partitions[i].clone()));
    let new_nu: usize = reduced.iter().map(Partition::defect).sum();
    if !new_nu.is_multiple_of(2) || new_nu < d || reduced[0].is_trivial() {
        return Err(internal(format!("reduced collection has defect {new_nu}")));
    }
    Ok(Reduction {
        reduced,
        gamma1,
        gamma2,
        order,
    })
}

/// Reorders `perms`, listed in the order `order` (input indices), back into input order
/// using braid moves `(x, y) → (y, y⁻¹xy)`. The ordered product, the generated group and
/// every cycle type are unchanged.
pub fn braid_reorder(mut perms: Vec<Permutation>, order: &[usize]) -> Vec<Permutation> {
    let mut keys = order.to_vec();
    let n = keys.len();
    for pass in 0..n {
        for i in 0..n - 1 - pass {
            if keys[i] > keys[i + 1] {
                let y = perms[i + 1].clone();
                let moved = y.inverse().then(&perms[i]).then(&y);
                perms[i] = y;
                perms[i + 1] = moved;
                keys.swap(i, i + 1);
            }
        }
    }
    perms
}

/// `σᵢ ∈ Dᵢ` in the given order with `σ₁⋯σ_s ∈ [d−2,1,1]` and `⟨σ₁,…,σ_s⟩` transitive and
/// primitive. The base surface of `datum` is ignored.
pub fn fundamental_construct<R: Rng + ?Sized>(datum: &BranchDatum, rng: &mut R) -> Result<Vec<Permutation>> {
    let sigmas = construct(datum.partitions(), rng)?;
    let d = datum.degree();
    for (s, p) in sigmas.iter().zip(datum.partitions()) {
        if s.cycle_type() != *p {
            return Err(internal(format!("{s} is not in {p}")));
        }
    }
    let prod = Permutation::product(&sigmas).expect("non-empty");
    if prod.cycle_type() != Partition::near_full(d) {
        return Err(internal(format!("product {prod} is not a ({})-cycle", d - 2)));
    }
    if !primitive_span(sigmas.clone(), &prod)? {
        return Err(internal("monodromy group is not transitive and primitive"));
    }
    Ok(sigmas)
}

fn construct<R: Rng + ?Sized>(partitions: &[Partition], rng: &mut R) -> Result<Vec<Permutation>> {
    match partitions {
        [] | [_] => {
            check_collection(partitions)?;
            Err(precondition("a single partition cannot pass the strict defect gate"))
        }
        [a, b] => {
            let (l, beta, _) = two_datum_construct(a, b, rng)?;
            Ok(vec![l, beta])
        }
        _ => {
            let red = reduce_collection(partitions, rng)?;
            let inner = construct(&red.reduced, rng)?;
            let mu = Permutation::conjugator_matching(&red.gamma1.then(&red.gamma2), &inner[0])?;
            let mut out = vec![red.gamma1.conj(&mu), red.gamma2.conj(&mu)];
            out.extend_from_slice(&inner[1..]);
            Ok(braid_reorder(out, &red.order))
        }
    }
}
