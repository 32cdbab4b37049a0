//! Factorization toolbox: merging a permutation with a partition into a full cycle,
//! controlling the defect of a product, and splitting an even permutation into two
//! full cycles.

mod thread;

use rand::Rng;

use crate::error::{internal, precondition, Error, Result};
use crate::perm::{Partition, PermError, Permutation};
use crate::search::{find_partner, random_of_shape, PartnerQuery};

pub use thread::{MergePlan, MergeStep};
pub(crate) use thread::thread;

fn merge_precondition(lambda: &Permutation, target: &Partition) -> Result<()> {
    let n = lambda.degree();
    if target.degree() != n {
        return Err(precondition(format!(
            "target {target} does not partition {n}"
        )));
    }
    let nu = lambda.defect() + target.defect();
    if nu + 1 < n || !(nu + n + 1).is_multiple_of(2) {
        return Err(precondition(format!(
            "defect sum {nu} must be at least {} with the parity of {}",
            n - 1,
            n + 1
        )));
    }
    Ok(())
}

fn check_merge(lambda: &Permutation, target: &Partition, beta: &Permutation) -> Result<()> {
    if beta.cycle_type() != *target || !lambda.then(beta).is_full_cycle() {
        return Err(internal(format!("merge of {lambda} with {target} produced {beta}")));
    }
    Ok(())
}

/// `β̄` of cycle type `target` such that `λβ̄` is a full cycle.
pub fn eks_merge<R: Rng + ?Sized>(
    lambda: &Permutation,
    target: &Partition,
    rng: &mut R,
) -> Result<Permutation> {
    Ok(eks_merge_with_plan(lambda, target, rng)?.0)
}

/// As [`eks_merge`], also returning the threading plan when greedy threading succeeded.
pub fn eks_merge_with_plan<R: Rng + ?Sized>(
    lambda: &Permutation,
    target: &Partition,
    rng: &mut R,
) -> Result<(Permutation, Option<MergePlan>)> {
    merge_precondition(lambda, target)?;
    let n = lambda.degree();
    if lambda.defect() + target.defect() + 1 == n {
        if let Some((beta, plan)) = thread(lambda, target.parts(), None) {
            if lambda.then(&beta).is_full_cycle() {
                return Ok((beta, Some(plan)));
            }
        }
    }
    let beta = find_partner(&PartnerQuery::new(lambda, target, 1), rng)
        .ok_or_else(|| Error::SearchExhausted(format!("merge of {lambda} with {target}")))?;
    check_merge(lambda, target, &beta)?;
    Ok((beta, None))
}

/// As [`eks_merge`], with the extra requirement that `anchor.0` lies in a cycle of
/// length `anchor.1` of the result.
pub fn eks_merge_anchored<R: Rng + ?Sized>(
    lambda: &Permutation,
    target: &Partition,
    anchor: (usize, usize),
    rng: &mut R,
) -> Result<(Permutation, Option<MergePlan>)> {
    merge_precondition(lambda, target)?;
    let (x, len) = anchor;
    let n = lambda.degree();
    if x == 0 || x > n || !target.parts().contains(&len) {
        return Err(precondition(format!(
            "anchor ({x}, {len}) incompatible with {target}"
        )));
    }
    let anchored_ok = |b: &Permutation| b.cycle_of(x).len() == len;
    if lambda.defect() + target.defect() + 1 == n {
        let mut order = target.parts().to_vec();
        let at = order.iter().position(|&p| p == len).unwrap();
        order.remove(at);
        order.insert(0, len);
        if let Some((beta, plan)) = thread(lambda, &order, Some(x)) {
            if lambda.then(&beta).is_full_cycle() && anchored_ok(&beta) {
                return Ok((beta, Some(plan)));
            }
        }
    }
    let q = PartnerQuery::new(lambda, target, 1).anchor(x, len);
    let beta = find_partner(&q, rng).ok_or_else(|| {
        Error::SearchExhausted(format!("anchored merge of {lambda} with {target}"))
    })?;
    check_merge(lambda, target, &beta)?;
    if !anchored_ok(&beta) {
        return Err(internal("anchored merge lost its anchor"));
    }
    Ok((beta, None))
}

/// `α ∈ A`, `β ∈ B` with `ν(αβ) = ν(A) + ν(B)`, for `ν(A) + ν(B) < d`.
///
/// `α` is the canonical element of `A`.
pub fn product_defect_exact<R: Rng + ?Sized>(
    a: &Partition,
    b: &Partition,
    rng: &mut R,
) -> Result<(Permutation, Permutation)> {
    let d = a.degree();
    if b.degree() != d {
        return Err(precondition(format!("{a} and {b} have different degrees")));
    }
    let nu = a.defect() + b.defect();
    if nu >= d {
        return Err(precondition(format!("defect sum {nu} is not below d = {d}")));
    }
    let alpha = Permutation::canonical(a);
    let goal = d - nu;
    let threaded = thread(&alpha, b.parts(), None)
        .map(|(beta, _)| beta)
        .filter(|beta| alpha.then(beta).cycle_count() == goal);
    let beta = match threaded {
        Some(beta) => beta,
        None => find_partner(&PartnerQuery::new(&alpha, b, goal), rng).ok_or_else(|| {
            Error::SearchExhausted(format!("exact defect product of {a} and {b}"))
        })?,
    };
    if beta.cycle_type() != *b || alpha.then(&beta).defect() != nu {
        return Err(internal("exact defect product failed its check"));
    }
    Ok((alpha, beta))
}

/// `α ∈ A`, `β ∈ B` with `ν(αβ) = (d − 1) − k`, where `ν(A) + ν(B) = (d − 1) + r`,
/// `0 ≤ k ≤ r` and `k ≡ r (mod 2)`.
pub fn product_defect_reduced<R: Rng + ?Sized>(
    a: &Partition,
    b: &Partition,
    k: usize,
    rng: &mut R,
) -> Result<(Permutation, Permutation)> {
    let d = a.degree();
    if b.degree() != d {
        return Err(precondition(format!("{a} and {b} have different degrees")));
    }
    let nu = a.defect() + b.defect();
    if nu < d {
        return Err(precondition(format!("defect sum {nu} is not above d - 1")));
    }
    let r = nu - (d - 1);
    if k > r || !(r - k).is_multiple_of(2) {
        return Err(precondition(format!("k = {k} incompatible with r = {r}")));
    }
    let alpha = Permutation::canonical(a);
    let beta = if k == 0 {
        eks_merge(&alpha, b, rng)?
    } else {
        find_partner(&PartnerQuery::new(&alpha, b, k + 1), rng).ok_or_else(|| {
            Error::SearchExhausted(format!("reduced defect product of {a} and {b}, k = {k}"))
        })?
    };
    if beta.cycle_type() != *b || alpha.then(&beta).defect() + 1 + k != d {
        return Err(internal("reduced defect product failed its check"));
    }
    Ok((alpha, beta))
}

/// Writes a non-trivial even `τ` as `σγ` with `σ` and `γ` both full cycles.
pub fn factor_two_full_cycles<R: Rng + ?Sized>(
    tau: &Permutation,
    rng: &mut R,
) -> Result<(Permutation, Permutation)> {
    if tau.is_identity() {
        return Err(precondition("cannot factor the identity"));
    }
    if !tau.is_even() {
        return Err(precondition(format!("{tau} is odd")));
    }
    let n = tau.degree();
    let full = Partition::full_cycle(n);
    let mut found = None;
    for _ in 0..64 * n {
        let gamma = random_of_shape(&full, None, rng);
        let sigma = tau.then(&gamma.inverse());
        if sigma.is_full_cycle() {
            found = Some((sigma, gamma));
            break;
        }
    }
    let (sigma, gamma) = match found {
        Some(pair) => pair,
        None => {
            let q = PartnerQuery::new(tau, &full, 1).random_draws(0);
            let b = find_partner(&q, rng)
                .ok_or_else(|| Error::SearchExhausted(format!("two-cycle factorization of {tau}")))?;
            (tau.then(&b), b.inverse())
        }
    };
    if !sigma.is_full_cycle() || !gamma.is_full_cycle() || sigma.then(&gamma) != *tau {
        return Err(internal("two-cycle factorization failed its check"));
    }
    Ok((sigma, gamma))
}

/// `η` with `η σ⁻¹ η⁻¹` equal to the cycle `target_cycle` and `η(fixed) = fixed`.
pub fn aligning_conjugator(
    sigma: &Permutation,
    target_cycle: &[usize],
    fixed: usize,
) -> Result<Permutation> {
    let d = sigma.degree();
    let target = Permutation::cycle(target_cycle, d)?;
    if !target_cycle.contains(&fixed) {
        return Err(PermError::PointAbsent(fixed).into());
    }
    let inv = sigma.inverse();
    let cycles = inv.cycles();
    let c = match cycles.as_slice() {
        [] if target_cycle.len() == 1 => return Ok(Permutation::identity(d)),
        [c] if c.len() == target_cycle.len() => c.clone(),
        _ => {
            let left = cycles.iter().map(Vec::len).max().unwrap_or(1);
            return Err(PermError::LengthMismatch {
                left,
                right: target_cycle.len(),
            }
            .into());
        }
    };
    if let Some(&x) = target_cycle.iter().find(|x| !c.contains(x)) {
        return Err(PermError::PointAbsent(x).into());
    }
    let rotate = |cyc: &[usize]| {
        let at = cyc.iter().position(|&x| x == fixed).unwrap();
        let mut r = cyc[at..].to_vec();
        r.extend_from_slice(&cyc[..at]);
        r
    };
    let (c, t) = (rotate(&c), rotate(target_cycle));
    let mut images: Vec<usize> = (1..=d).collect();
    for (&ti, &ci) in t.iter().zip(&c) {
        images[ti - 1] = ci;
    }
    let eta = Permutation::from_images(images)?;
    if inv.conj(&eta) != target || eta.image(fixed) != fixed {
        return Err(internal("aligning conjugator failed its check"));
    }
    Ok(eta)
}
