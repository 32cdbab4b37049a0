//! Case 1 of the two-partition construction: `c₁ + d₁ > 6` and `d₁ ≥ 3`.
//!
//! With `λ` canonical, `a_{1,j} = j`. `β₀ = (3 2 1)` fixes 1 and 2 in `λβ₀`, so the
//! problem drops to `Ω̄ = {3, …, d}` where `β̄` must merge `℘(λ)` into a full cycle while
//! keeping 3 inside a `(d₁−2)`-cycle.

use rand::Rng;

use super::{ConstructionTrace, SplitTrace, Subcase};
use crate::eks::{aligning_conjugator, eks_merge_anchored, factor_two_full_cycles};
use crate::error::{internal, precondition, Result};
use crate::perm::{project, Partition, Permutation, PointSubset};

pub(super) fn case1<R: Rng + ?Sized>(
    d1: &Partition,
    d2: &Partition,
    trace: &mut ConstructionTrace,
    rng: &mut R,
) -> Result<(Permutation, Permutation)> {
    let d = d1.degree();
    let e1 = d2.parts()[0];
    let lambda = Permutation::canonical(d1);
    let beta0 = Permutation::cycle(&[3, 2, 1], d)?;
    let keep = PointSubset::without(d, &[1, 2])?;
    let lam_proj = project(&lambda, &keep)?;
    if lambda.then(&beta0) != lam_proj {
        return Err(internal("lambda * beta0 differs from the projection of lambda"));
    }
    let lam_bar = keep.localize(&lam_proj)?;
    let mut parts = d2.parts().to_vec();
    parts[0] = e1 - 2;
    let reduced = Partition::new(parts)?;
    trace.beta0 = Some(beta0.clone());
    trace.deleted = Some(PointSubset::new(d, [1, 2])?);
    trace.reduced = Some((lam_bar.cycle_type(), reduced.clone()));

    // local label of a_{1,3}
    let x = keep.index_of(3).expect("3 is kept");
    let r = d1.defect() + d2.defect() + 1 - d;
    let beta_bar = if r == 2 {
        trace.subcase = Some(Subcase::One);
        eks_merge_anchored(&lam_bar, &reduced, (x, e1 - 2), rng)?.0
    } else {
        split(&lam_bar, &reduced, x, e1 - 2, trace, rng)?
    };
    if beta_bar.cycle_type() != reduced
        || !lam_bar.then(&beta_bar).is_full_cycle()
        || beta_bar.cycle_of(x).len() != e1 - 2
    {
        return Err(internal(format!("reduced partner {beta_bar} fails its contract")));
    }
    trace.beta_bar = Some(beta_bar.clone());
    let beta = beta0.then(&keep.globalize(&beta_bar)?);
    Ok((lambda, beta))
}

/// `r > 2`: split `D̄₂` into a part `D̄₂,₁` that exactly fills the merge and a remainder
/// `D̄₂,₂(j)` realized on a small set `U ∪ {∗}` by a conjugated two-cycle factorization.
fn split<R: Rng + ?Sized>(
    lam_bar: &Permutation,
    reduced: &Partition,
    x: usize,
    len: usize,
    trace: &mut ConstructionTrace,
    rng: &mut R,
) -> Result<Permutation> {
    let n = lam_bar.degree();
    let ones = reduced.ones();
    let mut e = reduced.nontrivial_parts().to_vec();
    e.reverse();

    let mut acc = lam_bar.defect();
    let mut k = 0;
    while k < e.len() && acc + e[k] <= n {
        acc += e[k] - 1;
        k += 1;
    }
    if k == e.len() || acc >= n {
        return Err(internal(format!("no split point for {reduced}")));
    }
    let f = n - acc;
    let filled = ones + e[..k].iter().sum::<usize>() + f;
    if filled >= n {
        return Err(internal("split leaves nothing for the second factor"));
    }
    let z = n - filled;
    let mut p21 = vec![1; ones + z];
    p21.extend_from_slice(&e[..k]);
    p21.push(f);
    let d21 = Partition::new(p21)?;

    let two_a = len == 1 || e[..k].contains(&len);
    let (j, anchor_len) = if two_a {
        trace.subcase = Some(Subcase::TwoA);
        (k, len)
    } else {
        trace.subcase = Some(Subcase::TwoB);
        let j = (k..e.len())
            .find(|&i| e[i] == len)
            .ok_or_else(|| internal(format!("{len} missing from {reduced}")))?;
        (j, f)
    };
    if !two_a && f == 1 && lam_bar.image(x) == x {
        // x is fixed by both factors, so no merge through it can be a full cycle
        return Err(precondition("f = 1 with a fixed anchor leaves no full-cycle merge"));
    }
    let beta1 = eks_merge_anchored(lam_bar, &d21, (x, anchor_len), rng)?.0;

    let fixed = beta1.fixed_points();
    let star = if !two_a {
        x
    } else if f > 1 {
        beta1
            .cycles()
            .into_iter()
            .filter(|c| c.len() == f && !c.contains(&x))
            .map(|c| c[0])
            .min()
            .ok_or_else(|| internal("no free f-cycle in the first factor"))?
    } else {
        *fixed
            .iter()
            .find(|&&y| y != x)
            .ok_or_else(|| internal("no free fixed point in the first factor"))?
    };
    let mut set_f: Vec<usize> = Vec::with_capacity(ones);
    if fixed.contains(&x) && x != star {
        set_f.push(x);
    }
    for &y in &fixed {
        if set_f.len() == ones {
            break;
        }
        if y != star && y != x {
            set_f.push(y);
        }
    }
    let u_set: Vec<usize> = fixed
        .iter()
        .copied()
        .filter(|&y| y != star && y != x && !set_f.contains(&y))
        .collect();
    if set_f.len() != ones || u_set.len() != z {
        return Err(internal("fixed points of the first factor do not split as expected"));
    }

    // read U in the order the full cycle visits it, starting after ∗
    let c = lam_bar.then(&beta1);
    let mut u = Vec::with_capacity(z);
    let mut y = c.image(star);
    while y != star {
        if u_set.contains(&y) {
            u.push(y);
        }
        y = c.image(y);
    }

    // τ on {1, …, z+1}; the cycle through z+1 (standing for ∗) has length e_j − f + 1
    let m = z + 1;
    let special = e[j] - f + 1;
    let mut lengths: Vec<usize> = (k..e.len()).filter(|&i| i != j).map(|i| e[i]).collect();
    lengths.push(special);
    if lengths.iter().sum::<usize>() != m {
        return Err(internal("second factor does not partition z + 1"));
    }
    let mut cycles = Vec::with_capacity(lengths.len());
    let mut next = 1;
    for l in lengths {
        cycles.push((next..next + l).collect::<Vec<_>>());
        next += l;
    }
    let tau = Permutation::from_cycles(&cycles, m)?;
    let d22 = tau.cycle_type();
    let (sigma, gamma) = factor_two_full_cycles(&tau, rng)?;
    let target: Vec<usize> = (1..=m).collect();
    let eta = aligning_conjugator(&sigma, &target, m)?;
    let beta2 = tau.conj(&eta);

    // local i ↦ u_i, z+1 ↦ ∗
    let to_global = |i: usize| if i == m { star } else { u[i - 1] };
    let mut images: Vec<usize> = (1..=n).collect();
    for i in 1..=m {
        images[to_global(i) - 1] = to_global(beta2.image(i));
    }
    let beta2_global = Permutation::from_images(images)?;
    let beta_bar = beta1.then(&beta2_global);

    trace.split = Some(SplitTrace {
        d21,
        d22,
        f,
        z,
        j: j + 1,
        star,
        beta1,
        beta2,
        tau,
        sigma,
        gamma,
        eta,
    });
    Ok(beta_bar)
}
