//! Two branch points: `λ ∈ D₁`, `β ∈ D₂` with `λβ` a `(d−2)`-cycle and `⟨λ,β⟩` transitive.

use rand::Rng;

use super::appendix::lookup;
use super::case1::case1;
use super::{CaseTag, ConstructionTrace};
use crate::eks::eks_merge;
use crate::error::{internal, precondition, Error, Gate, Result};
use crate::group::{self, FastPath, GeneratorSet};
use crate::perm::{insertion_recombine, project, Partition, Permutation, PointSubset};
use crate::search::{find_partner, PartnerQuery};

/// Projective-plane gate with strict inequality: `d` odd, `ν` even and `ν > d − 1`.
pub(crate) fn strict_rp2_gate(d: usize, nu: usize) -> Result<()> {
    if d.is_multiple_of(2) {
        return Err(Error::EvenDegree(d));
    }
    if !nu.is_multiple_of(2) {
        return Err(Error::Inadmissible(Gate::Parity));
    }
    if nu + 1 < d {
        return Err(Error::Inadmissible(Gate::BelowProjectiveBound));
    }
    if nu + 1 == d {
        return Err(Error::Inadmissible(Gate::Boundary));
    }
    Ok(())
}

/// `a_{i,j}` for the canonical element of `shape` (both indices 1-based).
pub(crate) fn label(shape: &Partition, i: usize, j: usize) -> usize {
    shape.parts()[..i - 1].iter().sum::<usize>() + j
}

/// Transitive and primitive, trying the `l`-cycle shortcut with `witness` first.
pub(crate) fn primitive_span(gens: Vec<Permutation>, witness: &Permutation) -> Result<bool> {
    let gs = GeneratorSet::new(gens)?;
    if !group::is_transitive(&gs) {
        return Ok(false);
    }
    Ok(match group::primitivity_fast_path(&gs, witness) {
        FastPath::Primitive => true,
        FastPath::Inconclusive => group::is_primitive(&gs)?,
    })
}

fn verify_pair(lambda: &Permutation, beta: &Permutation, d1: &Partition, d2: &Partition) -> Result<()> {
    let d = d1.degree();
    if lambda.cycle_type() != *d1 || beta.cycle_type() != *d2 {
        return Err(internal(format!("pair ({lambda}, {beta}) has wrong cycle types")));
    }
    let prod = lambda.then(beta);
    if prod.cycle_type() != Partition::near_full(d) {
        return Err(internal(format!("product {prod} is not a ({})-cycle", d - 2)));
    }
    if !primitive_span(vec![lambda.clone(), beta.clone()], &prod)? {
        return Err(internal(format!("<{lambda}, {beta}> is not transitive and primitive")));
    }
    Ok(())
}

/// Exhaustive fallback: any `β ∈ D₂` with `λβ ∈ [d−2,1,1]` and `⟨λ,β⟩` transitive.
fn search_pair<R: Rng + ?Sized>(lambda: &Permutation, d2: &Partition, rng: &mut R) -> Result<Permutation> {
    let d = lambda.degree();
    let target = Partition::near_full(d);
    let ok = |b: &Permutation| {
        lambda.then(b).cycle_type() == target
            && GeneratorSet::new(vec![lambda.clone(), b.clone()])
                .map(|gs| group::is_transitive(&gs))
                .unwrap_or(false)
    };
    let q = PartnerQuery::new(lambda, d2, 3).accept(&ok);
    find_partner(&q, rng).ok_or_else(|| Error::SearchExhausted(format!("partner of {lambda} in {d2}")))
}

/// Realizes `{D₁, D₂}`: returns `λ ∈ D₁` (always the canonical element), `β ∈ D₂` with
/// `λβ ∈ [d−2,1,1]`, and the audit trace.
///
/// The trace records the construction in its own labeling, before any exchange of the
/// pair and the final relabeling that makes `λ` canonical. When the direct construction
/// fails its check, a complete search replaces it and `trace.fallback` says why.
pub fn two_datum_construct<R: Rng + ?Sized>(
    d1: &Partition,
    d2: &Partition,
    rng: &mut R,
) -> Result<(Permutation, Permutation, ConstructionTrace)> {
    let d = d1.degree();
    if d2.degree() != d {
        return Err(precondition(format!("{d1} and {d2} have different degrees")));
    }
    if d1.is_trivial() || d2.is_trivial() {
        return Err(Error::TrivialPartition);
    }
    strict_rp2_gate(d, d1.defect() + d2.defect())?;

    let normalize = |built: Built| {
        built.and_then(|(l, b)| {
            let mu = Permutation::conjugator_matching(&l, &Permutation::canonical(d1))?;
            let (l, b) = (l.conj(&mu), b.conj(&mu));
            verify_pair(&l, &b, d1, d2)?;
            Ok((l, b))
        })
    };
    let (mut trace, built) = build(d1, d2, rng);
    let mut checked = normalize(built);
    // equal defects: the other order is just as valid a starting point
    if checked.is_err() && d1.defect() == d2.defect() && d1 != d2 {
        let (mut other, built) = build_ordered(d2, d1, rng);
        other.swapped = true;
        let retry = normalize(built.map(|(l, b)| (b, l)));
        if retry.is_ok() {
            trace = other;
            checked = retry;
        }
    }
    let (lambda, beta) = match checked {
        Ok(pair) => pair,
        Err(e) => {
            trace.fallback = Some(e.to_string());
            let lambda = Permutation::canonical(d1);
            let beta = search_pair(&lambda, d2, rng)?;
            verify_pair(&lambda, &beta, d1, d2)?;
            (lambda, beta)
        }
    };
    Ok((lambda, beta, trace))
}

type Built = Result<(Permutation, Permutation)>;

fn build<R: Rng + ?Sized>(d1: &Partition, d2: &Partition, rng: &mut R) -> (ConstructionTrace, Built) {
    let d = d1.degree();
    if d == 3 {
        let lambda = Permutation::canonical(d1);
        let beta = lambda.inverse();
        return (ConstructionTrace::new(CaseTag::D3), Ok((lambda, beta)));
    }
    if d2.is_full_cycle() {
        return (ConstructionTrace::new(CaseTag::FullCycleDatum), full_partner(d1, rng));
    }
    if d1.is_full_cycle() || d1.defect() < d2.defect() {
        let (mut trace, built) = build(d2, d1, rng);
        trace.swapped = true;
        return (trace, built.map(|(l, b)| (b, l)));
    }
    build_ordered(d1, d2, rng)
}

/// Dispatch once the pair is in the order the cases expect.
fn build_ordered<R: Rng + ?Sized>(d1: &Partition, d2: &Partition, rng: &mut R) -> (ConstructionTrace, Built) {
    let (c1, e1) = (d1.parts()[0], d2.parts()[0]);
    if c1 == 3 && e1 == 3 {
        match lookup(d1, d2) {
            Err(e) => (ConstructionTrace::new(CaseTag::Case2Table), Err(e)),
            Ok(Some((row, reversed))) => {
                let mut trace = ConstructionTrace::new(CaseTag::Case2Table);
                trace.appendix_row = Some(row.index);
                let pair = if reversed {
                    (row.beta.clone(), row.lambda.clone())
                } else {
                    (row.lambda.clone(), row.beta.clone())
                };
                (trace, Ok(pair))
            }
            Ok(None) => {
                let mut trace = ConstructionTrace::new(CaseTag::Case2General);
                let built = case2_general(d1, d2, &mut trace, rng);
                (trace, built)
            }
        }
    } else if e1 == 2 {
        let mut trace = ConstructionTrace::new(CaseTag::Case3);
        let built = case3(d1, d2, &mut trace, rng);
        (trace, built)
    } else {
        let mut trace = ConstructionTrace::new(CaseTag::Case1);
        let built = case1(d1, d2, &mut trace, rng);
        (trace, built)
    }
}

/// `D₂ = [d]`: merge `λ⁻¹` with `[d−2,1,1]` to get `π`, then `β = λ⁻¹π` is a `d`-cycle
/// and `λβ = π`.
fn full_partner<R: Rng + ?Sized>(d1: &Partition, rng: &mut R) -> Built {
    let lambda = Permutation::canonical(d1);
    let inv = lambda.inverse();
    let pi = eks_merge(&inv, &Partition::near_full(d1.degree()), rng)?;
    Ok((lambda, inv.then(&pi)))
}

/// Shared tail of Cases 2 and 3: delete the used points, merge the remainder with
/// `reduced`, and reassemble `β = β₀ ı(β̄)`.
fn finish_with_merge<R: Rng + ?Sized>(
    d1: &Partition,
    beta0: Permutation,
    used: &[usize],
    reduced: Partition,
    trace: &mut ConstructionTrace,
    rng: &mut R,
) -> Built {
    let d = d1.degree();
    let lambda = Permutation::canonical(d1);
    let keep = PointSubset::without(d, used)?;
    let lb0 = lambda.then(&beta0);
    let lam_bar = keep.localize(&project(&lb0, &keep)?)?;
    trace.beta0 = Some(beta0.clone());
    trace.deleted = Some(PointSubset::new(d, used.iter().copied())?);
    trace.reduced = Some((lam_bar.cycle_type(), reduced.clone()));
    let beta_bar = eks_merge(&lam_bar, &reduced, rng)?;
    trace.beta_bar = Some(beta_bar.clone());
    let beta = beta0.then(&keep.globalize(&beta_bar)?);
    let rebuilt = insertion_recombine(&lb0, &keep.globalize(&lam_bar.then(&beta_bar))?, &keep)?;
    if rebuilt != lambda.then(&beta) {
        return Err(internal("reinsertion of used points disagrees with the product"));
    }
    Ok((lambda, beta))
}

/// Parts of `d2` after the first two, padded with ones to `size`.
fn tail_partition(d2: &Partition, size: usize) -> Result<Partition> {
    let mut parts: Vec<usize> = d2.parts()[2..].iter().copied().filter(|&p| p > 1).collect();
    let used: usize = parts.iter().sum();
    if used > size {
        return Err(internal("tail of D2 does not fit"));
    }
    parts.extend(std::iter::repeat_n(1, size - used));
    Ok(Partition::new(parts)?)
}

/// `c₁ = d₁ = 3`, outside the table: needs `t ≥ 4` and `c₁, …, c₄ ≥ 2`.
fn case2_general<R: Rng + ?Sized>(
    d1: &Partition,
    d2: &Partition,
    trace: &mut ConstructionTrace,
    rng: &mut R,
) -> Built {
    let c = d1.parts();
    if c.len() < 4 || c[3] < 2 {
        return Err(precondition(format!("{d1} is neither tabulated nor has four parts above 1")));
    }
    let a = |i, j| label(d1, i, j);
    let dd2 = *d2.parts().get(1).unwrap_or(&1);
    let d = d1.degree();
    let (beta0, used) = match dd2 {
        2 => (
            Permutation::from_cycles(&[vec![a(1, 2), a(1, 1)], vec![a(2, 2), a(2, 1), a(3, 1)]], d)?,
            vec![a(1, 1), a(1, 2), a(2, 1), a(2, 2), a(3, 1)],
        ),
        3 => (
            Permutation::from_cycles(
                &[vec![a(1, 2), a(1, 1), a(4, 1)], vec![a(2, 2), a(2, 1), a(3, 1)]],
                d,
            )?,
            vec![a(1, 1), a(1, 2), a(2, 1), a(2, 2), a(3, 1), a(4, 1)],
        ),
        _ => return Err(precondition(format!("second part of {d2} must be 2 or 3"))),
    };
    let reduced = tail_partition(d2, d - used.len())?;
    finish_with_merge(d1, beta0, &used, reduced, trace, rng)
}

/// `d₁ = 2`.
fn case3<R: Rng + ?Sized>(
    d1: &Partition,
    d2: &Partition,
    trace: &mut ConstructionTrace,
    rng: &mut R,
) -> Built {
    let c = d1.parts();
    let d = d1.degree();
    if d2.nontrivial_parts().len() < 2 {
        return Err(precondition(format!("{d2} needs two transpositions")));
    }
    let a = |i, j| label(d1, i, j);
    let (star, sharp) = if c[0] <= 4 {
        if c.get(1).copied().unwrap_or(1) < 3 {
            return Err(precondition(format!("expected c2 >= 3 for {d1}")));
        }
        (a(2, 2), a(2, 1))
    } else {
        (a(1, 3), a(1, 4))
    };
    let beta0 = Permutation::from_cycles(&[vec![a(1, 1), a(1, 2)], vec![star, sharp]], d)?;
    let used = vec![a(1, 1), a(1, 2), star, sharp];
    let reduced = tail_partition(d2, d - 4)?;
    finish_with_merge(d1, beta0, &used, reduced, trace, rng)
}
