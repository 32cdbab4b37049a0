//! Data containing a full cycle `[d]`, including the boundary `ν = d − 1`.

use num_integer::Integer;
use rand::Rng;

use super::reduce::braid_reorder;
use super::two::primitive_span;
use super::BranchDatum;
use crate::error::{internal, precondition, Error, Gate, Result};
use crate::group::{self, GeneratorSet};
use crate::perm::{Partition, Permutation};
use crate::search::{find_partner, PartnerQuery};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingleBranchVerdict {
    Decomposable,
    Indecomposable,
}

fn is_prime(d: usize) -> bool {
    d >= 2 && (2..).take_while(|k| k * k <= d).all(|k| !d.is_multiple_of(k))
}

/// A degree-`d` covering of the projective plane branched over one point is decomposable
/// exactly when `d` is composite.
pub fn single_branch_verdict(d: usize) -> Result<SingleBranchVerdict> {
    if d == 0 {
        return Err(precondition("degree must be positive"));
    }
    if d.is_even() {
        return Err(Error::EvenDegree(d));
    }
    Ok(if d == 1 || is_prime(d) {
        SingleBranchVerdict::Indecomposable
    } else {
        SingleBranchVerdict::Decomposable
    })
}

/// Images of the generators: `alpha` for the crosscap loop and one `gamma` per branch
/// point, with `alpha² · γ₁⋯γ_s = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullCycleRealization {
    pub alpha: Permutation,
    pub gammas: Vec<Permutation>,
}

/// Realizes a datum over the projective plane that contains `[d]`, with primitive
/// monodromy. Fails with [`Error::OnlyDecomposable`] for `{[d]}` with `d` composite.
pub fn full_cycle_datum_construct<R: Rng + ?Sized>(
    datum: &BranchDatum,
    rng: &mut R,
) -> Result<FullCycleRealization> {
    let d = datum.degree();
    let parts = datum.partitions();
    if d.is_even() {
        return Err(Error::EvenDegree(d));
    }
    let nu = datum.defect();
    if nu.is_odd() {
        return Err(Error::Inadmissible(Gate::Parity));
    }
    if nu + 1 < d {
        return Err(Error::Inadmissible(Gate::BelowProjectiveBound));
    }
    let full = parts
        .iter()
        .position(Partition::is_full_cycle)
        .ok_or_else(|| precondition(format!("{datum} has no [{d}]")))?;
    if parts.len() == 1 {
        if single_branch_verdict(d)? == SingleBranchVerdict::Decomposable {
            return Err(Error::OnlyDecomposable(d));
        }
        let u = Permutation::canonical(&parts[0]);
        let alpha = u.sqrt_odd_cycle()?.inverse();
        return finish(d, alpha, vec![u], parts);
    }

    // work with [d] last, then braid back
    let mut order: Vec<usize> = (0..parts.len()).filter(|&i| i != full).collect();
    order.push(full);
    let mut gammas: Vec<Permutation> = order[..order.len() - 1]
        .iter()
        .map(|&i| Permutation::canonical(&parts[i]))
        .collect();
    let mut p = Permutation::product(&gammas).expect("at least one factor");
    if p.is_identity() {
        // perturb the last factor by a transposition conjugation until the product moves
        let last = gammas.len() - 1;
        let original = gammas[last].clone();
        let perturbed = (1..d).find_map(|a| {
            let t = Permutation::cycle(&[a, a + 1], d).ok()?;
            let g = original.conj(&t);
            let mut trial = gammas.clone();
            trial[last] = g;
            let q = Permutation::product(&trial)?;
            (!q.is_identity()).then_some((trial, q))
        });
        let (trial, q) = perturbed.ok_or_else(|| internal("no perturbation moves the product"))?;
        gammas = trial;
        p = q;
    }

    let (gamma_s, alpha) = if p.is_full_cycle() {
        let g = p.inverse();
        let alpha = Permutation::cycle(&[1, g.image(1)], d)?;
        (g, alpha)
    } else {
        let fixed = !p.fixed_points().is_empty();
        if !p.is_even() || p.defect() + 1 >= d || !(fixed || !p.pow(2).is_identity()) {
            return Err(internal(format!("{p} fails the extension preconditions")));
        }
        let shape = Partition::full_cycle(d);
        let primitive = |b: &Permutation| {
            GeneratorSet::new(vec![p.clone(), b.clone()])
                .and_then(|gs| group::is_primitive(&gs))
                .unwrap_or(false)
        };
        let q = PartnerQuery::new(&p, &shape, 1).accept(&primitive);
        let g = find_partner(&q, rng)
            .ok_or_else(|| Error::SearchExhausted(format!("d-cycle extension of {p}")))?;
        let alpha = p.then(&g).sqrt_odd_cycle()?.inverse();
        (g, alpha)
    };
    gammas.push(gamma_s);
    let gammas = braid_reorder(gammas, &order);
    finish(d, alpha, gammas, parts)
}

fn finish(d: usize, alpha: Permutation, gammas: Vec<Permutation>, parts: &[Partition]) -> Result<FullCycleRealization> {
    for (g, p) in gammas.iter().zip(parts) {
        if g.cycle_type() != *p {
            return Err(internal(format!("{g} is not in {p}")));
        }
    }
    let prod = Permutation::product(&gammas).expect("non-empty");
    if !alpha.then(&alpha).then(&prod).is_identity() {
        return Err(internal("relation a^2 u_1...u_s = 1 fails"));
    }
    let mut gens = vec![alpha.clone()];
    gens.extend(gammas.iter().cloned());
    if !primitive_span(gens, &Permutation::identity(d).then(&prod))? {
        return Err(internal("monodromy group is not primitive"));
    }
    Ok(FullCycleRealization { alpha, gammas })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datum::Surface;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn run(s: &str) -> Result<FullCycleRealization> {
        let datum = BranchDatum::parse(Surface::Rp2, s).unwrap();
        full_cycle_datum_construct(&datum, &mut ChaCha8Rng::seed_from_u64(0))
    }

    #[test]
    fn verdicts() {
        assert_eq!(single_branch_verdict(9).unwrap(), SingleBranchVerdict::Decomposable);
        assert_eq!(single_branch_verdict(7).unwrap(), SingleBranchVerdict::Indecomposable);
        assert_eq!(single_branch_verdict(1).unwrap(), SingleBranchVerdict::Indecomposable);
        assert!(matches!(single_branch_verdict(4), Err(Error::EvenDegree(4))));
    }

    #[test]
    fn branches() {
        let r = run("[5];[5]").unwrap();
        assert_eq!(r.alpha.cycle_type().to_string(), "[2,1,1,1]");
        assert_eq!(r.gammas[1], r.gammas[0].inverse());
        let r = run("[3,1,1];[5]").unwrap();
        assert!(r.gammas[0].then(&r.gammas[1]).is_full_cycle());
        let r = run("[5]").unwrap();
        assert!(r.alpha.then(&r.alpha).then(&r.gammas[0]).is_identity());
        assert!(matches!(run("[9]"), Err(Error::OnlyDecomposable(9))));
        // the [d] partition need not come last
        let r = run("[5];[2,2,1];[2,2,1]").unwrap();
        assert_eq!(r.gammas[0].cycle_type().to_string(), "[5]");
    }
}
