mod common;

use common::*;
use hurwitz_core::perm::{embed, insertion_recombine, project, PermError};
use hurwitz_core::{Partition, Permutation, PointSubset};
use proptest::prelude::*;

#[test]
fn from_cycles_examples() {
    let p = perm("(1 2 3)(4 5)", 5);
    assert_eq!(p.images(), &[2, 3, 1, 5, 4]);
    assert!(perm("()", 4).is_identity());
    assert_eq!(Permutation::parse("(1 2)(1 3)", 3), Err(PermError::RepeatedLabel(1)));
    assert!(matches!(
        Permutation::parse("(1 7)", 5),
        Err(PermError::LabelOutOfRange { label: 7, degree: 5 })
    ));
    assert_eq!(p.to_string(), "(1 2 3)(4 5)");
    assert_eq!(perm("(5 4 1)(3 2)", 5).to_string(), "(1 5 4)(2 3)");
}

#[test]
fn compose_examples() {
    let prod = perm("(1 2 3)(4 5)", 5).then(&perm("(5 4 1)(3 2)", 5));
    assert_eq!(prod, perm("(1 3 5)(2)(4)", 5));
    assert_eq!(prod.image(1), 3);
    assert_eq!(prod.cycle_type(), part("[3,1,1]"));
    let p = perm("(1 4 2)", 5);
    assert_eq!(p.then(&Permutation::identity(5)), p);
    assert!(perm("(1 2)", 2).then(&perm("(1 2)", 2)).is_identity());
    assert!(matches!(
        p.compose(&Permutation::identity(4)),
        Err(PermError::DegreeMismatch { .. })
    ));
}

#[test]
fn cycle_type_examples() {
    let p = perm("(1 3 5)(2)(4)", 5);
    assert_eq!(p.cycle_type(), part("[3,1,1]"));
    assert_eq!(p.defect(), 2);
    assert_eq!(Permutation::identity(4).cycle_type(), part("[1,1,1,1]"));
    let q = perm("(1 2 3)(4 5 6)(7 8 9)", 9);
    assert_eq!(q.cycle_type(), part("[3,3,3]"));
    assert_eq!(q.defect(), 6);
}

#[test]
fn conjugation_examples() {
    // λαλ⁻¹ computed on image tables: apply λ, then α, then λ⁻¹
    let (alpha, lambda) = (perm("(1 2)", 3), perm("(2 3)", 3));
    let direct = naive_then(&naive_then(lambda.images(), alpha.images()), &naive_inverse(lambda.images()));
    let c = alpha.conjugate(&lambda).unwrap();
    assert_eq!(c.images(), direct.as_slice());
    assert_eq!(c, perm("(1 3)", 3));
    assert_eq!(alpha.conjugate(&Permutation::identity(3)).unwrap(), alpha);

    let (p, q) = (perm("(1 2 3)", 6), perm("(4 5 6)", 6));
    let l = Permutation::conjugator_matching(&p, &q).unwrap();
    assert_eq!(p.conjugate(&l).unwrap(), q);
    let l = Permutation::conjugator_matching(&p, &p).unwrap();
    assert_eq!(p.conjugate(&l).unwrap(), p);
    assert!(matches!(
        Permutation::conjugator_matching(&perm("(1 2)", 3), &perm("(1 2 3)", 3)),
        Err(PermError::CycleTypeMismatch { .. })
    ));
}

#[test]
fn square_root_examples() {
    let r = perm("(1 2 3 4 5)", 5).sqrt_odd_cycle().unwrap();
    assert_eq!(r, perm("(1 4 2 5 3)", 5));
    assert_eq!(naive_then(r.images(), r.images()), perm("(1 2 3 4 5)", 5).images());
    assert!(Permutation::identity(4).sqrt_odd_cycle().unwrap().is_identity());
    assert_eq!(perm("(1 2 3)", 3).sqrt_odd_cycle().unwrap(), perm("(1 3 2)", 3));
    assert_eq!(perm("(1 2)", 3).sqrt_odd_cycle(), Err(PermError::NotSingleOddCycle));
    assert_eq!(perm("(1 2 3)(4 5 6)", 6).sqrt_odd_cycle(), Err(PermError::NotSingleOddCycle));
}

#[test]
fn projection_examples() {
    let keep = PointSubset::new(5, [1, 3, 5]).unwrap();
    assert_eq!(project(&perm("(1 2 3)(4 5)", 5), &keep).unwrap(), perm("(1 3)", 5));
    assert!(project(&Permutation::identity(5), &keep).unwrap().is_identity());
    let full = perm("(1 3 5 2 4)", 5);
    assert_eq!(project(&full, &PointSubset::full(5)).unwrap(), full);
    assert_eq!(embed(&perm("(1 3)", 3), 5).unwrap(), perm("(1 3)", 5));
    assert!(embed(&Permutation::identity(3), 7).unwrap().is_identity());
}

#[test]
fn recombination_examples() {
    let lam = perm("(1 2 3)(4 5)", 5);
    let keep = PointSubset::new(5, [1, 3, 5]).unwrap();
    let q = perm("(1 3 5)", 5);
    // β̄ recovered from ℘(λ)β̄ = q, then composed directly
    let beta_bar = project(&lam, &keep).unwrap().inverse().then(&q);
    let direct = naive_then(lam.images(), beta_bar.images());
    assert_eq!(insertion_recombine(&lam, &q, &keep).unwrap().images(), direct.as_slice());
    assert_eq!(insertion_recombine(&lam, &project(&lam, &keep).unwrap(), &keep).unwrap(), lam);
    let lam = perm("(1 2)(3 4 5)", 5);
    let keep = PointSubset::new(5, [1, 2]).unwrap();
    let out = insertion_recombine(&lam, &perm("(1 2)", 5), &keep).unwrap();
    assert_eq!(out.cycle_of(3), vec![3, 4, 5]);
}

#[test]
fn partition_literals() {
    let p: Partition = "[2,3,1]".parse().unwrap();
    assert_eq!(p.to_string(), "[3,2,1]");
    assert_eq!(p.defect(), 3);
    assert!("[3;2]".parse::<Partition>().is_err());
}

fn arb_perm(max_d: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_d).prop_flat_map(|d| {
        Just((1..=d).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    })
}

fn arb_pair(max_d: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (1..=max_d).prop_flat_map(|d| {
        let s = Just((1..=d).collect::<Vec<_>>()).prop_shuffle();
        (s.clone(), s).prop_map(|(a, b)| (Permutation::from_images(a).unwrap(), Permutation::from_images(b).unwrap()))
    })
}

proptest! {
    #[test]
    fn defect_parity_is_additive((p, q) in arb_pair(11)) {
        prop_assert_eq!(p.then(&q).defect() % 2, (p.defect() + q.defect()) % 2);
    }

    #[test]
    fn composition_matches_image_tables((p, q) in arb_pair(11)) {
        let expected = naive_then(p.images(), q.images());
        let got = p.then(&q);
        prop_assert_eq!(got.images(), expected.as_slice());
    }

    #[test]
    fn conjugation_preserves_type((p, l) in arb_pair(9)) {
        let c = p.conjugate(&l).unwrap();
        prop_assert_eq!(c.cycle_type(), p.cycle_type());
        let m = Permutation::conjugator_matching(&p, &c).unwrap();
        prop_assert_eq!(p.conjugate(&m).unwrap(), c);
    }

    #[test]
    fn printing_round_trips(p in arb_perm(12)) {
        prop_assert_eq!(Permutation::parse(&p.to_string(), p.degree()).unwrap(), p.clone());
        let lengths = naive_cycle_lengths(p.images());
        let ct = p.cycle_type();
        prop_assert_eq!(ct.parts(), lengths.as_slice());
    }

    #[test]
    fn inverse_and_powers(p in arb_perm(10)) {
        prop_assert!(p.then(&p.inverse()).is_identity());
        prop_assert_eq!(p.pow(3), p.then(&p).then(&p));
    }

    #[test]
    fn localize_globalize_round_trip(p in arb_perm(9), mask in proptest::collection::vec(any::<bool>(), 9)) {
        let d = p.degree();
        let keep = PointSubset::new(d, (1..=d).filter(|&x| mask[x - 1])).unwrap();
        prop_assume!(!keep.is_empty());
        let local = Permutation::from_images(
            (1..=keep.len()).map(|i| ((i * 7) % keep.len()) + 1).collect(),
        );
        prop_assume!(local.is_ok());
        let local = local.unwrap();
        let global = keep.globalize(&local).unwrap();
        prop_assert_eq!(project(&global, &keep).unwrap(), global.clone());
        prop_assert_eq!(keep.localize(&global).unwrap(), local);
        let pr = project(&p, &keep).unwrap();
        prop_assert!(keep.complement().members().iter().all(|&x| pr.image(x) == x));
    }
}
