mod common;

use common::*;
use hurwitz_core::datum::appendix_rows;
use hurwitz_core::group::{
    decomposability_verdict, is_primitive, is_transitive, minimal_block, orbits, primitivity,
    primitivity_fast_path, Decomposability, FastPath, GeneratorSet, GroupError, Primitivity,
};
use hurwitz_core::Permutation;
use proptest::prelude::*;

fn gs(list: &[&str], d: usize) -> GeneratorSet {
    GeneratorSet::new(list.iter().map(|s| perm(s, d)).collect()).unwrap()
}

fn row_gens(index: usize) -> GeneratorSet {
    let row = appendix_rows().unwrap().iter().find(|r| r.index == index).unwrap();
    GeneratorSet::new(vec![row.lambda.clone(), row.beta.clone()]).unwrap()
}

#[test]
fn orbit_examples() {
    assert_eq!(orbits(&gs(&["(1 2 3)(4 5)"], 5)), vec![vec![1, 2, 3], vec![4, 5]]);
    assert_eq!(orbits(&gs(&["()"], 3)), vec![vec![1], vec![2], vec![3]]);
    assert_eq!(orbits(&row_gens(1)), vec![vec![1, 2, 3, 4, 5]]);
    assert!(GeneratorSet::new(vec![]).is_err());
    assert!(matches!(
        GeneratorSet::new(vec![perm("(1 2)", 2), perm("(1 2)", 3)]),
        Err(GroupError::DegreeMismatch(2, 3))
    ));
}

#[test]
fn transitivity_examples() {
    assert_eq!(row_gens(7).degree(), 9);
    assert!(is_transitive(&row_gens(7)));
    assert!(!is_transitive(&gs(&["()"], 2)));
    assert!(!is_transitive(&gs(&["(1 2)", "(3 4)"], 4)));
}

#[test]
fn minimal_block_examples() {
    assert_eq!(minimal_block(&gs(&["(1 2 3 4)"], 4), (1, 3)).unwrap().members(), &[1, 3]);
    let s5 = gs(&["(1 2 3 4 5)", "(1 2)"], 5);
    for x in 2..=5 {
        assert_eq!(minimal_block(&s5, (1, x)).unwrap().len(), 5);
    }
    assert_eq!(minimal_block(&gs(&["(1 2 3 4 5 6)"], 6), (1, 4)).unwrap().members(), &[1, 4]);
    assert!(matches!(
        minimal_block(&gs(&["(1 2)", "(3 4)"], 4), (1, 2)),
        Err(GroupError::Intransitive(2))
    ));
    assert!(minimal_block(&s5, (2, 2)).is_err());
}

#[test]
fn primitivity_examples() {
    match primitivity(&gs(&["(1 2 3 4)"], 4)).unwrap() {
        Primitivity::Imprimitive(b) => assert_eq!(b.blocks(), &[vec![1, 3], vec![2, 4]]),
        Primitivity::Primitive => panic!("cyclic group of order 4 has blocks"),
    }
    assert!(is_primitive(&gs(&["(1 2 3)", "(1 2)"], 3)).unwrap());
    assert_eq!(row_gens(13).degree(), 11);
    assert!(is_primitive(&row_gens(13)).unwrap());
    assert!(is_primitive(&gs(&["(1 2)", "(3 4)"], 4)).is_err());
}

#[test]
fn fast_path_examples() {
    let s5 = gs(&["(1 2 3 4 5)", "(1 2)"], 5);
    assert_eq!(primitivity_fast_path(&s5, &perm("(1 2 3)", 5)), FastPath::Primitive);
    let s9 = gs(&["(1 2 3 4 5 6 7 8 9)", "(1 2)"], 9);
    assert_eq!(primitivity_fast_path(&s9, &perm("(1 2 3 4 5 6 7)", 9)), FastPath::Primitive);
    assert_eq!(primitivity_fast_path(&s9, &perm("(1 2 3)", 9)), FastPath::Inconclusive);
    // two non-trivial cycles carry no usable length
    assert_eq!(primitivity_fast_path(&s9, &perm("(1 2)(3 4)", 9)), FastPath::Inconclusive);
}

#[test]
fn verdict_examples() {
    match decomposability_verdict(&gs(&["(1 2 3 4 5 6 7 8 9)"], 9)).unwrap() {
        Decomposability::Decomposable(b) => assert_eq!(b.block_size(), 3),
        Decomposability::Indecomposable => panic!("cyclic group of order 9 is imprimitive"),
    }
    assert_eq!(decomposability_verdict(&row_gens(1)).unwrap(), Decomposability::Indecomposable);
    assert_eq!(
        decomposability_verdict(&gs(&["(1 2 3 4 5)"], 5)).unwrap(),
        Decomposability::Indecomposable
    );
}

#[test]
fn every_table_row_is_primitive() {
    for row in appendix_rows().unwrap() {
        assert!(is_primitive(&row_gens(row.index)).unwrap(), "row {}", row.index);
    }
}

/// A generator set together with a random element of the group it generates.
fn arb_gens_with_word() -> impl Strategy<Value = (Vec<Permutation>, Permutation)> {
    (2usize..=8, 1usize..=3).prop_flat_map(|(d, k)| {
        let one = Just((1..=d).collect::<Vec<_>>()).prop_shuffle();
        (proptest::collection::vec(one, k), proptest::collection::vec(0usize..k, 0..6)).prop_map(
            move |(tables, word)| {
                let gens: Vec<Permutation> =
                    tables.into_iter().map(|t| Permutation::from_images(t).unwrap()).collect();
                let w = word.iter().fold(Permutation::identity(d), |acc, &i| acc.then(&gens[i]));
                (gens, w)
            },
        )
    })
}

proptest! {
    #[test]
    fn minimal_blocks_are_closed((gens, _) in arb_gens_with_word(), x in 2usize..=8) {
        let g = GeneratorSet::new(gens).unwrap();
        prop_assume!(is_transitive(&g) && x <= g.degree());
        let block = minimal_block(&g, (1, x)).unwrap();
        prop_assert!(block.contains(1) && block.contains(x));
        for s in g.generators() {
            let image: Vec<usize> = block.members().iter().map(|&y| s.image(y)).collect();
            let inside = image.iter().filter(|&&y| block.contains(y)).count();
            prop_assert!(inside == 0 || inside == block.len());
        }
    }

    #[test]
    fn fast_path_never_contradicts((gens, w) in arb_gens_with_word()) {
        let g = GeneratorSet::new(gens).unwrap();
        if primitivity_fast_path(&g, &w) == FastPath::Primitive {
            prop_assert!(is_primitive(&g).unwrap());
        }
    }

    #[test]
    fn witness_blocks_are_invariant((gens, _) in arb_gens_with_word()) {
        let g = GeneratorSet::new(gens).unwrap();
        prop_assume!(is_transitive(&g));
        if let Primitivity::Imprimitive(b) = primitivity(&g).unwrap() {
            prop_assert!(b.is_nontrivial() && b.is_invariant(&g));
            prop_assert_eq!(g.degree() % b.block_size(), 0);
        }
    }
}
