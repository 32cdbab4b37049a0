mod common;

use common::*;
use hurwitz_core::datum::{BranchDatum, Surface};
use hurwitz_core::realize::{
    admissible, euler_characteristic, realize, realize_rp2, realize_sphere, verify_certificate,
    Admissibility, HurwitzCertificate, Verdict,
};
use hurwitz_core::{Error, Gate, Permutation};

fn datum(base: Surface, literal: &str) -> BranchDatum {
    BranchDatum::parse(base, literal).unwrap()
}

/// Relation and cycle types recomputed on raw image tables.
fn independent_check(cert: &HurwitzCertificate) {
    let d = cert.degree();
    let mut acc: Vec<usize> = (1..=d).collect();
    if let Some(a) = &cert.a {
        acc = naive_then(&naive_then(&acc, a.images()), a.images());
    }
    for u in &cert.u {
        acc = naive_then(&acc, u.images());
    }
    assert_eq!(acc, (1..=d).collect::<Vec<_>>(), "relation");
    for (u, p) in cert.u.iter().zip(cert.datum.partitions()) {
        assert_eq!(naive_cycle_lengths(u.images()), p.parts());
    }
    let mut tables: Vec<&[usize]> = cert.u.iter().map(Permutation::images).collect();
    if let Some(a) = &cert.a {
        tables.push(a.images());
    }
    assert!(naive_transitive(&tables));
}

#[test]
fn admissibility_examples() {
    let r = admissible(&datum(Surface::Rp2, "[3,2];[3,2]"));
    assert_eq!((r.nu, r.chi), (6, -1));
    assert_eq!(r.verdict, Admissibility::Admissible { boundary: false });
    assert_eq!(r.to_string(), "nu=6 chi=-1 admissible strict");

    let r = admissible(&datum(Surface::Rp2, "[3,1,1];[3,1,1]"));
    assert_eq!(r.verdict, Admissibility::Admissible { boundary: true });
    assert_eq!(r.chi, 1);
    assert_eq!(r.to_string(), "nu=4 chi=1 admissible boundary");

    let r = admissible(&datum(Surface::Rp2, "[2,1];[3]"));
    assert_eq!(r.verdict, Admissibility::Rejected(Gate::Parity));
    assert_eq!(r.to_string(), "nu=3 chi=0 parity violation");

    let r = admissible(&datum(Surface::S2, "[3,1,1]"));
    assert_eq!(r.verdict, Admissibility::Rejected(Gate::BelowSphereBound));
    assert!(admissible(&datum(Surface::S2, "[3,1,1];[3,2];[3,2]")).is_admissible());
}

#[test]
fn euler_characteristic_examples() {
    assert_eq!(euler_characteristic(Surface::Rp2, 5, 6), -1);
    for d in [3, 5, 7, 11] {
        assert_eq!(euler_characteristic(Surface::Rp2, d, d - 1), 1);
    }
    assert_eq!(euler_characteristic(Surface::S2, 3, 4), 2);
}

#[test]
fn projective_examples() {
    let mut r = rng(0);
    let cert = realize_rp2(&datum(Surface::Rp2, "[3,2];[3,2]"), &mut r).unwrap();
    let a = cert.a.clone().unwrap();
    assert_eq!(a.then(&a), perm("(1 5 3)", 5));
    assert_eq!(cert.u, vec![perm("(1 2 3)(4 5)", 5), perm("(5 4 1)(3 2)", 5)]);
    independent_check(&cert);
    let report = verify_certificate(&cert);
    assert_eq!(report.verdict, Verdict::ValidIndecomposable);
    assert_eq!(report.chi, -1);
    assert_eq!(
        cert.to_text(),
        "base: rp2\ndegree: 5\ndatum: [3,2];[3,2]\na: (1 3 5)\nu[1]: (1 2 3)(4 5)\nu[2]: (1 5 4)(2 3)\n"
    );

    let cert = realize_rp2(&datum(Surface::Rp2, "[3,3,3];[3,3,3]"), &mut r).unwrap();
    let prod = cert.u[0].then(&cert.u[1]);
    assert_eq!(prod, perm("(1 4 7 9 6 3 8)", 9));
    let a = cert.a.clone().unwrap();
    assert!(a.then(&a).then(&prod).is_identity());
    independent_check(&cert);

    assert!(matches!(
        realize_rp2(&datum(Surface::Rp2, "[2,2];[2,2]"), &mut r),
        Err(Error::EvenDegree(4))
    ));
}

#[test]
fn sphere_examples() {
    let mut r = rng(1);
    let cert = realize_sphere(&datum(Surface::S2, "[3,1,1];[3,2];[3,2]"), &mut r).unwrap();
    assert_eq!(cert.u[0], perm("(1 5 3)", 5));
    assert_eq!(&cert.u[1..], &[perm("(1 2 3)(4 5)", 5), perm("(5 4 1)(3 2)", 5)]);
    assert!(cert.a.is_none());
    independent_check(&cert);

    assert!(matches!(
        realize_sphere(&datum(Surface::S2, "[3,1,1]"), &mut r),
        Err(Error::Inadmissible(Gate::BelowSphereBound))
    ));

    let cert = realize_sphere(&datum(Surface::S2, "[7,1,1];[7,1,1];[3,3,3]"), &mut r).unwrap();
    independent_check(&cert);
    let report = verify_certificate(&cert);
    assert_eq!(report.verdict, Verdict::ValidIndecomposable);
    assert_eq!(report.chi, 18 - 18);

    assert!(matches!(
        realize_sphere(&datum(Surface::S2, "[3,2];[3,2];[3,2]"), &mut r),
        Err(Error::Inadmissible(Gate::MissingNearFullCycle))
    ));
}

#[test]
fn sphere_datum_may_list_the_near_full_class_anywhere() {
    let cert = realize(&datum(Surface::S2, "[3,2];[3,1,1];[3,2]"), &mut rng(2)).unwrap();
    assert_eq!(cert.u[1].cycle_type(), part("[3,1,1]"));
    independent_check(&cert);
}

#[test]
fn verifier_examples() {
    let cert = realize(&datum(Surface::Rp2, "[3,2];[3,2]"), &mut rng(0)).unwrap();
    let mut bad = cert.clone();
    bad.u[1] = Permutation::identity(5);
    match verify_certificate(&bad).verdict {
        Verdict::Invalid(why) => assert!(why.contains("cycle type")),
        v => panic!("tampered certificate judged {v}"),
    }

    let mut bad = cert.clone();
    bad.a = cert.a.as_ref().map(Permutation::inverse);
    match verify_certificate(&bad).verdict {
        Verdict::Invalid(why) => assert!(why.contains("relation")),
        v => panic!("tampered certificate judged {v}"),
    }

    // cyclic monodromy of composite degree
    let u = perm("(1 2 3 4 5 6 7 8 9)", 9);
    let cyc = HurwitzCertificate {
        datum: datum(Surface::Rp2, "[9]"),
        a: Some(u.sqrt_odd_cycle().unwrap().inverse()),
        u: vec![u],
    };
    let report = verify_certificate(&cyc);
    assert!(report.relation_ok && report.transitive && !report.primitive);
    assert_eq!(report.verdict, Verdict::ValidDecomposable);
    assert_eq!(report.verdict.to_string(), "valid-decomposable");
    assert!(report.to_string().contains("orientability: not determined"));
}

#[test]
fn certificate_text_round_trips() {
    let mut r = rng(3);
    for (base, lit) in [
        (Surface::Rp2, "[3,2];[3,2];[2,2,1]"),
        (Surface::Rp2, "[3,1,1];[5]"),
        (Surface::S2, "[5,1,1];[3,3,1];[3,3,1]"),
    ] {
        let cert = realize(&datum(base, lit), &mut r).unwrap();
        independent_check(&cert);
        let text = cert.to_text();
        assert_eq!(HurwitzCertificate::parse(&text).unwrap(), cert);
    }
    let good = "base: s2\ndegree: 5\ndatum: [3,1,1];[3,2];[3,2]\nu[1]: (1 5 3)\nu[2]: (1 2 3)(4 5)\nu[3]: (1 5 4)(2 3)\n";
    assert!(HurwitzCertificate::parse(good).is_ok());
    let swapped = good.replace("degree: 5\n", "").replacen("base: s2\n", "base: s2\ndegree: 5\n", 1);
    assert!(HurwitzCertificate::parse(&swapped).is_ok());
    for broken in [
        good.replace("degree: 5", "degree: five"),
        good.replace("u[2]", "u[7]"),
        good.replace("base: s2", "base: torus"),
        format!("{good}junk\n"),
        good.replace("(4 5)", "(4 6)"),
    ] {
        assert!(matches!(HurwitzCertificate::parse(&broken), Err(Error::Format(_))), "{broken}");
    }
}

#[test]
fn boundary_data_with_a_full_cycle() {
    let mut r = rng(4);
    let cert = realize(&datum(Surface::Rp2, "[7]"), &mut r).unwrap();
    independent_check(&cert);
    assert_eq!(verify_certificate(&cert).chi, 1);
    assert!(matches!(realize(&datum(Surface::Rp2, "[9]"), &mut r), Err(Error::OnlyDecomposable(9))));
    assert!(matches!(
        realize(&datum(Surface::Rp2, "[3,1,1];[3,1,1]"), &mut r),
        Err(Error::Inadmissible(Gate::Boundary))
    ));
}
