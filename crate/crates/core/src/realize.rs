//! Admissibility, Hurwitz certificates over the projective plane and the sphere, and the
//! independent certificate verifier.

use std::fmt;

use rand::Rng;

use crate::datum::{full_cycle_datum_construct, fundamental_construct, BranchDatum, Surface};
use crate::error::{internal, precondition, Error, Gate, Result};
use crate::group::{self, GeneratorSet};
use crate::perm::{Partition, Permutation};

/// `χ(M) = d·χ(N) − ν`.
pub fn euler_characteristic(base: Surface, d: usize, nu: usize) -> i64 {
    d as i64 * base.euler_characteristic() - nu as i64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Admissibility {
    /// `boundary` is set over the projective plane when `ν = d − 1`.
    Admissible { boundary: bool },
    Rejected(Gate),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub nu: usize,
    pub chi: i64,
    pub verdict: Admissibility,
}

impl AdmissibilityReport {
    pub fn is_admissible(&self) -> bool {
        matches!(self.verdict, Admissibility::Admissible { .. })
    }
}

impl fmt::Display for AdmissibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "nu={} chi={} ", self.nu, self.chi)?;
        match self.verdict {
            Admissibility::Admissible { boundary: true } => f.write_str("admissible boundary"),
            Admissibility::Admissible { boundary: false } => f.write_str("admissible strict"),
            Admissibility::Rejected(g) => write!(f, "{g}"),
        }
    }
}

/// Necessary conditions on the datum.
///
/// Over the projective plane: `ν` even and `ν ≥ d − 1`. Over the sphere: `ν` even and
/// `ν ≥ 2d − 2`, i.e. `χ(M) ≤ 2`. Over the sphere this is only necessary in general.
pub fn admissible(datum: &BranchDatum) -> AdmissibilityReport {
    let d = datum.degree();
    let nu = datum.defect();
    let base = datum.base();
    let chi = euler_characteristic(base, d, nu);
    let verdict = if !nu.is_multiple_of(2) {
        Admissibility::Rejected(Gate::Parity)
    } else {
        match base {
            Surface::Rp2 if nu + 1 < d => Admissibility::Rejected(Gate::BelowProjectiveBound),
            Surface::Rp2 => Admissibility::Admissible { boundary: nu + 1 == d },
            Surface::S2 if nu + 2 < 2 * d => Admissibility::Rejected(Gate::BelowSphereBound),
            Surface::S2 => Admissibility::Admissible { boundary: false },
        }
    };
    AdmissibilityReport { nu, chi, verdict }
}

/// Images of the generators of the fundamental group of the punctured base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzCertificate {
    pub datum: BranchDatum,
    /// Image of the crosscap generator; present exactly over the projective plane.
    pub a: Option<Permutation>,
    pub u: Vec<Permutation>,
}

impl HurwitzCertificate {
    pub fn base(&self) -> Surface {
        self.datum.base()
    }

    pub fn degree(&self) -> usize {
        self.datum.degree()
    }

    /// The line-oriented text form, LF terminated.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "base: {}\ndegree: {}\ndatum: {}\n",
            self.base(),
            self.degree(),
            self.datum
        );
        if let Some(a) = &self.a {
            out.push_str(&format!("a: {a}\n"));
        }
        for (i, u) in self.u.iter().enumerate() {
            out.push_str(&format!("u[{}]: {u}\n", i + 1));
        }
        out
    }

    /// Parses [`to_text`](Self::to_text) output. Only layout and syntax are checked here;
    /// the mathematical claims are left to [`verify_certificate`].
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .split('\n')
            .map(|l| l.strip_suffix('\r').unwrap_or(l))
            .filter(|l| !l.trim().is_empty());
        let mut next = |key: &str| -> Result<String> {
            let line = lines
                .next()
                .ok_or_else(|| Error::Format(format!("missing {key:?} line")))?;
            line.strip_prefix(key)
                .and_then(|r| r.strip_prefix(':'))
                .map(|r| r.trim().to_string())
                .ok_or_else(|| Error::Format(format!("expected {key:?}, found {line:?}")))
        };
        let base: Surface = next("base")?.parse()?;
        let degree: usize = next("degree")?
            .parse()
            .map_err(|_| Error::Format("degree is not a number".into()))?;
        let partitions = crate::datum::parse_partitions(&next("datum")?)?;
        let datum = BranchDatum::new(base, degree, partitions)?;
        let perm = |s: String| Permutation::parse(&s, degree).map_err(|e| Error::Format(e.to_string()));
        let a = match base {
            Surface::Rp2 => Some(perm(next("a")?)?),
            Surface::S2 => None,
        };
        let mut u = Vec::with_capacity(datum.len());
        for i in 1..=datum.len() {
            u.push(perm(next(&format!("u[{i}]"))?)?);
        }
        if let Some(extra) = lines.next() {
            return Err(Error::Format(format!("unexpected trailing line {extra:?}")));
        }
        Ok(HurwitzCertificate { datum, a, u })
    }
}

impl fmt::Display for HurwitzCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    ValidIndecomposable,
    ValidDecomposable,
    Invalid(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::ValidIndecomposable => f.write_str("valid-indecomposable"),
            Verdict::ValidDecomposable => f.write_str("valid-decomposable"),
            Verdict::Invalid(why) => write!(f, "invalid({why})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub relation_ok: bool,
    pub cycle_types_ok: bool,
    pub transitive: bool,
    pub primitive: bool,
    pub chi: i64,
    pub verdict: Verdict,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "relation: {}", ok(self.relation_ok))?;
        writeln!(f, "cycle types: {}", ok(self.cycle_types_ok))?;
        writeln!(f, "transitive: {}", self.transitive)?;
        writeln!(f, "primitive: {}", self.primitive)?;
        writeln!(f, "chi: {}", self.chi)?;
        writeln!(f, "orientability: not determined")?;
        write!(f, "verdict: {}", self.verdict)
    }
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "violated"
    }
}

/// Re-derives every claim of `cert` from its permutations alone.
pub fn verify_certificate(cert: &HurwitzCertificate) -> VerificationReport {
    let d = cert.degree();
    let chi = euler_characteristic(cert.base(), d, cert.datum.defect());
    let invalid = |why: String| VerificationReport {
        relation_ok: false,
        cycle_types_ok: false,
        transitive: false,
        primitive: false,
        chi,
        verdict: Verdict::Invalid(why),
    };
    let all = cert.a.iter().chain(&cert.u);
    if let Some(p) = all.clone().find(|p| p.degree() != d) {
        return invalid(format!("{p} has degree {} not {d}", p.degree()));
    }
    if cert.u.len() != cert.datum.len() {
        return invalid(format!("{} branch images for {} partitions", cert.u.len(), cert.datum.len()));
    }
    match (cert.base(), &cert.a) {
        (Surface::Rp2, None) => return invalid("missing a".into()),
        (Surface::S2, Some(_)) => return invalid("a present over the sphere".into()),
        _ => {}
    }

    let bad_type = cert
        .u
        .iter()
        .zip(cert.datum.partitions())
        .position(|(u, p)| u.cycle_type() != *p);
    let cycle_types_ok = bad_type.is_none();

    let mut lhs = Permutation::identity(d);
    if let Some(a) = &cert.a {
        lhs = a.then(a);
    }
    for u in &cert.u {
        lhs = lhs.then(u);
    }
    let relation_ok = lhs.is_identity();

    let gens = GeneratorSet::new(all.cloned().collect::<Vec<Permutation>>());
    let (transitive, primitive) = match gens {
        Ok(gs) if group::is_transitive(&gs) => (true, group::is_primitive(&gs).unwrap_or(false)),
        _ => (false, false),
    };

    let verdict = if let Some(i) = bad_type {
        Verdict::Invalid(format!("cycle type of u[{}]", i + 1))
    } else if !relation_ok {
        Verdict::Invalid("relation violated".into())
    } else if !transitive {
        Verdict::Invalid("monodromy not transitive".into())
    } else if primitive {
        Verdict::ValidIndecomposable
    } else {
        Verdict::ValidDecomposable
    };
    VerificationReport {
        relation_ok,
        cycle_types_ok,
        transitive,
        primitive,
        chi,
        verdict,
    }
}

fn self_check(cert: HurwitzCertificate) -> Result<HurwitzCertificate> {
    let report = verify_certificate(&cert);
    if report.verdict != Verdict::ValidIndecomposable {
        return Err(internal(format!("fresh certificate is {}", report.verdict)));
    }
    Ok(cert)
}

/// An indecomposable covering of the projective plane with branch datum `datum`.
///
/// `a` is the inverse of the square root of the product of the branch images, so
/// `a² u₁⋯u_s = 1`. Data on the boundary `ν = d − 1` are handled only when they contain
/// `[d]`.
pub fn realize_rp2<R: Rng + ?Sized>(datum: &BranchDatum, rng: &mut R) -> Result<HurwitzCertificate> {
    if datum.base() != Surface::Rp2 {
        return Err(precondition("datum is not over rp2"));
    }
    let d = datum.degree();
    if d.is_multiple_of(2) {
        return Err(Error::EvenDegree(d));
    }
    match admissible(datum).verdict {
        Admissibility::Rejected(g) => return Err(Error::Inadmissible(g)),
        Admissibility::Admissible { boundary: true } => {
            if !datum.partitions().iter().any(Partition::is_full_cycle) {
                return Err(Error::Inadmissible(Gate::Boundary));
            }
            let r = full_cycle_datum_construct(datum, rng)?;
            return self_check(HurwitzCertificate {
                datum: datum.clone(),
                a: Some(r.alpha),
                u: r.gammas,
            });
        }
        Admissibility::Admissible { boundary: false } => {}
    }
    let sigmas = fundamental_construct(datum, rng)?;
    let prod = Permutation::product(&sigmas).expect("non-empty");
    let a = prod.sqrt_odd_cycle()?.inverse();
    self_check(HurwitzCertificate {
        datum: datum.clone(),
        a: Some(a),
        u: sigmas,
    })
}

/// An indecomposable covering of the sphere; some partition of `datum` must be
/// `[d−2,1,1]` and `ν ≥ 2d − 2`.
///
/// The remaining partitions, read cyclically after the first `[d−2,1,1]`, are realized
/// with a `(d−2)`-cycle product whose inverse becomes the image at that point.
pub fn realize_sphere<R: Rng + ?Sized>(datum: &BranchDatum, rng: &mut R) -> Result<HurwitzCertificate> {
    if datum.base() != Surface::S2 {
        return Err(precondition("datum is not over s2"));
    }
    let d = datum.degree();
    if d.is_multiple_of(2) {
        return Err(Error::EvenDegree(d));
    }
    let near = Partition::near_full(d.max(3));
    let parts = datum.partitions();
    let i0 = parts
        .iter()
        .position(|p| *p == near)
        .ok_or(Error::Inadmissible(Gate::MissingNearFullCycle))?;
    if let Admissibility::Rejected(g) = admissible(datum).verdict {
        return Err(Error::Inadmissible(g));
    }
    let s = parts.len();
    let rest_idx: Vec<usize> = (1..s).map(|k| (i0 + k) % s).collect();
    let rest = BranchDatum::new(
        Surface::Rp2,
        d,
        rest_idx.iter().map(|&i| parts[i].clone()).collect(),
    )?;
    let sigmas = fundamental_construct(&rest, rng)?;
    let first = Permutation::product(&sigmas).expect("non-empty").inverse();
    let mut u = vec![Permutation::identity(d); s];
    u[i0] = first;
    for (&i, sigma) in rest_idx.iter().zip(sigmas) {
        u[i] = sigma;
    }
    self_check(HurwitzCertificate {
        datum: datum.clone(),
        a: None,
        u,
    })
}

/// Dispatches on the base surface of `datum`.
pub fn realize<R: Rng + ?Sized>(datum: &BranchDatum, rng: &mut R) -> Result<HurwitzCertificate> {
    match datum.base() {
        Surface::Rp2 => realize_rp2(datum, rng),
        Surface::S2 => realize_sphere(datum, rng),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(0)
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(euler_characteristic(Surface::Rp2, 5, 6), -1);
        assert_eq!(euler_characteristic(Surface::Rp2, 7, 6), 1);
        assert_eq!(euler_characteristic(Surface::S2, 3, 4), 2);
    }

    #[test]
    fn admissibility_lines() {
        let a = |base, s| admissible(&BranchDatum::parse(base, s).unwrap());
        assert_eq!(a(Surface::Rp2, "[3,2];[3,2]").to_string(), "nu=6 chi=-1 admissible strict");
        assert_eq!(a(Surface::Rp2, "[3,1,1];[3,1,1]").to_string(), "nu=4 chi=1 admissible boundary");
        assert_eq!(a(Surface::Rp2, "[2,1];[3]").verdict, Admissibility::Rejected(Gate::Parity));
        assert_eq!(a(Surface::S2, "[3,1,1]").verdict, Admissibility::Rejected(Gate::BelowSphereBound));
        assert!(a(Surface::S2, "[3,1,1];[3,2];[3,2]").is_admissible());
    }

    #[test]
    fn rp2_certificate_round_trip() {
        let datum = BranchDatum::parse(Surface::Rp2, "[3,2];[3,2]").unwrap();
        let cert = realize_rp2(&datum, &mut rng()).unwrap();
        assert_eq!(
            cert.to_text(),
            "base: rp2\ndegree: 5\ndatum: [3,2];[3,2]\na: (1 3 5)\nu[1]: (1 2 3)(4 5)\nu[2]: (1 5 4)(2 3)\n"
        );
        assert_eq!(HurwitzCertificate::parse(&cert.to_text()).unwrap(), cert);
        let report = verify_certificate(&cert);
        assert_eq!(report.verdict, Verdict::ValidIndecomposable);
        assert_eq!(report.chi, -1);
    }

    #[test]
    fn tampering_is_caught() {
        let datum = BranchDatum::parse(Surface::Rp2, "[3,2];[3,2]").unwrap();
        let mut cert = realize_rp2(&datum, &mut rng()).unwrap();
        cert.u[1] = Permutation::identity(5);
        assert_eq!(verify_certificate(&cert).verdict, Verdict::Invalid("cycle type of u[2]".into()));
        let mut cert = realize_rp2(&datum, &mut rng()).unwrap();
        cert.a = Some(Permutation::parse("(1 2)", 5).unwrap());
        assert_eq!(verify_certificate(&cert).verdict, Verdict::Invalid("relation violated".into()));
    }

    #[test]
    fn cyclic_monodromy_is_decomposable() {
        let u = Permutation::parse("(1 2 3 4 5 6 7 8 9)", 9).unwrap();
        let cert = HurwitzCertificate {
            datum: BranchDatum::parse(Surface::Rp2, "[9]").unwrap(),
            a: Some(u.sqrt_odd_cycle().unwrap().inverse()),
            u: vec![u],
        };
        assert_eq!(verify_certificate(&cert).verdict, Verdict::ValidDecomposable);
    }

    #[test]
    fn sphere_example() {
        let datum = BranchDatum::parse(Surface::S2, "[3,1,1];[3,2];[3,2]").unwrap();
        let cert = realize_sphere(&datum, &mut rng()).unwrap();
        assert_eq!(cert.u[0].to_string(), "(1 5 3)");
        assert_eq!(cert.u[1].to_string(), "(1 2 3)(4 5)");
        assert!(cert.a.is_none());
        assert!(!cert.to_text().contains("a:"));
        assert!(matches!(
            realize_sphere(&BranchDatum::parse(Surface::S2, "[3,1,1]").unwrap(), &mut rng()),
            Err(Error::Inadmissible(Gate::BelowSphereBound))
        ));
    }

    #[test]
    fn scope_errors() {
        let even = BranchDatum::parse(Surface::Rp2, "[2,2];[2,2]").unwrap();
        assert!(matches!(realize_rp2(&even, &mut rng()), Err(Error::EvenDegree(4))));
        let nine = BranchDatum::parse(Surface::Rp2, "[9]").unwrap();
        assert!(matches!(realize_rp2(&nine, &mut rng()), Err(Error::OnlyDecomposable(9))));
        let boundary = BranchDatum::parse(Surface::Rp2, "[3,1,1];[3,1,1]").unwrap();
        assert!(matches!(realize_rp2(&boundary, &mut rng()), Err(Error::Inadmissible(Gate::Boundary))));
    }
}
