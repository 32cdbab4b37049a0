use std::fmt;

use super::{Partition, PermError};

/// A bijection of `{1, …, d}`.
///
/// Points are 1-based throughout. Products are read left to right:
/// `p.then(&q)` maps `x` to `q(p(x))`, which is the convention under which the
/// products of the built-in table check out (e.g. `(1 2 3)(4 5)` followed by
/// `(5 4 1)(3 2)` gives `(1 3 5)`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (1..=degree).collect(),
        }
    }

    /// Builds a permutation from its image table; `images[x - 1]` is the image of `x`.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &y in &images {
            if y == 0 || y > degree {
                return Err(PermError::LabelOutOfRange { label: y, degree });
            }
            if std::mem::replace(&mut seen[y - 1], true) {
                return Err(PermError::NotABijection);
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from pairwise disjoint cycles. Labels not mentioned are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(cycles: &[C], degree: usize) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (i, &x) in cycle.iter().enumerate() {
                if x == 0 || x > degree {
                    return Err(PermError::LabelOutOfRange { label: x, degree });
                }
                if std::mem::replace(&mut seen[x - 1], true) {
                    return Err(PermError::RepeatedLabel(x));
                }
                images[x - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// A single cycle through `points`.
    pub fn cycle(points: &[usize], degree: usize) -> Result<Self, PermError> {
        Self::from_cycles(&[points], degree)
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)`; `()` is the identity.
    pub fn parse(s: &str, degree: usize) -> Result<Self, PermError> {
        let cycles = parse_cycles(s)?;
        Self::from_cycles(&cycles, degree)
    }

    /// Cycles laid out left to right on `1..d` in the order of `shape` (longest first,
    /// since partitions are stored non-increasing). Fixed points come last.
    pub fn canonical(shape: &Partition) -> Self {
        let mut next = 1;
        let mut cycles = Vec::with_capacity(shape.len());
        for &len in shape.parts() {
            cycles.push((next..next + len).collect::<Vec<_>>());
            next += len;
        }
        Self::from_cycles(&cycles, shape.degree()).expect("layout is disjoint and in range")
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`. Panics when `x` is out of range.
    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (i, &y) in self.images.iter().enumerate() {
            inv[y - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// `self` followed by `other`: `x ↦ other(self(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self, PermError> {
        self.check_degree(other)?;
        Ok(self.then(other))
    }

    /// Infallible form of [`compose`](Self::compose). Panics on degree mismatch.
    pub fn then(&self, other: &Permutation) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in product");
        Permutation {
            images: self.images.iter().map(|&y| other.image(y)).collect(),
        }
    }

    /// Left-to-right product of a sequence. `None` for an empty sequence.
    pub fn product<'a, I>(perms: I) -> Option<Self>
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let mut it = perms.into_iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, p| acc.then(p)))
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::identity(self.degree());
        for _ in 0..k {
            acc = acc.then(self);
        }
        acc
    }

    /// `by · self · by⁻¹`. Each cycle `(a₁ a₂ …)` of `self` becomes `(by⁻¹(a₁) by⁻¹(a₂) …)`.
    pub fn conjugate(&self, by: &Permutation) -> Result<Self, PermError> {
        self.check_degree(by)?;
        Ok(by.then(self).then(&by.inverse()))
    }

    pub(crate) fn conj(&self, by: &Permutation) -> Self {
        by.then(self).then(&by.inverse())
    }

    /// All cycles including fixed points, each rotated to start at its smallest
    /// element, ordered by that element.
    pub fn cycles_with_fixed(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 1..=d {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x - 1] {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Non-trivial cycles in canonical order.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.cycles_with_fixed()
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect()
    }

    pub fn cycle_count(&self) -> usize {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut count = 0;
        for start in 1..=d {
            if seen[start - 1] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x - 1] {
                seen[x - 1] = true;
                x = self.image(x);
            }
        }
        count
    }

    pub fn cycle_type(&self) -> Partition {
        let parts = self.cycles_with_fixed().iter().map(Vec::len).collect();
        Partition::new(parts).expect("cycle lengths are positive")
    }

    /// The defect `ν = d − #cycles`.
    pub fn defect(&self) -> usize {
        self.degree() - self.cycle_count()
    }

    pub fn is_even(&self) -> bool {
        self.defect().is_multiple_of(2)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| y == i + 1)
    }

    /// True for a single cycle through every point (degree 1 counts).
    pub fn is_full_cycle(&self) -> bool {
        self.cycle_count() == 1
    }

    pub fn support(&self) -> Vec<usize> {
        (1..=self.degree()).filter(|&x| self.image(x) != x).collect()
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.degree()).filter(|&x| self.image(x) == x).collect()
    }

    /// The cycle through `x`, starting at `x`.
    pub fn cycle_of(&self, x: usize) -> Vec<usize> {
        let mut out = vec![x];
        let mut y = self.image(x);
        while y != x {
            out.push(y);
            y = self.image(y);
        }
        out
    }

    /// A deterministic `λ` with `p.conjugate(λ) == q`.
    ///
    /// Cycles of equal length are matched in order of their smallest label.
    pub fn conjugator_matching(p: &Permutation, q: &Permutation) -> Result<Self, PermError> {
        p.check_degree(q)?;
        let (tp, tq) = (p.cycle_type(), q.cycle_type());
        if tp != tq {
            return Err(PermError::CycleTypeMismatch { left: tp, right: tq });
        }
        let sorted = |perm: &Permutation| {
            let mut cs = perm.cycles_with_fixed();
            // stable sort keeps smallest-label order among equal lengths
            cs.sort_by_key(|c| std::cmp::Reverse(c.len()));
            cs
        };
        let mut images = vec![0; p.degree()];
        for (cp, cq) in sorted(p).iter().zip(sorted(q).iter()) {
            for (&a, &b) in cp.iter().zip(cq.iter()) {
                images[b - 1] = a;
            }
        }
        Ok(Permutation { images })
    }

    /// Square root of a permutation whose non-trivial part is one cycle of odd length.
    ///
    /// For `(a₁ a₂ … a_r)` with `m = (r+1)/2` this is
    /// `(a₁ a_{m+1} a₂ a_{m+2} … a_{r} a_m)`; fixed points stay fixed.
    pub fn sqrt_odd_cycle(&self) -> Result<Self, PermError> {
        let cycles = self.cycles();
        match cycles.as_slice() {
            [] => Ok(self.clone()),
            [c] if c.len() % 2 == 1 => {
                let r = c.len();
                let m = r.div_ceil(2);
                let mut seq = Vec::with_capacity(r);
                for i in 0..m - 1 {
                    seq.push(c[i]);
                    seq.push(c[m + i]);
                }
                seq.push(c[m - 1]);
                Ok(Self::cycle(&seq, self.degree())?)
            }
            _ => Err(PermError::NotSingleOddCycle),
        }
    }

    fn check_degree(&self, other: &Permutation) -> Result<(), PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [d={}]", self, self.degree())
    }
}

/// Splits cycle notation into integer sequences without range checking.
pub fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>, PermError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(PermError::Parse("empty cycle notation".into()));
    }
    let mut cycles = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        rest = rest.trim_start();
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| PermError::Parse(format!("expected '(' in {s:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| PermError::Parse(format!("unclosed cycle in {s:?}")))?;
        let inner = &body[..close];
        if inner.contains('(') {
            return Err(PermError::Parse(format!("nested '(' in {s:?}")));
        }
        let cycle = inner
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| PermError::Parse(format!("bad label {tok:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}
