use super::{PermError, Permutation};

/// A subset of `{1, …, d}`, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointSubset {
    degree: usize,
    members: Vec<usize>,
}

impl PointSubset {
    pub fn new(degree: usize, members: impl IntoIterator<Item = usize>) -> Result<Self, PermError> {
        let mut members: Vec<usize> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&x| x == 0 || x > degree) {
            return Err(PermError::LabelOutOfRange { label: bad, degree });
        }
        members.sort_unstable();
        members.dedup();
        Ok(PointSubset { degree, members })
    }

    pub fn full(degree: usize) -> Self {
        PointSubset {
            degree,
            members: (1..=degree).collect(),
        }
    }

    /// `{1, …, d} ∖ removed`.
    pub fn without(degree: usize, removed: &[usize]) -> Result<Self, PermError> {
        let gone = Self::new(degree, removed.iter().copied())?;
        Ok(gone.complement())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn complement(&self) -> Self {
        PointSubset {
            degree: self.degree,
            members: (1..=self.degree).filter(|&x| !self.contains(x)).collect(),
        }
    }

    /// 1-based position of `x` among the members.
    pub fn index_of(&self, x: usize) -> Option<usize> {
        self.members.binary_search(&x).ok().map(|i| i + 1)
    }

    /// The member at 1-based position `i`.
    pub fn member(&self, i: usize) -> usize {
        self.members[i - 1]
    }

    /// Restricts `p` to the members, relabeled `1..=len` in increasing order.
    /// `p` must map the subset onto itself.
    pub fn localize(&self, p: &Permutation) -> Result<Permutation, PermError> {
        if p.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                left: p.degree(),
                right: self.degree,
            });
        }
        let images = self
            .members
            .iter()
            .map(|&x| self.index_of(p.image(x)).ok_or(PermError::SubsetNotInvariant(x)))
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::from_images(images)
    }

    /// Inverse of [`localize`](Self::localize): acts on the members, fixes the rest.
    pub fn globalize(&self, local: &Permutation) -> Result<Permutation, PermError> {
        if local.degree() != self.len() {
            return Err(PermError::DegreeMismatch {
                left: local.degree(),
                right: self.len(),
            });
        }
        let mut images: Vec<usize> = (1..=self.degree).collect();
        for (i, &x) in self.members.iter().enumerate() {
            images[x - 1] = self.members[local.images()[i] - 1];
        }
        Permutation::from_images(images)
    }

    fn mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.degree];
        for &x in &self.members {
            m[x - 1] = true;
        }
        m
    }
}

/// `℘`: deletes the points outside `keep` from the cycles of `p`. Labels are kept, so the
/// result has the degree of `p` and fixes every dropped point.
pub fn project(p: &Permutation, keep: &PointSubset) -> Result<Permutation, PermError> {
    if keep.is_empty() {
        return Err(PermError::EmptySubset);
    }
    if keep.degree() != p.degree() {
        return Err(PermError::DegreeMismatch {
            left: p.degree(),
            right: keep.degree(),
        });
    }
    let mask = keep.mask();
    let cycles: Vec<Vec<usize>> = p
        .cycles()
        .into_iter()
        .map(|c| c.into_iter().filter(|&x| mask[x - 1]).collect())
        .collect();
    Permutation::from_cycles(&cycles, p.degree())
}

/// `ı`: extends `p_sub` to `{1, …, ambient_degree}` by fixing the new points.
pub fn embed(p_sub: &Permutation, ambient_degree: usize) -> Result<Permutation, PermError> {
    if p_sub.degree() > ambient_degree {
        if let Some(&label) = p_sub.support().last().filter(|&&x| x > ambient_degree) {
            return Err(PermError::LabelOutOfRange {
                label,
                degree: ambient_degree,
            });
        }
        // points beyond the ambient range are all fixed; truncate
        return Permutation::from_images(p_sub.images()[..ambient_degree].to_vec());
    }
    let mut images = p_sub.images().to_vec();
    images.extend(p_sub.degree() + 1..=ambient_degree);
    Permutation::from_images(images)
}

/// Computes `λ · ı(β̄)` from `℘(λ)β̄` without forming `β̄`.
///
/// Each kept point `w` is followed in its `λ`-cycle by a maximal (possibly empty) run `S_w`
/// of deleted points. The result's cycles are those of `projected_product` with every `w`
/// replaced by `w S_w`, together with the `λ`-cycles that avoid `keep` entirely.
pub fn insertion_recombine(
    lambda: &Permutation,
    projected_product: &Permutation,
    keep: &PointSubset,
) -> Result<Permutation, PermError> {
    let d = lambda.degree();
    if projected_product.degree() != d || keep.degree() != d {
        return Err(PermError::DegreeMismatch {
            left: d,
            right: projected_product.degree().max(keep.degree()),
        });
    }
    let mask = keep.mask();
    if let Some(x) = projected_product.support().into_iter().find(|&x| !mask[x - 1]) {
        return Err(PermError::AnchorsInconsistent(format!(
            "projected product moves deleted point {x}"
        )));
    }

    let run_after = |w: usize| {
        let mut run = Vec::new();
        let mut x = lambda.image(w);
        while !mask[x - 1] {
            run.push(x);
            x = lambda.image(x);
        }
        run
    };

    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for c in projected_product.cycles_with_fixed() {
        if !mask[c[0] - 1] {
            continue;
        }
        let mut expanded = Vec::new();
        for w in c {
            expanded.push(w);
            expanded.extend(run_after(w));
        }
        cycles.push(expanded);
    }
    for c in lambda.cycles_with_fixed() {
        if c.iter().all(|&x| !mask[x - 1]) {
            cycles.push(c);
        }
    }
    Permutation::from_cycles(&cycles, d)
}
