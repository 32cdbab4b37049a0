use std::fmt;
use std::str::FromStr;

use super::PermError;

/// A partition of `d`, stored non-increasing with trailing ones kept.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Accepts parts in any order.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PermError> {
        if parts.is_empty() {
            return Err(PermError::Parse("empty partition".into()));
        }
        if parts.contains(&0) {
            return Err(PermError::Parse("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// `[d]`.
    pub fn full_cycle(d: usize) -> Self {
        Partition { parts: vec![d] }
    }

    /// `[d−2,1,1]`, the class of a `(d−2)`-cycle.
    pub fn near_full(d: usize) -> Self {
        assert!(d >= 3);
        Self::new(vec![d - 2, 1, 1]).unwrap()
    }

    /// `[1,…,1]`.
    pub fn trivial(d: usize) -> Self {
        Partition { parts: vec![1; d] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, trivial ones included.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `ν = d − #parts`.
    pub fn defect(&self) -> usize {
        self.degree() - self.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.parts[0] == 1
    }

    pub fn is_full_cycle(&self) -> bool {
        self.parts.len() == 1
    }

    pub fn ones(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 1).count()
    }

    /// Parts larger than one.
    pub fn nontrivial_parts(&self) -> &[usize] {
        &self.parts[..self.len() - self.ones()]
    }

    /// Every partition of `n`, in decreasing lexicographic order (`[n]` first).
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Every partition of `n` except `[1,…,1]`.
    pub fn all_nontrivial(n: usize) -> Vec<Partition> {
        Self::all(n).into_iter().filter(|p| !p.is_trivial()).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = PermError;

    /// Parses `[c1,c2,...]`; whitespace around entries is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| PermError::Parse(format!("partition literal {s:?} needs brackets")))?;
        let parts = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| PermError::Parse(format!("bad partition entry {tok:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}
