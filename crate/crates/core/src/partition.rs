//! Integer partitions.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers.
///
/// `Ord` is the canonical order used everywhere in the crate: lexicographic
/// on the part lists, *descending*, so `(2) < (1,1)` and sorting a list of
/// partitions puts `(n)` first and `(1ⁿ)` last.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1ⁿ)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Number of standard Young tableaux, by the hook-length formula.
    pub fn hook_dim(&self) -> usize {
        let conj = self.conjugate();
        let mut num: u128 = 1;
        for k in 1..=self.size() as u128 {
            num *= k;
        }
        let mut den: u128 = 1;
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.parts[j] - i - 1;
                den *= (arm + leg + 1) as u128;
            }
        }
        (num / den) as usize
    }

    /// `n(λ) = Σ_i (i−1)·λ_i`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Comma-separated parts, e.g. `2,1`; the empty partition renders as `∅`.
    pub fn compact(&self) -> String {
        if self.parts.is_empty() {
            "∅".to_string()
        } else {
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.compact())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.compact())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `2,1`, `(2,1)`, `()` or `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if t.is_empty() || t == "∅" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in canonical order (lexicographically descending).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All pairs `(λ, μ)` with `|λ| + |μ| = n`, ordered by `|λ|` descending and
/// then canonically.
pub fn bipartitions_of(n: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for l in partitions_of(a) {
            for r in partitions_of(n - a) {
                out.push((l.clone(), r));
            }
        }
    }
    out
}
