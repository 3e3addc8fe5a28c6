//! Permutations in one-line notation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of `{1, …, n}`, stored 0-based in one-line notation.
///
/// Products follow function composition: `(p * q)(i) = p(q(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(images.to_vec()));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|x| x - 1).collect(),
        })
    }

    /// Builds a permutation from 0-based images without validation of the
    /// caller's arithmetic beyond a debug assertion.
    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x)
        });
        Permutation { images }
    }

    /// The simple transposition `s_i = (i, i+1)`, `1 ≤ i < n`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange(format!("s_{i} in Σ_{n}")));
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, i);
        Ok(Permutation { images })
    }

    /// The transposition exchanging the 1-based points `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::IndexOutOfRange(format!("({a} {b}) in Σ_{n}")));
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a - 1, b - 1);
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// 0-based one-line notation.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.mul(other))
    }

    /// Composition assuming equal degrees.
    pub(crate) fn mul(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// Number of inversions, i.e. the Coxeter length in adjacent transpositions.
    pub fn length(&self) -> usize {
        let p = &self.images;
        let mut count = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// A reduced word `[i_1, …, i_k]` with `self = s_{i_1} ⋯ s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut p = self.images.clone();
        let mut word = Vec::new();
        'outer: loop {
            for i in 0..p.len().saturating_sub(1) {
                if p[i] > p[i + 1] {
                    p.swap(i, i + 1);
                    word.push(i + 1);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        word
    }

    /// Cycle type as a weakly decreasing list of cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            cycles.push(len);
        }
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        cycles
    }

    /// All permutations of degree `n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation {
                images: cur.clone(),
            });
            // next permutation in lexicographic order
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}
