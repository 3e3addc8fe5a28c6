//! Strong Bruhat order on symmetric groups.
//!
//! Down-sets are built from the cover graph: `u ⋖ w` iff `w = u·t` for a
//! transposition `t` and `ℓ(w) = ℓ(u) + 1`. Tables are cached per degree up to
//! [`TABLE_MAX_DEGREE`]; beyond that comparisons search the cover graph from
//! the top element downwards.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const TABLE_MAX_DEGREE: usize = 6;

/// Down-sets of every element of `Σ_n`, as bitsets over the lexicographic
/// element order.
pub struct BruhatTable {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    below: Vec<Vec<u64>>,
}

impl BruhatTable {
    fn build(n: usize) -> Self {
        let elements = Permutation::all(n);
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let words = elements.len().div_ceil(64);
        let mut below = vec![vec![0u64; words]; elements.len()];
        let mut order: Vec<usize> = (0..elements.len()).collect();
        order.sort_by_key(|&i| elements[i].length());
        for &wi in &order {
            let w = &elements[wi];
            let mut set = vec![0u64; words];
            set[wi / 64] |= 1 << (wi % 64);
            for u in lower_covers(w) {
                let ui = index[&u];
                for (s, b) in set.iter_mut().zip(&below[ui]) {
                    *s |= b;
                }
            }
            below[wi] = set;
        }
        BruhatTable {
            elements,
            index,
            below,
        }
    }

    pub fn leq(&self, u: &Permutation, w: &Permutation) -> bool {
        let ui = self.index[u];
        let wi = self.index[w];
        self.below[wi][ui / 64] >> (ui % 64) & 1 == 1
    }

    pub fn lower_interval(&self, w: &Permutation) -> Vec<Permutation> {
        let wi = self.index[w];
        self.elements
            .iter()
            .enumerate()
            .filter(|(ui, _)| self.below[wi][ui / 64] >> (ui % 64) & 1 == 1)
            .map(|(_, u)| u.clone())
            .collect()
    }
}

/// Returns the cached table for degree `n ≤ TABLE_MAX_DEGREE`.
pub fn table(n: usize) -> Option<Arc<BruhatTable>> {
    if n > TABLE_MAX_DEGREE {
        return None;
    }
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<BruhatTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("bruhat cache poisoned");
    Some(
        guard
            .entry(n)
            .or_insert_with(|| Arc::new(BruhatTable::build(n)))
            .clone(),
    )
}

/// Elements covered by `w`.
pub fn lower_covers(w: &Permutation) -> Vec<Permutation> {
    let n = w.degree();
    let lw = w.length();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if w.apply(i) > w.apply(j) {
                let mut img = w.images().to_vec();
                img.swap(i, j);
                let u = Permutation::from_images_unchecked(img);
                if u.length() + 1 == lw {
                    out.push(u);
                }
            }
        }
    }
    out
}

/// `u ≤ w` in the strong Bruhat order of `Σ_n`.
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> Result<bool> {
    if u.degree() != w.degree() {
        return Err(Error::DegreeMismatch(u.degree(), w.degree()));
    }
    if let Some(t) = table(u.degree()) {
        return Ok(t.leq(u, w));
    }
    let lu = u.length();
    if lu > w.length() {
        return Ok(false);
    }
    let mut frontier = vec![w.clone()];
    let mut seen = HashSet::new();
    while let Some(x) = frontier.pop() {
        if &x == u {
            return Ok(true);
        }
        if x.length() <= lu {
            continue;
        }
        for y in lower_covers(&x) {
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    Ok(false)
}

/// All `u ≤ w`, in lexicographic order.
pub fn lower_interval(w: &Permutation) -> Vec<Permutation> {
    if let Some(t) = table(w.degree()) {
        return t.lower_interval(w);
    }
    let mut seen: HashSet<Permutation> = HashSet::from([w.clone()]);
    let mut frontier = vec![w.clone()];
    while let Some(x) = frontier.pop() {
        for y in lower_covers(&x) {
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    out
}

/// Cover relations `(u, w)` of `Σ_n`, sorted.
pub fn hasse_covers(n: usize) -> Vec<(Permutation, Permutation)> {
    let mut out = Vec::new();
    for w in Permutation::all(n) {
        for u in lower_covers(&w) {
            out.push((u, w.clone()));
        }
    }
    out.sort();
    out
}
