//! The Weyl group `W(B_d)` as signed permutations, for comparing its Bruhat
//! order with `≤_{2≀d}`.
//!
//! Generators: `s_0` negates the first entry of the window, `s_i` swaps
//! entries `i` and `i+1`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Window notation `(w(1), …, w(d))` with entries in `±{1, …, d}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    window: Vec<i32>,
}

impl SignedPerm {
    pub fn identity(d: usize) -> Self {
        SignedPerm {
            window: (1..=d as i32).collect(),
        }
    }

    pub fn generator(d: usize, i: usize) -> Result<Self> {
        if i >= d {
            return Err(Error::IndexOutOfRange(format!("s^B_{i} in W(B_{d})")));
        }
        let mut w = Self::identity(d);
        if i == 0 {
            w.window[0] = -1;
        } else {
            w.window.swap(i - 1, i);
        }
        Ok(w)
    }

    pub fn from_word(word: &[usize], d: usize) -> Result<Self> {
        let mut acc = Self::identity(d);
        for &i in word {
            acc = acc.mul(&Self::generator(d, i)?);
        }
        Ok(acc)
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    fn eval(&self, x: i32) -> i32 {
        let v = self.window[(x.unsigned_abs() - 1) as usize];
        if x < 0 {
            -v
        } else {
            v
        }
    }

    pub fn mul(&self, other: &SignedPerm) -> SignedPerm {
        SignedPerm {
            window: other.window.iter().map(|&x| self.eval(x)).collect(),
        }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut w = vec![0; self.window.len()];
        for (i, &x) in self.window.iter().enumerate() {
            let pos = (x.unsigned_abs() - 1) as usize;
            w[pos] = if x < 0 { -(i as i32 + 1) } else { i as i32 + 1 };
        }
        SignedPerm { window: w }
    }

    /// Number of negative entries.
    pub fn sign_changes(&self) -> usize {
        self.window.iter().filter(|&&x| x < 0).count()
    }

    /// `inv(w) − Σ_{w(j) < 0} w(j)`.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut inv = 0i64;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        let neg: i64 = w.iter().filter(|&&x| x < 0).map(|&x| x as i64).sum();
        (inv - neg) as usize
    }

    /// All `2^d · d!` elements, sorted.
    pub fn all(d: usize) -> Vec<SignedPerm> {
        let mut seen: HashSet<SignedPerm> = HashSet::from([Self::identity(d)]);
        let mut queue = VecDeque::from([Self::identity(d)]);
        let gens: Vec<_> = (0..d).map(|i| Self::generator(d, i).unwrap()).collect();
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = x.mul(g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort();
        out
    }
}

struct TypeBTable {
    index: HashMap<SignedPerm, usize>,
    below: Vec<HashSet<usize>>,
}

impl TypeBTable {
    fn build(d: usize) -> Self {
        let elements = SignedPerm::all(d);
        let index: HashMap<SignedPerm, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        let mut reflections: HashSet<SignedPerm> = HashSet::new();
        for g in &elements {
            for i in 0..d {
                let s = SignedPerm::generator(d, i).unwrap();
                reflections.insert(g.mul(&s).mul(&g.inverse()));
            }
        }
        let mut order: Vec<usize> = (0..elements.len()).collect();
        order.sort_by_key(|&i| elements[i].length());
        let mut below: Vec<HashSet<usize>> = vec![HashSet::new(); elements.len()];
        for &wi in &order {
            let w = &elements[wi];
            let lw = w.length();
            let mut set = HashSet::from([wi]);
            for r in &reflections {
                let u = w.mul(r);
                if u.length() + 1 == lw {
                    set.extend(below[index[&u]].iter().copied());
                }
            }
            below[wi] = set;
        }
        TypeBTable { index, below }
    }
}

fn table(d: usize) -> Arc<TypeBTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<TypeBTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("type B cache poisoned");
    guard
        .entry(d)
        .or_insert_with(|| Arc::new(TypeBTable::build(d)))
        .clone()
}

/// Largest rank accepted by [`coxeter_b_leq`].
pub const MAX_RANK: usize = 5;

/// Bruhat order of `W(B_d)` on elements given as words in `s_0, …, s_{d−1}`.
pub fn coxeter_b_leq(u: &[usize], w: &[usize], d: usize) -> Result<bool> {
    if d > MAX_RANK {
        return Err(Error::BoundExceeded {
            what: format!("W(B_{d})"),
            needed: format!("rank {d}"),
            bound: MAX_RANK,
        });
    }
    let u = SignedPerm::from_word(u, d)?;
    let w = SignedPerm::from_word(w, d)?;
    Ok(leq(&u, &w))
}

/// Bruhat order on signed permutations of rank `≤ MAX_RANK`.
pub fn leq(u: &SignedPerm, w: &SignedPerm) -> bool {
    let t = table(w.window.len());
    t.below[t.index[w]].contains(&t.index[u])
}

/// Parses the compact subscript notation `s^B_{101}` → `[1, 0, 1]`.
pub fn parse_compact(word: &str) -> Result<Vec<usize>> {
    word.chars()
        .map(|c| {
            c.to_digit(10)
                .map(|x| x as usize)
                .ok_or_else(|| Error::Parse(format!("bad generator {c:?} in {word:?}")))
        })
        .collect()
}
