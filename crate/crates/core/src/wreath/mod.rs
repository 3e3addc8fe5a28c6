//! The wreath product `Σ_m ≀ Σ_d = Σ_m^d ⋊ Σ_d`.
//!
//! An element is written `(w_1, …, w_d)σ`. Multiplication follows
//! `σ(g_1, …, g_d) = (g_{σ⁻¹(1)}, …, g_{σ⁻¹(d)})σ`.

mod classes;
pub mod coxeter_b;
mod order;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::{factorial, Permutation};

pub use classes::ConjugacyClass;
pub use order::{lower_set, CellStatistics, HasseDiagram};

/// Default cap on the number of group elements any enumeration may touch.
pub const DEFAULT_BOUND: usize = 50_000;
/// Environment variable overriding [`DEFAULT_BOUND`].
pub const BOUND_ENV: &str = "WREATH_ENUM_BOUND";

/// Bound from [`BOUND_ENV`] when set to a valid integer, else [`DEFAULT_BOUND`].
pub fn bound_from_env() -> usize {
    std::env::var(BOUND_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BOUND)
}

/// `(m!)^d · d!`, or `None` on overflow.
pub fn group_order(m: usize, d: usize) -> Option<u128> {
    let mf = (1..=m as u128).try_fold(1u128, |a, k| a.checked_mul(k))?;
    let df = (1..=d as u128).try_fold(1u128, |a, k| a.checked_mul(k))?;
    let mut acc = df;
    for _ in 0..d {
        acc = acc.checked_mul(mf)?;
    }
    Some(acc)
}

/// Errors unless `|Σ_m ≀ Σ_d| ≤ bound`.
pub fn check_bound(m: usize, d: usize, bound: usize) -> Result<()> {
    match group_order(m, d) {
        Some(n) if n <= bound as u128 => Ok(()),
        other => Err(Error::BoundExceeded {
            what: format!("Σ_{m} ≀ Σ_{d}"),
            needed: other.map_or("> 2^128".to_string(), |n| n.to_string()),
            bound,
        }),
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathElement {
    m: usize,
    d: usize,
    top: Permutation,
    factors: Vec<Permutation>,
}

/// Generator kinds `s_i^{(j)}` and `t_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// `s_i^{(j)}`: the simple transposition `s_i` of `Σ_m` in block `j`.
    S { i: usize, j: usize },
    /// `t_k`: swaps blocks `k` and `k+1`.
    T { k: usize },
}

impl WreathElement {
    pub fn new(m: usize, d: usize, factors: Vec<Permutation>, top: Permutation) -> Result<Self> {
        if factors.len() != d || top.degree() != d {
            return Err(Error::ContextMismatch(m, d, factors.len(), top.degree()));
        }
        if let Some(f) = factors.iter().find(|f| f.degree() != m) {
            return Err(Error::DegreeMismatch(f.degree(), m));
        }
        Ok(WreathElement { m, d, top, factors })
    }

    pub fn identity(m: usize, d: usize) -> Self {
        WreathElement {
            m,
            d,
            top: Permutation::identity(d),
            factors: vec![Permutation::identity(m); d],
        }
    }

    /// The pure top element `σ = (e, …, e)σ`.
    pub fn from_top(m: usize, top: Permutation) -> Self {
        let d = top.degree();
        WreathElement {
            m,
            d,
            top,
            factors: vec![Permutation::identity(m); d],
        }
    }

    /// The pure base element `(w_i)_i`.
    pub fn from_base(m: usize, factors: Vec<Permutation>) -> Result<Self> {
        let d = factors.len();
        Self::new(m, d, factors, Permutation::identity(d))
    }

    pub fn generator(m: usize, d: usize, g: Generator) -> Result<Self> {
        match g {
            Generator::S { i, j } => {
                if i == 0 || i >= m || j == 0 || j > d {
                    return Err(Error::IndexOutOfRange(format!(
                        "s_{i}^({j}) in Σ_{m} ≀ Σ_{d}"
                    )));
                }
                let mut e = Self::identity(m, d);
                e.factors[j - 1] = Permutation::simple(m, i)?;
                Ok(e)
            }
            Generator::T { k } => {
                if k == 0 || k >= d {
                    return Err(Error::IndexOutOfRange(format!("t_{k} in Σ_{m} ≀ Σ_{d}")));
                }
                Ok(Self::from_top(m, Permutation::simple(d, k)?))
            }
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn top(&self) -> &Permutation {
        &self.top
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.top.is_identity() && self.base_is_identity()
    }

    /// True when every factor `w_i` is the identity, i.e. the element lies in `1 × Σ_d`.
    pub fn base_is_identity(&self) -> bool {
        self.factors.iter().all(|f| f.is_identity())
    }

    /// The base part `(w_i)_i` with trivial top.
    pub fn base(&self) -> WreathElement {
        WreathElement {
            m: self.m,
            d: self.d,
            top: Permutation::identity(self.d),
            factors: self.factors.clone(),
        }
    }

    /// The top part `σ` with trivial base.
    pub fn top_element(&self) -> WreathElement {
        Self::from_top(self.m, self.top.clone())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.m != other.m || self.d != other.d {
            return Err(Error::ContextMismatch(self.m, self.d, other.m, other.d));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.mul(other))
    }

    /// Product assuming matching `(m, d)`.
    pub fn mul(&self, other: &Self) -> Self {
        let sigma_inv = self.top.inverse();
        let factors = (0..self.d)
            .map(|i| self.factors[i].mul(&other.factors[sigma_inv.apply(i)]))
            .collect();
        WreathElement {
            m: self.m,
            d: self.d,
            top: self.top.mul(&other.top),
            factors,
        }
    }

    pub fn inverse(&self) -> Self {
        let factors = (0..self.d)
            .map(|i| self.factors[self.top.apply(i)].inverse())
            .collect();
        WreathElement {
            m: self.m,
            d: self.d,
            top: self.top.inverse(),
            factors,
        }
    }

    /// Block embedding into `Σ_{md}`: the top permutes blocks of size `m`,
    /// then factor `w_i` acts inside block `i`.
    pub fn embed(&self) -> Permutation {
        let m = self.m;
        let mut images = vec![0; m * self.d];
        for j in 0..self.d {
            let target = self.top.apply(j);
            for k in 0..m {
                images[j * m + k] = target * m + self.factors[target].apply(k);
            }
        }
        Permutation::from_images_unchecked(images)
    }

    /// `Σ_i ℓ(w_i)`: the dimension of the Bruhat cell indexed by this element.
    pub fn cell_dim(&self) -> usize {
        self.factors.iter().map(|f| f.length()).sum()
    }

    /// A word in the generators: reduced words of each factor, block by block,
    /// followed by a reduced word of the top.
    pub fn word(&self) -> Vec<Generator> {
        let mut out = Vec::new();
        for (j, f) in self.factors.iter().enumerate() {
            out.extend(
                f.reduced_word()
                    .into_iter()
                    .map(|i| Generator::S { i, j: j + 1 }),
            );
        }
        out.extend(
            self.top
                .reduced_word()
                .into_iter()
                .map(|k| Generator::T { k }),
        );
        out
    }

    /// Place permutation of the factors by `s_j`: swaps `w_j` and `w_{j+1}`.
    pub fn place_swap(&self, j: usize) -> Self {
        let mut e = self.clone();
        e.factors.swap(j - 1, j);
        e
    }

    pub fn parse(m: usize, d: usize, word: &str) -> Result<Self> {
        let mut acc = Self::identity(m, d);
        for token in word.split_whitespace() {
            let g = parse_token(token)?;
            match g {
                None => {}
                Some(g) => acc = acc.mul(&Self::generator(m, d, g)?),
            }
        }
        Ok(acc)
    }
}

fn parse_token(token: &str) -> Result<Option<Generator>> {
    let bad = || Error::Parse(format!("bad token {token:?}"));
    if token == "e" {
        return Ok(None);
    }
    if let Some(rest) = token.strip_prefix('s') {
        let (i, j) = rest.split_once('^').ok_or_else(bad)?;
        let i = i.parse().map_err(|_| bad())?;
        let j = j
            .trim_start_matches('(')
            .trim_end_matches(')')
            .parse()
            .map_err(|_| bad())?;
        return Ok(Some(Generator::S { i, j }));
    }
    if let Some(rest) = token.strip_prefix('t') {
        let k = rest.parse().map_err(|_| bad())?;
        return Ok(Some(Generator::T { k }));
    }
    Err(bad())
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::S { i, j } => write!(f, "s{i}^{j}"),
            Generator::T { k } => write!(f, "t{k}"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_token(s)?.ok_or_else(|| Error::Parse("identity is not a generator".into()))
    }
}

impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.word();
        if w.is_empty() {
            return write!(f, "e");
        }
        let tokens: Vec<String> = w.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", tokens.join(" "))
    }
}

impl fmt::Debug for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}){:?}", self.factors, self.top)
    }
}

/// All of `Σ_m ≀ Σ_d` with lazily built conjugacy classes.
pub struct GroupContext {
    m: usize,
    d: usize,
    elements: Vec<WreathElement>,
    index: HashMap<WreathElement, usize>,
    classes: OnceLock<Vec<ConjugacyClass>>,
}

impl GroupContext {
    pub fn new(m: usize, d: usize) -> Result<Self> {
        Self::with_bound(m, d, DEFAULT_BOUND)
    }

    pub fn with_bound(m: usize, d: usize, bound: usize) -> Result<Self> {
        if m == 0 || d == 0 {
            return Err(Error::IndexOutOfRange(format!(
                "m and d must be positive, got ({m},{d})"
            )));
        }
        check_bound(m, d, bound)?;
        let elements = enumerate(m, d);
        let index = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        let ctx = GroupContext {
            m,
            d,
            elements,
            index,
            classes: OnceLock::new(),
        };
        debug_assert_eq!(Some(ctx.elements.len() as u128), group_order(m, d));
        Ok(ctx)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements sorted by (top, factors) lexicographically; the identity is first.
    pub fn elements(&self) -> &[WreathElement] {
        &self.elements
    }

    pub fn index_of(&self, x: &WreathElement) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn identity(&self) -> WreathElement {
        WreathElement::identity(self.m, self.d)
    }

    pub fn generator(&self, g: Generator) -> Result<WreathElement> {
        WreathElement::generator(self.m, self.d, g)
    }

    /// All generators `s_i^{(j)}` followed by all `t_k`.
    pub fn generators(&self) -> Vec<Generator> {
        generators(self.m, self.d)
    }

    pub fn parse(&self, word: &str) -> Result<WreathElement> {
        WreathElement::parse(self.m, self.d, word)
    }

    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        self.classes.get_or_init(|| classes::brute_force(self))
    }

    /// Index of the conjugacy class containing `x`.
    pub fn class_of(&self, x: &WreathElement) -> Option<usize> {
        self.conjugacy_classes()
            .iter()
            .position(|c| c.elements.binary_search(x).is_ok())
    }

    pub fn hasse(&self) -> HasseDiagram {
        order::hasse(self)
    }

    pub fn cell_statistics(&self) -> CellStatistics {
        order::cell_statistics(self)
    }
}

pub fn generators(m: usize, d: usize) -> Vec<Generator> {
    let mut out = Vec::new();
    for j in 1..=d {
        for i in 1..m {
            out.push(Generator::S { i, j });
        }
    }
    for k in 1..d {
        out.push(Generator::T { k });
    }
    out
}

fn enumerate(m: usize, d: usize) -> Vec<WreathElement> {
    let perms_m = Permutation::all(m);
    let mut bases: Vec<Vec<Permutation>> = vec![Vec::new()];
    for _ in 0..d {
        bases = bases
            .into_iter()
            .flat_map(|prefix| {
                perms_m.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.push(p.clone());
                    v
                })
            })
            .collect();
    }
    let mut out = Vec::with_capacity(factorial(d) * bases.len());
    for top in Permutation::all(d) {
        for b in &bases {
            out.push(WreathElement {
                m,
                d,
                top: top.clone(),
                factors: b.clone(),
            });
        }
    }
    out
}

pub use order::bruhat_leq as bruhat_leq_wreath;
