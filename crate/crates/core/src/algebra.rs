//! Combinatorial model of the convolution algebra on the classes `[Y_{w,τ}]`,
//! `w ∈ Σ_m ≀ Σ_d`, `τ ∈ Σ_d`.
//!
//! Products are only known when one of the two base tuples is trivial, so
//! [`convolve`] returns a [`ProductResult`] that can be `Undefined`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::perm::Permutation;
use crate::scalar::{self, ExactScalar};
use crate::wreath::{self, lower_set, Generator, GroupContext, WreathElement};

/// Index of the class `[Y_{w,τ}]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisIndex {
    pub w: WreathElement,
    pub tau: Permutation,
}

impl BasisIndex {
    pub fn new(w: WreathElement, tau: Permutation) -> Result<Self> {
        if tau.degree() != w.d() {
            return Err(Error::DegreeMismatch(tau.degree(), w.d()));
        }
        Ok(BasisIndex { w, tau })
    }
}

impl fmt::Debug for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y[{}, {:?}]", self.w, self.tau)
    }
}

/// All `(m!)^d · d! · d!` basis indices.
pub fn basis(ctx: &GroupContext) -> Vec<BasisIndex> {
    let taus = Permutation::all(ctx.d());
    ctx.elements()
        .iter()
        .flat_map(|w| {
            taus.iter().map(move |tau| BasisIndex {
                w: w.clone(),
                tau: tau.clone(),
            })
        })
        .collect()
}

/// Finite `ℚ`-linear combination of basis classes. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraVector {
    m: usize,
    d: usize,
    terms: BTreeMap<BasisIndex, ExactScalar>,
}

impl AlgebraVector {
    pub fn zero(m: usize, d: usize) -> Self {
        AlgebraVector {
            m,
            d,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(idx: BasisIndex) -> Self {
        let mut v = Self::zero(idx.w.m(), idx.w.d());
        v.terms.insert(idx, scalar::one());
        v
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, idx: &BasisIndex) -> ExactScalar {
        self.terms.get(idx).cloned().unwrap_or_else(scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisIndex, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, idx: BasisIndex, c: &ExactScalar) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if (self.m, self.d) != (other.m, other.d) {
            return Err(Error::ContextMismatch(self.m, self.d, other.m, other.d));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-scalar::one()))
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.m, self.d);
        }
        AlgebraVector {
            m: self.m,
            d: self.d,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    fn map_basis(&self, f: impl Fn(&BasisIndex) -> BasisIndex) -> Self {
        let mut out = Self::zero(self.m, self.d);
        for (k, c) in &self.terms {
            out.add_term(f(k), c);
        }
        out
    }
}

impl fmt::Debug for AlgebraVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                if c.is_one() {
                    format!("{k:?}")
                } else {
                    format!("{}·{k:?}", scalar::to_string(c))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Outcome of a product in the partial convolution model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProductResult {
    Defined(AlgebraVector),
    /// Basis pairs with both base tuples nontrivial and matching `τ`-indices.
    Undefined(Vec<(BasisIndex, BasisIndex)>),
}

impl ProductResult {
    pub fn is_defined(&self) -> bool {
        matches!(self, ProductResult::Defined(_))
    }

    pub fn defined(self) -> Option<AlgebraVector> {
        match self {
            ProductResult::Defined(v) => Some(v),
            ProductResult::Undefined(_) => None,
        }
    }

    /// Converts an undefined product into [`Error::UndefinedProduct`].
    pub fn require(self, what: &str) -> Result<AlgebraVector> {
        match self {
            ProductResult::Defined(v) => Ok(v),
            ProductResult::Undefined(pairs) => Err(Error::UndefinedProduct(format!(
                "{what}: {} offending pairs, first {:?}",
                pairs.len(),
                pairs[0]
            ))),
        }
    }
}

/// `[Y_{w,τ}] * [Y_{w',τ'}]`: zero unless `τσ_w = τ'`, then `[Y_{ww',τ}]` when
/// `w` or `w'` has trivial base, undefined otherwise.
pub fn convolve_basis(a: &BasisIndex, b: &BasisIndex) -> Result<ProductResult> {
    a.w.try_mul(&b.w)?;
    let (m, d) = (a.w.m(), a.w.d());
    if a.tau.mul(a.w.top()) != b.tau {
        return Ok(ProductResult::Defined(AlgebraVector::zero(m, d)));
    }
    if a.w.base_is_identity() || b.w.base_is_identity() {
        return Ok(ProductResult::Defined(AlgebraVector::basis(BasisIndex {
            w: a.w.mul(&b.w),
            tau: a.tau.clone(),
        })));
    }
    Ok(ProductResult::Undefined(vec![(a.clone(), b.clone())]))
}

/// Bilinear extension of [`convolve_basis`].
pub fn convolve(a: &AlgebraVector, b: &AlgebraVector) -> Result<ProductResult> {
    a.check_same(b)?;
    let mut by_tau: HashMap<&Permutation, Vec<(&BasisIndex, &ExactScalar)>> = HashMap::new();
    for (k, c) in &b.terms {
        by_tau.entry(&k.tau).or_default().push((k, c));
    }
    let mut out = AlgebraVector::zero(a.m, a.d);
    let mut undefined = Vec::new();
    for (ka, ca) in &a.terms {
        let target = ka.tau.mul(ka.w.top());
        let Some(group) = by_tau.get(&target) else {
            continue;
        };
        for (kb, cb) in group {
            if ka.w.base_is_identity() || kb.w.base_is_identity() {
                let idx = BasisIndex {
                    w: ka.w.mul(&kb.w),
                    tau: ka.tau.clone(),
                };
                if ca.is_one() {
                    out.add_term(idx, cb);
                } else {
                    out.add_term(idx, &(ca * *cb));
                }
            } else {
                undefined.push((ka.clone(), (*kb).clone()));
            }
        }
    }
    if undefined.is_empty() {
        Ok(ProductResult::Defined(out))
    } else {
        undefined.sort();
        Ok(ProductResult::Undefined(undefined))
    }
}

/// `[Ȳ_{w,τ}] = Σ_{w' ≤ w} [Y_{w',τ}]`.
pub fn y_bar(w: &WreathElement, tau: &Permutation) -> Result<AlgebraVector> {
    if tau.degree() != w.d() {
        return Err(Error::DegreeMismatch(tau.degree(), w.d()));
    }
    let mut out = AlgebraVector::zero(w.m(), w.d());
    let one = scalar::one();
    for u in lower_set(w) {
        out.add_term(
            BasisIndex {
                w: u,
                tau: tau.clone(),
            },
            &one,
        );
    }
    Ok(out)
}

/// `[Ȳ_w] = Σ_τ [Ȳ_{w,τ}]`.
pub fn y_bar_sum(w: &WreathElement) -> AlgebraVector {
    let lower = lower_set(w);
    let mut out = AlgebraVector::zero(w.m(), w.d());
    let one = scalar::one();
    for tau in Permutation::all(w.d()) {
        for u in &lower {
            out.add_term(
                BasisIndex {
                    w: u.clone(),
                    tau: tau.clone(),
                },
                &one,
            );
        }
    }
    out
}

/// `[Y_w] = Σ_τ [Y_{w,τ}]`.
pub fn y_sum(w: &WreathElement) -> AlgebraVector {
    let mut out = AlgebraVector::zero(w.m(), w.d());
    let one = scalar::one();
    for tau in Permutation::all(w.d()) {
        out.add_term(BasisIndex { w: w.clone(), tau }, &one);
    }
    out
}

/// The anti-involution `T: [Y_{w,τ}] ↦ [Y_{w⁻¹, τσ_w}]`.
pub fn involution_t(a: &AlgebraVector) -> AlgebraVector {
    a.map_basis(|k| BasisIndex {
        w: k.w.inverse(),
        tau: k.tau.mul(k.w.top()),
    })
}

/// The component-group action `[Y_{w,τ}] ↦ [Y_{w,ητ}]`.
pub fn pi0_act(eta: &Permutation, a: &AlgebraVector) -> Result<AlgebraVector> {
    if eta.degree() != a.d {
        return Err(Error::DegreeMismatch(eta.degree(), a.d));
    }
    Ok(a.map_basis(|k| BasisIndex {
        w: k.w.clone(),
        tau: eta.mul(&k.tau),
    }))
}

/// Rank of the coefficient matrix of `{[Ȳ_w]}` against the full basis.
pub fn y_bar_span_rank(ctx: &GroupContext) -> usize {
    let basis = basis(ctx);
    let column: HashMap<&BasisIndex, usize> =
        basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut mat = Matrix::zeros(ctx.order(), basis.len());
    for (r, w) in ctx.elements().iter().enumerate() {
        for (k, c) in y_bar_sum(w).terms() {
            mat.set(r, column[k], c.clone());
        }
    }
    mat.rank()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub m: usize,
    pub d: usize,
    pub checks: Vec<Check>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct Checker {
    failures: Vec<String>,
    count: usize,
}

impl Checker {
    fn new() -> Self {
        Checker {
            failures: Vec::new(),
            count: 0,
        }
    }

    fn eq(&mut self, label: impl FnOnce() -> String, lhs: &AlgebraVector, rhs: &AlgebraVector) {
        self.count += 1;
        if lhs != rhs {
            self.failures.push(label());
        }
    }

    fn finish(self, name: &str) -> Check {
        let status = if self.failures.is_empty() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        let detail = if self.failures.is_empty() {
            format!("{} identities", self.count)
        } else {
            format!(
                "{} of {} failed, first: {}",
                self.failures.len(),
                self.count,
                self.failures[0]
            )
        };
        Check {
            name: name.to_string(),
            status,
            detail: Some(detail),
        }
    }
}

fn conv(a: &AlgebraVector, b: &AlgebraVector, what: &str) -> Result<AlgebraVector> {
    convolve(a, b)?.require(what)
}

fn base_tuples(m: usize, d: usize) -> Vec<WreathElement> {
    let mut acc: Vec<Vec<Permutation>> = vec![Vec::new()];
    for _ in 0..d {
        acc = acc
            .into_iter()
            .flat_map(|p| {
                Permutation::all(m).into_iter().map(move |x| {
                    let mut v = p.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    acc.into_iter()
        .map(|f| WreathElement::from_base(m, f).expect("valid base tuple"))
        .collect()
}

/// Checks the defining relations of `Σ_m ≀ Σ_d` on `w ↦ [Ȳ_w]` wherever the
/// partial convolution computes them. An undefined product is an error.
pub fn verify_relations(m: usize, d: usize) -> Result<RelationReport> {
    verify_relations_with_bound(m, d, wreath::bound_from_env())
}

pub fn verify_relations_with_bound(m: usize, d: usize, bound: usize) -> Result<RelationReport> {
    let ctx = GroupContext::with_bound(m, d, bound)?;
    let e = ctx.identity();
    let ybar_e = y_bar_sum(&e);
    let t: Vec<WreathElement> = (1..d)
        .map(|k| ctx.generator(Generator::T { k }))
        .collect::<Result<_>>()?;
    let ybar_t: Vec<AlgebraVector> = t.iter().map(y_bar_sum).collect();
    let mut checks = Vec::new();

    if d >= 2 {
        let mut c = Checker::new();
        for (k, yt) in ybar_t.iter().enumerate() {
            let sq = conv(yt, yt, "quadratic")?;
            c.eq(|| format!("t{}^2", k + 1), &sq, &ybar_e);
        }
        checks.push(c.finish("quadratic"));

        let mut c = Checker::new();
        let y_e = y_sum(&e);
        for (k0, tk) in t.iter().enumerate() {
            let k = k0 + 1;
            let y_t = y_sum(tk);
            for i in 1..m {
                let s_k = y_sum(&ctx.generator(Generator::S { i, j: k })?);
                let s_k1 = y_sum(&ctx.generator(Generator::S { i, j: k + 1 })?);
                let lhs = conv(&y_t, &s_k, "wreath")?.add(&conv(&y_t, &y_e, "wreath")?)?;
                let rhs = conv(&s_k1, &y_t, "wreath")?.add(&conv(&y_e, &y_t, "wreath")?)?;
                c.eq(|| format!("t{k}, s{i}^{k}"), &lhs, &rhs);
            }
            for base in base_tuples(m, d) {
                let lhs = conv(&ybar_t[k0], &y_bar_sum(&base), "wreath")?;
                let rhs = conv(&y_bar_sum(&base.place_swap(k)), &ybar_t[k0], "wreath")?;
                c.eq(|| format!("t{k}, {base}"), &lhs, &rhs);
            }
        }
        checks.push(c.finish("wreath"));
    }

    if d >= 3 {
        let mut c = Checker::new();
        for k in 0..d - 2 {
            let (a, b) = (&ybar_t[k], &ybar_t[k + 1]);
            let lhs = conv(&conv(a, b, "braid")?, a, "braid")?;
            let rhs = conv(&conv(b, a, "braid")?, b, "braid")?;
            c.eq(|| format!("t{} t{} t{}", k + 1, k + 2, k + 1), &lhs, &rhs);
        }
        checks.push(c.finish("braid"));
    }

    if d >= 4 {
        let mut c = Checker::new();
        for i in 0..d - 1 {
            for j in i + 2..d - 1 {
                let lhs = conv(&ybar_t[i], &ybar_t[j], "commuting")?;
                let rhs = conv(&ybar_t[j], &ybar_t[i], "commuting")?;
                c.eq(|| format!("t{} t{}", i + 1, j + 1), &lhs, &rhs);
            }
        }
        checks.push(c.finish("commuting"));
    }

    let tops: Vec<WreathElement> = Permutation::all(d)
        .into_iter()
        .map(|s| WreathElement::from_top(m, s))
        .collect();
    let ybar_tops: Vec<AlgebraVector> = tops.iter().map(y_bar_sum).collect();
    let mut right = Checker::new();
    let mut left = Checker::new();
    for w in ctx.elements() {
        let yw = y_bar_sum(w);
        for (s, ys) in tops.iter().zip(&ybar_tops) {
            let lhs = conv(&yw, ys, "product")?;
            right.eq(|| format!("{w} · {s}"), &lhs, &y_bar_sum(&w.mul(s)));
            let lhs = conv(ys, &yw, "product")?;
            left.eq(|| format!("{s} · {w}"), &lhs, &y_bar_sum(&s.mul(w)));
        }
    }
    checks.push(right.finish("product-right"));
    checks.push(left.finish("product-left"));

    Ok(RelationReport { m, d, checks })
}
