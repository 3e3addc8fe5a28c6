//! The Bruhat order `≤_{m≀d}`: equal tops and factorwise type-A comparison.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{GroupContext, WreathElement};
use crate::bruhat;
use crate::error::Result;

pub fn bruhat_leq(x: &WreathElement, y: &WreathElement) -> Result<bool> {
    x.check_same(y)?;
    if x.top != y.top {
        return Ok(false);
    }
    for (a, b) in x.factors.iter().zip(&y.factors) {
        if !bruhat::bruhat_leq(a, b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Elements `x ≤_{m≀d} w`: the product of the factor intervals, same top.
pub fn lower_set(w: &WreathElement) -> Vec<WreathElement> {
    let mut acc: Vec<Vec<crate::perm::Permutation>> = vec![Vec::new()];
    for f in &w.factors {
        let interval = bruhat::lower_interval(f);
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                interval.iter().map(move |u| {
                    let mut v = prefix.clone();
                    v.push(u.clone());
                    v
                })
            })
            .collect();
    }
    acc.into_iter()
        .map(|factors| WreathElement {
            m: w.m,
            d: w.d,
            top: w.top.clone(),
            factors,
        })
        .collect()
}

/// Hasse diagram over the context's element order.
#[derive(Clone, Debug, Serialize)]
pub struct HasseDiagram {
    pub m: usize,
    pub d: usize,
    /// Element words, indexed like [`GroupContext::elements`].
    pub nodes: Vec<String>,
    /// `[lower, upper]` index pairs, sorted.
    pub covers: Vec<[usize; 2]>,
}

impl HasseDiagram {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("hasse diagram serializes")
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph wreath_{}_{} {{\n  rankdir=BT;\n", self.m, self.d);
        for (i, n) in self.nodes.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{n}\"];\n"));
        }
        for [a, b] in &self.covers {
            out.push_str(&format!("  n{a} -> n{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

pub(super) fn hasse(ctx: &GroupContext) -> HasseDiagram {
    let mut covers = Vec::new();
    for (yi, y) in ctx.elements.iter().enumerate() {
        for (i, f) in y.factors.iter().enumerate() {
            for u in bruhat::lower_covers(f) {
                let mut x = y.clone();
                x.factors[i] = u;
                covers.push([ctx.index[&x], yi]);
            }
        }
    }
    covers.sort_unstable();
    HasseDiagram {
        m: ctx.m,
        d: ctx.d,
        nodes: ctx.elements.iter().map(|e| e.to_string()).collect(),
        covers,
    }
}

/// Cell count and the number of cells per dimension `Σ_i ℓ(w_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellStatistics {
    pub cells: usize,
    pub by_dimension: BTreeMap<usize, usize>,
}

impl CellStatistics {
    /// Coefficients of `Σ_cells q^{dim}`, lowest degree first.
    pub fn polynomial(&self) -> Vec<usize> {
        let top = self.by_dimension.keys().max().copied().unwrap_or(0);
        (0..=top)
            .map(|k| self.by_dimension.get(&k).copied().unwrap_or(0))
            .collect()
    }
}

pub(super) fn cell_statistics(ctx: &GroupContext) -> CellStatistics {
    let mut by_dimension = BTreeMap::new();
    for e in &ctx.elements {
        *by_dimension.entry(e.cell_dim()).or_insert(0) += 1;
    }
    CellStatistics {
        cells: ctx.order(),
        by_dimension,
    }
}
