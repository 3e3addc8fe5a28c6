//! Specht modules in Young's seminormal form.

use std::collections::{BTreeMap, HashMap};

use super::{Representation, WreathSubgroup};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::partition::Partition;
use crate::scalar::{self, ExactScalar};
use crate::wreath::Generator;

/// Largest `|λ|` accepted by [`specht_rep`].
pub const SPECHT_BOUND: usize = 7;

/// Standard Young tableaux of shape `λ`, each as the `(row, col)` cell of
/// `1, …, n`.
pub fn standard_tableaux(shape: &Partition) -> Vec<Vec<(usize, usize)>> {
    fn go(
        shape: &[usize],
        filled: &mut Vec<usize>,
        cells: &mut Vec<(usize, usize)>,
        n: usize,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if cells.len() == n {
            out.push(cells.clone());
            return;
        }
        for r in 0..shape.len() {
            let c = filled[r];
            if c < shape[r] && (r == 0 || filled[r - 1] > c) {
                filled[r] += 1;
                cells.push((r, c));
                go(shape, filled, cells, n, out);
                cells.pop();
                filled[r] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    let parts = shape.parts();
    go(
        parts,
        &mut vec![0; parts.len()],
        &mut Vec::new(),
        shape.size(),
        &mut out,
    );
    out
}

pub fn specht_rep(shape: &Partition) -> Result<Representation> {
    specht_rep_with_bound(shape, SPECHT_BOUND)
}

/// `S^λ` as a representation of `Σ_{|λ|}`. For `r = c(k+1) − c(k)` the axial
/// distance (content `c = col − row`), `s_k` fixes `v_T` when `k, k+1` share
/// a row, negates it when they share a column, and otherwise acts on the pair
/// `(v_T, v_{s_k T})` with `row_T(k) < row_T(k+1)` by `[[1/r, 1 − 1/r²], [1, −1/r]]`.
pub fn specht_rep_with_bound(shape: &Partition, bound: usize) -> Result<Representation> {
    let n = shape.size();
    if n > bound {
        return Err(Error::BoundExceeded {
            what: format!("Specht module S^{shape}"),
            needed: format!("degree {n}"),
            bound,
        });
    }
    if n == 0 {
        return Err(Error::InvalidPartition(
            "Specht module of the empty partition".into(),
        ));
    }
    let tableaux = standard_tableaux(shape);
    let index: HashMap<&Vec<(usize, usize)>, usize> =
        tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let dim = tableaux.len();
    let content = |(r, c): (usize, usize)| c as i64 - r as i64;
    let mut gens = BTreeMap::new();
    for k in 1..n {
        let mut a = Matrix::zeros(dim, dim);
        for (col, t) in tableaux.iter().enumerate() {
            let (p, q) = (t[k - 1], t[k]);
            if p.0 == q.0 {
                a.set(col, col, scalar::one());
            } else if p.1 == q.1 {
                a.set(col, col, -scalar::one());
            } else {
                let r = content(q) - content(p);
                let inv_r = scalar::frac(1, r);
                let mut swapped = t.clone();
                swapped.swap(k - 1, k);
                let other = index[&swapped];
                let off: ExactScalar = if p.0 < q.0 {
                    scalar::one()
                } else {
                    scalar::one() - &inv_r * &inv_r
                };
                a.set(col, col, inv_r);
                a.set(other, col, off);
            }
        }
        gens.insert(Generator::T { k }, a);
    }
    Representation::new(WreathSubgroup::symmetric(n), dim, gens)
}
