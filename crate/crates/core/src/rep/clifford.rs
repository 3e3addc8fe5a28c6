//! Extension, inflation and induction: the irreducibles
//! `L^𝝀 = Ind_{Σ_m≀Σ_γ}^{Σ_m≀Σ_d}(S̃^γ ⊗ Infl S^𝝀)`.

use std::collections::{BTreeMap, HashMap};

use super::{specht_rep, CliffordLabel, Representation, WreathSubgroup};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::orbit::GammaMap;
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::wreath::{Generator, WreathElement};

fn kron_all(mats: &[Matrix]) -> Matrix {
    mats.iter().fold(Matrix::identity(1), |acc, a| acc.kron(a))
}

/// `I ⊗ … ⊗ A ⊗ … ⊗ I` with `A` in tensor slot `slot`.
fn on_slot(dims: &[usize], slot: usize, a: &Matrix) -> Matrix {
    let mats: Vec<Matrix> = dims
        .iter()
        .enumerate()
        .map(|(i, &n)| {
            if i == slot {
                a.clone()
            } else {
                Matrix::identity(n)
            }
        })
        .collect();
    kron_all(&mats)
}

/// Operator on `V_1 ⊗ … ⊗ V_d` moving tensor slot `i` to slot `perm(i)`.
/// Requires `dims[perm(i)] = dims[i]`.
pub fn place_permutation_matrix(dims: &[usize], perm: &Permutation) -> Result<Matrix> {
    let d = dims.len();
    if perm.degree() != d {
        return Err(Error::DegreeMismatch(perm.degree(), d));
    }
    if (0..d).any(|i| dims[perm.apply(i)] != dims[i]) {
        return Err(Error::Invariant(
            "place permutation of unequal tensor factors".into(),
        ));
    }
    let total: usize = dims.iter().product();
    let decode = |mut x: usize| {
        let mut digits = vec![0; d];
        for i in (0..d).rev() {
            digits[i] = x % dims[i];
            x /= dims[i];
        }
        digits
    };
    let encode = |digits: &[usize]| digits.iter().zip(dims).fold(0, |acc, (&b, &n)| acc * n + b);
    let images: Vec<usize> = (0..total)
        .map(|x| {
            let b = decode(x);
            let mut moved = vec![0; d];
            for i in 0..d {
                moved[perm.apply(i)] = b[i];
            }
            encode(&moved)
        })
        .collect();
    Ok(Matrix::permutation(&images))
}

/// The partition of `m` at each position `1..=d` in the block layout of `γ`.
fn layout(gamma: &GammaMap) -> Vec<Partition> {
    gamma.orbit().profile().types().to_vec()
}

/// Factorwise module `⊗_i S^{ν_i}` of `Σ_m^d` for a profile `(ν_1, …, ν_d)`.
pub(crate) fn base_tensor(m: usize, types: &[Partition]) -> Result<Representation> {
    let d = types.len();
    let spechts: Vec<Representation> = types.iter().map(specht_rep).collect::<Result<_>>()?;
    let dims: Vec<usize> = spechts.iter().map(|r| r.dim()).collect();
    let mut gens = BTreeMap::new();
    for j in 1..=d {
        for i in 1..m {
            let a = spechts[j - 1].matrix(Generator::T { k: i })?;
            gens.insert(Generator::S { i, j }, on_slot(&dims, j - 1, a));
        }
    }
    Representation::new(WreathSubgroup::base(m, d), dims.iter().product(), gens)
}

/// `S̃^γ`: the tensor product `⊗_ν (S^ν)^{⊗γ(ν)}` over `Σ_m ≀ Σ_γ`, with the
/// `t_k` permuting equal tensor factors.
pub fn extend_to_wreath(gamma: &GammaMap) -> Result<Representation> {
    let types = layout(gamma);
    let m = gamma.m();
    let group = WreathSubgroup::new(m, gamma.composition())?;
    let base = base_tensor(m, &types)?;
    let dims: Vec<usize> = types.iter().map(|l| l.hook_dim()).collect();
    let mut gens: BTreeMap<Generator, Matrix> = base.gens;
    for g in group.generators() {
        if let Generator::T { k } = g {
            let swap = Permutation::simple(gamma.d(), k)?;
            gens.insert(g, place_permutation_matrix(&dims, &swap)?);
        }
    }
    Representation::new(group, dims.iter().product(), gens)
}

/// `Infl S^𝝀`: `⊗_ν S^{𝝀(ν)}` with the base group acting trivially and `t_k`
/// acting through the factor `Σ_{γ(ν)}` containing it.
pub fn inflate(label: &CliffordLabel) -> Result<Representation> {
    let gamma = label.gamma();
    let group = WreathSubgroup::new(label.m(), gamma.composition())?;
    let spechts: Vec<Representation> = label
        .entries()
        .map(|(_, l)| specht_rep(l))
        .collect::<Result<_>>()?;
    let dims: Vec<usize> = spechts.iter().map(|r| r.dim()).collect();
    let dim: usize = dims.iter().product();
    let starts = group.block_starts();
    let mut gens = BTreeMap::new();
    for g in group.generators() {
        let a = match g {
            Generator::S { .. } => Matrix::identity(dim),
            Generator::T { k } => {
                let b = group.block_of(k - 1);
                let local = k - starts[b];
                on_slot(&dims, b, spechts[b].matrix(Generator::T { k: local })?)
            }
        };
        gens.insert(g, a);
    }
    Representation::new(group, dim, gens)
}

/// Left coset representatives of `rho`'s group in `target`, as pure tops.
fn coset_reps(
    h: &WreathSubgroup,
    target: &WreathSubgroup,
) -> (Vec<WreathElement>, HashMap<Vec<usize>, usize>) {
    let d = h.d();
    let mut reps = Vec::new();
    let mut keys = HashMap::new();
    for s in target.tops() {
        let inv = s.inverse();
        let key: Vec<usize> = (0..d).map(|p| h.block_of(inv.apply(p))).collect();
        if let std::collections::hash_map::Entry::Vacant(e) = keys.entry(key) {
            e.insert(reps.len());
            reps.push(WreathElement::from_top(h.m(), s));
        }
    }
    (reps, keys)
}

/// Induced representation together with its coset representatives; basis
/// vector `v` of the `i`-th copy stands for `r_i ⊗ v`.
pub(crate) fn induce_with_cosets(
    rho: &Representation,
    target: &WreathSubgroup,
) -> Result<(Representation, Vec<WreathElement>)> {
    let h = rho.group();
    if !h.is_subgroup_of(target) {
        return Err(Error::NotInSubgroup(format!("{h:?} in {target:?}")));
    }
    let (reps, keys) = coset_reps(h, target);
    let n = rho.dim();
    let index = reps.len();
    let mut gens = BTreeMap::new();
    for g in target.generators() {
        let ge = WreathElement::generator(h.m(), h.d(), g)?;
        let mut a = Matrix::zeros(n * index, n * index);
        for (j, rj) in reps.iter().enumerate() {
            let x = ge.mul(rj);
            let inv = x.top().inverse();
            let key: Vec<usize> = (0..h.d()).map(|p| h.block_of(inv.apply(p))).collect();
            let i = keys[&key];
            let block = rho.matrix_of(&reps[i].inverse().mul(&x))?;
            for r in 0..n {
                for c in 0..n {
                    a.set(i * n + r, j * n + c, block.get(r, c).clone());
                }
            }
        }
        gens.insert(g, a);
    }
    Ok((Representation::new(target.clone(), n * index, gens)?, reps))
}

/// `Ind_H^G ρ` for `H = ρ.group() ⊆ G = target`.
pub fn induce(rho: &Representation, target: &WreathSubgroup) -> Result<Representation> {
    Ok(induce_with_cosets(rho, target)?.0)
}

/// The irreducible `L^𝝀` of `Σ_m ≀ Σ_d`.
pub fn clifford_irrep(label: &CliffordLabel) -> Result<Representation> {
    let inner = extend_to_wreath(&label.gamma())?.tensor(&inflate(label)?)?;
    induce(&inner, &WreathSubgroup::full(label.m(), label.d()))
}
