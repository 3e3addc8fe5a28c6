//! Exact representations of `Σ_m ≀ Σ_γ` by generator matrices.
//!
//! Symmetric groups are handled as `Σ_1 ≀ Σ_n`, whose generators are the
//! `t_k`.

mod character;
mod clifford;
mod label;
mod specht;
mod springer_module;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::perm::{factorial, Permutation};
use crate::scalar::ExactScalar;
use crate::wreath::{Generator, WreathElement};

pub use character::{char_of, character_table, inner_product, Character, CharacterTable};
pub use clifford::{clifford_irrep, extend_to_wreath, induce, inflate, place_permutation_matrix};
pub use label::{enumerate_ic, labels_with_gamma, CliffordLabel};
pub use specht::{specht_rep, specht_rep_with_bound, standard_tableaux, SPECHT_BOUND};
pub use springer_module::{isotypic_character, springer_module, BimoduleModel};

/// The subgroup `Σ_m ≀ Σ_γ` of `Σ_m ≀ Σ_d` for a composition `γ` of `d`:
/// the top is restricted to permutations preserving consecutive blocks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WreathSubgroup {
    m: usize,
    d: usize,
    blocks: Vec<usize>,
}

impl WreathSubgroup {
    pub fn new(m: usize, blocks: Vec<usize>) -> Result<Self> {
        if blocks.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "composition {blocks:?} has a zero part"
            )));
        }
        let d = blocks.iter().sum();
        if d == 0 || m == 0 {
            return Err(Error::IndexOutOfRange("m and d must be positive".into()));
        }
        Ok(WreathSubgroup { m, d, blocks })
    }

    pub fn full(m: usize, d: usize) -> Self {
        WreathSubgroup {
            m,
            d,
            blocks: vec![d],
        }
    }

    /// The base group `Σ_m^d`.
    pub fn base(m: usize, d: usize) -> Self {
        WreathSubgroup {
            m,
            d,
            blocks: vec![1; d],
        }
    }

    /// `Σ_n`, realized as `Σ_1 ≀ Σ_n`.
    pub fn symmetric(n: usize) -> Self {
        Self::full(1, n)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn is_full(&self) -> bool {
        self.blocks.len() == 1
    }

    pub fn order(&self) -> usize {
        factorial(self.m).pow(self.d as u32)
            * self.blocks.iter().map(|&b| factorial(b)).product::<usize>()
    }

    /// Block index of a 0-based position.
    pub fn block_of(&self, pos: usize) -> usize {
        let mut acc = 0;
        for (b, &len) in self.blocks.iter().enumerate() {
            acc += len;
            if pos < acc {
                return b;
            }
        }
        panic!("position {pos} out of range for degree {}", self.d)
    }

    /// 0-based first position of each block.
    pub fn block_starts(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .scan(0, |acc, &b| {
                let s = *acc;
                *acc += b;
                Some(s)
            })
            .collect()
    }

    pub fn generators(&self) -> Vec<Generator> {
        let mut out = Vec::new();
        for j in 1..=self.d {
            for i in 1..self.m {
                out.push(Generator::S { i, j });
            }
        }
        for k in 1..self.d {
            if self.block_of(k - 1) == self.block_of(k) {
                out.push(Generator::T { k });
            }
        }
        out
    }

    pub fn contains(&self, x: &WreathElement) -> bool {
        x.m() == self.m
            && x.d() == self.d
            && (0..self.d).all(|p| self.block_of(x.top().apply(p)) == self.block_of(p))
    }

    /// Whether every element of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &WreathSubgroup) -> bool {
        self.m == other.m
            && self.d == other.d
            && (1..self.d).all(|k| {
                self.block_of(k - 1) != self.block_of(k)
                    || other.block_of(k - 1) == other.block_of(k)
            })
    }

    /// All top permutations in `Σ_γ`, sorted.
    pub fn tops(&self) -> Vec<Permutation> {
        Permutation::all(self.d)
            .into_iter()
            .filter(|s| (0..self.d).all(|p| self.block_of(s.apply(p)) == self.block_of(p)))
            .collect()
    }
}

impl fmt::Debug for WreathSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 && self.is_full() {
            write!(f, "Σ_{}", self.d)
        } else {
            write!(f, "Σ_{} ≀ Σ_{:?}", self.m, self.blocks)
        }
    }
}

/// A representation given by one matrix per generator, checked against the
/// defining relations on construction.
#[derive(Clone)]
pub struct Representation {
    group: WreathSubgroup,
    dim: usize,
    gens: BTreeMap<Generator, Matrix>,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Representation({:?}, dim {})", self.group, self.dim)
    }
}

impl Representation {
    pub fn new(
        group: WreathSubgroup,
        dim: usize,
        gens: BTreeMap<Generator, Matrix>,
    ) -> Result<Self> {
        let expected = group.generators();
        if gens.len() != expected.len() || expected.iter().any(|g| !gens.contains_key(g)) {
            return Err(Error::RelationFailure(format!(
                "generator set {:?} does not match {:?}",
                gens.keys().collect::<Vec<_>>(),
                expected
            )));
        }
        if let Some((g, _)) = gens
            .iter()
            .find(|(_, a)| a.rows() != dim || a.cols() != dim)
        {
            return Err(Error::RelationFailure(format!(
                "matrix for {g} is not {dim}×{dim}"
            )));
        }
        let rep = Representation { group, dim, gens };
        rep.check_relations()?;
        Ok(rep)
    }

    /// The trivial representation.
    pub fn trivial(group: WreathSubgroup) -> Self {
        let gens = group
            .generators()
            .into_iter()
            .map(|g| (g, Matrix::identity(1)))
            .collect();
        Representation {
            group,
            dim: 1,
            gens,
        }
    }

    pub fn group(&self) -> &WreathSubgroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, g: Generator) -> Result<&Matrix> {
        self.gens
            .get(&g)
            .ok_or_else(|| Error::NotInSubgroup(format!("{g} in {:?}", self.group)))
    }

    pub fn generator_matrices(&self) -> impl Iterator<Item = (&Generator, &Matrix)> {
        self.gens.iter()
    }

    /// Matrix of an arbitrary subgroup element, multiplied out along its word.
    pub fn matrix_of(&self, x: &WreathElement) -> Result<Matrix> {
        if !self.group.contains(x) {
            return Err(Error::NotInSubgroup(format!("{x:?} in {:?}", self.group)));
        }
        let mut acc = Matrix::identity(self.dim);
        for g in x.word() {
            acc = &acc * self.matrix(g)?;
        }
        Ok(acc)
    }

    /// Matrix of a permutation of a symmetric-group representation.
    pub fn matrix_of_perm(&self, p: &Permutation) -> Result<Matrix> {
        if self.group.m != 1 {
            return Err(Error::NotInSubgroup(format!("{p:?} in {:?}", self.group)));
        }
        self.matrix_of(&WreathElement::from_top(1, p.clone()))
    }

    pub fn trace_of(&self, x: &WreathElement) -> Result<ExactScalar> {
        Ok(self.matrix_of(x)?.trace())
    }

    /// Inner tensor product over the same group.
    pub fn tensor(&self, other: &Representation) -> Result<Representation> {
        if self.group != other.group {
            return Err(Error::RelationFailure(format!(
                "tensor of {:?} and {:?}",
                self.group, other.group
            )));
        }
        let gens = self
            .gens
            .iter()
            .map(|(g, a)| (*g, a.kron(&other.gens[g])))
            .collect();
        Ok(Representation {
            group: self.group.clone(),
            dim: self.dim * other.dim,
            gens,
        })
    }

    fn check_relations(&self) -> Result<()> {
        let id = Matrix::identity(self.dim);
        let fail = |what: String| {
            Err(Error::RelationFailure(format!(
                "{what} in {:?}",
                self.group
            )))
        };
        let order3 = |a: &Matrix, b: &Matrix| {
            let ab = a * b;
            &(&ab * &ab) * &ab == id
        };
        let commute = |a: &Matrix, b: &Matrix| a * b == b * a;
        for (g, a) in &self.gens {
            if a * a != id {
                return fail(format!("{g}² ≠ 1"));
            }
        }
        let gens: Vec<(&Generator, &Matrix)> = self.gens.iter().collect();
        for (x, (g, a)) in gens.iter().enumerate() {
            for (h, b) in &gens[x + 1..] {
                match (**g, **h) {
                    (Generator::S { i, j }, Generator::S { i: i2, j: j2 }) => {
                        if j == j2 && i.abs_diff(i2) == 1 {
                            if !order3(a, b) {
                                return fail(format!("({g} {h})³ ≠ 1"));
                            }
                        } else if !commute(a, b) {
                            return fail(format!("{g} {h} ≠ {h} {g}"));
                        }
                    }
                    (Generator::T { k }, Generator::T { k: k2 }) => {
                        if k.abs_diff(k2) == 1 {
                            if !order3(a, b) {
                                return fail(format!("({g} {h})³ ≠ 1"));
                            }
                        } else if !commute(a, b) {
                            return fail(format!("{g} {h} ≠ {h} {g}"));
                        }
                    }
                    _ => {}
                }
            }
        }
        for (g, a) in &self.gens {
            let Generator::T { k } = *g else { continue };
            for (h, b) in &self.gens {
                let Generator::S { i, j } = *h else { continue };
                let moved = if j == k {
                    k + 1
                } else if j == k + 1 {
                    k
                } else {
                    j
                };
                let target = &self.gens[&Generator::S { i, j: moved }];
                if &(a * b) * a != *target {
                    return fail(format!("{g} {h} {g} ≠ s{i}^{moved}"));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar;

    #[test]
    fn subgroup_structure() {
        let h = WreathSubgroup::new(2, vec![2, 1]).unwrap();
        assert_eq!(h.order(), 8 * 2);
        assert_eq!(h.block_starts(), vec![0, 2]);
        assert_eq!(
            h.generators(),
            vec![
                Generator::S { i: 1, j: 1 },
                Generator::S { i: 1, j: 2 },
                Generator::S { i: 1, j: 3 },
                Generator::T { k: 1 }
            ]
        );
        let t2 = WreathElement::parse(2, 3, "t2").unwrap();
        assert!(!h.contains(&t2));
        assert!(h.contains(&WreathElement::parse(2, 3, "t1 s1^3").unwrap()));
        assert!(h.is_subgroup_of(&WreathSubgroup::full(2, 3)));
        assert!(!WreathSubgroup::full(2, 3).is_subgroup_of(&h));
        assert_eq!(h.tops().len(), 2);
        assert!(WreathSubgroup::new(2, vec![1, 0]).is_err());
    }

    #[test]
    fn rejects_bad_relations() {
        let g = WreathSubgroup::symmetric(3);
        let a = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let gens = BTreeMap::from([
            (Generator::T { k: 1 }, a.clone()),
            (Generator::T { k: 2 }, a.clone()),
        ]);
        // equal involutions: (ab)^3 = 1 holds, so this is a valid (non-faithful) rep
        assert!(Representation::new(g.clone(), 2, gens).is_ok());
        let d = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
        let gens = BTreeMap::from([(Generator::T { k: 1 }, a), (Generator::T { k: 2 }, d)]);
        assert!(matches!(
            Representation::new(g.clone(), 2, gens),
            Err(Error::RelationFailure(_))
        ));
        let gens = BTreeMap::from([(Generator::T { k: 1 }, Matrix::identity(1))]);
        assert!(Representation::new(g, 1, gens).is_err());
    }

    #[test]
    fn matrix_of_word() {
        let rho = specht_rep(&"2,1".parse().unwrap()).unwrap();
        let c = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        let m = rho.matrix_of_perm(&c).unwrap();
        assert_eq!(m.trace(), scalar::int(-1));
        assert_eq!(m.pow(3), Matrix::identity(2));
        let x = WreathElement::parse(2, 2, "t1").unwrap();
        assert!(rho.matrix_of(&x).is_err());
    }
}
