//! The top homology of a Springer fiber as an `(Σ_m ≀ Σ_d, C(x))`-bimodule:
//! `M(x) = Ind_{Σ_m^d}^{Σ_m≀Σ_d}(⊗_i S^{λ_i})` with `C(x)` acting on the right
//! by `(σ ⊗ v)·c = σc ⊗ P(c)⁻¹ v`, `P` the place permutation.

use super::clifford::{base_tensor, induce_with_cosets, place_permutation_matrix};
use super::{specht_rep, Character, CliffordLabel, Representation, WreathSubgroup};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::orbit::{gamma_of, JordanProfile};
use crate::perm::Permutation;
use crate::scalar::{self, ExactScalar};
use crate::wreath::GroupContext;

pub struct BimoduleModel {
    profile: JordanProfile,
    left: Representation,
    /// The stabilizer of the profile in `Σ_d`, sorted.
    stabilizer: Vec<Permutation>,
    /// `right[i]` is the linear map `v ↦ v · stabilizer[i]`.
    right: Vec<Matrix>,
}

impl BimoduleModel {
    pub fn profile(&self) -> &JordanProfile {
        &self.profile
    }

    pub fn dim(&self) -> usize {
        self.left.dim()
    }

    pub fn left(&self) -> &Representation {
        &self.left
    }

    pub fn right_group(&self) -> &[Permutation] {
        &self.stabilizer
    }

    pub fn right_matrix(&self, c: &Permutation) -> Result<&Matrix> {
        self.stabilizer
            .binary_search(c)
            .map(|i| &self.right[i])
            .map_err(|_| {
                Error::NotInSubgroup(format!("{c:?} in the stabilizer of {}", self.profile))
            })
    }

    /// Left generators against every right element.
    pub fn check_commutation(&self) -> Result<()> {
        for (g, a) in self.left.generator_matrices() {
            for (c, r) in self.stabilizer.iter().zip(&self.right) {
                if a * r != r * a {
                    return Err(Error::Invariant(format!(
                        "left {g} and right {c:?} do not commute on M({})",
                        self.profile
                    )));
                }
            }
        }
        Ok(())
    }

    /// Checks `R(c)R(c') = R(c'c)` as maps, i.e. a right action.
    pub fn check_right_action(&self) -> Result<()> {
        for (c, rc) in self.stabilizer.iter().zip(&self.right) {
            for (c2, rc2) in self.stabilizer.iter().zip(&self.right) {
                if &(rc2 * rc) != self.right_matrix(&c.mul(c2))? {
                    return Err(Error::Invariant(
                        "right action is not a homomorphism".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

fn stabilizer(p: &JordanProfile) -> Vec<Permutation> {
    let t = p.types();
    Permutation::all(p.d())
        .into_iter()
        .filter(|c| (0..p.d()).all(|i| t[c.apply(i)] == t[i]))
        .collect()
}

pub fn springer_module(p: &JordanProfile) -> Result<BimoduleModel> {
    let (m, d) = (p.m(), p.d());
    let base = base_tensor(m, p.types())?;
    let (left, reps) = induce_with_cosets(&base, &WreathSubgroup::full(m, d))?;
    let dims: Vec<usize> = p.types().iter().map(|l| l.hook_dim()).collect();
    let n = base.dim();
    let coset_of = |s: &Permutation| {
        reps.iter()
            .position(|r| r.top() == s)
            .expect("every top is a coset representative of the base group")
    };
    let stab = stabilizer(p);
    let mut right = Vec::with_capacity(stab.len());
    for c in &stab {
        let pinv = place_permutation_matrix(&dims, &c.inverse())?;
        let mut r = Matrix::zeros(left.dim(), left.dim());
        for (j, rj) in reps.iter().enumerate() {
            let i = coset_of(&rj.top().mul(c));
            for a in 0..n {
                for b in 0..n {
                    r.set(i * n + a, j * n + b, pinv.get(a, b).clone());
                }
            }
        }
        right.push(r);
    }
    let model = BimoduleModel {
        profile: p.clone(),
        left,
        stabilizer: stab,
        right,
    };
    model.check_commutation()?;
    Ok(model)
}

/// `χ_ψ(c)` for `c` in the stabilizer: the product over `ν` of
/// `χ_{ψ(ν)}` on `c` restricted to the positions carrying `ν`.
fn right_character(p: &JordanProfile, psi: &CliffordLabel, c: &Permutation) -> Result<ExactScalar> {
    let mut acc = scalar::one();
    for (nu, shape) in psi.entries() {
        let positions: Vec<usize> = (0..p.d()).filter(|&i| &p.types()[i] == nu).collect();
        let local: Vec<usize> = positions
            .iter()
            .map(|&i| {
                positions
                    .iter()
                    .position(|&q| q == c.apply(i))
                    .map(|x| x + 1)
            })
            .collect::<Option<_>>()
            .ok_or_else(|| Error::NotInSubgroup(format!("{c:?} does not preserve {nu}")))?;
        let local = Permutation::from_one_line(&local)?;
        acc *= specht_rep(shape)?.matrix_of_perm(&local)?.trace();
    }
    Ok(acc)
}

/// `χ_{M_ψ}(g) = (1/|C|) Σ_c χ_ψ(c⁻¹) Tr(L(g) R(c))`.
pub fn isotypic_character(
    model: &BimoduleModel,
    psi: &CliffordLabel,
    ctx: &GroupContext,
) -> Result<Character> {
    let p = &model.profile;
    if psi.m() != p.m() || psi.gamma() != gamma_of(p) {
        return Err(Error::InvalidLabel(format!(
            "{psi} is not an irreducible of the component group of {p}"
        )));
    }
    if (ctx.m(), ctx.d()) != (p.m(), p.d()) {
        return Err(Error::ContextMismatch(p.m(), p.d(), ctx.m(), ctx.d()));
    }
    let weights: Vec<ExactScalar> = model
        .stabilizer
        .iter()
        .map(|c| right_character(p, psi, &c.inverse()))
        .collect::<Result<_>>()?;
    let order = scalar::int(model.stabilizer.len() as i64);
    let values = ctx
        .conjugacy_classes()
        .iter()
        .map(|class| {
            let lg = model.left.matrix_of(&class.representative)?;
            let mut acc = scalar::zero();
            for (w, r) in weights.iter().zip(&model.right) {
                acc += w * (&lg * r).trace();
            }
            Ok(acc / &order)
        })
        .collect::<Result<_>>()?;
    Character::new(ctx, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{char_of, inner_product};

    fn prof(m: usize, s: &str) -> JordanProfile {
        JordanProfile::parse(m, s).unwrap()
    }

    #[test]
    fn dimensions_and_right_groups() {
        let m = springer_module(&prof(2, "2;2")).unwrap();
        assert_eq!(m.dim(), 2);
        assert_eq!(m.right_group().len(), 2);
        m.check_right_action().unwrap();
        let m = springer_module(&prof(2, "2;1,1")).unwrap();
        assert_eq!(m.dim(), 2);
        assert_eq!(m.right_group().len(), 1);
        let m = springer_module(&prof(3, "2,1")).unwrap();
        assert_eq!(m.dim(), 2);
        assert_eq!(m.right_group().len(), 1);
        let m = springer_module(&prof(3, "2,1;3;2,1")).unwrap();
        assert_eq!(m.dim(), 6 * 4);
        m.check_right_action().unwrap();
    }

    #[test]
    fn right_action_is_trivial_plus_sign() {
        let m = springer_module(&prof(2, "2;2")).unwrap();
        let ctx = GroupContext::new(2, 2).unwrap();
        let triv = CliffordLabel::parse(2, "2:2").unwrap();
        let sign = CliffordLabel::parse(2, "2:1,1").unwrap();
        let a = isotypic_character(&m, &triv, &ctx).unwrap();
        let b = isotypic_character(&m, &sign, &ctx).unwrap();
        assert_eq!(a.degree(), &scalar::one());
        assert_eq!(b.degree(), &scalar::one());
        assert_eq!(inner_product(&ctx, &a, &b).unwrap(), scalar::zero());
        let wrong = CliffordLabel::parse(2, "2:1;1,1:1").unwrap();
        assert!(isotypic_character(&m, &wrong, &ctx).is_err());
    }

    #[test]
    fn trivial_right_group_gives_whole_module() {
        let ctx = GroupContext::new(2, 2).unwrap();
        let m = springer_module(&prof(2, "2;1,1")).unwrap();
        let psi = CliffordLabel::parse(2, "2:1;1,1:1").unwrap();
        assert_eq!(
            isotypic_character(&m, &psi, &ctx).unwrap(),
            char_of(m.left(), &ctx).unwrap()
        );
    }

    #[test]
    fn unsorted_profile() {
        let ctx = GroupContext::new(2, 3).unwrap();
        let a = springer_module(&prof(2, "2;1,1;2")).unwrap();
        let b = springer_module(&prof(2, "2;2;1,1")).unwrap();
        assert_eq!(
            char_of(a.left(), &ctx).unwrap(),
            char_of(b.left(), &ctx).unwrap()
        );
        let psi = CliffordLabel::parse(2, "2:1,1;1,1:1").unwrap();
        assert_eq!(
            isotypic_character(&a, &psi, &ctx).unwrap(),
            isotypic_character(&b, &psi, &ctx).unwrap()
        );
    }
}
