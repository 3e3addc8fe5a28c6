use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wreath_core::matrix::Matrix;
use wreath_core::orbit::{self, JordanProfile};
use wreath_core::partition::partitions_of;
use wreath_core::rep::{
    char_of, clifford_irrep, enumerate_ic, induce, inner_product, isotypic_character,
    labels_with_gamma, specht_rep, springer_module, Representation, WreathSubgroup,
};
use wreath_core::scalar::{self, ExactScalar};
use wreath_core::wreath::coxeter_b::{self, SignedPerm};
use wreath_core::wreath::{bruhat_leq_wreath, Generator};
use wreath_core::{GroupContext, Partition, WreathElement};

/// `χ^λ(μ)` by removing rim hooks of size `μ_1` from the beta-set of `λ`.
fn murnaghan_nakayama(lambda: &[usize], mu: &[usize]) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return if lambda.is_empty() { 1 } else { 0 };
    };
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &l)| l + len - 1 - i)
        .collect();
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut next = beta.clone();
        next[idx] = b - r;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let k = next.len();
        let shape: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (k - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * murnaghan_nakayama(&shape, rest);
    }
    total
}

#[test]
fn specht_characters_match_murnaghan_nakayama() {
    for n in 1..=6 {
        let ctx = GroupContext::new(1, n).unwrap();
        for lambda in partitions_of(n) {
            let chi = char_of(&specht_rep(&lambda).unwrap(), &ctx).unwrap();
            for (class, value) in ctx.conjugacy_classes().iter().zip(chi.values()) {
                let mu = class.representative.top().cycle_type();
                let expected = murnaghan_nakayama(lambda.parts(), &mu);
                assert_eq!(value, &scalar::int(expected), "χ^{lambda}({mu:?})");
            }
        }
    }
}

fn brute_force_classes<T: Clone + Ord>(
    elements: &[T],
    mul: impl Fn(&T, &T) -> T,
    inv: impl Fn(&T) -> T,
) -> Vec<BTreeSet<T>> {
    let mut seen = BTreeSet::new();
    let mut classes = Vec::new();
    for x in elements {
        if seen.contains(x) {
            continue;
        }
        let class: BTreeSet<T> = elements.iter().map(|g| mul(&mul(g, x), &inv(g))).collect();
        seen.extend(class.iter().cloned());
        classes.push(class);
    }
    classes
}

#[test]
fn conjugacy_classes_match_brute_force() {
    for (m, d) in [(1, 4), (2, 2), (3, 2), (2, 3), (4, 1)] {
        let ctx = GroupContext::new(m, d).unwrap();
        let oracle = brute_force_classes(ctx.elements(), |a, b| a.mul(b), |a| a.inverse());
        assert_eq!(oracle.len(), ctx.conjugacy_classes().len(), "({m},{d})");
        for class in &oracle {
            let ids: BTreeSet<usize> = class.iter().map(|x| ctx.class_of(x).unwrap()).collect();
            assert_eq!(ids.len(), 1);
            let id = *ids.iter().next().unwrap();
            assert_eq!(ctx.conjugacy_classes()[id].size(), class.len());
        }
        assert_eq!(enumerate_ic(m, d).len(), oracle.len());
    }
}

#[test]
fn type_d_index_set_matches_brute_force() {
    for d in 2..=4 {
        let group: Vec<SignedPerm> = SignedPerm::all(d)
            .into_iter()
            .filter(|w| w.sign_changes() % 2 == 0)
            .collect();
        let classes = brute_force_classes(&group, |a, b| a.mul(b), |a| a.inverse());
        let table = wreath_core::springer::type_d_table(d).unwrap();
        assert_eq!(table.len(), classes.len(), "d = {d}");
    }
}

fn restrict(rho: &Representation, h: &WreathSubgroup) -> Representation {
    let gens = h
        .generators()
        .into_iter()
        .map(|g| (g, rho.matrix(g).unwrap().clone()))
        .collect();
    Representation::new(h.clone(), rho.dim(), gens).unwrap()
}

/// `(1/|H|) Σ_{h∈H} χ(h) ψ(h⁻¹)` by summing over elements.
fn subgroup_inner_product(
    ctx: &GroupContext,
    a: &Representation,
    b: &Representation,
) -> ExactScalar {
    let h = a.group();
    let mut acc = scalar::zero();
    let mut count = 0;
    for x in ctx.elements().iter().filter(|x| h.contains(x)) {
        acc += a.trace_of(x).unwrap() * b.trace_of(&x.inverse()).unwrap();
        count += 1;
    }
    acc / scalar::int(count)
}

#[test]
fn frobenius_reciprocity() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cases = [
        (2, 3, vec![vec![2, 1], vec![1, 1, 1], vec![1, 2]]),
        (3, 2, vec![vec![1, 1]]),
    ];
    let mut checked = 0;
    while checked < 20 {
        let (m, d, blocks) = cases.choose(&mut rng).unwrap();
        let ctx = GroupContext::new(*m, *d).unwrap();
        let h = WreathSubgroup::new(*m, blocks.choose(&mut rng).unwrap().clone()).unwrap();
        let g = WreathSubgroup::full(*m, *d);
        let labels = enumerate_ic(*m, *d);
        let a = clifford_irrep(labels.choose(&mut rng).unwrap()).unwrap();
        let b = clifford_irrep(labels.choose(&mut rng).unwrap()).unwrap();
        let a_h = restrict(&a, &h);
        let lhs = inner_product(
            &ctx,
            &char_of(&induce(&a_h, &g).unwrap(), &ctx).unwrap(),
            &char_of(&b, &ctx).unwrap(),
        )
        .unwrap();
        let rhs = subgroup_inner_product(&ctx, &a_h, &restrict(&b, &h));
        assert_eq!(lhs, rhs, "({m},{d}) blocks {:?}", h.blocks());
        assert!(lhs.is_integer() && lhs >= scalar::zero());
        checked += 1;
    }
}

#[test]
fn induced_trivial_from_base_group() {
    for (m, d) in [(2, 2), (2, 3), (3, 2)] {
        let ctx = GroupContext::new(m, d).unwrap();
        let ind = induce(
            &Representation::trivial(WreathSubgroup::base(m, d)),
            &WreathSubgroup::full(m, d),
        )
        .unwrap();
        let chi = char_of(&ind, &ctx).unwrap();
        let d_fact: i64 = (1..=d as i64).product();
        for (class, v) in ctx.conjugacy_classes().iter().zip(chi.values()) {
            let expected = if class.representative.top().is_identity() {
                d_fact
            } else {
                0
            };
            assert_eq!(v, &scalar::int(expected));
        }
    }
}

/// The homomorphism `s1^1 ↦ s^B_0`, `t1 ↦ s^B_1` from `Σ_2 ≀ Σ_2` to `W(B_2)`.
fn to_type_b(x: &WreathElement) -> SignedPerm {
    let mut word = Vec::new();
    for g in x.word() {
        match g {
            Generator::S { j: 1, .. } => word.push(0),
            Generator::S { .. } => word.extend([1, 0, 1]),
            Generator::T { .. } => word.push(1),
        }
    }
    SignedPerm::from_word(&word, 2).unwrap()
}

#[test]
fn wreath_order_strictly_coarser_than_type_b() {
    let ctx = GroupContext::new(2, 2).unwrap();
    let images: BTreeSet<SignedPerm> = ctx.elements().iter().map(to_type_b).collect();
    assert_eq!(images.len(), 8);
    for x in ctx.elements() {
        for y in ctx.elements() {
            assert_eq!(to_type_b(&x.mul(y)), to_type_b(x).mul(&to_type_b(y)));
        }
    }
    let mut only_b = 0;
    for x in ctx.elements() {
        for y in ctx.elements() {
            let b = coxeter_b::leq(&to_type_b(x), &to_type_b(y));
            if bruhat_leq_wreath(x, y).unwrap() {
                assert!(b, "{x} ≤ {y} fails in W(B_2)");
            } else if b {
                only_b += 1;
            }
        }
    }
    assert!(only_b > 0);
    let s1 = ctx.parse("s1^1").unwrap();
    let s1t = ctx.parse("s1^1 t1").unwrap();
    assert!(coxeter_b::leq(&to_type_b(&s1), &to_type_b(&s1t)));
    assert!(!bruhat_leq_wreath(&s1, &s1t).unwrap());
}

fn jordan_block_matrix(lambda: &Partition) -> Matrix {
    let n = lambda.size();
    let mut a = Matrix::zeros(n, n);
    let mut start = 0;
    for &p in lambda.parts() {
        for k in 0..p - 1 {
            a.set(start + k, start + k + 1, scalar::one());
        }
        start += p;
    }
    a
}

/// Random unit lower and upper triangular factors and their inverses.
fn random_similarity(n: usize, rng: &mut ChaCha8Rng) -> (Matrix, Matrix) {
    let mut l = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            l.set(i, j, scalar::int(rng.gen_range(-3..=3)));
        }
    }
    // forward substitution for the inverse of a unit lower triangular matrix
    let mut inv = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            let mut acc = scalar::zero();
            for k in j..i {
                acc += l.get(i, k) * inv.get(k, j);
            }
            inv.set(i, j, -acc);
        }
    }
    (l, inv)
}

#[test]
fn jordan_type_recovers_conjugated_blocks() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=6 {
        for lambda in partitions_of(n) {
            let (p, p_inv) = random_similarity(n, &mut rng);
            assert!((&p * &p_inv).is_identity());
            let a = &(&p * &jordan_block_matrix(&lambda)) * &p_inv;
            assert_eq!(orbit::jordan_type(&a).unwrap(), lambda);
        }
    }
    assert!(orbit::jordan_type(&Matrix::identity(2)).is_err());
}

/// `m² − dim ker(X ↦ AX − XA)` via the rank of `I⊗A − Aᵀ⊗I`.
fn orbit_dim_by_centralizer(lambda: &Partition) -> usize {
    let a = jordan_block_matrix(lambda);
    let n = a.rows();
    let mut at = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            at.set(i, j, a.get(j, i).clone());
        }
    }
    let id = Matrix::identity(n);
    let ad = &id.kron(&a) + &at.kron(&id).scale(&scalar::int(-1));
    ad.rank()
}

#[test]
fn orbit_and_fiber_dimensions_match_independent_formulas() {
    for m in 1..=4 {
        for lambda in partitions_of(m) {
            let p = JordanProfile::new(m, vec![lambda.clone()]).unwrap();
            assert_eq!(
                orbit::orbit_dim(&p),
                orbit_dim_by_centralizer(&lambda),
                "{lambda}"
            );
            let n_by_columns: usize = lambda
                .conjugate()
                .parts()
                .iter()
                .map(|c| c * (c - 1) / 2)
                .sum();
            assert_eq!(orbit::fiber_dim(&p), n_by_columns);
        }
    }
}

#[test]
fn orbit_labels_separate_orbits() {
    for (m, d) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
        let profiles = orbit::profiles(m, d).unwrap();
        let mut by_label: BTreeMap<String, BTreeSet<Vec<Partition>>> = BTreeMap::new();
        for p in &profiles {
            let mut sorted = p.types().to_vec();
            sorted.sort();
            by_label
                .entry(orbit::orbit_label(p).to_string())
                .or_default()
                .insert(sorted);
        }
        assert!(by_label.values().all(|s| s.len() == 1), "({m},{d})");
        assert_eq!(by_label.len(), orbit::orbit_labels(m, d).unwrap().len());
    }
}

#[test]
fn isotypic_decomposition_of_springer_modules() {
    for (m, d) in [(2, 2), (3, 2), (2, 3)] {
        let ctx = GroupContext::new(m, d).unwrap();
        for o in orbit::orbit_labels(m, d).unwrap() {
            let model = springer_module(o.profile()).unwrap();
            let mut total = 0usize;
            for psi in labels_with_gamma(&o.gamma()) {
                let chi = isotypic_character(&model, &psi, &ctx).unwrap();
                assert!(
                    !chi.degree().is_zero(),
                    "{psi} has multiplicity 0 in M({})",
                    o
                );
                assert!(inner_product(&ctx, &chi, &chi).unwrap().is_one());
                let dim_psi: usize = psi.entries().map(|(_, l)| l.hook_dim()).product();
                total += dim_psi * chi.degree().to_integer().to_usize().unwrap();
            }
            assert_eq!(total, model.dim(), "M({o})");
        }
    }
}
