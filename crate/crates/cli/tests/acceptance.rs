//! Acceptance suite. Runs every criterion in sequence, prints one line per
//! criterion and exits nonzero if any criterion failed.

use std::collections::{BTreeMap, BTreeSet};
use std::process::Command;
use std::time::{Duration, Instant};

use wreath_core::algebra::{
    self, basis, convolve_basis, involution_t, pi0_act, y_bar, y_bar_sum, AlgebraVector,
    BasisIndex, ProductResult,
};
use wreath_core::orbit;
use wreath_core::partition::partitions_of;
use wreath_core::rep::{char_of, clifford_irrep, enumerate_ic, inner_product, Character};
use wreath_core::scalar;
use wreath_core::springer::{self, clifford_to_hu, hu_index, hu_to_clifford};
use wreath_core::wreath::coxeter_b::SignedPerm;
use wreath_core::{GroupContext, Permutation, WreathElement};

const HASSE_LIMIT: Duration = Duration::from_secs(1);
const RELATIONS_LIMIT: Duration = Duration::from_secs(60);
const CENSUS_LIMIT: Duration = Duration::from_secs(10);
const DIMENSION_LIMIT: Duration = Duration::from_secs(10);
const CLIFFORD_LIMIT: Duration = Duration::from_secs(120);
const SPRINGER_LIMIT: Duration = Duration::from_secs(300);

type Outcome = Result<String, String>;

/// Name, time limit and check.
type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ctx(m: usize, d: usize) -> GroupContext {
    GroupContext::new(m, d).expect("group within bound")
}

fn word(m: usize, d: usize, w: &str) -> WreathElement {
    WreathElement::parse(m, d, w).expect("valid word")
}

fn hasse_fidelity() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_wreath"))
        .args(["hasse", "--m", "2", "--d", "2", "--format", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!("hasse exited with {}", out.status)
    })?;
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let nodes: Vec<WreathElement> = v["nodes"]
        .as_array()
        .ok_or("missing nodes")?
        .iter()
        .map(|n| word(2, 2, n.as_str().expect("node label")))
        .collect();
    ensure(nodes.len() == 8, || format!("{} nodes", nodes.len()))?;
    let got: BTreeSet<(WreathElement, WreathElement)> = v["covers"]
        .as_array()
        .ok_or("missing covers")?
        .iter()
        .map(|c| {
            let i = c[0].as_u64().expect("index") as usize;
            let j = c[1].as_u64().expect("index") as usize;
            (nodes[i].clone(), nodes[j].clone())
        })
        .collect();
    let expected: BTreeSet<(WreathElement, WreathElement)> = [
        ("e", "s1^1"),
        ("e", "s1^2"),
        ("s1^1", "s1^1 s1^2"),
        ("s1^2", "s1^1 s1^2"),
        ("t1", "s1^1 t1"),
        ("t1", "s1^2 t1"),
        ("s1^1 t1", "s1^1 s1^2 t1"),
        ("s1^2 t1", "s1^1 s1^2 t1"),
    ]
    .iter()
    .map(|(a, b)| (word(2, 2, a), word(2, 2, b)))
    .collect();
    ensure(got == expected, || format!("covers {got:?}"))?;

    let out = Command::new(env!("CARGO_BIN_EXE_wreath"))
        .args(["order", "--m", "2", "--d", "2", "--x", "s1^1", "--y", "t1"])
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    ensure(
        out.status.success() && text.contains("x <= y: false"),
        || text.to_string(),
    )?;
    Ok("8 nodes, 8 covers, s1 vs t incomparable".into())
}

fn relations() -> Outcome {
    let mut parts = Vec::new();
    for (m, d) in [(2, 2), (3, 2), (2, 3), (2, 4)] {
        let r = algebra::verify_relations(m, d).map_err(|e| format!("({m},{d}): {e}"))?;
        let names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
        let mut required = vec!["quadratic", "wreath"];
        if d >= 3 {
            required.push("braid");
        }
        for n in required {
            ensure(names.contains(&n), || format!("({m},{d}) has no {n} check"))?;
        }
        ensure(r.all_pass(), || format!("({m},{d}): {}", r.to_json()))?;
        parts.push(format!("({m},{d}) {} checks", r.checks.len()));
    }
    Ok(parts.join(", "))
}

fn partial_product() -> Outcome {
    let s1 = word(2, 1, "s1^1");
    let id = Permutation::identity(1);
    let y = BasisIndex::new(s1, id).map_err(|e| e.to_string())?;
    let r = convolve_basis(&y, &y).map_err(|e| e.to_string())?;
    ensure(!r.is_defined(), || format!("[Y_s1]*[Y_s1] gave {r:?}"))?;

    // Every pair at (2,2) against the case split of the convolution lemma.
    let c = ctx(2, 2);
    let b = basis(&c);
    let mut undefined = 0;
    for x in &b {
        for y in &b {
            let r = convolve_basis(x, y).map_err(|e| e.to_string())?;
            let expected = if x.tau.compose(x.w.top()).expect("same degree") != y.tau {
                Some(AlgebraVector::zero(2, 2))
            } else if x.w.base_is_identity() || y.w.base_is_identity() {
                Some(AlgebraVector::basis(BasisIndex {
                    w: x.w.mul(&y.w),
                    tau: x.tau.clone(),
                }))
            } else {
                None
            };
            match (r, expected) {
                (ProductResult::Defined(v), Some(e)) if v == e => {}
                (ProductResult::Undefined(_), None) => undefined += 1,
                (r, e) => return Err(format!("{x:?} * {y:?}: got {r:?}, expected {e:?}")),
            }
        }
    }
    Ok(format!(
        "(2,1) s1*s1 undefined; (2,2) {undefined} of {} pairs undefined",
        b.len() * b.len()
    ))
}

fn census() -> Outcome {
    let mut parts = Vec::new();
    for (m, d, size, rank) in [(2, 2, 16, 8), (3, 2, 144, 72)] {
        let c = ctx(m, d);
        let n = basis(&c).len();
        let r = algebra::y_bar_span_rank(&c);
        ensure(n == size && r == rank, || {
            format!("({m},{d}): basis {n}, rank {r}")
        })?;
        parts.push(format!("({m},{d}) basis {n} rank {r}"));
    }
    Ok(parts.join(", "))
}

fn dimension_property() -> Outcome {
    let mut total = 0;
    for m in 1..=5 {
        for d in 1..=3 {
            for p in orbit::profiles(m, d).map_err(|e| e.to_string())? {
                let ok = orbit::check_dimension_property(&p).map_err(|e| e.to_string())?;
                ensure(ok, || format!("fails for {p}"))?;
                total += 1;
            }
        }
    }
    Ok(format!("{total} profiles"))
}

fn clifford_completeness() -> Outcome {
    let mut parts = Vec::new();
    for (m, d, order) in [(2, 2, 8), (3, 2, 72), (2, 3, 48)] {
        let c = ctx(m, d);
        let mut sum = 0;
        let mut chars: Vec<Character> = Vec::new();
        for l in enumerate_ic(m, d) {
            let rho = clifford_irrep(&l).map_err(|e| format!("{l}: {e}"))?;
            sum += rho.dim() * rho.dim();
            chars.push(char_of(&rho, &c).map_err(|e| e.to_string())?);
        }
        ensure(sum == order, || format!("({m},{d}): Σ dim² = {sum}"))?;
        for (i, a) in chars.iter().enumerate() {
            for (j, b) in chars.iter().enumerate() {
                let ip = inner_product(&c, a, b).map_err(|e| e.to_string())?;
                let expected = if i == j {
                    scalar::one()
                } else {
                    scalar::zero()
                };
                ensure(ip == expected, || format!("({m},{d}): <χ{i}, χ{j}> = {ip}"))?;
            }
        }
        parts.push(format!("({m},{d}) Σ dim² = {sum}"));
    }
    Ok(parts.join(", "))
}

/// Conjugacy classes by brute force over the element list.
fn brute_force_class_count<T: Clone + Ord>(
    elements: &[T],
    mul: impl Fn(&T, &T) -> T,
    inv: impl Fn(&T) -> T,
) -> usize {
    let mut seen = BTreeSet::new();
    let mut classes = 0;
    for x in elements {
        if seen.contains(x) {
            continue;
        }
        classes += 1;
        for g in elements {
            seen.insert(mul(&mul(g, x), &inv(g)));
        }
    }
    classes
}

fn index_sets() -> Outcome {
    let mut parts = Vec::new();
    for (m, d, expected) in [(2, 2, 5), (3, 2, 9)] {
        let c = ctx(m, d);
        let classes = brute_force_class_count(c.elements(), |a, b| a.mul(b), |a| a.inverse());
        let ic = enumerate_ic(m, d).len();
        let is = orbit::enumerate_is(m, d).map_err(|e| e.to_string())?.len();
        ensure(
            classes == expected && ic == classes && is == classes,
            || format!("({m},{d}): classes {classes}, I^C {ic}, I^S {is}"),
        )?;
        parts.push(format!("({m},{d}) {classes}"));
    }
    Ok(parts.join(", "))
}

fn springer_correspondence() -> Outcome {
    let mut parts = Vec::new();
    for (m, d) in [(2, 2), (2, 3), (3, 2)] {
        let r = springer::verify_springer(m, d).map_err(|e| e.to_string())?;
        ensure(r.all_pass(), || format!("({m},{d}): {}", r.to_json()))?;
        parts.push(format!("({m},{d}) {} labels", r.labels.len()));
    }
    Ok(parts.join(", "))
}

fn involution_and_component_action() -> Outcome {
    for (m, d) in [(2, 2), (3, 2), (2, 3)] {
        let c = ctx(m, d);
        for b in basis(&c) {
            let v = AlgebraVector::basis(b.clone());
            ensure(involution_t(&involution_t(&v)) == v, || {
                format!("T² ≠ id on {b:?}")
            })?;
        }
        for w in c.elements() {
            let yw = y_bar_sum(w);
            ensure(involution_t(&yw) == y_bar_sum(&w.inverse()), || {
                format!("T(Ȳ_{w}) ≠ Ȳ_{{w⁻¹}}")
            })?;
            for eta in Permutation::all(d) {
                let moved = pi0_act(&eta, &yw).map_err(|e| e.to_string())?;
                ensure(moved == yw, || format!("{eta} moves Ȳ_{w}"))?;
            }
        }
    }
    let w = word(2, 2, "s1^1");
    let t = Permutation::from_one_line(&[2, 1]).expect("transposition");
    let e = Permutation::identity(2);
    let moved =
        pi0_act(&t, &y_bar(&w, &t).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let target = y_bar(&w, &e).map_err(|e| e.to_string())?;
    ensure(moved == target, || format!("t·Ȳ_(s1,e),t = {moved:?}"))?;
    ensure(moved != y_bar(&w, &t).map_err(|e| e.to_string())?, || {
        "Ȳ_(s1,e),t fixed".into()
    })?;
    Ok("T² = id, T(Ȳ_w) = Ȳ_{w⁻¹}, π₀ fixes Ȳ_w, t·Ȳ_(s1,e),t = Ȳ_(s1,e),e".into())
}

fn type_d_class_count(d: usize) -> usize {
    let group: Vec<SignedPerm> = SignedPerm::all(d)
        .into_iter()
        .filter(|w| w.sign_changes() % 2 == 0)
        .collect();
    brute_force_class_count(&group, |a, b| a.mul(b), |a| a.inverse())
}

fn type_tables() -> Outcome {
    for (d, expected) in [(2, 5), (3, 10)] {
        let pairs: usize = (0..=d)
            .map(|a| partitions_of(a).len() * partitions_of(d - a).len())
            .sum();
        let rows = springer::type_b_table(d).map_err(|e| e.to_string())?.len();
        ensure(rows == pairs && rows == expected, || {
            format!("type B d={d}: {rows} rows, {pairs} bipartitions")
        })?;
    }
    let mut d_counts = Vec::new();
    for d in 2..=4 {
        let rows = springer::type_d_table(d).map_err(|e| e.to_string())?.len();
        let classes = type_d_class_count(d);
        ensure(rows == classes, || {
            format!("type D d={d}: {rows} rows, {classes} classes")
        })?;
        d_counts.push(rows.to_string());
    }
    for m in 1..=4 {
        let hu = hu_index(m);
        let mut images = BTreeSet::new();
        for h in &hu {
            let l = hu_to_clifford(h).map_err(|e| e.to_string())?;
            let back = clifford_to_hu(&l).map_err(|e| e.to_string())?;
            ensure(&back == h, || format!("m={m}: {h} does not round-trip"))?;
            images.insert(l);
        }
        let ic: BTreeSet<_> = enumerate_ic(m, 2).into_iter().collect();
        ensure(images.len() == hu.len() && images == ic, || {
            format!(
                "m={m}: {} Hu labels, {} images, {} Clifford labels",
                hu.len(),
                images.len(),
                ic.len()
            )
        })?;
    }
    Ok(format!(
        "type B 5, 10; type D {} (brute force); Hu bijective for m ≤ 4",
        d_counts.join(", ")
    ))
}

/// Coefficients of `d!·(Σ_{w∈Σ_m} q^{ℓ(w)})^d`, computed from inversion counts.
fn expected_cells(m: usize, d: usize) -> BTreeMap<usize, usize> {
    let mut one: BTreeMap<usize, usize> = BTreeMap::new();
    for w in Permutation::all(m) {
        let l = w.images();
        let inv = (0..m)
            .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
            .filter(|&(i, j)| l[i] > l[j])
            .count();
        *one.entry(inv).or_default() += 1;
    }
    let mut acc: BTreeMap<usize, usize> = [(0, (1..=d).product())].into();
    for _ in 0..d {
        let mut next = BTreeMap::new();
        for (a, x) in &acc {
            for (b, y) in &one {
                *next.entry(a + b).or_default() += x * y;
            }
        }
        acc = next;
    }
    acc
}

fn cell_statistics() -> Outcome {
    for (m, d) in [(2, 2), (3, 2), (2, 3), (3, 1), (1, 3), (2, 4)] {
        let c = ctx(m, d);
        let s = c.cell_statistics();
        ensure(
            s.cells == c.order() && s.by_dimension == expected_cells(m, d),
            || format!("({m},{d}): {:?}", s.by_dimension),
        )?;
    }
    let p = ctx(2, 2).cell_statistics().polynomial();
    ensure(p == vec![2, 4, 2], || format!("(2,2) polynomial {p:?}"))?;
    Ok("(2,2) 2+4q+2q², 6 cases match".into())
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("1 hasse fidelity", Some(HASSE_LIMIT), hasse_fidelity),
        ("2 algebra relations", Some(RELATIONS_LIMIT), relations),
        ("3 partial product", None, partial_product),
        ("4 basis census", Some(CENSUS_LIMIT), census),
        (
            "5 dimension property",
            Some(DIMENSION_LIMIT),
            dimension_property,
        ),
        (
            "6 clifford completeness",
            Some(CLIFFORD_LIMIT),
            clifford_completeness,
        ),
        ("7 index sets", None, index_sets),
        (
            "8 springer correspondence",
            Some(SPRINGER_LIMIT),
            springer_correspondence,
        ),
        ("9 involution and π₀", None, involution_and_component_action),
        ("10 type B/D tables", None, type_tables),
        ("11 cell statistics", None, cell_statistics),
    ];
    let mut failed = Vec::new();
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if limit.is_none_or(|l| elapsed <= l) => (true, d),
            Ok(d) => (false, format!("{d}; too slow")),
            Err(e) => (false, e),
        };
        let limit = limit.map_or("untimed".to_string(), |l| {
            format!("limit {} s", l.as_secs())
        });
        println!(
            "{} {name}: {detail} ({:.2} s, {limit})",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
        );
        if !ok {
            failed.push(name);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed");
    } else {
        println!("acceptance: failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
