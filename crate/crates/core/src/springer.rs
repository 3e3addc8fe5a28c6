//! The correspondence `Ψ: I^C → I^S` and its type B/C and type D tables.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::orbit::{enumerate_is, OrbitLabel};
use crate::partition::{bipartitions_of, partitions_of, Partition};
use crate::rep::{
    char_of, clifford_irrep, enumerate_ic, isotypic_character, springer_module, CliffordLabel,
};
use crate::scalar;
use crate::wreath::{self, GroupContext};

/// `[x, ψ]`: a nilpotent orbit and an irreducible of its component group
/// `Σ_{γ(x)}`, the latter stored as a Clifford label of shape `γ(x)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpringerLabel {
    orbit: OrbitLabel,
    psi: CliffordLabel,
}

impl SpringerLabel {
    pub fn new(orbit: OrbitLabel, psi: CliffordLabel) -> Result<Self> {
        if psi.m() != orbit.m() || psi.gamma() != orbit.gamma() {
            return Err(Error::InvalidLabel(format!(
                "{psi} does not index an irreducible of C(x) for x in {orbit}"
            )));
        }
        Ok(SpringerLabel { orbit, psi })
    }

    pub fn orbit(&self) -> &OrbitLabel {
        &self.orbit
    }

    pub fn psi(&self) -> &CliffordLabel {
        &self.psi
    }
}

impl fmt::Debug for SpringerLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let psi: Vec<String> = self.psi.entries().map(|(_, l)| format!("S^{l}")).collect();
        write!(f, "[{}, {}]", self.orbit, psi.join("⊗"))
    }
}

impl fmt::Display for SpringerLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for SpringerLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            orbit: Vec<String>,
            psi: &'a CliffordLabel,
        }
        Repr {
            orbit: self
                .orbit
                .profile()
                .types()
                .iter()
                .map(|p| p.compact())
                .collect(),
            psi: &self.psi,
        }
        .serialize(s)
    }
}

/// `Ψ(𝝀) = [x_𝝀, S^𝝀]` with `γ(x_𝝀) = |𝝀|`.
pub fn psi(label: &CliffordLabel) -> Result<SpringerLabel> {
    SpringerLabel::new(label.gamma().orbit(), label.clone())
}

pub fn psi_inv(s: &SpringerLabel) -> Result<CliffordLabel> {
    let label = s.psi.clone();
    if psi(&label)? != *s {
        return Err(Error::InvalidLabel(format!("{s} is not in the image of Ψ")));
    }
    Ok(label)
}

#[derive(Clone, Debug, Serialize)]
pub struct LabelCheck {
    pub springer: SpringerLabel,
    pub clifford: CliffordLabel,
    pub dim: String,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SpringerReport {
    pub m: usize,
    pub d: usize,
    pub class_count: usize,
    pub ic_count: usize,
    pub is_count: usize,
    pub bijective: bool,
    pub labels: Vec<LabelCheck>,
}

impl SpringerReport {
    pub fn all_pass(&self) -> bool {
        self.bijective && self.labels.iter().all(|l| l.matches)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Compares, for every `[x, ψ] ∈ I^S`, the character of the isotypic component
/// `M(x)_ψ` with that of `L^{Ψ⁻¹[x, ψ]}`.
pub fn verify_springer(m: usize, d: usize) -> Result<SpringerReport> {
    verify_springer_with_bound(m, d, wreath::bound_from_env())
}

pub fn verify_springer_with_bound(m: usize, d: usize, bound: usize) -> Result<SpringerReport> {
    let ctx = GroupContext::with_bound(m, d, bound)?;
    let ic = enumerate_ic(m, d);
    let is = enumerate_is(m, d)?;
    let mut images: Vec<SpringerLabel> = ic.iter().map(psi).collect::<Result<_>>()?;
    images.sort();
    let mut sorted_is = is.clone();
    sorted_is.sort();
    let class_count = ctx.conjugacy_classes().len();
    let bijective =
        images.windows(2).all(|w| w[0] != w[1]) && images == sorted_is && ic.len() == class_count;

    let mut labels = Vec::new();
    let mut current: Option<(OrbitLabel, crate::rep::BimoduleModel)> = None;
    for s in &is {
        if current
            .as_ref()
            .map(|(o, _)| o != s.orbit())
            .unwrap_or(true)
        {
            current = Some((s.orbit().clone(), springer_module(s.orbit().profile())?));
        }
        let model = &current.as_ref().expect("just set").1;
        let lhs = isotypic_character(model, s.psi(), &ctx)?;
        let clifford = psi_inv(s)?;
        let rhs = char_of(&clifford_irrep(&clifford)?, &ctx)?;
        labels.push(LabelCheck {
            springer: s.clone(),
            clifford,
            dim: scalar::to_string(lhs.degree()),
            matches: lhs == rhs,
        });
    }
    Ok(SpringerReport {
        m,
        d,
        class_count,
        ic_count: ic.len(),
        is_count: is.len(),
        bijective,
        labels,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

/// `[ν′, ν″]` (unordered, distinct) or `[ν, ν]_±`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HuLabel {
    pair: (Partition, Partition),
    sign: Option<Sign>,
}

impl HuLabel {
    pub fn new(a: Partition, b: Partition, sign: Option<Sign>) -> Result<Self> {
        if (a == b) != sign.is_some() {
            return Err(Error::InvalidLabel(format!(
                "[{a}, {b}] must carry a sign exactly when the entries are equal"
            )));
        }
        let key = |p: &Partition| (std::cmp::Reverse(p.size()), p.clone());
        let pair = if key(&b) < key(&a) { (b, a) } else { (a, b) };
        Ok(HuLabel { pair, sign })
    }

    pub fn pair(&self) -> (&Partition, &Partition) {
        (&self.pair.0, &self.pair.1)
    }

    pub fn sign(&self) -> Option<Sign> {
        self.sign
    }
}

impl fmt::Debug for HuLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.pair.0, self.pair.1)?;
        match self.sign {
            Some(Sign::Plus) => write!(f, "+"),
            Some(Sign::Minus) => write!(f, "-"),
            None => Ok(()),
        }
    }
}

impl fmt::Display for HuLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for HuLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            pair: [String; 2],
            #[serde(skip_serializing_if = "Option::is_none")]
            sign: Option<Sign>,
        }
        Repr {
            pair: [self.pair.0.compact(), self.pair.1.compact()],
            sign: self.sign,
        }
        .serialize(s)
    }
}

/// `I^H_{m≀2}`, in canonical order of the first entry.
pub fn hu_index(m: usize) -> Vec<HuLabel> {
    let parts = partitions_of(m);
    let mut out = Vec::new();
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i..] {
            if a == b {
                for s in [Sign::Plus, Sign::Minus] {
                    out.push(HuLabel::new(a.clone(), b.clone(), Some(s)).expect("equal pair"));
                }
            } else {
                out.push(HuLabel::new(a.clone(), b.clone(), None).expect("distinct pair"));
            }
        }
    }
    out
}

/// `[ν,ν]_+ ↦ {ν↦(2)}`, `[ν,ν]_− ↦ {ν↦(1,1)}`, `[ν′,ν″] ↦ {ν′↦(1), ν″↦(1)}`.
pub fn hu_to_clifford(h: &HuLabel) -> Result<CliffordLabel> {
    let (a, b) = h.pair();
    let m = a.size();
    if b.size() != m {
        return Err(Error::InvalidLabel(format!(
            "{h} is not a pair of partitions of the same size"
        )));
    }
    let map = match h.sign {
        Some(Sign::Plus) => [(a.clone(), Partition::row(2))].into(),
        Some(Sign::Minus) => [(a.clone(), Partition::column(2))].into(),
        None => [
            (a.clone(), Partition::row(1)),
            (b.clone(), Partition::row(1)),
        ]
        .into(),
    };
    CliffordLabel::new(m, map)
}

pub fn clifford_to_hu(label: &CliffordLabel) -> Result<HuLabel> {
    if label.d() != 2 {
        return Err(Error::InvalidLabel(format!(
            "{label} is not a label for d = 2"
        )));
    }
    let entries: Vec<(&Partition, &Partition)> = label.entries().collect();
    match entries.as_slice() {
        [(nu, l)] if **l == Partition::row(2) => {
            HuLabel::new((*nu).clone(), (*nu).clone(), Some(Sign::Plus))
        }
        [(nu, _)] => HuLabel::new((*nu).clone(), (*nu).clone(), Some(Sign::Minus)),
        [(a, _), (b, _)] => HuLabel::new((*a).clone(), (*b).clone(), None),
        _ => Err(Error::InvalidLabel(format!("{label}"))),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TypeBRow {
    pub bipartition: [String; 2],
    pub clifford: CliffordLabel,
    pub springer: SpringerLabel,
}

/// Irreducibles of `W(B_d) = Σ_2 ≀ Σ_d` by bipartitions `(𝝀((2)), 𝝀((1,1)))`.
pub fn type_b_table(d: usize) -> Result<Vec<TypeBRow>> {
    if d == 0 {
        return Err(Error::IndexOutOfRange("d must be positive".into()));
    }
    bipartitions_of(d)
        .into_iter()
        .map(|(l1, l2)| {
            let map = [
                (Partition::row(2), l1.clone()),
                (Partition::column(2), l2.clone()),
            ]
            .into();
            let clifford = CliffordLabel::new(2, map)?;
            Ok(TypeBRow {
                bipartition: [l1.compact(), l2.compact()],
                springer: psi(&clifford)?,
                clifford,
            })
        })
        .collect()
}

/// `[x, ψ]` with `x ∈ 𝒩_a × 𝒩_{d−a}` of Jordan type `(ν′, ν″)` and `ψ` one of
/// `S^{(1)}`, `S^{(2)}`, `S^{(1,1)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeDSpringer {
    pub jordan: [String; 2],
    pub psi: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TypeDRow {
    pub hu: HuLabel,
    pub springer: TypeDSpringer,
}

/// The type D correspondence built from unordered bipartitions of `d`.
pub fn type_d_table(d: usize) -> Result<Vec<TypeDRow>> {
    if d == 0 {
        return Err(Error::IndexOutOfRange("d must be positive".into()));
    }
    let mut labels: Vec<HuLabel> = Vec::new();
    for (a, b) in bipartitions_of(d) {
        if a == b {
            for s in [Sign::Plus, Sign::Minus] {
                labels.push(HuLabel::new(a.clone(), b.clone(), Some(s))?);
            }
        } else {
            labels.push(HuLabel::new(a, b, None)?);
        }
    }
    labels.sort();
    labels.dedup();
    Ok(labels
        .into_iter()
        .map(|hu| {
            let psi = match hu.sign {
                None => Partition::row(1),
                Some(Sign::Plus) => Partition::row(2),
                Some(Sign::Minus) => Partition::column(2),
            };
            let (a, b) = hu.pair();
            let springer = TypeDSpringer {
                jordan: [a.compact(), b.compact()],
                psi: psi.compact(),
            };
            TypeDRow { hu, springer }
        })
        .collect())
}

pub fn type_b_markdown(rows: &[TypeBRow]) -> String {
    let mut out = String::from("| bipartition | Clifford label | [x, ψ] |\n|---|---|---|\n");
    for r in rows {
        out.push_str(&format!(
            "| ({}, {}) | {} | {} |\n",
            r.bipartition[0], r.bipartition[1], r.clifford, r.springer
        ));
    }
    out
}

pub fn type_d_markdown(rows: &[TypeDRow]) -> String {
    let mut out = String::from("| Hu label | [x, ψ] |\n|---|---|\n");
    for r in rows {
        out.push_str(&format!(
            "| {} | [x({}; {}), S^({})] |\n",
            r.hu, r.springer.jordan[0], r.springer.jordan[1], r.springer.psi
        ));
    }
    out
}
