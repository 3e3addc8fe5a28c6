//! Nilpotent orbits of `GL_m^d ⋊ Σ_d` on `𝒩_m^d`, by their Jordan data.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::partition::{partitions_of, Partition};
use crate::perm::factorial;
use crate::springer::SpringerLabel;
use crate::wreath;

/// Jordan types `(λ_1, …, λ_d)` of a tuple of nilpotent `m × m` matrices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JordanProfile {
    m: usize,
    types: Vec<Partition>,
}

impl JordanProfile {
    pub fn new(m: usize, types: Vec<Partition>) -> Result<Self> {
        if types.is_empty() {
            return Err(Error::InvalidPartition("empty Jordan profile".into()));
        }
        if let Some(bad) = types.iter().find(|l| l.size() != m) {
            return Err(Error::InvalidPartition(format!(
                "{bad} is not a partition of {m}"
            )));
        }
        Ok(JordanProfile { m, types })
    }

    /// Parses `"2;1,1"`: partitions in compact form separated by `;`.
    pub fn parse(m: usize, s: &str) -> Result<Self> {
        let types = s
            .split(';')
            .map(|p| p.trim().parse())
            .collect::<Result<Vec<Partition>>>()?;
        Self::new(m, types)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> usize {
        self.types.len()
    }

    pub fn types(&self) -> &[Partition] {
        &self.types
    }
}

impl fmt::Debug for JordanProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.types.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl fmt::Display for JordanProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Canonical representative of a `Σ_d`-orbit of profiles: entries sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitLabel {
    canonical: JordanProfile,
}

impl OrbitLabel {
    pub fn profile(&self) -> &JordanProfile {
        &self.canonical
    }

    pub fn m(&self) -> usize {
        self.canonical.m
    }

    pub fn d(&self) -> usize {
        self.canonical.d()
    }

    pub fn gamma(&self) -> GammaMap {
        gamma_of(&self.canonical)
    }
}

impl fmt::Debug for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.canonical, f)
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.canonical, f)
    }
}

/// Multiplicities `γ(ν)` of the partitions `ν ⊢ m`; zero entries are not stored.
/// Also describes the Young subgroup `Σ_γ = Π_ν Σ_{γ(ν)}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GammaMap {
    m: usize,
    counts: BTreeMap<Partition, usize>,
}

impl GammaMap {
    pub fn new(m: usize, counts: BTreeMap<Partition, usize>) -> Result<Self> {
        if let Some(bad) = counts.keys().find(|l| l.size() != m) {
            return Err(Error::InvalidPartition(format!(
                "{bad} is not a partition of {m}"
            )));
        }
        Ok(GammaMap {
            m,
            counts: counts.into_iter().filter(|(_, c)| *c > 0).collect(),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn get(&self, nu: &Partition) -> usize {
        self.counts.get(nu).copied().unwrap_or(0)
    }

    /// `(ν, γ(ν))` for `γ(ν) > 0`, in canonical partition order.
    pub fn blocks(&self) -> impl Iterator<Item = (&Partition, usize)> {
        self.counts.iter().map(|(k, v)| (k, *v))
    }

    /// The composition `(γ(ν))_ν` of `d`.
    pub fn composition(&self) -> Vec<usize> {
        self.counts.values().copied().collect()
    }

    /// `|Σ_γ| = Π_ν γ(ν)!`.
    pub fn order(&self) -> usize {
        self.counts.values().map(|&c| factorial(c)).product()
    }

    /// The sorted profile with these multiplicities.
    pub fn orbit(&self) -> OrbitLabel {
        let types = self
            .counts
            .iter()
            .flat_map(|(nu, &c)| std::iter::repeat_n(nu.clone(), c))
            .collect();
        OrbitLabel {
            canonical: JordanProfile { m: self.m, types },
        }
    }
}

impl fmt::Debug for GammaMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .counts
            .iter()
            .map(|(k, v)| format!("{k}↦{v}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl Serialize for GammaMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.counts.len()))?;
        for (k, v) in &self.counts {
            map.serialize_entry(&k.compact(), v)?;
        }
        map.end()
    }
}

pub fn orbit_label(p: &JordanProfile) -> OrbitLabel {
    let mut types = p.types.clone();
    types.sort();
    OrbitLabel {
        canonical: JordanProfile { m: p.m, types },
    }
}

/// Jordan type of a nilpotent matrix from the rank sequence of its powers:
/// the conjugate partition has parts `rank(A^{k−1}) − rank(A^k)`.
pub fn jordan_type(a: &Matrix) -> Result<Partition> {
    if !a.is_square() {
        return Err(Error::DegreeMismatch(a.rows(), a.cols()));
    }
    let n = a.rows();
    let mut ranks = vec![n];
    let mut power = Matrix::identity(n);
    for _ in 0..n {
        power = &power * a;
        ranks.push(power.rank());
    }
    if ranks[n] != 0 {
        return Err(Error::NotNilpotent);
    }
    let conj: Vec<usize> = ranks
        .windows(2)
        .map(|w| w[0] - w[1])
        .filter(|&x| x > 0)
        .collect();
    Ok(Partition::new(conj)?.conjugate())
}

pub fn gamma_of(p: &JordanProfile) -> GammaMap {
    let mut counts = BTreeMap::new();
    for l in &p.types {
        *counts.entry(l.clone()).or_insert(0) += 1;
    }
    GammaMap { m: p.m, counts }
}

/// The component group `C(x) ≅ Σ_{γ(x)}`.
pub fn component_group(p: &JordanProfile) -> GammaMap {
    gamma_of(p)
}

/// `Σ_i (m² − Σ_j (λ_i')_j²)`.
pub fn orbit_dim(p: &JordanProfile) -> usize {
    p.types
        .iter()
        .map(|l| p.m * p.m - l.conjugate().parts().iter().map(|c| c * c).sum::<usize>())
        .sum()
}

/// `Σ_i n(λ_i)`: dimension of each of the `d!` components of the Springer fiber.
pub fn fiber_dim(p: &JordanProfile) -> usize {
    p.types.iter().map(|l| l.n_stat()).sum()
}

/// Checks `fiber_dim = d·m(m−1)/2 − orbit_dim/2`.
pub fn check_dimension_property(p: &JordanProfile) -> Result<bool> {
    let od = orbit_dim(p);
    if !od.is_multiple_of(2) {
        return Err(Error::Invariant(format!(
            "odd orbit dimension {od} for {p}"
        )));
    }
    let top = p.d() * p.m * (p.m - 1) / 2;
    Ok(top >= od / 2 && fiber_dim(p) == top - od / 2)
}

fn profile_count(m: usize, d: usize) -> Option<u128> {
    (partitions_of(m).len() as u128).checked_pow(d as u32)
}

fn check_profile_bound(m: usize, d: usize, bound: usize) -> Result<()> {
    match profile_count(m, d) {
        Some(n) if n <= bound as u128 => Ok(()),
        other => Err(Error::BoundExceeded {
            what: format!("Jordan profiles for (m,d)=({m},{d})"),
            needed: other.map_or("> 2^128".to_string(), |n| n.to_string()),
            bound,
        }),
    }
}

/// All `p(m)^d` profiles, lexicographic in the canonical partition order.
pub fn profiles(m: usize, d: usize) -> Result<Vec<JordanProfile>> {
    check_profile_bound(m, d, wreath::bound_from_env())?;
    let parts = partitions_of(m);
    let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
    for _ in 0..d {
        acc = acc
            .into_iter()
            .flat_map(|p| {
                parts.iter().map(move |x| {
                    let mut v = p.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    Ok(acc
        .into_iter()
        .map(|types| JordanProfile { m, types })
        .collect())
}

/// One label per orbit, in increasing order.
pub fn orbit_labels(m: usize, d: usize) -> Result<Vec<OrbitLabel>> {
    let mut labels: Vec<OrbitLabel> = profiles(m, d)?.iter().map(orbit_label).collect();
    labels.sort();
    labels.dedup();
    Ok(labels)
}

/// The index set `I^S`: pairs (orbit, irreducible of `C(x)`), the latter
/// encoded as a Clifford label with `|𝝀| = γ(x)`.
pub fn enumerate_is(m: usize, d: usize) -> Result<Vec<SpringerLabel>> {
    let mut out = Vec::new();
    for orbit in orbit_labels(m, d)? {
        for psi in crate::rep::labels_with_gamma(&orbit.gamma()) {
            out.push(SpringerLabel::new(orbit.clone(), psi)?);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OrbitRow {
    pub label: Vec<[String; 1]>,
    pub gamma: GammaMap,
    pub component_group_order: usize,
    pub orbit_dim: usize,
    pub fiber_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitReport {
    pub m: usize,
    pub d: usize,
    pub orbits: Vec<OrbitRow>,
}

impl OrbitReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn orbit_report(m: usize, d: usize) -> Result<OrbitReport> {
    let orbits = orbit_labels(m, d)?
        .into_iter()
        .map(|o| OrbitRow {
            label: o.canonical.types.iter().map(|p| [p.compact()]).collect(),
            gamma: o.gamma(),
            component_group_order: o.gamma().order(),
            orbit_dim: orbit_dim(&o.canonical),
            fiber_dim: fiber_dim(&o.canonical),
        })
        .collect();
    Ok(OrbitReport { m, d, orbits })
}
