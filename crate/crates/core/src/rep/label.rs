//! Clifford labels `𝝀: Π_m → Π` with `Σ_ν |𝝀(ν)| = d`.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::orbit::GammaMap;
use crate::partition::{partitions_of, Partition};

/// A multipartition indexed by partitions of `m`. Empty values are not stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliffordLabel {
    m: usize,
    assignment: BTreeMap<Partition, Partition>,
}

impl CliffordLabel {
    pub fn new(m: usize, assignment: BTreeMap<Partition, Partition>) -> Result<Self> {
        if let Some(bad) = assignment.keys().find(|l| l.size() != m) {
            return Err(Error::InvalidLabel(format!(
                "{bad} is not a partition of {m}"
            )));
        }
        let assignment: BTreeMap<_, _> = assignment
            .into_iter()
            .filter(|(_, v)| !v.is_empty())
            .collect();
        if assignment.is_empty() {
            return Err(Error::InvalidLabel("label has total size 0".into()));
        }
        Ok(CliffordLabel { m, assignment })
    }

    /// Parses `"2:1;1,1:1"`, i.e. `ν:𝝀(ν)` pairs separated by `;`.
    pub fn parse(m: usize, s: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for entry in s.split(';') {
            let (k, v) = entry
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected ν:λ in {entry:?}")))?;
            if map.insert(k.parse()?, v.parse()?).is_some() {
                return Err(Error::InvalidLabel(format!("repeated key in {s:?}")));
            }
        }
        Self::new(m, map)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> usize {
        self.assignment.values().map(|p| p.size()).sum()
    }

    /// `𝝀(ν)`, or `None` when empty.
    pub fn get(&self, nu: &Partition) -> Option<&Partition> {
        self.assignment.get(nu)
    }

    /// Nonempty entries `(ν, 𝝀(ν))` in canonical order of `ν`.
    pub fn entries(&self) -> impl Iterator<Item = (&Partition, &Partition)> {
        self.assignment.iter()
    }

    /// `γ = |𝝀|`.
    pub fn gamma(&self) -> GammaMap {
        GammaMap::new(
            self.m,
            self.assignment
                .iter()
                .map(|(k, v)| (k.clone(), v.size()))
                .collect(),
        )
        .expect("keys validated on construction")
    }
}

impl fmt::Debug for CliffordLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .assignment
            .iter()
            .map(|(k, v)| format!("{k}↦{v}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl fmt::Display for CliffordLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for CliffordLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.assignment.len()))?;
        for (k, v) in &self.assignment {
            map.serialize_entry(&k.compact(), &v.compact())?;
        }
        map.end()
    }
}

/// All labels with `|𝝀(ν)| = γ(ν)`: irreducibles of `Σ_γ`.
pub fn labels_with_gamma(gamma: &GammaMap) -> Vec<CliffordLabel> {
    let mut acc: Vec<BTreeMap<Partition, Partition>> = vec![BTreeMap::new()];
    for (nu, count) in gamma.blocks() {
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                partitions_of(count).into_iter().map(move |l| {
                    let mut p = prefix.clone();
                    p.insert(nu.clone(), l);
                    p
                })
            })
            .collect();
    }
    acc.into_iter()
        .map(|assignment| CliffordLabel {
            m: gamma.m(),
            assignment,
        })
        .collect()
}

/// Weak compositions of `total` into `parts` parts, first entry descending.
fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in weak_compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The index set `I^C(m, d)`: grouped by `γ` (more weight on earlier `ν`
/// first), then canonically within each group.
pub fn enumerate_ic(m: usize, d: usize) -> Vec<CliffordLabel> {
    let nus = partitions_of(m);
    let mut out = Vec::new();
    for comp in weak_compositions(d, nus.len()) {
        let counts = nus.iter().cloned().zip(comp).collect();
        let gamma = GammaMap::new(m, counts).expect("partitions of m");
        out.extend(labels_with_gamma(&gamma));
    }
    out
}
