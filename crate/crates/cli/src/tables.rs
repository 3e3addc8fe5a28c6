use clap::ValueEnum;
use serde_json::json;

use wreath_core::orbit;
use wreath_core::perm::factorial;
use wreath_core::rep::{enumerate_ic, CliffordLabel};
use wreath_core::springer::{self, psi};
use wreath_core::wreath::{self, GroupContext};

use crate::Failure;

#[derive(Clone, Copy, ValueEnum)]
pub enum Kind {
    Irreps,
    Springer,
    #[value(name = "typeB")]
    TypeB,
    #[value(name = "typeD")]
    TypeD,
    Orbits,
    Chars,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Md,
    Csv,
    Json,
}

/// Header plus string rows, rendered in any of the output formats.
struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl Table {
    fn render(&self, format: Format, json: impl FnOnce() -> String) -> String {
        match format {
            Format::Json => json(),
            Format::Csv => {
                let mut out = self.header.join(",");
                out.push('\n');
                for r in &self.rows {
                    let fields: Vec<String> = r.iter().map(|f| csv_field(f)).collect();
                    out.push_str(&fields.join(","));
                    out.push('\n');
                }
                out
            }
            Format::Md => {
                let mut out = format!("| {} |\n|", self.header.join(" | "));
                out.push_str(&"---|".repeat(self.header.len()));
                out.push('\n');
                for r in &self.rows {
                    out.push_str(&format!("| {} |\n", r.join(" | ")));
                }
                out
            }
        }
    }
}

fn require(name: &str, v: Option<usize>) -> Result<usize, Failure> {
    match v {
        Some(0) => Err(Failure::Usage(format!("--{name} must be positive"))),
        Some(x) => Ok(x),
        None => Err(Failure::Usage(format!(
            "--{name} is required for this table"
        ))),
    }
}

/// `dim L^𝝀 = d!/∏γ_ν! · ∏ (dim S^ν)^{γ_ν} · dim S^{𝝀(ν)}`.
fn clifford_dim(l: &CliffordLabel) -> usize {
    let mut dim = factorial(l.d());
    for (nu, shape) in l.entries() {
        dim /= factorial(shape.size());
        dim *= nu.hook_dim().pow(shape.size() as u32) * shape.hook_dim();
    }
    dim
}

pub fn run(
    kind: Kind,
    m: Option<usize>,
    d: Option<usize>,
    format: Format,
    bound: usize,
) -> Result<bool, Failure> {
    let out = match kind {
        Kind::TypeB => {
            let rows = springer::type_b_table(require("d", d)?)?;
            let table = Table {
                header: vec!["bipartition", "clifford", "springer"],
                rows: rows
                    .iter()
                    .map(|r| {
                        vec![
                            format!("({}, {})", r.bipartition[0], r.bipartition[1]),
                            r.clifford.to_string(),
                            r.springer.to_string(),
                        ]
                    })
                    .collect(),
            };
            match format {
                Format::Md => springer::type_b_markdown(&rows),
                _ => table.render(format, || {
                    pretty(serde_json::to_value(&rows).expect("table serializes"))
                }),
            }
        }
        Kind::TypeD => {
            let rows = springer::type_d_table(require("d", d)?)?;
            let table = Table {
                header: vec!["hu", "jordan", "psi"],
                rows: rows
                    .iter()
                    .map(|r| {
                        vec![
                            r.hu.to_string(),
                            format!("{}; {}", r.springer.jordan[0], r.springer.jordan[1]),
                            r.springer.psi.clone(),
                        ]
                    })
                    .collect(),
            };
            match format {
                Format::Md => springer::type_d_markdown(&rows),
                _ => table.render(format, || {
                    pretty(serde_json::to_value(&rows).expect("table serializes"))
                }),
            }
        }
        _ => {
            let (m, d) = (require("m", m)?, require("d", d)?);
            wreath::check_bound(m, d, bound)?;
            match kind {
                Kind::Irreps => irreps(m, d, format)?,
                Kind::Springer => springer_table(m, d, format)?,
                Kind::Orbits => orbits(m, d, format)?,
                Kind::Chars => {
                    let ctx = GroupContext::with_bound(m, d, bound)?;
                    let t = wreath_core::rep::character_table(&ctx)?;
                    match format {
                        Format::Md => t.to_markdown(),
                        Format::Csv => t.to_csv(),
                        Format::Json => t.to_json(),
                    }
                }
                Kind::TypeB | Kind::TypeD => unreachable!("handled above"),
            }
        }
    };
    if out.ends_with('\n') {
        crate::emit(&out);
    } else {
        crate::emit(&format!("{out}\n"));
    }
    Ok(true)
}

fn pretty(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("table serializes")
}

fn irreps(m: usize, d: usize, format: Format) -> Result<String, Failure> {
    let labels = enumerate_ic(m, d);
    let table = Table {
        header: vec!["label", "dim"],
        rows: labels
            .iter()
            .map(|l| vec![l.to_string(), clifford_dim(l).to_string()])
            .collect(),
    };
    Ok(table.render(format, || {
        let rows: Vec<_> = labels
            .iter()
            .map(|l| json!({ "label": l, "dim": clifford_dim(l) }))
            .collect();
        pretty(json!({ "m": m, "d": d, "irreducibles": rows }))
    }))
}

fn springer_table(m: usize, d: usize, format: Format) -> Result<String, Failure> {
    let labels = enumerate_ic(m, d);
    let images = labels.iter().map(psi).collect::<Result<Vec<_>, _>>()?;
    let table = Table {
        header: vec!["clifford", "springer", "dim"],
        rows: labels
            .iter()
            .zip(&images)
            .map(|(l, s)| vec![l.to_string(), s.to_string(), clifford_dim(l).to_string()])
            .collect(),
    };
    Ok(table.render(format, || {
        let rows: Vec<_> = labels
            .iter()
            .zip(&images)
            .map(|(l, s)| json!({ "clifford": l, "springer": s, "dim": clifford_dim(l) }))
            .collect();
        pretty(json!({ "m": m, "d": d, "correspondence": rows }))
    }))
}

fn orbits(m: usize, d: usize, format: Format) -> Result<String, Failure> {
    let report = orbit::orbit_report(m, d)?;
    let table = Table {
        header: vec![
            "orbit",
            "gamma",
            "componentGroupOrder",
            "orbitDim",
            "fiberDim",
        ],
        rows: report
            .orbits
            .iter()
            .map(|o| {
                let label: Vec<&str> = o.label.iter().map(|[s]| s.as_str()).collect();
                let gamma: Vec<String> = o
                    .gamma
                    .blocks()
                    .map(|(nu, k)| format!("{}:{k}", nu.compact()))
                    .collect();
                vec![
                    format!("[{}]", label.join("; ")),
                    gamma.join(" "),
                    o.component_group_order.to_string(),
                    o.orbit_dim.to_string(),
                    o.fiber_dim.to_string(),
                ]
            })
            .collect(),
    };
    Ok(table.render(format, || report.to_json()))
}
