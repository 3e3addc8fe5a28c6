//! Class functions on `Σ_m ≀ Σ_d` and character tables.

use serde::Serialize;

use super::{clifford_irrep, enumerate_ic, CliffordLabel, Representation};
use crate::error::{Error, Result};
use crate::scalar::{self, ExactScalar};
use crate::wreath::GroupContext;

/// Values on the classes of a [`GroupContext`], in its class order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    m: usize,
    d: usize,
    values: Vec<ExactScalar>,
}

impl Character {
    pub fn new(ctx: &GroupContext, values: Vec<ExactScalar>) -> Result<Self> {
        if values.len() != ctx.conjugacy_classes().len() {
            return Err(Error::DegreeMismatch(
                values.len(),
                ctx.conjugacy_classes().len(),
            ));
        }
        Ok(Character {
            m: ctx.m(),
            d: ctx.d(),
            values,
        })
    }

    pub fn values(&self) -> &[ExactScalar] {
        &self.values
    }

    /// Value at the identity; the identity class is always first.
    pub fn degree(&self) -> &ExactScalar {
        &self.values[0]
    }
}

pub fn char_of(rho: &Representation, ctx: &GroupContext) -> Result<Character> {
    let g = rho.group();
    if !g.is_full() || g.m() != ctx.m() || g.d() != ctx.d() {
        return Err(Error::ContextMismatch(g.m(), g.d(), ctx.m(), ctx.d()));
    }
    let values = ctx
        .conjugacy_classes()
        .iter()
        .map(|c| rho.trace_of(&c.representative))
        .collect::<Result<_>>()?;
    Character::new(ctx, values)
}

/// `⟨χ, ψ⟩ = (1/|G|) Σ_g χ(g) ψ(g⁻¹)`.
pub fn inner_product(ctx: &GroupContext, a: &Character, b: &Character) -> Result<ExactScalar> {
    for c in [a, b] {
        if (c.m, c.d) != (ctx.m(), ctx.d()) {
            return Err(Error::ContextMismatch(c.m, c.d, ctx.m(), ctx.d()));
        }
    }
    let mut acc = scalar::zero();
    for (i, class) in ctx.conjugacy_classes().iter().enumerate() {
        let inv = ctx
            .class_of(&class.representative.inverse())
            .ok_or_else(|| Error::Invariant("inverse outside the group".into()))?;
        acc += &a.values[i] * &b.values[inv] * scalar::int(class.size() as i64);
    }
    Ok(acc / scalar::int(ctx.order() as i64))
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassInfo {
    pub representative: String,
    pub size: usize,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub m: usize,
    pub d: usize,
    pub classes: Vec<ClassInfo>,
    pub rows: Vec<(CliffordLabel, Character)>,
}

/// Characters of all `L^𝝀`, `𝝀 ∈ I^C(m, d)`.
pub fn character_table(ctx: &GroupContext) -> Result<CharacterTable> {
    let classes = ctx
        .conjugacy_classes()
        .iter()
        .map(|c| ClassInfo {
            representative: c.representative.to_string(),
            size: c.size(),
        })
        .collect();
    let rows = enumerate_ic(ctx.m(), ctx.d())
        .into_iter()
        .map(|l| {
            let chi = char_of(&clifford_irrep(&l)?, ctx)?;
            Ok((l, chi))
        })
        .collect::<Result<_>>()?;
    Ok(CharacterTable {
        m: ctx.m(),
        d: ctx.d(),
        classes,
        rows,
    })
}

#[derive(Serialize)]
struct JsonRow<'a> {
    label: &'a CliffordLabel,
    values: Vec<String>,
}

#[derive(Serialize)]
struct JsonTable<'a> {
    m: usize,
    d: usize,
    classes: &'a [ClassInfo],
    characters: Vec<JsonRow<'a>>,
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl CharacterTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("label");
        for c in &self.classes {
            out.push(',');
            out.push_str(&csv_field(&c.representative));
        }
        out.push('\n');
        for (l, chi) in &self.rows {
            out.push_str(&csv_field(&l.to_string()));
            for v in chi.values() {
                out.push(',');
                out.push_str(&scalar::to_string(v));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let t = JsonTable {
            m: self.m,
            d: self.d,
            classes: &self.classes,
            characters: self
                .rows
                .iter()
                .map(|(l, chi)| JsonRow {
                    label: l,
                    values: chi.values().iter().map(scalar::to_string).collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&t).expect("table serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from("| label |");
        for c in &self.classes {
            out.push_str(&format!(" {} |", c.representative));
        }
        out.push_str("\n|---|");
        out.push_str(&"---|".repeat(self.classes.len()));
        out.push('\n');
        for (l, chi) in &self.rows {
            out.push_str(&format!("| {l} |"));
            for v in chi.values() {
                out.push_str(&format!(" {} |", scalar::to_string(v)));
            }
            out.push('\n');
        }
        out
    }
}
