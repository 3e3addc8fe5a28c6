use std::fmt::Write as _;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wreath_core::algebra::{self, CheckStatus};
use wreath_core::orbit;
use wreath_core::perm::{factorial, Permutation};
use wreath_core::springer;
use wreath_core::wreath::{self, bruhat_leq_wreath, GroupContext, WreathElement};
use wreath_core::{bruhat, Error};

mod tables;

#[derive(Parser)]
#[command(
    name = "wreath",
    version,
    about = "Wreath products Σ_m ≀ Σ_d: Bruhat order, convolution relations, Springer correspondence"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hasse diagram of the Bruhat order on Σ_m ≀ Σ_d
    Hasse {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = HasseFormat::Json)]
        format: HasseFormat,
    },
    /// Compare two elements, given as words like "s1^1 t1"
    Order {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Run verification suites and print a JSON report
    Verify {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = Scope::All)]
        scope: Scope,
    },
    /// Emit tables of irreducibles, correspondences, orbits or characters
    Tables {
        #[arg(long, value_enum)]
        kind: tables::Kind,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, value_enum, default_value_t = tables::Format::Md)]
        format: tables::Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum HasseFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Scope {
    Algebra,
    Springer,
    Dimensions,
    All,
}

/// Outcome of a command: data on stdout, then an exit code.
enum Failure {
    /// Mathematical check failed.
    Check(String),
    /// Bad input or bound exceeded.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BoundExceeded { .. }
            | Error::Parse(_)
            | Error::IndexOutOfRange(_)
            | Error::InvalidLabel(_)
            | Error::InvalidPartition(_)
            | Error::DegreeMismatch(..)
            | Error::ContextMismatch(..) => Failure::Usage(e.to_string()),
            other => Failure::Check(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let bound = wreath::bound_from_env();
    let result = match cli.command {
        Command::Hasse { m, d, format } => hasse(m, d, format, bound),
        Command::Order { m, d, x, y } => order(m, d, &x, &y),
        Command::Verify { m, d, scope } => verify(m, d, scope, bound),
        Command::Tables { kind, m, d, format } => tables::run(kind, m, d, format, bound),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Writes to stdout, treating a closed pipe as success.
fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes()).and_then(|_| out.flush());
}

fn hasse(m: usize, d: usize, format: HasseFormat, bound: usize) -> Result<bool, Failure> {
    let ctx = GroupContext::with_bound(m, d, bound)?;
    let h = ctx.hasse();
    match format {
        HasseFormat::Json => emit(&format!("{}\n", h.to_json())),
        HasseFormat::Dot => emit(&h.to_dot()),
    }
    Ok(true)
}

fn order(m: usize, d: usize, x: &str, y: &str) -> Result<bool, Failure> {
    if m == 0 || d == 0 {
        return Err(Failure::Usage("m and d must be positive".into()));
    }
    let a = WreathElement::parse(m, d, x)?;
    let b = WreathElement::parse(m, d, y)?;
    let mut out = String::new();
    writeln!(out, "x = {a} = {a:?}").expect("string write");
    writeln!(out, "y = {b} = {b:?}").expect("string write");
    let tops_equal = a.top() == b.top();
    writeln!(
        out,
        "top: {} vs {} -> {}",
        a.top(),
        b.top(),
        if tops_equal { "equal" } else { "different" }
    )
    .expect("string write");
    for (i, (u, w)) in a.factors().iter().zip(b.factors()).enumerate() {
        let le = bruhat::bruhat_leq(u, w)?;
        writeln!(out, "factor {}: {} <= {} -> {le}", i + 1, u, w).expect("string write");
    }
    let verdict = bruhat_leq_wreath(&a, &b)?;
    writeln!(out, "x <= y: {verdict}").expect("string write");
    emit(&out);
    Ok(true)
}

fn status(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

/// `d! · (Σ_{w∈Σ_m} q^{ℓ(w)})^d` as a coefficient list.
fn expected_cell_polynomial(m: usize, d: usize) -> Vec<usize> {
    let mut one = Vec::new();
    for w in Permutation::all(m) {
        let l = w.length();
        if one.len() <= l {
            one.resize(l + 1, 0);
        }
        one[l] += 1;
    }
    let mut acc = vec![factorial(d)];
    for _ in 0..d {
        let mut next = vec![0; acc.len() + one.len() - 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in one.iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    acc
}

fn verify(m: usize, d: usize, scope: Scope, bound: usize) -> Result<bool, Failure> {
    if m == 0 || d == 0 {
        return Err(Failure::Usage("m and d must be positive".into()));
    }
    // Jordan profiles are enumerated under their own bound; the group is only
    // needed for the other scopes and for cell statistics.
    let ctx = match scope {
        Scope::Dimensions => GroupContext::with_bound(m, d, bound).ok(),
        _ => Some(GroupContext::with_bound(m, d, bound)?),
    };
    let mut report = json!({ "m": m, "d": d });
    let mut passed = true;

    if let (Scope::Algebra | Scope::All, Some(ctx)) = (scope, &ctx) {
        let rel = match algebra::verify_relations_with_bound(m, d, bound) {
            Ok(r) => r,
            Err(Error::UndefinedProduct(msg)) => return Err(Failure::Check(msg)),
            Err(e) => return Err(e.into()),
        };
        passed &= rel.checks.iter().all(|c| c.status == CheckStatus::Pass);
        let rank = algebra::y_bar_span_rank(ctx);
        let census = json!({
            "basisSize": algebra::basis(ctx).len(),
            "spanRank": rank,
            "status": status(rank == ctx.order()),
        });
        passed &= rank == ctx.order();
        report["algebra"] = json!({ "checks": rel.checks, "census": census });
    }

    if matches!(scope, Scope::Springer | Scope::All) {
        let r = springer::verify_springer_with_bound(m, d, bound)?;
        passed &= r.all_pass();
        report["springer"] = serde_json::to_value(&r).expect("report serializes");
    }

    if matches!(scope, Scope::Dimensions | Scope::All) {
        let mut failures: Vec<String> = Vec::new();
        let profiles = orbit::profiles(m, d)?;
        for p in &profiles {
            if !orbit::check_dimension_property(p)? {
                failures.push(p.to_string());
            }
        }
        passed &= failures.is_empty();
        report["dimensions"] = json!({
            "profiles": profiles.len(),
            "failures": failures,
            "status": status(failures.is_empty()),
            "cells": Value::Null,
        });
        if let Some(ctx) = &ctx {
            let cells = ctx.cell_statistics();
            let expected = expected_cell_polynomial(m, d);
            let cells_ok = cells.cells == ctx.order() && cells.polynomial() == expected;
            passed &= cells_ok;
            report["dimensions"]["cells"] = json!({
                "count": cells.cells,
                "polynomial": cells.polynomial(),
                "expected": expected,
                "status": status(cells_ok),
            });
        }
    }

    report["passed"] = Value::Bool(passed);
    emit(&format!(
        "{}\n",
        serde_json::to_string_pretty(&report).expect("report serializes")
    ));
    Ok(passed)
}
