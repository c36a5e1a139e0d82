//! Command implementations behind the `qkneser` binary.
//!
//! Every command returns an [`Outcome`] instead of printing, so the binary
//! stays a thin wrapper and the commands can be tested in-process.
//!
//! Exit codes: `0` success or certified, `1` verification failure, `2` usage
//! or resource error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::field::prime_power;
use crate::identities::{GridBounds, IdentityChecker, IdentityId, IdentityReport, GRID_LIMIT};
use crate::laurent::LaurentPoly;
use crate::oracle::{self, DEFAULT_VERTEX_BUDGET};
use crate::qbinom::{gauss_eval_product, GaussTable};
use crate::spectrum::SpectrumCalc;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum EigenForm {
    #[default]
    Simple,
    Delsarte,
    Both,
}

#[derive(Debug, Parser)]
#[command(
    name = "qkneser",
    version,
    about = "Gaussian binomials and exact q-Kneser graph spectra"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gaussian binomial coefficient [n choose i]_q
    #[command(allow_negative_numbers = true)]
    Gauss {
        n: i64,
        i: i64,
        /// Evaluate at this integer q >= 2 instead of printing a polynomial
        #[arg(long)]
        q: Option<i64>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Eigenvalues and multiplicities of qK(v, k)
    Eigenvalues {
        v: u32,
        k: u32,
        /// Evaluate at this prime power
        #[arg(long)]
        q: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        form: EigenForm,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Verification suites
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Count k-subspaces of GF(q)^v by enumeration and by formula
    CountSubspaces {
        v: u32,
        k: u32,
        q: u64,
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyTarget {
    /// Check every q-binomial identity over a parameter grid
    Identities {
        /// Bound on every grid parameter (n runs over -max..=max)
        #[arg(long, default_value_t = 10)]
        max: i64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        /// Add this offset to each right-hand monomial exponent (negative control)
        #[arg(long, hide = true, default_value_t = 0, allow_negative_numbers = true)]
        perturb_exponent: i64,
    },
    /// Build qK(v, k) over GF(q) and certify its spectrum exactly
    Spectrum {
        v: u32,
        k: u32,
        q: u64,
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        budget: u64,
        /// Write vertices.txt, adjacency.txt and certification.json here
        #[arg(long)]
        dump: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
}

/// Captured result of one command.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {}\n", msg.into()),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(err) => {
            let rendered = err.render().to_string();
            if err.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome::ok(rendered)
            }
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gauss { n, i, q, format } => cmd_gauss(n, i, q, format),
        Command::Eigenvalues {
            v,
            k,
            q,
            form,
            format,
        } => cmd_eigenvalues(v, k, q, form, format),
        Command::Verify { target } => match target {
            VerifyTarget::Identities {
                max,
                format,
                perturb_exponent,
            } => cmd_verify_identities(max, format, perturb_exponent),
            VerifyTarget::Spectrum {
                v,
                k,
                q,
                budget,
                dump,
                format,
            } => cmd_verify_spectrum(v, k, q, budget, dump, format),
        },
        Command::CountSubspaces {
            v,
            k,
            q,
            budget,
            format,
        } => cmd_count_subspaces(v, k, q, budget, format),
    }
}

fn rational_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn json_line(value: &impl Serialize) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serializable");
    out.push('\n');
    out
}

/// Left-aligned columns separated by two spaces.
fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let mut text = String::new();
        for (idx, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if idx > 0 {
                text.push_str("  ");
            }
            let _ = write!(text, "{cell:<w$}");
        }
        out.push_str(text.trim_end());
        out.push('\n');
    };
    line(header.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

fn render_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn cmd_gauss(n: i64, i: i64, q: Option<i64>, format: OutputFormat) -> Outcome {
    if i < 0 {
        return Outcome::usage(Error::NegativeIndex(i).to_string());
    }
    let value = match q {
        Some(q0) => match gauss_eval_product(n, i, q0) {
            Ok(r) => rational_string(&r),
            Err(e) => return Outcome::usage(e.to_string()),
        },
        None => GaussTable::new().get(n, i as u32).to_string(),
    };
    let stdout = match format {
        OutputFormat::Table => format!("{value}\n"),
        OutputFormat::Csv => render_csv(
            &["n", "i", "q", "value"],
            &[vec![
                n.to_string(),
                i.to_string(),
                q.map(|x| x.to_string()).unwrap_or_default(),
                value,
            ]],
        ),
        OutputFormat::Json => json_line(&json!({ "n": n, "i": i, "q": q, "value": value })),
    };
    Outcome::ok(stdout)
}

fn int_json(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(small) => json!(small),
        Err(_) => json!(x.to_string()),
    }
}

pub fn cmd_eigenvalues(
    v: u32,
    k: u32,
    q: Option<u64>,
    form: EigenForm,
    format: OutputFormat,
) -> Outcome {
    if v < 2 * k {
        return Outcome::usage(if k <= v {
            Error::NullGraph { v, k }.to_string()
        } else {
            Error::DimensionTooLarge { v, k }.to_string()
        });
    }
    if k == 0 {
        return Outcome::usage(Error::ZeroDimension(k).to_string());
    }
    if let Some(q0) = q {
        if prime_power(q0).is_none() {
            return Outcome::usage(Error::NotPrimePower(q0).to_string());
        }
    }
    let table = GaussTable::new();
    let calc = SpectrumCalc::new(&table);
    let mut rows: Vec<(u32, LaurentPoly, LaurentPoly, LaurentPoly)> = Vec::new();
    for j in 0..=k {
        let simple = calc.simple_eigenvalue(v, k, j);
        let delsarte = calc.delsarte_eigenvalue(v, k, j);
        let mult = calc.multiplicity(v, k, j);
        match (simple, delsarte, mult) {
            (Ok(s), Ok(d), Ok(m)) => rows.push((j, s, d, m)),
            (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => {
                return Outcome::usage(e.to_string())
            }
        }
    }
    let disagree = form == EigenForm::Both && rows.iter().any(|(_, s, d, _)| s != d);

    // Render each polynomial either symbolically or at q.
    let q_big = q.map(BigInt::from);
    let cell = |p: &LaurentPoly| -> (String, Value) {
        match &q_big {
            Some(q0) => {
                let x = p.eval_big(q0).to_integer();
                (x.to_string(), int_json(&x))
            }
            None => (p.to_string(), json!(p.to_string())),
        }
    };

    let mut header = vec!["j", "eigenvalue"];
    if form == EigenForm::Both {
        header.push("delsarte");
    }
    header.push("multiplicity");

    let mut text_rows = Vec::new();
    let mut json_entries = Vec::new();
    for (j, s, d, m) in &rows {
        let primary = if form == EigenForm::Delsarte { d } else { s };
        let (ev_text, ev_json) = cell(primary);
        let (m_text, m_json) = cell(m);
        let mut row = vec![j.to_string(), ev_text];
        let mut entry = serde_json::Map::new();
        entry.insert("j".into(), json!(j));
        entry.insert("eigenvalue".into(), ev_json);
        if form == EigenForm::Both {
            let (d_text, d_json) = cell(d);
            row.push(d_text);
            entry.insert("delsarte".into(), d_json);
        }
        row.push(m_text);
        entry.insert("multiplicity".into(), m_json);
        text_rows.push(row);
        json_entries.push(Value::Object(entry));
    }

    let stdout = match format {
        OutputFormat::Table => render_table(&header, &text_rows),
        OutputFormat::Csv => render_csv(&header, &text_rows),
        OutputFormat::Json => json_line(&json!({
            "v": v,
            "k": k,
            "q": q,
            "entries": json_entries,
        })),
    };
    let mut out = Outcome::ok(stdout);
    if disagree {
        out.code = EXIT_FAILED;
        out.stderr = "error: eigenvalue forms disagree\n".into();
    }
    out
}

pub fn cmd_verify_identities(max: i64, format: OutputFormat, perturb_exponent: i64) -> Outcome {
    if max < 1 {
        return Outcome::usage(format!("--max must be at least 1, got {max}"));
    }
    let bounds = match GridBounds::uniform(max) {
        Ok(b) => b,
        Err(e) => return Outcome::usage(format!("{e} (limit {GRID_LIMIT})")),
    };
    let checker = IdentityChecker::with_rhs_exponent_offset(perturb_exponent);
    let reports: Vec<IdentityReport> = IdentityId::ALL
        .iter()
        .map(|id| checker.run_grid(*id, &bounds))
        .collect();
    let passed = reports.iter().all(IdentityReport::passed);

    let stdout = match format {
        OutputFormat::Json => json_line(&json!({
            "bounds": bounds,
            "passed": passed,
            "reports": reports,
        })),
        OutputFormat::Table | OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.identity.to_string(),
                        r.instances.to_string(),
                        r.failures.len().to_string(),
                        if r.passed() { "ok" } else { "FAIL" }.to_string(),
                    ]
                })
                .collect();
            let header = ["identity", "instances", "failures", "status"];
            if format == OutputFormat::Csv {
                render_csv(&header, &rows)
            } else {
                let mut text = render_table(&header, &rows);
                for r in reports.iter().filter(|r| !r.passed()) {
                    let f = &r.failures[0];
                    let params: Vec<String> = r
                        .identity
                        .param_names()
                        .iter()
                        .zip(&f.params)
                        .map(|(name, x)| format!("{name}={x}"))
                        .collect();
                    let _ = writeln!(
                        text,
                        "counterexample {} ({}): lhs = {}, rhs = {}",
                        r.identity,
                        params.join(", "),
                        f.lhs,
                        f.rhs
                    );
                }
                text
            }
        }
    };
    let mut out = Outcome::ok(stdout);
    if !passed {
        out.code = EXIT_FAILED;
    }
    out
}

fn check_oracle_args(v: u32, k: u32, q: u64) -> Result<(), Outcome> {
    if prime_power(q).is_none() {
        return Err(Outcome::usage(Error::NotPrimePower(q).to_string()));
    }
    if k > v {
        return Err(Outcome::usage(Error::DimensionTooLarge { v, k }.to_string()));
    }
    Ok(())
}

pub fn cmd_verify_spectrum(
    v: u32,
    k: u32,
    q: u64,
    budget: u64,
    dump: Option<PathBuf>,
    format: OutputFormat,
) -> Outcome {
    if let Err(out) = check_oracle_args(v, k, q) {
        return out;
    }
    if v < 2 * k {
        return Outcome::usage(Error::NullGraph { v, k }.to_string());
    }
    if k == 0 {
        return Outcome::usage(Error::ZeroDimension(k).to_string());
    }
    let predicted = match crate::spectrum::evaluated_spectrum(v, k, q) {
        Ok(p) => p,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let run = match oracle::certify_qkneser(v, k, q, &predicted, budget) {
        Ok(run) => run,
        Err(e @ Error::BudgetExceeded { .. }) => return Outcome::usage(e.to_string()),
        Err(e) => return Outcome::usage(e.to_string()),
    };
    if let Some(dir) = &dump {
        if let Err(e) = run.dump(dir) {
            return Outcome::usage(format!("cannot write dump to {}: {e}", dir.display()));
        }
    }
    let res = &run.result;
    let stdout = match format {
        OutputFormat::Json => json_line(res),
        OutputFormat::Table | OutputFormat::Csv => {
            let mut text = String::new();
            let _ = writeln!(text, "qK({v},{k}) over GF({q})");
            let _ = writeln!(text, "vertices: {}", res.vertex_count);
            match res.degree {
                Some(d) => {
                    let _ = writeln!(text, "degree: {d}");
                }
                None => text.push_str("degree: irregular\n"),
            }
            let moments: Vec<String> = res.moments.iter().map(ToString::to_string).collect();
            let _ = writeln!(text, "moments tr(A^m), m=0..{k}: {}", moments.join(" "));
            let rows: Vec<Vec<String>> = predicted
                .entries
                .iter()
                .enumerate()
                .map(|(idx, e)| {
                    let certified = res
                        .multiplicities
                        .as_ref()
                        .map(|m| m[idx].to_string())
                        .unwrap_or_else(|| "-".into());
                    vec![
                        e.j.to_string(),
                        e.eigenvalue.to_string(),
                        e.multiplicity.to_string(),
                        certified,
                    ]
                })
                .collect();
            let header = ["j", "eigenvalue", "predicted", "certified"];
            if format == OutputFormat::Csv {
                text = render_csv(&header, &rows);
            } else {
                text.push_str(&render_table(&header, &rows));
                let _ = writeln!(
                    text,
                    "annihilation: {}",
                    if res.annihilation_ok { "ok" } else { "FAIL" }
                );
                let _ = writeln!(text, "moments: {}", if res.moments_ok { "ok" } else { "FAIL" });
                text.push_str(if res.certified() {
                    "certified\n"
                } else {
                    "NOT certified\n"
                });
            }
            text
        }
    };
    let mut out = Outcome::ok(stdout);
    if !res.certified() {
        out.code = EXIT_FAILED;
    }
    out
}

pub fn cmd_count_subspaces(v: u32, k: u32, q: u64, budget: u64, format: OutputFormat) -> Outcome {
    if let Err(out) = check_oracle_args(v, k, q) {
        return out;
    }
    let field = match crate::field::FieldCtx::for_order(q) {
        Ok(f) => f,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let enumerated = match oracle::enumerate_subspaces(&field, v as usize, k as usize, budget) {
        Ok(list) => list.len(),
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let predicted = GaussTable::new()
        .get(i64::from(v), k)
        .eval_big(&BigInt::from(q))
        .to_integer();
    let agree = BigInt::from(enumerated) == predicted;
    let stdout = match format {
        OutputFormat::Table => format!("{enumerated} = {predicted}\n"),
        OutputFormat::Csv => render_csv(
            &["v", "k", "q", "enumerated", "predicted"],
            &[vec![
                v.to_string(),
                k.to_string(),
                q.to_string(),
                enumerated.to_string(),
                predicted.to_string(),
            ]],
        ),
        OutputFormat::Json => json_line(&json!({
            "v": v,
            "k": k,
            "q": q,
            "enumerated": enumerated,
            "predicted": int_json(&predicted),
        })),
    };
    let mut out = Outcome::ok(stdout);
    if !agree {
        out.code = EXIT_FAILED;
        out.stderr = "error: enumeration disagrees with [v choose k]_q\n".into();
    }
    out
}
