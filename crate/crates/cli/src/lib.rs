//! Command-line front end for `so3-verlinde`.
//!
//! Every command validates its arguments before any computation, writes its
//! report to stdout (or `--output`), and maps outcomes to exit codes:
//! 0 when all requested checks pass, 1 on a check or computation failure,
//! 2 on a usage error. Failures also emit a one-line JSON error record on
//! stderr.

pub mod embed;
pub mod report;
pub mod suites;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use so3_verlinde::bernoulli::{bernoulli_numbers, bernoulli_polynomial};
use so3_verlinde::certify::build_certificate;
use so3_verlinde::skein::{eval_nonseparating_curve, CyclotomicField, OddDenominator};
use so3_verlinde::verlinde::{
    decompose, dimension_from_polynomial, odd_color_polynomial, verlinde_polynomial, ColorKind,
};

use crate::suites::{Limits, Suite};

/// Environment variable naming the directory that relative `--output` paths
/// are resolved against.
pub const OUT_DIR_ENV: &str = "SO3_VERLINDE_OUT_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "so3-verlinde",
    version,
    about = "Exact SO(3) Verlinde dimensions and skein-module lower bounds"
)]
pub struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Even,
    Odd,
}

impl From<Kind> for ColorKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Even => ColorKind::Even,
            Kind::Odd => ColorKind::Odd,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension of the genus-g space with one point of color m at level p.
    Dim {
        #[arg(long)]
        genus: u32,
        #[arg(long = "p")]
        p: u64,
        #[arg(long)]
        color: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The polynomial D_g^(2c) in (p, c), or in (p, s) for odd colors.
    Poly {
        #[arg(long)]
        genus: u32,
        /// Substitute c = (p-1)/2 - s.
        #[arg(long)]
        odd: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Split D_g into p^j-coefficients phi_j(c) (or phi~_j(s)).
    Decompose {
        #[arg(long)]
        genus: u32,
        #[arg(long, value_enum, default_value = "even")]
        kind: Kind,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Bernoulli numbers (or polynomials) with index up to --max.
    Bernoulli {
        #[arg(long)]
        max: usize,
        #[arg(long)]
        polynomials: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Exact invariant of Σ_g × S¹ containing a non-separating curve of color m.
    EvalCurve {
        #[arg(long)]
        genus: u32,
        #[arg(long = "p")]
        p: u64,
        #[arg(long)]
        color: u64,
        /// Also print the complex value at A = exp(iπk/p).
        #[arg(long)]
        embed: bool,
        /// k in A = exp(iπk/p); must be coprime to 2p.
        #[arg(long, default_value_t = 1)]
        root: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run verification batteries.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        max_genus: u32,
        #[arg(long, default_value_t = 13)]
        max_p: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Lower-bound certificate for dim K(Σ_g × S¹).
    Certify {
        #[arg(long)]
        genus: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// CSV of dimensions over ranges of genus, level and color.
    Table {
        #[arg(long, default_value_t = 1)]
        genus_min: u32,
        #[arg(long, default_value_t = 3)]
        genus_max: u32,
        #[arg(long, default_value_t = 3)]
        p_min: u64,
        #[arg(long, default_value_t = 11)]
        p_max: u64,
    },
}

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments; exit status 2.
    Usage(String),
    /// A failed check or computation; exit status 1.
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }

    /// Single-line JSON record for stderr.
    pub fn record(&self) -> String {
        let (kind, message) = match self {
            CliError::Usage(m) => ("usage", m),
            CliError::Failure(m) => ("failure", m),
        };
        json!({ "error": { "kind": kind, "message": message, "exit_code": self.exit_code() } }).to_string()
    }
}

/// Rendered report plus whether every check it covers passed.
#[derive(Debug)]
pub struct Emitted {
    pub body: String,
    pub passed: bool,
}

impl Emitted {
    fn ok(body: String) -> Self {
        Emitted { body, passed: true }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn failure(e: impl std::fmt::Display) -> CliError {
    CliError::Failure(e.to_string())
}

fn need_genus(g: u32) -> Result<(), CliError> {
    if g < 1 {
        return Err(usage(format!("genus must be at least 1, got {g}")));
    }
    Ok(())
}

fn need_level(p: u64) -> Result<(), CliError> {
    if p < 3 || p.is_multiple_of(2) {
        return Err(usage(format!("level p must be odd and at least 3, got {p}")));
    }
    Ok(())
}

fn need_color(p: u64, m: u64) -> Result<(), CliError> {
    if m > p - 2 {
        return Err(usage(format!("color must lie in 0..={} for p = {p}, got {m}", p - 2)));
    }
    Ok(())
}

fn need_format(format: Format, allowed: &[Format]) -> Result<(), CliError> {
    if !allowed.contains(&format) {
        return Err(usage(
            format!("format {format:?} is not available for this command").to_lowercase(),
        ));
    }
    Ok(())
}

/// Check every argument of `command` without computing anything.
pub fn validate(command: &Command) -> Result<(), CliError> {
    use Format::*;
    match *command {
        Command::Dim {
            genus,
            p,
            color,
            format,
        }
        | Command::EvalCurve {
            genus,
            p,
            color,
            format,
            ..
        } => {
            need_genus(genus)?;
            need_level(p)?;
            need_color(p, color)?;
            need_format(format, &[Json, Text])?;
            if let Command::EvalCurve { root, .. } = *command {
                if !embed::admissible_root(p, root) {
                    return Err(usage(format!(
                        "root {root} is not coprime to 2p = {} in 1..{}",
                        2 * p,
                        2 * p
                    )));
                }
            }
        }
        Command::Poly { genus, format, .. } => {
            need_genus(genus)?;
            need_format(format, &[Json, Text])?;
        }
        Command::Decompose { genus, .. } | Command::Certify { genus, .. } => need_genus(genus)?,
        Command::Bernoulli { .. } => {}
        Command::Verify {
            max_genus,
            max_p,
            format,
            ..
        } => {
            need_genus(max_genus)?;
            need_level(max_p)?;
            need_format(format, &[Json, Text])?;
        }
        Command::Table {
            genus_min,
            genus_max,
            p_min,
            p_max,
        } => {
            need_genus(genus_min)?;
            if genus_max < genus_min || p_max < p_min {
                return Err(usage("empty range"));
            }
            if p_max < 3 {
                return Err(usage("no odd level p >= 3 in range"));
            }
        }
    }
    Ok(())
}

/// Validate, then compute the report for `command`.
pub fn run(command: &Command) -> Result<Emitted, CliError> {
    validate(command)?;
    match *command {
        Command::Dim {
            genus,
            p,
            color,
            format,
        } => {
            let d = dimension_from_polynomial(&verlinde_polynomial(genus), p, color).map_err(failure)?;
            Ok(Emitted::ok(match format {
                Format::Json => report::to_json_text(&json!({
                    "genus": genus, "p": p, "color": color, "dimension": report::big(&d),
                })),
                _ => format!("{d}\n"),
            }))
        }
        Command::Poly { genus, odd, format } => {
            let poly = if odd {
                odd_color_polynomial(genus)
            } else {
                verlinde_polynomial(genus)
            };
            Ok(Emitted::ok(match format {
                Format::Json => {
                    let mut v = json!({ "genus": genus, "kind": if odd { "odd" } else { "even" } });
                    merge(&mut v, report::bivariate(&poly));
                    report::to_json_text(&v)
                }
                _ => format!("{poly}\n"),
            }))
        }
        Command::Decompose { genus, kind, format } => {
            let d = decompose(genus, kind.into()).map_err(failure)?;
            let label = match kind {
                Kind::Even => "phi",
                Kind::Odd => "phi~",
            };
            Ok(Emitted::ok(match format {
                Format::Json => {
                    let parts: Vec<Value> = d
                        .parts()
                        .iter()
                        .map(|(j, f)| {
                            let mut v = json!({ "j": j, "degree": f.degree().to_string() });
                            merge(&mut v, report::univariate(f));
                            v
                        })
                        .collect();
                    report::to_json_text(
                        &json!({ "genus": genus, "kind": format!("{kind:?}").to_lowercase(), "parts": parts }),
                    )
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(["j", "degree", "polynomial"]).map_err(failure)?;
                    for (j, f) in d.parts() {
                        w.write_record([j.to_string(), f.degree().to_string(), f.to_string()])
                            .map_err(failure)?;
                    }
                    String::from_utf8(w.into_inner().map_err(failure)?).map_err(failure)?
                }
                Format::Text => d
                    .parts()
                    .iter()
                    .map(|(j, f)| format!("{label}_{j}\tdeg {}\t{f}\n", f.degree()))
                    .collect(),
            }))
        }
        Command::Bernoulli {
            max,
            polynomials,
            format,
        } => Ok(Emitted::ok(bernoulli_report(max, polynomials, format)?)),
        Command::EvalCurve {
            genus,
            p,
            color,
            embed,
            root,
            format,
        } => {
            let field = CyclotomicField::new(p).map_err(failure)?;
            let value = eval_nonseparating_curve(genus, color, &field, OddDenominator::Symmetric).map_err(failure)?;
            let coefficients: Vec<String> = value.coefficients().iter().map(|c| c.to_string()).collect();
            let numeric = embed
                .then(|| embed::embed(&value, root))
                .map(|z| z + num_complex::Complex64::new(0.0, 0.0));
            Ok(Emitted::ok(match format {
                Format::Json => {
                    let mut v = json!({
                        "genus": genus, "p": p, "color": color,
                        "basis": format!("A^0 .. A^{} modulo Phi_{}(A)", field.degree() - 1, 2 * p),
                        "coefficients": coefficients,
                    });
                    if let Some(z) = numeric {
                        v["embedding"] = json!({ "root": root, "re": z.re, "im": z.im });
                    }
                    report::to_json_text(&v)
                }
                _ => {
                    let mut s = format!("[{}]\n", coefficients.join(", "));
                    if let Some(z) = numeric {
                        s += &format!("A = exp(i*pi*{root}/{p}): {:.12} {:+.12}i\n", z.re, z.im);
                    }
                    s
                }
            }))
        }
        Command::Verify {
            suite,
            max_genus,
            max_p,
            format,
        } => {
            let checks = suites::run(suite, Limits { max_genus, max_p });
            let passed = checks.iter().all(|c| c.passed);
            let body = match format {
                Format::Json => report::to_json_text(&json!({
                    "suite": format!("{suite:?}").to_lowercase(),
                    "passed": passed,
                    "checks": checks.iter().map(|c| json!({
                        "suite": c.suite, "name": c.name, "passed": c.passed, "detail": c.detail,
                    })).collect::<Vec<_>>(),
                })),
                _ => {
                    let mut s: String = checks
                        .iter()
                        .map(|c| {
                            format!(
                                "{} {}/{}: {}\n",
                                if c.passed { "PASS" } else { "FAIL" },
                                c.suite,
                                c.name,
                                c.detail
                            )
                        })
                        .collect();
                    let failed = checks.iter().filter(|c| !c.passed).count();
                    s += &format!("{} passed, {failed} failed\n", checks.len() - failed);
                    s
                }
            };
            Ok(Emitted { body, passed })
        }
        Command::Certify { genus, format } => {
            let c = build_certificate(genus).map_err(failure)?;
            let body = match format {
                Format::Json => report::to_json_text(&report::certificate_json(&c)),
                Format::Csv => report::certificate_csv(&c),
                Format::Text => report::certificate_text(&c),
            };
            Ok(Emitted { body, passed: c.valid })
        }
        Command::Table {
            genus_min,
            genus_max,
            p_min,
            p_max,
        } => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["genus", "p", "color", "dimension"]).map_err(failure)?;
            for g in genus_min..=genus_max {
                let poly = verlinde_polynomial(g);
                for p in (p_min.max(3)..=p_max).filter(|p| p % 2 == 1) {
                    for m in 0..=p - 2 {
                        let d = dimension_from_polynomial(&poly, p, m).map_err(failure)?;
                        w.write_record([g.to_string(), p.to_string(), m.to_string(), d.to_string()])
                            .map_err(failure)?;
                    }
                }
            }
            Ok(Emitted::ok(
                String::from_utf8(w.into_inner().map_err(failure)?).map_err(failure)?,
            ))
        }
    }
}

fn bernoulli_report(max: usize, polynomials: bool, format: Format) -> Result<String, CliError> {
    let table = bernoulli_numbers(max);
    let value = |k: usize| -> (String, Value) {
        if polynomials {
            let b = bernoulli_polynomial(k);
            (b.to_string(), report::univariate(&b))
        } else {
            (table.get(k).to_string(), report::rational(table.get(k)))
        }
    };
    Ok(match format {
        Format::Json => {
            let entries: Vec<Value> = (0..=max).map(|k| json!({ "index": k, "value": value(k).1 })).collect();
            report::to_json_text(&json!({ "convention": "B_1 = -1/2", "entries": entries }))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["index", "value"]).map_err(failure)?;
            for k in 0..=max {
                w.write_record([k.to_string(), value(k).0]).map_err(failure)?;
            }
            String::from_utf8(w.into_inner().map_err(failure)?).map_err(failure)?
        }
        Format::Text => (0..=max)
            .map(|k| {
                if polynomials {
                    format!("B_{k}(x) = {}\n", value(k).0)
                } else {
                    format!("B_{k} = {}\n", value(k).0)
                }
            })
            .collect(),
    })
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}

/// Where `--output` actually goes: relative paths land under
/// `$SO3_VERLINDE_OUT_DIR` when it is set.
pub fn resolve_output(path: &std::path::Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
        _ => path.to_path_buf(),
    }
}
