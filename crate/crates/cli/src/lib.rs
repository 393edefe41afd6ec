//! The `dirpoly` command line.
//!
//! Every subcommand parses its inputs, makes one library call, and renders
//! the result. Exit codes: 0 on success, 1 when a check fails, 2 on a parse
//! or validation error.

pub mod files;
pub mod report;

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use dirpoly::{
    check_cross_rectangle_area, check_rectangle_area, from_rational_distribution, hom_count,
    hom_count_over_base, kl_divergence, measures, parse, to_distribution, BigUint, CheckStatus,
    CrossMeasures, DirPoly, Measures, DEFAULT_TOLERANCE,
};
use serde_json::Value;
use thiserror::Error;

use crate::files::{bundle_json, distribution_csv, read_bundle, read_distribution, BundleFile};
use crate::report::Report;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Library(#[from] dirpoly::Error),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("invalid bundle file: {0}")]
    BundleFile(String),
    #[error("invalid distribution file: {0}")]
    DistributionFile(String),
    #[error("{}: {inner}", path.display())]
    InFile { path: PathBuf, inner: Box<CliError> },
}

impl CliError {
    fn io(path: &Path, source: io::Error) -> Self {
        CliError::Io {
            path: path.to_owned(),
            source,
        }
    }

    fn in_file(self, path: &Path) -> Self {
        CliError::InFile {
            path: path.to_owned(),
            inner: Box::new(self),
        }
    }
}

impl From<dirpoly::ParseError> for CliError {
    fn from(e: dirpoly::ParseError) -> Self {
        CliError::Library(e.into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    /// `key=value` lines, decimals to 12 significant digits.
    #[default]
    Human,
    /// JSON with exact integers and round-trip decimals.
    Structured,
}

#[derive(Debug, Parser)]
#[command(
    name = "dirpoly",
    version,
    about = "Dirichlet polynomials, entropy and the rectangle rig"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ArithOp {
    Add,
    Mul,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// |d(n)|, the number of elements of d evaluated at an n-element set.
    Eval { expr: String, n: u64 },
    /// Area, power product, width, entropy and length.
    Measures { expr: String },
    /// Check A = L·W; exits 1 if it fails.
    Check {
        expr: String,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Cross measures of two bundle files and the check A(d,e) = L(d,e)·W(d,e).
    Cross {
        d: PathBuf,
        e: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Kullback-Leibler divergence of two bundle files.
    Kl { d: PathBuf, e: PathBuf },
    /// |Dir(d, e)| of two expressions, or with --over-base of two bundle files.
    HomCount {
        #[arg(long)]
        over_base: bool,
        d: String,
        e: String,
    },
    /// The smallest bundle realising a distribution file.
    FromDist {
        dist: PathBuf,
        /// Also write the bundle file here.
        #[arg(long)]
        bundle_out: Option<PathBuf>,
    },
    /// The empirical distribution of a bundle file.
    ToDist { bundle: PathBuf },
    /// Sum or product of two expressions.
    Arith { op: ArithOp, d: String, e: String },
}

/// What a command produced: text for stdout and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub exit_code: i32,
}

fn measures_report(m: &Measures) -> Report {
    Report::new()
        .natural("area", m.area.clone())
        .natural("powerProduct", m.power_product.clone())
        .real("width", m.width)
        .real("entropy", m.entropy)
        .real("length", m.length)
}

fn cross_report(m: &CrossMeasures) -> Report {
    Report::new()
        .real("crossEntropy", m.cross_entropy)
        .natural("crossArea", m.cross_area.clone())
        .natural("crossPowerProduct", m.cross_power_product.clone())
        .real("crossWidth", m.cross_width)
        .real("crossLength", m.cross_length)
        .real("kl", m.kl_divergence)
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Human => report.human(),
        Format::Structured => report.json(),
    }
}

fn exit_for(status: CheckStatus) -> i32 {
    match status {
        CheckStatus::Pass | CheckStatus::Degenerate => 0,
        CheckStatus::Fail => 1,
    }
}

fn poly(text: &str) -> Result<DirPoly, CliError> {
    Ok(parse(text)?)
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let ok = |stdout: String| Output {
        stdout,
        exit_code: 0,
    };
    let format = cli.format;
    Ok(match &cli.command {
        Command::Eval { expr, n } => {
            let value = poly(expr)?.eval(*n);
            ok(render(&Report::new().natural("value", value), format))
        }
        Command::Measures { expr } => {
            ok(render(&measures_report(&measures(&poly(expr)?)?), format))
        }
        Command::Check { expr, tol } => {
            let r = check_rectangle_area(&poly(expr)?, *tol)?;
            let status = if r.passed() {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            };
            let report = measures_report(&r.measures)
                .real("residual", r.float_residual)
                .real("logResidual", r.log_residual)
                .real("tolerance", r.tolerance)
                .text("status", status.to_string());
            Output {
                stdout: render(&report, format),
                exit_code: exit_for(status),
            }
        }
        Command::Cross { d, e, tol } => {
            let r = check_cross_rectangle_area(&read_bundle(d)?, &read_bundle(e)?, *tol)?;
            let mut report = cross_report(&r.measures);
            if let Some(residual) = r.residual {
                report = report.real("residual", residual);
            }
            let report = report
                .real("tolerance", r.tolerance)
                .text("status", r.status.to_string());
            Output {
                stdout: render(&report, format),
                exit_code: exit_for(r.status),
            }
        }
        Command::Kl { d, e } => {
            let kl = kl_divergence(&read_bundle(d)?, &read_bundle(e)?)?;
            ok(render(&Report::new().real("kl", kl), format))
        }
        Command::HomCount { over_base, d, e } => {
            let count: BigUint = if *over_base {
                hom_count_over_base(&read_bundle(Path::new(d))?, &read_bundle(Path::new(e))?)?
            } else {
                hom_count(&poly(d)?, &poly(e)?)
            };
            ok(render(&Report::new().natural("homCount", count), format))
        }
        Command::FromDist { dist, bundle_out } => {
            let bundle = from_rational_distribution(&read_distribution(dist)?);
            if let Some(path) = bundle_out {
                std::fs::write(path, bundle_json(&bundle) + "\n")
                    .map_err(|e| CliError::io(path, e))?;
            }
            let summary = Report::new()
                .natural("draws", bundle.num_draws())
                .text("polynomial", bundle.to_poly().to_string());
            ok(match format {
                Format::Human => {
                    let mut out = summary.human();
                    for f in bundle.fibres() {
                        out.push_str(&format!("fibre[{}]={}\n", f.label, f.size));
                    }
                    out
                }
                Format::Structured => {
                    let file = serde_json::to_value(BundleFile::from_bundle(&bundle)).unwrap();
                    let mut object = file.as_object().unwrap().clone();
                    object.extend(summary.json_object());
                    serde_json::to_string_pretty(&Value::Object(object)).unwrap() + "\n"
                }
            })
        }
        Command::ToDist { bundle } => {
            let p = to_distribution(&read_bundle(bundle)?)?;
            ok(match format {
                Format::Human => distribution_csv(&p),
                Format::Structured => {
                    let outcomes: Vec<Value> = p
                        .entries()
                        .iter()
                        .map(|(label, q)| {
                            serde_json::json!({ "label": label, "probability": q.to_string() })
                        })
                        .collect();
                    serde_json::to_string_pretty(&serde_json::json!({ "outcomes": outcomes }))
                        .unwrap()
                        + "\n"
                }
            })
        }
        Command::Arith { op, d, e } => {
            let (d, e) = (poly(d)?, poly(e)?);
            let result = match op {
                ArithOp::Add => &d + &e,
                ArithOp::Mul => &d * &e,
            };
            ok(render(
                &Report::new().text("polynomial", result.to_string()),
                format,
            ))
        }
    })
}

/// Runs the command, writing results to `out` and errors to `err`; returns the exit code.
pub fn main_with(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match run(cli) {
        Ok(output) => {
            let _ = out.write_all(output.stdout.as_bytes());
            output.exit_code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
