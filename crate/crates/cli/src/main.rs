//! `modinv`: Betti tables, stringy E-functions and the identity suite from
//! the command line.
//!
//! Exit codes: 0 success, 1 a certification or verification failure,
//! 2 invalid arguments.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use modinv::exact::{poly_to_json, ratfun_to_json};
use modinv::kirwan::{poincare_table, Space};
use modinv::stringy::{stringy_e_closed, stringy_euler, EulerSource};
use modinv::{verify, DEFAULT_MAX_GENUS};

const MAX_GENUS_VAR: &str = "MODINV_MAX_GENUS";

#[derive(Parser, Debug)]
#[command(
    name = "modinv",
    version,
    about = "Exact cohomological invariants of rank-2 moduli desingularizations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Betti numbers of one space of the desingularization chain.
    Poincare {
        #[arg(long)]
        genus: u32,
        /// One of Rss, R1ss, M2, K, Ksigma, S.
        #[arg(long, value_parser = parse_space)]
        space: Space,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Closed form of the stringy E-function, expanded when it is a polynomial.
    Stringy {
        #[arg(long)]
        genus: u32,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Stringy Euler numbers over a genus range.
    Euler {
        #[arg(long, value_parser = parse_range)]
        genus_range: (u32, u32),
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run every identity check over a genus range.
    Verify {
        #[arg(long, value_parser = parse_range)]
        genus_range: (u32, u32),
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

fn parse_space(s: &str) -> Result<Space, String> {
    s.parse::<Space>().map_err(|e| e.to_string())
}

/// `a..b` (inclusive) or a single genus.
fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let bad = || format!("expected a genus range like 3..6, got {s:?}");
    match s.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            let lo = lo.trim().parse().map_err(|_| bad())?;
            let hi = hi.trim().parse().map_err(|_| bad())?;
            Ok((lo, hi))
        }
        None => {
            let g = s.trim().parse().map_err(|_| bad())?;
            Ok((g, g))
        }
    }
}

/// Argument validation failure, reported with exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn max_genus() -> Result<u32> {
    match std::env::var(MAX_GENUS_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| UsageError(format!("{MAX_GENUS_VAR}={v:?} is not a genus")).into()),
        Err(_) => Ok(DEFAULT_MAX_GENUS),
    }
}

fn check_range(lo: u32, hi: u32, min: u32) -> Result<()> {
    let max = max_genus()?;
    if lo > hi {
        return Err(UsageError(format!("genus range {lo}..{hi} is inverted")).into());
    }
    if lo < min || hi > max {
        return Err(UsageError(format!(
            "genus range {lo}..{hi} outside the supported {min}..{max}"
        ))
        .into());
    }
    Ok(())
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn run_poincare(
    genus: u32,
    space: Space,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<ExitCode> {
    check_range(genus, genus, 3)?;
    let table = poincare_table(genus, space)?;
    let text = match format {
        Format::Json => json_text(&table.to_json()),
        Format::Csv => {
            let mut s = String::from("genus,space,degree,betti\n");
            for row in table.csv_rows() {
                s.push_str(&row);
                s.push('\n');
            }
            s
        }
        Format::Pretty => format!("P({space}), g = {genus}:\n{}\n", table.to_poly()),
    };
    emit(output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn run_stringy(genus: u32, format: Format, output: &Option<PathBuf>) -> Result<ExitCode> {
    check_range(genus, genus, 2)?;
    let closed = stringy_e_closed(genus)?;
    let expanded = closed.to_poly().ok();
    let text = match format {
        Format::Json | Format::Csv => {
            if format == Format::Csv {
                return Err(UsageError("stringy supports --format json or pretty".into()).into());
            }
            json_text(&json!({
                "genus": genus,
                "polynomial": expanded.is_some(),
                "closed_form": ratfun_to_json(&closed),
                "expanded": expanded.as_ref().map(poly_to_json),
            }))
        }
        Format::Pretty => match &expanded {
            Some(p) => format!("E_st(M0), g = {genus} (polynomial):\n{p}\n"),
            None => format!("E_st(M0), g = {genus} (not a polynomial):\n{closed}\n"),
        },
    };
    emit(output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn run_euler(lo: u32, hi: u32, format: Format, output: &Option<PathBuf>) -> Result<ExitCode> {
    check_range(lo, hi, 2)?;
    let values = (lo..=hi)
        .map(stringy_euler)
        .collect::<Result<Vec<_>, _>>()?;
    let text = match format {
        Format::Json => {
            let rows: Vec<Value> = values
                .iter()
                .map(|e| {
                    let value: Value = serde_json::from_str(&e.value.to_string())
                        .expect("stringy Euler numbers are integers");
                    json!({
                        "genus": e.genus,
                        "euler": value,
                        "source": match e.source {
                            EulerSource::Limit => "limit",
                            EulerSource::ProjectiveSpace => "projective_space",
                        },
                    })
                })
                .collect();
            json_text(&Value::Array(rows))
        }
        Format::Csv => {
            let mut s = String::from("genus,euler\n");
            for e in &values {
                s.push_str(&format!("{},{}\n", e.genus, e.value));
            }
            s
        }
        Format::Pretty => values
            .iter()
            .map(|e| format!("g = {}: {}\n", e.genus, e.value))
            .collect(),
    };
    emit(output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn run_verify(lo: u32, hi: u32, format: Format, output: &Option<PathBuf>) -> Result<ExitCode> {
    check_range(lo, hi, 2)?;
    let report = verify::run(lo, hi);
    let text = match format {
        Format::Json => json_text(&report.to_json()),
        Format::Csv => {
            let mut s = String::from("identity,genus,pass\n");
            for e in report.entries() {
                s.push_str(&format!("{},{},{}\n", e.identity, e.genus, e.pass));
            }
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            for e in report.entries() {
                let mark = if e.pass { "PASS" } else { "FAIL" };
                s.push_str(&format!("{mark} {} g={}\n", e.identity, e.genus));
            }
            s.push_str(if report.all_pass() {
                "all checks passed\n"
            } else {
                "some checks failed\n"
            });
            s
        }
    };
    emit(output, &text)?;
    if let Some(fail) = report.first_failure() {
        eprintln!(
            "verification failed: {} g={}: {}",
            fail.identity,
            fail.genus,
            fail.witness.as_deref().unwrap_or("no witness")
        );
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Poincare {
            genus,
            space,
            format,
            output,
        } => run_poincare(*genus, *space, *format, output),
        Command::Stringy {
            genus,
            format,
            output,
        } => run_stringy(*genus, *format, output),
        Command::Euler {
            genus_range,
            format,
            output,
        } => run_euler(genus_range.0, genus_range.1, *format, output),
        Command::Verify {
            genus_range,
            format,
            output,
        } => run_verify(genus_range.0, genus_range.1, *format, output),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
