//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure (or a concordance
//! mismatch in `powersum --method all`), 2 usage error.

mod decimal;
pub mod table;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::error::{domain, Error, Result};
use crate::powersums::{direct_sum, MethodTag, PowerSumQuery, Target};
use crate::verify::{self, Bounds, Suite, VerifyReport};
use crate::zeta::zeta_even_exact;

pub use decimal::render_decimal;
pub use table::{build_table, parse_csv, parse_json, render, rows_cap, Family, Format, Table};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "powersumkit", version, about = "Exact power sums, Stirling-family tables and even zeta values")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a number triangle, rows 0..=N.
    Table {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        rows: u32,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Compute r^k + ... + n^k (or a related sum) by one method or all of them.
    Powersum {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        r: u32,
        /// A method name such as LangRefined, or `all`.
        #[arg(long, default_value = "all")]
        method: String,
    },
    /// Run an invariant sweep.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        k_max: Option<u32>,
        #[arg(long)]
        n_max: Option<u32>,
    },
    /// Print zeta(2k) as an exact multiple of pi^{2k}.
    Zeta {
        #[arg(long)]
        k: u32,
    },
}

/// Output of a command: text for stdout and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: EXIT_OK }
    }
}

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match execute(&cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("powersumkit: {e}");
            ExitCode::from(match e {
                Error::Domain(_) => EXIT_USAGE,
                Error::Internal(_) => EXIT_FAILURE,
            })
        }
    }
}

/// Runs one subcommand. Domain errors are usage errors.
pub fn execute(command: &Command) -> Result<Outcome> {
    match command {
        Command::Table { family, rows, format } => cmd_table(*family, *rows, *format),
        Command::Powersum { k, n, r, method } => cmd_powersum(*k, *n, *r, method),
        Command::Verify { suite, k_max, n_max } => {
            cmd_verify(suite.parse()?, Bounds::new(*k_max, *n_max))
        }
        Command::Zeta { k } => cmd_zeta(*k),
    }
}

pub fn cmd_table(family: Family, rows: u32, format: Format) -> Result<Outcome> {
    let table = build_table(family, rows, rows_cap()?)?;
    Ok(Outcome::ok(render(&table, format)?))
}

pub fn cmd_powersum(k: u32, n: u32, r: u32, method: &str) -> Result<Outcome> {
    let query = PowerSumQuery::new(k, n, r)?;
    let mut out = String::new();
    if !method.eq_ignore_ascii_case("all") {
        let method: MethodTag = method.parse()?;
        let value = method.evaluate(&query)?;
        writeln!(out, "{method}: {value}").unwrap();
        return Ok(Outcome::ok(out));
    }

    let mut concordant = true;
    writeln!(out, "k={k} n={n} r={r}").unwrap();
    for target in [Target::Powers, Target::OddPowers, Target::TriangularPowers] {
        let methods: Vec<MethodTag> = MethodTag::ALL
            .into_iter()
            .filter(|m| m.target() == target && m.rejects(&query).is_none())
            .collect();
        if methods.is_empty() {
            continue;
        }
        let oracle = direct_sum(target, &query);
        writeln!(out, "{}:", target.describe()).unwrap();
        if target != Target::Powers {
            writeln!(out, "  {:<20} {oracle}", "direct").unwrap();
        }
        for m in methods {
            let value = m.evaluate(&query)?;
            let mark = if value == oracle { "" } else { "  MISMATCH" };
            concordant &= value == oracle;
            writeln!(out, "  {:<20} {value}{mark}", m.name()).unwrap();
        }
    }
    writeln!(out, "verdict: {}", if concordant { "OK" } else { "MISMATCH" }).unwrap();
    Ok(Outcome {
        stdout: out,
        code: if concordant { EXIT_OK } else { EXIT_FAILURE },
    })
}

pub fn cmd_verify(suite: Suite, bounds: Bounds) -> Result<Outcome> {
    Ok(verify_outcome(&verify::run(suite, bounds)))
}

/// Summary text and exit code for a set of reports: 0 iff no cell failed.
pub fn verify_outcome(reports: &[VerifyReport]) -> Outcome {
    let mut out = String::new();
    for report in reports {
        write_report(&mut out, report);
    }
    let failures: usize = reports.iter().map(|r| r.failures.len()).sum();
    let cells: usize = reports.iter().map(|r| r.cells).sum();
    if reports.len() > 1 {
        writeln!(out, "total: {cells} cells, {failures} failures").unwrap();
    }
    Outcome {
        stdout: out,
        code: if failures == 0 { EXIT_OK } else { EXIT_FAILURE },
    }
}

fn write_report(out: &mut String, report: &VerifyReport) {
    writeln!(
        out,
        "{}: {} cells, {} failures, {:.3}s{}",
        report.suite,
        report.cells,
        report.failures.len(),
        report.elapsed.as_secs_f64(),
        if report.passed() { "" } else { " FAILED" }
    )
    .unwrap();
    for f in &report.failures {
        writeln!(out, "  {}: expected {}, got {}", f.cell, f.expected, f.actual).unwrap();
    }
}

pub fn cmd_zeta(k: u32) -> Result<Outcome> {
    if k < 1 {
        return Err(domain("zeta requires k >= 1"));
    }
    let z = zeta_even_exact(k)?;
    let mut out = String::new();
    writeln!(out, "{}", z.value).unwrap();
    writeln!(out, "≈ {}", render_decimal(&z.value, 40)).unwrap();
    Ok(Outcome::ok(out))
}
