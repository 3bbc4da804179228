use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{Numbers, Parity};
use crate::error::{domain, Result};
use crate::exact::fmt_rational;

pub const ROWS_CAP_ENV: &str = "POWERSUMKIT_ROWS_CAP";
pub const DEFAULT_ROWS_CAP: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum)]
pub enum Family {
    #[value(name = "stirling1")]
    Stirling1,
    #[value(name = "stirling2")]
    Stirling2,
    #[value(name = "ls1")]
    Ls1,
    #[value(name = "ls2")]
    Ls2,
    #[value(name = "central_u")]
    CentralU,
    #[value(name = "central_U")]
    CentralUpperU,
    #[value(name = "central_v")]
    CentralV,
    #[value(name = "central_V")]
    CentralUpperV,
    /// Row n holds the coefficients of B_n(x), constant term first.
    #[value(name = "bernoulli")]
    Bernoulli,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Stirling1,
        Family::Stirling2,
        Family::Ls1,
        Family::Ls2,
        Family::CentralU,
        Family::CentralUpperU,
        Family::CentralV,
        Family::CentralUpperV,
        Family::Bernoulli,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Stirling1 => "stirling1",
            Family::Stirling2 => "stirling2",
            Family::Ls1 => "ls1",
            Family::Ls2 => "ls2",
            Family::CentralU => "central_u",
            Family::CentralUpperU => "central_U",
            Family::CentralV => "central_v",
            Family::CentralUpperV => "central_V",
            Family::Bernoulli => "bernoulli",
        }
    }

    fn cell(self, nums: &Numbers, n: u32, k: i64) -> Result<String> {
        Ok(match self {
            Family::Stirling1 => nums.stirling_first_unsigned(n, k).to_string(),
            Family::Stirling2 => nums.stirling_second(n, k).to_string(),
            Family::Ls1 => nums.legendre_stirling_first(n, k)?.to_string(),
            Family::Ls2 => nums.legendre_stirling_second(n, k)?.to_string(),
            Family::CentralU => nums.central_factorial_first(n, k, Parity::Even)?.to_string(),
            Family::CentralUpperU => nums.central_factorial_second(n, k, Parity::Even)?.to_string(),
            Family::CentralV => nums.central_factorial_first(n, k, Parity::Odd)?.to_string(),
            Family::CentralUpperV => nums.central_factorial_second(n, k, Parity::Odd)?.to_string(),
            Family::Bernoulli => fmt_rational(&nums.bernoulli_polynomial(n).coeff(k as usize)),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

/// A rendered triangle: row `n` holds columns `0..=n` as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub family: String,
    pub rows: Vec<Vec<String>>,
}

/// Row cap from `POWERSUMKIT_ROWS_CAP`, or the default.
pub fn rows_cap() -> Result<u32> {
    match std::env::var(ROWS_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| domain(format!("{ROWS_CAP_ENV} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_ROWS_CAP),
    }
}

/// Rows `0..=rows` of `family`.
pub fn build_table(family: Family, rows: u32, cap: u32) -> Result<Table> {
    if rows > cap {
        return Err(domain(format!("rows={rows} exceeds the cap of {cap} (set {ROWS_CAP_ENV})")));
    }
    let nums = Numbers::global();
    let rows = (0..=rows)
        .map(|n| (0..=i64::from(n)).map(|k| family.cell(nums, n, k)).collect())
        .collect::<Result<_>>()?;
    Ok(Table {
        family: family.name().to_string(),
        rows,
    })
}

pub fn render(table: &Table, format: Format) -> Result<String> {
    match format {
        Format::Plain => Ok(render_plain(table)),
        Format::Csv => render_csv(table),
        Format::Json => {
            let mut out = serde_json::to_string(table).map_err(|e| domain(e.to_string()))?;
            out.push('\n');
            Ok(out)
        }
    }
}

fn render_plain(table: &Table) -> String {
    let columns = table.rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths: Vec<usize> = (0..columns).map(|j| j.to_string().len()).collect();
    for row in &table.rows {
        for (j, cell) in row.iter().enumerate() {
            widths[j] = widths[j].max(cell.chars().count());
        }
    }
    let label = format!("{} n\\k", table.family);
    let lead = label.len().max(table.rows.len().saturating_sub(1).to_string().len());
    let mut out = format!("{label:>lead$} |");
    for (j, w) in widths.iter().enumerate() {
        out.push_str(&format!(" {j:>w$}"));
    }
    out.push('\n');
    for (n, row) in table.rows.iter().enumerate() {
        out.push_str(&format!("{n:>lead$} |"));
        for (cell, w) in row.iter().zip(&widths) {
            out.push_str(&format!(" {cell:>w$}"));
        }
        out.push('\n');
    }
    out
}

fn render_csv(table: &Table) -> Result<String> {
    let mut writer = csv::WriterBuilder::new()
        .flexible(true)
        .has_headers(false)
        .from_writer(Vec::new());
    for row in &table.rows {
        writer.write_record(row).map_err(|e| domain(e.to_string()))?;
    }
    let bytes = writer.into_inner().map_err(|e| domain(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| domain(e.to_string()))
}

pub fn parse_json(text: &str) -> Result<Table> {
    serde_json::from_str(text).map_err(|e| domain(format!("bad table JSON: {e}")))
}

/// Reads CSV rows back; the family name is not part of the CSV rendering.
pub fn parse_csv(family: &str, text: &str) -> Result<Table> {
    let mut reader = csv::ReaderBuilder::new()
        .flexible(true)
        .has_headers(false)
        .from_reader(text.as_bytes());
    let rows = reader
        .records()
        .map(|rec| {
            rec.map(|r| r.iter().map(str::to_string).collect())
                .map_err(|e| domain(format!("bad table CSV: {e}")))
        })
        .collect::<Result<_>>()?;
    Ok(Table {
        family: family.to_string(),
        rows,
    })
}
