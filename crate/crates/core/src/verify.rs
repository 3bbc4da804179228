//! Invariant sweeps behind the `verify` subcommand.
//!
//! Each suite expands into independent cells `(id, expected, actual)`,
//! evaluated in parallel. Failures are sorted by cell id so reports are
//! deterministic.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rayon::prelude::*;

use crate::combinatorics::{
    binomial, bernoulli_number, legendre_stirling_first, legendre_stirling_second,
};
use crate::error::{domain, Result};
use crate::exact::{fmt_rational, int, pow2, rat, rat_int, sign, factorial, Integer, Rational};
use crate::powersums::{
    direct_sum, ones_identity_residual, s_brute, s_even_powers, s_odd_even_powers,
    s_odd_even_powers_poly, s_range, triangular_sum_binomial, triangular_sum_ls, MethodTag,
    PowerSumQuery, Target,
};
use crate::symfuncs::{
    complete_prefix, elementary_prefix, newton_girard_power_sums, orthogonality_residual,
    pn_polynomial_coeffs, power_sum_via_lang, power_sums_direct, SequenceSpec,
};
use crate::zeta::{
    bernoulli_binomial_identity, bernoulli_even_recursion, h_inverse_squares_check,
    merca_ls_bernoulli_identity, zeta_even_exact,
};

/// Legendre–Stirling numbers of the first kind `Ps_n^{(j)}`, rows 0..=7.
pub const LS_FIRST_TABLE: [&[i64]; 8] = [
    &[1],
    &[0, 1],
    &[0, -2, 1],
    &[0, 12, -8, 1],
    &[0, -144, 108, -20, 1],
    &[0, 2880, -2304, 508, -40, 1],
    &[0, -86400, 72000, -17544, 1708, -70, 1],
    &[0, 3628800, -3110400, 808848, -89280, 4648, -112, 1],
];

/// Legendre–Stirling numbers of the second kind `PS_n^{(j)}`, rows 0..=7.
pub const LS_SECOND_TABLE: [&[i64]; 8] = [
    &[1],
    &[0, 1],
    &[0, 2, 1],
    &[0, 4, 8, 1],
    &[0, 8, 52, 20, 1],
    &[0, 16, 320, 292, 40, 1],
    &[0, 32, 1936, 3824, 1092, 70, 1],
    &[0, 64, 11648, 47824, 25664, 3192, 112, 1],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Concordance,
    Orthogonality,
    Ones,
    Central,
    Triangular,
    LsTables,
    Zeta,
    Bernoulli,
    PnCoeffs,
    All,
}

impl Suite {
    /// Every concrete suite, in the order `all` runs them.
    pub const EACH: [Suite; 9] = [
        Suite::LsTables,
        Suite::Concordance,
        Suite::Orthogonality,
        Suite::Ones,
        Suite::Central,
        Suite::Triangular,
        Suite::Zeta,
        Suite::Bernoulli,
        Suite::PnCoeffs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Concordance => "concordance",
            Suite::Orthogonality => "orthogonality",
            Suite::Ones => "ones",
            Suite::Central => "central",
            Suite::Triangular => "triangular",
            Suite::LsTables => "ls_tables",
            Suite::Zeta => "zeta",
            Suite::Bernoulli => "bernoulli",
            Suite::PnCoeffs => "pn_coeffs",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| domain(format!("unknown suite {s:?}")))
    }
}

/// Optional overrides of each suite's default sweep ranges.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Bounds {
    pub k_max: Option<u32>,
    pub n_max: Option<u32>,
}

impl Bounds {
    pub fn new(k_max: Option<u32>, n_max: Option<u32>) -> Self {
        Bounds { k_max, n_max }
    }

    fn k(&self, default: u32) -> u32 {
        self.k_max.unwrap_or(default)
    }

    fn n(&self, default: u32) -> u32 {
        self.n_max.unwrap_or(default)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Failure {
    pub cell: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub suite: String,
    pub cells: usize,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type Check = Box<dyn Fn() -> Result<(String, String)> + Send + Sync>;

struct Cell {
    id: String,
    check: Check,
}

fn cell(id: String, check: impl Fn() -> Result<(String, String)> + Send + Sync + 'static) -> Cell {
    Cell {
        id,
        check: Box::new(check),
    }
}

fn s<T: ToString>(v: T) -> String {
    v.to_string()
}

fn q(v: &Rational) -> String {
    fmt_rational(v)
}

/// Runs one concrete suite.
pub fn run_suite(suite: Suite, bounds: Bounds) -> VerifyReport {
    let start = Instant::now();
    let cells = match suite {
        Suite::Concordance => concordance_cells(bounds),
        Suite::Orthogonality => orthogonality_cells(bounds),
        Suite::Ones => ones_cells(bounds),
        Suite::Central => central_cells(bounds),
        Suite::Triangular => triangular_cells(bounds),
        Suite::LsTables => ls_table_cells(),
        Suite::Zeta => zeta_cells(bounds),
        Suite::Bernoulli => bernoulli_cells(bounds),
        Suite::PnCoeffs => pn_cells(bounds),
        Suite::All => {
            let parts = run(Suite::All, bounds);
            return merge("all", parts, start);
        }
    };
    let count = cells.len();
    let failures = evaluate(cells);
    VerifyReport {
        suite: suite.name().into(),
        cells: count,
        failures,
        elapsed: start.elapsed(),
    }
}

fn evaluate(cells: Vec<Cell>) -> Vec<Failure> {
    let mut failures: Vec<Failure> = cells
        .into_par_iter()
        .filter_map(|c| match (c.check)() {
            Ok((expected, actual)) if expected == actual => None,
            Ok((expected, actual)) => Some(Failure {
                cell: c.id,
                expected,
                actual,
            }),
            Err(e) => Some(Failure {
                cell: c.id,
                expected: "a value".into(),
                actual: format!("error: {e}"),
            }),
        })
        .collect();
    failures.sort();
    failures
}

/// Runs `suite`, expanding `all` into one report per concrete suite.
pub fn run(suite: Suite, bounds: Bounds) -> Vec<VerifyReport> {
    match suite {
        Suite::All => Suite::EACH.iter().map(|&s| run_suite(s, bounds)).collect(),
        other => vec![run_suite(other, bounds)],
    }
}

fn merge(name: &str, parts: Vec<VerifyReport>, start: Instant) -> VerifyReport {
    let mut failures: Vec<Failure> = parts.iter().flat_map(|r| r.failures.clone()).collect();
    failures.sort();
    VerifyReport {
        suite: name.into(),
        cells: parts.iter().map(|r| r.cells).sum(),
        failures,
        elapsed: start.elapsed(),
    }
}

fn brute(k: u32, n: u32) -> Integer {
    if n == 0 {
        return Integer::zero();
    }
    s_brute(&PowerSumQuery { k, n, r: 1 })
}

fn concordance_cells(bounds: Bounds) -> Vec<Cell> {
    let (k_max, n_max) = (bounds.k(12), bounds.n(25));
    let mut cells = Vec::new();
    for k in 0..=k_max {
        for n in 1..=n_max {
            let query = PowerSumQuery { k, n, r: 1 };
            for method in MethodTag::ALL {
                if method == MethodTag::Brute
                    || method.target() != Target::Powers
                    || method.rejects(&query).is_some()
                {
                    continue;
                }
                cells.push(cell(
                    format!("concordance/{method}/k={k:02}/n={n:02}"),
                    move || Ok((s(brute(k, n)), s(method.evaluate(&query)?))),
                ));
            }
            if k >= 1 {
                for r in 2..=n {
                    cells.push(cell(
                        format!("concordance/RangeTelescoping/k={k:02}/n={n:02}/r={r:02}"),
                        move || Ok((s(brute(k, n) - brute(k, r - 1)), s(s_range(k, n, r)?))),
                    ));
                }
            }
        }
    }
    cells
}

fn orthogonality_cells(bounds: Bounds) -> Vec<Cell> {
    let (k_max, n_max) = (bounds.k(15), bounds.n(12));
    let families: [(&str, fn(u32) -> SequenceSpec); 6] = [
        ("naturals", SequenceSpec::naturals),
        ("squares", SequenceSpec::Squares),
        ("odd_squares", SequenceSpec::OddSquares),
        ("doubled_triangulars", SequenceSpec::DoubledTriangulars),
        ("ones", SequenceSpec::Ones),
        ("inverse_squares", SequenceSpec::InverseSquares),
    ];
    let mut cells = Vec::new();
    for (name, make) in families {
        for n in 0..=n_max {
            let xs = make(n);
            for k in 0..=k_max {
                let xs = xs.clone();
                cells.push(cell(
                    format!("orthogonality/{name}/n={n:02}/k={k:02}"),
                    move || {
                        let delta = if k == 0 { 1 } else { 0 };
                        Ok((s(delta), q(&orthogonality_residual(&xs, k as usize))))
                    },
                ));
            }
            // power sums via the generalized Lang formula and Newton–Girard
            let power_k = k_max.min(10) as usize;
            if power_k >= 1 {
                let xs_lang = xs.clone();
                cells.push(cell(format!("orthogonality/{name}/n={n:02}/lang"), move || {
                    let direct = power_sums_direct(&xs_lang, power_k);
                    let via: Vec<Rational> = (1..=power_k)
                        .map(|k| power_sum_via_lang(&xs_lang, k))
                        .collect::<Result<_>>()?;
                    Ok((join(&direct), join(&via)))
                }));
                let xs_ng = xs.clone();
                cells.push(cell(
                    format!("orthogonality/{name}/n={n:02}/newton_girard"),
                    move || {
                        let direct = power_sums_direct(&xs_ng, power_k);
                        let sigma = elementary_prefix(&xs_ng, power_k);
                        Ok((join(&direct), join(&newton_girard_power_sums(&sigma, power_k)?)))
                    },
                ));
            }
        }
    }
    cells
}

fn join(values: &[Rational]) -> String {
    values.iter().map(q).collect::<Vec<_>>().join(",")
}

fn ones_cells(bounds: Bounds) -> Vec<Cell> {
    let (k_max, n_max) = (bounds.k(15), bounds.n(15));
    let mut cells = Vec::new();
    for k in 1..=k_max {
        for n in 1..=n_max {
            cells.push(cell(format!("ones/identity/k={k:02}/n={n:02}"), move || {
                Ok((s(0), s(ones_identity_residual(k, n)?)))
            }));
        }
    }
    for n in 1..=n_max {
        cells.push(cell(format!("ones/rows/n={n:02}"), move || {
            let m_max = k_max as usize;
            let expected_sigma: Vec<Rational> =
                (0..=m_max).map(|m| rat_int(binomial(n, m as i64))).collect();
            let expected_h: Vec<Rational> = (0..=m_max)
                .map(|m| rat_int(binomial(n + m as u32 - 1, m as i64)))
                .collect();
            let xs = SequenceSpec::Ones(n);
            Ok((
                format!("{};{}", join(&expected_sigma), join(&expected_h)),
                format!(
                    "{};{}",
                    join(&elementary_prefix(&xs, m_max)),
                    join(&complete_prefix(&xs, m_max))
                ),
            ))
        }));
    }
    cells
}

fn central_cells(bounds: Bounds) -> Vec<Cell> {
    let k_max = bounds.k(6);
    let mut cells = Vec::new();
    for k in 1..=k_max {
        for n in 1..=bounds.n(15) {
            cells.push(cell(format!("central/even/k={k:02}/n={n:02}"), move || {
                Ok((s(brute(2 * k, n)), s(s_even_powers(k, n)?)))
            }));
        }
        for n in 1..=bounds.n(12) {
            let query = PowerSumQuery { k: 2 * k, n, r: 1 };
            cells.push(cell(format!("central/odd/k={k:02}/n={n:02}"), move || {
                Ok((s(direct_sum(Target::OddPowers, &query)), s(s_odd_even_powers(k, n)?)))
            }));
            cells.push(cell(format!("central/odd_poly/k={k:02}/n={n:02}"), move || {
                Ok((s(s_odd_even_powers(k, n)?), s(s_odd_even_powers_poly(k, n)?)))
            }));
        }
    }
    cells
}

fn triangular_cells(bounds: Bounds) -> Vec<Cell> {
    let (k_max, n_max) = (bounds.k(6), bounds.n(12));
    let mut cells = Vec::new();
    for k in 1..=k_max {
        for n in 1..=n_max {
            let query = PowerSumQuery { k, n, r: 1 };
            cells.push(cell(format!("triangular/ls/k={k:02}/n={n:02}"), move || {
                Ok((s(direct_sum(Target::TriangularPowers, &query)), s(triangular_sum_ls(k, n)?)))
            }));
            cells.push(cell(format!("triangular/binomial/k={k:02}/n={n:02}"), move || {
                Ok((
                    s(direct_sum(Target::TriangularPowers, &query)),
                    s(triangular_sum_binomial(k, n)?),
                ))
            }));
        }
    }
    cells
}

fn ls_table_cells() -> Vec<Cell> {
    let mut cells = Vec::new();
    for (kind, table) in [("first", LS_FIRST_TABLE), ("second", LS_SECOND_TABLE)] {
        for (n, row) in table.iter().enumerate() {
            for (j, &expected) in row.iter().enumerate() {
                let (n, j) = (n as u32, j as i64);
                cells.push(cell(format!("ls_tables/{kind}/n={n}/j={j}"), move || {
                    let actual = if kind == "first" {
                        legendre_stirling_first(n, j)?
                    } else {
                        legendre_stirling_second(n, j)?
                    };
                    Ok((s(expected), s(actual)))
                }));
            }
        }
    }
    cells
}

/// `(-1)^{k+1} B_{2k} 2^{2k-1} / (2k)!`.
pub fn classical_zeta_coeff(k: u32) -> Rational {
    rat_int(-sign(k.into())) * bernoulli_number(2 * k) * pow2(2 * i64::from(k) - 1)
        / rat_int(factorial(2 * k))
}

fn zeta_cells(bounds: Bounds) -> Vec<Cell> {
    let k_max = bounds.k(15);
    let mut cells = Vec::new();
    for (k, expected) in [(1, rat(1, 6)), (2, rat(1, 90)), (3, rat(1, 945))] {
        cells.push(cell(format!("zeta/known/k={k:02}"), move || {
            Ok((q(&expected), q(zeta_even_exact(k)?.coeff())))
        }));
    }
    for k in 1..=k_max {
        cells.push(cell(format!("zeta/classical/k={k:02}"), move || {
            Ok((q(&classical_zeta_coeff(k)), q(zeta_even_exact(k)?.coeff())))
        }));
        cells.push(cell(format!("zeta/h_check/k={k:02}"), move || {
            Ok((s(0), q(&h_inverse_squares_check(k)?)))
        }));
    }
    cells
}

fn bernoulli_cells(bounds: Bounds) -> Vec<Cell> {
    let mut cells = Vec::new();
    for k in 1..=bounds.k(25) {
        cells.push(cell(format!("bernoulli/binomial_identity/k={k:02}"), move || {
            Ok((s(0), q(&bernoulli_binomial_identity(k)?)))
        }));
    }
    for k in 1..=bounds.k(15) {
        cells.push(cell(format!("bernoulli/even_recursion/k={k:02}"), move || {
            Ok((q(&bernoulli_number(2 * k)), q(&bernoulli_even_recursion(k)?)))
        }));
    }
    for k in 1..=bounds.k(6) {
        for n in 1..=bounds.n(8) {
            cells.push(cell(format!("bernoulli/ls_identity/k={k:02}/n={n:02}"), move || {
                Ok((s(0), q(&merca_ls_bernoulli_identity(k, n)?)))
            }));
        }
    }
    cells
}

fn pn_cells(bounds: Bounds) -> Vec<Cell> {
    let mut cells = Vec::new();
    for n in 1..=bounds.n(12) {
        cells.push(cell(format!("pn_coeffs/n={n:02}"), move || {
            let sigma = elementary_prefix(&SequenceSpec::naturals(n), n as usize);
            let expected: Vec<Rational> = (0..n)
                .map(|m| rat_int(int(i64::from(n - m)) * sign(m.into())) * &sigma[m as usize])
                .collect();
            let p = pn_polynomial_coeffs(n)?;
            let actual: Vec<Rational> = (0..n as usize).map(|m| p.coeff(m)).collect();
            let degree_ok = p.degree() == Some(n as usize - 1);
            Ok((join(&expected), format!("{}{}", join(&actual), if degree_ok { "" } else { " (wrong degree)" })))
        }));
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_sweeps_pass() {
        let bounds = Bounds::new(Some(4), Some(5));
        for report in run(Suite::All, bounds) {
            assert!(report.passed(), "{}: {:?}", report.suite, report.failures);
            assert!(report.cells > 0, "{}", report.suite);
        }
    }

    #[test]
    fn ls_tables_cover_all_cells() {
        let report = run_suite(Suite::LsTables, Bounds::default());
        assert_eq!(report.cells, 72);
        assert!(report.passed());
    }

    #[test]
    fn failing_cell_is_reported() {
        let cells = vec![
            cell("x/b".into(), || Ok((s(1), s(2)))),
            cell("x/a".into(), || Err(domain("boom"))),
            cell("x/c".into(), || Ok((s(3), s(3)))),
        ];
        let failures = evaluate(cells);
        assert_eq!(failures.len(), 2);
        assert_eq!(failures[0].cell, "x/a");
        assert_eq!(failures[0].actual, "error: domain error: boom");
        assert_eq!((failures[1].expected.as_str(), failures[1].actual.as_str()), ("1", "2"));
    }
}
