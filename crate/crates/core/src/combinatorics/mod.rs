//! Exact special-number families: binomials, Stirling numbers of both kinds,
//! r-Stirling, central factorial and Legendre–Stirling numbers, Bernoulli
//! numbers and polynomials.
//!
//! The r-Stirling, central factorial and Legendre–Stirling families are
//! defined through their symmetric-function characterizations and evaluated
//! by [`crate::symfuncs`]. Triangle lookups outside `0 ≤ k ≤ n` return 0.
//!
//! Every family is available as a method on [`Numbers`], which owns the
//! caches, and as a free function using the process-wide [`Numbers::global`].

mod bernoulli;

use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::exact::{expect_integer, rat_int, sign, Integer, Rational, RationalPolynomial};
use crate::memo::{MemoTable, PrefixCache};
use crate::symfuncs::{complete_of, elementary_of, SequenceSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum SymKind {
    Elementary,
    Complete,
}

/// Cache owner for every number family.
pub struct Numbers {
    stirling1: PrefixCache<Vec<Integer>>,
    stirling2: PrefixCache<Vec<Integer>>,
    bernoulli: PrefixCache<Rational>,
    symmetric: MemoTable<(SequenceSpec, SymKind, usize), Rational>,
}

impl Default for Numbers {
    fn default() -> Self {
        Self::new()
    }
}

impl Numbers {
    pub fn new() -> Self {
        Numbers {
            stirling1: PrefixCache::new(stirling1_row),
            stirling2: PrefixCache::new(stirling2_row),
            bernoulli: PrefixCache::new(bernoulli::next_bernoulli),
            symmetric: MemoTable::new(),
        }
    }

    /// Recomputes everything on each call.
    pub fn uncached() -> Self {
        Numbers {
            stirling1: PrefixCache::disabled(stirling1_row),
            stirling2: PrefixCache::disabled(stirling2_row),
            bernoulli: PrefixCache::disabled(bernoulli::next_bernoulli),
            symmetric: MemoTable::disabled(),
        }
    }

    pub fn global() -> &'static Numbers {
        static GLOBAL: OnceLock<Numbers> = OnceLock::new();
        GLOBAL.get_or_init(Numbers::new)
    }

    /// Unsigned Stirling number of the first kind `[n k]`.
    pub fn stirling_first_unsigned(&self, n: u32, k: i64) -> Integer {
        self.stirling1.with(n as usize, |row| triangle_cell(row, k))
    }

    /// Stirling number of the second kind `{n k}`.
    pub fn stirling_second(&self, n: u32, k: i64) -> Integer {
        self.stirling2.with(n as usize, |row| triangle_cell(row, k))
    }

    /// `σ_m` of `xs`, cached per `(xs, m)`.
    pub fn elementary(&self, xs: &SequenceSpec, m: usize) -> Rational {
        if m > xs.len() {
            return Rational::zero();
        }
        self.symmetric_value(xs, SymKind::Elementary, m)
    }

    /// `h_m` of `xs`, cached per `(xs, m)`.
    pub fn complete(&self, xs: &SequenceSpec, m: usize) -> Rational {
        self.symmetric_value(xs, SymKind::Complete, m)
    }

    fn symmetric_value(&self, xs: &SequenceSpec, kind: SymKind, m: usize) -> Rational {
        if let Some(v) = self.symmetric.get(&(xs.clone(), kind, m)) {
            return v;
        }
        let values = xs.values();
        let prefix = match kind {
            SymKind::Elementary => elementary_of(&values, m),
            SymKind::Complete => complete_of(&values, m),
        };
        let mut result = Rational::zero();
        for (i, v) in prefix.into_iter().enumerate() {
            let stored = self.symmetric.insert((xs.clone(), kind, i), v);
            if i == m {
                result = stored;
            }
        }
        result
    }

    fn elementary_int(&self, xs: &SequenceSpec, m: usize) -> Result<Integer> {
        expect_integer(&self.elementary(xs, m), "elementary symmetric function")
    }

    fn complete_int(&self, xs: &SequenceSpec, m: usize) -> Result<Integer> {
        expect_integer(&self.complete(xs, m), "complete symmetric function")
    }

    /// `[n+1, n+1-m]_r = σ_m(r, r+1, …, n)`; zero once `m > n+1-r`.
    pub fn r_stirling_first(&self, n: u32, m: u32, r: u32) -> Result<Integer> {
        check_r(n, r)?;
        self.elementary_int(&SequenceSpec::NaturalsFrom { r, n }, m as usize)
    }

    /// `{n+m, n}_r = h_m(r, r+1, …, n)`.
    pub fn r_stirling_second(&self, n: u32, m: u32, r: u32) -> Result<Integer> {
        check_r(n, r)?;
        self.complete_int(&SequenceSpec::NaturalsFrom { r, n }, m as usize)
    }

    /// Central factorial numbers of the first kind.
    ///
    /// Even: `u(n+1, n+1-m) = (-1)^m σ_m(1², …, n²)`, with `u(0, 0) = 1`.
    /// Odd: `v(n, n-m) = (-1)^m σ_m(1², 3², …, (2n-1)²)`.
    /// Defined for `k ≤ n`; a negative `k` selects some `m` past the number
    /// of variables and gives 0.
    pub fn central_factorial_first(&self, n: u32, k: i64, parity: Parity) -> Result<Integer> {
        if k > i64::from(n) {
            return Err(domain(format!("central factorial first kind: k={k} > n={n}")));
        }
        let m = (i64::from(n) - k) as u64;
        let xs = match parity {
            Parity::Even if n == 0 => {
                return Ok(if k == 0 { Integer::one() } else { Integer::zero() });
            }
            Parity::Even => SequenceSpec::Squares(n - 1),
            Parity::Odd => SequenceSpec::OddSquares(n),
        };
        Ok(sign(m) * self.elementary_int(&xs, m as usize)?)
    }

    /// Central factorial numbers of the second kind.
    ///
    /// Even: `U(n+m, n) = h_m(1², …, n²)`.
    /// Odd: `V(n-1+m, n-1) = h_m(1², 3², …, (2n-1)²)`.
    /// Defined for `0 ≤ k ≤ n`.
    pub fn central_factorial_second(&self, n: u32, k: i64, parity: Parity) -> Result<Integer> {
        if k < 0 || k > i64::from(n) {
            return Err(domain(format!(
                "central factorial second kind: k={k} outside [0, {n}]"
            )));
        }
        let k = k as u32;
        let xs = match parity {
            Parity::Even => SequenceSpec::Squares(k),
            Parity::Odd => SequenceSpec::OddSquares(k + 1),
        };
        self.complete_int(&xs, (n - k) as usize)
    }

    /// Legendre–Stirling numbers of the first kind `Ps_n^{(j)}`, from
    /// `Ps_{n+1}^{(n+1-k)} = (-1)^k σ_k(2, 6, …, n(n+1))`; row 0 is `[1]`.
    pub fn legendre_stirling_first(&self, n: u32, j: i64) -> Result<Integer> {
        check_ls(n, j)?;
        if n == 0 {
            return Ok(Integer::one());
        }
        let k = n as u64 - j as u64;
        Ok(sign(k) * self.elementary_int(&SequenceSpec::DoubledTriangulars(n - 1), k as usize)?)
    }

    /// Legendre–Stirling numbers of the second kind `PS_n^{(j)}`, from
    /// `PS_{j+k}^{(j)} = h_k(2, 6, …, j(j+1))`.
    pub fn legendre_stirling_second(&self, n: u32, j: i64) -> Result<Integer> {
        check_ls(n, j)?;
        let j = j as u32;
        self.complete_int(&SequenceSpec::DoubledTriangulars(j), (n - j) as usize)
    }

    /// `B_k` with `B_1 = -1/2`.
    pub fn bernoulli_number(&self, k: u32) -> Rational {
        self.bernoulli.with(k as usize, Clone::clone)
    }

    /// `B_k(x) = Σ_{i=0}^{k} C(k, i) B_i x^{k-i}`.
    pub fn bernoulli_polynomial(&self, k: u32) -> RationalPolynomial {
        let mut coeffs = vec![Rational::zero(); k as usize + 1];
        for i in 0..=k {
            coeffs[(k - i) as usize] = rat_int(binomial(k, i64::from(i))) * self.bernoulli_number(i);
        }
        RationalPolynomial::new(coeffs)
    }
}

fn check_r(n: u32, r: u32) -> Result<()> {
    if r < 1 || r > n {
        Err(domain(format!("r-Stirling requires 1 <= r <= n, got r={r}, n={n}")))
    } else {
        Ok(())
    }
}

fn check_ls(n: u32, j: i64) -> Result<()> {
    if j < 0 || j > i64::from(n) {
        Err(domain(format!("Legendre-Stirling index j={j} outside [0, {n}]")))
    } else {
        Ok(())
    }
}

fn triangle_cell(row: &[Integer], k: i64) -> Integer {
    usize::try_from(k)
        .ok()
        .and_then(|k| row.get(k).cloned())
        .unwrap_or_else(Integer::zero)
}

/// `c(n, k) = c(n-1, k-1) + (n-1) c(n-1, k)`.
fn stirling1_row(prev: &[Vec<Integer>]) -> Vec<Integer> {
    let n = prev.len();
    let Some(last) = prev.last() else {
        return vec![Integer::one()];
    };
    (0..=n)
        .map(|k| {
            let diag = if k > 0 { last[k - 1].clone() } else { Integer::zero() };
            let same = last.get(k).map_or_else(Integer::zero, |c| c * (n - 1));
            diag + same
        })
        .collect()
}

/// `S(n, k) = k S(n-1, k) + S(n-1, k-1)`.
fn stirling2_row(prev: &[Vec<Integer>]) -> Vec<Integer> {
    let n = prev.len();
    let Some(last) = prev.last() else {
        return vec![Integer::one()];
    };
    (0..=n)
        .map(|k| {
            let diag = if k > 0 { last[k - 1].clone() } else { Integer::zero() };
            let same = last.get(k).map_or_else(Integer::zero, |c| c * k);
            diag + same
        })
        .collect()
}

/// `C(n, k)`, zero for `k < 0` or `k > n`.
pub fn binomial(n: u32, k: i64) -> Integer {
    if k < 0 || k > i64::from(n) {
        return Integer::zero();
    }
    num_integer::binomial(Integer::from(n), Integer::from(k))
}

pub fn stirling_first_unsigned(n: u32, k: i64) -> Integer {
    Numbers::global().stirling_first_unsigned(n, k)
}

pub fn stirling_second(n: u32, k: i64) -> Integer {
    Numbers::global().stirling_second(n, k)
}

pub fn r_stirling_first(n: u32, m: u32, r: u32) -> Result<Integer> {
    Numbers::global().r_stirling_first(n, m, r)
}

pub fn r_stirling_second(n: u32, m: u32, r: u32) -> Result<Integer> {
    Numbers::global().r_stirling_second(n, m, r)
}

pub fn central_factorial_first(n: u32, k: i64, parity: Parity) -> Result<Integer> {
    Numbers::global().central_factorial_first(n, k, parity)
}

pub fn central_factorial_second(n: u32, k: i64, parity: Parity) -> Result<Integer> {
    Numbers::global().central_factorial_second(n, k, parity)
}

pub fn legendre_stirling_first(n: u32, j: i64) -> Result<Integer> {
    Numbers::global().legendre_stirling_first(n, j)
}

pub fn legendre_stirling_second(n: u32, j: i64) -> Result<Integer> {
    Numbers::global().legendre_stirling_second(n, j)
}

pub fn bernoulli_number(k: u32) -> Rational {
    Numbers::global().bernoulli_number(k)
}

pub fn bernoulli_polynomial(k: u32) -> RationalPolynomial {
    Numbers::global().bernoulli_polynomial(k)
}
