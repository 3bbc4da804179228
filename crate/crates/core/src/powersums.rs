//! Power sums `r^k + (r+1)^k + … + n^k` by every available route.
//!
//! Each method is written out on its own, sharing only the number families
//! from [`crate::combinatorics`], so agreement between methods is a real
//! cross-check. Brute force is the oracle.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Pow, Zero};

use crate::combinatorics::{binomial, Numbers, Parity};
use crate::error::{domain, internal, Result};
use crate::exact::{expect_integer, factorial, pow2, rat, rat_int, sign, Integer, Rational};

/// Exponent `k` and range `r..=n` of a power sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PowerSumQuery {
    pub k: u32,
    pub n: u32,
    pub r: u32,
}

impl PowerSumQuery {
    pub fn new(k: u32, n: u32, r: u32) -> Result<Self> {
        if r < 1 || r > n {
            return Err(domain(format!("power sum range requires 1 <= r <= n, got r={r}, n={n}")));
        }
        Ok(PowerSumQuery { k, n, r })
    }

    /// `1^k + … + n^k`.
    pub fn prefix(k: u32, n: u32) -> Result<Self> {
        Self::new(k, n, 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MethodTag {
    Brute,
    LangOriginal,
    LangRefined,
    NewtonRecurrence,
    BinomialRecurrence,
    RangeRStirling,
    EvenCentral,
    OddCentral,
    OddBernoulliPoly,
    TriangularLS,
    TriangularBinomial,
}

/// The quantity a method produces for a query `(k, n, r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    /// `r^k + … + n^k`
    Powers,
    /// `1^k + 3^k + … + (2n-1)^k`, `k` even
    OddPowers,
    /// `T_1^k + … + T_n^k`, `T_i = i(i+1)/2`
    TriangularPowers,
}

impl Target {
    pub fn describe(self) -> &'static str {
        match self {
            Target::Powers => "sum of i^k for i in r..=n",
            Target::OddPowers => "sum of (2i-1)^k for i in 1..=n",
            Target::TriangularPowers => "sum of T_i^k for i in 1..=n",
        }
    }
}

impl MethodTag {
    pub const ALL: [MethodTag; 11] = [
        MethodTag::Brute,
        MethodTag::LangOriginal,
        MethodTag::LangRefined,
        MethodTag::NewtonRecurrence,
        MethodTag::BinomialRecurrence,
        MethodTag::RangeRStirling,
        MethodTag::EvenCentral,
        MethodTag::OddCentral,
        MethodTag::OddBernoulliPoly,
        MethodTag::TriangularLS,
        MethodTag::TriangularBinomial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MethodTag::Brute => "Brute",
            MethodTag::LangOriginal => "LangOriginal",
            MethodTag::LangRefined => "LangRefined",
            MethodTag::NewtonRecurrence => "NewtonRecurrence",
            MethodTag::BinomialRecurrence => "BinomialRecurrence",
            MethodTag::RangeRStirling => "RangeRStirling",
            MethodTag::EvenCentral => "EvenCentral",
            MethodTag::OddCentral => "OddCentral",
            MethodTag::OddBernoulliPoly => "OddBernoulliPoly",
            MethodTag::TriangularLS => "TriangularLS",
            MethodTag::TriangularBinomial => "TriangularBinomial",
        }
    }

    pub fn target(self) -> Target {
        match self {
            MethodTag::OddCentral | MethodTag::OddBernoulliPoly => Target::OddPowers,
            MethodTag::TriangularLS | MethodTag::TriangularBinomial => Target::TriangularPowers,
            _ => Target::Powers,
        }
    }

    /// Why the method cannot evaluate `q`, or `None` if it can.
    pub fn rejects(self, q: &PowerSumQuery) -> Option<&'static str> {
        use MethodTag::*;
        let needs_prefix = !matches!(self, Brute | RangeRStirling);
        let needs_positive_k = !matches!(self, Brute | LangOriginal | LangRefined);
        let needs_even_k = matches!(self, EvenCentral | OddCentral | OddBernoulliPoly);
        if needs_prefix && q.r != 1 {
            Some("r > 1 is only supported by Brute and RangeRStirling")
        } else if needs_positive_k && q.k == 0 {
            Some("k >= 1 required")
        } else if needs_even_k && q.k % 2 != 0 {
            Some("even k required")
        } else {
            None
        }
    }

    pub fn evaluate(self, q: &PowerSumQuery) -> Result<Integer> {
        if let Some(why) = self.rejects(q) {
            return Err(domain(format!("{self}: {why}")));
        }
        let (k, n) = (q.k, q.n);
        match self {
            MethodTag::Brute => Ok(s_brute(q)),
            MethodTag::LangOriginal => s_lang_original(k, n),
            MethodTag::LangRefined => s_lang_refined(k, n),
            MethodTag::NewtonRecurrence => s_newton_recurrence(k, n),
            MethodTag::BinomialRecurrence => s_binomial_recurrence(k, n),
            MethodTag::RangeRStirling => s_range(k, n, q.r),
            MethodTag::EvenCentral => s_even_powers(k / 2, n),
            MethodTag::OddCentral => s_odd_even_powers(k / 2, n),
            MethodTag::OddBernoulliPoly => s_odd_even_powers_poly(k / 2, n),
            MethodTag::TriangularLS => triangular_sum_ls(k, n),
            MethodTag::TriangularBinomial => triangular_sum_binomial(k, n),
        }
    }
}

impl fmt::Display for MethodTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MethodTag {
    type Err = crate::Error;

    /// Case-insensitive; `-` and `_` are ignored, so `lang-refined`,
    /// `lang_refined` and `LangRefined` are the same method.
    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| *c != '-' && *c != '_')
            .collect::<String>()
            .to_ascii_lowercase();
        MethodTag::ALL
            .into_iter()
            .find(|m| m.name().to_ascii_lowercase() == key)
            .ok_or_else(|| domain(format!("unknown method {s:?}")))
    }
}

/// Direct evaluation of a target quantity, the oracle for every method.
pub fn direct_sum(target: Target, q: &PowerSumQuery) -> Integer {
    match target {
        Target::Powers => s_brute(q),
        Target::OddPowers => (1..=q.n)
            .map(|i| Integer::from(2 * u64::from(i) - 1).pow(q.k))
            .sum(),
        Target::TriangularPowers => (1..=q.n)
            .map(|i| triangular(i).pow(q.k))
            .sum(),
    }
}

fn triangular(i: u32) -> Integer {
    Integer::from(u64::from(i) * (u64::from(i) + 1) / 2)
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        Err(domain("n >= 1 required"))
    } else {
        Ok(())
    }
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        Err(domain("k >= 1 required"))
    } else {
        Ok(())
    }
}

/// Signed lower index `a - b` for triangle lookups.
fn idx(a: u32, b: u32) -> i64 {
    i64::from(a) - i64::from(b)
}

/// `Σ_{i=r}^{n} i^k`, with `0^0 = 1` so that `S_0(n) = n`.
pub fn s_brute(q: &PowerSumQuery) -> Integer {
    (q.r..=q.n).map(|i| Integer::from(i).pow(q.k)).sum()
}

/// `S_k(n) = Σ_{m=0}^{min(k,n-1)} (-1)^m (n-m) [n+1, n+1-m] {n+k-m, n}`.
///
/// The loop runs to `k`; the `m ≥ n` terms vanish through `(n - m) = 0` at
/// `m = n` and the Stirling zero convention beyond.
pub fn s_lang_original(k: u32, n: u32) -> Result<Integer> {
    check_n(n)?;
    let nums = Numbers::global();
    let mut total = Integer::zero();
    for m in 0..=k {
        let first = nums.stirling_first_unsigned(n + 1, idx(n + 1, m));
        if first.is_zero() || m >= n {
            continue;
        }
        let second = nums.stirling_second(n + k - m, i64::from(n));
        total += sign(m.into()) * Integer::from(n - m) * first * second;
    }
    Ok(total)
}

/// `S_k(n) = n δ_{k,0} + Σ_{m=1}^{k} (-1)^{m-1} m [n+1, n+1-m] {n+k-m, n}`.
pub fn s_lang_refined(k: u32, n: u32) -> Result<Integer> {
    check_n(n)?;
    let nums = Numbers::global();
    let mut total = if k == 0 { Integer::from(n) } else { Integer::zero() };
    for m in 1..=k {
        let first = nums.stirling_first_unsigned(n + 1, idx(n + 1, m));
        if first.is_zero() {
            continue;
        }
        let second = nums.stirling_second(n + k - m, i64::from(n));
        total -= sign(m.into()) * Integer::from(m) * first * second;
    }
    Ok(total)
}

/// Newton–Girard recurrence
/// `S_m = (-1)^{m-1} m σ_m(n) - Σ_{j=1}^{m-1} (-1)^j σ_j(n) S_{m-j}`,
/// with `σ_j(n) = [n+1, n+1-j]`.
pub fn s_newton_recurrence(k: u32, n: u32) -> Result<Integer> {
    check_k(k)?;
    check_n(n)?;
    let nums = Numbers::global();
    let sigma = |j: u32| nums.stirling_first_unsigned(n + 1, idx(n + 1, j));
    let mut s: Vec<Integer> = Vec::with_capacity(k as usize);
    for m in 1..=k {
        let mut value = -sign(m.into()) * Integer::from(m) * sigma(m);
        for j in 1..m {
            value -= sign(j.into()) * sigma(j) * &s[(m - j - 1) as usize];
        }
        s.push(value);
    }
    Ok(s.pop().expect("k >= 1"))
}

/// `S_m = m! C(n+m, m+1) - Σ_{j=1}^{m-1} σ_j(1..m-1) S_{m-j}`.
///
/// Here `σ_j` runs over `1..m-1`, not `1..n`: `σ_j(1..m-1) = [m, m-j]`.
pub fn s_binomial_recurrence(k: u32, n: u32) -> Result<Integer> {
    check_k(k)?;
    check_n(n)?;
    let nums = Numbers::global();
    let mut s: Vec<Integer> = Vec::with_capacity(k as usize);
    for m in 1..=k {
        let mut value = factorial(m) * binomial(n + m, i64::from(m) + 1);
        for j in 1..m {
            value -= nums.stirling_first_unsigned(m, idx(m, j)) * &s[(m - j - 1) as usize];
        }
        s.push(value);
    }
    Ok(s.pop().expect("k >= 1"))
}

/// `r^k + … + n^k = Σ_{m=1}^{k} (-1)^{m-1} m [n+1, n+1-m]_r {n+k-m, n}_r`.
pub fn s_range(k: u32, n: u32, r: u32) -> Result<Integer> {
    check_k(k)?;
    PowerSumQuery::new(k, n, r)?;
    let nums = Numbers::global();
    let mut total = Integer::zero();
    for m in 1..=k {
        let first = nums.r_stirling_first(n, m, r)?;
        if first.is_zero() {
            continue;
        }
        let second = nums.r_stirling_second(n, k - m, r)?;
        total -= sign(m.into()) * Integer::from(m) * first * second;
    }
    Ok(total)
}

/// `1^{2k} + … + n^{2k} = -Σ_{m=1}^{k} m u(n+1, n+1-m) U(n+k-m, n)`.
pub fn s_even_powers(k: u32, n: u32) -> Result<Integer> {
    check_k(k)?;
    check_n(n)?;
    let nums = Numbers::global();
    let mut total = Integer::zero();
    for m in 1..=k {
        let u = nums.central_factorial_first(n + 1, idx(n + 1, m), Parity::Even)?;
        if u.is_zero() {
            continue;
        }
        let big_u = nums.central_factorial_second(n + k - m, i64::from(n), Parity::Even)?;
        total -= Integer::from(m) * u * big_u;
    }
    Ok(total)
}

/// `1^{2k} + 3^{2k} + … + (2n-1)^{2k} = -Σ_{m=1}^{k} m v(n, n-m) V(n-1+k-m, n-1)`.
pub fn s_odd_even_powers(k: u32, n: u32) -> Result<Integer> {
    check_k(k)?;
    check_n(n)?;
    let nums = Numbers::global();
    let mut total = Integer::zero();
    for m in 1..=k {
        let v = nums.central_factorial_first(n, idx(n, m), Parity::Odd)?;
        if v.is_zero() {
            continue;
        }
        let big_v = nums.central_factorial_second(n - 1 + k - m, i64::from(n - 1), Parity::Odd)?;
        total -= Integer::from(m) * v * big_v;
    }
    Ok(total)
}

/// The same odd-base sum as the polynomial
/// `(2^{2k}/(2k+1)) Σ_{j=0}^{k} C(2k+1, 2j+1) B_{2k-2j}(1/2) n^{2j+1}`.
pub fn s_odd_even_powers_poly(k: u32, n: u32) -> Result<Integer> {
    check_k(k)?;
    check_n(n)?;
    let nums = Numbers::global();
    let half = rat(1, 2);
    let n_rat = rat_int(Integer::from(n));
    let sum: Rational = (0..=k)
        .map(|j| {
            rat_int(binomial(2 * k + 1, i64::from(2 * j + 1)))
                * nums.bernoulli_polynomial(2 * k - 2 * j).eval(&half)
                * Rational::pow(&n_rat, (2 * j + 1) as i32)
        })
        .sum();
    let value = pow2(i64::from(2 * k)) / rat_int(Integer::from(2 * k + 1)) * sum;
    expect_integer(&value, "odd power sum polynomial")
}

/// `T_1^k + … + T_n^k = -(1/2^k) Σ_{m=1}^{k} m Ps_{n+1}^{(n+1-m)} PS_{n+k-m}^{(n)}`.
///
/// Terms with `m > n+1` have a negative Legendre–Stirling column and vanish.
pub fn triangular_sum_ls(k: u32, n: u32) -> Result<Integer> {
    check_k(k)?;
    check_n(n)?;
    let nums = Numbers::global();
    let mut total = Integer::zero();
    for m in 1..=k.min(n + 1) {
        let first = nums.legendre_stirling_first(n + 1, idx(n + 1, m))?;
        let second = nums.legendre_stirling_second(n + k - m, i64::from(n))?;
        total -= Integer::from(m) * first * second;
    }
    let divisor = Integer::one() << k;
    if (&total % &divisor).is_zero() {
        Ok(total / divisor)
    } else {
        Err(internal(format!(
            "triangular_sum_ls: {total} not divisible by 2^{k}"
        )))
    }
}

/// `T_1^k + … + T_n^k` as `(1/2^k) Σ_j C(k, j) S_{k+j}(n)` and as
/// `(1/2^k) Σ_j C(k, j) (B_{k+j+1}(n+1) - B_{k+j+1}(1)) / (k+j+1)`.
/// Both forms are evaluated and must agree.
pub fn triangular_sum_binomial(k: u32, n: u32) -> Result<Integer> {
    check_k(k)?;
    check_n(n)?;
    let nums = Numbers::global();
    let scale = pow2(-i64::from(k));
    let by_power_sums: Rational = (0..=k)
        .map(|j| {
            let q = PowerSumQuery { k: k + j, n, r: 1 };
            rat_int(binomial(k, j.into()) * s_brute(&q))
        })
        .sum::<Rational>()
        * &scale;
    let end = rat_int(Integer::from(n + 1));
    let one = Rational::one();
    let by_bernoulli: Rational = (0..=k)
        .map(|j| {
            let b = nums.bernoulli_polynomial(k + j + 1);
            rat_int(binomial(k, j.into())) * (b.eval(&end) - b.eval(&one))
                / rat_int(Integer::from(k + j + 1))
        })
        .sum::<Rational>()
        * &scale;
    if by_power_sums != by_bernoulli {
        return Err(internal(format!(
            "triangular_sum_binomial: power-sum form {by_power_sums} != Bernoulli form {by_bernoulli}"
        )));
    }
    expect_integer(&by_power_sums, "triangular_sum_binomial")
}

/// `Σ_{m=1}^{k} (-1)^{m-1} m C(n, m) C(n+k-m-1, k-m) - n`, identically zero.
pub fn ones_identity_residual(k: u32, n: u32) -> Result<Integer> {
    check_k(k)?;
    check_n(n)?;
    let lhs: Integer = (1..=k)
        .map(|m| {
            -sign(m.into())
                * Integer::from(m)
                * binomial(n, m.into())
                * binomial(n + k - m - 1, i64::from(k - m))
        })
        .sum();
    Ok(lhs - Integer::from(n))
}
