//! Elementary (`σ_m`), complete homogeneous (`h_m`) and power-sum (`p_m`)
//! symmetric functions over finite exact sequences, Newton–Girard forward
//! substitution and the generalized Lang formula
//! `p_k = Σ_{m=1}^{k} (-1)^{m-1} m σ_m h_{k-m}`.
//!
//! All values are [`Rational`], including integer-valued sequences, so the
//! inverse-square truncations share the same code path.

use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::exact::{rat, rat_int, Integer, Rational, RationalPolynomial};

/// Generator of a finite variable set `{x_1, …, x_n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SequenceSpec {
    /// `r, r+1, …, n`; empty when `r > n`.
    NaturalsFrom { r: u32, n: u32 },
    /// `n` copies of 1.
    Ones(u32),
    /// `1², 2², …, n²`.
    Squares(u32),
    /// `1², 3², …, (2n-1)²`.
    OddSquares(u32),
    /// `2, 6, …, n(n+1)`.
    DoubledTriangulars(u32),
    /// `1/1², 1/2², …, 1/n²`.
    InverseSquares(u32),
    Explicit(Vec<Rational>),
}

impl SequenceSpec {
    /// `1, 2, …, n`.
    pub fn naturals(n: u32) -> Self {
        SequenceSpec::NaturalsFrom { r: 1, n }
    }

    pub fn values(&self) -> Vec<Rational> {
        let each = |n: u32, f: fn(Integer) -> Rational| (1..=n).map(|i| f(Integer::from(i))).collect();
        match self {
            SequenceSpec::NaturalsFrom { r, n } => {
                (*r..=*n).map(|i| rat_int(Integer::from(i))).collect()
            }
            SequenceSpec::Ones(n) => vec![Rational::one(); *n as usize],
            SequenceSpec::Squares(n) => each(*n, |i| rat_int(&i * &i)),
            SequenceSpec::OddSquares(n) => each(*n, |i| {
                let odd = 2 * i - 1;
                rat_int(&odd * &odd)
            }),
            SequenceSpec::DoubledTriangulars(n) => each(*n, |i| rat_int(&i * (&i + 1))),
            SequenceSpec::InverseSquares(n) => {
                each(*n, |i| Rational::new(Integer::one(), &i * &i))
            }
            SequenceSpec::Explicit(xs) => xs.clone(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            SequenceSpec::NaturalsFrom { r, n } => (*n as usize + 1).saturating_sub(*r as usize),
            SequenceSpec::Ones(n)
            | SequenceSpec::Squares(n)
            | SequenceSpec::OddSquares(n)
            | SequenceSpec::DoubledTriangulars(n)
            | SequenceSpec::InverseSquares(n) => *n as usize,
            SequenceSpec::Explicit(xs) => xs.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `σ_0..σ_M`, `h_0..h_M` and `p_1..p_M` of one sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymTriple {
    pub sigma: Vec<Rational>,
    pub h: Vec<Rational>,
    pub p: Vec<Rational>,
    pub max_order: usize,
}

impl SymTriple {
    pub fn compute(xs: &SequenceSpec, max_order: usize) -> Self {
        let values = xs.values();
        SymTriple {
            sigma: elementary_of(&values, max_order),
            h: complete_of(&values, max_order),
            p: power_sums_of(&values, max_order),
            max_order,
        }
    }

    /// `Σ_{i=0}^{k} (-1)^i σ_i h_{k-i}` for every `k ≤ max_order`.
    pub fn convolution(&self) -> Vec<Rational> {
        (0..=self.max_order)
            .map(|k| alternating_convolution(&self.sigma, &self.h, k))
            .collect()
    }
}

/// Product DP over the variables: `σ_m ← σ_m + x·σ_{m-1}`, updating `m`
/// downward so each variable enters once.
pub(crate) fn elementary_of(values: &[Rational], max_order: usize) -> Vec<Rational> {
    let mut sigma = vec![Rational::zero(); max_order + 1];
    sigma[0] = Rational::one();
    for (i, x) in values.iter().enumerate() {
        let top = max_order.min(i + 1);
        for m in (1..=top).rev() {
            let t = x * &sigma[m - 1];
            sigma[m] += t;
        }
    }
    sigma
}

/// `h_m ← h_m + x·h_{m-1}` with `m` increasing, so the variable may repeat.
pub(crate) fn complete_of(values: &[Rational], max_order: usize) -> Vec<Rational> {
    let mut h = vec![Rational::zero(); max_order + 1];
    h[0] = Rational::one();
    for x in values {
        for m in 1..=max_order {
            let t = x * &h[m - 1];
            h[m] += t;
        }
    }
    h
}

fn power_sums_of(values: &[Rational], max_order: usize) -> Vec<Rational> {
    (1..=max_order)
        .map(|m| values.iter().map(|x| Rational::pow(x, m as i32)).sum())
        .collect()
}

fn alternating_convolution(sigma: &[Rational], h: &[Rational], k: usize) -> Rational {
    (0..=k)
        .map(|i| {
            let t = &sigma[i] * &h[k - i];
            if i % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum()
}

/// `[σ_0, …, σ_M]`; entries past the number of variables are zero.
pub fn elementary_prefix(xs: &SequenceSpec, max_order: usize) -> Vec<Rational> {
    elementary_of(&xs.values(), max_order)
}

/// `[h_0, …, h_M]`.
pub fn complete_prefix(xs: &SequenceSpec, max_order: usize) -> Vec<Rational> {
    complete_of(&xs.values(), max_order)
}

/// `[p_1, …, p_M]` by direct exponentiation. This is the brute-force oracle
/// the other routes are checked against.
pub fn power_sums_direct(xs: &SequenceSpec, max_order: usize) -> Vec<Rational> {
    power_sums_of(&xs.values(), max_order)
}

/// `p_k` from the generalized Lang formula.
pub fn power_sum_via_lang(xs: &SequenceSpec, k: usize) -> Result<Rational> {
    if k == 0 {
        return Err(domain("power_sum_via_lang requires k >= 1"));
    }
    let values = xs.values();
    let sigma = elementary_of(&values, k);
    let h = complete_of(&values, k);
    Ok((1..=k)
        .map(|m| {
            let t = Rational::from_integer(Integer::from(m)) * &sigma[m] * &h[k - m];
            if m % 2 == 1 {
                t
            } else {
                -t
            }
        })
        .sum())
}

/// Solves the unit lower-triangular Newton–Girard system for `p_1..p_K`:
/// `p_m = -m σ̄_m - Σ_{j=1}^{m-1} σ̄_{m-j} p_j` with `σ̄_j = (-1)^j σ_j`.
///
/// `sigma` starts at `σ_0`, which must be 1; missing tail entries are taken
/// as zero, the usual convention past the number of variables.
pub fn newton_girard_power_sums(sigma: &[Rational], count: usize) -> Result<Vec<Rational>> {
    if sigma.first().map_or(true, |s0| !s0.is_one()) {
        return Err(domain("newton_girard_power_sums requires sigma[0] = 1"));
    }
    let bar = |j: usize| -> Rational {
        let s = sigma.get(j).cloned().unwrap_or_else(Rational::zero);
        if j % 2 == 0 {
            s
        } else {
            -s
        }
    };
    let mut p: Vec<Rational> = Vec::with_capacity(count);
    for m in 1..=count {
        let mut rhs = -(rat(m as i64, 1) * bar(m));
        for j in 1..m {
            rhs -= bar(m - j) * &p[j - 1];
        }
        p.push(rhs);
    }
    Ok(p)
}

/// `Σ_{i=0}^{k} (-1)^i σ_i h_{k-i}`, which is `δ_{k,0}` for every sequence.
pub fn orthogonality_residual(xs: &SequenceSpec, k: usize) -> Rational {
    let values = xs.values();
    alternating_convolution(&elementary_of(&values, k), &complete_of(&values, k), k)
}

/// `P_n(x) = Σ_{j=1}^{n} Π_{l≠j} (1 - l x)`, expanded literally.
pub fn pn_polynomial_coeffs(n: u32) -> Result<RationalPolynomial> {
    if n == 0 {
        return Err(domain("pn_polynomial_coeffs requires n >= 1"));
    }
    let factor = |l: u32| RationalPolynomial::linear(Rational::one(), rat(-i64::from(l), 1));
    let mut total = RationalPolynomial::zero();
    for j in 1..=n {
        let term = (1..=n)
            .filter(|&l| l != j)
            .fold(RationalPolynomial::constant(Rational::one()), |acc, l| {
                &acc * &factor(l)
            });
        total = &total + &term;
    }
    Ok(total)
}
