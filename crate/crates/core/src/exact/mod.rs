//! Exact arithmetic substrate: big integers, lowest-terms rationals, dense
//! rational polynomials and rational multiples of even powers of pi.

mod pi;
mod poly;

pub use pi::PiPowerValue;
pub use poly::{poly_eval, RationalPolynomial};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::error::{domain, internal, Result};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Exact rational, always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Builds `num / den` in lowest terms with a positive denominator.
pub fn rational_normalize(num: Integer, den: Integer) -> Result<Rational> {
    if den.is_zero() {
        return Err(domain("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

pub fn rat_int(v: Integer) -> Rational {
    Rational::from_integer(v)
}

/// Returns the integer value of `q`, or an internal error naming `what` if
/// `q` has a nontrivial denominator.
pub fn expect_integer(q: &Rational, what: &str) -> Result<Integer> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(internal(format!("{what}: expected an integer, got {q}")))
    }
}

/// `(-1)^m` as a sign multiplier.
pub fn sign(m: u64) -> Integer {
    if m % 2 == 0 {
        Integer::one()
    } else {
        -Integer::one()
    }
}

pub fn factorial(n: u32) -> Integer {
    (2..=n).fold(Integer::one(), |acc, i| acc * i)
}

/// `2^e` as a rational for any signed exponent.
pub fn pow2(e: i64) -> Rational {
    let p = Integer::from(2u8).pow(e.unsigned_abs());
    if e >= 0 {
        rat_int(p)
    } else {
        Rational::new(Integer::one(), p)
    }
}

/// Formats a rational as `p/q`, or `p` when the denominator is 1.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse = |t: &str| {
        t.trim()
            .parse::<Integer>()
            .map_err(|_| domain(format!("not a rational: {s:?}")))
    };
    match s.split_once('/') {
        Some((n, d)) => rational_normalize(parse(n)?, parse(d)?),
        None => Ok(rat_int(parse(s)?)),
    }
}
