//! Decimal rendering of `q · π^{2k}`. Presentation only; nothing in the
//! library computes with it.

use num_integer::Integer as _;
use num_traits::{Pow, Signed};

use crate::exact::{parse_rational, Integer, PiPowerValue, Rational};

/// Pi to 50 decimal places.
const PI_50: &str = "314159265358979323846264338327950288419716939937510/100000000000000000000000000000000000000000000000000";

/// `value` rounded to `digits` decimal places.
pub fn render_decimal(value: &PiPowerValue, digits: u32) -> String {
    let pi = parse_rational(PI_50).expect("valid pi constant");
    let pi_sq = &pi * &pi;
    let x = &value.coeff * Pow::pow(&pi_sq, value.half_exponent);
    fixed_point(&x, digits)
}

fn fixed_point(x: &Rational, digits: u32) -> String {
    let scale = Integer::from(10u8).pow(digits);
    let scaled = x.abs() * Rational::from_integer(scale.clone());
    let rounded = scaled.round().to_integer();
    let (int_part, frac) = rounded.div_rem(&scale);
    let sign = if x.is_negative() && rounded.is_positive() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{int_part}");
    }
    format!("{sign}{int_part}.{:0>width$}", frac.to_string(), width = digits as usize)
}
