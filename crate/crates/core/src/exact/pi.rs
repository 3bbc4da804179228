use std::fmt;
use std::ops::Mul;

use num_traits::Zero;

use super::{fmt_rational, Rational};
use crate::error::{internal, Result};

/// The exact value `coeff * pi^(2 * half_exponent)`.
///
/// Only monomials are modeled: sums are defined between equal exponents and
/// fail otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiPowerValue {
    pub coeff: Rational,
    pub half_exponent: u32,
}

impl PiPowerValue {
    pub fn new(coeff: Rational, half_exponent: u32) -> Self {
        PiPowerValue {
            coeff,
            half_exponent,
        }
    }

    pub fn rational(coeff: Rational) -> Self {
        Self::new(coeff, 0)
    }

    pub fn zero(half_exponent: u32) -> Self {
        Self::new(Rational::zero(), half_exponent)
    }

    /// Power of pi in the value, `2 * half_exponent`.
    pub fn pi_exponent(&self) -> u32 {
        2 * self.half_exponent
    }

    pub fn checked_add(&self, rhs: &PiPowerValue) -> Result<PiPowerValue> {
        self.same_exponent(rhs)?;
        Ok(Self::new(&self.coeff + &rhs.coeff, self.half_exponent))
    }

    pub fn checked_sub(&self, rhs: &PiPowerValue) -> Result<PiPowerValue> {
        self.same_exponent(rhs)?;
        Ok(Self::new(&self.coeff - &rhs.coeff, self.half_exponent))
    }

    pub fn scale(&self, c: &Rational) -> PiPowerValue {
        Self::new(&self.coeff * c, self.half_exponent)
    }

    fn same_exponent(&self, rhs: &PiPowerValue) -> Result<()> {
        if self.half_exponent == rhs.half_exponent {
            Ok(())
        } else {
            Err(internal(format!(
                "cannot add pi^{} and pi^{} terms",
                self.pi_exponent(),
                rhs.pi_exponent()
            )))
        }
    }
}

impl Mul<&PiPowerValue> for &PiPowerValue {
    type Output = PiPowerValue;
    fn mul(self, rhs: &PiPowerValue) -> PiPowerValue {
        PiPowerValue::new(
            &self.coeff * &rhs.coeff,
            self.half_exponent + rhs.half_exponent,
        )
    }
}

impl fmt::Display for PiPowerValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.half_exponent == 0 {
            write!(f, "{}", fmt_rational(&self.coeff))
        } else {
            write!(f, "{} · π^{}", fmt_rational(&self.coeff), self.pi_exponent())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn addition_requires_equal_exponents() {
        let a = PiPowerValue::new(rat(1, 6), 1);
        let b = PiPowerValue::new(rat(1, 3), 1);
        assert_eq!(a.checked_add(&b).unwrap(), PiPowerValue::new(rat(1, 2), 1));
        let c = PiPowerValue::new(rat(1, 90), 2);
        assert!(matches!(a.checked_add(&c), Err(crate::Error::Internal(_))));
        assert!(a.checked_sub(&c).is_err());
    }

    #[test]
    fn multiplication_adds_exponents() {
        let a = PiPowerValue::new(rat(1, 6), 1);
        let c = PiPowerValue::new(rat(1, 90), 2);
        assert_eq!(&a * &c, PiPowerValue::new(rat(1, 540), 3));
        assert_eq!(PiPowerValue::rational(rat(3, 4)).to_string(), "3/4");
        assert_eq!(a.to_string(), "1/6 · π^2");
    }
}
