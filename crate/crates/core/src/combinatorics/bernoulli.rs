use num_traits::{One, Zero};

use super::binomial;
use crate::exact::{rat_int, Integer, Rational};

/// Next Bernoulli number from `Σ_{j=0}^{k} C(k+1, j) B_j = 0`, which yields
/// `B_1 = -1/2`.
pub(super) fn next_bernoulli(prev: &[Rational]) -> Rational {
    let k = prev.len() as u32;
    if k == 0 {
        return Rational::one();
    }
    let acc = prev
        .iter()
        .enumerate()
        .filter(|(_, b)| !b.is_zero())
        .fold(Rational::zero(), |acc, (j, b)| {
            acc + rat_int(binomial(k + 1, j as i64)) * b
        });
    -acc / rat_int(Integer::from(k + 1))
}
