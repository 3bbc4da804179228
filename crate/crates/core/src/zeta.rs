//! Even zeta values `ζ(2k)` as exact rational multiples of `π^{2k}`, from
//! the recursion obtained by feeding the inverse-square symmetric functions
//! into the generalized Lang formula, plus the Bernoulli identities that
//! come with it.

use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::combinatorics::{binomial, Numbers};
use crate::error::{domain, internal, Result};
use crate::exact::{factorial, pow2, rat_int, sign, Integer, PiPowerValue, Rational};
use crate::memo::MemoTable;

/// `ζ(2k) = value.coeff · π^{2k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaEven {
    pub k: u32,
    pub value: PiPowerValue,
}

impl ZetaEven {
    pub fn coeff(&self) -> &Rational {
        &self.value.coeff
    }
}

fn zeta_memo() -> &'static MemoTable<u32, ZetaEven> {
    static MEMO: OnceLock<MemoTable<u32, ZetaEven>> = OnceLock::new();
    MEMO.get_or_init(MemoTable::new)
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        Err(domain("k >= 1 required"))
    } else {
        Ok(())
    }
}

/// `σ_k(1/1², 1/2², …) = π^{2k} / (2k+1)!`.
pub fn sigma_inverse_squares(k: u32) -> PiPowerValue {
    PiPowerValue::new(Rational::new(Integer::one(), factorial(2 * k + 1)), k)
}

/// `h_k(1/1², 1/2², …) = ((2^{2k} - 2) / 2^{2k-1}) ζ(2k)`, and `h_0 = 1`.
pub fn h_inverse_squares(k: u32) -> Result<PiPowerValue> {
    if k == 0 {
        return Ok(PiPowerValue::rational(Rational::one()));
    }
    let factor = (pow2(2 * i64::from(k)) - pow2(1)) / pow2(2 * i64::from(k) - 1);
    Ok(zeta_even_exact(k)?.value.scale(&factor))
}

/// `ζ(2k) = (-1)^{k-1} k π^{2k}/(2k+1)!
///   + Σ_{m=1}^{k-1} (-1)^{m-1} (2m π^{2m}/(2m+1)!) (1 - 2^{2(m-k)+1}) ζ(2k-2m)`.
pub fn zeta_even_exact(k: u32) -> Result<ZetaEven> {
    check_k(k)?;
    if let Some(z) = zeta_memo().get(&k) {
        return Ok(z);
    }
    let lead = sigma_inverse_squares(k).scale(&rat_int(-sign(k.into()) * Integer::from(k)));
    let mut total = lead;
    for m in 1..k {
        // 1 - 2^{2(m-k)+1}, a negative power of two
        let damping = Rational::one() - pow2(2 * (i64::from(m) - i64::from(k)) + 1);
        let weight = rat_int(-sign(m.into()) * Integer::from(2 * m)) * damping;
        let term = &sigma_inverse_squares(m).scale(&weight) * &zeta_even_exact(k - m)?.value;
        total = total.checked_add(&term)?;
    }
    if total.half_exponent != k {
        return Err(internal(format!("zeta({}) carries pi^{}", 2 * k, total.pi_exponent())));
    }
    Ok(zeta_memo().insert(k, ZetaEven { k, value: total }))
}

/// `p_k - Σ_{m=1}^{k} (-1)^{m-1} m σ_m h_{k-m}` over the inverse squares,
/// with `p_k = ζ(2k)`; the coefficient of `π^{2k}`, identically zero.
pub fn h_inverse_squares_check(k: u32) -> Result<Rational> {
    let lhs = zeta_even_exact(k)?.value;
    let mut rhs = PiPowerValue::zero(k);
    for m in 1..=k {
        let weight = rat_int(-sign(m.into()) * Integer::from(m));
        let term = &sigma_inverse_squares(m).scale(&weight) * &h_inverse_squares(k - m)?;
        rhs = rhs.checked_add(&term)?;
    }
    Ok(lhs.checked_sub(&rhs)?.coeff)
}

fn central_binomial_term(k: u32) -> Rational {
    Rational::new(
        Integer::one(),
        Integer::from(k + 1) * binomial(2 * k + 2, i64::from(k) + 1),
    )
}

/// `Σ_{j=0}^{k} (-1)^j C(k,j) B_{k+j+1}/(k+j+1) - 1/((k+1) C(2k+2, k+1))`.
pub fn bernoulli_binomial_identity(k: u32) -> Result<Rational> {
    check_k(k)?;
    let nums = Numbers::global();
    let lhs: Rational = (0..=k)
        .map(|j| {
            rat_int(sign(j.into()) * binomial(k, j.into())) * nums.bernoulli_number(k + j + 1)
                / rat_int(Integer::from(k + j + 1))
        })
        .sum();
    Ok(lhs - central_binomial_term(k))
}

/// Left minus right side of
/// `-Σ_{m=1}^{k} m Ps_{n+1}^{(n+1-m)} PS_{n+k-m}^{(n)}
///   = (-1)^k/((k+1) C(2k+2,k+1)) + Σ_{j=0}^{k} C(k,j) B_{k+j+1}(n+1)/(k+j+1)`.
pub fn merca_ls_bernoulli_identity(k: u32, n: u32) -> Result<Rational> {
    check_k(k)?;
    if n == 0 {
        return Err(domain("n >= 1 required"));
    }
    let nums = Numbers::global();
    let mut lhs = Integer::zero();
    // Ps_{n+1}^{(j)} vanishes for j < 0, i.e. m > n + 1
    for m in 1..=k.min(n + 1) {
        let first = nums.legendre_stirling_first(n + 1, i64::from(n + 1) - i64::from(m))?;
        let second = nums.legendre_stirling_second(n + k - m, i64::from(n))?;
        lhs -= Integer::from(m) * first * second;
    }
    let at = rat_int(Integer::from(n + 1));
    let bernoulli_sum: Rational = (0..=k)
        .map(|j| {
            rat_int(binomial(k, j.into())) * nums.bernoulli_polynomial(k + j + 1).eval(&at)
                / rat_int(Integer::from(k + j + 1))
        })
        .sum();
    let rhs = rat_int(sign(k.into())) * central_binomial_term(k) + bernoulli_sum;
    Ok(rat_int(lhs) - rhs)
}

/// `B_{2k}` from
/// `B_{2k} = (2/(2k+1)) Σ_{j=1}^{k} j C(2k+1, 2j+1) (1/2^{2k-1} - 1/2^{2j}) B_{2k-2j}`
/// alone, starting from `B_0 = 1`.
pub fn bernoulli_even_recursion(k: u32) -> Result<Rational> {
    check_k(k)?;
    // even[i] = B_{2i}
    let mut even: Vec<Rational> = vec![Rational::one()];
    for kk in 1..=k {
        let sum: Rational = (1..=kk)
            .map(|j| {
                let weight = pow2(-(2 * i64::from(kk) - 1)) - pow2(-2 * i64::from(j));
                rat_int(Integer::from(j) * binomial(2 * kk + 1, i64::from(2 * j + 1)))
                    * weight
                    * &even[(kk - j) as usize]
            })
            .sum();
        even.push(sum * Rational::new(Integer::from(2), Integer::from(2 * kk + 1)));
    }
    Ok(even.pop().expect("k >= 1"))
}
