//! Exact power sums of integers and the symmetric-function identities around
//! them: Lang's formula and its refinement, Newton–Girard recurrences,
//! r-Stirling, central factorial and Legendre–Stirling specializations,
//! Bernoulli identities and even zeta values as rational multiples of
//! `π^{2k}`.

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod exact;
pub mod memo;
pub mod powersums;
pub mod symfuncs;
pub mod verify;
pub mod zeta;

pub use error::{Error, Result};
pub use exact::{Integer, PiPowerValue, Rational, RationalPolynomial};
