//! Exact arithmetic kernel.
//!
//! Everything downstream is generic over [`Ring`], a commutative ring that is
//! also a Q-algebra (it can be scaled by rationals). Three carriers implement it:
//! [`BigRational`] for numeric verification, [`LaurentPolynomial`] for
//! expressions in the flux variable `Q`, and [`MultiPolynomial`] for fully
//! symbolic level variables (`s_k`, `s~_k`, `f_k`, `g_k`).

mod laurent;
mod multivariate;
mod series;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use laurent::{laurent_mul, LaurentPolynomial};
pub use multivariate::{Monomial, MultiPolynomial, Var};
pub use series::{series_log, TruncatedPowerSeries};

/// A commutative ring containing the rationals.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: BigRational) -> Self;

    fn from_integer(n: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(n))
    }

    fn scale(&self, r: &BigRational) -> Self {
        self.clone() * Self::from_rational(r.clone())
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(r: BigRational) -> Self {
        r
    }
    fn scale(&self, r: &BigRational) -> Self {
        self * r
    }
    fn pow(&self, exp: u32) -> Self {
        num_traits::pow(self.clone(), exp as usize)
    }
}

/// Binomial coefficient with the combinatorial conventions used throughout:
/// zero when `k < 0`, `n < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, t| acc * BigInt::from(t))
}

/// Multinomial `total! / (parts! * (total - sum parts)!)`; zero if any part is
/// negative or the parts exceed the total.
pub fn multinomial(total: i64, parts: &[i64]) -> BigInt {
    let used: i64 = parts.iter().sum();
    if total < 0 || parts.iter().any(|&p| p < 0) || used > total {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    let mut remaining = total;
    for &p in parts {
        acc *= binomial(remaining, p);
        remaining -= p;
    }
    acc
}

/// Converts an exact rational that must be an integer. A fractional value is a
/// consistency violation, never rounded.
pub fn expect_integer(r: &BigRational, what: &str) -> Result<BigInt> {
    if r.denom().is_one() {
        Ok(r.numer().clone())
    } else {
        Err(Error::Consistency(format!(
            "{what} = {r} is not an integer"
        )))
    }
}

/// Renders a rational as `"num/den"`, or `"num"` when the denominator is one.
pub fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"num"` or `"num/den"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Domain(format!("cannot parse rational {s:?}"));
    let (num, den) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}
