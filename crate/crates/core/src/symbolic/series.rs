use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::Ring;
use crate::error::{domain, Result};

/// Power series in `z` truncated at an explicit order `N`; always holds
/// exactly `N + 1` coefficients and discards degrees above `N`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedPowerSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedPowerSeries<R> {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients remain.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        TruncatedPowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![R::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order)
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(
            self.order(),
            other.order(),
            "series truncation orders must match"
        );
    }

    /// Formal logarithm of a series with constant term one, via
    /// `L_n = a_n - (1/n) * sum_{k<n} k L_k a_{n-k}`.
    #[allow(clippy::needless_range_loop)]
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != R::one() {
            return domain("series logarithm needs constant term 1");
        }
        let order = self.order();
        let mut out: Vec<R> = vec![R::zero(); order + 1];
        for n in 1..=order {
            let mut acc = R::zero();
            for k in 1..n {
                if out[k].is_zero() || self.coeffs[n - k].is_zero() {
                    continue;
                }
                acc = acc + (out[k].clone() * self.coeffs[n - k].clone()).scale(&int(k));
            }
            out[n] = self.coeffs[n].clone() - acc.scale(&BigRational::new(1.into(), n.into()));
        }
        Ok(TruncatedPowerSeries { coeffs: out })
    }

    /// Formal exponential of a series with zero constant term, via
    /// `n E_n = sum_{k=1}^n k B_k E_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return domain("series exponential needs constant term 0");
        }
        let order = self.order();
        let mut out: Vec<R> = vec![R::zero(); order + 1];
        out[0] = R::one();
        for n in 1..=order {
            let mut acc = R::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc + (self.coeffs[k].clone() * out[n - k].clone()).scale(&int(k));
            }
            out[n] = acc.scale(&BigRational::new(1.into(), n.into()));
        }
        Ok(TruncatedPowerSeries { coeffs: out })
    }
}

impl TruncatedPowerSeries<BigRational> {
    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0].clone();
        if c0 == BigRational::from_integer(0.into()) {
            return domain("series inverse needs a nonzero constant term");
        }
        let order = self.order();
        let inv0 = BigRational::from_integer(1.into()) / c0;
        let mut out = vec![BigRational::from_integer(0.into()); order + 1];
        out[0] = inv0.clone();
        for n in 1..=order {
            let mut acc = BigRational::from_integer(0.into());
            for k in 1..=n {
                acc += &self.coeffs[k] * &out[n - k];
            }
            out[n] = -acc * &inv0;
        }
        Ok(TruncatedPowerSeries { coeffs: out })
    }
}

/// `log s`, truncated at the order of `s`.
pub fn series_log<R: Ring>(s: &TruncatedPowerSeries<R>) -> Result<TruncatedPowerSeries<R>> {
    s.log()
}

fn int(k: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

impl<R: Ring> Add for TruncatedPowerSeries<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check_order(&rhs);
        TruncatedPowerSeries {
            coeffs: self
                .coeffs
                .into_iter()
                .zip(rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<R: Ring> Sub for TruncatedPowerSeries<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.check_order(&rhs);
        TruncatedPowerSeries {
            coeffs: self
                .coeffs
                .into_iter()
                .zip(rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<R: Ring> Mul for TruncatedPowerSeries<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check_order(&rhs);
        let order = self.order();
        let mut out = vec![R::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncatedPowerSeries { coeffs: out }
    }
}
