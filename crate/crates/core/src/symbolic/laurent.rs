use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rational_string;
use crate::error::{domain, Result};

/// Laurent polynomial in one variable `Q` with rational coefficients,
/// optionally reduced modulo `Q^q - 1`.
///
/// Zero is the empty map. A polynomial without modulus whose only exponent is
/// zero (a scalar) combines freely with reduced polynomials of any modulus;
/// any other modulus mismatch is an error.
#[derive(Clone, Debug, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigRational>,
    modulus: Option<u64>,
}

impl LaurentPolynomial {
    pub fn zero_with(modulus: Option<u64>) -> Self {
        LaurentPolynomial {
            terms: BTreeMap::new(),
            modulus,
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: BigRational, exp: i64) -> Self {
        let mut p = Self::zero_with(None);
        p.add_term(exp, c);
        p
    }

    /// `Q^exp`.
    pub fn q_power(exp: i64) -> Self {
        Self::monomial(BigRational::one(), exp)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigRational)>) -> Self {
        let mut p = Self::zero_with(None);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Builds a polynomial from integer coefficients, e.g. `[(0, 28), (1, 4), (-1, 4)]`.
    pub fn from_integer_terms(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|&(e, c)| (e, BigRational::from_integer(BigInt::from(c)))),
        )
    }

    /// Reduces every exponent into `[0, q)`.
    pub fn with_modulus(&self, q: u64) -> Result<Self> {
        if q == 0 {
            return domain("modulus must be at least 1");
        }
        if let Some(m) = self.modulus {
            if m != q && !self.is_scalar() {
                return domain(format!("cannot re-reduce a mod-{m} polynomial modulo {q}"));
            }
        }
        let mut p = Self::zero_with(Some(q));
        for (e, c) in &self.terms {
            p.add_term(*e, c.clone());
        }
        Ok(p)
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn coefficient(&self, exp: i64) -> BigRational {
        let key = match self.modulus {
            Some(q) => exp.rem_euclid(q as i64),
            None => exp,
        };
        self.terms
            .get(&key)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when only the exponent-zero term can be nonzero.
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    /// Sum of all coefficients (value at `Q = 1`).
    pub fn coefficient_sum(&self) -> BigRational {
        self.terms.values().cloned().sum()
    }

    /// Lifts a reduced polynomial back to exponents in `(-q/2, q/2]`.
    pub fn recentred(&self) -> Self {
        let Some(q) = self.modulus else {
            return self.clone();
        };
        let q = q as i64;
        Self::from_terms(self.terms.iter().map(|(&e, c)| {
            let e = if e > q / 2 { e - q } else { e };
            (e, c.clone())
        }))
    }

    /// Integer coefficients, if every coefficient is integral.
    pub fn integer_terms(&self) -> Option<BTreeMap<i64, BigInt>> {
        self.terms
            .iter()
            .map(|(&e, c)| c.is_integer().then(|| (e, c.to_integer())))
            .collect()
    }

    fn add_term(&mut self, exp: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let key = match self.modulus {
            Some(q) => exp.rem_euclid(q as i64),
            None => exp,
        };
        let slot = self.terms.entry(key).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn joint_modulus(&self, other: &Self) -> Result<Option<u64>> {
        match (self.modulus, other.modulus) {
            (a, b) if a == b => Ok(a),
            (None, b) if self.is_scalar() => Ok(b),
            (a, None) if other.is_scalar() => Ok(a),
            (a, b) => domain(format!("modulus mismatch: {a:?} vs {b:?}")),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut p = Self::zero_with(self.joint_modulus(other)?);
        for (e, c) in self.terms.iter().chain(other.terms.iter()) {
            p.add_term(*e, c.clone());
        }
        Ok(p)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut p = Self::zero_with(self.joint_modulus(other)?);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                p.add_term(ea + eb, ca * cb);
            }
        }
        Ok(p)
    }

    pub fn scaled(&self, r: &BigRational) -> Self {
        let mut p = Self::zero_with(self.modulus);
        for (e, c) in &self.terms {
            p.add_term(*e, c * r);
        }
        p
    }
}

/// Product of two Laurent polynomials; exponents are reduced when a modulus is set.
pub fn laurent_mul(a: &LaurentPolynomial, b: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    a.checked_mul(b)
}

impl PartialEq for LaurentPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
            && (self.modulus == other.modulus || (self.is_scalar() && other.is_scalar()))
    }
}

impl Eq for LaurentPolynomial {}

impl Add for LaurentPolynomial {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).expect("Laurent polynomial addition")
    }
}

impl Sub for LaurentPolynomial {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_add(&-rhs)
            .expect("Laurent polynomial subtraction")
    }
}

impl Mul for LaurentPolynomial {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs)
            .expect("Laurent polynomial multiplication")
    }
}

impl Neg for LaurentPolynomial {
    type Output = Self;
    fn neg(self) -> Self {
        self.scaled(&-BigRational::one())
    }
}

impl super::Ring for LaurentPolynomial {
    fn zero() -> Self {
        Self::zero_with(None)
    }
    fn one() -> Self {
        Self::constant(<BigRational as One>::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_rational(r: BigRational) -> Self {
        Self::constant(r)
    }
    fn scale(&self, r: &BigRational) -> Self {
        self.scaled(r)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // constant first, then ascending positive powers, then negative powers
        let mut order: Vec<(&i64, &BigRational)> = self.terms.iter().collect();
        order.sort_by_key(|(e, _)| (**e != 0, **e < 0, e.abs()));
        for (idx, (&e, c)) in order.into_iter().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if idx == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let coeff = rational_string(&mag);
            match e {
                0 => write!(f, "{coeff}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{coeff}")?;
                    }
                    if e == 1 {
                        write!(f, "Q")?;
                    } else {
                        write!(f, "Q^{e}")?;
                    }
                }
            }
        }
        if let Some(q) = self.modulus {
            write!(f, " (mod Q^{q} - 1)")?;
        }
        Ok(())
    }
}
