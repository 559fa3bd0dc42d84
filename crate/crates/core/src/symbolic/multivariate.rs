use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rational_string;

/// A level-indexed symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// Spectral function `s_k`.
    S(u32),
    /// Diagonal (fermionic) weight `s~_k`.
    STilde(u32),
    /// Superdiagonal hopping `f_k`.
    F(u32),
    /// Subdiagonal hopping `g_k`.
    G(u32),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::S(k) => write!(f, "s{k}"),
            Var::STilde(k) => write!(f, "t{k}"),
            Var::F(k) => write!(f, "f{k}"),
            Var::G(k) => write!(f, "g{k}"),
        }
    }
}

/// Sorted `(variable, exponent)` pairs with positive exponents.
pub type Monomial = Vec<(Var, u32)>;

/// Sparse commutative polynomial over the rationals in [`Var`] symbols.
///
/// Only ring operations are provided; it exists so the determinant, trace and
/// cluster-coefficient code can run on fully symbolic inputs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiPolynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

fn mul_monomials(a: &Monomial, b: &Monomial) -> Monomial {
    let mut merged: BTreeMap<Var, u32> = BTreeMap::new();
    for &(v, e) in a.iter().chain(b.iter()) {
        *merged.entry(v).or_insert(0) += e;
    }
    merged.into_iter().collect()
}

impl MultiPolynomial {
    pub fn var(v: Var) -> Self {
        Self::term(BigRational::one(), &[(v, 1)])
    }

    /// `c * prod v^e`; repeated variables are merged.
    pub fn term(c: BigRational, factors: &[(Var, u32)]) -> Self {
        let mut p = Self::default();
        let mono = mul_monomials(
            &factors.iter().copied().filter(|&(_, e)| e > 0).collect(),
            &Vec::new(),
        );
        p.add_term(mono, c);
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, mono: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(mono.clone())
            .or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&mono);
        }
    }
}

impl Add for MultiPolynomial {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for MultiPolynomial {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for MultiPolynomial {
    type Output = Self;
    fn neg(self) -> Self {
        MultiPolynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul for MultiPolynomial {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = MultiPolynomial::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(mul_monomials(ma, mb), ca * cb);
            }
        }
        out
    }
}

impl super::Ring for MultiPolynomial {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::from_rational(<BigRational as One>::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_rational(r: BigRational) -> Self {
        let mut p = Self::default();
        p.add_term(Vec::new(), r);
        p
    }
    fn scale(&self, r: &BigRational) -> Self {
        let mut p = Self::default();
        for (m, c) in &self.terms {
            p.add_term(m.clone(), c * r);
        }
        p
    }
}

impl fmt::Display for MultiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (mono, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || mono.is_empty() {
                factors.push(rational_string(&mag));
            }
            for (v, e) in mono {
                factors.push(if *e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                });
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutative_products_merge() {
        let a = MultiPolynomial::var(Var::S(1)) + MultiPolynomial::var(Var::S(2));
        let b = MultiPolynomial::var(Var::S(2)) - MultiPolynomial::var(Var::S(1));
        let prod = a.clone() * b.clone();
        assert_eq!(prod, b * a);
        // (s1 + s2)(s2 - s1) = s2^2 - s1^2
        let expected = MultiPolynomial::term(BigRational::one(), &[(Var::S(2), 2)])
            - MultiPolynomial::term(BigRational::one(), &[(Var::S(1), 2)]);
        assert_eq!(prod, expected);
        assert_eq!(prod.to_string(), "-s1^2 + s2^2");
    }
}
