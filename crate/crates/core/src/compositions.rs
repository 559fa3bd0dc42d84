//! g-compositions and (1,g)-compositions.
//!
//! A g-composition of `n` is an ordered tuple `(l_1, ..., l_j)` of nonnegative
//! integers summing to `n`, with `l_1, l_j > 0` and at most `g - 2` zeros in a
//! row. A (1,g)-composition of `N` adds `j + g - 1` nonnegative "tilde" parts so
//! that `sum(tilde) + g * sum(parts) = N`; the trivial composition has no
//! parts and a single tilde part equal to `N`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use crate::error::{domain, Result};
use crate::symbolic::{binomial, TruncatedPowerSeries};

/// An ordered tuple of up-step counts per floor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(into = "Vec<u32>")]
pub struct GComposition {
    parts: Vec<u32>,
    #[serde(skip)]
    g: u32,
}

impl From<GComposition> for Vec<u32> {
    fn from(c: GComposition) -> Vec<u32> {
        c.parts
    }
}

pub(crate) fn check_order(g: u32) -> Result<()> {
    if g < 2 {
        return domain(format!("exclusion order g must be at least 2, got {g}"));
    }
    Ok(())
}

fn check_g_parts(parts: &[u32], g: u32) -> Result<()> {
    check_order(g)?;
    if parts.is_empty() {
        return domain("a g-composition needs at least one part");
    }
    if parts[0] == 0 || parts[parts.len() - 1] == 0 {
        return domain(format!("first and last parts must be positive: {parts:?}"));
    }
    let mut run = 0;
    for &p in parts {
        run = if p == 0 { run + 1 } else { 0 };
        if run > g - 2 {
            return domain(format!(
                "{parts:?} has more than {} consecutive zero parts",
                g - 2
            ));
        }
    }
    Ok(())
}

impl GComposition {
    pub fn new(parts: Vec<u32>, g: u32) -> Result<Self> {
        check_g_parts(&parts, g)?;
        Ok(GComposition { parts, g })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    /// Number of parts `j`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer `n` being composed.
    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Re-checks the type invariants.
    pub fn validate(&self) -> Result<()> {
        check_g_parts(&self.parts, self.g)
    }
}

impl fmt::Display for GComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Horizontal-step counts (`tilde`) and up-step counts (`parts`) per floor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MixedComposition {
    tilde: Vec<u32>,
    parts: Vec<u32>,
    #[serde(skip)]
    g: u32,
}

impl MixedComposition {
    pub fn new(tilde: Vec<u32>, parts: Vec<u32>, g: u32) -> Result<Self> {
        check_order(g)?;
        if parts.is_empty() {
            if tilde.len() != 1 || tilde[0] == 0 {
                return domain(format!(
                    "the trivial composition has exactly one positive tilde part, got {tilde:?}"
                ));
            }
        } else {
            check_g_parts(&parts, g)?;
            let want = parts.len() + g as usize - 1;
            if tilde.len() != want {
                return domain(format!(
                    "expected {want} tilde parts for j = {}, got {}",
                    parts.len(),
                    tilde.len()
                ));
            }
        }
        Ok(MixedComposition { tilde, parts, g })
    }

    /// The trivial composition `(N)` with no up steps.
    pub fn trivial(total: u32, g: u32) -> Result<Self> {
        Self::new(vec![total], Vec::new(), g)
    }

    pub fn tilde(&self) -> &[u32] {
        &self.tilde
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn is_trivial(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer `N = sum(tilde) + g * sum(parts)`.
    pub fn total(&self) -> u32 {
        self.tilde.iter().sum::<u32>() + self.g * self.parts.iter().sum::<u32>()
    }

    /// Number of floors spanned: `j + g - 1`, or 1 for the trivial composition.
    pub fn floors(&self) -> usize {
        self.tilde.len()
    }

    /// The up-step parts as a g-composition, if nontrivial.
    pub fn bound_parts(&self) -> Option<GComposition> {
        (!self.parts.is_empty()).then(|| GComposition {
            parts: self.parts.clone(),
            g: self.g,
        })
    }

    pub fn validate(&self) -> Result<()> {
        Self::new(self.tilde.clone(), self.parts.clone(), self.g).map(|_| ())
    }

    /// `(l~_1, l_1, l~_2, l_2, ...)`, the key of the canonical ordering.
    pub fn interleaved(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.tilde.len() + self.parts.len());
        for (i, t) in self.tilde.iter().enumerate() {
            out.push(*t);
            if let Some(p) = self.parts.get(i) {
                out.push(*p);
            }
        }
        out
    }
}

impl fmt::Display for MixedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tilde: Vec<String> = self.tilde.iter().map(u32::to_string).collect();
        if self.parts.is_empty() {
            return write!(f, "({})", tilde.join(","));
        }
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({};{})", tilde.join(","), parts.join(","))
    }
}

fn extend_g(
    prefix: &mut Vec<u32>,
    remaining: u32,
    zero_run: u32,
    g: u32,
    out: &mut Vec<GComposition>,
) {
    if remaining == 0 {
        out.push(GComposition {
            parts: prefix.clone(),
            g,
        });
        return;
    }
    let allow_zero = !prefix.is_empty() && zero_run < g - 2;
    let start = if allow_zero { 0 } else { 1 };
    for next in start..=remaining {
        prefix.push(next);
        let run = if next == 0 { zero_run + 1 } else { 0 };
        extend_g(prefix, remaining - next, run, g, out);
        prefix.pop();
    }
}

/// All g-compositions of `n`, in ascending lexicographic order of parts.
pub fn enumerate_g_compositions(n: u32, g: u32) -> Result<Vec<GComposition>> {
    check_order(g)?;
    if n < 1 {
        return domain("n must be at least 1");
    }
    let mut out = Vec::new();
    extend_g(&mut Vec::new(), n, 0, g, &mut out);
    Ok(out)
}

/// `g^(n-1)`.
pub fn count_g_compositions(n: u32, g: u32) -> Result<BigInt> {
    check_order(g)?;
    if n < 1 {
        return domain("n must be at least 1");
    }
    Ok(Pow::pow(BigInt::from(g), n - 1))
}

/// Weak compositions of `total` into exactly `slots` nonnegative parts,
/// lexicographically ascending.
pub(crate) fn weak_compositions(total: u32, slots: usize) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, remaining: u32, slots: usize, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == slots {
            prefix.push(remaining);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for v in 0..=remaining {
            prefix.push(v);
            go(prefix, remaining - v, slots, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if slots == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(&mut Vec::new(), total, slots, &mut out);
    out
}

/// All (1,g)-compositions of `total`, including the trivial one, ordered by
/// ascending `j` and then lexicographically by [`MixedComposition::interleaved`].
pub fn enumerate_mixed_compositions(total: u32, g: u32) -> Result<Vec<MixedComposition>> {
    check_order(g)?;
    if total < 1 {
        return domain("N must be at least 1");
    }
    let mut out = vec![MixedComposition::trivial(total, g)?];
    let mut nontrivial = Vec::new();
    for m in 1..=total / g {
        for comp in enumerate_g_compositions(m, g)? {
            let slots = comp.len() + g as usize - 1;
            for tilde in weak_compositions(total - g * m, slots) {
                nontrivial.push(MixedComposition {
                    tilde,
                    parts: comp.parts.clone(),
                    g,
                });
            }
        }
    }
    nontrivial.sort_by_cached_key(|c| (c.parts.len(), c.interleaved()));
    out.extend(nontrivial);
    Ok(out)
}

/// Coefficient of `x^m` in `(1 + x + ... + x^(g-1))^k`.
pub fn gnomial(k: u32, m: i64, g: u32) -> BigInt {
    if m < 0 || g == 0 || m > k as i64 * (g as i64 - 1) {
        return BigInt::zero();
    }
    let m = m as usize;
    let mut row = vec![BigInt::one()];
    for _ in 0..k {
        let mut next = vec![BigInt::zero(); row.len() + g as usize - 1];
        for (i, c) in row.iter().enumerate() {
            for d in 0..g as usize {
                next[i + d] += c;
            }
        }
        row = next;
    }
    row[m].clone()
}

/// Number of (1,g)-compositions of `total`, by the closed-form double sum
/// `1 + sum_{k=0}^{floor(N/g)-1} sum_{m=0}^{(g-1)k} gnomial(k,m,g) C(N+m-gk-1, m+g-1)`.
pub fn count_mixed_compositions(total: u32, g: u32) -> Result<BigInt> {
    check_order(g)?;
    if total < 1 {
        return domain("N must be at least 1");
    }
    let n = total as i64;
    let gi = g as i64;
    let mut acc = BigInt::one();
    for k in 0..(n / gi) {
        for m in 0..=(gi - 1) * k {
            acc += gnomial(k as u32, m, g) * binomial(n + m - gi * k - 1, m + gi - 1);
        }
    }
    Ok(acc)
}

/// Series of
/// `[(1-x)^(g-2)(1+x^(g-1)-x^g) - x^(g-1)] / [(1-x)^(g-1)(1+x^(g-1)-x^g) - x^(g-1)]`
/// up to `x^order`; the coefficient of `x^N` counts (1,g)-compositions of `N`.
pub fn mixed_count_series(g: u32, order: usize) -> Result<TruncatedPowerSeries<BigRational>> {
    check_order(g)?;
    let int = |v: i64| BigRational::from_integer(BigInt::from(v));
    let poly = |coeffs: &[(usize, i64)]| {
        let mut v = vec![int(0); order + 1];
        for &(e, c) in coeffs {
            if e <= order {
                v[e] += int(c);
            }
        }
        TruncatedPowerSeries::new(v, order)
    };
    let one_minus_x = poly(&[(0, 1), (1, -1)]);
    let power = |k: u32| {
        (0..k).fold(TruncatedPowerSeries::one(order), |acc, _| {
            acc * one_minus_x.clone()
        })
    };
    let g = g as usize;
    let bracket = poly(&[(0, 1), (g - 1, 1), (g, -1)]);
    let x_gm1 = poly(&[(g - 1, 1)]);
    let numerator = power(g as u32 - 2) * bracket.clone() - x_gm1.clone();
    let denominator = power(g as u32 - 1) * bracket - x_gm1;
    Ok(numerator * denominator.inverse()?)
}

/// Reverses both part sequences: `(l~_{j+g-1},...,l~_1; l_j,...,l_1)`.
pub fn invert_mixed_composition(c: &MixedComposition) -> MixedComposition {
    let mut tilde = c.tilde.clone();
    let mut parts = c.parts.clone();
    tilde.reverse();
    parts.reverse();
    MixedComposition {
        tilde,
        parts,
        g: c.g,
    }
}
