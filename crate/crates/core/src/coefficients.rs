//! Multiplicity coefficients `c_g`, `c_{1,g}` and per-floor path counts.
//!
//! `gn * c_g(l)` counts periodic `[g-1,-1]` bridges of length `gn` whose up
//! steps leave floor `i` exactly `l_i` times; `N * c_{1,g}(l~; l)` plays the
//! same role for `[g-1,0,-1]` bridges. All values are exact rationals and every
//! count is checked to be integral.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::compositions::{
    check_order, enumerate_g_compositions, enumerate_mixed_compositions, GComposition,
    MixedComposition,
};
use crate::error::{domain, Error, Result};
use crate::json::serialize_bigint;
use crate::symbolic::{binomial, expect_integer, factorial, multinomial};

/// One-based view of a part sequence with `l_i = 0` outside `1..=j`.
///
/// Every formula in this module indexes parts through this helper so that the
/// boundary conventions live in exactly one place.
#[derive(Clone, Copy)]
struct Parts<'a>(&'a [u32]);

impl Parts<'_> {
    fn at(&self, i: i64) -> i64 {
        if i >= 1 && (i as usize) <= self.0.len() {
            self.0[i as usize - 1] as i64
        } else {
            0
        }
    }

    /// `l_from + ... + l_to` (inclusive; empty when `to < from`).
    fn window(&self, from: i64, to: i64) -> i64 {
        (from..=to).map(|i| self.at(i)).sum()
    }

    fn span(&self, from: i64, to: i64) -> Vec<i64> {
        (from..=to).map(|i| self.at(i)).collect()
    }

    fn j(&self) -> i64 {
        self.0.len() as i64
    }
}

fn ratio(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// `(1/l_1) * prod_{i=2}^{j} C(l_{i-g+1} + ... + l_i - 1, l_i)`.
pub fn c_g(comp: &GComposition) -> Result<BigRational> {
    comp.validate()?;
    let g = comp.g() as i64;
    let l = Parts(comp.parts());
    let mut acc = BigInt::one();
    for i in 2..=l.j() {
        acc *= binomial(l.window(i - g + 1, i) - 1, l.at(i));
    }
    Ok(ratio(acc, BigInt::from(l.at(1))))
}

/// The product-of-pairs form of `c_2`:
/// `C(l_1+l_2, l_1)/(l_1+l_2) * prod_{i=2}^{j-1} l_i C(l_i+l_{i+1}, l_i)/(l_i+l_{i+1})`,
/// with `l_2 = 0` for a single part.
pub fn c_2_closed_form(comp: &GComposition) -> Result<BigRational> {
    if comp.parts().contains(&0) {
        return domain(format!(
            "{comp} has a zero part; the pair form needs positive parts"
        ));
    }
    let l = Parts(comp.parts());
    let pair = |a: i64, b: i64| ratio(binomial(a + b, a), BigInt::from(a + b));
    let mut acc = pair(l.at(1), l.at(2));
    for i in 2..l.j() {
        acc *= int(l.at(i)) * pair(l.at(i), l.at(i + 1));
    }
    Ok(acc)
}

/// Paths starting with an up step from floor `i`, evaluated from the first
/// printed form: the multinomial over floors `i-g+1..=i` times the products
/// below and above that block.
pub fn up_start_count_first_form(comp: &GComposition, i: i64) -> Result<BigInt> {
    comp.validate()?;
    let g = comp.g() as i64;
    let l = Parts(comp.parts());
    if l.at(i) == 0 {
        return Ok(BigInt::zero());
    }
    let mut acc = multinomial(l.window(i - g + 1, i) - 1, &l.span(i - g + 1, i - 1));
    for k in 1..=i - g {
        acc *= binomial(l.window(k, k + g - 1) - 1, l.at(k));
    }
    for k in i - g + 2..=l.j() - g + 1 {
        acc *= binomial(l.window(k, k + g - 1) - 1, l.at(k + g - 1));
    }
    Ok(acc)
}

/// Same count as [`up_start_count_first_form`], from the second printed form
/// (multinomial over floors `i..=i+g-2`).
pub fn up_start_count_second_form(comp: &GComposition, i: i64) -> Result<BigInt> {
    comp.validate()?;
    let g = comp.g() as i64;
    let l = Parts(comp.parts());
    if l.at(i) == 0 {
        return Ok(BigInt::zero());
    }
    let mut acc = multinomial(l.window(i, i + g - 2) - 1, &l.span(i + 1, i + g - 2));
    for k in 1..=i - 1 {
        acc *= binomial(l.window(k, k + g - 1) - 1, l.at(k));
    }
    for k in i..=l.j() - g + 1 {
        acc *= binomial(l.window(k, k + g - 1) - 1, l.at(k + g - 1));
    }
    Ok(acc)
}

/// Path counts for one floor, keyed by the kind of the first step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FloorCount {
    pub i: u32,
    #[serde(serialize_with = "serialize_bigint")]
    pub up: BigInt,
    #[serde(serialize_with = "serialize_bigint")]
    pub down: BigInt,
    #[serde(serialize_with = "serialize_bigint")]
    pub horizontal: BigInt,
    #[serde(serialize_with = "serialize_bigint")]
    pub any: BigInt,
}

/// Per-floor start counts for one profile, plus the total number of paths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FloorCountTable {
    pub floors: Vec<FloorCount>,
    #[serde(serialize_with = "serialize_bigint")]
    pub total: BigInt,
}

impl FloorCountTable {
    /// An all-zero table over floors `1..=floors`.
    pub fn zeros(floors: usize) -> Self {
        FloorCountTable {
            floors: (1..=floors as u32)
                .map(|i| FloorCount {
                    i,
                    up: BigInt::zero(),
                    down: BigInt::zero(),
                    horizontal: BigInt::zero(),
                    any: BigInt::zero(),
                })
                .collect(),
            total: BigInt::zero(),
        }
    }

    /// Checks `any = up + down + horizontal`, `sum(any) = total` and nonnegativity.
    pub fn validate(&self) -> Result<()> {
        let mut sum = BigInt::zero();
        for f in &self.floors {
            if f.any != &f.up + &f.down + &f.horizontal {
                return Err(Error::Consistency(format!(
                    "floor {}: any-start count {} differs from up + down + horizontal",
                    f.i, f.any
                )));
            }
            if [&f.up, &f.down, &f.horizontal]
                .iter()
                .any(|v| **v < BigInt::zero())
            {
                return Err(Error::Consistency(format!(
                    "floor {} has a negative count",
                    f.i
                )));
            }
            sum += &f.any;
        }
        if sum != self.total {
            return Err(Error::Consistency(format!(
                "floor counts sum to {sum}, total is {}",
                self.total
            )));
        }
        Ok(())
    }

    pub fn floor(&self, i: u32) -> Option<&FloorCount> {
        self.floors.get((i as usize).checked_sub(1)?)
    }
}

fn count(weight: i64, c: &BigRational, what: impl FnOnce() -> String) -> Result<BigInt> {
    expect_integer(&(int(weight) * c), &what())
}

/// Per-floor counts of `[g-1,-1]` bridges with profile `comp`, over floors
/// `1..=j+g-1`: `l_i c_g` up-starts, `(l_{i-g+1}+...+l_{i-1}) c_g` down-starts,
/// and `gn c_g` in total.
pub fn dyck_floor_counts(comp: &GComposition) -> Result<FloorCountTable> {
    let c = c_g(comp)?;
    let g = comp.g() as i64;
    let l = Parts(comp.parts());
    let floors = l.j() + g - 1;
    let mut table = FloorCountTable::zeros(floors as usize);
    for (slot, i) in table.floors.iter_mut().zip(1..=floors) {
        slot.up = count(l.at(i), &c, || format!("l_{i} c_g{comp}"))?;
        let first = up_start_count_first_form(comp, i)?;
        let second = up_start_count_second_form(comp, i)?;
        if first != slot.up || second != slot.up {
            return Err(Error::Consistency(format!(
                "up-start count at floor {i} for {comp}: l_i c_g = {}, first form {first}, second form {second}",
                slot.up
            )));
        }
        slot.down = count(l.window(i - g + 1, i - 1), &c, || {
            format!("down-starts at floor {i}")
        })?;
        slot.any = count(l.window(i - g + 1, i), &c, || {
            format!("any-starts at floor {i}")
        })?;
    }
    table.total = count(g * comp.total() as i64, &c, || format!("gn c_g{comp}"))?;
    table.validate()?;
    Ok(table)
}

/// `c_{1,g}`; `1/N` for the trivial composition.
pub fn c_1g(mc: &MixedComposition) -> Result<BigRational> {
    mc.validate()?;
    if mc.is_trivial() {
        return Ok(ratio(BigInt::one(), BigInt::from(mc.total())));
    }
    let g = mc.g() as i64;
    let l = Parts(mc.parts());
    let t = Parts(mc.tilde());
    let (t1, l1) = (t.at(1), l.at(1));
    let mut acc = ratio(
        factorial((t1 + l1 - 1) as u64),
        factorial(t1 as u64) * factorial(l1 as u64),
    );
    let floors = mc.floors() as i64;
    for k in 2..=floors {
        let top = t.at(k) + l.window(k - g + 1, k) - 1;
        acc *= int(multinomial(top, &[t.at(k), l.at(k)]));
    }
    Ok(acc)
}

/// Per-floor counts of `[g-1,0,-1]` bridges with profile `mc`: `l_i c` up-starts,
/// `l~_i c` horizontal starts, `(l_{i-g+1}+...+l_{i-1}) c` down-starts, `N c` total.
pub fn motzkin_floor_counts(mc: &MixedComposition) -> Result<FloorCountTable> {
    let c = c_1g(mc)?;
    let g = mc.g() as i64;
    let l = Parts(mc.parts());
    let t = Parts(mc.tilde());
    let floors = mc.floors() as i64;
    let mut table = FloorCountTable::zeros(floors as usize);
    for (slot, i) in table.floors.iter_mut().zip(1..=floors) {
        slot.up = count(l.at(i), &c, || format!("up-starts at floor {i} of {mc}"))?;
        slot.horizontal = count(t.at(i), &c, || {
            format!("horizontal starts at floor {i} of {mc}")
        })?;
        slot.down = count(l.window(i - g + 1, i - 1), &c, || {
            format!("down-starts at floor {i} of {mc}")
        })?;
        slot.any = count(t.at(i) + l.window(i - g + 1, i), &c, || {
            format!("any-starts at floor {i} of {mc}")
        })?;
    }
    table.total = count(mc.total() as i64, &c, || format!("N c_1g{mc}"))?;
    table.validate()?;
    Ok(table)
}

/// `sum over g-compositions of n of gn c_g`, the number of `[g-1,-1]` bridges of length `gn`.
pub fn total_dyck_bridges(n: u32, g: u32) -> Result<BigInt> {
    let mut acc = BigRational::zero();
    for comp in enumerate_g_compositions(n, g)? {
        acc += c_g(&comp)?;
    }
    expect_integer(&(acc * int(g * n)), "sum of gn c_g")
}

/// `sum_k C(N, gk) C(gk, k)`, the number of `[g-1,0,-1]` bridges of length `N`.
pub fn total_motzkin_bridges(total: u32, g: u32) -> Result<BigInt> {
    check_order(g)?;
    let (n, g) = (total as i64, g as i64);
    Ok((0..=n / g)
        .map(|k| binomial(n, g * k) * binomial(g * k, k))
        .sum())
}

/// `N * sum over (1,g)-compositions of N of c_{1,g}`.
pub fn motzkin_profile_sum(total: u32, g: u32) -> Result<BigInt> {
    let mut acc = BigRational::zero();
    for mc in enumerate_mixed_compositions(total, g)? {
        acc += c_1g(&mc)?;
    }
    expect_integer(&(acc * int(total)), "N times the sum of c_1g")
}
