//! Closed square-lattice walks counted by algebraic area.
//!
//! Three independent computations of `sum_A C_n(A) Q^A`, where `C_n(A)` is
//! the number of closed `n`-step walks enclosing algebraic area `A`:
//! expansion in the algebra `vu = Q uv`, direct enumeration with the shoelace
//! area, and the g = 2 trace formula over the group ring of `Z/q`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{domain, Error, Result};
use crate::exclusion::{hofstadter_spectral_data, trace_via_formula};
use crate::limits::Limits;
use crate::symbolic::{LaurentPolynomial, Ring};

/// Finite sums of `c(Q) u^a v^b` in normal order, multiplied using `vu = Q uv`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeylPolynomial {
    terms: BTreeMap<(i64, i64), LaurentPolynomial>,
}

impl WeylPolynomial {
    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    /// `u^a v^b`.
    pub fn monomial(a: i64, b: i64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((a, b), LaurentPolynomial::one());
        WeylPolynomial { terms }
    }

    /// `u + u^-1 + v + v^-1`.
    pub fn hopping() -> Self {
        let mut h = Self::default();
        for (a, b) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
            h.add(a, b, LaurentPolynomial::one());
        }
        h
    }

    /// Coefficient of `u^a v^b`.
    pub fn coefficient(&self, a: i64, b: i64) -> LaurentPolynomial {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &LaurentPolynomial)> {
        self.terms.iter()
    }

    fn add(&mut self, a: i64, b: i64, c: LaurentPolynomial) {
        let slot = self.terms.entry((a, b)).or_default();
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    /// `(Q^c u^a v^b)(u^a' v^b') = Q^{c + b a'} u^{a+a'} v^{b+b'}`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (&(a, b), c) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                let shift = LaurentPolynomial::q_power(b * a2);
                out.add(a + a2, b + b2, c.clone() * c2.clone() * shift);
            }
        }
        out
    }
}

/// Constant term of `(u + u^-1 + v + v^-1)^n`.
pub fn weyl_expand_power(n: u32) -> LaurentPolynomial {
    let h = WeylPolynomial::hopping();
    let mut acc = WeylPolynomial::one();
    for _ in 0..n {
        acc = acc.mul(&h);
    }
    acc.coefficient(0, 0)
}

/// A unit move on the square lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    Right,
    Left,
    Up,
    Down,
}

impl Move {
    pub const ALL: [Move; 4] = [Move::Right, Move::Left, Move::Up, Move::Down];

    pub fn delta(self) -> (i64, i64) {
        match self {
            Move::Right => (1, 0),
            Move::Left => (-1, 0),
            Move::Up => (0, 1),
            Move::Down => (0, -1),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Move::Right => 'R',
            Move::Left => 'L',
            Move::Up => 'U',
            Move::Down => 'D',
        }
    }

    pub fn from_symbol(c: char) -> Result<Self> {
        match c.to_ascii_uppercase() {
            'R' => Ok(Move::Right),
            'L' => Ok(Move::Left),
            'U' => Ok(Move::Up),
            'D' => Ok(Move::Down),
            _ => domain(format!("unknown move {c:?}")),
        }
    }
}

/// A closed walk starting at the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareWalk {
    moves: Vec<Move>,
}

impl SquareWalk {
    pub fn new(moves: Vec<Move>) -> Result<Self> {
        let (x, y) = moves.iter().fold((0, 0), |(x, y), m| {
            let (dx, dy) = m.delta();
            (x + dx, y + dy)
        });
        if (x, y) != (0, 0) {
            return domain(format!("walk is not closed: ends at ({x}, {y})"));
        }
        Ok(SquareWalk { moves })
    }

    /// Parses a word over `R, L, U, D`; whitespace and commas are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let moves = text
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(Move::from_symbol)
            .collect::<Result<Vec<_>>>()?;
        Self::new(moves)
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Winding number of the walk around each unit cell it encloses; the cell
    /// `(x, y)` is the square `[x, x+1] x [y, y+1]`. Cells with winding zero
    /// are omitted.
    pub fn winding_numbers(&self) -> BTreeMap<(i64, i64), i64> {
        // each vertical edge is crossed by the rightward ray from every cell
        // centre in its row to its left
        let mut edges: Vec<(i64, i64, i64)> = Vec::new();
        let (mut x, mut y) = (0i64, 0i64);
        for m in &self.moves {
            match m {
                Move::Up => edges.push((x, y, 1)),
                Move::Down => edges.push((x, y - 1, -1)),
                _ => {}
            }
            let (dx, dy) = m.delta();
            x += dx;
            y += dy;
        }
        let mut out: BTreeMap<(i64, i64), i64> = BTreeMap::new();
        let Some(min_x) = edges.iter().map(|e| e.0).min() else {
            return out;
        };
        for &(ex, row, w) in &edges {
            for cx in min_x..ex {
                *out.entry((cx, row)).or_insert(0) += w;
            }
        }
        out.retain(|_, w| *w != 0);
        out
    }

    /// Number of cells `S_m` enclosed with each nonzero winding number `m`.
    pub fn sectors(&self) -> BTreeMap<i64, u64> {
        let mut out = BTreeMap::new();
        for w in self.winding_numbers().into_values() {
            *out.entry(w).or_insert(0) += 1;
        }
        out
    }
}

impl fmt::Display for SquareWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.moves {
            write!(f, "{}", m.symbol())?;
        }
        Ok(())
    }
}

/// Shoelace area `sum x dy`; equals `sum_m m S_m`.
pub fn walk_area(w: &SquareWalk) -> i64 {
    let mut x = 0i64;
    let mut area = 0i64;
    for m in &w.moves {
        let (dx, dy) = m.delta();
        area += x * dy;
        x += dx;
    }
    area
}

/// Number of closed `n`-step walks from the origin by algebraic area. Odd `n`
/// gives an empty histogram.
pub fn walk_area_histogram(n: u32, limits: &Limits) -> Result<BTreeMap<i64, BigInt>> {
    if n as usize > limits.walk_len {
        return Err(Error::Resource(format!(
            "walk length {n} exceeds the limit {}",
            limits.walk_len
        )));
    }
    let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
    if n.is_multiple_of(2) {
        walk_rec(n as i64, 0, 0, 0, &mut counts);
    }
    Ok(counts
        .into_iter()
        .map(|(a, c)| (a, BigInt::from(c)))
        .collect())
}

fn walk_rec(left: i64, x: i64, y: i64, area: i64, counts: &mut BTreeMap<i64, u64>) {
    if left == 0 {
        *counts.entry(area).or_insert(0) += 1;
        return;
    }
    for m in Move::ALL {
        let (dx, dy) = m.delta();
        let (nx, ny) = (x + dx, y + dy);
        if nx.abs() + ny.abs() > left - 1 {
            continue;
        }
        walk_rec(left - 1, nx, ny, area + x * dy, counts);
    }
}

/// Histogram as a Laurent polynomial `sum_A C(A) Q^A`.
pub fn histogram_polynomial(h: &BTreeMap<i64, BigInt>) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(
        h.iter()
            .map(|(&a, c)| (a, BigRational::from_integer(c.clone()))),
    )
}

/// Largest `|A|` over closed `n`-step walks: `floor(n/4) * ceil(n/4)`.
pub fn max_area(n: u32) -> i64 {
    let n = n as i64;
    (n / 4) * ((n + 3) / 4)
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// The cyclic order used by [`area_polynomial_via_trace`]: the smallest prime
/// `q >= 2 floor(n^2/16) + n + 2`.
pub fn trace_modulus(n: u32) -> u64 {
    let n = n as u64;
    let mut q = 2 * (n * n / 16) + n + 2;
    while !is_prime(q) {
        q += 1;
    }
    q
}

/// `sum_A C_n(A) Q^A` from the g = 2 trace formula with
/// `s_k = (1 - Q^k)(1 - Q^-k)` in `Q[Q]/(Q^q - 1)`.
///
/// For prime `q` the sum over `k` of a product that does not cancel in `Q`
/// collapses to a multiple of `1 + Q + ... + Q^{q-1}`; that multiple is read
/// off an exponent outside the reachable area range and removed before the
/// division by `q`.
pub fn area_polynomial_via_trace(n: u32) -> Result<LaurentPolynomial> {
    if n == 0 {
        return domain("walk length must be at least 1");
    }
    if n % 2 == 1 {
        return Ok(LaurentPolynomial::zero());
    }
    let q = trace_modulus(n);
    let sd = hofstadter_spectral_data(1, q)?;
    let raw = trace_via_formula(&sd, n)?.with_modulus(q)?;
    let spill = raw.coefficient((q as i64 + 1) / 2);
    let qr = BigRational::from_integer(BigInt::from(q));
    let mut out = Vec::new();
    for e in 0..q as i64 {
        let c = raw.coefficient(e) - &spill;
        if Zero::is_zero(&c) {
            continue;
        }
        let scaled = c / &qr;
        if !scaled.is_integer() {
            return Err(Error::Consistency(format!(
                "trace coefficient of Q^{e} is not divisible by q = {q}"
            )));
        }
        out.push((e, scaled));
    }
    let result = LaurentPolynomial::from_terms(out)
        .with_modulus(q)?
        .recentred();
    let bound = max_area(n);
    if let Some((e, _)) = result.terms().find(|(e, _)| e.abs() > bound) {
        return Err(Error::Consistency(format!(
            "trace result has area {e} beyond the bound {bound}"
        )));
    }
    Ok(result)
}

/// Total number of closed `n`-step walks, `C(n, n/2)^2`, or zero for odd `n`.
pub fn closed_walk_count(n: u32) -> BigInt {
    if n % 2 == 1 {
        return BigInt::zero();
    }
    let c = crate::symbolic::binomial(n as i64, n as i64 / 2);
    &c * &c
}

/// Checks the reflection symmetry `C(A) = C(-A)` and the total count.
pub fn check_histogram(n: u32, h: &BTreeMap<i64, BigInt>) -> Result<()> {
    for (a, c) in h {
        if h.get(&-a) != Some(c) {
            return Err(Error::Consistency(format!(
                "C_{n}({a}) differs from C_{n}({})",
                -a
            )));
        }
    }
    let total: BigInt = h.values().sum();
    if total != closed_walk_count(n) {
        return Err(Error::Consistency(format!(
            "{total} closed {n}-step walks counted, expected {}",
            closed_walk_count(n)
        )));
    }
    Ok(())
}
