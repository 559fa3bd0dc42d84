//! Independent brute-force oracles shared by the integration tests.
//!
//! Nothing here calls into the library's enumerators, formulas or
//! determinant code; each oracle recomputes its quantity from scratch.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for t in 0..k.min(n - k) {
        acc = acc * (n - t) as u128 / (t + 1) as u128;
    }
    acc
}

/// Counts of paths of one profile by first-step kind, indexed by floor - 1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BruteTable {
    pub up: Vec<u64>,
    pub down: Vec<u64>,
    pub level: Vec<u64>,
    pub total: u64,
}

/// `(tilde, parts)`; `tilde` is empty for Dyck profiles and `[N]` for the
/// all-level Motzkin path.
pub type BruteProfile = (Vec<u32>, Vec<u32>);

/// Every step word of length `len` (up = `g-1`, level = 0, down = -1) that
/// returns to its start height, in odometer order.
pub fn brute_bridges(len: usize, g: u32, motzkin: bool) -> Vec<Vec<i64>> {
    let alphabet: Vec<i64> = if motzkin {
        vec![g as i64 - 1, 0, -1]
    } else {
        vec![g as i64 - 1, -1]
    };
    let k = alphabet.len();
    let mut out = Vec::new();
    let mut digits = vec![0usize; len];
    loop {
        let word: Vec<i64> = digits.iter().map(|&d| alphabet[d]).collect();
        if word.iter().sum::<i64>() == 0 {
            out.push(word);
        }
        let mut pos = 0;
        loop {
            if pos == len {
                return out;
            }
            digits[pos] += 1;
            if digits[pos] < k {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

/// Departure floor of each step, with the lowest floor visited numbered 1.
pub fn floors_of(word: &[i64]) -> Vec<i64> {
    let mut h = 0;
    let mut heights = Vec::with_capacity(word.len());
    for s in word {
        heights.push(h);
        h += s;
    }
    let low = *heights.iter().min().unwrap();
    heights.iter().map(|h| h - low + 1).collect()
}

pub fn brute_profile(word: &[i64], g: u32, motzkin: bool) -> BruteProfile {
    let floors = floors_of(word);
    let top = floors
        .iter()
        .zip(word)
        .filter(|(_, s)| **s > 0)
        .map(|(f, _)| *f)
        .max();
    let Some(j) = top else {
        return (vec![word.len() as u32], Vec::new());
    };
    let mut parts = vec![0u32; j as usize];
    let mut tilde = vec![0u32; j as usize + g as usize - 1];
    for (f, s) in floors.iter().zip(word) {
        if *s > 0 {
            parts[*f as usize - 1] += 1;
        } else if *s == 0 {
            tilde[*f as usize - 1] += 1;
        }
    }
    if !motzkin {
        tilde.clear();
    }
    (tilde, parts)
}

pub fn brute_tally(len: usize, g: u32, motzkin: bool) -> BTreeMap<BruteProfile, BruteTable> {
    let mut out: BTreeMap<BruteProfile, BruteTable> = BTreeMap::new();
    for word in brute_bridges(len, g, motzkin) {
        let profile = brute_profile(&word, g, motzkin);
        let floors = floors_of(&word);
        let width = if profile.1.is_empty() {
            1
        } else {
            profile.1.len() + g as usize - 1
        };
        let t = out.entry(profile).or_insert_with(|| BruteTable {
            up: vec![0; width],
            down: vec![0; width],
            level: vec![0; width],
            total: 0,
        });
        let f = floors[0] as usize - 1;
        match word[0] {
            s if s > 0 => t.up[f] += 1,
            0 => t.level[f] += 1,
            _ => t.down[f] += 1,
        }
        t.total += 1;
    }
    out
}

/// Renders a word as a `U/L/D` string.
pub fn word_string(word: &[i64]) -> String {
    word.iter()
        .map(|&s| match s {
            s if s > 0 => 'U',
            0 => 'L',
            _ => 'D',
        })
        .collect()
}

/// `det(A)` by Gaussian elimination with row pivoting over the rationals.
#[allow(clippy::needless_range_loop)]
pub fn det_gauss(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &pivot;
            for c in col..n {
                let sub = &factor * &a[col][c];
                a[r][c] -= sub;
            }
        }
    }
    det
}

/// Dense exclusion matrix assembled straight from the hopping lists.
pub fn dense_matrix(
    g: usize,
    f: &[BigRational],
    gdiag: &[BigRational],
    stilde: Option<&[BigRational]>,
) -> Vec<Vec<BigRational>> {
    let n = f.len() + 1;
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for (k, v) in f.iter().enumerate() {
        m[k][k + 1] = v.clone();
    }
    for (k, v) in gdiag.iter().enumerate() {
        m[k + g - 1][k] = v.clone();
    }
    if let Some(s) = stilde {
        for (k, v) in s.iter().enumerate() {
            m[k][k] = v.clone();
        }
    }
    m
}

/// `det(I - z M)` at a numeric point `z`.
pub fn det_at(m: &[Vec<BigRational>], z: &BigRational) -> BigRational {
    let n = m.len();
    let a = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let id = if r == c {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    };
                    id - z * &m[r][c]
                })
                .collect()
        })
        .collect();
    det_gauss(a)
}

pub fn eval_poly(coeffs: &[BigRational], z: &BigRational) -> BigRational {
    coeffs
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * z + c)
}

/// Sum over closed index walks `i_0 -> i_1 -> ... -> i_0` of the product of
/// matrix entries along the walk.
pub fn trace_by_walks(m: &[Vec<BigRational>], len: usize) -> BigRational {
    fn rec(
        m: &[Vec<BigRational>],
        start: usize,
        at: usize,
        left: usize,
        w: BigRational,
        acc: &mut BigRational,
    ) {
        if left == 0 {
            if at == start {
                *acc += w;
            }
            return;
        }
        for (next, v) in m[at].iter().enumerate() {
            if !v.is_zero() {
                rec(m, start, next, left - 1, &w * v, acc);
            }
        }
    }
    let mut acc = BigRational::zero();
    for i in 0..m.len() {
        rec(m, i, i, len, BigRational::one(), &mut acc);
    }
    acc
}

/// `s_k = g_k f_k ... f_{k+g-2}`, one-based `k`.
pub fn s_values(g: usize, f: &[BigRational], gdiag: &[BigRational]) -> Vec<BigRational> {
    (0..gdiag.len())
        .map(|k| (k..k + g - 1).fold(gdiag[k].clone(), |acc, t| acc * &f[t]))
        .collect()
}

/// Pure partition functions by summing over all level subsets whose members
/// are at least `g` apart.
pub fn z_by_subsets(g: usize, s: &[BigRational], q: usize) -> Vec<BigRational> {
    let levels = s.len();
    let mut z = vec![BigRational::zero(); q / g + 1];
    for mask in 0u32..(1 << levels) {
        let picked: Vec<usize> = (0..levels).filter(|k| mask >> k & 1 == 1).collect();
        if picked.windows(2).any(|w| w[1] - w[0] < g) {
            continue;
        }
        let w = picked
            .iter()
            .fold(BigRational::one(), |acc, &k| acc * &s[k]);
        z[picked.len()] += w;
    }
    z
}

/// Mixed partition functions by listing every arrangement of fermions (one
/// level) and bound states (`g` adjacent levels) on levels `1..q`.
pub fn z_by_arrangements(g: usize, s: &[BigRational], stilde: &[BigRational]) -> Vec<BigRational> {
    fn rec(
        g: usize,
        s: &[BigRational],
        t: &[BigRational],
        pos: usize,
        particles: usize,
        w: BigRational,
        z: &mut Vec<BigRational>,
    ) {
        if pos >= t.len() {
            z[particles] += w;
            return;
        }
        rec(g, s, t, pos + 1, particles, w.clone(), z);
        rec(g, s, t, pos + 1, particles + 1, &w * &t[pos], z);
        if pos + g <= t.len() {
            let sign = if g.is_multiple_of(2) {
                -BigRational::one()
            } else {
                BigRational::one()
            };
            rec(g, s, t, pos + g, particles + g, &w * &s[pos] * sign, z);
        }
    }
    let mut z = vec![BigRational::zero(); stilde.len() + 1];
    rec(g, s, stilde, 0, 0, BigRational::one(), &mut z);
    z
}

/// `log(1 + x)` truncated at `order`, with `x = sum_{n>=1} Z(n) z^n`, via
/// the Mercator series.
pub fn log_series(z: &[BigRational], order: usize) -> Vec<BigRational> {
    let mut x = vec![BigRational::zero(); order + 1];
    for (n, v) in z.iter().enumerate().skip(1).take(order) {
        x[n] = v.clone();
    }
    let mut power = x.clone();
    let mut out = vec![BigRational::zero(); order + 1];
    for k in 1..=order {
        let coef = if k % 2 == 1 {
            q(1, k as i64)
        } else {
            q(-1, k as i64)
        };
        for n in 0..=order {
            out[n] += &coef * &power[n];
        }
        let mut next = vec![BigRational::zero(); order + 1];
        for (i, a) in power.iter().enumerate() {
            for (j, b) in x.iter().enumerate() {
                if i + j <= order && !a.is_zero() && !b.is_zero() {
                    next[i + j] += a * b;
                }
            }
        }
        power = next;
    }
    out
}

/// Coefficients of the (1,g)-composition counting series
/// `((1-x)^{g-2}(1+x^{g-1}-x^g) - x^{g-1}) / ((1-x)^{g-1}(1+x^{g-1}-x^g) - x^{g-1})`,
/// by long division of integer series.
pub fn gf_coefficients(g: usize, order: usize) -> Vec<i128> {
    let pow = |base: &[i128], e: usize| {
        let mut acc = vec![1i128];
        for _ in 0..e {
            let mut next = vec![0i128; acc.len() + base.len() - 1];
            for (i, a) in acc.iter().enumerate() {
                for (j, b) in base.iter().enumerate() {
                    next[i + j] += a * b;
                }
            }
            acc = next;
        }
        acc
    };
    let mul = |a: &[i128], b: &[i128]| {
        let mut out = vec![0i128; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    };
    let sub_mono = |mut p: Vec<i128>, deg: usize| {
        if p.len() <= deg {
            p.resize(deg + 1, 0);
        }
        p[deg] -= 1;
        p
    };
    let mut tail = vec![0i128; g + 1];
    tail[0] = 1;
    tail[g - 1] += 1;
    tail[g] -= 1;
    let one_minus_x = [1i128, -1];
    let num = sub_mono(mul(&pow(&one_minus_x, g - 2), &tail), g - 1);
    let den = sub_mono(mul(&pow(&one_minus_x, g - 1), &tail), g - 1);
    assert_eq!(den[0], 1);
    let mut out = vec![0i128; order + 1];
    for n in 0..=order {
        let mut acc = num.get(n).copied().unwrap_or(0);
        for k in 1..=n.min(den.len() - 1) {
            acc -= den[k] * out[n - k];
        }
        out[n] = acc;
    }
    out
}

/// Histogram of closed `n`-step walks by shoelace area, over all `4^n` words.
pub fn walks_by_area(n: usize) -> BTreeMap<i64, u64> {
    let mut out = BTreeMap::new();
    for code in 0u64..(1u64 << (2 * n)) {
        let (mut x, mut y, mut area) = (0i64, 0i64, 0i64);
        for t in 0..n {
            match code >> (2 * t) & 3 {
                0 => x += 1,
                1 => x -= 1,
                2 => {
                    area += x;
                    y += 1
                }
                _ => {
                    area -= x;
                    y -= 1
                }
            }
        }
        if x == 0 && y == 0 {
            *out.entry(area).or_insert(0) += 1;
        }
    }
    out
}

/// Seeded uniform rationals `a/b`, `|a| <= 4`, `1 <= b <= 3`, from a small
/// linear congruential stream kept separate from the library's generator.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    pub fn rational(&mut self) -> BigRational {
        let a = (self.next() % 9) as i64 - 4;
        let b = (self.next() % 3) as i64 + 1;
        q(a, b)
    }

    pub fn rationals(&mut self, n: usize) -> Vec<BigRational> {
        (0..n).map(|_| self.rational()).collect()
    }
}

pub fn big(v: u128) -> BigInt {
    BigInt::from(v)
}
