//! Banded exclusion matrices and their partition functions.
//!
//! A g-exclusion matrix of size `q` has hoppings `f_k` on the superdiagonal
//! and `g_k` on the `(g-1)`-th subdiagonal; the mixed (1,g) variant adds
//! `s~_k` on the main diagonal. Corner (wrap-around) elements are always zero.
//! Its secular determinant `det(I - zM)` generates the partition functions
//! `Z(n)` of `n` exclusion particles, whose logarithm gives the cluster
//! coefficients `b(n)`, which in turn give the traces `tr M^n`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coefficients::{c_1g, c_g};
use crate::compositions::{check_order, enumerate_g_compositions, enumerate_mixed_compositions};
use crate::error::{domain, Error, Result};
use crate::symbolic::{LaurentPolynomial, MultiPolynomial, Ring, TruncatedPowerSeries, Var};

/// Hopping data of a banded exclusion matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralData<R> {
    g: u32,
    f: Vec<R>,
    gdiag: Vec<R>,
    stilde: Option<Vec<R>>,
}

impl<R: Ring> SpectralData<R> {
    /// `f` has `q - 1` entries, `gdiag` has `q - g + 1` and `stilde`, when
    /// present, has `q`.
    pub fn new(g: u32, f: Vec<R>, gdiag: Vec<R>, stilde: Option<Vec<R>>) -> Result<Self> {
        check_order(g)?;
        let q = f.len() + 1;
        if q < g as usize {
            return domain(format!("matrix size {q} is smaller than g = {g}"));
        }
        if gdiag.len() != q - g as usize + 1 {
            return domain(format!(
                "expected {} subdiagonal entries for q = {q}, g = {g}, got {}",
                q - g as usize + 1,
                gdiag.len()
            ));
        }
        if let Some(s) = &stilde {
            if s.len() != q {
                return domain(format!("expected {q} diagonal entries, got {}", s.len()));
            }
        }
        Ok(SpectralData {
            g,
            f,
            gdiag,
            stilde,
        })
    }

    /// Data with unit superdiagonal, so that `s_k = gdiag_k`.
    pub fn from_spectral(g: u32, s: Vec<R>, stilde: Option<Vec<R>>) -> Result<Self> {
        check_order(g)?;
        let q = s.len() + g as usize - 1;
        Self::new(g, vec![R::one(); q - 1], s, stilde)
    }

    pub fn q(&self) -> usize {
        self.f.len() + 1
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn is_mixed(&self) -> bool {
        self.stilde.is_some()
    }

    pub fn f(&self) -> &[R] {
        &self.f
    }

    pub fn gdiag(&self) -> &[R] {
        &self.gdiag
    }

    pub fn stilde(&self) -> Option<&[R]> {
        self.stilde.as_deref()
    }

    /// The same hoppings without the diagonal.
    pub fn pure(&self) -> Self {
        SpectralData {
            stilde: None,
            ..self.clone()
        }
    }

    /// The same hoppings with the given diagonal.
    pub fn with_stilde(&self, stilde: Vec<R>) -> Result<Self> {
        Self::new(self.g, self.f.clone(), self.gdiag.clone(), Some(stilde))
    }

    /// `s_1, ..., s_{q-g+1}`.
    pub fn s_values(&self) -> Vec<R> {
        (1..=self.gdiag.len())
            .map(|k| spectral_s(self, k).expect("index in range"))
            .collect()
    }

    fn stilde_at(&self, k: usize) -> R {
        match &self.stilde {
            Some(s) => s[k - 1].clone(),
            None => R::zero(),
        }
    }
}

/// `s_k = g_k f_k f_{k+1} ... f_{k+g-2}` for `1 <= k <= q-g+1`.
pub fn spectral_s<R: Ring>(sd: &SpectralData<R>, k: usize) -> Result<R> {
    if k < 1 || k > sd.gdiag.len() {
        return domain(format!("s_{k} is defined for 1 <= k <= {}", sd.gdiag.len()));
    }
    let mut acc = sd.gdiag[k - 1].clone();
    for t in k..=k + sd.g as usize - 2 {
        acc = acc * sd.f[t - 1].clone();
    }
    Ok(acc)
}

/// A dense `q x q` exclusion matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct ExclusionMatrix<R> {
    g: u32,
    mixed: bool,
    rows: Vec<Vec<R>>,
}

impl<R: Ring> ExclusionMatrix<R> {
    pub fn from_spectral(sd: &SpectralData<R>) -> Self {
        let q = sd.q();
        let g = sd.g as usize;
        let mut rows = vec![vec![R::zero(); q]; q];
        for k in 0..q - 1 {
            rows[k][k + 1] = sd.f[k].clone();
        }
        for k in 0..sd.gdiag.len() {
            rows[k + g - 1][k] = sd.gdiag[k].clone();
        }
        if let Some(s) = &sd.stilde {
            for k in 0..q {
                rows[k][k] = s[k].clone();
            }
        }
        ExclusionMatrix {
            g: sd.g,
            mixed: sd.is_mixed(),
            rows,
        }
    }

    pub fn q(&self) -> usize {
        self.rows.len()
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn is_mixed(&self) -> bool {
        self.mixed
    }

    /// Entry at one-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> &R {
        &self.rows[row - 1][col - 1]
    }

    pub fn rows(&self) -> &[Vec<R>] {
        &self.rows
    }

    fn mul(&self, other: &[Vec<R>]) -> Vec<Vec<R>> {
        let q = self.q();
        let mut out = vec![vec![R::zero(); q]; q];
        for (r, row) in self.rows.iter().enumerate() {
            for (k, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for c in 0..q {
                    if !other[k][c].is_zero() {
                        out[r][c] = out[r][c].clone() + a.clone() * other[k][c].clone();
                    }
                }
            }
        }
        out
    }
}

type Poly<R> = Vec<R>;

fn poly_mul<R: Ring>(a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![R::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = out[i + j].clone() + x.clone() * y.clone();
            }
        }
    }
    out
}

fn poly_add_assign<R: Ring>(acc: &mut Poly<R>, p: Poly<R>) {
    if acc.len() < p.len() {
        acc.resize(p.len(), R::zero());
    }
    for (i, c) in p.into_iter().enumerate() {
        acc[i] = acc[i].clone() + c;
    }
}

/// Coefficients of `det(I - zM)` in `z`, degrees `0..=q`.
///
/// `M` is lower Hessenberg (nothing above the superdiagonal), so the leading
/// principal minors obey
/// `D_m = sum_k (-1)^(m-k) a_{m,k} a_{k,k+1} ... a_{m-1,m} D_{k-1}`
/// with `a = I - zM`; only the band entries contribute.
pub fn secular_determinant<R: Ring>(m: &ExclusionMatrix<R>) -> Vec<R> {
    let q = m.q();
    // entry of I - zM as a polynomial in z
    let a = |r: usize, c: usize| -> Poly<R> {
        let mut p = vec![if r == c { R::one() } else { R::zero() }];
        let v = &m.rows[r - 1][c - 1];
        if !v.is_zero() {
            p.push(-v.clone());
        }
        p
    };
    let mut minors: Vec<Poly<R>> = vec![vec![R::one()]];
    for row in 1..=q {
        let mut acc: Poly<R> = Vec::new();
        let mut chain: Poly<R> = vec![R::one()];
        for k in (1..=row).rev() {
            if k < row {
                chain = poly_mul(&chain, &a(k, k + 1));
            }
            let entry = a(row, k);
            if entry.iter().all(Ring::is_zero) || chain.iter().all(Ring::is_zero) {
                continue;
            }
            let mut term = poly_mul(&poly_mul(&entry, &chain), &minors[k - 1]);
            if (row - k) % 2 == 1 {
                term = term.into_iter().map(|c| -c).collect();
            }
            poly_add_assign(&mut acc, term);
        }
        minors.push(acc);
    }
    let mut det = minors.pop().unwrap_or_default();
    det.resize(q + 1, R::zero());
    det
}

/// `det(I - zM)` by the Faddeev-LeVerrier recursion on the dense matrix.
/// Independent of the band structure; used to cross-check
/// [`secular_determinant`].
pub fn secular_determinant_dense<R: Ring>(m: &ExclusionMatrix<R>) -> Vec<R> {
    let q = m.q();
    let mut coeffs = vec![R::one()];
    let mut acc = vec![vec![R::zero(); q]; q];
    for k in 1..=q {
        for (r, row) in acc.iter_mut().enumerate() {
            row[r] = row[r].clone() + coeffs[k - 1].clone();
        }
        let prod = m.mul(&acc);
        let tr = (0..q).fold(R::zero(), |t, r| t + prod[r][r].clone());
        coeffs.push(-tr.scale(&BigRational::new(BigInt::one(), BigInt::from(k))));
        acc = prod;
    }
    coeffs
}

/// Reads `Z(0), Z(1), ...` off a secular determinant: the coefficient of
/// `z^{gn}` (pure) or `z^n` (mixed) is `(-1)^n Z(n)`.
pub fn partition_functions_from_determinant<R: Ring>(
    det: &[R],
    g: u32,
    mixed: bool,
) -> Result<Vec<R>> {
    let step = if mixed { 1 } else { g as usize };
    for (d, c) in det.iter().enumerate() {
        if d % step != 0 && !c.is_zero() {
            return Err(Error::Consistency(format!(
                "pure g = {g} determinant has a nonzero z^{d} coefficient"
            )));
        }
    }
    Ok(det
        .iter()
        .step_by(step)
        .enumerate()
        .map(|(n, c)| if n % 2 == 1 { -c.clone() } else { c.clone() })
        .collect())
}

/// `Z(0), ..., Z(n_max)`.
///
/// Pure mode evaluates the shifted nested sums
/// `sum_{k_1=1}^{q-gn+1} sum_{k_2=1}^{k_1} ... prod_t s_{k_t + g(n-t)}`;
/// mixed mode fills levels `1..q` with holes, fermions (`s~_k`) and bound
/// states (`(-1)^{g-1} s_k` on `k..k+g-1`).
pub fn partition_functions<R: Ring>(sd: &SpectralData<R>) -> Vec<R> {
    let s = sd.s_values();
    if sd.is_mixed() {
        mixed_fill(sd, &s)
    } else {
        let q = sd.q();
        let g = sd.g as usize;
        (0..=q / g).map(|n| nested_sum(&s, q, g, n)).collect()
    }
}

fn nested_sum<R: Ring>(s: &[R], q: usize, g: usize, n: usize) -> R {
    fn rec<R: Ring>(s: &[R], g: usize, n: usize, t: usize, upper: usize, acc: &R, out: &mut R) {
        if t > n {
            *out = out.clone() + acc.clone();
            return;
        }
        for k in 1..=upper {
            let v = &s[k + g * (n - t) - 1];
            if v.is_zero() {
                continue;
            }
            rec(s, g, n, t + 1, k, &(acc.clone() * v.clone()), out);
        }
    }
    if n == 0 {
        return R::one();
    }
    if g * n > q {
        return R::zero();
    }
    let mut out = R::zero();
    rec(s, g, n, 1, q - g * n + 1, &R::one(), &mut out);
    out
}

fn mixed_fill<R: Ring>(sd: &SpectralData<R>, s: &[R]) -> Vec<R> {
    let q = sd.q();
    let g = sd.g as usize;
    let bound_sign = if g.is_multiple_of(2) {
        -R::one()
    } else {
        R::one()
    };
    // fill[k][n]: weight of fillings of levels 1..k with n particles
    let mut fill: Vec<Vec<R>> = vec![vec![R::one()]];
    for k in 1..=q {
        let mut row = vec![R::zero(); k + 1];
        for (n, w) in fill[k - 1].iter().enumerate() {
            row[n] = row[n].clone() + w.clone();
            row[n + 1] = row[n + 1].clone() + w.clone() * sd.stilde_at(k);
        }
        if k >= g {
            let weight = bound_sign.clone() * s[k - g].clone();
            for (n, w) in fill[k - g].iter().enumerate() {
                row[n + g] = row[n + g].clone() + w.clone() * weight.clone();
            }
        }
        fill.push(row);
    }
    fill.pop().unwrap_or_default()
}

/// `b(1), ..., b(order)`: coefficients of `log sum_n Z(n) z^n`.
pub fn cluster_coefficients<R: Ring>(z: &[R], order: usize) -> Result<Vec<R>> {
    if z.first() != Some(&R::one()) {
        return domain("cluster coefficients need Z(0) = 1");
    }
    let log = TruncatedPowerSeries::new(z.to_vec(), order).log()?;
    Ok(log.into_coeffs().into_iter().skip(1).collect())
}

/// `tr M^n`.
pub fn trace_power<R: Ring>(m: &ExclusionMatrix<R>, n: usize) -> Result<R> {
    if n == 0 {
        return domain("trace power needs n >= 1");
    }
    let mut acc = m.rows.clone();
    for _ in 1..n {
        acc = m.mul(&acc);
    }
    Ok((0..m.q()).fold(R::zero(), |t, r| t + acc[r][r].clone()))
}

fn weighted_sum<R: Ring>(
    sd: &SpectralData<R>,
    floors: usize,
    coeff: BigRational,
    factor: impl Fn(usize, usize) -> R,
) -> R {
    let q = sd.q();
    if floors > q {
        return R::zero();
    }
    let mut acc = R::zero();
    for k in 1..=q - floors + 1 {
        let mut term = R::one();
        for i in 1..=floors {
            term = term * factor(k, i);
        }
        acc = acc + term;
    }
    acc.scale(&coeff)
}

/// `sum over compositions of c * sum_k prod s~_{k+i-1}^{l~_i} s_{k+i-1}^{l_i}`,
/// with `k` running over `1..=q-(j+g-1)+1`. Pure mode uses g-compositions of
/// `n`, mixed mode (1,g)-compositions of `n`.
fn composition_sum<R: Ring>(sd: &SpectralData<R>, n: u32) -> Result<R> {
    let g = sd.g;
    let s = sd.s_values();
    let s_at = |k: usize| s.get(k - 1).cloned().unwrap_or_else(R::zero);
    let mut acc = R::zero();
    if sd.is_mixed() {
        for mc in enumerate_mixed_compositions(n, g)? {
            let (tilde, parts) = (mc.tilde(), mc.parts());
            let term = weighted_sum(sd, mc.floors(), c_1g(&mc)?, |k, i| {
                let mut v = sd.stilde_at(k + i - 1).pow(tilde[i - 1]);
                if let Some(&l) = parts.get(i - 1) {
                    v = v * s_at(k + i - 1).pow(l);
                }
                v
            });
            acc = acc + term;
        }
    } else {
        for comp in enumerate_g_compositions(n, g)? {
            let parts = comp.parts();
            let floors = comp.len() + g as usize - 1;
            let term = weighted_sum(sd, floors, c_g(&comp)?, |k, i| match parts.get(i - 1) {
                Some(&l) => s_at(k + i - 1).pow(l),
                None => R::one(),
            });
            acc = acc + term;
        }
    }
    Ok(acc)
}

fn sign<R: Ring>(n: usize, v: R) -> R {
    if n.is_multiple_of(2) {
        -v
    } else {
        v
    }
}

/// `b(n)` from the composition expansion, `(-1)^{n+1}` times the weighted
/// composition sum.
pub fn cluster_coefficient_via_formula<R: Ring>(sd: &SpectralData<R>, n: u32) -> Result<R> {
    if n == 0 {
        return domain("cluster coefficients start at n = 1");
    }
    Ok(sign(n as usize, composition_sum(sd, n)?))
}

/// `tr M^n` from the composition expansion: `gm * (sum over g-compositions
/// of m)` with `n = gm` in pure mode (zero when `g` does not divide `n`), and
/// `n * (sum over (1,g)-compositions of n)` in mixed mode.
pub fn trace_via_formula<R: Ring>(sd: &SpectralData<R>, n: u32) -> Result<R> {
    if n == 0 {
        return domain("trace power needs n >= 1");
    }
    let scale = BigRational::from_integer(BigInt::from(n));
    if sd.is_mixed() {
        return Ok(composition_sum(sd, n)?.scale(&scale));
    }
    if !n.is_multiple_of(sd.g) {
        return Ok(R::zero());
    }
    Ok(composition_sum(sd, n / sd.g)?.scale(&scale))
}

/// Uniform rationals `a/b` with `|a| <= 5`, `1 <= b <= 4`, from a seeded stream.
pub fn random_spectral_data(
    q: usize,
    g: u32,
    mixed: bool,
    seed: u64,
) -> Result<SpectralData<BigRational>> {
    check_order(g)?;
    if q < g as usize {
        return domain(format!("matrix size {q} is smaller than g = {g}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = |len: usize| -> Vec<BigRational> {
        (0..len)
            .map(|_| {
                let num: i64 = rng.random_range(-5..=5);
                let den: i64 = rng.random_range(1..=4);
                BigRational::new(num.into(), den.into())
            })
            .collect()
    };
    let f = draw(q - 1);
    let gdiag = draw(q - g as usize + 1);
    let stilde = mixed.then(|| draw(q));
    SpectralData::new(g, f, gdiag, stilde)
}

/// Unit hoppings `f_k = 1`, symbolic `g_k = s_k` and (mixed) `s~_k`.
pub fn symbolic_spectral_data(
    q: usize,
    g: u32,
    mixed: bool,
) -> Result<SpectralData<MultiPolynomial>> {
    check_order(g)?;
    if q < g as usize {
        return domain(format!("matrix size {q} is smaller than g = {g}"));
    }
    let s = (1..=q - g as usize + 1)
        .map(|k| MultiPolynomial::var(Var::S(k as u32)))
        .collect();
    let stilde = mixed.then(|| {
        (1..=q)
            .map(|k| MultiPolynomial::var(Var::STilde(k as u32)))
            .collect()
    });
    SpectralData::from_spectral(g, s, stilde)
}

/// The Hofstadter (g = 2) data at flux `p/q`: `f_k = 1` and
/// `s_k = (1 - Q^{kp})(1 - Q^{-kp})` for `k = 1..q-1`, reduced modulo `Q^q - 1`.
pub fn hofstadter_spectral_data(p: u64, q: u64) -> Result<SpectralData<LaurentPolynomial>> {
    if q < 2 {
        return domain("the Hofstadter preset needs q >= 2");
    }
    let s = (1..q as i64)
        .map(|k| {
            let e = k * p as i64;
            let a = LaurentPolynomial::from_integer_terms(&[(0, 1), (e, -1)]);
            let b = LaurentPolynomial::from_integer_terms(&[(0, 1), (-e, -1)]);
            (a * b).with_modulus(q)
        })
        .collect::<Result<Vec<_>>>()?;
    SpectralData::from_spectral(2, s, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn sv(k: u32) -> MultiPolynomial {
        MultiPolynomial::var(Var::S(k))
    }

    #[test]
    fn spectral_function_products() {
        let sd = SpectralData::new(
            3,
            vec![q(2, 1), q(3, 1), q(5, 1)],
            vec![q(7, 1), q(11, 1)],
            None,
        )
        .unwrap();
        assert_eq!(spectral_s(&sd, 1).unwrap(), q(42, 1));
        assert_eq!(spectral_s(&sd, 2).unwrap(), q(165, 1));
        assert!(spectral_s(&sd, 3).is_err());
        assert!(spectral_s(&sd, 0).is_err());
    }

    #[test]
    fn matrix_layout() {
        let sd = symbolic_spectral_data(5, 3, true).unwrap();
        let m = ExclusionMatrix::from_spectral(&sd);
        assert_eq!(m.entry(1, 2), &MultiPolynomial::one());
        assert_eq!(m.entry(3, 1), &sv(1));
        assert_eq!(m.entry(5, 3), &sv(3));
        assert_eq!(m.entry(2, 2), &MultiPolynomial::var(Var::STilde(2)));
        assert!(m.entry(1, 5).is_zero());
        assert!(m.entry(5, 1).is_zero());
    }

    #[test]
    fn footnote_z3() {
        let sd = symbolic_spectral_data(7, 2, false).unwrap();
        let det = secular_determinant(&ExclusionMatrix::from_spectral(&sd));
        let z = partition_functions_from_determinant(&det, 2, false).unwrap();
        let expect = sv(5) * sv(3) * sv(1)
            + sv(6) * sv(3) * sv(1)
            + sv(6) * sv(4) * sv(1)
            + sv(6) * sv(4) * sv(2);
        assert_eq!(z[3], expect);
        assert_eq!(z[0], MultiPolynomial::one());
        assert_eq!(partition_functions(&sd), z);
    }

    #[test]
    fn dense_and_banded_determinants_agree() {
        for (qq, g, mixed) in [(6, 2, false), (7, 3, true), (5, 2, true)] {
            let sd = symbolic_spectral_data(qq, g, mixed).unwrap();
            let m = ExclusionMatrix::from_spectral(&sd);
            assert_eq!(secular_determinant(&m), secular_determinant_dense(&m));
        }
    }

    #[test]
    fn single_particle_cluster() {
        let x = q(3, 2);
        let b = cluster_coefficients(&[q(1, 1), x.clone()], 3).unwrap();
        assert_eq!(
            b,
            vec![x.clone(), -(&x * &x) / q(2, 1), &x * &x * &x / q(3, 1)]
        );
        assert!(cluster_coefficients(&[q(2, 1)], 2).is_err());
    }

    #[test]
    fn small_traces() {
        let sd = random_spectral_data(5, 2, false, 3).unwrap();
        let m = ExclusionMatrix::from_spectral(&sd);
        let expect: BigRational = (0..4)
            .map(|k| &sd.f()[k] * &sd.gdiag()[k])
            .sum::<BigRational>()
            * q(2, 1);
        assert_eq!(trace_power(&m, 2).unwrap(), expect);
        assert!(trace_power(&m, 3).unwrap().is_zero());
        assert!(trace_via_formula(&sd, 3).unwrap().is_zero());
        let s_sum: BigRational = sd.s_values().into_iter().sum();
        assert_eq!(trace_via_formula(&sd, 2).unwrap(), s_sum * q(2, 1));
    }

    #[test]
    fn seeded_data_is_reproducible() {
        assert_eq!(
            random_spectral_data(8, 3, true, 42).unwrap(),
            random_spectral_data(8, 3, true, 42).unwrap()
        );
        assert_ne!(
            random_spectral_data(8, 3, true, 42).unwrap(),
            random_spectral_data(8, 3, true, 43).unwrap()
        );
    }

    #[test]
    fn hofstadter_preset_small() {
        let sd = hofstadter_spectral_data(1, 5).unwrap();
        assert_eq!(sd.q(), 5);
        let s1 = &sd.s_values()[0];
        assert_eq!(
            s1.recentred(),
            LaurentPolynomial::from_integer_terms(&[(0, 2), (1, -1), (-1, -1)])
        );
    }
}
