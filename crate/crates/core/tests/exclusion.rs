mod common;

use common::{
    dense_matrix, det_at, eval_poly, int, log_series, s_values, trace_by_walks, z_by_arrangements,
    z_by_subsets, Lcg,
};
use lukasiewicz::exclusion::{
    cluster_coefficient_via_formula, cluster_coefficients, partition_functions,
    partition_functions_from_determinant, random_spectral_data, secular_determinant,
    secular_determinant_dense, symbolic_spectral_data, trace_power, trace_via_formula,
};
use lukasiewicz::symbolic::{MultiPolynomial, Var};
use lukasiewicz::{ExclusionMatrix, SpectralData};
use num_rational::BigRational;

fn lcg_data(q: usize, g: usize, mixed: bool, seed: u64) -> SpectralData<BigRational> {
    let mut rng = Lcg(seed);
    let f = rng.rationals(q - 1);
    let gd = rng.rationals(q - g + 1);
    let st = mixed.then(|| rng.rationals(q));
    SpectralData::new(g as u32, f, gd, st).unwrap()
}

fn oracle_matrix(sd: &SpectralData<BigRational>) -> Vec<Vec<BigRational>> {
    dense_matrix(sd.g() as usize, sd.f(), sd.gdiag(), sd.stilde())
}

#[test]
fn determinant_matches_pointwise_elimination() {
    for g in 2..=4usize {
        for q in g..=9 {
            for mixed in [false, true] {
                let sd = lcg_data(q, g, mixed, (100 * g + q) as u64);
                let m = ExclusionMatrix::from_spectral(&sd);
                let det = secular_determinant(&m);
                assert_eq!(det, secular_determinant_dense(&m));
                let dense = oracle_matrix(&sd);
                for x in 0..=q as i64 {
                    let z = common::q(2 * x - q as i64, 3);
                    assert_eq!(eval_poly(&det, &z), det_at(&dense, &z), "g={g} q={q} z={z}");
                }
            }
        }
    }
}

#[test]
fn partition_functions_match_occupation_sums() {
    for g in 2..=4usize {
        for q in g..=10 {
            for seed in 0..3u64 {
                let sd = lcg_data(q, g, false, seed * 31 + q as u64);
                let s = s_values(g, sd.f(), sd.gdiag());
                let z = partition_functions(&sd);
                assert_eq!(z, z_by_subsets(g, &s, q), "pure g={g} q={q}");
                let det = secular_determinant(&ExclusionMatrix::from_spectral(&sd));
                assert_eq!(
                    partition_functions_from_determinant(&det, g as u32, false).unwrap(),
                    z
                );

                let sd = lcg_data(q, g, true, seed * 37 + q as u64);
                let s = s_values(g, sd.f(), sd.gdiag());
                let z = partition_functions(&sd);
                assert_eq!(
                    z,
                    z_by_arrangements(g, &s, sd.stilde().unwrap()),
                    "mixed g={g} q={q}"
                );
                let det = secular_determinant(&ExclusionMatrix::from_spectral(&sd));
                assert_eq!(
                    partition_functions_from_determinant(&det, g as u32, true).unwrap(),
                    z
                );
            }
        }
    }
}

#[test]
fn cluster_coefficients_and_traces() {
    for g in 2..=4usize {
        for q in g..=8 {
            for mixed in [false, true] {
                let sd = random_spectral_data(q, g as u32, mixed, (7 * q + g) as u64).unwrap();
                let z = partition_functions(&sd);
                let order = if mixed { 6 } else { 3 };
                let b = cluster_coefficients(&z, order).unwrap();
                assert_eq!(b, log_series(&z, order)[1..].to_vec());
                let dense = oracle_matrix(&sd);
                for n in 1..=order {
                    assert_eq!(
                        b[n - 1],
                        cluster_coefficient_via_formula(&sd, n as u32).unwrap()
                    );
                    let len = if mixed { n } else { g * n };
                    // (-1)^{n+1}
                    let sign = if n % 2 == 1 { int(1) } else { int(-1) };
                    let expected = int(len as i64) * sign * &b[n - 1];
                    let m = ExclusionMatrix::from_spectral(&sd);
                    assert_eq!(trace_power(&m, len).unwrap(), expected, "g={g} q={q} n={n}");
                    assert_eq!(trace_via_formula(&sd, len as u32).unwrap(), expected);
                    assert_eq!(trace_by_walks(&dense, len), expected);
                }
                if !mixed {
                    let m = ExclusionMatrix::from_spectral(&sd);
                    for len in (1..=2 * g).filter(|l| l % g != 0) {
                        assert_eq!(trace_by_walks(&dense, len), int(0));
                        assert_eq!(trace_power(&m, len).unwrap(), int(0));
                        assert_eq!(trace_via_formula(&sd, len as u32).unwrap(), int(0));
                    }
                }
            }
        }
    }
}

/// Mixed data with the diagonal switched off reduces to pure data of the
/// same order: `Z_pure(n) = (-1)^{(g+1)n} Z_mixed(gn)`.
#[test]
fn mixed_reduces_to_pure() {
    for g in 2..=4usize {
        for q in g..=10 {
            let pure = lcg_data(q, g, false, q as u64 + 5);
            let mixed = pure.with_stilde(vec![int(0); q]).unwrap();
            let zp = partition_functions(&pure);
            let zm = partition_functions(&mixed);
            for (n, v) in zp.iter().enumerate() {
                let sign = if ((g + 1) * n) % 2 == 0 {
                    int(1)
                } else {
                    int(-1)
                };
                assert_eq!(*v, sign * &zm[g * n]);
            }
        }
    }
}

fn s(k: u32) -> MultiPolynomial {
    MultiPolynomial::var(Var::S(k))
}

fn t(k: u32) -> MultiPolynomial {
    MultiPolynomial::var(Var::STilde(k))
}

fn prod(items: &[MultiPolynomial]) -> MultiPolynomial {
    items.iter().cloned().reduce(|a, b| a * b).unwrap()
}

#[test]
fn symbolic_pure_three_particles() {
    let sd = symbolic_spectral_data(7, 2, false).unwrap();
    let z = partition_functions(&sd);
    let expected = prod(&[s(5), s(3), s(1)])
        + prod(&[s(6), s(3), s(1)])
        + prod(&[s(6), s(4), s(1)])
        + prod(&[s(6), s(4), s(2)]);
    assert_eq!(z[3], expected);
    let det = secular_determinant(&ExclusionMatrix::from_spectral(&sd));
    assert_eq!(
        partition_functions_from_determinant(&det, 2, false).unwrap()[3],
        expected
    );
}

#[test]
fn symbolic_mixed_four_particles() {
    let sd = symbolic_spectral_data(5, 2, true).unwrap();
    let z = partition_functions(&sd);
    let m = |k| -s(k);
    let terms = [
        prod(&[t(4), t(3), t(2), t(1)]),
        prod(&[t(5), t(3), t(2), t(1)]),
        prod(&[t(5), t(4), t(2), t(1)]),
        prod(&[t(5), t(4), t(3), t(1)]),
        prod(&[t(5), t(4), t(3), t(2)]),
        prod(&[t(4), t(3), m(1)]),
        prod(&[t(5), t(3), m(1)]),
        prod(&[t(5), t(4), m(1)]),
        prod(&[t(4), t(1), m(2)]),
        prod(&[t(5), t(1), m(2)]),
        prod(&[t(5), t(4), m(2)]),
        prod(&[t(2), t(1), m(3)]),
        prod(&[t(5), t(1), m(3)]),
        prod(&[t(5), t(2), m(3)]),
        prod(&[t(2), t(1), m(4)]),
        prod(&[t(3), t(1), m(4)]),
        prod(&[t(3), t(2), m(4)]),
        prod(&[m(3), m(1)]),
        prod(&[m(4), m(1)]),
        prod(&[m(4), m(2)]),
    ];
    let expected = terms.into_iter().reduce(|a, b| a + b).unwrap();
    assert_eq!(expected.len(), 20);
    assert_eq!(z[4], expected);
    let det = secular_determinant(&ExclusionMatrix::from_spectral(&sd));
    assert_eq!(
        partition_functions_from_determinant(&det, 2, true).unwrap()[4],
        expected
    );
}

/// `-b(4)` for `g = 2` mixed data at `q = 5`, summed directly from the six
/// listed composition terms.
#[test]
fn symbolic_mixed_cluster_coefficient() {
    let q = 5u32;
    let sd = symbolic_spectral_data(q as usize, 2, true).unwrap();
    let z = partition_functions(&sd);
    let b = cluster_coefficients(&z, 4).unwrap();
    let quarter = MultiPolynomial::term(common::q(1, 4), &[]);
    let half = MultiPolynomial::term(common::q(1, 2), &[]);
    let mut expected = MultiPolynomial::term(int(0), &[]);
    for k in 1..=q {
        expected = expected + quarter.clone() * prod(&[t(k), t(k), t(k), t(k)]);
    }
    for k in 1..q {
        expected = expected
            + prod(&[t(k), t(k), s(k)])
            + prod(&[t(k), s(k), t(k + 1)])
            + prod(&[s(k), t(k + 1), t(k + 1)])
            + half.clone() * prod(&[s(k), s(k)]);
    }
    for k in 1..q - 1 {
        expected = expected + prod(&[s(k), s(k + 1)]);
    }
    assert_eq!(-b[3].clone(), expected);
    assert_eq!(cluster_coefficient_via_formula(&sd, 4).unwrap(), b[3]);
}

#[test]
fn shape_validation() {
    assert!(SpectralData::new(2, vec![int(1); 3], vec![int(1); 2], None).is_err());
    assert!(SpectralData::new(3, vec![int(1); 3], vec![int(1); 2], Some(vec![int(1); 3])).is_err());
    assert!(random_spectral_data(2, 3, false, 1).is_err());
    assert!(cluster_coefficients(&[int(2), int(1)], 2).is_err());
}

#[test]
fn mixed_traces_up_to_length_twelve() {
    for g in 2..=4u32 {
        for q in [g as usize, 6, 9] {
            let sd = random_spectral_data(q, g, true, 40 + q as u64).unwrap();
            let m = ExclusionMatrix::from_spectral(&sd);
            let dense = oracle_matrix(&sd);
            for n in [8usize, 10, 12] {
                let expected = trace_power(&m, n).unwrap();
                assert_eq!(trace_via_formula(&sd, n as u32).unwrap(), expected, "g={g} q={q} N={n}");
                if n == 8 {
                    assert_eq!(trace_by_walks(&dense, n), expected);
                }
            }
        }
    }
}
