//! Python bindings. Rationals cross the boundary as `fractions.Fraction`,
//! integers as Python `int`, paths as `"start:steps"` strings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use lukasiewicz::coefficients::{self, FloorCountTable};
use lukasiewicz::compositions;
use lukasiewicz::exclusion;
use lukasiewicz::hofstadter::{self, SquareWalk};
use lukasiewicz::paths;
use lukasiewicz::symbolic::LaurentPolynomial;
use lukasiewicz::{Error, GComposition, Limits, MixedComposition, PathKind, SpectralData};

fn err(e: Error) -> PyErr {
    match e {
        Error::Domain(m) => PyValueError::new_err(m),
        Error::Resource(m) => PyRuntimeError::new_err(format!("resource limit: {m}")),
        Error::Consistency(m) => PyRuntimeError::new_err(format!("consistency violation: {m}")),
    }
}

type FloorRow = (u32, BigInt, BigInt, BigInt, BigInt);

fn rows(t: FloorCountTable) -> (Vec<FloorRow>, BigInt) {
    let floors = t
        .floors
        .into_iter()
        .map(|f| (f.i, f.up, f.down, f.horizontal, f.any))
        .collect();
    (floors, t.total)
}

fn integer_terms(p: &LaurentPolynomial) -> PyResult<BTreeMap<i64, BigInt>> {
    p.integer_terms()
        .ok_or_else(|| PyRuntimeError::new_err("non-integral area count"))
}

#[pyfunction]
fn g_compositions(n: u32, g: u32) -> PyResult<Vec<Vec<u32>>> {
    let list = compositions::enumerate_g_compositions(n, g).map_err(err)?;
    Ok(list.into_iter().map(Vec::from).collect())
}

/// `(tilde, parts)` pairs in canonical order.
#[pyfunction]
fn mixed_compositions(total: u32, g: u32) -> PyResult<Vec<(Vec<u32>, Vec<u32>)>> {
    let list = compositions::enumerate_mixed_compositions(total, g).map_err(err)?;
    Ok(list
        .into_iter()
        .map(|c| (c.tilde().to_vec(), c.parts().to_vec()))
        .collect())
}

#[pyfunction]
fn count_mixed_compositions(total: u32, g: u32) -> PyResult<BigInt> {
    compositions::count_mixed_compositions(total, g).map_err(err)
}

#[pyfunction]
fn c_g(parts: Vec<u32>, g: u32) -> PyResult<BigRational> {
    coefficients::c_g(&GComposition::new(parts, g).map_err(err)?).map_err(err)
}

#[pyfunction]
fn c_1g(tilde: Vec<u32>, parts: Vec<u32>, g: u32) -> PyResult<BigRational> {
    coefficients::c_1g(&MixedComposition::new(tilde, parts, g).map_err(err)?).map_err(err)
}

/// Rows `(i, up, down, horizontal, any)` and the total.
#[pyfunction]
fn dyck_floor_counts(parts: Vec<u32>, g: u32) -> PyResult<(Vec<FloorRow>, BigInt)> {
    let comp = GComposition::new(parts, g).map_err(err)?;
    Ok(rows(coefficients::dyck_floor_counts(&comp).map_err(err)?))
}

#[pyfunction]
fn motzkin_floor_counts(
    tilde: Vec<u32>,
    parts: Vec<u32>,
    g: u32,
) -> PyResult<(Vec<FloorRow>, BigInt)> {
    let mc = MixedComposition::new(tilde, parts, g).map_err(err)?;
    Ok(rows(coefficients::motzkin_floor_counts(&mc).map_err(err)?))
}

#[pyfunction]
fn dyck_bridges(n: u32, g: u32) -> PyResult<Vec<String>> {
    let list = paths::enumerate_dyck_bridges(n, g, &Limits::from_env()).map_err(err)?;
    Ok(list.iter().map(ToString::to_string).collect())
}

#[pyfunction]
fn motzkin_bridges(total: u32, g: u32) -> PyResult<Vec<String>> {
    let list = paths::enumerate_motzkin_bridges(total, g, &Limits::from_env()).map_err(err)?;
    Ok(list.iter().map(ToString::to_string).collect())
}

/// Profile of a path string, e.g. `"(3,0,1,1)"` or `"(1,1,0,1;1,2)"`.
#[pyfunction]
#[pyo3(signature = (path, g, motzkin = false))]
fn profile_of(path: &str, g: u32, motzkin: bool) -> PyResult<String> {
    let kind = if motzkin {
        PathKind::Motzkin
    } else {
        PathKind::Dyck
    };
    let p = paths::LatticePath::parse(path, g, kind).map_err(err)?;
    Ok(paths::profile_of(&p).map_err(err)?.to_string())
}

#[pyfunction]
fn reconstruct_from_floor_sequence(start: u32, floors: Vec<u32>, g: u32) -> PyResult<String> {
    Ok(paths::reconstruct_from_floor_sequence(start, &floors, g)
        .map_err(err)?
        .to_string())
}

#[pyfunction]
fn cut_and_exchange(path: &str, g: u32, floor: u32) -> PyResult<String> {
    let p = paths::LatticePath::parse(path, g, PathKind::Dyck).map_err(err)?;
    Ok(paths::cut_and_exchange(&p, floor).map_err(err)?.to_string())
}

fn spectral(
    g: u32,
    f: Vec<BigRational>,
    gdiag: Vec<BigRational>,
    stilde: Option<Vec<BigRational>>,
) -> PyResult<SpectralData<BigRational>> {
    SpectralData::new(g, f, gdiag, stilde).map_err(err)
}

/// Coefficients of `det(I - zM)`.
#[pyfunction]
#[pyo3(signature = (g, f, gdiag, stilde = None))]
fn secular_determinant(
    g: u32,
    f: Vec<BigRational>,
    gdiag: Vec<BigRational>,
    stilde: Option<Vec<BigRational>>,
) -> PyResult<Vec<BigRational>> {
    let sd = spectral(g, f, gdiag, stilde)?;
    Ok(exclusion::secular_determinant(
        &exclusion::ExclusionMatrix::from_spectral(&sd),
    ))
}

#[pyfunction]
#[pyo3(signature = (g, f, gdiag, stilde = None))]
fn partition_functions(
    g: u32,
    f: Vec<BigRational>,
    gdiag: Vec<BigRational>,
    stilde: Option<Vec<BigRational>>,
) -> PyResult<Vec<BigRational>> {
    Ok(exclusion::partition_functions(&spectral(
        g, f, gdiag, stilde,
    )?))
}

#[pyfunction]
fn cluster_coefficients(z: Vec<BigRational>, order: usize) -> PyResult<Vec<BigRational>> {
    exclusion::cluster_coefficients(&z, order).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, f, gdiag, n, stilde = None))]
fn trace_power(
    g: u32,
    f: Vec<BigRational>,
    gdiag: Vec<BigRational>,
    n: usize,
    stilde: Option<Vec<BigRational>>,
) -> PyResult<BigRational> {
    let sd = spectral(g, f, gdiag, stilde)?;
    exclusion::trace_power(&exclusion::ExclusionMatrix::from_spectral(&sd), n).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, f, gdiag, n, stilde = None))]
fn trace_via_formula(
    g: u32,
    f: Vec<BigRational>,
    gdiag: Vec<BigRational>,
    n: u32,
    stilde: Option<Vec<BigRational>>,
) -> PyResult<BigRational> {
    exclusion::trace_via_formula(&spectral(g, f, gdiag, stilde)?, n).map_err(err)
}

/// `{area: count}` from the expansion of `(u + 1/u + v + 1/v)^n`.
#[pyfunction]
fn weyl_expand_power(n: u32) -> PyResult<BTreeMap<i64, BigInt>> {
    integer_terms(&hofstadter::weyl_expand_power(n))
}

#[pyfunction]
fn walk_area_histogram(n: u32) -> PyResult<BTreeMap<i64, BigInt>> {
    hofstadter::walk_area_histogram(n, &Limits::from_env()).map_err(err)
}

#[pyfunction]
fn area_polynomial_via_trace(n: u32) -> PyResult<BTreeMap<i64, BigInt>> {
    integer_terms(&hofstadter::area_polynomial_via_trace(n).map_err(err)?)
}

#[pyfunction]
fn walk_area(walk: &str) -> PyResult<i64> {
    Ok(hofstadter::walk_area(
        &SquareWalk::parse(walk).map_err(err)?,
    ))
}

/// Runs the command line with `args` (without the program name); returns
/// `(exit_code, stdout, stderr)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String, String) {
    let argv = std::iter::once("lukasiewicz".to_string()).chain(args);
    let out = lukasiewicz::cli::run_cli(argv);
    (out.code, out.stdout, out.stderr)
}

#[pymodule]
fn lukasiewicz_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(g_compositions, m)?)?;
    m.add_function(wrap_pyfunction!(mixed_compositions, m)?)?;
    m.add_function(wrap_pyfunction!(count_mixed_compositions, m)?)?;
    m.add_function(wrap_pyfunction!(c_g, m)?)?;
    m.add_function(wrap_pyfunction!(c_1g, m)?)?;
    m.add_function(wrap_pyfunction!(dyck_floor_counts, m)?)?;
    m.add_function(wrap_pyfunction!(motzkin_floor_counts, m)?)?;
    m.add_function(wrap_pyfunction!(dyck_bridges, m)?)?;
    m.add_function(wrap_pyfunction!(motzkin_bridges, m)?)?;
    m.add_function(wrap_pyfunction!(profile_of, m)?)?;
    m.add_function(wrap_pyfunction!(reconstruct_from_floor_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(cut_and_exchange, m)?)?;
    m.add_function(wrap_pyfunction!(secular_determinant, m)?)?;
    m.add_function(wrap_pyfunction!(partition_functions, m)?)?;
    m.add_function(wrap_pyfunction!(cluster_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(trace_power, m)?)?;
    m.add_function(wrap_pyfunction!(trace_via_formula, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_expand_power, m)?)?;
    m.add_function(wrap_pyfunction!(walk_area_histogram, m)?)?;
    m.add_function(wrap_pyfunction!(area_polynomial_via_trace, m)?)?;
    m.add_function(wrap_pyfunction!(walk_area, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
