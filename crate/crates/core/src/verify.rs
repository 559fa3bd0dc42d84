//! Cross-oracle self-checks behind the `verify` command.
//!
//! Each check compares a closed formula against an independent computation
//! (usually brute-force enumeration) and reports the inputs that failed.

use std::collections::BTreeSet;
use std::fmt::Display;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::coefficients::{
    dyck_floor_counts, motzkin_floor_counts, motzkin_profile_sum, total_dyck_bridges,
    total_motzkin_bridges,
};
use crate::compositions::{
    count_g_compositions, count_mixed_compositions, enumerate_g_compositions,
    enumerate_mixed_compositions, mixed_count_series,
};
use crate::error::{Error, Result};
use crate::exclusion::{
    cluster_coefficient_via_formula, cluster_coefficients, partition_functions,
    partition_functions_from_determinant, random_spectral_data, secular_determinant,
    secular_determinant_dense, trace_power, trace_via_formula, ExclusionMatrix, SpectralData,
};
use crate::hofstadter::{
    area_polynomial_via_trace, check_histogram, histogram_polynomial, walk_area_histogram,
    weyl_expand_power,
};
use crate::limits::Limits;
use crate::paths::{
    cut_and_exchange, enumerate_dyck_bridges, enumerate_motzkin_bridges, profile_of,
    reconstruct_from_floor_sequence, tally_by_profile, up_step_floors, LatticePath, PathProfile,
    Step,
};
use crate::symbolic::{binomial, Ring};

/// Outcome of one identity at one set of inputs.
#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub inputs: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub g: u32,
    pub max_n: u32,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
}

fn fail<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Consistency(msg.into()))
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, left: T, right: T) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        fail(format!("{what}: {left:?} != {right:?}"))
    }
}

/// Runs every identity for order `g` at sizes up to `max_n` up steps.
pub fn run_verification(g: u32, max_n: u32, seed: u64, limits: &Limits) -> VerifyReport {
    let mut checks = Vec::new();
    let mut record = |name: &str, inputs: String, outcome: Result<()>| {
        checks.push(CheckOutcome {
            name: name.to_string(),
            inputs,
            passed: outcome.is_ok(),
            detail: outcome.err().map(|e| e.to_string()),
        });
    };
    let max_len = (g * max_n) as usize;
    for n in 1..=max_n {
        record(
            "g-composition count",
            format!("g={g} n={n}"),
            check_composition_count(n, g),
        );
    }
    for n in 1..=max_n {
        if (g * n) as usize > limits.dyck_len {
            break;
        }
        let inputs = format!("g={g} n={n}");
        record(
            "dyck oracle",
            inputs.clone(),
            check_dyck_oracle(n, g, limits),
        );
        record(
            "floor-sequence round trip",
            inputs.clone(),
            check_round_trip(n, g, limits),
        );
        record(
            "cut and exchange",
            inputs,
            check_cut_and_exchange(n, g, limits),
        );
    }
    for total in 1..=max_len.min(limits.motzkin_len) as u32 {
        record(
            "motzkin oracle",
            format!("g={g} N={total}"),
            check_motzkin_oracle(total, g, limits),
        );
    }
    for total in 1..=max_len as u32 {
        record(
            "mixed composition count",
            format!("g={g} N={total}"),
            check_mixed_count(total, g),
        );
    }
    let q_max = 12.max(g as usize);
    for q in g as usize..=q_max {
        for mixed in [false, true] {
            let case_seed = seed ^ ((q as u64) << 8) ^ ((g as u64) << 16) ^ (mixed as u64);
            let inputs = format!("g={g} q={q} mixed={mixed} seed={case_seed}");
            let outcome = random_spectral_data(q, g, mixed, case_seed)
                .and_then(|sd| check_exclusion_identities(&sd, q.min(max_len.max(g as usize))));
            record("exclusion identities", inputs, outcome);
        }
    }
    for n in (2..=limits.walk_len.min(10) as u32).step_by(2) {
        record(
            "hofstadter three-way",
            format!("n={n}"),
            check_hofstadter(n, limits),
        );
    }
    let passed = checks.iter().all(|c| c.passed);
    VerifyReport {
        g,
        max_n,
        seed,
        passed,
        checks,
    }
}

pub fn check_composition_count(n: u32, g: u32) -> Result<()> {
    let listed = enumerate_g_compositions(n, g)?;
    let closed = count_g_compositions(n, g)?;
    expect_eq("enumerated vs g^(n-1)", BigInt::from(listed.len()), closed)?;
    let distinct: BTreeSet<_> = listed.iter().collect();
    expect_eq("distinct compositions", distinct.len(), listed.len())
}

pub fn check_mixed_count(total: u32, g: u32) -> Result<()> {
    let listed = enumerate_mixed_compositions(total, g)?.len();
    let closed = count_mixed_compositions(total, g)?;
    let series = mixed_count_series(g, total as usize)?;
    let coeff = series.coeff(total as usize).clone();
    expect_eq(
        "enumerated vs closed form",
        BigInt::from(listed),
        closed.clone(),
    )?;
    expect_eq(
        "closed form vs generating function",
        BigRational::from_integer(closed),
        coeff,
    )
}

fn dyck_profile(p: &PathProfile) -> Result<&crate::compositions::GComposition> {
    match p {
        PathProfile::Dyck(c) => Ok(c),
        PathProfile::Motzkin(_) => fail("Motzkin profile in a Dyck tally"),
    }
}

pub fn check_dyck_oracle(n: u32, g: u32, limits: &Limits) -> Result<()> {
    let paths = enumerate_dyck_bridges(n, g, limits)?;
    let bridges = binomial((g * n) as i64, n as i64);
    expect_eq(
        "bridge count vs C(gn, n)",
        BigInt::from(paths.len()),
        bridges.clone(),
    )?;
    expect_eq(
        "sum of gn c_g vs C(gn, n)",
        total_dyck_bridges(n, g)?,
        bridges,
    )?;
    let tally = tally_by_profile(&paths)?;
    let comps = enumerate_g_compositions(n, g)?;
    expect_eq("realized profiles", tally.len(), comps.len())?;
    for (profile, table) in &tally {
        let comp = dyck_profile(profile)?;
        let formula = dyck_floor_counts(comp)?;
        if *table != formula {
            return fail(format!(
                "profile {comp}: enumerated {} vs formula {}",
                serde_json::to_string(table).unwrap_or_default(),
                serde_json::to_string(&formula).unwrap_or_default()
            ));
        }
    }
    Ok(())
}

pub fn check_motzkin_oracle(total: u32, g: u32, limits: &Limits) -> Result<()> {
    let paths = enumerate_motzkin_bridges(total, g, limits)?;
    let count = total_motzkin_bridges(total, g)?;
    expect_eq(
        "bridge count vs sum C(N,gk)C(gk,k)",
        BigInt::from(paths.len()),
        count.clone(),
    )?;
    expect_eq("sum of N c_1g", motzkin_profile_sum(total, g)?, count)?;
    let tally = tally_by_profile(&paths)?;
    expect_eq(
        "realized profiles",
        tally.len(),
        enumerate_mixed_compositions(total, g)?.len(),
    )?;
    for (profile, table) in &tally {
        let PathProfile::Motzkin(mc) = profile else {
            return fail("Dyck profile in a Motzkin tally");
        };
        let formula = motzkin_floor_counts(mc)?;
        if *table != formula {
            return fail(format!(
                "profile {mc}: enumerated {} vs formula {}",
                serde_json::to_string(table).unwrap_or_default(),
                serde_json::to_string(&formula).unwrap_or_default()
            ));
        }
    }
    Ok(())
}

pub fn check_round_trip(n: u32, g: u32, limits: &Limits) -> Result<()> {
    for path in enumerate_dyck_bridges(n, g, limits)? {
        if path.first_step() != Step::Up {
            continue;
        }
        let floors = up_step_floors(&path);
        let rebuilt = reconstruct_from_floor_sequence(path.start_floor(), &floors, g)?;
        expect_eq("reconstructed path", rebuilt.to_string(), path.to_string())?;
    }
    Ok(())
}

pub fn check_cut_and_exchange(n: u32, g: u32, limits: &Limits) -> Result<()> {
    let paths = enumerate_dyck_bridges(n, g, limits)?;
    let top = paths.iter().flat_map(|p| p.floors()).max().unwrap_or(1);
    for i in 2..=top {
        let domain: Vec<&LatticePath> = paths
            .iter()
            .filter(|p| {
                p.first_step() == Step::Up && p.start_floor() < i && p.start_floor() + g > i
            })
            .collect();
        let target: BTreeSet<String> = paths
            .iter()
            .filter(|p| p.first_step() == Step::Down && p.start_floor() == i)
            .map(|p| p.to_string())
            .collect();
        let mut image = BTreeSet::new();
        for p in &domain {
            let q = cut_and_exchange(p, i)?;
            expect_eq("profile after exchange", profile_of(&q)?, profile_of(p)?)?;
            image.insert(q.to_string());
        }
        expect_eq(
            &format!("injectivity at floor {i}"),
            image.len(),
            domain.len(),
        )?;
        expect_eq(&format!("image at floor {i}"), image, target)?;
    }
    Ok(())
}

fn signed<R: Ring>(odd_positive: usize, v: R) -> R {
    if odd_positive % 2 == 1 {
        v
    } else {
        -v
    }
}

/// Determinant, partition-function, cluster-coefficient and trace identities
/// for one spectral dataset, with path lengths up to `max_len`.
pub fn check_exclusion_identities<R: Ring + Display>(
    sd: &SpectralData<R>,
    max_len: usize,
) -> Result<()> {
    let g = sd.g() as usize;
    let m = ExclusionMatrix::from_spectral(sd);
    let det = secular_determinant(&m);
    if det != secular_determinant_dense(&m) {
        return fail("band recurrence and dense determinant differ");
    }
    let z = partition_functions(sd);
    let z_det = partition_functions_from_determinant(&det, sd.g(), sd.is_mixed())?;
    if z != z_det {
        return fail("partition functions differ from determinant coefficients");
    }
    let step = if sd.is_mixed() { 1 } else { g };
    let order = max_len / step;
    let b = cluster_coefficients(&z, order)?;
    for n in 1..=order {
        let via = cluster_coefficient_via_formula(sd, n as u32)?;
        if via != b[n - 1] {
            return fail(format!(
                "b({n}): series log {} vs composition sum {via}",
                b[n - 1]
            ));
        }
    }
    for len in 1..=max_len {
        let direct = trace_power(&m, len)?;
        let formula = trace_via_formula(sd, len as u32)?;
        if direct != formula {
            return fail(format!(
                "tr M^{len}: matrix power {direct} vs formula {formula}"
            ));
        }
        let from_b = if len % step == 0 {
            let n = len / step;
            signed(n, b[n - 1].clone()).scale(&BigRational::from_integer(BigInt::from(len)))
        } else {
            R::zero()
        };
        if direct != from_b {
            return fail(format!(
                "tr M^{len} = {direct} vs n(-1)^(n+1) b(n) = {from_b}"
            ));
        }
    }
    if let Some(stilde) = sd.stilde() {
        let zeroed = sd.with_stilde(vec![R::zero(); stilde.len()])?;
        let pure = sd.pure();
        let z_mixed = partition_functions(&zeroed);
        let z_pure = partition_functions(&pure);
        if let Some(k) = (0..z_mixed.len()).find(|k| k % g != 0 && !z_mixed[*k].is_zero()) {
            return fail(format!(
                "reduction: mixed Z({k}) with zero diagonal is nonzero"
            ));
        }
        for (n, zp) in z_pure.iter().enumerate() {
            let idx = n * g;
            let signed_mixed = if (idx + n) % 2 == 1 {
                -z_mixed[idx].clone()
            } else {
                z_mixed[idx].clone()
            };
            if signed_mixed != *zp {
                return fail(format!(
                    "reduction: mixed Z({idx}) with zero diagonal vs pure Z({n})"
                ));
            }
        }
    }
    Ok(())
}

pub fn check_hofstadter(n: u32, limits: &Limits) -> Result<()> {
    let weyl = weyl_expand_power(n);
    let hist = walk_area_histogram(n, limits)?;
    check_histogram(n, &hist)?;
    let walks = histogram_polynomial(&hist);
    let trace = area_polynomial_via_trace(n)?;
    expect_eq("weyl vs walks", weyl.to_string(), walks.to_string())?;
    expect_eq("walks vs trace", walks.to_string(), trace.to_string())
}
