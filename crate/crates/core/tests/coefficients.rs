mod common;

use common::{binom, brute_tally, q, BruteTable};
use lukasiewicz::coefficients::{
    c_1g, c_2_closed_form, c_g, dyck_floor_counts, motzkin_floor_counts, motzkin_profile_sum,
    total_dyck_bridges, total_motzkin_bridges,
};
use lukasiewicz::compositions::{enumerate_mixed_compositions, invert_mixed_composition};
use lukasiewicz::{FloorCountTable, GComposition, MixedComposition};
use num_bigint::BigInt;
use num_rational::BigRational;

fn as_brute(t: &FloorCountTable) -> BruteTable {
    let u = |v: &BigInt| u64::try_from(v).unwrap();
    BruteTable {
        up: t.floors.iter().map(|f| u(&f.up)).collect(),
        down: t.floors.iter().map(|f| u(&f.down)).collect(),
        level: t.floors.iter().map(|f| u(&f.horizontal)).collect(),
        total: u(&t.total),
    }
}

#[test]
fn dyck_tables_match_enumeration() {
    for g in 2..=4u32 {
        for n in 1..=12 / g {
            let len = (g * n) as usize;
            for ((_, parts), brute) in brute_tally(len, g, false) {
                let comp = GComposition::new(parts.clone(), g).unwrap();
                let table = dyck_floor_counts(&comp).unwrap();
                assert_eq!(as_brute(&table), brute, "g={g} {comp}");
                let c = BigRational::new(BigInt::from(brute.total), BigInt::from(len));
                assert_eq!(c_g(&comp).unwrap(), c, "g={g} {comp}");
            }
        }
    }
}

#[test]
fn motzkin_tables_match_enumeration() {
    for g in 2..=4u32 {
        for total in 1..=9u32 {
            for ((tilde, parts), brute) in brute_tally(total as usize, g, true) {
                let mc = if parts.is_empty() {
                    MixedComposition::trivial(total, g).unwrap()
                } else {
                    MixedComposition::new(tilde, parts, g).unwrap()
                };
                let table = motzkin_floor_counts(&mc).unwrap();
                assert_eq!(as_brute(&table), brute, "g={g} {mc}");
                let c = BigRational::new(BigInt::from(brute.total), BigInt::from(total));
                assert_eq!(c_1g(&mc).unwrap(), c, "g={g} {mc}");
            }
        }
    }
}

#[test]
fn listed_coefficients() {
    let comp = |p: &[u32], g| GComposition::new(p.to_vec(), g).unwrap();
    assert_eq!(c_g(&comp(&[3], 2)).unwrap(), q(1, 3));
    assert_eq!(c_g(&comp(&[2, 1], 2)).unwrap(), q(1, 1));
    assert_eq!(c_g(&comp(&[1, 2], 2)).unwrap(), q(1, 1));
    assert_eq!(c_g(&comp(&[1, 1, 1], 2)).unwrap(), q(1, 1));
    let fig = dyck_floor_counts(&comp(&[3, 0, 1, 1], 3)).unwrap();
    assert_eq!(fig.total, BigInt::from(15));

    let mixed = |t: &[u32], p: &[u32]| MixedComposition::new(t.to_vec(), p.to_vec(), 2).unwrap();
    let cases = [
        (MixedComposition::trivial(4, 2).unwrap(), q(1, 4)),
        (mixed(&[2, 0], &[1]), q(1, 1)),
        (mixed(&[1, 1], &[1]), q(1, 1)),
        (mixed(&[0, 2], &[1]), q(1, 1)),
        (mixed(&[0, 0], &[2]), q(1, 2)),
        (mixed(&[0, 0, 0], &[1, 1]), q(1, 1)),
    ];
    for (mc, c) in cases {
        assert_eq!(c_1g(&mc).unwrap(), c, "{mc}");
    }
}

#[test]
fn pair_form_agrees_for_positive_parts() {
    let mut parts = vec![1u32];
    for _ in 0..200 {
        let comp = GComposition::new(parts.clone(), 2).unwrap();
        assert_eq!(
            c_g(&comp).unwrap(),
            c_2_closed_form(&comp).unwrap(),
            "{comp}"
        );
        // odometer over parts in 1..=4, lengths 1..=4
        let mut i = 0;
        loop {
            if i == parts.len() {
                parts.push(1);
                break;
            }
            parts[i] += 1;
            if parts[i] <= 4 {
                break;
            }
            parts[i] = 1;
            i += 1;
        }
        if parts.len() > 4 {
            break;
        }
    }
    assert!(c_2_closed_form(&GComposition::new(vec![2, 0, 1], 3).unwrap()).is_err());
}

#[test]
fn totals_match_binomial_counts() {
    for g in 2..=4u32 {
        for n in 1..=6u32 {
            let expected = binom((g * n) as u64, n as u64);
            assert_eq!(total_dyck_bridges(n, g).unwrap(), BigInt::from(expected));
        }
        for total in 1..=12u32 {
            let expected: u128 = (0..=total / g)
                .map(|k| binom(total as u64, (g * k) as u64) * binom((g * k) as u64, k as u64))
                .sum();
            assert_eq!(
                total_motzkin_bridges(total, g).unwrap(),
                BigInt::from(expected)
            );
            assert_eq!(
                motzkin_profile_sum(total, g).unwrap(),
                BigInt::from(expected)
            );
        }
    }
}

#[test]
fn inversion_preserves_coefficient() {
    for g in 2..=4u32 {
        for mc in enumerate_mixed_compositions(9, g).unwrap() {
            let inv = invert_mixed_composition(&mc);
            assert_eq!(c_1g(&mc).unwrap(), c_1g(&inv).unwrap(), "{mc}");
        }
    }
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    fn g_composition() -> impl Strategy<Value = GComposition> {
        (2u32..=4, prop::collection::vec(0u32..=4, 1..=7))
            .prop_filter_map("not a g-composition", |(g, parts)| {
                GComposition::new(parts, g).ok()
            })
    }

    fn mixed_composition() -> impl Strategy<Value = MixedComposition> {
        (
            2u32..=4,
            prop::collection::vec(0u32..=3, 1..=5),
            prop::collection::vec(0u32..=3, 0..=9),
        )
            .prop_filter_map("not a (1,g)-composition", |(g, parts, extra)| {
                let floors = parts.len() + g as usize - 1;
                let tilde: Vec<u32> = (0..floors)
                    .map(|k| extra.get(k).copied().unwrap_or(0))
                    .collect();
                MixedComposition::new(tilde, parts, g).ok()
            })
    }

    proptest! {
        /// Every floor count is an integer and the floor counts add up.
        #[test]
        fn dyck_tables_are_integral(comp in g_composition()) {
            let table = dyck_floor_counts(&comp).unwrap();
            let up: BigInt = table.floors.iter().map(|f| &f.up).sum();
            let any: BigInt = table.floors.iter().map(|f| &f.any).sum();
            prop_assert_eq!(any, table.total.clone());
            prop_assert_eq!(up * BigInt::from(comp.g()), table.total);
        }

        #[test]
        fn motzkin_tables_are_integral(mc in mixed_composition()) {
            let table = motzkin_floor_counts(&mc).unwrap();
            let any: BigInt = table.floors.iter().map(|f| &f.any).sum();
            prop_assert_eq!(any, table.total);
            prop_assert_eq!(c_1g(&mc).unwrap(), c_1g(&invert_mixed_composition(&mc)).unwrap());
        }
    }
}

#[test]
fn mixed_table_at_length_twelve() {
    let mc = MixedComposition::new(vec![1, 1, 0, 1], vec![1, 2], 3).unwrap();
    let tally = brute_tally(12, 3, true);
    let brute = &tally[&(vec![1, 1, 0, 1], vec![1, 2])];
    assert_eq!(as_brute(&motzkin_floor_counts(&mc).unwrap()), *brute);
}

/// Reversal of a g-composition for g >= 3 is not claimed to preserve `c_g`;
/// this records which compositions it does and does not preserve.
#[test]
fn reversal_behavior_is_recorded() {
    for g in 2..=4u32 {
        let mut kept = 0;
        let mut changed = Vec::new();
        for comp in lukasiewicz::compositions::enumerate_g_compositions(6, g).unwrap() {
            let mut parts = comp.parts().to_vec();
            parts.reverse();
            let rev = GComposition::new(parts, g).unwrap();
            if c_g(&comp).unwrap() == c_g(&rev).unwrap() {
                kept += 1;
            } else {
                changed.push(comp.to_string());
            }
        }
        println!("g={g} n=6: reversal keeps c_g for {kept}, changes it for {changed:?}");
        if g == 2 {
            assert!(changed.is_empty());
        }
    }
}
