//! The release gate: every counting route agrees with every other on a large
//! family of part sets, the asymptotics land where the theory says they must,
//! and the binary honors its output and exit-code contract. One test per
//! gate, so a test-runner line is a pass/fail verdict for that gate.

use std::process::Command;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use denumerant::{
    alternating_binomial_check, count_dp, enumerate_partitions, erdos_lehner_coefficient,
    error_slope, frobenius, leading_coefficient, power_sum_check, representable_by_counting,
    PartSet, RecursiveCounter, ENUMERATION_CAP,
};

/// Every subset of {1,…,9} with at most four elements and gcd 1 — the family
/// all cross-route checks sweep. There are 232 of them.
fn small_coprime_family() -> Vec<PartSet> {
    let mut family = Vec::new();
    for mask in 1u32..512 {
        if mask.count_ones() > 4 {
            continue;
        }
        let parts: Vec<i64> = (1..=9).filter(|p| mask >> (p - 1) & 1 == 1).collect();
        let set = PartSet::new(&parts).expect("positive parts");
        if set.is_coprime() {
            family.push(set);
        }
    }
    assert_eq!(family.len(), 232);
    family
}

#[test]
fn oracle_equivalence_on_the_small_family() {
    let start = Instant::now();
    for a in small_coprime_family() {
        let table = count_dp(&a, 120);
        let mut counter = RecursiveCounter::new();
        for n in 0..=120 {
            let recursive = counter.count(&a, n).expect("coprime set");
            assert_eq!(
                table.get(n),
                &recursive,
                "route mismatch for {a} at n = {n}"
            );
            if n <= 40 {
                let listed = enumerate_partitions(&a, n, ENUMERATION_CAP)
                    .expect("enumeration within bound and cap");
                assert_eq!(
                    &BigUint::from(listed.len()),
                    table.get(n),
                    "enumeration mismatch for {a} at n = {n}"
                );
            }
        }
    }
    assert!(
        start.elapsed().as_secs() < 60,
        "family sweep took {:?}, budget is one minute",
        start.elapsed()
    );
}

#[test]
fn ratio_converges_for_three_five_seven() {
    // p(n) / (n^2/210) must approach 1: within 1% at n = 10^5, and strictly
    // closer at each decade — all in exact rationals.
    let a = PartSet::new(&[3, 5, 7]).unwrap();
    let start = Instant::now();
    let table = count_dp(&a, 100_000);
    assert!(
        start.elapsed().as_secs() < 10,
        "table to 10^5 took {:?}, budget is ten seconds",
        start.elapsed()
    );
    // |p * 210 / n^2 - 1|
    let deviation = |n: u64| -> BigRational {
        let num = BigInt::from(table.get(n).clone()) * 210 - BigInt::from(n) * BigInt::from(n);
        BigRational::new(num, BigInt::from(n) * BigInt::from(n)).abs()
    };
    let (d3, d4, d5) = (deviation(1_000), deviation(10_000), deviation(100_000));
    assert!(d5 < BigRational::new(BigInt::one(), BigInt::from(100)), "at 10^5: {d5}");
    assert!(d3 > d4 && d4 > d5, "not strictly decreasing: {d3} {d4} {d5}");
}

#[test]
fn error_exponent_is_at_most_parts_minus_two() {
    let slope = |parts: &[i64], lo, hi| {
        error_slope(&PartSet::new(parts).unwrap(), lo, hi, 8)
            .expect("fit succeeds")
            .slope
    };
    let s3 = slope(&[3, 5, 7], 64, 65_536);
    assert!(s3 <= 1.15, "three parts: slope {s3} exceeds 1.15");
    let s2 = slope(&[1, 2], 16, 4_096);
    assert!(s2 <= 0.15, "two parts: slope {s2} exceeds 0.15");
    let s4 = slope(&[4, 9, 11, 13], 64, 65_536);
    assert!(s4 <= 2.15, "four parts: slope {s4} exceeds 2.15");
}

#[test]
fn normalized_error_stays_inside_its_early_envelope() {
    // |p(n) - L(n)| / n^(k-2) on (10^3, 10^5] never exceeds four times its
    // maximum on [10^2, 10^3] — exact rationals throughout.
    for parts in [&[3i64, 5, 7][..], &[2, 3, 5][..]] {
        let a = PartSet::new(parts).unwrap();
        let table = count_dp(&a, 100_000);
        let denom: BigInt = a.parts().iter().map(|&p| BigInt::from(p)).product::<BigInt>() * 2;
        // k = 3 for both sets: |p*D - n^2| / (D*n)
        let norm = |n: u64| -> BigRational {
            let err =
                (BigInt::from(table.get(n).clone()) * &denom - BigInt::from(n) * BigInt::from(n))
                    .abs();
            BigRational::new(err, &denom * BigInt::from(n))
        };
        let mut cap = BigRational::zero();
        for n in 100..=1_000 {
            cap = cap.max(norm(n));
        }
        let envelope = cap * BigRational::from(BigInt::from(4));
        for n in 1_001..=100_000 {
            assert!(
                norm(n) <= envelope,
                "{a} at n = {n}: {} outside envelope {envelope}",
                norm(n)
            );
        }
    }
}

#[test]
fn two_part_error_never_exceeds_one() {
    // for coprime {a,b}: |p(n) - n/(ab)| <= 1, i.e. |p*ab - n| <= ab exactly
    for b in 2i64..=12 {
        for a in 1..b {
            if num_integer::gcd(a, b) != 1 {
                continue;
            }
            let set = PartSet::new(&[a, b]).unwrap();
            let table = count_dp(&set, 10_000);
            let ab = (a * b) as i128;
            for n in 1..=10_000u64 {
                let p = table.get(n).to_i128().expect("small count");
                assert!(
                    (p * ab - n as i128).abs() <= ab,
                    "{set} at n = {n}: count {p} is off by more than 1"
                );
            }
        }
    }
}

#[test]
fn frobenius_numbers_and_thresholds() {
    // trust anchor first: read the largest non-representable target straight
    // off the counting table, then require the Apéry route to reproduce it
    for (parts, expected) in [(&[3i64, 5][..], 7i64), (&[6, 9, 20][..], 43)] {
        let a = PartSet::new(parts).unwrap();
        let reachable = representable_by_counting(&a, 200);
        let by_counting = reachable
            .iter()
            .rposition(|&r| !r)
            .expect("something is non-representable") as i64;
        assert_eq!(by_counting, expected);
        let result = frobenius(&a).unwrap();
        assert_eq!(result.frobenius, expected);
        assert_eq!(result.threshold, expected as u64 + 1);
    }

    // a part equal to 1 makes everything representable
    for x in 2..=10 {
        let result = frobenius(&PartSet::new(&[1, x]).unwrap()).unwrap();
        assert_eq!(result.frobenius, -1, "{{1,{x}}}");
        assert_eq!(result.threshold, 0);
    }

    // every coprime pair matches the classical closed form ab - a - b, and
    // the threshold is pinned by the counts on both sides
    for b in 2i64..=30 {
        for a in 1..b {
            if num_integer::gcd(a, b) != 1 {
                continue;
            }
            let set = PartSet::new(&[a, b]).unwrap();
            let result = frobenius(&set).unwrap();
            assert_eq!(result.frobenius, a * b - a - b, "{set}");
            assert_eq!(result.threshold as i64, a * b - a - b + 1, "{set}");

            let table = count_dp(&set, result.threshold + 1_000);
            if result.frobenius >= 0 {
                assert!(table.get(result.frobenius as u64).is_zero(), "{set}");
            }
            for n in result.threshold..=result.threshold + 1_000 {
                assert!(!table.get(n).is_zero(), "{set} at n = {n}");
            }
        }
    }
}

#[test]
fn coefficient_identities_hold_exactly() {
    for k in 1..=8u64 {
        let parts: Vec<i64> = (1..=k as i64).collect();
        let lead = leading_coefficient(&PartSet::new(&parts).unwrap()).unwrap();
        assert_eq!(lead, erdos_lehner_coefficient(k), "k = {k}");
    }
    for k in 2..=64 {
        assert!(alternating_binomial_check(k), "k = {k}");
    }
    for r in [0u64, 1, 10, 100, 10_000] {
        for j in 0..=8 {
            let (_, bound_ok) = power_sum_check(r, j);
            assert!(bound_ok, "r = {r}, j = {j}");
        }
    }
}

#[test]
fn cli_honors_its_contract() {
    let bin = env!("CARGO_BIN_EXE_denumerant");
    let run = |args: &[&str]| Command::new(bin).args(args).output().expect("binary runs");

    // verify exits 0 across the whole small family
    for a in small_coprime_family() {
        let parts: Vec<String> = a.parts().iter().map(|p| p.to_string()).collect();
        let parts = parts.join(",");
        let out = run(&["verify", "--parts", &parts, "--max-n", "120", "--enum-max", "40"]);
        assert_eq!(out.status.code(), Some(0), "verify failed for {a}");
    }

    // byte-exact golden tables
    let out = run(&["table", "--parts", "2,3", "--max-n", "20", "--format", "csv"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        include_str!("golden/table_2_3.csv")
    );
    let out = run(&["table", "--parts", "2,3", "--max-n", "20", "--format", "json"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        include_str!("golden/table_2_3.json")
    );

    // exit 1: domain rejection; exit 2: bad invocation
    assert_eq!(run(&["frobenius", "--parts", "2,4"]).status.code(), Some(1));
    assert_eq!(run(&["count", "--parts", "0,3", "--n", "5"]).status.code(), Some(2));
}
