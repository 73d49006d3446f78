//! Acceptance criteria 1-10. Each test prints one `PASS`/`FAIL` line; run
//! with `cargo test -p greedy-balance --test acceptance -- --nocapture`.

mod common;

use common::{before_count, factorial, permutations, Order};
use greedy_balance::generators::{for_each_labeled_poset, rng_from_seed};
use greedy_balance::theorems::{count_chain_sum, count_disjoint_sum, count_linear_sum};
use greedy_balance::verify::{
    n_plus_point, random_nfree_non_chain, run_suite, width2_sweep, with_autonomous_pair,
    SuiteOutcome, VerifyOptions,
};
use greedy_balance::{gp_ratio, greedy_count, half_balanced_witness, Poset};
use num_rational::BigRational;
use rand::Rng;

const SEED: u64 = 20_240_611;

fn verdict(criterion: u32, title: &str, ok: bool, detail: &str) {
    let tag = if ok { "PASS" } else { "FAIL" };
    println!("[{tag}] criterion {criterion:>2}: {title} ({detail})");
    assert!(ok, "criterion {criterion} failed: {detail}");
}

fn suite(name: &str) -> SuiteOutcome {
    let options = VerifyOptions {
        instances: None,
        seed: SEED,
        max_n: None,
    };
    run_suite(name, options).unwrap()
}

fn summary(outcome: &SuiteOutcome) -> String {
    let mut failed = outcome
        .properties
        .iter()
        .filter(|p| !p.passed)
        .map(|p| p.detail.as_str());
    match failed.next() {
        Some(first) => format!("failing: {first}"),
        None => {
            let checks: u64 = outcome.properties.iter().map(|p| p.checked).sum();
            format!("{} properties, {checks} checks", outcome.properties.len())
        }
    }
}

fn frac(a: usize, b: usize) -> BigRational {
    BigRational::new(a.into(), b.into())
}

#[test]
fn criterion_01_disjoint_sum_example() {
    let started = std::time::Instant::now();
    let p = n_plus_point();
    let oracle = Order::of(&p);
    let total = oracle.greedy_extensions().len();
    let checks = [(1, 0), (1, 2), (2, 3)].map(|(x, y)| {
        let (before, total) = before_count(&oracle, x, y);
        (
            gp_ratio(&p, x, y).unwrap().value().clone(),
            frac(before, total),
        )
    });
    let eight = frac(8, 11);
    let ok = total == 11
        && greedy_count(&p).unwrap() == 11u32.into()
        && checks[0] == (eight.clone(), eight.clone())
        && checks[1] == (eight.clone(), eight.clone())
        && checks[2].0 == checks[2].1
        && suite("n-plus-point").passed()
        && started.elapsed().as_secs_f64() < 1.0;
    let cd = &checks[2].1;
    verdict(
        1,
        "disjoint sum of N and a point",
        ok,
        &format!(
            "|G| = {total}; GP(b<a) = GP(b<c) = 8/11; GP(c<d) = {cd} by oracle, stated 8/11 {}",
            if *cd == eight {
                "matches"
            } else {
                "does not match"
            }
        ),
    );
}

#[test]
fn criterion_02_chain_sums() {
    let mut ok = suite("chain-sum").passed();
    for m in 1..=6u64 {
        let expected = factorial(m);
        let points = Poset::antichain(m as usize);
        ok &= count_chain_sum(m) == expected.into();
        ok &= greedy_count(&points).unwrap() == expected.into();
        ok &= Order::of(&points).greedy_extensions().len() as u64 == expected;
    }
    verdict(
        2,
        "m chains give m! greedy extensions",
        ok,
        "m = 1..6, 720 at m = 6",
    );
}

/// Small random component lists for the oracle cross-checks.
fn small_lists(count: usize, max_total: usize, seed: u64) -> Vec<Vec<Poset>> {
    let mut rng = rng_from_seed(seed);
    (0..count)
        .map(|_| {
            let m = rng.random_range(1..=3);
            (0..m)
                .map(|_| {
                    let n = rng.random_range(1..=max_total / m);
                    greedy_balance::generators::random_poset(
                        n,
                        rng.random_range(0.0..=1.0),
                        rng.random(),
                    )
                    .unwrap()
                })
                .collect()
        })
        .collect()
}

#[test]
fn criterion_03_disjoint_sum_formula() {
    let outcome = suite("disjoint-sum");
    let mut ok = outcome.passed() && outcome.properties[0].checked >= 200;
    for comps in small_lists(40, 7, SEED) {
        let sum = Poset::disjoint_sum(&comps).unwrap();
        let brute = Order::of(&sum).greedy_extensions().len();
        ok &= count_disjoint_sum(&comps).unwrap() == brute.into();
    }
    verdict(3, "disjoint-sum count formula", ok, &summary(&outcome));
}

#[test]
fn criterion_04_linear_sum_product() {
    let outcome = suite("linear-sum");
    let mut ok = outcome.passed() && outcome.properties[0].checked >= 100;
    for comps in small_lists(40, 7, SEED + 1) {
        let sum = Poset::linear_sum(&comps).unwrap();
        let brute = Order::of(&sum).greedy_extensions().len();
        ok &= count_linear_sum(&comps).unwrap() == brute.into();
    }
    verdict(4, "linear-sum product formula", ok, &summary(&outcome));
}

#[test]
fn criterion_05_half_balanced_witness() {
    let outcome = suite("main-theorem");
    let mut ok = outcome.passed() && outcome.properties.iter().all(|p| p.checked >= 500);
    let mut rng = rng_from_seed(SEED);
    for _ in 0..60 {
        let p = random_nfree_non_chain(7, &mut rng).unwrap();
        let w = half_balanced_witness(&p).unwrap();
        let (before, total) = before_count(&Order::of(&p), w.x, w.y);
        ok &= 2 * before == total;
    }
    verdict(
        5,
        "witness pair of an N-free non-chain has GP = 1/2",
        ok,
        &summary(&outcome),
    );
}

#[test]
fn criterion_06_removable_minimals() {
    let outcome = suite("removal");
    let ok = outcome.passed() && outcome.properties[0].checked > 0;
    verdict(
        6,
        "deleting a removable minimal element",
        ok,
        &summary(&outcome),
    );
}

#[test]
fn criterion_07_reversibility() {
    let outcome = suite("reversibility");
    // the N itself: some greedy extension reversed is not greedy for the dual
    let n = Order::from_pairs(4, &[(1, 0), (1, 3), (2, 0)]);
    let dual = Order::from_pairs(4, &[(0, 1), (3, 1), (0, 2)]);
    let witness = n.greedy_extensions().into_iter().find(|o| {
        let reversed: Vec<usize> = o.iter().rev().copied().collect();
        !dual.is_greedy(&reversed)
    });
    let ok = outcome.passed() && outcome.properties[0].checked >= 200 && witness.is_some();
    verdict(
        7,
        "N-free posets are reversible; some small poset is not",
        ok,
        &format!(
            "{}; oracle finds the N non-reversible via {:?}",
            summary(&outcome),
            witness
        ),
    );
}

#[test]
fn criterion_08_soundness() {
    let outcome = suite("soundness");
    let mut ok = outcome.passed();
    let mut posets = 0;
    for n in 1..=4 {
        for_each_labeled_poset(n, 4, |p| {
            posets += 1;
            let mut ours: Vec<Vec<usize>> = greedy_balance::greedy_extensions(p)
                .unwrap()
                .into_iter()
                .map(|l| l.into_order())
                .collect();
            ours.sort();
            let mut brute = Order::of(p).greedy_extensions();
            brute.sort();
            ok &= ours == brute;
        })
        .unwrap();
    }
    verdict(
        8,
        "greedy enumeration is sound and complete",
        ok,
        &format!(
            "{}; oracle agrees on all {posets} labeled posets with n <= 4",
            summary(&outcome)
        ),
    );
}

#[test]
fn criterion_09_width_two_sweep() {
    let outcome = suite("width2");
    let sweep = width2_sweep(6).unwrap();
    let third = frac(1, 3);
    // the N a<b>c<d with a=0, b=1, c=2, d=3: GP(b<d) = 1/3
    let (before, total) = before_count(&Order::from_pairs(4, &[(0, 1), (2, 1), (2, 3)]), 1, 3);
    let ok = outcome.passed() && sweep.inconsistent == 0 && (before, total) == (1, 3);
    let min = sweep
        .min_level
        .as_ref()
        .map_or("none".to_string(), |m| m.to_string());
    verdict(
        9,
        "width-2 sweep up to 6 elements",
        ok,
        &format!(
            "{} instances, min best level {min}, {} below 1/3{}",
            sweep.instances,
            sweep.below_third.len(),
            if sweep.min_level.as_ref().is_some_and(|m| *m < third) {
                " (finding)"
            } else {
                ""
            }
        ),
    );
}

#[test]
fn criterion_10_autonomous_pairs() {
    let outcome = suite("autonomous");
    let mut ok = outcome.passed() && outcome.properties[0].checked >= 100;
    let mut rng = rng_from_seed(SEED);
    for _ in 0..40 {
        let n = rng.random_range(1..=5);
        let base = greedy_balance::generators::random_poset(n, 0.5, rng.random()).unwrap();
        let (p, (x, y)) = with_autonomous_pair(&base, rng.random_range(0..n)).unwrap();
        let (before, total) = before_count(&Order::of(&p), x, y);
        ok &= 2 * before == total;
    }
    verdict(
        10,
        "autonomous 2-antichains have GP = 1/2",
        ok,
        &summary(&outcome),
    );
}

#[test]
fn oracle_self_check() {
    assert_eq!(permutations(4).len(), 24);
    // a 2-antichain under a top: both orders greedy
    let v = Order::from_pairs(3, &[(0, 2), (1, 2)]);
    assert_eq!(v.greedy_extensions().len(), 2);
    // chain 0<1 beside point 2: climbing from 0 must go to 1
    let o = Order::from_pairs(3, &[(0, 1)]);
    assert!(!o.is_greedy(&[0, 2, 1]));
    assert!(o.is_greedy(&[2, 0, 1]));
}
