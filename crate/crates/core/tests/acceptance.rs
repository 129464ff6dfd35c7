//! Acceptance suite. Each test prints one `criterion N: PASS|FAIL` line;
//! run with `cargo test -p rouquier --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use rouquier::homspace::{epsilon_quotient, gamma_quotient, mu_quotient};
use rouquier::radical::{rad_polynomial_quotients, radical_profile, radical_series_quotients};
use rouquier::{
    block_partitions, core_and_quotient, from_abacus, from_core_and_quotient, lr_coefficient,
    lr_coefficient_bruteforce, partitions_of, rad_polynomial, rouquier_core,
    symmetric_group_degree, to_abacus, verify_hom_dimension, BlockLabel, Partition, RadPolynomial,
};

fn report(n: u32, ok: bool, detail: String) {
    println!(
        "criterion {n}: {} ({detail})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {n} failed: {detail}");
}

fn random_partition(rng: &mut StdRng, max_size: usize) -> Partition {
    let n = rng.random_range(0..=max_size);
    let all = partitions_of(n);
    all[rng.random_range(0..all.len())].clone()
}

fn random_subpartition(rng: &mut StdRng, lambda: &Partition) -> Partition {
    let s = rng.random_range(0..=lambda.size());
    let subs = lambda.subpartitions_of_size(s);
    subs[rng.random_range(0..subs.len())].clone()
}

const BLOCKS: [(u32, usize); 4] = [(5, 2), (5, 3), (5, 4), (7, 3)];

#[test]
fn criterion_1_headline_k2_p5() {
    let start = Instant::now();
    let cert = verify_hom_dimension(2, 5).unwrap();
    let b = rouquier_core(5, 4).unwrap();
    let rad = rad_polynomial_quotients(
        &b,
        &gamma_quotient(2, 5).unwrap(),
        &epsilon_quotient(2, 5).unwrap(),
    )
    .unwrap();
    let elapsed = start.elapsed();
    let ok = cert.concluded_dimension == Some(2)
        && cert.n == 275
        && rad == RadPolynomial::monomial(2, 2)
        && elapsed < Duration::from_secs(5);
    report(
        1,
        ok,
        format!(
            "dim {:?}, n = {}, rad(gamma,epsilon) = {rad}, {elapsed:.2?}",
            cert.concluded_dimension, cert.n
        ),
    );
}

#[test]
fn criterion_2_theorem_k3_p11() {
    let start = Instant::now();
    let cert = verify_hom_dimension(3, 11).unwrap();
    let b = rouquier_core(11, 7).unwrap();
    let rad = rad_polynomial_quotients(
        &b,
        &gamma_quotient(3, 11).unwrap(),
        &epsilon_quotient(3, 11).unwrap(),
    )
    .unwrap();
    let closed = symmetric_group_degree(3, 11).unwrap();
    let abacus_n = (b.rho().size() + 11 * 7) as u64;
    let elapsed = start.elapsed();
    let ok = cert.concluded_dimension == Some(3)
        && rad == RadPolynomial::monomial(3, 5)
        && cert.n == closed
        && closed == abacus_n
        && cert.gamma.size() as u64 == abacus_n
        && elapsed < Duration::from_secs(300);
    report(
        2,
        ok,
        format!(
            "dim {:?}, rad = {rad}, n closed form {closed}, |rho|+p*w {abacus_n}, {elapsed:.2?}",
            cert.concluded_dimension
        ),
    );
}

#[test]
fn criterion_3_radical_structure_of_epsilon() {
    let b = rouquier_core(5, 4).unwrap();
    let eq = epsilon_quotient(2, 5).unwrap();
    let series = radical_series_quotients(&b, &eq).unwrap();
    let eps = from_core_and_quotient(&b, &eq).unwrap();
    let mut bottom: Vec<(Partition, u64)> = series
        .layer(1)
        .iter()
        .map(|e| (e.partition.clone(), e.multiplicity))
        .collect();
    bottom.sort();
    let mut expected: Vec<(Partition, u64)> = (1..=3)
        .map(|i| {
            (
                from_core_and_quotient(&b, &mu_quotient(2, 5, i).unwrap()).unwrap(),
                1,
            )
        })
        .collect();
    expected.sort();
    let top: Vec<(Partition, u64)> = series
        .layer(0)
        .iter()
        .map(|e| (e.partition.clone(), e.multiplicity))
        .collect();
    let ok = series.layers.len() == 2 && top == vec![(eps, 1)] && bottom == expected;
    report(3, ok, format!("layers: {}", series.text()));
}

#[test]
fn criterion_4_bottom_layer_of_gamma() {
    let b = rouquier_core(5, 4).unwrap();
    let gq = gamma_quotient(2, 5).unwrap();
    let mut found: Vec<(Vec<Partition>, RadPolynomial)> = radical_profile(&b, &gq)
        .unwrap()
        .into_iter()
        .filter(|(_, poly)| poly.max_degree() == Some(3))
        .collect();
    found.sort_by(|a, b| a.0.cmp(&b.0));
    let mut expected: Vec<(Vec<Partition>, RadPolynomial)> = (1..=3)
        .map(|i| (mu_quotient(2, 5, i).unwrap(), RadPolynomial::monomial(1, 3)))
        .collect();
    expected.sort_by(|a, b| a.0.cmp(&b.0));
    let ok = found == expected;
    report(
        4,
        ok,
        format!("{} partitions with 1*v^3 in layer 3", found.len()),
    );
}

#[test]
fn criterion_5_monomial_invariant() {
    let start = Instant::now();
    let mut pairs = 0usize;
    let mut nonzero = 0usize;
    let mut multi_term = 0usize;
    let mut too_deep = 0usize;
    for (p, w) in BLOCKS {
        let b = rouquier_core(p, w).unwrap();
        let all = block_partitions(&b, false);
        let restricted = block_partitions(&b, true);
        for lambda in &all {
            for sigma in &restricted {
                pairs += 1;
                let poly = rad_polynomial(&b, lambda, sigma).unwrap();
                if !poly.is_zero() {
                    nonzero += 1;
                }
                if poly.term_count() > 1 {
                    multi_term += 1;
                }
                if poly.max_degree().is_some_and(|d| d > w - 1) {
                    too_deep += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = multi_term == 0 && too_deep == 0 && elapsed < Duration::from_secs(600);
    report(
        5,
        ok,
        format!(
            "{pairs} pairs, {nonzero} nonzero, {multi_term} with more than one term, \
             {too_deep} with degree > w-1, {elapsed:.2?}"
        ),
    );
}

fn restricted_by_differences(lambda: &Partition, p: u32) -> bool {
    let parts = lambda.parts();
    (0..parts.len()).all(|i| parts[i] - parts.get(i + 1).copied().unwrap_or(0) < p as usize)
}

fn regular_by_repeats(lambda: &Partition, p: u32) -> bool {
    let parts = lambda.parts();
    let p = p as usize;
    parts.len() < p || (0..=parts.len() - p).all(|i| parts[i] != parts[i + p - 1])
}

#[test]
fn criterion_6_regularity_criteria() {
    let mut checked = 0;
    let mut bad = Vec::new();
    for (p, w) in BLOCKS {
        let b = rouquier_core(p, w).unwrap();
        for lambda in block_partitions(&b, false) {
            let q = core_and_quotient(&lambda, p).quotient;
            checked += 1;
            if q[p as usize - 1].is_empty() != restricted_by_differences(&lambda, p)
                || q[0].is_empty() != regular_by_repeats(&lambda, p)
                || lambda.is_p_restricted(p) != restricted_by_differences(&lambda, p)
                || lambda.is_p_regular(p) != regular_by_repeats(&lambda, p)
            {
                bad.push(format!("p={p} w={w} quotient {q:?}"));
            }
        }
    }
    report(
        6,
        bad.is_empty(),
        format!("{checked} partitions, {} mismatches", bad.len()),
    );
}

#[test]
fn criterion_7_lr_kernel() {
    let mut exhaustive = 0;
    let mut mismatches = 0;
    for n in 0..=8 {
        for lambda in partitions_of(n) {
            for s in 0..=n {
                for mu in partitions_of(s) {
                    for nu in partitions_of(n - s) {
                        exhaustive += 1;
                        if lr_coefficient(&lambda, &mu, &nu)
                            != lr_coefficient_bruteforce(&lambda, &mu, &nu)
                        {
                            mismatches += 1;
                        }
                    }
                }
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x1a7e);
    let mut random_bad = 0;
    let trials = 2000;
    for t in 0..trials {
        let lambda = random_partition(&mut rng, 10);
        let mu = if t % 2 == 0 {
            random_subpartition(&mut rng, &lambda)
        } else {
            random_partition(&mut rng, lambda.size())
        };
        let nu = if t % 2 == 0 {
            let all = partitions_of(lambda.size() - mu.size());
            all[rng.random_range(0..all.len())].clone()
        } else {
            random_partition(&mut rng, 10)
        };
        let c = lr_coefficient(&lambda, &mu, &nu);
        if c != lr_coefficient(&lambda, &nu, &mu)
            || c != lr_coefficient(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate())
        {
            random_bad += 1;
        }
    }
    let ok = mismatches == 0 && random_bad == 0;
    report(
        7,
        ok,
        format!("{exhaustive} exhaustive triples, {mismatches} mismatches; {trials} random symmetry/conjugation triples, {random_bad} failures"),
    );
}

#[test]
fn criterion_8_abacus_round_trips() {
    let mut rng = StdRng::seed_from_u64(0xabac);
    let primes = [3u32, 5, 7];
    let trials = 1500;
    let mut abacus_bad = 0;
    let mut quotient_bad = 0;
    for t in 0..trials {
        let p = primes[t % 3];
        let lambda = random_partition(&mut rng, 40);
        if from_abacus(&to_abacus(&lambda, p)) != lambda {
            abacus_bad += 1;
        }

        let core = core_and_quotient(&random_partition(&mut rng, 30), p).core;
        let w = rng.random_range(0..=6);
        let b = BlockLabel::new(p, core, w).unwrap();
        let mut sizes = vec![0usize; p as usize];
        for _ in 0..w {
            sizes[rng.random_range(0..p as usize)] += 1;
        }
        let quotient: Vec<Partition> = sizes
            .iter()
            .map(|&s| {
                let all = partitions_of(s);
                all[rng.random_range(0..all.len())].clone()
            })
            .collect();
        let built = from_core_and_quotient(&b, &quotient).unwrap();
        let cq = core_and_quotient(&built, p);
        if cq.quotient != quotient || cq.core != *b.rho() || cq.weight != w {
            quotient_bad += 1;
        }
    }
    report(
        8,
        abacus_bad == 0 && quotient_bad == 0,
        format!(
            "{trials} cases each; abacus failures {abacus_bad}, quotient failures {quotient_bad}"
        ),
    );
}
