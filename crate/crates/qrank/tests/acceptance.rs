//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (run with `cargo test --test acceptance -- --nocapture` to see
//! them). Every comparison is exact; there are no tolerances anywhere.

use num_bigint::BigUint;
use qrank::verify::{
    enumeration_check, field_of_order, modulus_independence_check, z_bijection_check,
};
use qrank_core::counts::{f_count, full_rank_diff, g_count, k_minus_1_diff, prasad_diff, TraceClass};
use qrank_core::oracle::{enumerate_counts, partitioned_enumerate};
use qrank_core::polyring::{a_poly, a_poly_rec, f_table_rec, g_poly, g_poly_rec};
use qrank_core::qanalogs::{q_binomial_expand, q_pochhammer_poly, qpow, rank_count};

/// 14 prime powers: enough evaluation points to pin every identity in
/// the grids below as a polynomial identity in q.
const Q14: [u64; 14] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25];

const PRIME_POWERS_UP_TO_16: [u64; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

fn report(criterion: &str, failure: Option<String>) {
    match &failure {
        None => println!("ACCEPT {criterion}: PASS"),
        Some(detail) => println!("ACCEPT {criterion}: FAIL ({detail})"),
    }
    assert!(failure.is_none(), "{criterion}: {}", failure.unwrap());
}

#[test]
fn criterion_1_oracle_equivalence() {
    let mut grid: Vec<(u64, usize)> = PRIME_POWERS_UP_TO_16
        .iter()
        .flat_map(|&q| [(q, 1usize), (q, 2)])
        .collect();
    grid.extend([(2, 3), (3, 3), (4, 3), (2, 4)]);
    let failure = grid.iter().find_map(|&(q, n)| {
        let ctx = field_of_order(q).unwrap();
        enumeration_check(&ctx, n, 1).unwrap()
    });
    report("criterion 1 (oracle equivalence)", failure);
}

#[test]
fn criterion_2_main_theorem_vs_generating_function() {
    let mut failure = None;
    'outer: for q in Q14 {
        for n in 0..=8u64 {
            for k in 0..=n {
                let poly = g_poly(n, k, q);
                for r in 0..=n {
                    if poly.coeff(r as usize) != &g_count(n, r, k, q) {
                        failure = Some(format!("n={n} r={r} k={k} q={q}"));
                        break 'outer;
                    }
                }
            }
        }
    }
    report("criterion 2 (main theorem vs generating function)", failure);
}

#[test]
fn criterion_3_recurrence_fidelity() {
    let mut failure = None;
    'outer: for q in Q14 {
        for n in 0..=8u64 {
            if a_poly(n, q) != a_poly_rec(n, q) {
                failure = Some(format!("A_poly: n={n} q={q}"));
                break 'outer;
            }
            for k in 0..=n {
                if g_poly(n, k, q) != g_poly_rec(n, k, q) {
                    failure = Some(format!("g_poly: n={n} k={k} q={q}"));
                    break 'outer;
                }
            }
        }
    }
    if failure.is_none() {
        'outer: for q in [2u64, 3, 4] {
            for n in 0..=6u64 {
                for k in 0..=n {
                    for alpha in [TraceClass::Zero, TraceClass::Nonzero] {
                        let row = f_table_rec(n, k, q, alpha).unwrap();
                        for r in 0..=n {
                            if row[r as usize] != f_count(n, r, k, q, alpha).unwrap() {
                                failure = Some(format!("f_table: n={n} r={r} k={k} q={q}"));
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
    }
    report("criterion 3 (recurrence fidelity)", failure);
}

#[test]
fn criterion_4_special_case_lemmas() {
    let mut failure = None;
    'outer: for q in Q14 {
        for k in 0..=6u64 {
            for r in 0..=k {
                if g_count(k, r, k, q) != prasad_diff(k, r, q) {
                    failure = Some(format!("prasad: k={k} r={r} q={q}"));
                    break 'outer;
                }
                if g_count(k + 1, r, k, q) != k_minus_1_diff(k, r, q).unwrap() {
                    failure = Some(format!("k_minus_1: k={k} r={r} q={q}"));
                    break 'outer;
                }
            }
            if g_count(k + 1, k + 1, k, q) != full_rank_diff(k, q) {
                failure = Some(format!("full_rank: k={k} q={q}"));
                break 'outer;
            }
        }
    }
    report("criterion 4 (special-case lemmas)", failure);
}

#[test]
fn criterion_5_q_binomial_theorem() {
    let failure = [2u64, 3, 5].iter().find_map(|&q| {
        (0..=12u64)
            .find(|&n| q_binomial_expand(n, q) != q_pochhammer_poly(n, q))
            .map(|n| format!("n={n} q={q}"))
    });
    report("criterion 5 (q-binomial theorem)", failure);
}

#[test]
fn criterion_6_conservation() {
    let mut failure = None;
    'outer: for q in Q14 {
        for n in 0..=8u64 {
            let total: BigUint = (0..=n).map(|r| rank_count(n, r, q)).sum();
            if total != qpow(q, n * n) {
                failure = Some(format!("rank total: n={n} q={q}"));
                break 'outer;
            }
            for r in 0..=n {
                for k in 0..=n {
                    let f0 = f_count(n, r, k, q, TraceClass::Zero).unwrap();
                    let f1 = f_count(n, r, k, q, TraceClass::Nonzero).unwrap();
                    if f0 + f1 * (q - 1) != rank_count(n, r, q) {
                        failure = Some(format!("conservation: n={n} r={r} k={k} q={q}"));
                        break 'outer;
                    }
                }
            }
        }
    }
    report("criterion 6 (conservation)", failure);
}

#[test]
fn criterion_7_z_set_bijection() {
    let failure = [(2u64, 2usize), (3, 2), (4, 2), (2, 3)]
        .iter()
        .find_map(|&(q, n)| {
            let ctx = field_of_order(q).unwrap();
            z_bijection_check(&ctx, n, 50, 0xACCE5).unwrap()
        });
    report("criterion 7 (Z-set bijection)", failure);
}

#[test]
fn criterion_8_modulus_independence() {
    report(
        "criterion 8 (modulus independence)",
        modulus_independence_check().unwrap(),
    );
}

#[test]
fn criterion_9_parallel_determinism() {
    let ctx = field_of_order(3).unwrap();
    let reference = enumerate_counts(&ctx, 3, 2).unwrap();
    let failure = [1usize, 2, 8].iter().find_map(|&w| {
        (partitioned_enumerate(&ctx, 3, 2, w).unwrap() != reference)
            .then(|| format!("workers={w}"))
    });
    report("criterion 9 (parallel determinism)", failure);
}
