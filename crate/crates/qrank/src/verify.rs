//! Verification suites behind `qrank verify`: formula identities checked
//! over parameter grids, and closed forms checked against the exhaustive
//! enumeration oracle.

use num_bigint::BigUint;
use qrank_core::counts::{f_count, full_rank_diff, g_count, k_minus_1_diff, prasad_diff, TraceClass};
use qrank_core::gfq::{FieldCtx, MatGF};
use qrank_core::oracle::{enumerate_counts, oracle_z, partitioned_enumerate, OracleError};
use qrank_core::polyring::{a_poly, a_poly_rec, f_table_rec, g_poly, g_poly_rec};
use qrank_core::qanalogs::{gauss_binom, q_binomial_expand, q_pochhammer_poly, qpow, rank_count, QParam};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
}

fn check(name: &'static str, f: impl FnOnce() -> Option<String>) -> CheckOutcome {
    let detail = f();
    CheckOutcome {
        name,
        passed: detail.is_none(),
        detail,
    }
}

/// Identity suite: every closed form against every other route, over
/// n ≤ max_n and the given q values (any integers ≥ 2).
pub fn identities_suite(max_n: u64, q_list: &[u64]) -> Vec<CheckOutcome> {
    let grid = || {
        q_list
            .iter()
            .copied()
            .flat_map(move |q| (0..=max_n).map(move |n| (n, q)))
    };
    vec![
        check("q_binomial_theorem", || {
            grid().find_map(|(n, q)| {
                (q_binomial_expand(n, q) != q_pochhammer_poly(n, q))
                    .then(|| format!("n={n} q={q}"))
            })
        }),
        check("gauss_binom_symmetry", || {
            grid().find_map(|(n, q)| {
                (0..=n)
                    .find(|&r| gauss_binom(n, r, q) != gauss_binom(n, n - r, q))
                    .map(|r| format!("n={n} r={r} q={q}"))
            })
        }),
        check("rank_counts_sum_to_q_pow_n2", || {
            grid().find_map(|(n, q)| {
                let total: BigUint = (0..=n).map(|r| rank_count(n, r, q)).sum();
                (total != qpow(q, n * n)).then(|| format!("n={n} q={q}"))
            })
        }),
        check("a_poly_recurrence", || {
            grid().find_map(|(n, q)| {
                (a_poly(n, q) != a_poly_rec(n, q)).then(|| format!("n={n} q={q}"))
            })
        }),
        check("g_poly_recurrence", || {
            grid().find_map(|(n, q)| {
                (0..=n)
                    .find(|&k| g_poly(n, k, q) != g_poly_rec(n, k, q))
                    .map(|k| format!("n={n} k={k} q={q}"))
            })
        }),
        check("g_poly_coefficients_match_g_count", || {
            grid().find_map(|(n, q)| {
                for k in 0..=n {
                    let poly = g_poly(n, k, q);
                    for r in 0..=n {
                        if poly.coeff(r as usize) != &g_count(n, r, k, q) {
                            return Some(format!("n={n} r={r} k={k} q={q}"));
                        }
                    }
                }
                None
            })
        }),
        check("prasad_specialization", || {
            grid().find_map(|(k, q)| {
                (0..=k)
                    .find(|&r| g_count(k, r, k, q) != prasad_diff(k, r, q))
                    .map(|r| format!("k={k} r={r} q={q}"))
            })
        }),
        check("k_minus_1_specialization", || {
            grid().find_map(|(k, q)| {
                (0..=k)
                    .find(|&r| {
                        k_minus_1_diff(k, r, q)
                            .map(|d| g_count(k + 1, r, k, q) != d)
                            .unwrap_or(true)
                    })
                    .map(|r| format!("k={k} r={r} q={q}"))
            })
        }),
        check("full_rank_specialization", || {
            grid().find_map(|(k, q)| {
                (g_count(k + 1, k + 1, k, q) != full_rank_diff(k, q))
                    .then(|| format!("k={k} q={q}"))
            })
        }),
        check("trace_class_conservation", || {
            grid().find_map(|(n, q)| {
                for r in 0..=n {
                    for k in 0..=n {
                        let f0 = f_count(n, r, k, q, TraceClass::Zero);
                        let f1 = f_count(n, r, k, q, TraceClass::Nonzero);
                        let ok = match (f0, f1) {
                            (Ok(f0), Ok(f1)) => f0 + f1 * (q - 1) == rank_count(n, r, q),
                            _ => false,
                        };
                        if !ok {
                            return Some(format!("n={n} r={r} k={k} q={q}"));
                        }
                    }
                }
                None
            })
        }),
        check("f_table_recursion", || {
            grid().find_map(|(n, q)| {
                for k in 0..=n {
                    for alpha in [TraceClass::Zero, TraceClass::Nonzero] {
                        let Ok(row) = f_table_rec(n, k, q, alpha) else {
                            return Some(format!("n={n} k={k} q={q} (error)"));
                        };
                        for r in 0..=n {
                            if row[r as usize] != f_count(n, r, k, q, alpha).unwrap() {
                                return Some(format!("n={n} r={r} k={k} q={q}"));
                            }
                        }
                    }
                }
                None
            })
        }),
    ]
}

/// Builds the canonical field of order q; errors for non-prime-powers.
pub fn field_of_order(q: u64) -> Result<FieldCtx, String> {
    let param = QParam::from_order(q).map_err(|e| e.to_string())?;
    FieldCtx::new(param.p(), param.m()).map_err(|e| e.to_string())
}

/// Compares every cell of the enumerated table with `f_count`.
pub fn enumeration_check(ctx: &FieldCtx, n: usize, workers: usize) -> Result<Option<String>, OracleError> {
    let q = ctx.order();
    for k in 0..=n {
        let table = if workers > 1 {
            partitioned_enumerate(ctx, n, k, workers)?
        } else {
            enumerate_counts(ctx, n, k)?
        };
        for r in 0..=n {
            let f0 = f_count(n as u64, r as u64, k as u64, q, TraceClass::Zero).unwrap();
            if table.get(r, 0) != &f0 {
                return Ok(Some(format!(
                    "n={n} r={r} k={k} q={q} alpha=0: oracle={} formula={f0}",
                    table.get(r, 0)
                )));
            }
            let f1 = f_count(n as u64, r as u64, k as u64, q, TraceClass::Nonzero).unwrap();
            for alpha in 1..q {
                if table.get(r, alpha) != &f1 {
                    return Ok(Some(format!(
                        "n={n} r={r} k={k} q={q} alpha={alpha}: oracle={} formula={f1}",
                        table.get(r, alpha)
                    )));
                }
            }
        }
        if table.total() != qpow(q, (n * n) as u64) {
            return Ok(Some(format!("n={n} k={k} q={q}: cells do not sum to q^(n^2)")));
        }
    }
    Ok(None)
}

/// oracle_Z against f_count for `samples` random matrices A, all ranks
/// and all trace values.
pub fn z_bijection_check(
    ctx: &FieldCtx,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<Option<String>, OracleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for s in 0..samples {
        let mut a = MatGF::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                a.set(i, j, ctx.random_elem(&mut rng));
            }
        }
        let rank = ctx.mat_rank(&a) as u64;
        for r in 0..=n {
            for alpha in ctx.elements() {
                let by_oracle = oracle_z(ctx, &a, r, alpha)?;
                let by_formula = f_count(
                    n as u64,
                    r as u64,
                    rank,
                    ctx.order(),
                    TraceClass::of(alpha),
                )
                .unwrap();
                if by_oracle != by_formula {
                    return Ok(Some(format!(
                        "q={} n={n} sample={s} r={r} alpha={}: oracle={by_oracle} formula={by_formula}",
                        ctx.order(),
                        alpha.index()
                    )));
                }
            }
        }
    }
    Ok(None)
}

/// Identical tables from GF(8) built over two different irreducible
/// cubics; the counts must not depend on the modulus choice.
pub fn modulus_independence_check() -> Result<Option<String>, OracleError> {
    let a = FieldCtx::with_modulus(2, 3, &[1, 1, 0, 1]).expect("t^3+t+1 is irreducible");
    let b = FieldCtx::with_modulus(2, 3, &[1, 0, 1, 1]).expect("t^3+t^2+1 is irreducible");
    for n in 1..=2usize {
        for k in 0..=n {
            let ta = enumerate_counts(&a, n, k)?;
            let tb = enumerate_counts(&b, n, k)?;
            if ta != tb {
                return Ok(Some(format!("n={n} k={k}: tables differ")));
            }
        }
    }
    Ok(None)
}

/// Oracle suite over prime powers in q_list, n ≤ max_n. A grid point
/// beyond the enumeration guard is a usage error, reported as Err.
pub fn oracle_suite(
    max_n: u64,
    q_list: &[u64],
    workers: usize,
    seed: u64,
) -> Result<Vec<CheckOutcome>, String> {
    let mut ctxs = Vec::new();
    for &q in q_list {
        let ctx = field_of_order(q)?;
        for n in 1..=max_n {
            if (q as u128).checked_pow((n * n) as u32).is_none_or(|s| {
                s > qrank_core::oracle::MAX_ENUM_STEPS
            }) {
                return Err(format!(
                    "size guard exceeded: q^(n^2) for q={q}, n={n} is beyond 2^28; lower --max-n"
                ));
            }
        }
        ctxs.push(ctx);
    }
    let mut out = Vec::new();
    out.push(check("enumeration_matches_closed_forms", || {
        ctxs.iter().find_map(|ctx| {
            (1..=max_n as usize)
                .find_map(|n| enumeration_check(ctx, n, workers).expect("guard pre-checked"))
        })
    }));
    out.push(check("z_set_bijection", || {
        ctxs.iter().find_map(|ctx| {
            (1..=max_n as usize).find_map(|n| {
                z_bijection_check(ctx, n, 10, seed).expect("guard pre-checked")
            })
        })
    }));
    out.push(check("partitioned_determinism", || {
        let ctx = &ctxs[0];
        let n = max_n.min(2) as usize;
        let reference = enumerate_counts(ctx, n, n.min(1)).expect("guard pre-checked");
        for w in [1usize, 2, workers.max(1), 8] {
            let t = partitioned_enumerate(ctx, n, n.min(1), w).expect("guard pre-checked");
            if t != reference {
                return Some(format!("workers={w} differs from single-threaded"));
            }
        }
        None
    }));
    out.push(check("modulus_independence", || {
        modulus_independence_check().expect("small fixed sizes")
    }));
    Ok(out)
}
