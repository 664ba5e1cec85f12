//! Ground truth by exhaustive enumeration: iterate all q^(n²) matrices
//! over GF(q), tally by (rank, k-trace), and count Z-sets for arbitrary
//! A. Everything here is definitional; no formula from the counting
//! modules is consulted.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::gfq::{FieldCtx, FieldElem, GfError, MatGF};

/// Enumeration guard: at most 2^28 matrices per call.
pub const MAX_ENUM_STEPS: u128 = 1 << 28;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleError {
    /// q^(n²) exceeds the guard; use the closed-form path instead.
    TooLarge { steps: u128 },
    DimensionMismatch,
    KOutOfRange,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooLarge { steps } => write!(
                f,
                "size guard exceeded: q^(n^2) = {steps} > {MAX_ENUM_STEPS}; \
                 use the closed-form path"
            ),
            OracleError::DimensionMismatch => write!(f, "matrix dimensions do not match"),
            OracleError::KOutOfRange => write!(f, "k out of range"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for OracleError {}

impl From<GfError> for OracleError {
    fn from(e: GfError) -> Self {
        match e {
            GfError::KOutOfRange => OracleError::KOutOfRange,
            _ => OracleError::DimensionMismatch,
        }
    }
}

/// Tally of all n×n matrices over GF(q) by (rank, k-trace). Cell (r, α)
/// holds |{X : rank X = r, k-trace X = α}|.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    n: usize,
    k: usize,
    q: u64,
    cells: Vec<BigUint>,
}

impl CountTable {
    fn from_raw(n: usize, k: usize, q: u64, raw: Vec<u64>) -> Self {
        CountTable {
            n,
            k,
            q,
            cells: raw.into_iter().map(BigUint::from).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Count of matrices with the given rank and k-trace element index.
    pub fn get(&self, rank: usize, trace_index: u64) -> &BigUint {
        &self.cells[rank * self.q as usize + trace_index as usize]
    }

    pub fn total(&self) -> BigUint {
        self.cells.iter().sum()
    }
}

fn guard(ctx: &FieldCtx, n: usize) -> Result<(), OracleError> {
    let steps = (ctx.order() as u128).checked_pow((n * n) as u32);
    match steps {
        Some(s) if s <= MAX_ENUM_STEPS => Ok(()),
        Some(s) => Err(OracleError::TooLarge { steps: s }),
        None => Err(OracleError::TooLarge { steps: u128::MAX }),
    }
}

/// Walks every n×n matrix whose first row has enumeration index in
/// [row_lo, row_hi), in odometer order (bottom-right entry least
/// significant), calling the visitor on each.
fn walk_range(
    ctx: &FieldCtx,
    n: usize,
    row_lo: u64,
    row_hi: u64,
    mut visit: impl FnMut(&MatGF),
) {
    let q = ctx.order();
    let rest = n * n - n;
    for row_idx in row_lo..row_hi {
        let mut m = MatGF::zero(n, n);
        // first row: entry (0,0) is the most significant digit
        let mut v = row_idx;
        for j in (0..n).rev() {
            m.set(0, j, ctx.elem(v % q).unwrap());
            v /= q;
        }
        let mut digits = vec![0u64; rest];
        'matrices: loop {
            for (i, &d) in digits.iter().enumerate() {
                m.set(1 + i / n, i % n, ctx.elem(d).unwrap());
            }
            visit(&m);
            // increment from the least significant (last) digit
            let mut pos = rest;
            loop {
                if pos == 0 {
                    break 'matrices; // every digit wrapped
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < q {
                    break;
                }
                digits[pos] = 0;
            }
        }
    }
}

fn tally_range(ctx: &FieldCtx, n: usize, k: usize, row_lo: u64, row_hi: u64) -> Vec<u64> {
    let q = ctx.order();
    let mut cells = vec![0u64; (n + 1) * q as usize];
    walk_range(ctx, n, row_lo, row_hi, |m| {
        let rank = ctx.mat_rank(m);
        let trace = ctx.k_trace(m, k).unwrap();
        let cell = &mut cells[rank * q as usize + trace.index() as usize];
        *cell = cell.checked_add(1).expect("cell counter overflow");
    });
    cells
}

/// Exhaustive tally of all q^(n²) matrices by (rank, k-trace).
pub fn enumerate_counts(ctx: &FieldCtx, n: usize, k: usize) -> Result<CountTable, OracleError> {
    guard(ctx, n)?;
    if k > n {
        return Err(OracleError::KOutOfRange);
    }
    let rows = ctx.order().pow(n as u32);
    let raw = tally_range(ctx, n, k, 0, rows);
    Ok(CountTable::from_raw(n, k, ctx.order(), raw))
}

/// |Z^α_{A,r}| = |{X : rank X = r, tr(AX) = α}| by exhaustive iteration.
pub fn oracle_z(
    ctx: &FieldCtx,
    a: &MatGF,
    r: usize,
    alpha: FieldElem,
) -> Result<BigUint, OracleError> {
    if a.n_rows() != a.n_cols() {
        return Err(OracleError::DimensionMismatch);
    }
    let n = a.n_rows();
    guard(ctx, n)?;
    let mut count = 0u64;
    walk_range(ctx, n, 0, ctx.order().pow(n as u32), |x| {
        if ctx.mat_rank(x) == r && ctx.product_trace(a, x).unwrap() == alpha {
            count += 1;
        }
    });
    Ok(BigUint::from(count))
}

/// Same tally as [`enumerate_counts`], with the first-row index space
/// split across worker threads. The result is identical for every worker
/// count.
#[cfg(any(test, feature = "std"))]
pub fn partitioned_enumerate(
    ctx: &FieldCtx,
    n: usize,
    k: usize,
    workers: usize,
) -> Result<CountTable, OracleError> {
    guard(ctx, n)?;
    if k > n {
        return Err(OracleError::KOutOfRange);
    }
    let workers = workers.max(1);
    let q = ctx.order();
    let rows = q.pow(n as u32);
    let chunk = rows.div_ceil(workers as u64);
    let partials: Vec<Vec<u64>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let lo = (w as u64 * chunk).min(rows);
                let hi = ((w as u64 + 1) * chunk).min(rows);
                scope.spawn(move || tally_range(ctx, n, k, lo, hi))
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut merged = vec![0u64; (n + 1) * q as usize];
    for part in partials {
        for (m, v) in merged.iter_mut().zip(part) {
            *m = m.checked_add(v).expect("cell counter overflow");
        }
    }
    Ok(CountTable::from_raw(n, k, q, merged))
}
