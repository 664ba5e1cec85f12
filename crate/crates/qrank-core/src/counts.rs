//! Closed-form counts of rank-r matrices with prescribed k-trace, built
//! on the difference formula
//!
//! g_{n,r,k} = f⁰_{n,r,k} − f¹_{n,r,k}
//!           = Σ_{i=0}^{r} (−1)^i q^((i choose 2)+k(r−i)) [k i]_q a(n−k, r−i, q)
//!
//! together with f¹ = (a(n,r,q) − g)/q and f⁰ = a − (q−1)f¹. The paper's
//! special-case formulas (n = k, n = k+1, full rank) are implemented
//! separately as independent cross-checks.

use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::gfq::{FieldCtx, FieldElem, MatGF};
use crate::qanalogs::{binom2, gauss_binom, qpow, rank_count};

/// Whether the prescribed k-trace value is zero or any nonzero element;
/// all nonzero values give the same count, so only the class matters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TraceClass {
    Zero,
    Nonzero,
}

impl TraceClass {
    /// The class of a concrete field element.
    pub fn of(elem: FieldElem) -> TraceClass {
        if elem.is_zero() {
            TraceClass::Zero
        } else {
            TraceClass::Nonzero
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountError {
    /// A division the formulas guarantee to be exact left a remainder;
    /// this signals an implementation bug, never bad input.
    DivisionInexact,
    DimensionMismatch,
    InvalidQuery,
}

impl fmt::Display for CountError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountError::DivisionInexact => write!(f, "internal: exact division left a remainder"),
            CountError::DimensionMismatch => write!(f, "matrix is not square"),
            CountError::InvalidQuery => write!(f, "query violates 0 <= r,k <= n or q < 2"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CountError {}

/// A validated (n, r, k, q, trace-class) counting query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountQuery {
    pub n: u64,
    pub r: u64,
    pub k: u64,
    pub q: u64,
    pub alpha: TraceClass,
}

impl CountQuery {
    pub fn new(n: u64, r: u64, k: u64, q: u64, alpha: TraceClass) -> Result<Self, CountError> {
        if r > n || k > n || q < 2 {
            return Err(CountError::InvalidQuery);
        }
        Ok(CountQuery { n, r, k, q, alpha })
    }
}

fn exact_div_signed(num: BigInt, den: &BigInt) -> Result<BigInt, CountError> {
    let (quot, rem) = num.div_rem(den);
    if rem.is_zero() {
        Ok(quot)
    } else {
        Err(CountError::DivisionInexact)
    }
}

/// g_{n,r,k} = f⁰_{n,r,k} − f¹_{n,r,k} by the main difference formula.
/// Terms with i > k or r−i > n−k vanish through the zero conventions of
/// `gauss_binom` and `rank_count`, so k = 0 needs no special casing.
pub fn g_count(n: u64, r: u64, k: u64, q: u64) -> BigInt {
    assert!(r <= n && k <= n, "g_count requires 0 <= r,k <= n");
    let mut total = BigInt::zero();
    for i in 0..=r {
        let mag = qpow(q, binom2(i) + k * (r - i))
            * gauss_binom(k, i, q)
            * rank_count(n - k, r - i, q);
        let term = BigInt::from(mag);
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// f^α_{n,r,k}: the number of n×n rank-r matrices over GF(q) whose
/// k-trace is zero (α = Zero) or any fixed nonzero value (α = Nonzero).
pub fn f_count(n: u64, r: u64, k: u64, q: u64, alpha: TraceClass) -> Result<BigUint, CountError> {
    if r > n || k > n {
        return Err(CountError::InvalidQuery);
    }
    let a = BigInt::from(rank_count(n, r, q));
    let g = g_count(n, r, k, q);
    let f1 = exact_div_signed(&a - &g, &BigInt::from(q))?;
    let result = match alpha {
        TraceClass::Nonzero => f1,
        TraceClass::Zero => a - BigInt::from(q - 1) * f1,
    };
    result
        .to_biguint()
        .ok_or(CountError::DivisionInexact)
}

/// Convenience wrapper over a validated [`CountQuery`].
pub fn f_count_query(query: &CountQuery) -> Result<BigUint, CountError> {
    f_count(query.n, query.r, query.k, query.q, query.alpha)
}

/// The n = k specialization: f⁰_{k,r,k} − f¹_{k,r,k}
/// = (−1)^r q^(r choose 2) [k r]_q.
pub fn prasad_diff(k: u64, r: u64, q: u64) -> BigInt {
    assert!(r <= k, "prasad_diff requires r <= k");
    let mag = BigInt::from(qpow(q, binom2(r)) * gauss_binom(k, r, q));
    if r.is_multiple_of(2) {
        mag
    } else {
        -mag
    }
}

/// The n = k+1 specialization:
///
/// f⁰_{k+1,r,k} − f¹_{k+1,r,k}
///   = (−1)^r q^(r choose 2) [k k−r]_q ·
///     ((q^(k−r+2) − 1) + q^(k+1)(1 − q)) / (q^(k+1−r) − 1),
///
/// with the division asserted exact.
pub fn k_minus_1_diff(k: u64, r: u64, q: u64) -> Result<BigInt, CountError> {
    assert!(r <= k, "k_minus_1_diff requires r <= k");
    let qk1 = BigInt::from(qpow(q, k + 1));
    let bracket = BigInt::from(qpow(q, k - r + 2)) - 1 + &qk1 * (BigInt::one() - BigInt::from(q));
    let den = BigInt::from(qpow(q, k + 1 - r)) - 1;
    // the quotient is integral only as a whole: the Gaussian binomial
    // factor participates in the cancellation
    let num = BigInt::from(qpow(q, binom2(r)) * gauss_binom(k, k - r, q)) * bracket;
    let mag = exact_div_signed(num, &den)?;
    Ok(if r.is_multiple_of(2) { mag } else { -mag })
}

/// The full-rank specialization:
/// f⁰_{k+1,k+1,k} − f¹_{k+1,k+1,k} = (−1)^k q^(k+1 choose 2) (q − 1).
pub fn full_rank_diff(k: u64, q: u64) -> BigInt {
    let mag = BigInt::from(qpow(q, binom2(k + 1)) * (q - 1));
    if k.is_multiple_of(2) {
        mag
    } else {
        -mag
    }
}

/// |Z^α_{A,r}| = |{X of rank r with tr(AX) = α}|, which depends on A only
/// through its rank k: it equals f^α_{n,r,k}, except that A = 0 forces
/// tr(AX) = 0 so the count is a(n,r,q) for α = 0 and 0 otherwise (the
/// k = 0 convention already yields exactly this).
pub fn count_z(ctx: &FieldCtx, a: &MatGF, r: u64, alpha: FieldElem) -> Result<BigUint, CountError> {
    if a.n_rows() != a.n_cols() {
        return Err(CountError::DimensionMismatch);
    }
    let n = a.n_rows() as u64;
    if r > n {
        return Err(CountError::InvalidQuery);
    }
    let k = ctx.mat_rank(a) as u64;
    f_count(n, r, k, ctx.order(), TraceClass::of(alpha))
}

#[allow(dead_code)]
fn abs_big(v: &BigInt) -> BigUint {
    v.abs().to_biguint().unwrap()
}
