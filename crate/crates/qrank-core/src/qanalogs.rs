//! q-combinatorics kernel: Gaussian binomials, q-Pochhammer polynomials,
//! |GL(r, F)| and the rank-stratum count a(n, r, q), all exact.
//!
//! The formulas here are polynomial in q, so every operation accepts a
//! plain integer q ≥ 2; [`QParam`] carries the validated prime-power
//! structure needed before any field construction.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::polyring::PolyZ;

/// A validated prime power q = p^m.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QParam {
    p: u64,
    m: u32,
    q: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QParamError {
    NotPrime(u64),
    NotPrimePower(u64),
    BadDegree,
    Overflow,
}

impl fmt::Display for QParamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QParamError::NotPrime(p) => write!(f, "{p} is not prime"),
            QParamError::NotPrimePower(q) => write!(f, "{q} is not a prime power"),
            QParamError::BadDegree => write!(f, "extension degree must be at least 1"),
            QParamError::Overflow => write!(f, "p^m overflows u64"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for QParamError {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl QParam {
    pub fn new(p: u64, m: u32) -> Result<Self, QParamError> {
        if !is_prime(p) {
            return Err(QParamError::NotPrime(p));
        }
        if m < 1 {
            return Err(QParamError::BadDegree);
        }
        let q = p
            .checked_pow(m)
            .ok_or(QParamError::Overflow)?;
        Ok(QParam { p, m, q })
    }

    /// Factor q as p^m; errors unless q is a prime power ≥ 2.
    pub fn from_order(q: u64) -> Result<Self, QParamError> {
        if q < 2 {
            return Err(QParamError::NotPrimePower(q));
        }
        let mut p = q;
        let mut d = 2u64;
        while d.saturating_mul(d) <= p {
            if p.is_multiple_of(d) {
                p = d;
                break;
            }
            d += 1;
        }
        let mut m = 0u32;
        let mut rest = q;
        while rest.is_multiple_of(p) {
            rest /= p;
            m += 1;
        }
        if rest != 1 {
            return Err(QParamError::NotPrimePower(q));
        }
        Ok(QParam { p, m, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u64 {
        self.q
    }
}

/// q^e as a big integer.
pub fn qpow(q: u64, e: u64) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

/// The exponent binomial m(m−1)/2; 0 for m ∈ {0, 1}.
pub fn binom2(m: u64) -> u64 {
    m * m.saturating_sub(1) / 2
}

/// Exact quotient; panics if the division leaves a remainder, which would
/// mean a formula bug rather than bad input.
fn exact_div(num: BigUint, den: &BigUint) -> BigUint {
    let (quot, rem) = num.div_rem(den);
    assert!(rem.is_zero(), "inexact division in q-analog arithmetic");
    quot
}

/// Gaussian binomial [n r]_q: the number of r-dimensional subspaces of
/// F_q^n. Zero when r > n.
pub fn gauss_binom(n: u64, r: u64, q: u64) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..r {
        num *= qpow(q, n - i) - 1u32;
        den *= qpow(q, r - i) - 1u32;
    }
    exact_div(num, &den)
}

/// The q-Pochhammer polynomial (X;q)_n = ∏_{i=0}^{n−1} (1 − q^i X),
/// expanded; the constant polynomial 1 when n = 0.
pub fn q_pochhammer_poly(n: u64, q: u64) -> PolyZ {
    let mut acc = PolyZ::one();
    for i in 0..n {
        let factor = PolyZ::from_coeffs(alloc::vec![
            BigInt::one(),
            -BigInt::from(qpow(q, i)),
        ]);
        acc = &acc * &factor;
    }
    acc
}

/// The right-hand side of the q-binomial theorem,
/// Σ_{r=0}^{n} [n r]_q (−1)^r q^(r choose 2) X^r, built term by term.
/// Equals `q_pochhammer_poly(n, q)`; kept as an independent route.
pub fn q_binomial_expand(n: u64, q: u64) -> PolyZ {
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(n as usize + 1);
    for r in 0..=n {
        let mag = gauss_binom(n, r, q) * qpow(q, binom2(r));
        let term = if r % 2 == 0 {
            BigInt::from(mag)
        } else {
            -BigInt::from(mag)
        };
        coeffs.push(term);
    }
    PolyZ::from_coeffs(coeffs)
}

/// |GL(r, F_q)| = ∏_{i=0}^{r−1} (q^r − q^i); 1 for r = 0.
pub fn gl_order(r: u64, q: u64) -> BigUint {
    let qr = qpow(q, r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc *= &qr - qpow(q, i);
    }
    acc
}

/// a(n, r, q) = [n r]_q² |GL(r, F_q)|, the number of n×n rank-r matrices
/// over GF(q). Zero when r > n.
pub fn rank_count(n: u64, r: u64, q: u64) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let gb = gauss_binom(n, r, q);
    &gb * &gb * gl_order(r, q)
}
