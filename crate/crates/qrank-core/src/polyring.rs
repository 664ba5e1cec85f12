//! Dense univariate polynomials over the integers, plus the shared
//! three-term recurrence behind the generating functions A_n(X) and
//! g_{n,k}(X).
//!
//! Coefficient sequences are kept canonical (no trailing zeros). Degrees
//! stay at desk scale, so dense storage and schoolbook multiplication
//! are the right tools.

use alloc::vec::Vec;
use core::ops::{Add, Mul};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::counts::{self, CountError, TraceClass};
use crate::qanalogs::{q_pochhammer_poly, qpow, rank_count};

/// A polynomial in X with arbitrary-precision integer coefficients.
/// `coeffs[i]` is the coefficient of X^i; the zero polynomial is the
/// empty sequence.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PolyZ {
    coeffs: Vec<BigInt>,
}

impl PolyZ {
    pub fn zero() -> Self {
        PolyZ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyZ {
            coeffs: alloc::vec![BigInt::one()],
        }
    }

    /// Builds from a low-to-high coefficient sequence, stripping trailing
    /// zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyZ { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of X^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> &BigInt {
        static ZERO: BigInt = BigInt::ZERO;
        self.coeffs.get(i).unwrap_or(&ZERO)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The substitution X ↦ cX: coefficient of X^i is scaled by c^i.
    pub fn scale_arg(&self, c: &BigInt) -> PolyZ {
        let mut power = BigInt::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let scaled = a * &power;
                power *= c;
                scaled
            })
            .collect();
        PolyZ::from_coeffs(coeffs)
    }

    /// Multiplication by X^k.
    pub fn shift(&self, k: usize) -> PolyZ {
        if self.is_zero() {
            return PolyZ::zero();
        }
        let mut coeffs = alloc::vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        PolyZ { coeffs }
    }

    pub fn scalar_mul(&self, c: &BigInt) -> PolyZ {
        PolyZ::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact polynomial division; errors if the divisor does not divide
    /// self in Z[X].
    pub fn exact_div(&self, divisor: &PolyZ) -> Result<PolyZ, CountError> {
        if divisor.is_zero() {
            return Err(CountError::DivisionInexact);
        }
        if self.is_zero() {
            return Ok(PolyZ::zero());
        }
        let dd = divisor.degree().unwrap();
        let lead = divisor.coeff(dd).clone();
        let mut rem = self.coeffs.clone();
        let nd = rem.len() - 1;
        if nd < dd {
            return Err(CountError::DivisionInexact);
        }
        let mut quot = alloc::vec![BigInt::zero(); nd - dd + 1];
        for i in (0..quot.len()).rev() {
            let top = rem[i + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return Err(CountError::DivisionInexact);
            }
            for j in 0..=dd {
                let delta = &c * divisor.coeff(j);
                rem[i + j] -= delta;
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(CountError::DivisionInexact);
        }
        Ok(PolyZ::from_coeffs(quot))
    }
}

impl Add for &PolyZ {
    type Output = PolyZ;

    fn add(self, rhs: &PolyZ) -> PolyZ {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        PolyZ::from_coeffs(coeffs)
    }
}

impl Mul for &PolyZ {
    type Output = PolyZ;

    fn mul(self, rhs: &PolyZ) -> PolyZ {
        if self.is_zero() || rhs.is_zero() {
            return PolyZ::zero();
        }
        let mut coeffs = alloc::vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyZ { coeffs }
    }
}

/// One step of the recurrence shared by A_n(X), g_{n,k}(X) and
/// f^α_{n,k}(X):
///
/// P(q²X)(1−X)(1−qX) + 2q^n·X(1−X)·P(qX) + q^(2n−1)·X²·P(X).
pub fn recurrence_step(p: &PolyZ, n: u64, q: u64) -> PolyZ {
    let qi = BigInt::from(q);
    let one_minus_x = PolyZ::from_coeffs(alloc::vec![BigInt::one(), -BigInt::one()]);
    let one_minus_qx = PolyZ::from_coeffs(alloc::vec![BigInt::one(), -qi.clone()]);

    let term1 = &p.scale_arg(&(&qi * &qi)) * &(&one_minus_x * &one_minus_qx);
    let term2 = p
        .scale_arg(&qi)
        .scalar_mul(&(BigInt::from(2u32) * BigInt::from(qpow(q, n))))
        .shift(1);
    let term2 = &term2 * &one_minus_x;
    let term3 = p
        .scalar_mul(&BigInt::from(qpow(q, 2 * n - 1)))
        .shift(2);
    &(&term1 + &term2) + &term3
}

/// A_n(X) = Σ_r a(n,r,q) X^r built directly from the rank counts.
pub fn a_poly(n: u64, q: u64) -> PolyZ {
    PolyZ::from_coeffs((0..=n).map(|r| BigInt::from(rank_count(n, r, q))).collect())
}

/// A_n(X) built by iterating the recurrence from A_0 = 1.
pub fn a_poly_rec(n: u64, q: u64) -> PolyZ {
    let mut p = PolyZ::one();
    for i in 1..=n {
        p = recurrence_step(&p, i, q);
    }
    p
}

/// g_{n,k}(X) = (X;q)_k · A_{n−k}(q^k X), the closed generating function
/// for the differences g_{n,r,k} = f⁰ − f¹.
pub fn g_poly(n: u64, k: u64, q: u64) -> PolyZ {
    assert!(k <= n, "g_poly requires k <= n");
    let scaled = a_poly(n - k, q).scale_arg(&BigInt::from(qpow(q, k)));
    &q_pochhammer_poly(k, q) * &scaled
}

/// g_{n,k}(X) built by iterating the recurrence from the base case
/// g_{k,k} = (X;q)_k.
pub fn g_poly_rec(n: u64, k: u64, q: u64) -> PolyZ {
    assert!(k <= n, "g_poly_rec requires k <= n");
    let mut p = q_pochhammer_poly(k, q);
    for i in (k + 1)..=n {
        p = recurrence_step(&p, i, q);
    }
    p
}

/// The row (f^α_{n,r,k})_{r=0..n} computed by the three-term recursion
///
/// f_{m,r} = f_{m−1,r}·q^(2r) + f_{m−1,r−1}·q^(2r−2)(2q^(m−r+1)−1−q)
///         + f_{m−1,r−2}·q^(2r−3)(q^(m−r+1)−1)²
///
/// from the base row n = k supplied by the closed forms.
pub fn f_table_rec(n: u64, k: u64, q: u64, alpha: TraceClass) -> Result<Vec<BigUint>, CountError> {
    assert!(k <= n, "f_table_rec requires k <= n");
    let mut row: Vec<BigUint> = (0..=k)
        .map(|r| counts::f_count(k, r, k, q, alpha))
        .collect::<Result<_, _>>()?;
    for m in (k + 1)..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for r in 0..=m {
            let mut v = BigUint::zero();
            if let Some(prev) = row.get(r as usize) {
                v += prev * qpow(q, 2 * r);
            }
            if r >= 1 {
                if let Some(prev) = row.get(r as usize - 1) {
                    let w = BigUint::from(2u32) * qpow(q, m - r + 1) - 1u32 - q;
                    v += prev * qpow(q, 2 * r - 2) * w;
                }
            }
            if r >= 2 {
                if let Some(prev) = row.get(r as usize - 2) {
                    let d = qpow(q, m - r + 1) - 1u32;
                    v += prev * qpow(q, 2 * r - 3) * (&d * &d);
                }
            }
            next.push(v);
        }
        row = next;
    }
    Ok(row)
}

#[allow(dead_code)]
fn signed_abs(v: &BigInt) -> BigUint {
    v.abs().to_biguint().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counts::g_count;

    fn poly(coeffs: &[i64]) -> PolyZ {
        PolyZ::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn ring_basics() {
        let p = poly(&[1, 1]);
        assert_eq!(p.scale_arg(&BigInt::from(2)), poly(&[1, 2]));
        assert_eq!(&poly(&[1, -1]) * &poly(&[1, -2]), poly(&[1, -3, 2]));
        assert_eq!(&p + &PolyZ::zero(), p);
        assert_eq!(poly(&[0, 0, 0]), PolyZ::zero());
        assert_eq!(PolyZ::zero().degree(), None);
    }

    #[test]
    fn exact_division() {
        let prod = &poly(&[1, -1]) * &poly(&[1, 5, 7]);
        assert_eq!(prod.exact_div(&poly(&[1, -1])).unwrap(), poly(&[1, 5, 7]));
        assert!(poly(&[1, 1]).exact_div(&poly(&[1, 2])).is_err());
        assert!(poly(&[1]).exact_div(&PolyZ::zero()).is_err());
    }

    #[test]
    fn recurrence_step_base_cases() {
        for q in [2u64, 3, 5] {
            let a1 = recurrence_step(&PolyZ::one(), 1, q);
            assert_eq!(a1, poly(&[1, q as i64 - 1]));
        }
        let a2 = recurrence_step(&poly(&[1, 1]), 2, 2);
        assert_eq!(a2, poly(&[1, 9, 6]));
        assert_eq!(recurrence_step(&PolyZ::zero(), 3, 2), PolyZ::zero());
    }

    #[test]
    fn a_poly_matches_recurrence() {
        for q in [2u64, 3, 5] {
            for n in 0..=8u64 {
                assert_eq!(a_poly(n, q), a_poly_rec(n, q), "n={n} q={q}");
                assert_eq!(a_poly(n, q).degree(), Some(n as usize));
            }
        }
    }

    #[test]
    fn a_poly_small() {
        assert_eq!(a_poly(0, 7), PolyZ::one());
        assert_eq!(a_poly(1, 2), poly(&[1, 1]));
        assert_eq!(a_poly(2, 2), poly(&[1, 9, 6]));
    }

    #[test]
    fn g_poly_matches_recurrence_and_counts() {
        for q in [2u64, 3, 5] {
            for n in 0..=8u64 {
                for k in 0..=n {
                    let g = g_poly(n, k, q);
                    assert_eq!(g, g_poly_rec(n, k, q), "n={n} k={k} q={q}");
                    assert_eq!(g.degree(), Some(n as usize));
                    for r in 0..=n {
                        assert_eq!(g.coeff(r as usize), &g_count(n, r, k, q));
                    }
                }
            }
        }
    }

    #[test]
    fn g_poly_base_and_first_step() {
        for q in [2u64, 3, 5] {
            for k in 0..=5u64 {
                assert_eq!(g_poly(k, k, q), q_pochhammer_poly(k, q));
                // g_{k+1,k} / (X;q)_k = 1 + (q-1) q^k X
                let quot = g_poly(k + 1, k, q)
                    .exact_div(&q_pochhammer_poly(k, q))
                    .unwrap();
                let expected = PolyZ::from_coeffs(vec![
                    BigInt::one(),
                    BigInt::from((q - 1) * q.pow(k as u32)),
                ]);
                assert_eq!(quot, expected, "k={k} q={q}");
                // g_{k+2,k} / (X;q)_k = A_2(q^k X)
                let quot2 = g_poly(k + 2, k, q)
                    .exact_div(&q_pochhammer_poly(k, q))
                    .unwrap();
                let a2 = a_poly(2, q).scale_arg(&BigInt::from(qpow(q, k)));
                assert_eq!(quot2, a2, "k={k} q={q}");
            }
        }
    }

    #[test]
    fn g_poly_2_1_2() {
        assert_eq!(g_poly(2, 1, 2), poly(&[1, 1, -2]));
    }

    #[test]
    fn f_table_matches_closed_forms() {
        use crate::counts::f_count;
        for q in [2u64, 3, 4] {
            for n in 0..=6u64 {
                for k in 0..=n {
                    for alpha in [TraceClass::Zero, TraceClass::Nonzero] {
                        let row = f_table_rec(n, k, q, alpha).unwrap();
                        assert_eq!(row.len() as u64, n + 1);
                        for r in 0..=n {
                            assert_eq!(
                                row[r as usize],
                                f_count(n, r, k, q, alpha).unwrap(),
                                "n={n} r={r} k={k} q={q} {alpha:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn f_table_2_1_2() {
        let zero = f_table_rec(2, 1, 2, TraceClass::Zero).unwrap();
        let nonzero = f_table_rec(2, 1, 2, TraceClass::Nonzero).unwrap();
        let as_u64 =
            |v: &[BigUint]| v.iter().map(|x| u64::try_from(x).unwrap()).collect::<Vec<_>>();
        // frozen from brute force over all 16 binary 2×2 matrices
        assert_eq!(as_u64(&zero), vec![1, 5, 2]);
        assert_eq!(as_u64(&nonzero), vec![0, 4, 4]);
    }
}
