//! Arithmetic in GF(p^m) and dense linear algebra over it: rank, k-trace,
//! canonical rank-k representatives and random matrices of prescribed
//! rank.
//!
//! Elements are stored as indices into the canonical enumeration: an
//! element with coefficient vector (c_0, ..., c_{m-1}) in the basis
//! 1, t, ..., t^(m-1) has index Σ c_i p^i, so index 0 is the zero element
//! and index 1 is the multiplicative identity. The context bound
//! q ≤ 2^20 keeps exhaustive enumeration practical; the formula modules
//! have no such bound.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand_core::RngCore;

use crate::qanalogs::is_prime;

/// Hard cap on field order for oracle-facing contexts.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

const RNG_DRAW_CAP: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GfError {
    NotPrime(u64),
    DegreeTooLarge,
    NotIrreducible,
    BadModulus,
    DivisionByZero,
    DimensionMismatch,
    KOutOfRange,
    RngExhausted,
}

impl fmt::Display for GfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GfError::NotPrime(p) => write!(f, "{p} is not prime"),
            GfError::DegreeTooLarge => {
                write!(f, "field order exceeds the bound 2^20")
            }
            GfError::NotIrreducible => write!(f, "modulus is not irreducible"),
            GfError::BadModulus => write!(f, "modulus must be monic of the declared degree"),
            GfError::DivisionByZero => write!(f, "inverse of the zero element"),
            GfError::DimensionMismatch => write!(f, "matrix dimensions do not match"),
            GfError::KOutOfRange => write!(f, "k out of range"),
            GfError::RngExhausted => write!(f, "rejection sampling draw cap reached"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GfError {}

/// An element of GF(p^m), identified by its canonical enumeration index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

// --- polynomial helpers over GF(p), coefficient vectors low-to-high ---

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    debug_assert!(!b.is_empty() && *b.last().unwrap() != 0);
    poly_trim(&mut a);
    let db = b.len() - 1;
    let lead_inv = mod_inv(*b.last().unwrap(), p);
    while a.len() > db {
        let c = *a.last().unwrap() * lead_inv % p;
        let shift = a.len() - 1 - db;
        for (i, &bc) in b.iter().enumerate() {
            a[shift + i] = (a[shift + i] + p - c * bc % p) % p;
        }
        poly_trim(&mut a);
    }
    a
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a != 0 mod p
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn is_irreducible(modulus: &[u64], p: u64) -> bool {
    let deg = modulus.len() - 1;
    if deg == 0 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        // candidates: t^d + (lower coefficients encoded by v)
        let count = p.pow(d as u32);
        for v in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut rest = v;
            for _ in 0..d {
                div.push(rest % p);
                rest /= p;
            }
            div.push(1);
            if poly_rem(modulus.to_vec(), &div, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The field GF(p^m) with a fixed irreducible modulus and the canonical
/// element enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldCtx {
    p: u64,
    m: u32,
    q: u64,
    /// Monic irreducible of degree m, low-to-high, length m+1.
    modulus: Vec<u64>,
    /// Coefficient vectors of t^(m+i) mod modulus for i in 0..m-1.
    reductions: Vec<Vec<u64>>,
}

impl FieldCtx {
    /// GF(p^m) with the lexicographically least monic irreducible modulus
    /// (coefficients compared from t^(m-1) down to the constant term).
    pub fn new(p: u64, m: u32) -> Result<Self, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        if m < 1 {
            return Err(GfError::BadModulus);
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(GfError::DegreeTooLarge)?;
        if m == 1 {
            // prime field; modulus is just t
            return Ok(Self::build(p, m, q, vec![0, 1]));
        }
        for v in 0..q {
            // digit order: t^(m-1) coefficient is most significant
            let mut coeffs = vec![0u64; m as usize + 1];
            coeffs[m as usize] = 1;
            let mut rest = v;
            for c in coeffs[..m as usize].iter_mut() {
                *c = rest % p;
                rest /= p;
            }
            if is_irreducible(&coeffs, p) {
                return Ok(Self::build(p, m, q, coeffs));
            }
        }
        unreachable!("an irreducible of every degree exists over GF(p)")
    }

    /// GF(p^m) with an explicit modulus (monic, degree m, irreducible).
    pub fn with_modulus(p: u64, m: u32, modulus: &[u64]) -> Result<Self, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        if m < 1 || modulus.len() != m as usize + 1 {
            return Err(GfError::BadModulus);
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(GfError::DegreeTooLarge)?;
        if modulus[m as usize] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(GfError::BadModulus);
        }
        if m > 1 && !is_irreducible(modulus, p) {
            return Err(GfError::NotIrreducible);
        }
        Ok(Self::build(p, m, q, modulus.to_vec()))
    }

    fn build(p: u64, m: u32, q: u64, modulus: Vec<u64>) -> Self {
        // t^m = -(modulus without its leading term)
        let mut reductions = Vec::with_capacity(m as usize);
        if m > 1 {
            let mut cur: Vec<u64> = modulus[..m as usize]
                .iter()
                .map(|&c| (p - c % p) % p)
                .collect();
            reductions.push(cur.clone());
            for _ in 1..m {
                // multiply by t, reduce the overflow term via t^m
                let overflow = cur[m as usize - 1];
                let mut next = vec![0u64; m as usize];
                next[1..].copy_from_slice(&cur[..m as usize - 1]);
                if overflow != 0 {
                    for j in 0..m as usize {
                        next[j] = (next[j] + overflow * reductions[0][j]) % p;
                    }
                }
                reductions.push(next.clone());
                cur = next;
            }
        }
        FieldCtx {
            p,
            m,
            q,
            modulus,
            reductions,
        }
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

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The element with the given enumeration index.
    pub fn elem(&self, index: u64) -> Result<FieldElem, GfError> {
        if index < self.q {
            Ok(FieldElem(index as u32))
        } else {
            Err(GfError::KOutOfRange)
        }
    }

    /// All q elements in canonical order: 0, 1, ...
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q as u32).map(FieldElem)
    }

    /// Coefficient vector of an element in the basis 1, t, ..., t^(m-1).
    pub fn coeffs(&self, e: FieldElem) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.m as usize);
        let mut rest = e.0 as u64;
        for _ in 0..self.m {
            out.push(rest % self.p);
            rest /= self.p;
        }
        out
    }

    pub fn elem_from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElem, GfError> {
        if coeffs.len() != self.m as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(GfError::BadModulus);
        }
        let mut index = 0u64;
        for &c in coeffs.iter().rev() {
            index = index * self.p + c;
        }
        Ok(FieldElem(index as u32))
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.m == 1 {
            return FieldElem(((a.0 as u64 + b.0 as u64) % self.p) as u32);
        }
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let sum: Vec<u64> = ca.iter().zip(&cb).map(|(&x, &y)| (x + y) % self.p).collect();
        self.elem_from_coeffs(&sum).unwrap()
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if self.m == 1 {
            return FieldElem(((self.p - a.0 as u64) % self.p) as u32);
        }
        let ca = self.coeffs(a);
        let neg: Vec<u64> = ca.iter().map(|&x| (self.p - x) % self.p).collect();
        self.elem_from_coeffs(&neg).unwrap()
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.m == 1 {
            return FieldElem((a.0 as u64 * b.0 as u64 % self.p) as u32);
        }
        if a.is_zero() || b.is_zero() {
            return FieldElem::ZERO;
        }
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let m = self.m as usize;
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let mut out = vec![0u64; m];
        out.copy_from_slice(&prod[..m]);
        for i in 0..m - 1 {
            let c = prod[m + i];
            if c != 0 {
                for (o, &red) in out.iter_mut().zip(&self.reductions[i]) {
                    *o = (*o + c * red) % self.p;
                }
            }
        }
        self.elem_from_coeffs(&out).unwrap()
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem, GfError> {
        if a.is_zero() {
            return Err(GfError::DivisionByZero);
        }
        if self.m == 1 {
            return Ok(FieldElem(mod_inv(a.0 as u64, self.p) as u32));
        }
        // a^(q-2)
        let mut acc = FieldElem::ONE;
        let mut base = a;
        let mut e = self.q - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Uniform element draw.
    pub fn random_elem(&self, rng: &mut dyn RngCore) -> FieldElem {
        let span = (1u64 << 32) / self.q * self.q;
        loop {
            let v = rng.next_u32() as u64;
            if v < span {
                return FieldElem((v % self.q) as u32);
            }
        }
    }

    // --- matrices ---

    /// Rank by Gaussian elimination with exact field arithmetic.
    pub fn mat_rank(&self, mat: &MatGF) -> usize {
        let (rows, cols) = (mat.n_rows(), mat.n_cols());
        let mut work = mat.entries.clone();
        let mut rank = 0usize;
        for col in 0..cols {
            let pivot = (rank..rows).find(|&i| !work[i * cols + col].is_zero());
            let Some(pivot) = pivot else { continue };
            if pivot != rank {
                for j in 0..cols {
                    work.swap(pivot * cols + j, rank * cols + j);
                }
            }
            let inv = self.inv(work[rank * cols + col]).unwrap();
            for i in (rank + 1)..rows {
                let factor = work[i * cols + col];
                if factor.is_zero() {
                    continue;
                }
                let scale = self.mul(factor, inv);
                for j in col..cols {
                    let delta = self.mul(scale, work[rank * cols + j]);
                    work[i * cols + j] = self.sub(work[i * cols + j], delta);
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    /// Sum of the first k diagonal entries; the empty sum (k = 0) is zero.
    pub fn k_trace(&self, mat: &MatGF, k: usize) -> Result<FieldElem, GfError> {
        if mat.n_rows() != mat.n_cols() {
            return Err(GfError::DimensionMismatch);
        }
        if k > mat.n_rows() {
            return Err(GfError::KOutOfRange);
        }
        let mut acc = FieldElem::ZERO;
        for i in 0..k {
            acc = self.add(acc, mat.get(i, i));
        }
        Ok(acc)
    }

    /// tr(A·B) without forming the product.
    pub fn product_trace(&self, a: &MatGF, b: &MatGF) -> Result<FieldElem, GfError> {
        if a.n_cols() != b.n_rows() || a.n_rows() != b.n_cols() {
            return Err(GfError::DimensionMismatch);
        }
        let mut acc = FieldElem::ZERO;
        for i in 0..a.n_rows() {
            for j in 0..a.n_cols() {
                acc = self.add(acc, self.mul(a.get(i, j), b.get(j, i)));
            }
        }
        Ok(acc)
    }

    pub fn mat_mul(&self, a: &MatGF, b: &MatGF) -> Result<MatGF, GfError> {
        if a.n_cols() != b.n_rows() {
            return Err(GfError::DimensionMismatch);
        }
        let mut out = MatGF::zero(a.n_rows(), b.n_cols());
        for i in 0..a.n_rows() {
            for j in 0..b.n_cols() {
                let mut acc = FieldElem::ZERO;
                for l in 0..a.n_cols() {
                    acc = self.add(acc, self.mul(a.get(i, l), b.get(l, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// The block matrix diag(I_k, 0): the canonical rank-k representative.
    pub fn canonical_b(&self, n: usize, k: usize) -> Result<MatGF, GfError> {
        if k > n {
            return Err(GfError::KOutOfRange);
        }
        let mut b = MatGF::zero(n, n);
        for i in 0..k {
            b.set(i, i, FieldElem::ONE);
        }
        Ok(b)
    }

    /// Uniform invertible matrix by rejection; acceptance probability is
    /// at least ∏_{i≥1}(1 − q^(−i)) > 0.288 for every q ≥ 2.
    pub fn random_invertible(&self, n: usize, rng: &mut dyn RngCore) -> Result<MatGF, GfError> {
        for _ in 0..RNG_DRAW_CAP {
            let mut m = MatGF::zero(n, n);
            for i in 0..n {
                for j in 0..n {
                    m.set(i, j, self.random_elem(rng));
                }
            }
            if self.mat_rank(&m) == n {
                return Ok(m);
            }
        }
        Err(GfError::RngExhausted)
    }

    /// A random rank-k matrix as g₁·B·g₂ for independent random
    /// invertibles; the orbit construction guarantees rank exactly k.
    pub fn random_rank_k(
        &self,
        n: usize,
        k: usize,
        rng: &mut dyn RngCore,
    ) -> Result<MatGF, GfError> {
        let b = self.canonical_b(n, k)?;
        let g1 = self.random_invertible(n, rng)?;
        let g2 = self.random_invertible(n, rng)?;
        self.mat_mul(&self.mat_mul(&g1, &b)?, &g2)
    }
}

/// Dense matrix over a field context. Entries are element indices; all
/// operations take the context explicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatGF {
    n_rows: usize,
    n_cols: usize,
    entries: Vec<FieldElem>,
}

impl MatGF {
    pub fn zero(n_rows: usize, n_cols: usize) -> Self {
        MatGF {
            n_rows,
            n_cols,
            entries: vec![FieldElem::ZERO; n_rows * n_cols],
        }
    }

    pub fn from_entries(n_rows: usize, n_cols: usize, entries: Vec<FieldElem>) -> Option<Self> {
        (entries.len() == n_rows * n_cols).then_some(MatGF {
            n_rows,
            n_cols,
            entries,
        })
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.entries[i * self.n_cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        self.entries[i * self.n_cols + j] = v;
    }

    pub fn entries(&self) -> &[FieldElem] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }
}
