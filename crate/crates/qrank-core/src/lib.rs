//! Exact counting of n×n matrices over GF(q) stratified by rank and k-trace.
//!
//! The library has two independent routes to every count:
//!
//! * closed forms and recurrences built from q-analogs ([`qanalogs`],
//!   [`counts`], [`polyring`]), valid for any integer q ≥ 2;
//! * an exhaustive enumeration oracle over a concrete finite field
//!   ([`gfq`], [`oracle`]), feasible up to q^(n²) ≤ 2^28 matrices.
//!
//! All arithmetic is exact; counts are arbitrary-precision integers and
//! every "guaranteed divisible" step asserts a zero remainder.
//!
//! The crate is `no_std` (with `alloc`); the `std` feature adds the
//! thread-parallel enumeration entry point.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod counts;
pub mod gfq;
pub mod oracle;
pub mod polyring;
pub mod qanalogs;

pub use num_bigint::{BigInt, BigUint};
