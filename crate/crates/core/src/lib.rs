//! Exact arithmetic for rational function fields over finite fields.
//!
//! The crate provides four layers that build on each other:
//!
//! * [`gf`] — finite fields `F_{p^k}` with explicit moduli, extension
//!   towers, and multiplicative orders;
//! * [`poly`] / [`bivar`] / [`ratfunc`] — univariate polynomials over a
//!   finite field (with factorization), polynomials in `x` with
//!   coefficients in `A = F_q[t]`, and the fraction field `F_q(t)`;
//! * [`carlitz`] / [`splitting`] — the twisted polynomial ring
//!   `F_q(t)<τ>`, the Carlitz module `a ↦ C_a`, cyclotomic function
//!   fields `Q_a` with explicit Galois tables, Kummer witnesses, and
//!   splitting data `(e, f, g)` of primes in these extensions;
//! * [`ultra`] — a truncated-filter model of ultraproducts: hyperinteger
//!   sequences, ultra-field and ultra-polynomial families, and transfer
//!   audits that check componentwise statements against their diagonal
//!   counterparts on a finite tail.
//!
//! Everything is exact; there is no floating point anywhere. The crate is
//! `no_std` (with `alloc`); IO, file formats, and the command-line surface
//! live in the companion `carlitz-cli` crate.
#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod bivar;
pub mod carlitz;
pub mod error;
pub mod gf;
pub mod poly;
pub mod ratfunc;
pub mod splitting;
pub mod textparse;
pub mod ultra;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
