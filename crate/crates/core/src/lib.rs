//! Volumes of the coefficient regions of contractive real polynomials.
//!
//! A monic real polynomial `x^d + a_1 x^{d-1} + ... + a_d` is *contractive* when all of
//! its roots lie in the open unit disk. The set of such coefficient vectors splits by the
//! number `s` of complex-conjugate root pairs. This crate computes, over exact rationals,
//! the total volume `v_d`, the totally-real volume `v_d^(0)`, the one-pair volume
//! `v_d^(1)` and the integer ratio `r_d = v_d^(1) / v_d^(0) = (P_d(3) - 2d - 1) / 4`
//! along four independent routes, and estimates `v_d^(s)` for any `s` by seeded
//! Monte-Carlo sampling with exact membership tests.
//!
//! * [`exact`] holds all rational pipelines, the identity oracles, power series and
//!   asymptotics.
//! * [`region`] holds the Schur–Cohn membership test, Sturm-sequence root classification
//!   and the volume sampler.

pub mod error;
pub mod exact;
pub mod region;

pub use error::{Error, Result};
pub use exact::rational::ExactRational;
pub use num_bigint::BigInt;
