//! Leaf functions `sleaf_n` and `cleaf_n`.
//!
//! The leaf function family generalizes the circular and lemniscate
//! functions: `sleaf_n` is the inverse of
//!
//! ```text
//! arcsleaf_n(r) = ∫₀ʳ dt / √(1 − t^{2n})
//! ```
//!
//! so `n = 1` gives `sin`, `n = 2` the lemniscate sine `sl`, and `n = 3` the
//! unit-amplitude solution of the quintic Duffing equation `r'' = −3 r⁵`.
//! `cleaf_n` is the companion even solution with `r(0) = 1`, `r'(0) = 0`.
//!
//! The crate provides:
//!
//! - [`numerics`]: tanh-sinh quadrature for the defining integral (the
//!   integrand has an integrable `(1 − t)^{−1/2}` endpoint singularity),
//!   bracketed root finding, and the period constants `π_n`;
//! - [`leaf`]: forward evaluation on all of ℝ by argument reduction plus
//!   principal-branch inversion, the inverse `arcsleaf_n`, and
//!   derivative-sign branch classification;
//! - [`identities`]: double-angle and addition formulas for `n = 1, 2, 3`
//!   with the sign-case selection they require;
//! - [`symbolic`]: exact rational-polynomial certificates for the algebraic
//!   identities behind the formula layer (radicals handled by the rewrite
//!   `dᵢ² → 1 − sᵢ⁶`);
//! - [`ode`]: an adaptive embedded Runge-Kutta integrator for the defining
//!   equation, used as an independent cross-check of the evaluation path.
//!
//! All evaluation is plain `f64`; tolerances are chosen so the accumulated
//! error on the principal branch stays below `1e-11`. Everything is pure and
//! safe for concurrent use; the only shared state is a write-once cache of
//! the period constants.
//!
//! The crate is `no_std`-compatible (`default-features = false`); it requires
//! `alloc`.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod error;
pub mod identities;
pub mod leaf;
pub mod numerics;
pub mod ode;
pub mod symbolic;

mod math;

pub use error::{Error, Result};
pub use leaf::{
    arcsleaf, cleaf, reduce_arg, sign_cleaf_prime, sign_sleaf_prime, sleaf, LeafArg, LeafOrder,
    LeafValue, Sign,
};
pub use numerics::{invert_increasing, leaf_integral, period_constants, PeriodConstants, QuadratureSpec};
