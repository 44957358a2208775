//! Low-level kernels: endpoint-singular quadrature for the defining
//! integral, the period constants `π_n`, and bracketed root finding for
//! function inversion.
//!
//! Everything here is pure; the one piece of shared state is the write-once
//! period-constant cache, which is safe under concurrent first use.

mod constants;
mod quadrature;
mod roots;

pub use constants::{period_constants, PeriodConstants};
pub use quadrature::{leaf_integral, QuadratureSpec};
pub use roots::{invert_increasing, MAX_ROOT_ITERATIONS};
