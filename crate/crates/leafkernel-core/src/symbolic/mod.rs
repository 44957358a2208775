//! Exact certificates for the algebraic identities behind the formula layer.
//!
//! Identities that mix function values with their derivative radicals become
//! ordinary polynomial statements once `d_i = √(1 − s_i⁶)` is treated as a
//! generator subject to the rewrite `d_i² → 1 − s_i⁶`; odd powers of `d_i`
//! survive and even powers get rewritten away, so equality of canonical
//! forms is a proof with zero numeric error. Square roots that carry a `±`
//! are only certified in squared form; the sign selection is a domain fact
//! resolved by the numeric layer's branch classification, not a polynomial
//! one.

mod poly;
mod proofs;

pub use poly::{Generator, RationalFn, RationalPoly, GENERATORS};
pub use proofs::{
    build_p, report_text, verify_all, verify_double_angle_identity, verify_numerator_first_term,
    verify_numerator_identity, verify_pythagorean_double, ProofReport,
};
