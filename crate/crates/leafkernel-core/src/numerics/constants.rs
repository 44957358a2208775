//! The leaf analogues of π.
//!
//! `π_n/2 = ∫₀¹ dt/√(1 − t^{2n})` is the quarter period of `sleaf_n`; the
//! function period is `2·π_n`. The constants for small orders are computed
//! once by quadrature and memoized in a write-once slot, so repeated calls
//! return bit-identical values even under concurrent first use.

use core::sync::atomic::{AtomicU64, Ordering};

use crate::error::Result;
use crate::leaf::LeafOrder;
use crate::numerics::{leaf_integral, QuadratureSpec};

/// The constants attached to one leaf order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodConstants {
    pub n: LeafOrder,
    /// `π_n / 2`, the complete integral; also the quarter period.
    pub half_pi: f64,
    /// `π_n`.
    pub pi: f64,
    /// The function period `2·π_n`.
    pub period: f64,
}

impl PeriodConstants {
    fn from_half_pi(n: LeafOrder, half_pi: f64) -> Self {
        PeriodConstants {
            n,
            half_pi,
            pi: 2.0 * half_pi,
            period: 4.0 * half_pi,
        }
    }
}

const CACHE_SLOTS: usize = 8;

// Bit patterns of half_pi for n = 1..=CACHE_SLOTS; 0 means "not yet
// computed" (half_pi is never 0). The first completed computation wins the
// slot; losers of the race adopt the stored value, so every caller observes
// the same bits.
static HALF_PI_BITS: [AtomicU64; CACHE_SLOTS] = [const { AtomicU64::new(0) }; CACHE_SLOTS];

/// Period constants for order `n`.
///
/// Orders 1, 2, 3 are the verified ones (sin, lemniscate, and the quintic
/// Duffing case); larger orders run through the same quadrature but carry no
/// accuracy guarantee. Small orders are cached after the first computation.
pub fn period_constants(n: LeafOrder) -> Result<PeriodConstants> {
    let slot = (n.get() as usize).wrapping_sub(1);
    if slot < CACHE_SLOTS {
        let bits = HALF_PI_BITS[slot].load(Ordering::Acquire);
        if bits != 0 {
            return Ok(PeriodConstants::from_half_pi(n, f64::from_bits(bits)));
        }
    }
    let half_pi = leaf_integral(n, 1.0, &QuadratureSpec::default())?;
    if slot < CACHE_SLOTS {
        let _ = HALF_PI_BITS[slot].compare_exchange(
            0,
            half_pi.to_bits(),
            Ordering::AcqRel,
            Ordering::Acquire,
        );
        let winner = HALF_PI_BITS[slot].load(Ordering::Acquire);
        return Ok(PeriodConstants::from_half_pi(n, f64::from_bits(winner)));
    }
    Ok(PeriodConstants::from_half_pi(n, half_pi))
}
