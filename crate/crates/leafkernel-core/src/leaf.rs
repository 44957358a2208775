//! Forward evaluation of `sleaf_n` and `cleaf_n` on all of ℝ, the inverse
//! `arcsleaf_n`, and derivative-sign branch classification.
//!
//! Strategy: reduce the argument into one period window, fold it onto the
//! principal quarter branch `[0, π_n/2]` with the odd symmetry and the
//! reflection `sleaf_n(π_n − l) = sleaf_n(l)`, and invert the defining
//! integral there with the bracketed root finder. No error accumulates over
//! long arguments because every evaluation goes through a single inversion.
//!
//! `cleaf_n` is reconstructed from `sleaf_n` through the coupling identity
//! `s² + c² + (n−1)·s²·c² = 1` (for n = 1 this is the circular identity, for
//! n = 2 the lemniscate one), the initial value `cleaf_n(0) = 1`, and sign
//! intervals pinned by the zero crossings at odd multiples of `π_n/2`.

use core::fmt;

use crate::error::{Error, Result};
use crate::math;
use crate::numerics::{invert_increasing, leaf_integral, period_constants, PeriodConstants, QuadratureSpec};

/// Precision envelope for period subtraction: beyond this magnitude a
/// single reduction step can no longer guarantee full double precision.
pub const ARG_ENVELOPE: f64 = 1e6;

/// Abscissa tolerance used when inverting the defining integral.
const INVERT_TOL: f64 = 1e-15;

/// The order `n ≥ 1` selecting the family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeafOrder(u32);

impl LeafOrder {
    /// `n = 1`: circular functions (`sin`/`cos`).
    pub const N1: LeafOrder = LeafOrder(1);
    /// `n = 2`: lemniscate functions (`sl`/`cl`).
    pub const N2: LeafOrder = LeafOrder(2);
    /// `n = 3`: the quintic Duffing pair.
    pub const N3: LeafOrder = LeafOrder(3);

    /// Build an order; `n = 0` is rejected.
    pub const fn new(n: u32) -> Option<LeafOrder> {
        if n >= 1 {
            Some(LeafOrder(n))
        } else {
            None
        }
    }

    pub const fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for LeafOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<u32> for LeafOrder {
    type Error = Error;
    fn try_from(n: u32) -> Result<LeafOrder> {
        LeafOrder::new(n).ok_or(Error::UnsupportedOrder { n })
    }
}

/// A derivative sign, exactly ±1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn as_f64(self) -> f64 {
        match self {
            Sign::Minus => -1.0,
            Sign::Plus => 1.0,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }
}

/// An argument together with its canonical reduction.
///
/// The residue lives in the half-open window `[−π_n/2, 3π_n/2)`, chosen so
/// that the two derivative-sign intervals of `sleaf_n` are exactly its two
/// halves. The original argument is reconstructed as
/// `l = ±(residue + 2·branch_m·π_n)` with the sign given by `negated`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LeafArg {
    /// The argument as given.
    pub l: f64,
    pub n: LeafOrder,
    /// Canonical representative in `[−π_n/2, 3π_n/2)` for `|l|`.
    pub residue: f64,
    /// Branch index: `|l| = residue + 2·branch_m·π_n`.
    pub branch_m: i64,
    /// Whether the odd symmetry `sleaf_n(−l) = −sleaf_n(l)` was applied.
    pub negated: bool,
}

/// A function value paired with its derivative.
///
/// Both `sleaf_n` and `cleaf_n` have unit energy, so `dr² + r^{2n} = 1`
/// holds along the whole real line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LeafValue {
    /// The function value, in `[−1, 1]`.
    pub r: f64,
    /// The derivative `dr/dl`.
    pub dr: f64,
    pub n: LeafOrder,
}

impl LeafValue {
    /// `dr² + r^{2n} − 1`; zero up to evaluation error.
    pub fn energy_residual(&self) -> f64 {
        self.dr * self.dr + math::powi(self.r, 2 * self.n.get()) - 1.0
    }
}

fn check_envelope(l: f64) -> Result<()> {
    if !l.is_finite() || math::abs(l) > ARG_ENVELOPE {
        return Err(Error::ArgumentEnvelope {
            l,
            limit: ARG_ENVELOPE,
        });
    }
    Ok(())
}

/// Reduce `l` to its canonical residue and branch index.
pub fn reduce_arg(n: LeafOrder, l: f64) -> Result<LeafArg> {
    check_envelope(l)?;
    let pc = period_constants(n)?;
    let negated = l < 0.0;
    let la = math::abs(l);
    let mut m = math::floor((la + pc.half_pi) / pc.period);
    let mut residue = la - m * pc.period;
    // guard against rounding at the window edges
    if residue < -pc.half_pi {
        residue += pc.period;
        m -= 1.0;
    } else if residue >= 3.0 * pc.half_pi {
        residue -= pc.period;
        m += 1.0;
    }
    Ok(LeafArg {
        l,
        n,
        residue,
        branch_m: m as i64,
        negated,
    })
}

/// Invert the defining integral on the principal quarter branch,
/// `lp ∈ [0, π_n/2]` mapping to `r ∈ [0, 1]`.
fn principal_value(n: LeafOrder, lp: f64) -> Result<f64> {
    if lp == 0.0 {
        return Ok(0.0);
    }
    let spec = QuadratureSpec::default();
    invert_increasing(|x| leaf_integral(n, x, &spec), lp, 0.0, 1.0, INVERT_TOL)
}

/// Value of `sleaf_n` at a canonical residue, via fold-down to the
/// principal quarter branch.
fn eval_reduced(pc: &PeriodConstants, residue: f64) -> Result<f64> {
    let (sign, lp) = if residue < 0.0 {
        (-1.0, -residue)
    } else if residue <= pc.half_pi {
        (1.0, residue)
    } else {
        // reflection about π_n/2 maps (π_n/2, 3π_n/2) into (−π_n/2, π_n/2)
        let reflected = pc.pi - residue;
        if reflected < 0.0 {
            (-1.0, -reflected)
        } else {
            (1.0, reflected)
        }
    };
    Ok(sign * principal_value(pc.n, lp)?)
}

fn derivative_from_value(n: LeafOrder, sign: Sign, r: f64) -> f64 {
    let rc = r.clamp(-1.0, 1.0);
    let mag = math::sqrt((1.0 - math::powi(rc, 2 * n.get())).max(0.0));
    if mag == 0.0 {
        0.0
    } else {
        sign.as_f64() * mag
    }
}

/// `sleaf_n(l)` with its derivative.
///
/// The odd, period-`2π_n` solution of `r'' = −n·r^{2n−1}` with `r(0) = 0`,
/// `r'(0) = 1`. Any order `n ≥ 1` is accepted; `n ∈ {1, 2, 3}` are the
/// verified ones.
pub fn sleaf(n: LeafOrder, l: f64) -> Result<LeafValue> {
    let arg = reduce_arg(n, l)?;
    let pc = period_constants(n)?;
    let mut r = eval_reduced(&pc, arg.residue)?;
    if arg.negated {
        r = -r;
    }
    let dr = derivative_from_value(n, sign_sleaf_prime(n, l)?, r);
    Ok(LeafValue { r, dr, n })
}

/// `cleaf_n(l)` with its derivative, for `n ∈ {1, 2, 3}`.
///
/// The even, period-`2π_n` solution of the same equation with `r(0) = 1`,
/// `r'(0) = 0`, reconstructed from `sleaf_n` through the coupling identity
/// `s² + c² + (n−1)·s²·c² = 1`: the magnitude is
/// `√((1 − s²)/(1 + (n−1)·s²))` and the sign is positive exactly when the
/// argument lies in `[−π_n/2, π_n/2)` modulo `2π_n` (the zero crossings sit
/// at odd multiples of `π_n/2`, where `s = ±1`).
pub fn cleaf(n: LeafOrder, l: f64) -> Result<LeafValue> {
    let coupling = match n.get() {
        1..=3 => (n.get() - 1) as f64,
        other => return Err(Error::UnsupportedOrder { n: other }),
    };
    let s = sleaf(n, l)?.r;
    let s2 = (s * s).min(1.0);
    let mag = math::sqrt(((1.0 - s2) / (1.0 + coupling * s2)).max(0.0));
    let pc = period_constants(n)?;
    let t = math::rem_euclid(l, pc.period);
    let positive = t < pc.half_pi || t >= 3.0 * pc.half_pi;
    let r = if positive { mag } else { -mag };
    let dr = derivative_from_value(n, sign_cleaf_prime(n, l)?, r);
    Ok(LeafValue { r, dr, n })
}

/// `arcsleaf_n(r) = ∫₀ʳ dt/√(1 − t^{2n})`, the principal inverse of
/// `sleaf_n`; odd in `r`, with values in `[−π_n/2, π_n/2]`.
pub fn arcsleaf(n: LeafOrder, r: f64) -> Result<f64> {
    if !r.is_finite() || math::abs(r) > 1.0 {
        return Err(Error::Domain {
            what: "arcsleaf amplitude r",
            value: r,
        });
    }
    let v = leaf_integral(n, math::abs(r), &QuadratureSpec::default())?;
    Ok(if r < 0.0 { -v } else { v })
}

/// Sign of `d/dl sleaf_n(l)`: `+1` on `[(2m−1/2)π_n, (2m+1/2)π_n)` and `−1`
/// on `[(2m+1/2)π_n, (2m+3/2)π_n)`, half-open on the left. At the interval
/// boundaries the derivative magnitude vanishes, so the tie-break is
/// cosmetic.
pub fn sign_sleaf_prime(n: LeafOrder, l: f64) -> Result<Sign> {
    check_envelope(l)?;
    let pc = period_constants(n)?;
    let t = math::rem_euclid(l + pc.half_pi, pc.period);
    Ok(if t < pc.pi { Sign::Plus } else { Sign::Minus })
}

/// Sign of `d/dl cleaf_n(l)`: `−1` on `[2kπ_n, (2k+1)π_n)` and `+1` on
/// `[(2k+1)π_n, (2k+2)π_n)`, half-open on the left.
pub fn sign_cleaf_prime(n: LeafOrder, l: f64) -> Result<Sign> {
    check_envelope(l)?;
    let pc = period_constants(n)?;
    let t = math::rem_euclid(l, pc.period);
    Ok(if t < pc.pi { Sign::Minus } else { Sign::Plus })
}
