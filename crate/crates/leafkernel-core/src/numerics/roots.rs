//! Bracketed root finding for monotone inversion.
//!
//! Bisection-safeguarded inverse-quadratic/secant stepping in the style of
//! Brent. The bracket is preserved at every step, so the iterate can never
//! leave `[a, b]` — which is what lets the function layer invert the
//! defining integral on `[0, 1]` without amplitude overshoot.

use crate::error::{Error, Result};
use crate::math;

/// Iteration cap; generous for a bracketed superlinear method.
pub const MAX_ROOT_ITERATIONS: u32 = 200;

/// Absolute slack when checking that the target lies within `[f(a), f(b)]`.
/// Endpoint targets produced by a different numerical route (for example
/// `π_n/2` against a fresh quadrature of the same integral) can miss the
/// bracket by a few ulps; anything beyond this slack is a genuine error.
const BRACKET_SLACK: f64 = 1e-9;

/// Solve `f(x) = target` for `f` continuous and strictly increasing on
/// `[a, b]`, to absolute abscissa tolerance `tol`.
///
/// `f` is fallible so that quadrature-backed callables can propagate their
/// own failures.
pub fn invert_increasing<F>(mut f: F, target: f64, a: f64, b: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    if a.is_nan() || b.is_nan() || a >= b {
        return Err(Error::InvalidSpec {
            what: "invert_increasing requires a < b",
        });
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidSpec {
            what: "invert_increasing requires tol > 0",
        });
    }
    let f_lo = f(a)?;
    let f_hi = f(b)?;
    if target < f_lo {
        return if f_lo - target <= BRACKET_SLACK {
            Ok(a)
        } else {
            Err(Error::Bracket { target, f_lo, f_hi })
        };
    }
    if target > f_hi {
        return if target - f_hi <= BRACKET_SLACK {
            Ok(b)
        } else {
            Err(Error::Bracket { target, f_lo, f_hi })
        };
    }

    // Brent on g(x) = f(x) - target, after the classic zbrent loop.
    let eps = f64::EPSILON;
    let (mut xa, mut xb) = (a, b);
    let mut xc = xb;
    let mut fa = f_lo - target;
    let mut fb = f_hi - target;
    if fa == 0.0 {
        return Ok(xa);
    }
    if fb == 0.0 {
        return Ok(xb);
    }
    let mut fc = fb;
    let mut d = 0.0f64;
    let mut e = 0.0f64;
    for _ in 0..MAX_ROOT_ITERATIONS {
        if (fb > 0.0 && fc > 0.0) || (fb < 0.0 && fc < 0.0) {
            xc = xa;
            fc = fa;
            d = xb - xa;
            e = d;
        }
        if math::abs(fc) < math::abs(fb) {
            xa = xb;
            xb = xc;
            xc = xa;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * eps * math::abs(xb) + 0.5 * tol;
        let xm = 0.5 * (xc - xb);
        if math::abs(xm) <= tol1 || fb == 0.0 {
            return Ok(xb);
        }
        if math::abs(e) >= tol1 && math::abs(fa) > math::abs(fb) {
            // inverse quadratic interpolation (secant when xa == xc)
            let s = fb / fa;
            let (mut p, mut q);
            if xa == xc {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (xb - xa) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = math::abs(p);
            let min1 = 3.0 * xm * q - math::abs(tol1 * q);
            let min2 = math::abs(e * q);
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        xa = xb;
        fa = fb;
        if math::abs(d) > tol1 {
            xb += d;
        } else if xm > 0.0 {
            xb += tol1;
        } else {
            xb -= tol1;
        }
        fb = f(xb)? - target;
    }
    Err(Error::RootConvergence {
        best: xb,
        residual: fb,
    })
}
