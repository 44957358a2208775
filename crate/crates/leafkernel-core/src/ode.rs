//! Adaptive integration of the defining equation `r'' = −n·r^{2n−1}`.
//!
//! This is the independent verification path: it never touches the
//! quadrature/inversion machinery, so agreement between the two is a real
//! cross-check. The integrator is an explicit embedded 5(4) pair
//! (Dormand-Prince coefficients) with PI step-size control and a
//! fourth-order continuous extension, which is what period detection uses
//! to refine events.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::leaf::LeafOrder;
use crate::math;
use crate::numerics::{invert_increasing, period_constants};

/// One point of a trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeState {
    pub l: f64,
    pub r: f64,
    /// `dr/dl`.
    pub v: f64,
}

impl OdeState {
    /// `v² + r^{2n}`; conserved along a trajectory (equal to 1 for the
    /// unit-amplitude initial conditions).
    pub fn energy(&self, n: LeafOrder) -> f64 {
        self.v * self.v + math::powi(self.r, 2 * n.get())
    }
}

/// Continuous extension of one accepted step.
#[derive(Debug, Clone, Copy)]
struct DenseStep {
    l0: f64,
    h: f64,
    /// Interpolation coefficients per component (`[r, v]`).
    cont: [[f64; 2]; 5],
}

impl DenseStep {
    fn eval(&self, l: f64) -> [f64; 2] {
        let theta = (l - self.l0) / self.h;
        let theta1 = 1.0 - theta;
        let mut out = [0.0; 2];
        for (i, slot) in out.iter_mut().enumerate() {
            let c = &self.cont;
            *slot = c[0][i]
                + theta
                    * (c[1][i] + theta1 * (c[2][i] + theta * (c[3][i] + theta1 * c[4][i])));
        }
        out
    }
}

/// A dense-output trajectory over `[start.l, end.l]`.
#[derive(Debug, Clone)]
pub struct Trajectory {
    n: LeafOrder,
    start: OdeState,
    end: OdeState,
    steps: Vec<DenseStep>,
}

impl Trajectory {
    pub fn order(&self) -> LeafOrder {
        self.n
    }

    pub fn start(&self) -> OdeState {
        self.start
    }

    pub fn end(&self) -> OdeState {
        self.end
    }

    /// Interpolate the state at `l`; `None` outside the integrated span.
    pub fn sample(&self, l: f64) -> Option<OdeState> {
        if !(self.start.l..=self.end.l).contains(&l) {
            return None;
        }
        if self.steps.is_empty() {
            return Some(self.start);
        }
        // last step whose left end is <= l
        let idx = self
            .steps
            .partition_point(|s| s.l0 <= l)
            .saturating_sub(1);
        let [r, v] = self.steps[idx].eval(l);
        Some(OdeState { l, r, v })
    }

    /// The accepted step endpoints, including both ends of the span.
    pub fn nodes(&self) -> Vec<OdeState> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(self.start);
        for step in &self.steps {
            let l = step.l0 + step.h;
            let [r, v] = step.eval(l);
            out.push(OdeState { l, r, v });
        }
        if let Some(last) = out.last_mut() {
            // the final node is the integrator state itself, not interpolated
            *last = self.end;
        }
        out
    }
}

// Dormand-Prince 5(4) tableau.
const A21: f64 = 0.2;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;
const C2: f64 = 0.2;
const C3: f64 = 0.3;
const C4: f64 = 0.8;
const C5: f64 = 8.0 / 9.0;
// embedded error coefficients (5th minus 4th order weights)
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;
// dense-output coefficients
const D1: f64 = -12715105075.0 / 11282082432.0;
const D3: f64 = 87487479700.0 / 32700410799.0;
const D4: f64 = -10690763975.0 / 1880347072.0;
const D5: f64 = 701980252875.0 / 199316789632.0;
const D6: f64 = -1453857185.0 / 822651844.0;
const D7: f64 = 69997945.0 / 29380423.0;

const MAX_STEPS: u64 = 5_000_000;

fn axpy2(y: [f64; 2], h: f64, terms: &[(f64, [f64; 2])]) -> [f64; 2] {
    let mut out = y;
    for &(c, k) in terms {
        out[0] += h * c * k[0];
        out[1] += h * c * k[1];
    }
    out
}

/// Integrate the order-`n` equation from `init` forward to `l_end` with
/// mixed absolute/relative local error control at `tol`.
///
/// `tol` must lie in `[1e-13, 1e-6]`. The system is smooth and bounded, so
/// a step-size collapse is reported as an error rather than worked around.
pub fn integrate_leaf_ode(
    n: LeafOrder,
    init: OdeState,
    l_end: f64,
    tol: f64,
) -> Result<Trajectory> {
    if !(1e-13..=1e-6).contains(&tol) {
        return Err(Error::InvalidSpec {
            what: "ODE tolerance must lie in [1e-13, 1e-6]",
        });
    }
    if !init.r.is_finite() || !init.v.is_finite() || !init.l.is_finite() || !l_end.is_finite() {
        return Err(Error::InvalidSpec {
            what: "ODE initial state and endpoint must be finite",
        });
    }
    if l_end < init.l {
        return Err(Error::InvalidSpec {
            what: "ODE integration runs forward: l_end must be >= the initial l",
        });
    }

    let power = 2 * n.get() - 1;
    let nf = n.get() as f64;
    let rhs = move |y: [f64; 2]| -> [f64; 2] { [y[1], -nf * math::powi(y[0], power)] };

    let mut traj = Trajectory {
        n,
        start: init,
        end: init,
        steps: Vec::new(),
    };
    if l_end == init.l {
        return Ok(traj);
    }

    let mut l = init.l;
    let mut y = [init.r, init.v];
    let mut k1 = rhs(y);

    // initial step size: the usual two-probe heuristic
    let scale = |yi: f64| tol + tol * math::abs(yi);
    let mut h = {
        let sq = |v: f64| v * v;
        let d0 = math::sqrt((sq(y[0] / scale(y[0])) + sq(y[1] / scale(y[1]))) / 2.0);
        let d1 = math::sqrt((sq(k1[0] / scale(y[0])) + sq(k1[1] / scale(y[1]))) / 2.0);
        let h0 = if d0 < 1e-5 || d1 < 1e-5 {
            1e-6
        } else {
            0.01 * d0 / d1
        };
        let h0 = h0.min(l_end - l);
        let y1 = [y[0] + h0 * k1[0], y[1] + h0 * k1[1]];
        let f1 = rhs(y1);
        let d2 = math::sqrt(
            (sq((f1[0] - k1[0]) / scale(y[0])) + sq((f1[1] - k1[1]) / scale(y[1])))
                / 2.0,
        ) / h0;
        let der = d1.max(d2);
        let h1 = if der <= 1e-15 {
            (h0 * 1e-3).max(1e-6)
        } else {
            math::powf(0.01 / der, 0.2)
        };
        h1.min(100.0 * h0).min(l_end - l)
    };

    // PI controller constants (classic choices for a 5th-order pair)
    const SAFETY: f64 = 0.9;
    const BETA: f64 = 0.04;
    const EXPO1: f64 = 0.2 - BETA * 0.75;
    const FAC_MIN: f64 = 0.2; // strongest shrink per step
    const FAC_MAX: f64 = 10.0; // strongest growth per step
    let mut facold: f64 = 1e-4;
    let mut rejected = false;
    let mut steps: u64 = 0;

    while l < l_end {
        steps += 1;
        if steps > MAX_STEPS {
            return Err(Error::StepUnderflow { l, step: h });
        }
        if h < 1e-14 * (1.0 + math::abs(l)) {
            return Err(Error::StepUnderflow { l, step: h });
        }
        let mut last = false;
        if l + h >= l_end {
            h = l_end - l;
            last = true;
        }

        let k2 = rhs(axpy2(y, h, &[(A21, k1)]));
        let k3 = rhs(axpy2(y, h, &[(A31, k1), (A32, k2)]));
        let k4 = rhs(axpy2(y, h, &[(A41, k1), (A42, k2), (A43, k3)]));
        let k5 = rhs(axpy2(y, h, &[(A51, k1), (A52, k2), (A53, k3), (A54, k4)]));
        let k6 = rhs(axpy2(
            y,
            h,
            &[(A61, k1), (A62, k2), (A63, k3), (A64, k4), (A65, k5)],
        ));
        let y_new = axpy2(
            y,
            h,
            &[(A71, k1), (A73, k3), (A74, k4), (A75, k5), (A76, k6)],
        );
        let k7 = rhs(y_new);
        let _ = (C2, C3, C4, C5); // autonomous right-hand side

        let mut err_sq = 0.0;
        for i in 0..2 {
            let e = h
                * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
            let sk = tol + tol * math::abs(y[i]).max(math::abs(y_new[i]));
            err_sq += (e / sk) * (e / sk);
        }
        let err = math::sqrt(err_sq / 2.0);

        let fac11 = math::powf(err.max(1e-30), EXPO1);
        if err <= 1.0 {
            // accept
            let ydiff = [y_new[0] - y[0], y_new[1] - y[1]];
            let bspl = [h * k1[0] - ydiff[0], h * k1[1] - ydiff[1]];
            let mut cont = [[0.0; 2]; 5];
            for i in 0..2 {
                cont[0][i] = y[i];
                cont[1][i] = ydiff[i];
                cont[2][i] = bspl[i];
                cont[3][i] = ydiff[i] - h * k7[i] - bspl[i];
                cont[4][i] = h
                    * (D1 * k1[i]
                        + D3 * k3[i]
                        + D4 * k4[i]
                        + D5 * k5[i]
                        + D6 * k6[i]
                        + D7 * k7[i]);
            }
            traj.steps.push(DenseStep { l0: l, h, cont });

            l += h;
            y = y_new;
            k1 = k7; // first-same-as-last
            let fac = (fac11 / math::powf(facold, BETA) / SAFETY)
                .clamp(1.0 / FAC_MAX, 1.0 / FAC_MIN);
            let mut h_new = h / fac;
            if rejected {
                h_new = h_new.min(h);
            }
            facold = err.max(1e-4);
            rejected = false;
            if !last {
                h = h_new;
            }
        } else {
            rejected = true;
            h /= (fac11 / SAFETY).min(1.0 / FAC_MIN);
        }
    }

    traj.end = OdeState {
        l,
        r: y[0],
        v: y[1],
    };
    Ok(traj)
}

/// Refine a zero of `v` inside `[a.l, b.l]` using the dense output.
fn refine_v_zero(traj: &Trajectory, a: OdeState, b: OdeState) -> Result<f64> {
    if b.v == 0.0 {
        return Ok(b.l);
    }
    // orient so the probed function is increasing
    let flip = a.v > 0.0;
    let probe = |l: f64| -> Result<f64> {
        let s = traj.sample(l).ok_or(Error::Domain {
            what: "dense sample abscissa",
            value: l,
        })?;
        Ok(if flip { -s.v } else { s.v })
    };
    invert_increasing(probe, 0.0, a.l, b.l, 1e-13)
}

/// Period of the order-`n` oscillation, measured as the first return of
/// `(r, v)` to the initial state `(1, 0)`: the first zero of `v` with
/// `r > 0` after leaving the start. Fails if no return shows up within
/// three times the expected period.
pub fn measure_period(n: LeafOrder, tol: f64) -> Result<f64> {
    let expected = period_constants(n)?.period;
    let horizon = 3.0 * expected;
    let traj = integrate_leaf_ode(n, OdeState { l: 0.0, r: 1.0, v: 0.0 }, horizon, tol)?;
    let nodes = traj.nodes();
    for pair in nodes.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if a.v == 0.0 {
            continue; // the start itself
        }
        let crosses = (a.v < 0.0 && b.v >= 0.0) || (a.v > 0.0 && b.v <= 0.0);
        if crosses && b.r > 0.5 {
            return refine_v_zero(&traj, a, b);
        }
    }
    Err(Error::PeriodDetection { searched: horizon })
}

/// Largest |r| attained from the given initial state over 1.5 expected
/// periods, with the extrema located by refining the zeros of `v`.
pub fn peak_amplitude(n: LeafOrder, init: OdeState, tol: f64) -> Result<f64> {
    let expected = period_constants(n)?.period;
    let traj = integrate_leaf_ode(n, init, init.l + 1.5 * expected, tol)?;
    let mut peak = math::abs(init.r).max(math::abs(traj.end().r));
    let nodes = traj.nodes();
    for pair in nodes.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if a.v == 0.0 {
            continue;
        }
        let crosses = (a.v < 0.0 && b.v >= 0.0) || (a.v > 0.0 && b.v <= 0.0);
        if crosses {
            let l_star = refine_v_zero(&traj, a, b)?;
            if let Some(s) = traj.sample(l_star) {
                peak = peak.max(math::abs(s.r));
            }
        }
    }
    Ok(peak)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{FRAC_PI_2, PI};

    const N1: LeafOrder = LeafOrder::N1;
    const N2: LeafOrder = LeafOrder::N2;
    const N3: LeafOrder = LeafOrder::N3;

    fn sleaf_start() -> OdeState {
        OdeState { l: 0.0, r: 0.0, v: 1.0 }
    }

    fn cleaf_start() -> OdeState {
        OdeState { l: 0.0, r: 1.0, v: 0.0 }
    }

    #[test]
    fn sine_quarter_period() {
        let traj = integrate_leaf_ode(N1, sleaf_start(), FRAC_PI_2, 1e-12).unwrap();
        assert!((traj.end().r - 1.0).abs() < 1e-10);
        assert!(traj.end().v.abs() < 1e-10);
    }

    #[test]
    fn sine_against_closed_form() {
        let traj = integrate_leaf_ode(N1, sleaf_start(), 9.0, 1e-12).unwrap();
        for k in 0..=90 {
            let l = 0.1 * k as f64;
            let s = traj.sample(l).unwrap();
            assert!((s.r - l.sin()).abs() < 1e-9, "l = {l}: {} vs {}", s.r, l.sin());
            assert!((s.v - l.cos()).abs() < 1e-9, "l = {l}");
        }
    }

    #[test]
    fn quintic_reference_values() {
        // 35-digit references for the two unit-amplitude trajectories
        let traj = integrate_leaf_ode(N3, sleaf_start(), 0.5, 1e-12).unwrap();
        assert!((traj.end().r - 0.499442801255089).abs() < 1e-10);
        let traj = integrate_leaf_ode(N3, cleaf_start(), 0.5, 1e-12).unwrap();
        assert!((traj.end().r - 0.7076320155571715).abs() < 1e-10);
        // six-decimal tabulated values
        assert!((traj.end().r - 0.707632).abs() < 2e-5);
    }

    #[test]
    fn energy_is_conserved() {
        let traj = integrate_leaf_ode(N3, sleaf_start(), 100.0, 1e-12).unwrap();
        let mut worst = 0.0f64;
        for s in traj.nodes() {
            worst = worst.max((s.energy(N3) - 1.0).abs());
        }
        assert!(worst < 1e-9, "energy drift {worst}");
    }

    #[test]
    fn measured_periods_match_quadrature() {
        let p1 = measure_period(N1, 1e-12).unwrap();
        assert!((p1 - 2.0 * PI).abs() < 1e-9, "got {p1}");
        let p2 = measure_period(N2, 1e-12).unwrap();
        assert!((p2 - 5.244115108584239).abs() < 1e-9, "got {p2}");
        let p3 = measure_period(N3, 1e-12).unwrap();
        assert!((p3 - 4.857301295775163).abs() < 1e-9, "got {p3}");
    }

    #[test]
    fn unit_amplitude() {
        for n in [N1, N2, N3] {
            let a = peak_amplitude(n, sleaf_start(), 1e-12).unwrap();
            assert!((a - 1.0).abs() < 1e-9, "n = {n}: {a}");
            let a = peak_amplitude(n, cleaf_start(), 1e-12).unwrap();
            assert!((a - 1.0).abs() < 1e-9, "n = {n}: {a}");
        }
    }

    #[test]
    fn dense_output_is_continuous_across_steps() {
        let traj = integrate_leaf_ode(N3, sleaf_start(), 5.0, 1e-10).unwrap();
        for s in traj.nodes().windows(2) {
            let mid = 0.5 * (s[0].l + s[1].l);
            let m = traj.sample(mid).unwrap();
            assert!(m.r.abs() <= 1.0 + 1e-9);
            // energy holds at interpolated points to interpolation accuracy
            assert!((m.energy(N3) - 1.0).abs() < 1e-8, "at l = {mid}");
        }
        assert!(traj.sample(-0.1).is_none());
        assert!(traj.sample(5.1).is_none());
    }

    #[test]
    fn rejects_bad_tolerance_and_direction() {
        assert!(matches!(
            integrate_leaf_ode(N3, sleaf_start(), 1.0, 1e-3),
            Err(Error::InvalidSpec { .. })
        ));
        assert!(matches!(
            integrate_leaf_ode(N3, sleaf_start(), -1.0, 1e-10),
            Err(Error::InvalidSpec { .. })
        ));
    }
}
