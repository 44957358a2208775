//! Independent-oracle cross-checks.
//!
//! The quadrature/inversion path is validated against routes that share no
//! code with it: the Beta-function value of the complete integral, the
//! arithmetic-geometric mean for the lemniscate constant, and adaptive
//! integration of the defining differential equation.

use leafkernel_core::ode::{integrate_leaf_ode, measure_period, peak_amplitude, OdeState};
use leafkernel_core::{cleaf, leaf_integral, period_constants, sleaf, LeafOrder, QuadratureSpec};

const N1: LeafOrder = LeafOrder::N1;
const N2: LeafOrder = LeafOrder::N2;
const N3: LeafOrder = LeafOrder::N3;

/// 35-digit mpmath references for π_n/2 = B(1/(2n), 1/2)/(2n).
const HALF_PI_REF: [(u32, f64); 3] = [
    (1, std::f64::consts::FRAC_PI_2),
    (2, 1.3110287771460599),
    (3, 1.2143253239437908),
];

#[test]
fn complete_integral_matches_beta_function() {
    // B(1/(2n), 1/2)/(2n), evaluated through a library gamma implementation
    // that shares nothing with the quadrature path.
    let spec = QuadratureSpec::default();
    for n in 1u32..=3 {
        let order = LeafOrder::new(n).unwrap();
        let quad = leaf_integral(order, 1.0, &spec).unwrap();
        let a = 1.0 / (2.0 * n as f64);
        let beta = statrs::function::beta::beta(a, 0.5) / (2.0 * n as f64);
        assert!(
            (quad - beta).abs() <= 1e-12,
            "n = {n}: quadrature {quad} vs beta {beta}"
        );
    }
}

#[test]
fn complete_integral_matches_frozen_references() {
    let spec = QuadratureSpec::default();
    for (n, reference) in HALF_PI_REF {
        let order = LeafOrder::new(n).unwrap();
        let quad = leaf_integral(order, 1.0, &spec).unwrap();
        assert!(
            (quad - reference).abs() < 1e-13,
            "n = {n}: {quad} vs {reference}"
        );
    }
}

#[test]
fn lemniscate_constant_matches_agm() {
    // π_2/2 = π / (2·agm(1, √2))
    let mut a: f64 = 1.0;
    let mut b: f64 = 2.0f64.sqrt();
    for _ in 0..8 {
        let (na, nb) = (0.5 * (a + b), (a * b).sqrt());
        a = na;
        b = nb;
    }
    let agm_value = std::f64::consts::PI / (2.0 * a);
    let quad = leaf_integral(N2, 1.0, &QuadratureSpec::default()).unwrap();
    assert!(
        (quad - agm_value).abs() < 1e-13,
        "quadrature {quad} vs agm {agm_value}"
    );
}

#[test]
fn ode_and_quadrature_periods_agree() {
    for n in [N1, N2, N3] {
        let quadrature = period_constants(n).unwrap().period;
        let measured = measure_period(n, 1e-12).unwrap();
        assert!(
            (quadrature - measured).abs() <= 1e-9,
            "n = {n}: quadrature {quadrature} vs ODE {measured}"
        );
    }
}

#[test]
fn inversion_matches_ode_trajectories_over_long_range() {
    // 200 samples of l in [0, 10] per function, for the n = 3 pair
    let span = 10.0;
    let samples = 200;
    let s_traj = integrate_leaf_ode(N3, OdeState { l: 0.0, r: 0.0, v: 1.0 }, span, 1e-12).unwrap();
    let c_traj = integrate_leaf_ode(N3, OdeState { l: 0.0, r: 1.0, v: 0.0 }, span, 1e-12).unwrap();
    let mut worst_s = 0.0f64;
    let mut worst_c = 0.0f64;
    for k in 0..=samples {
        let l = span * k as f64 / samples as f64;
        let s = sleaf(N3, l).unwrap();
        let ode_s = s_traj.sample(l).unwrap();
        worst_s = worst_s.max((s.r - ode_s.r).abs());
        let c = cleaf(N3, l).unwrap();
        let ode_c = c_traj.sample(l).unwrap();
        worst_c = worst_c.max((c.r - ode_c.r).abs());
    }
    assert!(worst_s <= 1e-8, "worst sleaf deviation {worst_s}");
    assert!(worst_c <= 1e-8, "worst cleaf deviation {worst_c}");
}

#[test]
fn inversion_matches_ode_for_low_orders() {
    // In particular this validates the n = 2 companion reconstruction
    // (the lemniscate coupling identity) against the defining equation.
    for n in [N1, N2] {
        let s_traj =
            integrate_leaf_ode(n, OdeState { l: 0.0, r: 0.0, v: 1.0 }, 10.0, 1e-12).unwrap();
        let c_traj =
            integrate_leaf_ode(n, OdeState { l: 0.0, r: 1.0, v: 0.0 }, 10.0, 1e-12).unwrap();
        for k in 0..=50 {
            let l = 10.0 * k as f64 / 50.0;
            let s = sleaf(n, l).unwrap().r;
            let ode = s_traj.sample(l).unwrap().r;
            assert!((s - ode).abs() <= 1e-8, "n = {n}, l = {l}: {s} vs {ode}");
            let c = cleaf(n, l).unwrap().r;
            let ode = c_traj.sample(l).unwrap().r;
            assert!((c - ode).abs() <= 1e-8, "n = {n}, l = {l}: {c} vs {ode}");
        }
    }
}

#[test]
fn energy_drift_stays_small_over_long_integration() {
    let traj = integrate_leaf_ode(N3, OdeState { l: 0.0, r: 0.0, v: 1.0 }, 100.0, 1e-12).unwrap();
    let mut worst = 0.0f64;
    for s in traj.nodes() {
        worst = worst.max((s.energy(N3) - 1.0).abs());
    }
    assert!(worst <= 1e-9, "drift {worst}");
}

#[test]
fn unit_amplitude_on_both_starts() {
    for n in [N1, N2, N3] {
        for init in [
            OdeState { l: 0.0, r: 0.0, v: 1.0 },
            OdeState { l: 0.0, r: 1.0, v: 0.0 },
        ] {
            let peak = peak_amplitude(n, init, 1e-12).unwrap();
            assert!((peak - 1.0).abs() <= 1e-9, "n = {n}: peak {peak}");
        }
    }
}
