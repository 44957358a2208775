//! The verification checks behind `leafkernel verify`.
//!
//! Each check evaluates one invariant of the library on a deterministic
//! sample set and reports its worst residual against a pinned tolerance.
//! The same functions back the acceptance test suite, so the CLI and the
//! tests can never drift apart.

use leafkernel_core::identities::{
    cleaf3_add_squared, cleaf3_double, sl_add, sleaf3_add, sleaf3_add_abs, sleaf3_add_squared,
    sleaf3_double,
};
use leafkernel_core::ode::{integrate_leaf_ode, measure_period, peak_amplitude, OdeState};
use leafkernel_core::symbolic::verify_all;
use leafkernel_core::{cleaf, leaf_integral, period_constants, sleaf, LeafOrder, QuadratureSpec, Result};

const N1: LeafOrder = LeafOrder::N1;
const N2: LeafOrder = LeafOrder::N2;
const N3: LeafOrder = LeafOrder::N3;

/// Six-decimal reference values for `sleaf₃` and `cleaf₃` on the default
/// table grid `l = 0.0, 0.1, …, 4.1`.
pub const REFERENCE_TABLE: [(f64, f64, f64); 42] = [
    (0.0, 0.000000, 1.000000),
    (0.1, 0.100000, 0.985184),
    (0.2, 0.199999, 0.942810),
    (0.3, 0.299984, 0.878184),
    (0.4, 0.399883, 0.797825),
    (0.5, 0.499443, 0.707632),
    (0.6, 0.598009, 0.611979),
    (0.7, 0.694183, 0.513647),
    (0.8, 0.785387, 0.414176),
    (0.9, 0.867486, 0.314304),
    (1.0, 0.934768, 0.214324),
    (1.1, 0.980708, 0.114325),
    (1.2, 0.999692, 0.014325),
    (1.3, 0.989090, -0.085670),
    (1.4, 0.950393, -0.185670),
    (1.5, 0.888560, -0.285660),
    (1.6, 0.810064, -0.385580),
    (1.7, 0.720972, -0.485220),
    (1.8, 0.625896, -0.583990),
    (1.9, 0.527828, -0.680640),
    (2.0, 0.428461, -0.772770),
    (2.1, 0.328621, -0.856490),
    (2.2, 0.228649, -0.926290),
    (2.3, 0.128651, -0.975670),
    (2.4, 0.028651, -0.998770),
    (2.5, -0.071350, -0.992410),
    (2.6, -0.171350, -0.957500),
    (2.7, -0.271340, -0.898590),
    (2.8, -0.371280, -0.822090),
    (2.9, -0.470980, -0.734190),
    (3.0, -0.569930, -0.639750),
    (3.1, -0.667000, -0.541980),
    (3.2, -0.759970, -0.442740),
    (3.3, -0.845200, -0.342940),
    (3.4, -0.917390, -0.242970),
    (3.5, -0.970090, -0.142980),
    (3.6, -0.997240, -0.042980),
    (3.7, -0.995140, 0.057024),
    (3.8, -0.964110, 0.157024),
    (3.9, -0.908270, 0.257019),
    (4.0, -0.833880, 0.356971),
    (4.1, -0.747280, 0.456727),
];

/// Tolerance for comparisons against the six-decimal reference table.
pub const TABLE_TOL: f64 = 2e-5;

/// One verification check: its worst residual against a pinned tolerance.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    /// Human-readable summary (already includes residual and tolerance).
    pub detail: String,
    pub residual: f64,
    pub tol: f64,
    pub passed: bool,
}

impl CheckOutcome {
    fn residual_check(name: &'static str, what: &str, residual: f64, tol: f64) -> Self {
        CheckOutcome {
            name,
            detail: format!("{what}max residual {residual:.3e} (tol {tol:.1e})"),
            residual,
            tol,
            passed: residual <= tol,
        }
    }

    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        format!("{status} {}: {}", self.name, self.detail)
    }
}

/// Deterministic sample grid that stays clear of the branch boundaries:
/// `count` points spanning `[lo, hi)` with a 0.37-of-a-step interior
/// offset, which keeps every point a fixed fraction of a step away from
/// any rational multiple of the span.
fn offset_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let step = (hi - lo) / count as f64;
    (0..count).map(|k| lo + (k as f64 + 0.37) * step).collect()
}

/// The worked addition example: both the squared and the signed value.
pub fn worked_example_checks() -> Result<Vec<CheckOutcome>> {
    let squared = sleaf3_add_squared(0.2, 0.3)?;
    let signed = sleaf3_add(0.2, 0.3)?;
    let sq_resid = (squared - 0.2494431).abs();
    let sg_resid = (signed - 0.49944).abs();
    Ok(vec![
        CheckOutcome {
            name: "worked-example-addition-squared",
            detail: format!(
                "sleaf3_add_squared(0.2,0.3) = {squared:.7} (expected 0.2494431, diff {sq_resid:.2e}, tol 1.0e-6)"
            ),
            residual: sq_resid,
            tol: 1e-6,
            passed: sq_resid <= 1e-6,
        },
        CheckOutcome {
            name: "worked-example-addition-signed",
            detail: format!(
                "sleaf3_add(0.2,0.3) = {signed:.5} (expected 0.49944, diff {sg_resid:.2e}, tol 1.0e-5)"
            ),
            residual: sg_resid,
            tol: 1e-5,
            passed: sg_resid <= 1e-5,
        },
    ])
}

/// The six-decimal reference table, reproduced within [`TABLE_TOL`].
pub fn table_reproduction_check() -> Result<CheckOutcome> {
    let mut worst = 0.0f64;
    let mut diffs = Vec::new();
    for &(l, s_ref, c_ref) in REFERENCE_TABLE.iter() {
        let s = sleaf(N3, l)?.r;
        let c = cleaf(N3, l)?.r;
        let ds = (s - s_ref).abs();
        let dc = (c - c_ref).abs();
        worst = worst.max(ds).max(dc);
        if ds > TABLE_TOL || dc > TABLE_TOL {
            diffs.push(format!(
                "l={l:.1}: sleaf {s:.6} vs {s_ref:.6}, cleaf {c:.6} vs {c_ref:.6}"
            ));
        }
    }
    let mut detail = format!(
        "84 values on l = 0.0..4.1, max residual {worst:.3e} (tol {TABLE_TOL:.1e})"
    );
    if !diffs.is_empty() {
        detail.push_str("; mismatches: ");
        detail.push_str(&diffs.join(" | "));
    }
    Ok(CheckOutcome {
        name: "reference-table-reproduction",
        detail,
        residual: worst,
        tol: TABLE_TOL,
        passed: diffs.is_empty(),
    })
}

fn coupling_identity_check() -> Result<CheckOutcome> {
    let mut worst = 0.0f64;
    for l in offset_grid(-10.0, 10.0, 1000) {
        let s = sleaf(N3, l)?.r;
        let c = cleaf(N3, l)?.r;
        worst = worst.max((s * s + c * c + 2.0 * s * s * c * c - 1.0).abs());
    }
    Ok(CheckOutcome::residual_check(
        "coupling-identity",
        "s² + c² + 2s²c² = 1 on 1000 samples, ",
        worst,
        1e-11,
    ))
}

fn energy_relation_check() -> Result<CheckOutcome> {
    let mut worst = 0.0f64;
    for n in [N1, N2, N3] {
        for l in offset_grid(-10.0, 10.0, 1000) {
            worst = worst.max(sleaf(n, l)?.energy_residual().abs());
            worst = worst.max(cleaf(n, l)?.energy_residual().abs());
        }
    }
    Ok(CheckOutcome::residual_check(
        "energy-relation",
        "dr² + r^{2n} = 1 for n = 1..3 on 1000 samples each, ",
        worst,
        1e-10,
    ))
}

fn double_angle_checks() -> Result<Vec<CheckOutcome>> {
    let pc = period_constants(N3)?;
    let grid = offset_grid(-pc.pi * 2.0, pc.pi * 2.0, 400);
    let mut worst_s = 0.0f64;
    let mut worst_c = 0.0f64;
    for &l in &grid {
        worst_s = worst_s.max((sleaf3_double(l)? - sleaf(N3, 2.0 * l)?.r).abs());
        worst_c = worst_c.max((cleaf3_double(l)? - cleaf(N3, 2.0 * l)?.r).abs());
    }
    Ok(vec![
        CheckOutcome::residual_check(
            "sleaf3-double-angle",
            "against direct evaluation on 400 samples over both sign branches, ",
            worst_s,
            1e-10,
        ),
        CheckOutcome::residual_check(
            "cleaf3-double-angle",
            "against direct evaluation on 400 samples over both sign branches, ",
            worst_c,
            1e-10,
        ),
    ])
}

fn addition_checks() -> Result<Vec<CheckOutcome>> {
    let pc = period_constants(N3)?;
    // 40x40 pairs spanning two periods in each argument: every combination
    // of derivative-sign cases occurs, including shifted branch indices
    let grid = offset_grid(-pc.pi * 2.0, pc.pi * 2.0, 40);
    let mut worst_s = 0.0f64;
    let mut worst_c = 0.0f64;
    let mut sign_combos = std::collections::BTreeSet::new();
    let mut branch_indices = std::collections::BTreeSet::new();
    for &l1 in &grid {
        for &l2 in &grid {
            let case = leafkernel_core::identities::classify(l1, l2)?;
            sign_combos.insert((
                case.s_sign_l1.as_i8(),
                case.s_sign_l2.as_i8(),
                case.c_sign_l1.as_i8(),
            ));
            branch_indices.insert(leafkernel_core::reduce_arg(N3, l1)?.branch_m);
            let direct = sleaf(N3, l1 + l2)?.r;
            worst_s = worst_s.max((sleaf3_add_squared(l1, l2)? - direct * direct).abs());
            let cdirect = cleaf(N3, l1 + l2)?.r;
            worst_c = worst_c.max((cleaf3_add_squared(l1, l2)? - cdirect * cdirect).abs());
        }
    }
    // the grid must exercise every sign-case combination and more than one
    // branch index
    assert_eq!(sign_combos.len(), 8, "sign cases not all covered");
    assert!(branch_indices.len() > 1, "only one branch index covered");
    Ok(vec![
        CheckOutcome::residual_check(
            "sleaf3-addition-squared",
            "against direct evaluation on a 40x40 case-covering grid, ",
            worst_s,
            1e-9,
        ),
        CheckOutcome::residual_check(
            "cleaf3-addition-squared",
            "against direct evaluation on a 40x40 case-covering grid, ",
            worst_c,
            1e-9,
        ),
    ])
}

fn degeneration_checks() -> Result<Vec<CheckOutcome>> {
    let mut worst_circular = 0.0f64;
    for l in offset_grid(-10.0, 10.0, 400) {
        worst_circular = worst_circular.max((sleaf(N1, l)?.r - l.sin()).abs());
        worst_circular = worst_circular.max((cleaf(N1, l)?.r - l.cos()).abs());
    }
    // lemniscate addition on the principal branch: l1 + l2 <= π_2/2
    let half_pi = period_constants(N2)?.half_pi;
    let mut worst_lemniscate = 0.0f64;
    for (i, l1) in offset_grid(0.0, half_pi * 0.5, 20).into_iter().enumerate() {
        for l2 in offset_grid(0.0, half_pi - l1, 15 + i % 3) {
            let via = sl_add(l1, l2)?;
            let direct = sleaf(N2, l1 + l2)?.r;
            worst_lemniscate = worst_lemniscate.max((via - direct).abs());
        }
    }
    Ok(vec![
        CheckOutcome::residual_check(
            "circular-degeneration",
            "sleaf_1/cleaf_1 against sin/cos on [-10, 10], ",
            worst_circular,
            1e-12,
        ),
        CheckOutcome::residual_check(
            "lemniscate-addition",
            "against direct evaluation on the principal branch, ",
            worst_lemniscate,
            1e-10,
        ),
    ])
}

/// Central finite differences of the addition kernel: its two partial
/// derivatives must agree, and the kernel must collapse onto the sum.
fn addition_kernel_checks() -> Result<Vec<CheckOutcome>> {
    let h = 1e-5;
    let mut worst_fd = 0.0f64;
    let mut worst_collapse = 0.0f64;
    // 10x10 interior pairs, away from branch boundaries and from the zeros
    // of the summed function (where the kernel has |.|-type kinks)
    let grid = offset_grid(0.15, 2.25, 10);
    let mut used = 0;
    for &l1 in &grid {
        for &l2 in &grid {
            let d1 = (sleaf3_add_abs(l1 + h, l2)? - sleaf3_add_abs(l1 - h, l2)?) / (2.0 * h);
            let d2 = (sleaf3_add_abs(l1, l2 + h)? - sleaf3_add_abs(l1, l2 - h)?) / (2.0 * h);
            worst_fd = worst_fd.max((d1 - d2).abs());
            let collapse = (sleaf3_add_abs(l1, l2)? - sleaf3_add_abs(l1 + l2, 0.0)?).abs();
            worst_collapse = worst_collapse.max(collapse);
            used += 1;
        }
    }
    debug_assert_eq!(used, 100);
    Ok(vec![
        CheckOutcome::residual_check(
            "addition-kernel-partial-symmetry",
            "central differences of the two partials on 100 interior pairs, ",
            worst_fd,
            1e-6,
        ),
        CheckOutcome::residual_check(
            "addition-kernel-collapse",
            "kernel(l1, l2) = kernel(l1+l2, 0) on 100 interior pairs, ",
            worst_collapse,
            1e-9,
        ),
    ])
}

/// The `identities` suite.
pub fn identity_checks() -> Result<Vec<CheckOutcome>> {
    let mut checks = worked_example_checks()?;
    checks.push(table_reproduction_check()?);
    checks.push(coupling_identity_check()?);
    checks.push(energy_relation_check()?);
    checks.extend(double_angle_checks()?);
    checks.extend(addition_checks()?);
    checks.extend(degeneration_checks()?);
    checks.extend(addition_kernel_checks()?);
    Ok(checks)
}

/// The `symbolic` suite: the exact certificates, reported in terms of
/// surviving monomials.
pub fn symbolic_checks() -> Vec<CheckOutcome> {
    verify_all()
        .into_iter()
        .map(|report| {
            let residual = report.residual_terms as f64;
            CheckOutcome {
                name: report.name,
                detail: format!(
                    "residual {} terms (lhs {} terms, rhs {} terms)",
                    report.residual_terms, report.lhs_terms, report.rhs_terms
                ),
                residual,
                tol: 0.0,
                passed: report.passed(),
            }
        })
        .collect()
}

/// The `oracle` suite: quadrature against the independent integration of
/// the defining equation.
// 6.28 below is the printed-digits window bound for the n = 1 period, not
// an approximation of the circle constant in a computation.
#[allow(clippy::approx_constant)]
pub fn oracle_checks() -> Result<Vec<CheckOutcome>> {
    let mut checks = Vec::new();

    // period digit windows
    let windows = [(N1, 6.28), (N2, 5.24), (N3, 4.85)];
    for (n, lo) in windows {
        let period = period_constants(n)?.period;
        let inside = period >= lo && period < lo + 0.01;
        let name: &'static str = match n.get() {
            1 => "period-digits-n1",
            2 => "period-digits-n2",
            _ => "period-digits-n3",
        };
        checks.push(CheckOutcome {
            name,
            detail: format!("period({n}) = {period:.6} in [{lo}, {:.2})", lo + 0.01),
            residual: if inside { 0.0 } else { (period - lo).abs() },
            tol: 0.01,
            passed: inside,
        });
    }

    // quadrature-derived vs ODE-measured periods
    for n in [N1, N2, N3] {
        let quadrature = 4.0 * leaf_integral(n, 1.0, &QuadratureSpec::default())?;
        let measured = measure_period(n, 1e-12)?;
        let resid = (quadrature - measured).abs();
        let name: &'static str = match n.get() {
            1 => "period-two-method-n1",
            2 => "period-two-method-n2",
            _ => "period-two-method-n3",
        };
        checks.push(CheckOutcome {
            name,
            detail: format!(
                "quadrature {quadrature:.12} vs ODE {measured:.12}, diff {resid:.3e} (tol 1.0e-9)"
            ),
            residual: resid,
            tol: 1e-9,
            passed: resid <= 1e-9,
        });
    }

    // inversion-based evaluation against ODE trajectories, 200 samples
    let span = 10.0;
    let s_traj = integrate_leaf_ode(N3, OdeState { l: 0.0, r: 0.0, v: 1.0 }, span, 1e-12)?;
    let c_traj = integrate_leaf_ode(N3, OdeState { l: 0.0, r: 1.0, v: 0.0 }, span, 1e-12)?;
    let mut worst = 0.0f64;
    for k in 0..=200 {
        let l = span * k as f64 / 200.0;
        let ode_s = s_traj.sample(l).expect("inside span");
        worst = worst.max((sleaf(N3, l)?.r - ode_s.r).abs());
        let ode_c = c_traj.sample(l).expect("inside span");
        worst = worst.max((cleaf(N3, l)?.r - ode_c.r).abs());
    }
    checks.push(CheckOutcome::residual_check(
        "ode-agreement",
        "sleaf_3/cleaf_3 vs trajectories on 200 samples over [0, 10], ",
        worst,
        1e-8,
    ));

    // energy drift over a long integration
    let traj = integrate_leaf_ode(N3, OdeState { l: 0.0, r: 0.0, v: 1.0 }, 100.0, 1e-12)?;
    let mut drift = 0.0f64;
    for s in traj.nodes() {
        drift = drift.max((s.energy(N3) - 1.0).abs());
    }
    checks.push(CheckOutcome::residual_check(
        "energy-drift",
        "unit energy over l in [0, 100] at tol 1e-12, ",
        drift,
        1e-9,
    ));

    // unit amplitude from both canonical starts
    let mut amp_resid = 0.0f64;
    for init in [
        OdeState { l: 0.0, r: 0.0, v: 1.0 },
        OdeState { l: 0.0, r: 1.0, v: 0.0 },
    ] {
        amp_resid = amp_resid.max((peak_amplitude(N3, init, 1e-12)? - 1.0).abs());
    }
    checks.push(CheckOutcome::residual_check(
        "unit-amplitude",
        "peak |r| on unit-energy trajectories, ",
        amp_resid,
        1e-9,
    ));

    Ok(checks)
}
