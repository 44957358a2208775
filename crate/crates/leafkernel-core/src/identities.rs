//! Double-angle and addition formulas for the leaf families.
//!
//! The n = 3 addition laws come in squared form: with `s_i = sleaf₃(l_i)`,
//! `d_i = √(1 − s_i⁶)`, and a relative sign fixed by which derivative-sign
//! interval each argument occupies,
//!
//! ```text
//! sleaf₃(l₁+l₂)² = [ (s₁d₂ ± s₂d₁)² + (s₁³s₂ − s₁s₂³)² ]
//!                  / (1 + 4s₁⁴s₂² + 4s₁²s₂⁴)
//! ```
//!
//! and analogously for `cleaf₃(l₁+l₂)²` in terms of `c₁ = cleaf₃(l₁)` and
//! `s₂`. Everything here evaluates those closed forms from values at `l₁`
//! and `l₂` alone; signed recovery is a separate step that consults direct
//! evaluation, so the squared laws stay testable verbatim.
//!
//! The n = 1 and n = 2 reference formulas (`sin` addition, lemniscate
//! double angle and addition) are included to exercise the same branch
//! machinery against classical results.

use crate::error::Result;
use crate::leaf::{cleaf, sign_cleaf_prime, sign_sleaf_prime, sleaf, LeafOrder, Sign};
use crate::math;

const N3: LeafOrder = LeafOrder::N3;

/// Which of the two printed sign cases of an addition law applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseId {
    /// Case (i).
    I,
    /// Case (ii).
    II,
}

/// Branch classification of an argument pair for the n = 3 addition laws.
///
/// For the `sleaf` law the relative sign is `+` exactly when both arguments
/// sit in like derivative-sign intervals (case i); for the `cleaf` law it is
/// `−` exactly when `cleaf'(l₁)` and `sleaf'(l₂)` disagree (case i).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BranchCase {
    pub s_sign_l1: Sign,
    pub s_sign_l2: Sign,
    pub c_sign_l1: Sign,
    pub sleaf_case: CaseId,
    pub cleaf_case: CaseId,
}

/// Classify `(l1, l2)` for the n = 3 addition laws.
pub fn classify(l1: f64, l2: f64) -> Result<BranchCase> {
    let s_sign_l1 = sign_sleaf_prime(N3, l1)?;
    let s_sign_l2 = sign_sleaf_prime(N3, l2)?;
    let c_sign_l1 = sign_cleaf_prime(N3, l1)?;
    Ok(BranchCase {
        s_sign_l1,
        s_sign_l2,
        c_sign_l1,
        sleaf_case: if s_sign_l1 == s_sign_l2 {
            CaseId::I
        } else {
            CaseId::II
        },
        cleaf_case: if c_sign_l1 != s_sign_l2 {
            CaseId::I
        } else {
            CaseId::II
        },
    })
}

/// An argument pair with its (computed, never user-supplied) branch case.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdditionInput {
    pub l1: f64,
    pub l2: f64,
    pub case: BranchCase,
}

impl AdditionInput {
    pub fn new(l1: f64, l2: f64) -> Result<Self> {
        Ok(AdditionInput {
            l1,
            l2,
            case: classify(l1, l2)?,
        })
    }
}

fn clamped(v: f64) -> f64 {
    v.clamp(-1.0, 1.0)
}

/// `√(1 − v⁶)` from a clamped value; the sign case multiplies this radical,
/// never `v` itself.
fn radical6(v: f64) -> f64 {
    math::sqrt((1.0 - math::powi(v, 6)).max(0.0))
}

/// `sleaf₃(2l)` from the value at `l`: `± 2s√(1−s⁶)/√(1+8s⁶)`, the sign
/// being `sign_sleaf_prime(l)`.
pub fn sleaf3_double(l: f64) -> Result<f64> {
    let s = clamped(sleaf(N3, l)?.r);
    let s6 = math::powi(s, 6);
    let sign = sign_sleaf_prime(N3, l)?.as_f64();
    Ok(sign * 2.0 * s * radical6(s) / math::sqrt(1.0 + 8.0 * s6))
}

/// `cleaf₃(2l)` from the value at `l`:
/// `(2c² + 2c⁴ − 1)/√(1 + 8c² + 8c⁶ − 8c⁸)`. A single sign works on the
/// whole line; it is pinned by `cleaf₃(0) = 1`.
pub fn cleaf3_double(l: f64) -> Result<f64> {
    let c = clamped(cleaf(N3, l)?.r);
    let c2 = c * c;
    let c4 = c2 * c2;
    let c6 = c4 * c2;
    let c8 = c4 * c4;
    Ok((2.0 * c2 + 2.0 * c4 - 1.0) / math::sqrt(1.0 + 8.0 * c2 + 8.0 * c6 - 8.0 * c8))
}

/// `sleaf₃(l₁+l₂)²` via the case-selected closed form; the value is in
/// `[0, 1]`.
pub fn sleaf3_add_squared(l1: f64, l2: f64) -> Result<f64> {
    let input = AdditionInput::new(l1, l2)?;
    let s1 = clamped(sleaf(N3, l1)?.r);
    let s2 = clamped(sleaf(N3, l2)?.r);
    let d1 = radical6(s1);
    let d2 = radical6(s2);
    let cross = match input.case.sleaf_case {
        CaseId::I => s1 * d2 + s2 * d1,
        CaseId::II => s1 * d2 - s2 * d1,
    };
    let odd = s1 * s2 * (s1 * s1 - s2 * s2);
    let s1s2 = s1 * s1 * s2 * s2;
    let den = 1.0 + 4.0 * s1s2 * (s1 * s1 + s2 * s2);
    Ok(((cross * cross + odd * odd) / den).clamp(0.0, 1.0))
}

/// Signed `sleaf₃(l₁+l₂)`: the square root of [`sleaf3_add_squared`], with
/// the sign taken from direct evaluation at the reduced sum.
pub fn sleaf3_add(l1: f64, l2: f64) -> Result<f64> {
    let sq = sleaf3_add_squared(l1, l2)?;
    let direct = sleaf(N3, l1 + l2)?.r;
    let mag = math::sqrt(sq);
    Ok(if direct < 0.0 { -mag } else { mag })
}

/// `cleaf₃(l₁+l₂)²` via the case-selected closed form in `c₁ = cleaf₃(l₁)`
/// and `s₂ = sleaf₃(l₂)`.
///
/// The second numerator term is `c₁³s₂ − c₁s₂³`, matching the `(c₁, s₂)`
/// pair used by the first term and the denominator; this combination is the
/// one fixed by cross-checking against direct evaluation of
/// `cleaf₃(l₁+l₂)` on a branch-covering grid.
pub fn cleaf3_add_squared(l1: f64, l2: f64) -> Result<f64> {
    let input = AdditionInput::new(l1, l2)?;
    let c1 = clamped(cleaf(N3, l1)?.r);
    let s2 = clamped(sleaf(N3, l2)?.r);
    let dc1 = radical6(c1);
    let ds2 = radical6(s2);
    let cross = match input.case.cleaf_case {
        CaseId::I => c1 * ds2 - s2 * dc1,
        CaseId::II => c1 * ds2 + s2 * dc1,
    };
    let odd = c1 * s2 * (c1 * c1 - s2 * s2);
    let c1s2 = c1 * c1 * s2 * s2;
    let den = 1.0 + 4.0 * c1s2 * (s2 * s2 + c1 * c1);
    Ok(((cross * cross + odd * odd) / den).clamp(0.0, 1.0))
}

/// `|sleaf₃(l₁+l₂)|` assembled from the values and signed derivatives at
/// `l₁` and `l₂` only (no case selection: the derivative signs carry the
/// branch information). This is the two-variable kernel whose partial
/// derivatives agree in `l₁` and `l₂`, which is what forces the addition
/// law's argument dependence to collapse to `l₁ + l₂`.
pub fn sleaf3_add_abs(l1: f64, l2: f64) -> Result<f64> {
    let v1 = sleaf(N3, l1)?;
    let v2 = sleaf(N3, l2)?;
    let s1 = clamped(v1.r);
    let s2 = clamped(v2.r);
    let p1 = s1 * v2.dr + s2 * v1.dr;
    let p2 = s1 * s2 * (s1 * s1 - s2 * s2);
    let p3 = 1.0 + 4.0 * s1 * s1 * s2 * s2 * (s1 * s1 + s2 * s2);
    Ok(math::sqrt(((p1 * p1 + p2 * p2) / p3).max(0.0)))
}

/// `sin(l₁+l₂) = sin l₁ cos l₂ + sin l₂ cos l₁`, evaluated with the n = 1
/// leaf pair.
pub fn sin_add(l1: f64, l2: f64) -> Result<f64> {
    let s1 = sleaf(LeafOrder::N1, l1)?.r;
    let s2 = sleaf(LeafOrder::N1, l2)?.r;
    let c1 = cleaf(LeafOrder::N1, l1)?.r;
    let c2 = cleaf(LeafOrder::N1, l2)?.r;
    Ok(s1 * c2 + s2 * c1)
}

/// Lemniscate double angle `sl(2l) = 2·sl·sl'/(1 + sl⁴)`; on the principal
/// branch `sl' = √(1 − sl⁴)` and this is the classical form.
pub fn sl_double(l: f64) -> Result<f64> {
    let v = sleaf(LeafOrder::N2, l)?;
    let s = clamped(v.r);
    Ok(2.0 * s * v.dr / (1.0 + math::powi(s, 4)))
}

/// Lemniscate addition `sl(l₁+l₂) = (sl₁·sl₂' + sl₂·sl₁')/(1 + sl₁²sl₂²)`,
/// with the signed derivatives carrying the branch information.
pub fn sl_add(l1: f64, l2: f64) -> Result<f64> {
    let v1 = sleaf(LeafOrder::N2, l1)?;
    let v2 = sleaf(LeafOrder::N2, l2)?;
    Ok((v1.r * v2.dr + v2.r * v1.dr) / (1.0 + v1.r * v1.r * v2.r * v2.r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::period_constants;

    #[test]
    fn double_angle_at_origin() {
        assert_eq!(sleaf3_double(0.0).unwrap(), 0.0);
        assert_eq!(cleaf3_double(0.0).unwrap(), 1.0);
    }

    #[test]
    fn double_angle_tabulated_rows() {
        // sleaf₃(0.8) printed as 0.785387
        assert!((sleaf3_double(0.4).unwrap() - 0.785387).abs() < 2e-5);
        // minus branch: sleaf₃(2.6) printed as -0.171350
        assert!((sleaf3_double(1.3).unwrap() - (-0.171350)).abs() < 2e-5);
        // cleaf₃(1.0) printed as 0.214324; cleaf₃(2.4) as -0.998770
        assert!((cleaf3_double(0.5).unwrap() - 0.214324).abs() < 2e-5);
        assert!((cleaf3_double(1.2).unwrap() - (-0.998770)).abs() < 2e-5);
    }

    #[test]
    fn double_angle_matches_direct_evaluation() {
        for k in 0..60 {
            let l = -4.8 + 0.163 * k as f64;
            let via = sleaf3_double(l).unwrap();
            let direct = sleaf(N3, 2.0 * l).unwrap().r;
            assert!((via - direct).abs() < 1e-10, "sleaf l = {l}");
            let via = cleaf3_double(l).unwrap();
            let direct = cleaf(N3, 2.0 * l).unwrap().r;
            assert!((via - direct).abs() < 1e-10, "cleaf l = {l}");
        }
    }

    #[test]
    fn worked_addition_example() {
        // sleaf₃(0.2+0.3)² = 0.2494431, sleaf₃(0.5) = 0.49944
        let sq = sleaf3_add_squared(0.2, 0.3).unwrap();
        assert!((sq - 0.2494431).abs() < 1e-6, "got {sq}");
        let signed = sleaf3_add(0.2, 0.3).unwrap();
        assert!((signed - 0.49944).abs() < 1e-5, "got {signed}");
    }

    #[test]
    fn addition_degenerate_second_argument() {
        for &l in &[0.0, 0.37, 1.21, 2.9, -1.7] {
            let sq = sleaf3_add_squared(l, 0.0).unwrap();
            let s = sleaf(N3, l).unwrap().r;
            assert!((sq - s * s).abs() < 1e-11, "l = {l}");
            let cq = cleaf3_add_squared(l, 0.0).unwrap();
            let c = cleaf(N3, l).unwrap().r;
            assert!((cq - c * c).abs() < 1e-11, "l = {l}");
        }
    }

    #[test]
    fn addition_on_decreasing_branches() {
        // both arguments in the decreasing branch; sleaf₃(2.7)² ≈ 0.073625
        let sq = sleaf3_add_squared(1.3, 1.4).unwrap();
        assert!((sq - 0.073625).abs() < 3e-5, "got {sq}");
        assert!((sq - 0.07362627224436238).abs() < 1e-10, "got {sq}");
        // signed recovery across a period boundary: sleaf₃(4.0) = -0.833880
        let signed = sleaf3_add(2.0, 2.0).unwrap();
        assert!((signed - (-0.833880)).abs() < 2e-5, "got {signed}");
        assert_eq!(sleaf3_add(0.0, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn cleaf_addition_examples() {
        let c05 = cleaf(N3, 0.5).unwrap().r;
        let sq = cleaf3_add_squared(0.2, 0.3).unwrap();
        assert!((sq - c05 * c05).abs() < 1e-10, "got {sq}");
        assert!((sq - 0.500743).abs() < 1e-5);
        // row 2.5: cleaf₃(2.5) = -0.992410
        let sq = cleaf3_add_squared(1.0, 1.5).unwrap();
        assert!((sq - 0.992410f64.powi(2)).abs() < 4e-5, "got {sq}");
    }

    #[test]
    fn addition_matches_direct_on_mixed_branches() {
        let pairs = [
            (0.2, 0.3),   // both increasing
            (1.3, 1.4),   // both decreasing
            (1.3, 0.3),   // mixed
            (0.3, 1.3),   // mixed, swapped
            (3.9, 0.4),   // shifted branch index on l1
            (-2.6, 1.1),  // negative argument
            (5.1, -3.3),  // both shifted
        ];
        for &(l1, l2) in &pairs {
            let sq = sleaf3_add_squared(l1, l2).unwrap();
            let direct = sleaf(N3, l1 + l2).unwrap().r;
            assert!(
                (sq - direct * direct).abs() < 1e-9,
                "sleaf ({l1}, {l2}): {sq} vs {}",
                direct * direct
            );
            let cq = cleaf3_add_squared(l1, l2).unwrap();
            let cdirect = cleaf(N3, l1 + l2).unwrap().r;
            assert!(
                (cq - cdirect * cdirect).abs() < 1e-9,
                "cleaf ({l1}, {l2}): {cq} vs {}",
                cdirect * cdirect
            );
        }
    }

    #[test]
    fn case_classification_examples() {
        let pc = period_constants(N3).unwrap();
        // both in the principal increasing interval
        let case = classify(0.2, 0.3).unwrap();
        assert_eq!(case.sleaf_case, CaseId::I);
        assert_eq!(case.s_sign_l1, Sign::Plus);
        // cleaf decreasing at 0.2, sleaf increasing at 0.3: case (i)
        assert_eq!(case.cleaf_case, CaseId::I);

        // mixed sleaf signs: case (ii)
        let case = classify(1.3, 0.3).unwrap();
        assert_eq!(case.sleaf_case, CaseId::II);

        // cleaf increasing on (π_3, 2π_3), sleaf increasing near 0: case (ii)
        let case = classify(pc.pi + 0.3, 0.1).unwrap();
        assert_eq!(case.c_sign_l1, Sign::Plus);
        assert_eq!(case.cleaf_case, CaseId::II);

        let input = AdditionInput::new(1.3, 0.3).unwrap();
        assert_eq!(input.case, classify(1.3, 0.3).unwrap());
    }

    #[test]
    fn addition_squared_consistent_with_double() {
        for k in 0..30 {
            let l = -2.3 + 0.19 * k as f64;
            let sq = sleaf3_add_squared(l, l).unwrap();
            let dbl = sleaf3_double(l).unwrap();
            assert!((sq - dbl * dbl).abs() < 1e-10, "l = {l}");
        }
    }

    #[test]
    fn kernel_matches_absolute_value() {
        for &(l1, l2) in &[(0.4, 0.9), (1.7, 0.6), (2.9, 1.8), (-1.2, 0.5)] {
            let g = sleaf3_add_abs(l1, l2).unwrap();
            let direct = sleaf(N3, l1 + l2).unwrap().r.abs();
            assert!((g - direct).abs() < 1e-10, "({l1}, {l2})");
        }
    }

    #[test]
    fn classical_reference_formulas() {
        assert!((sin_add(0.3, 0.4).unwrap() - 0.7f64.sin()).abs() < 1e-12);
        assert_eq!(sl_double(0.0).unwrap(), 0.0);
        for &l in &[0.0, 0.4, 1.1] {
            let sl = sleaf(LeafOrder::N2, l).unwrap().r;
            assert!((sl_add(l, 0.0).unwrap() - sl).abs() < 1e-12, "l = {l}");
        }
        // principal-branch agreement with direct evaluation
        for k in 0..20 {
            let l1 = 0.03 + 0.03 * k as f64;
            let l2 = 0.61 - 0.02 * k as f64;
            let via = sl_add(l1, l2).unwrap();
            let direct = sleaf(LeafOrder::N2, l1 + l2).unwrap().r;
            assert!((via - direct).abs() < 1e-10, "({l1}, {l2})");
        }
        for k in 0..20 {
            let l = 0.04 * k as f64;
            let via = sl_double(l).unwrap();
            let direct = sleaf(LeafOrder::N2, 2.0 * l).unwrap().r;
            assert!((via - direct).abs() < 1e-10, "l = {l}");
        }
    }
}
