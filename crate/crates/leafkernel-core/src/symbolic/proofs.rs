//! The identity certificates themselves.
//!
//! Notation inside this module: `s1, s2` are the two function values,
//! `d1, d2` their derivative radicals (`d_i² = 1 − s_i⁶`), and the addition
//! kernel is `g² = (p1² + p2²)/p3` with
//!
//! ```text
//! p1 = s1·d2 + s2·d1
//! p2 = s1³s2 − s1s2³
//! p3 = 1 + 4s1⁴s2² + 4s1²s2⁴
//! ```
//!
//! Differentiation substitutes `∂ᵢ sᵢ = dᵢ` and `∂ᵢ dᵢ = −3sᵢ⁵` (the
//! defining second-order equation), after which every certificate is a
//! polynomial or rational-function identity checked by exact reduction to
//! zero.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::poly::{Generator, RationalFn, RationalPoly};

/// Outcome of one exact identity check.
#[derive(Debug, Clone)]
pub struct ProofReport {
    pub name: &'static str,
    /// What was proved, in plain text.
    pub statement: &'static str,
    /// Term count of the left-hand canonical form.
    pub lhs_terms: usize,
    /// Term count of the right-hand canonical form.
    pub rhs_terms: usize,
    /// Terms surviving in the reduced difference; zero means proved.
    pub residual_terms: usize,
    /// `"0"`, or the surviving monomials when the identity fails.
    pub residual: String,
}

impl ProofReport {
    pub fn passed(&self) -> bool {
        self.residual_terms == 0
    }

    fn from_difference(
        name: &'static str,
        statement: &'static str,
        lhs: &RationalPoly,
        rhs: &RationalPoly,
    ) -> Self {
        let diff = lhs - rhs;
        ProofReport {
            name,
            statement,
            lhs_terms: lhs.term_count(),
            rhs_terms: rhs.term_count(),
            residual_terms: diff.term_count(),
            residual: alloc::format!("{diff}"),
        }
    }

    /// Fold another reduced difference into this report.
    fn and_difference(mut self, lhs: &RationalPoly, rhs: &RationalPoly) -> Self {
        let diff = lhs - rhs;
        if !diff.is_zero() {
            if self.residual_terms == 0 {
                self.residual = alloc::format!("{diff}");
            } else {
                self.residual = alloc::format!("{}; {diff}", self.residual);
            }
            self.residual_terms += diff.term_count();
        }
        self
    }
}

impl fmt::Display for ProofReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: residual {} terms (lhs {} terms, rhs {} terms) — {}",
            self.name, self.residual_terms, self.lhs_terms, self.rhs_terms, self.statement
        )?;
        if self.residual_terms != 0 {
            write!(f, "; surviving: {}", self.residual)?;
        }
        Ok(())
    }
}

/// Human-readable listing of a batch of reports, one per line.
pub fn report_text(reports: &[ProofReport]) -> String {
    let mut out = String::new();
    for report in reports {
        out.push_str(&alloc::format!("{report}\n"));
    }
    out
}

fn mono(coeff: i64, exps: [u16; 5]) -> RationalPoly {
    RationalPoly::monomial_int(coeff, exps)
}

/// The three building blocks of the addition kernel.
pub fn build_p(i: u8) -> RationalPoly {
    match i {
        1 => &mono(1, [1, 0, 0, 1, 0]) + &mono(1, [0, 1, 1, 0, 0]),
        2 => &mono(1, [3, 1, 0, 0, 0]) - &mono(1, [1, 3, 0, 0, 0]),
        3 => {
            &(&RationalPoly::one() + &mono(4, [4, 2, 0, 0, 0])) + &mono(4, [2, 4, 0, 0, 0])
        }
        other => panic!("build_p index must be 1, 2, or 3 (got {other})"),
    }
}

/// Which argument a partial derivative is taken in.
#[derive(Clone, Copy)]
enum Arg {
    L1,
    L2,
}

/// `∂p1, ∂p2, ∂p3` with respect to the chosen argument, with the radical
/// substitutions already applied.
fn partials(arg: Arg) -> (RationalPoly, RationalPoly, RationalPoly) {
    match arg {
        Arg::L1 => (
            // ∂₁p1 = d1·d2 − 3·s1⁵·s2
            &mono(1, [0, 0, 1, 1, 0]) - &mono(3, [5, 1, 0, 0, 0]),
            // ∂₁p2 = (3·s1²·s2 − s2³)·d1
            &mono(3, [2, 1, 1, 0, 0]) - &mono(1, [0, 3, 1, 0, 0]),
            // ∂₁p3 = (16·s1³·s2² + 8·s1·s2⁴)·d1
            &mono(16, [3, 2, 1, 0, 0]) + &mono(8, [1, 4, 1, 0, 0]),
        ),
        Arg::L2 => (
            &mono(1, [0, 0, 1, 1, 0]) - &mono(3, [1, 5, 0, 0, 0]),
            &mono(1, [3, 0, 0, 1, 0]) - &mono(3, [1, 2, 0, 1, 0]),
            &mono(16, [2, 3, 0, 1, 0]) + &mono(8, [4, 1, 0, 1, 0]),
        ),
    }
}

/// The quotient-rule numerator of `∂(g²)` in the chosen argument:
/// `{2(p1·∂p1 + p2·∂p2)}·p3 − (p1² + p2²)·∂p3`.
fn derivative_numerator(arg: Arg) -> RationalPoly {
    let p1 = build_p(1);
    let p2 = build_p(2);
    let p3 = build_p(3);
    let (dp1, dp2, dp3) = partials(arg);
    let bracket = &(&p1 * &dp1) + &(&p2 * &dp2);
    let two_bracket = &RationalPoly::from_int(2) * &bracket;
    let sum_sq = &(&p1 * &p1) + &(&p2 * &p2);
    &(&two_bracket * &p3) - &(&sum_sq * &dp3)
}

/// The fully expanded derivative numerator written out term by term:
/// `{2s1 − 8s1⁵s2² − 24s1³s2⁴ − 8s1s2⁶ − 16s1⁵s2⁸}·d1` plus the mirrored
/// `d2` block.
fn expanded_numerator() -> RationalPoly {
    let d1_block = [
        (2i64, [1u16, 0, 1, 0, 0]),
        (-8, [5, 2, 1, 0, 0]),
        (-24, [3, 4, 1, 0, 0]),
        (-8, [1, 6, 1, 0, 0]),
        (-16, [5, 8, 1, 0, 0]),
    ];
    let d2_block = [
        (2i64, [0u16, 1, 0, 1, 0]),
        (-8, [2, 5, 0, 1, 0]),
        (-24, [4, 3, 0, 1, 0]),
        (-8, [6, 1, 0, 1, 0]),
        (-16, [8, 5, 0, 1, 0]),
    ];
    let mut out = RationalPoly::zero();
    for (c, e) in d1_block.into_iter().chain(d2_block) {
        out = &out + &mono(c, e);
    }
    out
}

/// The two derivative numerators of the addition kernel agree exactly and
/// both equal the explicit expansion. Their equality is what forces the
/// kernel to depend on the arguments only through `l1 + l2`.
pub fn verify_numerator_identity() -> ProofReport {
    let n1 = derivative_numerator(Arg::L1);
    let n2 = derivative_numerator(Arg::L2);
    let expanded = expanded_numerator();
    ProofReport::from_difference(
        "addition-numerator-identity",
        "both partial-derivative numerators of the addition kernel reduce to the same 10-term expansion",
        &n1,
        &n2,
    )
    .and_difference(&n1, &expanded)
    .and_difference(&n2, &expanded)
}

/// Compact form of the first half of the derivative numerator:
/// `p1·∂₁p1 + p2·∂₁p2 = (s1 − 4s1³s2⁴)·d1 + (s2 − 4s1⁶s2)·d2`.
pub fn verify_numerator_first_term() -> ProofReport {
    let p1 = build_p(1);
    let p2 = build_p(2);
    let (dp1, dp2, _) = partials(Arg::L1);
    let lhs = &(&p1 * &dp1) + &(&p2 * &dp2);
    let rhs = &(&(&mono(1, [1, 0, 1, 0, 0]) - &mono(4, [3, 4, 1, 0, 0]))
        + &mono(1, [0, 1, 0, 1, 0]))
        - &mono(4, [6, 1, 0, 1, 0]);
    ProofReport::from_difference(
        "numerator-first-term-reduction",
        "p1·∂₁p1 + p2·∂₁p2 collapses to (s1 − 4s1³s2⁴)·d1 + (s2 − 4s1⁶s2)·d2 after the radical rewrite",
        &lhs,
        &rhs,
    )
}

fn x_poly(pairs: &[(i64, u16)]) -> RationalPoly {
    let mut out = RationalPoly::zero();
    for &(c, e) in pairs {
        out = &out + &mono(c, [0, 0, 0, 0, e]);
    }
    out
}

/// The double-angle radical algebra, squared so it is sign-free. In the
/// generator `x` (standing for the sixth power of the half-angle value):
///
/// 1. `(1 + 8x)³ − 64x(1 − x)³ = (1 − 20x − 8x²)²`, which squares the
///    reciprocal-radical relation between the angle and half-angle values;
/// 2. with `A = 4x² − 4x⁸` and `B = 1 + 8x⁶` (here `x` is the half-angle
///    value itself, so `A/B` is the squared double-angle map),
///    `A′B − AB′ = 8x − 160x⁷ − 64x¹³`, the quotient-rule numerator that
///    the derivative relation claims.
pub fn verify_double_angle_identity() -> ProofReport {
    let lhs1 = {
        let cube = x_poly(&[(1, 0), (8, 1)]).pow(3);
        let one_minus_cubed = x_poly(&[(1, 0), (-1, 1)]).pow(3);
        &cube - &(&x_poly(&[(64, 1)]) * &one_minus_cubed)
    };
    let rhs1 = x_poly(&[(1, 0), (-20, 1), (-8, 2)]).pow(2);

    let a = x_poly(&[(4, 2), (-4, 8)]);
    let b = x_poly(&[(1, 0), (8, 6)]);
    let lhs2 = &(&a.derivative(Generator::X) * &b) - &(&a * &b.derivative(Generator::X));
    let rhs2 = x_poly(&[(8, 1), (-160, 7), (-64, 13)]);

    ProofReport::from_difference(
        "double-angle-radical-identity",
        "(1+8x)³ − 64x(1−x)³ = (1−20x−8x²)², and the quotient-rule numerator of the squared double-angle map matches its closed form",
        &lhs1,
        &rhs1,
    )
    .and_difference(&lhs2, &rhs2)
}

/// The squared double-angle expressions for the coupled pair, with `x` the
/// companion value `c`: eliminating `s² = (1 − c²)/(1 + 2c²)` via the
/// coupling relation, prove `S² + C² + 2S²C² − 1 = 0` as a rational
/// function, where `S²` is the squared double-angle expression in `s` and
/// `C` the one in `c`.
pub fn verify_pythagorean_double() -> ProofReport {
    let one = RationalFn::from_int(1);
    // u = s² = (1 − x²)/(1 + 2x²)
    let u = RationalFn::new(x_poly(&[(1, 0), (-1, 2)]), x_poly(&[(1, 0), (2, 2)]));
    // S² = 4u(1 − u³)/(1 + 8u³)
    let u3 = u.pow(3);
    let s_sq = RationalFn::from_int(4)
        .mul(&u)
        .mul(&one.sub(&u3))
        .div(&one.add(&RationalFn::from_int(8).mul(&u3)));
    // C² = (2x² + 2x⁴ − 1)² / (1 + 8x² + 8x⁶ − 8x⁸)
    let c_sq = RationalFn::new(
        x_poly(&[(2, 2), (2, 4), (-1, 0)]).pow(2),
        x_poly(&[(1, 0), (8, 2), (8, 6), (-8, 8)]),
    );
    let total = s_sq
        .add(&c_sq)
        .add(&RationalFn::from_int(2).mul(&s_sq).mul(&c_sq))
        .sub(&one);
    let zero = RationalPoly::zero();
    ProofReport::from_difference(
        "pythagorean-doubling-closure",
        "the squared double-angle pair satisfies S² + C² + 2S²C² = 1 after eliminating s² through the coupling relation",
        total.num(),
        &zero,
    )
}

/// Run every certificate.
pub fn verify_all() -> Vec<ProofReport> {
    alloc::vec![
        verify_numerator_identity(),
        verify_numerator_first_term(),
        verify_double_angle_identity(),
        verify_pythagorean_double(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, ToPrimitive};

    #[test]
    fn p_building_blocks() {
        // p2 is antisymmetric: substituting s1 = s2 kills it
        let p2 = build_p(2);
        let collapsed = p2.subst(Generator::S1, &RationalPoly::generator(Generator::S2));
        assert!(collapsed.is_zero());
        // p3 has constant term 1
        assert!(build_p(3).coefficient([0; 5]).is_one());
        // p1 is linear in the radicals: squaring and rewriting leaves no
        // d-degree above the canonical bound (term count check: p1² has the
        // cross term 2 s1 s2 d1 d2 plus rewritten squares)
        let p1 = build_p(1);
        let sq = &p1 * &p1;
        assert_eq!(sq.coefficient([1, 1, 1, 1, 0]).to_f64().unwrap(), 2.0);
    }

    #[test]
    fn numerator_identity_holds() {
        let report = verify_numerator_identity();
        assert!(report.passed(), "{report}");
        assert_eq!(report.residual, "0");
        // the expansion has 5 + 5 terms
        assert_eq!(report.lhs_terms, 10);
        assert_eq!(report.rhs_terms, 10);
    }

    #[test]
    fn numerator_has_printed_coefficient() {
        // the s1³s2⁴d1 coefficient of the expansion is −24
        let n1 = derivative_numerator(Arg::L1);
        assert_eq!(n1.coefficient([3, 4, 1, 0, 0]).to_f64().unwrap(), -24.0);
    }

    #[test]
    fn numerator_specializes_at_s2_zero() {
        // s2 = 0, d2 = 1 reduces the numerator to 2·s1·d1
        let n1 = derivative_numerator(Arg::L1)
            .subst(Generator::S2, &RationalPoly::zero())
            .subst(Generator::D2, &RationalPoly::one());
        let expected = RationalPoly::monomial_int(2, [1, 0, 1, 0, 0]);
        assert_eq!(n1, expected);
    }

    #[test]
    fn first_term_reduction_holds() {
        let report = verify_numerator_first_term();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn first_term_specializations() {
        let p1 = build_p(1);
        let p2 = build_p(2);
        let (dp1, dp2, _) = partials(Arg::L1);
        let lhs = &(&p1 * &dp1) + &(&p2 * &dp2);
        // s1 = 0 (and hence d1 = 1) leaves s2·d2
        let at_s1_zero = lhs
            .subst(Generator::S1, &RationalPoly::zero())
            .subst(Generator::D1, &RationalPoly::one());
        assert_eq!(at_s1_zero, RationalPoly::monomial_int(1, [0, 1, 0, 1, 0]));
        // the diagonal substitution s1 = s2, d1 = d2 agrees on both sides
        let rhs = &(&(&RationalPoly::monomial_int(1, [1, 0, 1, 0, 0])
            - &RationalPoly::monomial_int(4, [3, 4, 1, 0, 0]))
            + &RationalPoly::monomial_int(1, [0, 1, 0, 1, 0]))
            - &RationalPoly::monomial_int(4, [6, 1, 0, 1, 0]);
        let diag = |p: &RationalPoly| {
            p.subst(Generator::S1, &RationalPoly::generator(Generator::S2))
                .subst(Generator::D1, &RationalPoly::generator(Generator::D2))
        };
        assert_eq!(diag(&lhs), diag(&rhs));
    }

    #[test]
    fn double_angle_identity_holds() {
        let report = verify_double_angle_identity();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn double_angle_expansion_is_the_expected_quartic() {
        // independent expansion: 1 − 40x + 384x² + 320x³ + 64x⁴
        let expected = x_poly(&[(1, 0), (-40, 1), (384, 2), (320, 3), (64, 4)]);
        let cube = x_poly(&[(1, 0), (8, 1)]).pow(3);
        let lhs = &cube - &(&x_poly(&[(64, 1)]) * &x_poly(&[(1, 0), (-1, 1)]).pow(3));
        assert_eq!(lhs, expected);
        let rhs = x_poly(&[(1, 0), (-20, 1), (-8, 2)]).pow(2);
        assert_eq!(rhs, expected);
        // x = 0 specialization: both sides are 1
        assert!(lhs
            .subst(Generator::X, &RationalPoly::zero())
            .coefficient([0; 5])
            .is_one());
    }

    #[test]
    fn pythagorean_doubling_holds() {
        let report = verify_pythagorean_double();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn pythagorean_specializations() {
        // C² at c = 1 (so s = 0): the companion expression is 9/9 = 1
        let c_sq = RationalFn::new(
            x_poly(&[(2, 2), (2, 4), (-1, 0)]).pow(2),
            x_poly(&[(1, 0), (8, 2), (8, 6), (-8, 8)]),
        );
        let at = |x: f64| c_sq.eval_f64([0.0, 0.0, 0.0, 0.0, x]);
        assert!((at(1.0) - 1.0).abs() < 1e-15);
        // c = 0 (so s = 1): the expression is (−1)² = 1
        assert!((at(0.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn verify_all_passes_and_serializes() {
        let reports = verify_all();
        assert_eq!(reports.len(), 4);
        for report in &reports {
            assert!(report.passed(), "{report}");
        }
        let text = report_text(&reports);
        assert!(text.contains("addition-numerator-identity: residual 0 terms"));
        assert!(text.lines().count() == 4);
    }

    #[test]
    fn failed_identity_lists_survivors() {
        // deliberately wrong right-hand side
        let lhs = RationalPoly::generator(Generator::S1);
        let rhs = RationalPoly::generator(Generator::S2);
        let report = ProofReport::from_difference("scratch", "s1 = s2 (false)", &lhs, &rhs);
        assert!(!report.passed());
        assert_eq!(report.residual_terms, 2);
        assert!(alloc::format!("{report}").contains("surviving"));
    }

    #[test]
    fn numeric_shadow_of_the_certificates() {
        // random rational substitutions with d = +sqrt(1 − s⁶): the
        // certified forms must also hold in floating point, which guards
        // against transcription slips between the symbolic and numeric
        // layers.
        let n1 = derivative_numerator(Arg::L1);
        let samples = [
            (0.217, -0.632),
            (-0.911, 0.448),
            (0.05, 0.95),
            (0.739, 0.741),
        ];
        for &(s1, s2) in &samples {
            let d1 = (1.0 - s1_f(s1)).sqrt();
            let d2 = (1.0 - s1_f(s2)).sqrt();
            let assign = [s1, s2, d1, d2, 0.0];
            // numeric evaluation of the defining expression
            let p1 = s1 * d2 + s2 * d1;
            let p2 = s1.powi(3) * s2 - s1 * s2.powi(3);
            let p3 = 1.0 + 4.0 * s1.powi(4) * s2.powi(2) + 4.0 * s1.powi(2) * s2.powi(4);
            let dp1 = d1 * d2 - 3.0 * s1.powi(5) * s2;
            let dp2 = (3.0 * s1.powi(2) * s2 - s2.powi(3)) * d1;
            let dp3 = (16.0 * s1.powi(3) * s2.powi(2) + 8.0 * s1 * s2.powi(4)) * d1;
            let numeric = 2.0 * (p1 * dp1 + p2 * dp2) * p3 - (p1 * p1 + p2 * p2) * dp3;
            let symbolic = n1.eval_f64(assign);
            assert!(
                (numeric - symbolic).abs() < 1e-10,
                "s1={s1}, s2={s2}: {numeric} vs {symbolic}"
            );
        }

        fn s1_f(s: f64) -> f64 {
            s.powi(6)
        }
    }
}
