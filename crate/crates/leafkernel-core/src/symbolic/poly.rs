//! Sparse multivariate polynomials over exact rationals.
//!
//! Generators are fixed: `s1`, `s2` (function values), `d1`, `d2`
//! (derivative radicals), and a free univariate `x`. Canonical form keeps
//! every `d` exponent at 0 or 1 by rewriting `d_i² → 1 − s_i⁶` on insertion,
//! and never stores a zero coefficient. Coefficients are unbounded-integer
//! rationals, so arithmetic is exact; the degrees in play stay small enough
//! that no clever algorithms are needed.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// The fixed generator set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    S1,
    S2,
    D1,
    D2,
    X,
}

pub const GENERATORS: [Generator; 5] = [
    Generator::S1,
    Generator::S2,
    Generator::D1,
    Generator::D2,
    Generator::X,
];

impl Generator {
    pub(crate) fn index(self) -> usize {
        match self {
            Generator::S1 => 0,
            Generator::S2 => 1,
            Generator::D1 => 2,
            Generator::D2 => 3,
            Generator::X => 4,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Generator::S1 => "s1",
            Generator::S2 => "s2",
            Generator::D1 => "d1",
            Generator::D2 => "d2",
            Generator::X => "x",
        }
    }
}

/// Exponent vector, indexed as `[s1, s2, d1, d2, x]`.
type Exponents = [u16; 5];

/// (radical generator index, paired value generator index)
const REWRITE_PAIRS: [(usize, usize); 2] = [(2, 0), (3, 1)];

/// A polynomial in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalPoly {
    terms: BTreeMap<Exponents, BigRational>,
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Insert `coeff · x^exps`, applying the `d² → 1 − s⁶` rewrite until the
/// term is canonical.
fn insert_term(terms: &mut BTreeMap<Exponents, BigRational>, exps: Exponents, coeff: BigRational) {
    if coeff.is_zero() {
        return;
    }
    for (d_idx, s_idx) in REWRITE_PAIRS {
        if exps[d_idx] >= 2 {
            let mut reduced = exps;
            reduced[d_idx] -= 2;
            insert_term(terms, reduced, coeff.clone());
            let mut shifted = reduced;
            shifted[s_idx] += 6;
            insert_term(terms, shifted, -coeff);
            return;
        }
    }
    match terms.entry(exps) {
        Entry::Vacant(slot) => {
            slot.insert(coeff);
        }
        Entry::Occupied(mut slot) => {
            let sum = slot.get() + coeff;
            if sum.is_zero() {
                slot.remove();
            } else {
                slot.insert(sum);
            }
        }
    }
}

impl RationalPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(value: i64) -> Self {
        Self::constant(ratio(value, 1))
    }

    pub fn constant(value: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        insert_term(&mut terms, [0; 5], value);
        RationalPoly { terms }
    }

    pub fn generator(g: Generator) -> Self {
        let mut exps = [0u16; 5];
        exps[g.index()] = 1;
        Self::monomial(ratio(1, 1), exps)
    }

    /// `coeff · s1^a s2^b d1^c d2^d x^e` (canonicalized on construction).
    pub fn monomial(coeff: BigRational, exps: [u16; 5]) -> Self {
        let mut terms = BTreeMap::new();
        insert_term(&mut terms, exps, coeff);
        RationalPoly { terms }
    }

    /// Integer-coefficient monomial, the workhorse for building identities.
    pub fn monomial_int(coeff: i64, exps: [u16; 5]) -> Self {
        Self::monomial(ratio(coeff, 1), exps)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the given exponent vector (zero when absent). The
    /// query is made on the canonical form.
    pub fn coefficient(&self, exps: [u16; 5]) -> BigRational {
        self.terms.get(&exps).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute a polynomial for one generator.
    pub fn subst(&self, g: Generator, value: &RationalPoly) -> Self {
        let idx = g.index();
        let mut out = Self::zero();
        for (exps, coeff) in &self.terms {
            let e = exps[idx];
            let mut rest = *exps;
            rest[idx] = 0;
            let base = Self::monomial(coeff.clone(), rest);
            out = &out + &(&base * &value.pow(e as u32));
        }
        out
    }

    /// Formal partial derivative treating all generators as independent.
    /// Meant for the univariate generator; differentiating through a
    /// radical generator would ignore the rewrite relation.
    pub fn derivative(&self, g: Generator) -> Self {
        let idx = g.index();
        let mut out = Self::zero();
        for (exps, coeff) in &self.terms {
            let e = exps[idx];
            if e == 0 {
                continue;
            }
            let mut lowered = *exps;
            lowered[idx] = e - 1;
            out = &out + &Self::monomial(coeff * ratio(e as i64, 1), lowered);
        }
        out
    }

    /// Evaluate in floating point with the given generator assignment
    /// (ordered `[s1, s2, d1, d2, x]`).
    pub fn eval_f64(&self, assign: [f64; 5]) -> f64 {
        let mut total = 0.0;
        for (exps, coeff) in &self.terms {
            let mut term = coeff.to_f64().unwrap_or(f64::NAN);
            for (i, &e) in exps.iter().enumerate() {
                term *= crate::math::powi(assign[i], e as u32);
            }
            total += term;
        }
        total
    }

    fn fmt_term(out: &mut String, exps: &Exponents, coeff: &BigRational, first: bool) {
        let negative = coeff.is_negative();
        if first {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = coeff.abs();
        let mut factors: Vec<String> = Vec::new();
        if !mag.is_one() || exps.iter().all(|&e| e == 0) {
            if mag.denom().is_one() {
                factors.push(alloc::format!("{}", mag.numer()));
            } else {
                factors.push(alloc::format!("{}/{}", mag.numer(), mag.denom()));
            }
        }
        for (i, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let sym = GENERATORS[i].symbol();
            if e == 1 {
                factors.push(String::from(sym));
            } else {
                factors.push(alloc::format!("{sym}^{e}"));
            }
        }
        let _ = write!(out, "{}", factors.join("*"));
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (exps, coeff)) in self.terms.iter().enumerate() {
            Self::fmt_term(&mut out, exps, coeff, i == 0);
        }
        write!(f, "{out}")
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let mut terms = self.terms.clone();
        for (exps, coeff) in &rhs.terms {
            insert_term(&mut terms, *exps, coeff.clone());
        }
        RationalPoly { terms }
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        let mut terms = self.terms.clone();
        for (exps, coeff) in &rhs.terms {
            insert_term(&mut terms, *exps, -coeff.clone());
        }
        RationalPoly { terms }
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut exps = [0u16; 5];
                for i in 0..5 {
                    exps[i] = ea[i] + eb[i];
                }
                insert_term(&mut terms, exps, ca * cb);
            }
        }
        RationalPoly { terms }
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (*e, -c.clone()))
            .collect();
        RationalPoly { terms }
    }
}

/// A ratio of polynomials; used where an identity is rational rather than
/// polynomial. No gcd reduction is performed — zero testing only needs the
/// numerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFn {
    num: RationalPoly,
    den: RationalPoly,
}

impl RationalFn {
    pub fn new(num: RationalPoly, den: RationalPoly) -> Self {
        assert!(!den.is_zero(), "RationalFn denominator must be nonzero");
        RationalFn { num, den }
    }

    pub fn from_poly(p: RationalPoly) -> Self {
        RationalFn {
            num: p,
            den: RationalPoly::one(),
        }
    }

    pub fn from_int(value: i64) -> Self {
        Self::from_poly(RationalPoly::from_int(value))
    }

    pub fn num(&self) -> &RationalPoly {
        &self.num
    }

    pub fn den(&self) -> &RationalPoly {
        &self.den
    }

    /// Zero as a rational function (the denominator is nonzero by
    /// construction).
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    pub fn sub(&self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    pub fn mul(&self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub fn div(&self, rhs: &RationalFn) -> RationalFn {
        assert!(!rhs.num.is_zero(), "division by the zero rational function");
        RationalFn::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn pow(&self, n: u32) -> RationalFn {
        RationalFn {
            num: self.num.pow(n),
            den: self.den.pow(n),
        }
    }

    pub fn eval_f64(&self, assign: [f64; 5]) -> f64 {
        self.num.eval_f64(assign) / self.den.eval_f64(assign)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s1() -> RationalPoly {
        RationalPoly::generator(Generator::S1)
    }

    fn d1() -> RationalPoly {
        RationalPoly::generator(Generator::D1)
    }

    fn x() -> RationalPoly {
        RationalPoly::generator(Generator::X)
    }

    #[test]
    fn additive_inverse_cancels() {
        let p = &s1() + &(-&s1());
        assert!(p.is_zero());
    }

    #[test]
    fn radical_square_rewrites() {
        // d1 · d1 → 1 − s1⁶
        let sq = &d1() * &d1();
        let expected = &RationalPoly::one() - &RationalPoly::monomial_int(1, [6, 0, 0, 0, 0]);
        assert_eq!(sq, expected);
        // d1⁴ → (1 − s1⁶)²
        let fourth = sq.pow(2);
        let direct = RationalPoly::monomial_int(1, [0, 0, 4, 0, 0]);
        assert_eq!(fourth, direct);
    }

    #[test]
    fn square_of_quadratic() {
        // (1 − 20x − 8x²)² = 1 − 40x + 384x² + 320x³ + 64x⁴
        let q = &(&RationalPoly::one() - &RationalPoly::monomial_int(20, [0, 0, 0, 0, 1]))
            - &RationalPoly::monomial_int(8, [0, 0, 0, 0, 2]);
        let sq = &q * &q;
        let mut expected = RationalPoly::one();
        for (c, e) in [(-40i64, 1u16), (384, 2), (320, 3), (64, 4)] {
            expected = &expected + &RationalPoly::monomial_int(c, [0, 0, 0, 0, e]);
        }
        assert_eq!(sq, expected);
    }

    #[test]
    fn substitution_collapses_antisymmetric_forms() {
        // s1³s2 − s1s2³ vanishes at s1 = s2
        let p = &RationalPoly::monomial_int(1, [3, 1, 0, 0, 0])
            - &RationalPoly::monomial_int(1, [1, 3, 0, 0, 0]);
        let collapsed = p.subst(Generator::S1, &RationalPoly::generator(Generator::S2));
        assert!(collapsed.is_zero());
    }

    #[test]
    fn derivative_of_univariate() {
        // d/dx (x³ − 2x) = 3x² − 2
        let p = &x().pow(3) - &RationalPoly::monomial_int(2, [0, 0, 0, 0, 1]);
        let dp = p.derivative(Generator::X);
        let expected =
            &RationalPoly::monomial_int(3, [0, 0, 0, 0, 2]) - &RationalPoly::from_int(2);
        assert_eq!(dp, expected);
    }

    #[test]
    fn display_is_readable() {
        let p = &(&RationalPoly::one() - &RationalPoly::monomial_int(40, [0, 0, 0, 0, 1]))
            + &RationalPoly::monomial(ratio(1, 2), [1, 0, 1, 0, 0]);
        // BTreeMap order: exponent vectors ascending, so the constant leads
        assert_eq!(alloc::format!("{p}"), "1 - 40*x + 1/2*s1*d1");
        assert_eq!(alloc::format!("{}", RationalPoly::zero()), "0");
    }

    #[test]
    fn rational_fn_zero_detection() {
        let u = RationalFn::new(
            &RationalPoly::one() - &x().pow(2),
            &RationalPoly::one() + &x(),
        );
        // u − u = 0 even without gcd reduction
        assert!(u.sub(&u).is_zero());
        let one = RationalFn::from_int(1);
        assert!(!u.sub(&one).is_zero());
    }

    #[test]
    fn eval_matches_hand_value() {
        // 1/2·s1·d1 − 3x at s1 = 0.5, d1 = 0.25, x = 2
        let p = &RationalPoly::monomial(ratio(1, 2), [1, 0, 1, 0, 0])
            - &RationalPoly::monomial_int(3, [0, 0, 0, 0, 1]);
        let v = p.eval_f64([0.5, 0.0, 0.25, 0.0, 2.0]);
        assert!((v - (0.0625 - 6.0)).abs() < 1e-15);
    }
}
