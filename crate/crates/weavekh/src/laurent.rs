//! Exact Laurent-polynomial arithmetic over arbitrary-precision integers.
//!
//! Two types: [`LaurentPoly`] for univariate Laurent polynomials (variables
//! q, t or Q, distinguished only by a display tag) and [`BiLaurentPoly`] for
//! polynomials in the pair (t, Q) as used by the graded Euler characteristic
//! Kh(t,Q).
//!
//! Polynomials are kept in canonical sparse form: an ordered map from
//! exponent to coefficient with no stored zero coefficients, so structural
//! equality is semantic equality. Coefficients are exact integers
//! throughout; nothing in this module touches floating point except the
//! explicitly-named [`LaurentPoly::eval_f64`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::json;
use thiserror::Error;

/// Display tag for the variable of a [`LaurentPoly`].
///
/// The tag has no algebraic meaning, but mixing tags in a binary operation
/// is rejected: it always indicates a plumbing bug (e.g. feeding a q-series
/// where a t-series is expected without the explicit relabel).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    /// Hecke-algebra parameter q.
    Q,
    /// Jones variable t.
    T,
    /// Khovanov quantum variable Q.
    CapQ,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
            Var::CapQ => "Q",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(Var, Var),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("non-exact division: remainder is nonzero")]
    NonExactDivision,
    #[error("odd exponent {0} where only even powers of Q are allowed")]
    OddExponent(i64),
    #[error("evaluation at zero with negative exponents present")]
    ZeroWithNegativeExponent,
}

/// Univariate Laurent polynomial with [`BigInt`] coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    var: Var,
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        Self {
            var,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, 1)
    }

    pub fn constant(var: Var, c: impl Into<BigInt>) -> Self {
        Self::monomial(var, 0, c)
    }

    /// The single term `c·x^exp` (canonicalized if `c` is zero).
    pub fn monomial(var: Var, exp: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { var, terms }
    }

    pub fn from_terms<I, C>(var: Var, iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(var);
        for (e, c) in iter {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `x^exp` (zero if absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_deg(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_deg(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// All nonzero terms, ascending in exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_var(&self, other: &Self) -> Result<(), LaurentError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(LaurentError::VariableMismatch(self.var, other.var))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_var(other)?;
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_var(other)?;
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, -c.clone());
        }
        Ok(out)
    }

    /// Exact convolution product.
    pub fn try_mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_var(other)?;
        let mut out = Self::zero(self.var);
        // iterate the sparser factor on the outside
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (&e1, c1) in &small.terms {
            for (&e2, c2) in &large.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Multiplication by `x^k`: every exponent increases by `k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            var: self.var,
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Relabel the variable; the coefficients are untouched.
    pub fn with_var(&self, var: Var) -> Self {
        Self {
            var,
            terms: self.terms.clone(),
        }
    }

    /// Substitute `x ↦ x^k` for `k ≥ 1`: every exponent is multiplied by `k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k >= 1, "substitute_power requires k >= 1");
        Self {
            var: self.var,
            terms: self.terms.iter().map(|(&e, c)| (e * k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.var);
        for _ in 0..k {
            out = out.try_mul(self).expect("same variable");
        }
        out
    }

    /// Exact quotient `self / den`, or [`LaurentError::NonExactDivision`]
    /// when the division leaves a remainder.
    ///
    /// Ascending synthetic division: repeatedly cancels the lowest-order
    /// term of the remainder against the lowest-order term of `den`, and
    /// fails as soon as a coefficient does not divide exactly or the
    /// quotient exponent overshoots the degree bound.
    pub fn exact_div(&self, den: &Self) -> Result<Self, LaurentError> {
        self.check_var(den)?;
        if den.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.var));
        }
        let quot_terms = div_ascending(&self.terms, &den.terms)?;
        Ok(Self {
            var: self.var,
            terms: quot_terms,
        })
    }

    /// Formal substitution taking a polynomial in even powers of Q to a
    /// bivariate polynomial: `c·Q^{2k} ↦ c·(−1)^k·t^k·Q^{2k}`.
    ///
    /// This is the two-step rule Q² ↦ −X, X ↦ tQ² applied term by term;
    /// it turns a series in −Q² into the corresponding series in tQ².
    pub fn substitute_knight(&self) -> Result<BiLaurentPoly, LaurentError> {
        let mut out = BiLaurentPoly::zero();
        for (&e, c) in &self.terms {
            if e % 2 != 0 {
                return Err(LaurentError::OddExponent(e));
            }
            let k = e / 2;
            let c = if k.rem_euclid(2) == 1 { -c.clone() } else { c.clone() };
            out.add_term(k, e, c);
        }
        Ok(out)
    }

    /// Floating-point evaluation. For spot numeric checks only: large
    /// coefficients are rounded to the nearest `f64` before summation, so
    /// the result carries ordinary double-precision error.
    pub fn eval_f64(&self, x: f64) -> Result<f64, LaurentError> {
        if x == 0.0 && self.min_deg().is_some_and(|m| m < 0) {
            return Err(LaurentError::ZeroWithNegativeExponent);
        }
        let mut acc = 0.0;
        for (&e, c) in &self.terms {
            let cf = c.to_f64().unwrap_or(f64::NAN);
            acc += cf * x.powi(e as i32);
        }
        Ok(acc)
    }

    /// JSON form `{"var":…,"terms":[[exp,"coeff"],…]}` with coefficients as
    /// decimal strings (they exceed 64-bit range for large inputs).
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "var": self.var.symbol(),
            "terms": self
                .terms
                .iter()
                .map(|(&e, c)| json!([e, c.to_string()]))
                .collect::<Vec<_>>(),
        })
    }
}

/// Shared ascending-division core for sparse exponent maps.
///
/// Requires `den` nonempty. Exactness is detected, not assumed: the quotient
/// exponent may never exceed `max(num) − max(den)`, and every coefficient
/// division must leave zero remainder.
fn div_ascending(
    num: &BTreeMap<i64, BigInt>,
    den: &BTreeMap<i64, BigInt>,
) -> Result<BTreeMap<i64, BigInt>, LaurentError> {
    let (&dlo, dc) = den.iter().next().expect("nonzero divisor");
    let qmax = num.keys().next_back().unwrap() - den.keys().next_back().unwrap();
    let mut rem = num.clone();
    let mut quot = BTreeMap::new();
    while let Some((&rlo, rc)) = rem.first_key_value() {
        let qe = rlo - dlo;
        if qe > qmax {
            return Err(LaurentError::NonExactDivision);
        }
        let (qc, r) = (rc / dc, rc % dc);
        if !r.is_zero() {
            return Err(LaurentError::NonExactDivision);
        }
        for (&e, c) in den {
            let key = qe + e;
            let entry = rem.entry(key).or_insert_with(BigInt::zero);
            *entry -= &qc * c;
            if entry.is_zero() {
                rem.remove(&key);
            }
        }
        quot.insert(qe, qc);
    }
    Ok(quot)
}

impl fmt::Display for LaurentPoly {
    /// Ascending-exponent rendering, e.g. `t^-2 - t^-1 + 1 - t + t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&e, c) in &self.terms {
            write_term(f, &mut first, c, &monomial_str(self.var.symbol(), e))?;
        }
        Ok(())
    }
}

fn monomial_str(sym: &str, e: i64) -> String {
    match e {
        0 => String::new(),
        1 => sym.to_string(),
        _ => format!("{sym}^{e}"),
    }
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: &mut bool,
    c: &BigInt,
    mono: &str,
) -> fmt::Result {
    let neg = c.is_negative();
    if *first {
        if neg {
            f.write_str("-")?;
        }
        *first = false;
    } else {
        f.write_str(if neg { " - " } else { " + " })?;
    }
    let mag = c.magnitude();
    if mono.is_empty() {
        write!(f, "{mag}")
    } else if mag == &1u32.into() {
        f.write_str(mono)
    } else {
        write!(f, "{mag}*{mono}")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $ty:ty, $imp:ident) => {
        impl $trait<&$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                self.$imp(rhs).expect("operands share a variable")
            }
        }
        impl $trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, LaurentPoly, try_add);
forward_binop!(Sub, sub, LaurentPoly, try_sub);
forward_binop!(Mul, mul, LaurentPoly, try_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Laurent polynomial in the pair (t, Q) with [`BigInt`] coefficients.
///
/// Terms are keyed by `(i, j)` = (t-exponent, Q-exponent). Canonical form
/// as for the univariate case: no stored zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiLaurentPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BiLaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(i: i64, j: i64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c.into());
        p
    }

    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (i, j, c) in iter {
            p.add_term(i, j, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: i64, j: i64) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// All nonzero terms as `((i, j), coeff)`, ordered by (i, j).
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    fn add_term(&mut self, i: i64, j: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((i, j)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiplication by `t^di · Q^dj`.
    pub fn shift(&self, di: i64, dj: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + di, j + dj), c.clone()))
                .collect(),
        }
    }

    /// Evaluation at t = −1, collapsing to a univariate polynomial in Q.
    pub fn eval_t_neg1(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero(Var::CapQ);
        for (&(i, j), c) in &self.terms {
            let c = if i.rem_euclid(2) == 1 { -c.clone() } else { c.clone() };
            out.add_term(j, c);
        }
        out
    }

    /// Exact quotient by the knight-move factor `Q⁻¹ + tQ³`.
    ///
    /// Since `Q⁻¹ + tQ³ = Q⁻¹(1 + tQ⁴)` and multiplication by `tQ⁴`
    /// preserves `j − 4i`, the ring splits along those classes and each
    /// class divides independently by `1 + m` in the single variable
    /// `m = tQ⁴`.
    pub fn exact_div_knight_factor(&self) -> Result<Self, LaurentError> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let shifted = self.shift(0, 1); // cancel the Q^{-1}
        let mut classes: BTreeMap<i64, BTreeMap<i64, BigInt>> = BTreeMap::new();
        for (&(i, j), c) in &shifted.terms {
            classes.entry(j - 4 * i).or_default().insert(i, c.clone());
        }
        let one_plus_m: BTreeMap<i64, BigInt> =
            [(0, BigInt::from(1)), (1, BigInt::from(1))].into_iter().collect();
        let mut out = Self::zero();
        for (s, class) in classes {
            for (a, c) in div_ascending(&class, &one_plus_m)? {
                out.add_term(a, 4 * a + s, c);
            }
        }
        Ok(out)
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, if negate { -c.clone() } else { c.clone() });
        }
        out
    }

    fn mul_impl(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Add<&BiLaurentPoly> for &BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn add(self, rhs: &BiLaurentPoly) -> BiLaurentPoly {
        self.add_impl(rhs, false)
    }
}

impl Sub<&BiLaurentPoly> for &BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn sub(self, rhs: &BiLaurentPoly) -> BiLaurentPoly {
        self.add_impl(rhs, true)
    }
}

impl Mul<&BiLaurentPoly> for &BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn mul(self, rhs: &BiLaurentPoly) -> BiLaurentPoly {
        self.mul_impl(rhs)
    }
}

impl fmt::Display for BiLaurentPoly {
    /// Terms ordered by (t-exponent, Q-exponent), e.g.
    /// `t^-2*Q^-5 + t^-1*Q^-1 + Q^-1 + Q + t*Q + t^2*Q^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(i, j), c) in &self.terms {
            let ti = monomial_str("t", i);
            let qj = monomial_str("Q", j);
            let mono = match (ti.is_empty(), qj.is_empty()) {
                (true, true) => String::new(),
                (false, true) => ti,
                (true, false) => qj,
                (false, false) => format!("{ti}*{qj}"),
            };
            write_term(f, &mut first, c, &mono)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Var::Q, terms.iter().copied())
    }

    fn t(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Var::T, terms.iter().copied())
    }

    fn cq(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Var::CapQ, terms.iter().copied())
    }

    #[test]
    fn add_additive_inverse() {
        let a = q(&[(1, 1), (0, -1)]); // q - 1
        let b = q(&[(0, 1), (1, -1)]); // 1 - q
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn add_identity() {
        let a = q(&[(3, 1)]);
        assert_eq!(&LaurentPoly::zero(Var::Q) + &a, a);
    }

    #[test]
    fn add_expanded() {
        // q(q-1)^2 + (-q(q-1)) = q^3 - 3q^2 + 2q
        let qm1 = q(&[(1, 1), (0, -1)]);
        let lhs = &(&q(&[(1, 1)]) * &(&qm1 * &qm1)) + &(-&(&q(&[(1, 1)]) * &qm1));
        assert_eq!(lhs, q(&[(3, 1), (2, -3), (1, 2)]));
    }

    #[test]
    fn mul_square_binomial() {
        let a = q(&[(1, 1), (0, -1)]);
        assert_eq!(&a * &a, q(&[(2, 1), (1, -2), (0, 1)]));
    }

    #[test]
    fn mul_laurent_inverse() {
        assert_eq!(&t(&[(-1, 1)]) * &t(&[(1, 1)]), t(&[(0, 1)]));
    }

    #[test]
    fn mul_cube_matches_sign() {
        // (1-q)^3 = -(q-1)^3
        let one_minus_q = q(&[(0, 1), (1, -1)]);
        let qm1 = q(&[(1, 1), (0, -1)]);
        assert_eq!(one_minus_q.pow(3), -qm1.pow(3));
    }

    #[test]
    fn variable_mismatch_rejected() {
        let a = q(&[(0, 1)]);
        let b = t(&[(0, 1)]);
        assert_eq!(
            a.try_add(&b),
            Err(LaurentError::VariableMismatch(Var::Q, Var::T))
        );
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn shift_examples() {
        assert_eq!(LaurentPoly::one(Var::T).shift(-2), t(&[(-2, 1)]));
        assert_eq!(t(&[(2, 1), (1, -1)]).shift(3), t(&[(5, 1), (4, -1)]));
        let p = q(&[(1, 1), (0, 1)]);
        assert_eq!(p.shift(0), p);
    }

    #[test]
    fn exact_div_figure8_numerator() {
        // (Q^-4 - Q^-2 - Q^2 + Q^4) / (1 - Q^2) = Q^-4 - Q^2
        let num = cq(&[(-4, 1), (-2, -1), (2, -1), (4, 1)]);
        let den = cq(&[(0, 1), (2, -1)]);
        assert_eq!(num.exact_div(&den).unwrap(), cq(&[(-4, 1), (2, -1)]));
    }

    #[test]
    fn exact_div_zero_and_difference_of_squares() {
        let den = cq(&[(0, 1), (2, -1)]);
        assert!(LaurentPoly::zero(Var::CapQ).exact_div(&den).unwrap().is_zero());
        let num = cq(&[(0, 1), (4, -1)]);
        assert_eq!(num.exact_div(&den).unwrap(), cq(&[(0, 1), (2, 1)]));
    }

    #[test]
    fn exact_div_detects_remainder() {
        let den = cq(&[(0, 1), (2, -1)]);
        let num = cq(&[(0, 1), (3, 1)]); // odd power, not divisible
        assert_eq!(num.exact_div(&den), Err(LaurentError::NonExactDivision));
        let num2 = cq(&[(0, 1), (2, 1)]); // 1 + Q^2, not divisible by 1 - Q^2
        assert_eq!(num2.exact_div(&den), Err(LaurentError::NonExactDivision));
    }

    #[test]
    fn substitute_knight_examples() {
        // Q^-4 - Q^2  ->  t^-2 Q^-4 + t Q^2
        let p = cq(&[(-4, 1), (2, -1)]);
        let b = p.substitute_knight().unwrap();
        assert_eq!(b, BiLaurentPoly::from_terms([(-2, -4, 1), (1, 2, 1)]));
        assert!(LaurentPoly::zero(Var::CapQ)
            .substitute_knight()
            .unwrap()
            .is_zero());
        // Q^6 -> -t^3 Q^6
        let p = cq(&[(6, 1)]);
        assert_eq!(
            p.substitute_knight().unwrap(),
            BiLaurentPoly::from_terms([(3, 6, -1)])
        );
        assert_eq!(
            cq(&[(3, 1)]).substitute_knight(),
            Err(LaurentError::OddExponent(3))
        );
    }

    #[test]
    fn substitute_knight_recovers_input_at_t_neg1() {
        let p = cq(&[(-4, 3), (-2, -7), (0, 2), (6, 5)]);
        let b = p.substitute_knight().unwrap();
        assert_eq!(b.eval_t_neg1(), p);
    }

    #[test]
    fn eval_examples() {
        let v = t(&[(2, 1), (1, -1), (0, 1), (-1, -1), (-2, 1)]);
        assert_eq!(v.eval_f64(1.0).unwrap(), 1.0);
        assert_eq!(LaurentPoly::zero(Var::T).eval_f64(5.0).unwrap(), 0.0);
        assert_eq!(q(&[(1, 1)]).eval_f64(2.0).unwrap(), 2.0);
        assert_eq!(
            t(&[(-1, 1)]).eval_f64(0.0),
            Err(LaurentError::ZeroWithNegativeExponent)
        );
    }

    #[test]
    fn display_matches_expected_layout() {
        let v = t(&[(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)]);
        assert_eq!(v.to_string(), "t^-2 - t^-1 + 1 - t + t^2");
        assert_eq!(LaurentPoly::zero(Var::Q).to_string(), "0");
        assert_eq!(q(&[(3, 1), (2, -3), (1, 2)]).to_string(), "2*q - 3*q^2 + q^3");
        let kh = BiLaurentPoly::from_terms([
            (-2, -5, 1),
            (-1, -1, 1),
            (0, -1, 1),
            (0, 1, 1),
            (1, 1, 1),
            (2, 5, 1),
        ]);
        assert_eq!(
            kh.to_string(),
            "t^-2*Q^-5 + t^-1*Q^-1 + Q^-1 + Q + t*Q + t^2*Q^5"
        );
    }

    #[test]
    fn json_form() {
        let v = t(&[(-1, -12), (2, 1)]);
        let j = v.to_json();
        assert_eq!(j["var"], "t");
        assert_eq!(j["terms"][0][0], -1);
        assert_eq!(j["terms"][0][1], "-12");
        assert_eq!(j["terms"][1][0], 2);
        assert_eq!(j["terms"][1][1], "1");
    }

    #[test]
    fn knight_factor_division_roundtrip() {
        let khp = BiLaurentPoly::from_terms([(-2, -4, 1), (1, 2, 1)]);
        let factor = BiLaurentPoly::from_terms([(0, -1, 1), (1, 3, 1)]);
        let prod = &factor * &khp;
        assert_eq!(prod.exact_div_knight_factor().unwrap(), khp);
        // a polynomial not divisible by the factor
        let bad = BiLaurentPoly::monomial(0, 0, 1);
        assert!(bad.exact_div_knight_factor().is_err());
    }
}
