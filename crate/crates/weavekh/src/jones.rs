//! The Jones polynomial of W(3,n) from the Hecke coefficient rows, plus an
//! independent Kauffman-bracket state-sum oracle for small braid closures.
//!
//! With the Ocneanu trace values Tr(1)=1, Tr(T₁)=Tr(T₂)=z,
//! Tr(T₁T₂)=Tr(T₂T₁)=z², Tr(T₁T₂T₁)=z((q−1)z+q) and the substitutions
//! q=t, z=t²/(1+t), the two-variable invariant collapses to
//!
//! ```text
//! V_{W(3,n)}(t) = t^{−n−1} · ( (1+t)²·C_{n,0}(t)
//!                 + (1+t)·(C_{n,1}(t)+C_{n,2}(t))·t²
//!                 + (C_{n,12}(t)+C_{n,21}(t))·t⁴ )
//! ```
//!
//! The assembly is pure polynomial multiplication plus one exponent shift —
//! no division ever occurs, so the result is a Laurent polynomial by
//! construction. The two-variable rational form is never materialized;
//! [`trace_h3`] exists to document and verify the trace values themselves.

use num_bigint::BigInt;
use serde_json::json;
use thiserror::Error;

use crate::diagram::{smooth_slice, BraidWord, UnionFind};
use crate::hecke::{coeffs, HeckeCoeffs, HeckeElementH3};
use crate::laurent::{LaurentPoly, Var};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JonesError {
    #[error("state enumeration over {crossings} crossings exceeds the limit of {max}")]
    TooManyCrossings { crossings: usize, max: usize },
    #[error("bracket produced exponent {0} not divisible by 4; inconsistent writhe or smoothing")]
    NonIntegerPower(i64),
}

/// The Jones polynomial of W(3,n) with its degree data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JonesResult {
    pub n: u32,
    pub v: LaurentPoly,
    pub min_deg: i64,
    pub max_deg: i64,
    pub span: i64,
    /// gcd(3,n) = 1; when false, the closure is a 3-component link and
    /// knot-only reasoning downstream must not be applied.
    pub is_knot: bool,
    /// Whether v(t) = v(1/t). Observed for all computed W(3,n); reported,
    /// never asserted.
    pub palindromic: bool,
}

impl JonesResult {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "jones": self.v.to_json(),
            "span": self.span,
            "min_deg": self.min_deg,
            "max_deg": self.max_deg,
        })
    }
}

/// Trace of a general H₃ element as a polynomial in z with q-polynomial
/// coefficients (index = power of z).
///
/// Linear extension of Tr(1)=1, Tr(T₁)=Tr(T₂)=z, Tr(T₁T₂)=Tr(T₂T₁)=z²,
/// Tr(T₁T₂T₁) = z((q−1)z + q).
pub fn trace_h3(e: &HeckeElementH3) -> [LaurentPoly; 3] {
    let q = LaurentPoly::monomial(Var::Q, 1, 1);
    let qm1 = LaurentPoly::from_terms(Var::Q, [(1, 1), (0, -1)]);
    let z0 = e.coeff(0).clone();
    let z1 = &(e.coeff(1) + e.coeff(2)) + &(&q * e.coeff(5));
    let z2 = &(e.coeff(3) + e.coeff(4)) + &(&qm1 * e.coeff(5));
    [z0, z1, z2]
}

/// Assemble V_{W(3,n)}(t) from a coefficient row (variable relabel q → t).
pub fn jones_from_row(row: &HeckeCoeffs) -> JonesResult {
    let n = row.n();
    let c0 = row.c0().with_var(Var::T);
    let c1 = row.c1().with_var(Var::T);
    let c2 = row.c2().with_var(Var::T);
    let c12 = row.c12().with_var(Var::T);
    let c21 = row.c21().with_var(Var::T);

    let one_plus_t = LaurentPoly::from_terms(Var::T, [(0, 1), (1, 1)]);
    let mut acc = &(&one_plus_t * &one_plus_t) * &c0;
    acc = &acc + &(&one_plus_t * &(&c1 + &c2)).shift(2);
    acc = &acc + &(&c12 + &c21).shift(4);
    // the global t^{-n-1} factor is an exponent shift, never a division
    let v = acc.shift(-(n as i64) - 1);

    let min_deg = v.min_deg().unwrap_or(0);
    let max_deg = v.max_deg().unwrap_or(0);
    JonesResult {
        n,
        min_deg,
        max_deg,
        span: max_deg - min_deg,
        is_knot: !n.is_multiple_of(3),
        palindromic: is_palindromic(&v),
        v,
    }
}

/// V_{W(3,n)}(t) from scratch (runs the recursion up to n).
pub fn jones_w3(n: u32) -> JonesResult {
    jones_from_row(&coeffs(n))
}

/// v(t) = v(1/t)?
pub fn is_palindromic(p: &LaurentPoly) -> bool {
    p.terms().all(|(e, c)| &p.coeff(-e) == c)
}

/// Hard cap on the 2^c state enumeration.
pub const MAX_ORACLE_CROSSINGS: usize = 24;

/// Jones polynomial of a braid closure by the Kauffman bracket state sum.
///
/// Every crossing is resolved A or B over all 2^c states; a state
/// contributes A^{#A−#B}·(−A²−A⁻²)^{loops−1}. The A-smoothing of a positive
/// letter is the identity pattern and of a negative letter the cap-cup
/// pattern (the same assignment the diagram module validates against the
/// closed-form circle counts). Writhe normalization f = (−A³)^{−w}·⟨L⟩ and
/// the substitution t = A⁻⁴ give V(t).
pub fn kauffman_oracle(word: &BraidWord) -> Result<LaurentPoly, JonesError> {
    let c = word.letters().len();
    if c > MAX_ORACLE_CROSSINGS {
        return Err(JonesError::TooManyCrossings {
            crossings: c,
            max: MAX_ORACLE_CROSSINGS,
        });
    }
    let strands = word.strands();
    let writhe = word.writhe();
    let max_loops = strands as usize + c;
    let delta_pows = delta_powers(max_loops);

    // bracket coefficients stay well inside i64 for c <= 24
    let mut bracket: std::collections::BTreeMap<i64, i64> = Default::default();
    for state in 0u32..(1 << c) {
        let mut uf = UnionFind::new(strands as usize * (c + 1));
        let mut a_minus_b = 0i64;
        for (t, l) in word.letters().iter().enumerate() {
            let use_a = (state >> t) & 1 == 0;
            a_minus_b += if use_a { 1 } else { -1 };
            let identity = l.positive == use_a;
            smooth_slice(&mut uf, strands, t, l.index, identity);
        }
        let node = |s: u32, t: usize| t as u32 * strands + (s - 1);
        for s in 1..=strands {
            uf.union(node(s, c), node(s, 0));
        }
        let loops = uf.count_roots();
        for (e, coeff) in &delta_pows[loops - 1] {
            *bracket.entry(a_minus_b + e).or_insert(0) += coeff;
        }
    }

    // f = (−A³)^{−w}·⟨L⟩, then t = A⁻⁴
    let sign = if writhe.rem_euclid(2) == 1 { -1i64 } else { 1 };
    let mut out = LaurentPoly::zero(Var::T);
    for (e, coeff) in bracket {
        if coeff == 0 {
            continue;
        }
        let shifted = e - 3 * writhe;
        if shifted % 4 != 0 {
            return Err(JonesError::NonIntegerPower(shifted));
        }
        out = &out + &LaurentPoly::monomial(Var::T, -shifted / 4, BigInt::from(sign * coeff));
    }
    Ok(out)
}

/// Powers of δ = −A² − A⁻² as exponent→coefficient vectors, δ⁰ … δ^max.
fn delta_powers(max: usize) -> Vec<Vec<(i64, i64)>> {
    let mut pows: Vec<Vec<(i64, i64)>> = vec![vec![(0, 1)]];
    for _ in 0..max {
        let prev = pows.last().unwrap();
        let mut next: std::collections::BTreeMap<i64, i64> = Default::default();
        for &(e, c) in prev {
            *next.entry(e + 2).or_insert(0) -= c;
            *next.entry(e - 2).or_insert(0) -= c;
        }
        pows.push(next.into_iter().collect());
    }
    pows
}
