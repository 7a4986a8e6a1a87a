//! Exact computation of knot invariants for weaving knots.
//!
//! The weaving knot W(p,q) is the alternating knot obtained from the torus
//! knot T(p,q) by making its standard braid diagram alternating; it is the
//! closure of the braid (σ₁ σ₂⁻¹ ⋯ σ_{p−1}^{±1})^q.
//!
//! For W(3,n) this crate computes, in exact big-integer arithmetic:
//!
//! * the six coefficient polynomials of the braid's image in the Hecke
//!   algebra H₃, by recursion ([`hecke`]);
//! * the one-variable Jones polynomial V_{W(3,n)}(t) from those
//!   coefficients, with an independent Kauffman-bracket state-sum oracle
//!   for small braids ([`jones`]);
//! * the bigraded Khovanov rank table, derived from the Jones polynomial
//!   and the signature — exact for alternating knots ([`khovanov`]);
//! * Gaussian fits to the normalized Betti numbers along the support line
//!   j = 2i+1, with L¹/L² deviation statistics ([`gaussfit`]).
//!
//! Signatures of general weaving links W(p,q) are computed combinatorially
//! from the all-A smoothing of the standard diagram ([`diagram`]).
//!
//! All polynomial arithmetic is exact ([`laurent`]); floating point enters
//! only in the fit stage.

pub mod diagram;
pub mod gaussfit;
pub mod hecke;
pub mod jones;
pub mod khovanov;
pub mod laurent;

pub use diagram::{
    signature_alternating, signature_closed_form, smooth_stats, weaving_braid, BraidWord,
    SmoothingStats,
};
pub use gaussfit::{fit_quadratic, normalize, GaussianFit, NormalizedBetti};
pub use hecke::{coeffs, hecke_mul, initial_coeffs, verify_row, HeckeCoeffs, HeckeElementH3};
pub use jones::{jones_w3, kauffman_oracle, trace_h3, JonesResult};
pub use khovanov::{kh_poly, kh_prime, khovanov_w3, KhovanovTable};
pub use laurent::{BiLaurentPoly, LaurentError, LaurentPoly, Var};
