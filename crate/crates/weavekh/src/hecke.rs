//! Coefficients of the braid power (T₁T₂⁻¹)ⁿ in the Hecke algebra H₃.
//!
//! H₃ is the associative algebra on generators T₁, T₂ with the braid
//! relation T₁T₂T₁ = T₂T₁T₂ and the quadratic relation Tᵢ² = (q−1)Tᵢ + q;
//! it is six-dimensional with ordered basis {1, T₁, T₂, T₁T₂, T₂T₁, T₁T₂T₁}.
//!
//! Writing ρ((T₁T₂⁻¹)ⁿ) = q⁻ⁿ(C_{n,0} + C_{n,1}T₁ + C_{n,2}T₂ +
//! C_{n,12}T₁T₂ + C_{n,21}T₂T₁ + C_{n,121}T₁T₂T₁), the coefficient
//! polynomials satisfy a first-order recursion in n ([`HeckeCoeffs::step`]).
//! The prefactor q⁻ⁿ is kept implicit (only n is stored) so all arithmetic
//! stays in the polynomial ring.
//!
//! [`hecke_mul`] multiplies arbitrary H₃ elements by reducing basis-word
//! products with the defining relations; it is independent of the recursion
//! and serves as its oracle ([`verify_row`]).

use std::sync::OnceLock;

use serde_json::json;

use crate::laurent::{LaurentPoly, Var};

/// Coefficient row of ρ((T₁T₂⁻¹)ⁿ) in the ordered basis, without the
/// implicit q⁻ⁿ prefactor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeCoeffs {
    n: u32,
    c0: LaurentPoly,
    c1: LaurentPoly,
    c2: LaurentPoly,
    c12: LaurentPoly,
    c21: LaurentPoly,
    c121: LaurentPoly,
}

impl HeckeCoeffs {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn c0(&self) -> &LaurentPoly {
        &self.c0
    }

    pub fn c1(&self) -> &LaurentPoly {
        &self.c1
    }

    pub fn c2(&self) -> &LaurentPoly {
        &self.c2
    }

    pub fn c12(&self) -> &LaurentPoly {
        &self.c12
    }

    pub fn c21(&self) -> &LaurentPoly {
        &self.c21
    }

    pub fn c121(&self) -> &LaurentPoly {
        &self.c121
    }

    /// The six coefficients in basis order.
    pub fn as_array(&self) -> [&LaurentPoly; 6] {
        [&self.c0, &self.c1, &self.c2, &self.c12, &self.c21, &self.c121]
    }

    /// Advance the recursion one step, from the row for n to the row for
    /// n+1:
    ///
    /// ```text
    /// C_{n,0}   = q²·C_{n−1,21} − q(q−1)·C_{n−1,1}
    /// C_{n,1}   = −(q−1)²·C_{n−1,1} − (q−1)·C_{n−1,0} + q²·C_{n−1,121}
    /// C_{n,2}   = q·C_{n−1,1}
    /// C_{n,12}  = (q−1)·C_{n−1,1} + C_{n−1,0}
    /// C_{n,21}  = −(q−1)·C_{n−1,2} + q·C_{n−1,12} − (q−1)²·C_{n−1,21}
    ///             + q(q−1)·C_{n−1,121}
    /// C_{n,121} = C_{n−1,2} + (q−1)·C_{n−1,21}
    /// ```
    ///
    /// C_{n,121} vanishes identically; it is computed and asserted zero
    /// rather than hard-coded, as a free regression check on the recursion.
    pub fn step(&self) -> HeckeCoeffs {
        let q = LaurentPoly::monomial(Var::Q, 1, 1);
        let qm1 = LaurentPoly::from_terms(Var::Q, [(1, 1), (0, -1)]);
        let q2 = &q * &q;
        let qm1_sq = &qm1 * &qm1;
        let q_qm1 = &q * &qm1;

        let c0 = &(&q2 * &self.c21) - &(&q_qm1 * &self.c1);
        let c1 = &(&(-&(&qm1_sq * &self.c1)) - &(&qm1 * &self.c0)) + &(&q2 * &self.c121);
        let c2 = &q * &self.c1;
        let c12 = &(&qm1 * &self.c1) + &self.c0;
        let c21 = &(&(&(-&(&qm1 * &self.c2)) + &(&q * &self.c12)) - &(&qm1_sq * &self.c21))
            + &(&q_qm1 * &self.c121);
        let c121 = &self.c2 + &(&qm1 * &self.c21);
        assert!(
            c121.is_zero(),
            "C_{{n,121}} must vanish for all n (failed at n = {})",
            self.n + 1
        );

        HeckeCoeffs {
            n: self.n + 1,
            c0,
            c1,
            c2,
            c12,
            c21,
            c121,
        }
    }

    /// JSON row `{"n":…,"C0":…,…}` using the polynomial JSON form.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "C0": self.c0.to_json(),
            "C1": self.c1.to_json(),
            "C2": self.c2.to_json(),
            "C12": self.c12.to_json(),
            "C21": self.c21.to_json(),
            "C121": self.c121.to_json(),
        })
    }
}

/// The n = 1 row: T₁T₂⁻¹ = q⁻¹(−(q−1)·T₁ + T₁T₂).
pub fn initial_coeffs() -> HeckeCoeffs {
    HeckeCoeffs {
        n: 1,
        c0: LaurentPoly::zero(Var::Q),
        c1: LaurentPoly::from_terms(Var::Q, [(0, 1), (1, -1)]),
        c2: LaurentPoly::zero(Var::Q),
        c12: LaurentPoly::one(Var::Q),
        c21: LaurentPoly::zero(Var::Q),
        c121: LaurentPoly::zero(Var::Q),
    }
}

/// The n-th row, by iterating [`HeckeCoeffs::step`] from the initial row.
pub fn coeffs(n: u32) -> HeckeCoeffs {
    assert!(n >= 1, "coeffs requires n >= 1");
    let mut row = initial_coeffs();
    for _ in 1..n {
        row = row.step();
    }
    row
}

/// Streams the rows for n = 1, 2, 3, … — table generation wants every
/// intermediate row, and the iteration is inherently sequential in n.
pub fn rows() -> impl Iterator<Item = HeckeCoeffs> {
    let mut next = Some(initial_coeffs());
    std::iter::from_fn(move || {
        let current = next.take()?;
        next = Some(current.step());
        Some(current)
    })
}

/// A general element of H₃ over the polynomial ring, in the ordered basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElementH3 {
    coeffs: [LaurentPoly; 6],
}

/// Basis words over the generator alphabet {1, 2}.
const BASIS_WORDS: [&[u8]; 6] = [&[], &[1], &[2], &[1, 2], &[2, 1], &[1, 2, 1]];

impl HeckeElementH3 {
    pub fn zero() -> Self {
        Self {
            coeffs: std::array::from_fn(|_| LaurentPoly::zero(Var::Q)),
        }
    }

    pub fn unit() -> Self {
        Self::basis(0)
    }

    /// The k-th ordered basis element (0:1, 1:T₁, 2:T₂, 3:T₁T₂, 4:T₂T₁,
    /// 5:T₁T₂T₁).
    pub fn basis(k: usize) -> Self {
        let mut e = Self::zero();
        e.coeffs[k] = LaurentPoly::one(Var::Q);
        e
    }

    pub fn from_coeff_array(coeffs: [LaurentPoly; 6]) -> Self {
        for c in &coeffs {
            assert_eq!(c.var(), Var::Q, "H3 coefficients live in the q-ring");
        }
        Self { coeffs }
    }

    /// View a recursion row as the element Σ C_{n,*}·(basis), i.e.
    /// qⁿ·ρ((T₁T₂⁻¹)ⁿ).
    pub fn from_coeffs(row: &HeckeCoeffs) -> Self {
        let arr = row.as_array();
        Self {
            coeffs: std::array::from_fn(|k| arr[k].clone()),
        }
    }

    pub fn coeff(&self, k: usize) -> &LaurentPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[LaurentPoly; 6] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            coeffs: std::array::from_fn(|k| &self.coeffs[k] + &other.coeffs[k]),
        }
    }

    pub fn scale(&self, p: &LaurentPoly) -> Self {
        Self {
            coeffs: std::array::from_fn(|k| &self.coeffs[k] * p),
        }
    }

    /// The element −(q−1)·T₁ + T₁T₂ = q·ρ(σ₁σ₂⁻¹); its n-th power carries
    /// the coefficient row for (T₁T₂⁻¹)ⁿ with the prefactor cleared.
    pub fn scaled_braid_generator() -> Self {
        let mut e = Self::zero();
        e.coeffs[1] = LaurentPoly::from_terms(Var::Q, [(0, 1), (1, -1)]);
        e.coeffs[3] = LaurentPoly::one(Var::Q);
        e
    }
}

/// Reduce a word over {1, 2} to a linear combination of the six basis
/// elements using only the defining relations: Tᵢ² = (q−1)Tᵢ + q and
/// T₂T₁T₂ = T₁T₂T₁.
fn reduce_word(word: &[u8]) -> HeckeElementH3 {
    if let Some(k) = BASIS_WORDS.iter().position(|w| *w == word) {
        return HeckeElementH3::basis(k);
    }
    // squares first: u·Tᵢ²·v = (q−1)·u·Tᵢ·v + q·u·v
    for i in 0..word.len() - 1 {
        if word[i] == word[i + 1] {
            let mut keep_one: Vec<u8> = word[..i].to_vec();
            keep_one.extend_from_slice(&word[i + 1..]);
            let mut drop_both: Vec<u8> = word[..i].to_vec();
            drop_both.extend_from_slice(&word[i + 2..]);
            let qm1 = LaurentPoly::from_terms(Var::Q, [(1, 1), (0, -1)]);
            let q = LaurentPoly::monomial(Var::Q, 1, 1);
            return reduce_word(&keep_one)
                .scale(&qm1)
                .add(&reduce_word(&drop_both).scale(&q));
        }
    }
    // square-free words are alternating; rewrite the leftmost 212 -> 121
    for i in 0..word.len() - 2 {
        if word[i] == 2 && word[i + 1] == 1 && word[i + 2] == 2 {
            let mut rewritten = word.to_vec();
            rewritten[i] = 1;
            rewritten[i + 1] = 2;
            rewritten[i + 2] = 1;
            return reduce_word(&rewritten);
        }
    }
    unreachable!("irreducible non-basis word {word:?}")
}

/// 6×6 table of basis products, derived once from the relations.
fn basis_table() -> &'static Vec<HeckeElementH3> {
    static TABLE: OnceLock<Vec<HeckeElementH3>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = Vec::with_capacity(36);
        for left in BASIS_WORDS {
            for right in BASIS_WORDS {
                let mut word = left.to_vec();
                word.extend_from_slice(right);
                table.push(reduce_word(&word));
            }
        }
        table
    })
}

/// Product in H₃ by bilinear extension of the basis multiplication table.
pub fn hecke_mul(a: &HeckeElementH3, b: &HeckeElementH3) -> HeckeElementH3 {
    let table = basis_table();
    let mut out = HeckeElementH3::zero();
    for i in 0..6 {
        if a.coeffs[i].is_zero() {
            continue;
        }
        for j in 0..6 {
            if b.coeffs[j].is_zero() {
                continue;
            }
            let factor = &a.coeffs[i] * &b.coeffs[j];
            out = out.add(&table[i * 6 + j].scale(&factor));
        }
    }
    out
}

/// Cross-check of the recursion against direct multiplication: the n-th
/// power of −(q−1)T₁ + T₁T₂ must reproduce the coefficient row for n.
pub fn verify_row(n: u32) -> bool {
    assert!(n >= 1);
    let gen = HeckeElementH3::scaled_braid_generator();
    let mut power = gen.clone();
    for _ in 1..n {
        power = hecke_mul(&power, &gen);
    }
    power == HeckeElementH3::from_coeffs(&coeffs(n))
}
