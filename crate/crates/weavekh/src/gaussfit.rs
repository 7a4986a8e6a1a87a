//! Gaussian fits to the normalized Betti numbers along j = 2i + 1.
//!
//! The line of ranks is normalized to a probability mass function d_i by
//! dividing by the exact total, a quadratic q_n(x) = −(αx² − βx + δ) is
//! fit by ordinary least squares to the logarithms ln d_i over the nonzero
//! positions, and the exponentiated fit is normalized into the density
//! ρ_n(x) = A_n·e^{q_n(x)} with
//!
//! ```text
//! A_n = exp(−(β²/4α − δ))·√(α/π),   μ_n = β/2α,   σ_n = 1/√(2α).
//! ```
//!
//! Deviations against the data are summed over the fixed integer window
//! i = −2n … 2n+1 (zero mass where no rank is stored):
//! L² = √Σ(ρ_n(i) − d_i)² and L¹ = Σ|ρ_n(i) − d_i|.
//!
//! Logs are taken as ln(rank) − ln(total) with a mantissa/exponent split,
//! so ranks far beyond f64 range lose no precision; the constant offset of
//! the data affects only δ, which cancels out of ρ_n entirely.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde_json::json;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FitError {
    #[error("empty Betti line")]
    EmptyLine,
    #[error("zero rank at i = {0}; logarithms need strictly positive ranks")]
    ZeroRank(i64),
    #[error("degenerate quadratic fit: {0}")]
    DegenerateFit(&'static str),
}

/// Betti line normalized to unit mass, with the exact total retained.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalizedBetti {
    pub n: u32,
    /// Exact integer total of the line.
    pub total: BigUint,
    /// (i, rank/total) in floating point, ascending in i.
    pub points: Vec<(i64, f64)>,
    /// (i, ln(rank) − ln(total)), the fit inputs.
    pub log_points: Vec<(i64, f64)>,
}

/// Fitted density parameters for one n.
#[derive(Clone, Debug, PartialEq)]
pub struct GaussianFit {
    pub n: u32,
    pub alpha: f64,
    pub beta: f64,
    pub delta: f64,
    pub mu: f64,
    pub sigma: f64,
    pub a_n: f64,
    /// L² deviation over i = −2n … 2n+1; NaN until deviations are computed.
    pub l2: f64,
    /// L¹ deviation over the same window; NaN until computed.
    pub l1: f64,
    /// The (i, ln d_i) pairs the quadratic was fit to.
    pub fit_points: Vec<(i64, f64)>,
}

/// Natural log of a positive big integer via its top 53 bits.
pub fn ln_big(x: &BigUint) -> f64 {
    assert!(!x.is_zero(), "ln of zero");
    let bits = x.bits();
    if bits <= 53 {
        x.to_f64().unwrap().ln()
    } else {
        let shift = bits - 53;
        let hi = (x >> shift).to_f64().unwrap();
        hi.ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// num/den as f64 from the top 64 bits of each, exact to ~1 ulp even when
/// both operands are far beyond f64 range.
pub fn ratio_f64(num: &BigUint, den: &BigUint) -> f64 {
    assert!(!den.is_zero(), "zero denominator");
    if num.is_zero() {
        return 0.0;
    }
    let nb = num.bits();
    let db = den.bits();
    let hi = |x: &BigUint, b: u64| -> f64 {
        if b <= 64 {
            x.to_f64().unwrap()
        } else {
            (x >> (b - 64)).to_f64().unwrap()
        }
    };
    // num ≈ hi(num)·2^{nb−min(nb,64)}, likewise for den
    let scale = (nb as i64 - nb.min(64) as i64) - (db as i64 - db.min(64) as i64);
    (hi(num, nb) / hi(den, db)) * (scale as f64).exp2()
}

/// Normalize a Betti line to unit mass. All ranks must be positive.
pub fn normalize(n: u32, line: &[(i64, BigUint)]) -> Result<NormalizedBetti, FitError> {
    if line.is_empty() {
        return Err(FitError::EmptyLine);
    }
    for (i, r) in line {
        if r.is_zero() {
            return Err(FitError::ZeroRank(*i));
        }
    }
    let total: BigUint = line.iter().map(|(_, r)| r).sum();
    let ln_total = ln_big(&total);
    let points = line
        .iter()
        .map(|(i, r)| (*i, ratio_f64(r, &total)))
        .collect();
    let log_points = line
        .iter()
        .map(|(i, r)| (*i, ln_big(r) - ln_total))
        .collect();
    Ok(NormalizedBetti {
        n,
        total,
        points,
        log_points,
    })
}

/// Ordinary least-squares fit of c₀ + c₁x + c₂x² to the points.
///
/// The x-values are centered at their mean before the 3×3 normal equations
/// are solved, then the coefficients are shifted back; with the symmetric
/// integer abscissas used here that keeps the system essentially diagonal.
pub fn quad_fit(points: &[(f64, f64)]) -> Result<(f64, f64, f64), FitError> {
    if points.len() < 3 {
        return Err(FitError::DegenerateFit("need at least 3 points"));
    }
    let m = points.len() as f64;
    let xbar = points.iter().map(|p| p.0).sum::<f64>() / m;
    let (mut s1, mut s2, mut s3, mut s4) = (0.0, 0.0, 0.0, 0.0);
    let (mut t0, mut t1, mut t2) = (0.0, 0.0, 0.0);
    for &(x, y) in points {
        let u = x - xbar;
        let u2 = u * u;
        s1 += u;
        s2 += u2;
        s3 += u2 * u;
        s4 += u2 * u2;
        t0 += y;
        t1 += u * y;
        t2 += u2 * y;
    }
    let a = solve3(
        [[m, s1, s2], [s1, s2, s3], [s2, s3, s4]],
        [t0, t1, t2],
    )
    .ok_or(FitError::DegenerateFit("singular normal equations"))?;
    // shift back: p(x) = a0 + a1(x-xbar) + a2(x-xbar)^2
    let c2 = a[2];
    let c1 = a[1] - 2.0 * a[2] * xbar;
    let c0 = a[0] - a[1] * xbar + a[2] * xbar * xbar;
    Ok((c0, c1, c2))
}

fn solve3(mut m: [[f64; 3]; 3], mut b: [f64; 3]) -> Option<[f64; 3]> {
    for col in 0..3 {
        let pivot = (col..3)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .unwrap();
        if m[pivot][col].abs() < 1e-300 {
            return None;
        }
        m.swap(col, pivot);
        b.swap(col, pivot);
        for row in (col + 1)..3 {
            let f = m[row][col] / m[col][col];
            let pivot_row = m[col];
            for (entry, pv) in m[row].iter_mut().zip(pivot_row.iter()).skip(col) {
                *entry -= f * pv;
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = [0.0; 3];
    for row in (0..3).rev() {
        let mut acc = b[row];
        for k in (row + 1)..3 {
            acc -= m[row][k] * x[k];
        }
        x[row] = acc / m[row][row];
    }
    Some(x)
}

/// Fit the quadratic to the log points and extract the density parameters.
/// The returned fit has `l2`/`l1` unset (NaN); see [`deviations`].
pub fn fit_quadratic(nb: &NormalizedBetti) -> Result<GaussianFit, FitError> {
    let pts: Vec<(f64, f64)> = nb
        .log_points
        .iter()
        .map(|&(i, y)| (i as f64, y))
        .collect();
    if pts.len() < 3 {
        return Err(FitError::DegenerateFit("need at least 3 points"));
    }
    // constant data (e.g. the three unit ranks of n = 2) has no curvature;
    // the solver would return a round-off-sign c2, so reject it up front
    let ymin = pts.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let ymax = pts.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    if ymax - ymin < 1e-13 {
        return Err(FitError::DegenerateFit("constant log-rank data"));
    }
    let (c0, c1, c2) = quad_fit(&pts)?;
    let alpha = -c2;
    if alpha.is_nan() || alpha <= 0.0 {
        return Err(FitError::DegenerateFit("fit is not concave down"));
    }
    let beta = c1;
    let delta = -c0;
    let mu = beta / (2.0 * alpha);
    let sigma = 1.0 / (2.0 * alpha).sqrt();
    let a_n = (-(beta * beta / (4.0 * alpha) - delta)).exp() * (alpha / std::f64::consts::PI).sqrt();
    Ok(GaussianFit {
        n: nb.n,
        alpha,
        beta,
        delta,
        mu,
        sigma,
        a_n,
        l2: f64::NAN,
        l1: f64::NAN,
        fit_points: nb.log_points.clone(),
    })
}

/// ρ_n(x) = A_n·exp(−(αx² − βx + δ)).
pub fn density(fit: &GaussianFit, x: f64) -> f64 {
    fit.a_n * (-(fit.alpha * x * x - fit.beta * x + fit.delta)).exp()
}

/// (L², L¹) over the window i = −2n … 2n+1, with d_i = 0 off the support.
pub fn deviations(fit: &GaussianFit, nb: &NormalizedBetti) -> (f64, f64) {
    let data: std::collections::BTreeMap<i64, f64> = nb.points.iter().cloned().collect();
    let n = nb.n as i64;
    let mut sq = 0.0;
    let mut abs = 0.0;
    for i in -2 * n..=2 * n + 1 {
        let d = data.get(&i).copied().unwrap_or(0.0);
        let diff = density(fit, i as f64) - d;
        sq += diff * diff;
        abs += diff.abs();
    }
    (sq.sqrt(), abs)
}

/// Normalize, fit, and fill in the deviation columns in one call.
pub fn analyze_line(n: u32, line: &[(i64, BigUint)]) -> Result<(NormalizedBetti, GaussianFit), FitError> {
    let nb = normalize(n, line)?;
    let mut fit = fit_quadratic(&nb)?;
    let (l2, l1) = deviations(&fit, &nb);
    fit.l2 = l2;
    fit.l1 = l1;
    Ok((nb, fit))
}

/// Simpson quadrature of ρ_n over [μ − 12σ, μ + 12σ]; the tail mass beyond
/// is ~1e−33 of the total.
pub fn density_integral(fit: &GaussianFit) -> f64 {
    let a = fit.mu - 12.0 * fit.sigma;
    let b = fit.mu + 12.0 * fit.sigma;
    let steps = 20_000usize; // even
    let h = (b - a) / steps as f64;
    let mut acc = density(fit, a) + density(fit, b);
    for k in 1..steps {
        let w = if k % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * density(fit, a + k as f64 * h);
    }
    acc * h / 3.0
}

/// 6-significant-digit scientific rendering of a big integer, matching the
/// mixed table format for values past 64-bit range: `sci6(151272…) =
/// "1.51272e20"`. Rounds half-up on the seventh digit.
pub fn sci6(x: &BigUint) -> String {
    if x.is_zero() {
        return "0.00000e0".to_string();
    }
    let s = x.to_string();
    let mut exp = s.len() as i64 - 1;
    let mut digits: Vec<u64> = s.bytes().take(7).map(|b| (b - b'0') as u64).collect();
    while digits.len() < 7 {
        digits.push(0);
    }
    let mut m = digits.iter().fold(0u64, |acc, &d| acc * 10 + d);
    m = (m + 5) / 10;
    if m == 1_000_000 {
        m /= 10;
        exp += 1;
    }
    let ms = format!("{m:06}");
    format!("{}.{}e{}", &ms[..1], &ms[1..], exp)
}

/// JSON mirror of [`GaussianFit`].
pub fn fit_to_json(fit: &GaussianFit, total: &BigUint) -> serde_json::Value {
    json!({
        "n": fit.n,
        "alpha": fit.alpha,
        "beta": fit.beta,
        "delta": fit.delta,
        "mu": fit.mu,
        "sigma": fit.sigma,
        "a_n": fit.a_n,
        "l2": fit.l2,
        "l1": fit.l1,
        "total": total.to_string(),
        "fit_points": fit
            .fit_points
            .iter()
            .map(|(i, y)| json!([i, y]))
            .collect::<Vec<_>>(),
    })
}
