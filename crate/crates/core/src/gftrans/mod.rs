//! Truncated generating functions and the closed forms that the sequence
//! transforms induce on them.
//!
//! A transformed sequence can be summed two ways: term by term from the
//! exact output of [`crate::seqcore`], or through a closed form built from
//! the generating function of the input. [`identity`] compares the two.

pub mod closed;
pub mod family;
pub mod identity;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{factorial_f64, rational_to_complex};
use crate::seqcore::Sequence;

pub use closed::*;
pub use family::{GeneratingFunctions, SequenceFamily};
pub use identity::{GfTransform, IdentityCheck, TransformedSeries};

/// Whether `coeffs[n]` is weighted by `x^n` or by `x^n / n!`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    Ordinary,
    Exponential,
}

/// `Σ_{n≤T} c_n x^n` (ordinary) or `Σ_{n≤T} c_n x^n / n!` (exponential).
///
/// The coefficients are always the sequence terms themselves; the kind
/// supplies the factorial weight.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
    kind: SeriesKind,
}

/// Truncated value plus a bound on the discarded tail.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalResult {
    pub value: Complex64,
    pub tail_bound: f64,
}

/// Growth model `|c_n| ≤ M ρ^n` used for tail bounds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Growth {
    pub m: f64,
    pub rho: f64,
}

impl Growth {
    pub fn new(m: f64, rho: f64) -> Self {
        Growth { m, rho }
    }
}

impl PowerSeries {
    /// Empty input is promoted to the zero series of order 0.
    pub fn new(coeffs: Vec<Complex64>, kind: SeriesKind) -> Self {
        let coeffs = if coeffs.is_empty() { vec![Complex64::zero()] } else { coeffs };
        PowerSeries { coeffs, kind }
    }

    pub fn from_real(coeffs: &[f64], kind: SeriesKind) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect(), kind)
    }

    pub fn from_sequence(a: &Sequence, kind: SeriesKind) -> Self {
        Self::new(a.terms().iter().map(rational_to_complex).collect(), kind)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    /// `T`, the highest retained power.
    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// Horner evaluation with a rigorous tail bound under `growth`.
///
/// Ordinary kind: tail `≤ M (ρ|x|)^{T+1} / (1 − ρ|x|)`, requires `ρ|x| < 1`.
/// Exponential kind: the smaller of the ratio bound
/// `M (ρ|x|)^{T+1} / (T+1)! / (1 − ρ|x|/(T+2))` (when `ρ|x| < T+2`) and the
/// Lagrange bound `M e^{ρ|x|} (ρ|x|)^{T+1} / (T+1)!`.
pub fn series_eval(s: &PowerSeries, x: Complex64, growth: Growth) -> Result<EvalResult> {
    let t = s.truncation_order();
    let value = match s.kind {
        SeriesKind::Ordinary => s.coeffs.iter().rev().fold(Complex64::zero(), |acc, &c| acc * x + c),
        SeriesKind::Exponential => {
            // nested form c_0 + x(c_1 + x/2 (c_2 + x/3 (...)))
            let mut acc = Complex64::zero();
            for n in (0..=t).rev() {
                acc = s.coeffs[n] + if n < t { acc * x / (n + 1) as f64 } else { Complex64::zero() };
            }
            acc
        }
    };
    let r = growth.rho * x.norm();
    let tail_bound = if growth.m == 0.0 || r == 0.0 {
        0.0
    } else {
        match s.kind {
            SeriesKind::Ordinary => {
                if r >= 1.0 {
                    return Err(Error::Divergence(format!(
                        "ordinary series needs rho*|x| < 1, got {r}"
                    )));
                }
                growth.m * r.powi(t as i32 + 1) / (1.0 - r)
            }
            SeriesKind::Exponential => {
                let lead = growth.m * (r.ln() * (t + 1) as f64 - ln_factorial(t + 1)).exp();
                let lagrange = lead * r.exp();
                let q = r / (t + 2) as f64;
                if q < 1.0 {
                    lagrange.min(lead / (1.0 - q))
                } else {
                    lagrange
                }
            }
        }
    };
    Ok(EvalResult { value, tail_bound })
}

fn ln_factorial(n: usize) -> f64 {
    if n <= 170 {
        factorial_f64(n).ln()
    } else {
        (1..=n).map(|k| (k as f64).ln()).sum()
    }
}

/// Termwise `r`-th derivative of the truncated polynomial, order `T − r`.
/// For `r > T` the result is the zero series.
pub fn series_derivative(s: &PowerSeries, r: usize) -> PowerSeries {
    let t = s.truncation_order();
    if r > t {
        return PowerSeries::new(vec![Complex64::zero()], s.kind);
    }
    let coeffs = match s.kind {
        SeriesKind::Ordinary => (0..=t - r)
            .map(|n| {
                let falling: f64 = (n + 1..=n + r).map(|j| j as f64).product();
                s.coeffs[n + r] * falling
            })
            .collect(),
        // differentiating Σ c_n x^n/n! just shifts the coefficients
        SeriesKind::Exponential => s.coeffs[r..].to_vec(),
    };
    PowerSeries::new(coeffs, s.kind)
}

/// Exact polynomial helpers for the Euler-operator identity
/// `(t d/dt)^n p = Σ_k S2(k,n) t^k p^{(k)}`.
pub mod euler {
    use super::*;
    use crate::specfun::Stirling2Table;

    /// `(t d/dt)^n` on ascending coefficients: multiplies `c_j` by `j^n`.
    pub fn theta_power(p: &[BigRational], n: usize) -> Vec<BigRational> {
        p.iter()
            .enumerate()
            .map(|(j, c)| c * BigRational::from_integer(num_traits::pow(j.into(), n)))
            .collect()
    }

    /// `Σ_k S2(k,n) t^k p^{(k)}`, built from derivatives and shifts only.
    pub fn stirling_expansion(p: &[BigRational], n: usize, table: &Stirling2Table) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); p.len()];
        for k in 0..=n {
            let s = BigRational::from_integer(table.get(k, n).clone());
            if s.is_zero() {
                continue;
            }
            // t^k p^{(k)}: coefficient of t^j is j!/(j-k)! c_j
            for (j, c) in p.iter().enumerate().skip(k) {
                let falling: BigRational = (j - k + 1..=j)
                    .map(|m| BigRational::from_integer(m.into()))
                    .fold(BigRational::one(), |a, b| a * b);
                out[j] += &s * falling * c;
            }
        }
        out
    }

    /// Coefficientwise difference of the two sides.
    pub fn residual(p: &[BigRational], n: usize, table: &Stirling2Table) -> Vec<BigRational> {
        theta_power(p, n)
            .into_iter()
            .zip(stirling_expansion(p, n, table))
            .map(|(a, b)| a - b)
            .collect()
    }
}
