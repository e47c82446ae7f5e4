//! Shift-type transforms `Φ(∂) f` and `Φ(α∂ + βx) f` through the Fourier
//! representation `Φ(∂) = (1/√2π) ∫ Φ̃(k) e^{ik∂} dk`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::formal::{poly, symbol_series_oracle};
use super::quadrature::{gauss_weighted_integral, WeightedIntegral};
use super::symbol::SpectralSymbol;
use crate::error::{Error, Result};
use crate::specfun::hermite2;

/// Number of Taylor coefficients used by the series oracles.
pub const ORACLE_ORDER: usize = 96;

fn inv_sqrt_2pi() -> f64 {
    1.0 / (2.0 * PI).sqrt()
}

fn scaled(r: WeightedIntegral, s: f64) -> WeightedIntegral {
    WeightedIntegral { value: r.value * s, ..r }
}

/// `Φ(∂) f (x) = (1/√2π) ∫ Φ̃(k) f(x + ik) dk`.
pub fn phi_shift_transform<S, F>(sym: &S, f: F, x: Complex64) -> Result<WeightedIntegral>
where
    S: SpectralSymbol + ?Sized,
    F: Fn(Complex64) -> Complex64 + Sync + Send,
{
    let i = Complex64::i();
    let r = gauss_weighted_integral(|k| sym.modulation(k) * f(x + i * k), sym.variance())?;
    Ok(scaled(r, inv_sqrt_2pi()))
}

/// `(1/2√(πy)) ∫ e^{-k²/4y} H_n(x + ik, y) dk`, which reproduces `x^n`.
pub fn monomial_from_hermite(n: usize, x: f64, y: f64) -> Result<WeightedIntegral> {
    let yc = Complex64::new(y, 0.0);
    let r = gauss_weighted_integral(|k| hermite2(n, &Complex64::new(x, k), &yc), y)?;
    Ok(scaled(r, 1.0 / (2.0 * (PI * y).sqrt())))
}

/// `Φ(α∂ + βx) f (x) = (1/√2π) ∫ Φ̃(k) e^{-(αβ/2)k² + ikβx} f(x + iαk) dk`
/// for a polynomial `f` with ascending coefficients.
///
/// The extra Gaussian is folded into the weight: `1/4y' = 1/4y + αβ/2`.
/// A nonpositive `1/4y'` leaves the integrand undamped.
pub fn gabor_like_transform<S>(sym: &S, f: &[Complex64], alpha: f64, beta: f64, x: f64) -> Result<WeightedIntegral>
where
    S: SpectralSymbol + ?Sized,
{
    let inv = 1.0 / (4.0 * sym.variance()) + alpha * beta / 2.0;
    if inv <= 0.0 {
        return Err(Error::Divergence(format!(
            "integrand grows: 1/(4y) + alpha*beta/2 = {inv} is not positive"
        )));
    }
    let y = 1.0 / (4.0 * inv);
    let i = Complex64::i();
    let r = gauss_weighted_integral(
        |k| {
            let z = Complex64::new(x, alpha * k);
            sym.modulation(k) * (i * k * beta * x).exp() * poly::eval(f, &z)
        },
        y,
    )?;
    Ok(scaled(r, inv_sqrt_2pi()))
}

/// Series oracle for [`gabor_like_transform`]: `Σ_j c_j (α∂ + βx)^j f` at `x`.
pub fn gabor_oracle<S>(sym: &S, f: &[Complex64], alpha: f64, beta: f64, x: f64) -> Complex64
where
    S: SpectralSymbol + ?Sized,
{
    let (a, b) = (Complex64::new(alpha, 0.0), Complex64::new(beta, 0.0));
    symbol_series_oracle(
        &sym.taylor(ORACLE_ORDER),
        f,
        |p| poly::add(&poly::scale(&poly::derivative(p), &a), &poly::scale(&poly::mul_x(p), &b)),
        Complex64::new(x, 0.0),
    )
}
