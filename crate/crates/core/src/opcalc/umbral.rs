//! `F(∂_â)` acting on the umbral image of `1/(1 − xâ)`, where `â^n` stands
//! for `a_n`.
//!
//! Shifting `â → â + ik` inside `1/(1 − xâ)` gives
//! `Σ_n x^n F(∂_â) a_n = (1/√2π) ∫ F̃(k)/(1 − ikx) · f(x/(1 − ikx)) dk`
//! with `f` the ordinary generating function of `a`.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::quadrature::{gauss_weighted_integral, WeightedIntegral};
use super::symbol::SpectralSymbol;
use crate::error::{Error, Result};
use crate::gftrans::GeneratingFunctions;
use crate::scalar::{rational_from_f64, rational_to_f64};

/// Quadrature form of `Σ_n x^n F(∂_â) a_n`. `radius` is the radius of
/// convergence of `Σ a_n z^n`; `|x/(1 − ikx)| ≤ |x|` for real `k`, so `|x|`
/// inside the disc keeps every evaluation on the convergent branch.
pub fn umbral_operator_transform<S, G>(sym: &S, a: &G, radius: f64, x: f64) -> Result<WeightedIntegral>
where
    S: SpectralSymbol + ?Sized,
    G: GeneratingFunctions + ?Sized,
{
    if x.abs() >= radius {
        return Err(Error::Divergence(format!("|x| = {} is outside the radius {radius}", x.abs())));
    }
    let r = gauss_weighted_integral(
        |k| {
            let d = Complex64::new(1.0, -k * x);
            // |x| < radius keeps the argument away from every pole
            let g = a.ogf(Complex64::new(x, 0.0) / d).unwrap_or_default();
            sym.modulation(k) / d * g
        },
        sym.variance(),
    )?;
    Ok(WeightedIntegral { value: r.value / (2.0 * PI).sqrt(), ..r })
}

/// Double-sum oracle `Σ_n x^n Σ_{m≤n} c_m n!/(n−m)! a_{n−m}`.
///
/// The inner sums cancel heavily, so they are formed exactly from the
/// binary values of `c_m` and `x`. The outer series is in general only
/// asymptotic (for a Gaussian `F` and `a_n = 1` the inner sums are Hermite
/// polynomials), so it is cut where the pairwise envelope of the terms is smallest. Returns the sum and
/// that term.
pub fn umbral_double_sum<S, G>(sym: &S, a: &G, x: f64, max_terms: usize) -> Result<(f64, f64)>
where
    S: SpectralSymbol + ?Sized,
    G: GeneratingFunctions + ?Sized,
{
    let exact = |v: f64| {
        rational_from_f64(v).ok_or_else(|| Error::InvalidParameter(format!("{v} is not finite")))
    };
    let c = sym.taylor(max_terms).into_iter().map(exact).collect::<Result<Vec<_>>>()?;
    let xr = exact(x)?;
    let terms: Vec<BigRational> = (0..=max_terms).map(|n| a.term(n)).collect();
    let mut series = Vec::with_capacity(max_terms + 1);
    let mut xn = BigRational::one();
    for n in 0..=max_terms {
        // n!/(n−m)! built up as m grows
        let mut falling = BigRational::one();
        let mut inner = BigRational::zero();
        for m in 0..=n {
            if m > 0 {
                falling *= BigRational::from_integer(BigInt::from(n + 1 - m));
            }
            if !c[m].is_zero() {
                inner += &c[m] * &falling * &terms[n - m];
            }
        }
        series.push(&xn * inner);
        xn *= &xr;
    }
    // pairwise envelope, so an isolated near-zero term does not end the sum
    let mags: Vec<f64> = series.iter().map(|t| rational_to_f64(t).abs()).collect();
    let envelope: Vec<f64> = (0..mags.len()).map(|n| mags[n].max(mags.get(n + 1).copied().unwrap_or(0.0))).collect();
    let (cut, smallest) = envelope
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::INFINITY), |best, (n, e)| if e < best.1 { (n, e) } else { best });
    let sum = series[..=cut].iter().fold(BigRational::zero(), |acc, t| acc + t);
    Ok((rational_to_f64(&sum), smallest))
}
