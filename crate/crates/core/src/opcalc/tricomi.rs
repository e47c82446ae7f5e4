//! The integration operator `D^{-1}` (lower limit 0) and the evolution
//! `∂_τ F = −D^{-2} F`, `F(x, 0) = 1`, whose Fourier solution is a Gaussian
//! average of Tricomi functions.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;

use super::quadrature::{gauss_weighted_integral, WeightedIntegral};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::specfun::tricomi_c;

/// `D^{-n} f`: `x^m ↦ m! x^{m+n} / (m+n)!`. The result has `n` more
/// coefficients than `f`.
pub fn neg_derivative_pow<T: Scalar>(f: &[T], n: usize) -> Vec<T> {
    let mut out = vec![T::zero(); f.len() + n];
    for (m, c) in f.iter().enumerate() {
        // m!/(m+n)! = 1/((m+1)(m+2)...(m+n))
        let den: BigInt = ((m + 1)..=(m + n)).map(BigInt::from).product();
        out[m + n] = c.clone() / T::from_bigint(&den);
    }
    out
}

/// `e^{-αD^{-1}} f` through `x^order`:
/// `x^n ↦ Σ_r (−α)^r n! x^{n+r} / (r! (n+r)!)`, so that `1 ↦ C_0(αx)` and
/// `x^n ↦ n! x^n C_n(αx)`. Every coefficient up to `order` is exact.
pub fn exp_neg_derivative<T: Scalar>(alpha: &T, f: &[T], order: usize) -> Vec<T> {
    let mut out = vec![T::zero(); order + 1];
    for (n, c) in f.iter().enumerate().take(order + 1) {
        if c.is_zero() {
            continue;
        }
        // term_r = c (−α)^r n!/(r!(n+r)!)
        let mut term = c.clone();
        for r in 0..=(order - n) {
            if r > 0 {
                term = term * (-alpha.clone()) / T::from_i64((r * (n + r)) as i64);
            }
            out[n + r] = out[n + r].clone() + term.clone();
        }
    }
    out
}

/// `F(x, τ) = e^{-τD^{-2}} 1 = (1/2√(πτ)) ∫ e^{-k²/4τ} C_0(−ikx) dk`.
pub fn tricomi_evolution(x: f64, tau: f64) -> Result<WeightedIntegral> {
    if tau == 0.0 {
        return Ok(WeightedIntegral { value: Complex64::new(1.0, 0.0), nodes: 0, converged: true });
    }
    if !(tau > 0.0 && tau.is_finite()) {
        return Err(Error::InvalidParameter(format!("evolution time must be nonnegative, got {tau}")));
    }
    let r = gauss_weighted_integral(|k| tricomi_c(0, Complex64::new(0.0, -k * x)), tau)?;
    Ok(WeightedIntegral { value: r.value / (2.0 * (PI * tau).sqrt()), ..r })
}

/// `Σ_m (−τ)^m x^{2m} / (m! (2m)!)`, summed until terms stop mattering.
pub fn tricomi_evolution_series(x: f64, tau: f64) -> f64 {
    let z = -tau * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for m in 1..400 {
        let m = m as f64;
        term *= z / (m * (2.0 * m - 1.0) * (2.0 * m));
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use crate::specfun::tricomi_coefficients;
    use num_rational::BigRational;

    #[test]
    fn repeated_integration() {
        let one = vec![int(1)];
        assert_eq!(neg_derivative_pow(&one, 1), vec![int(0), int(1)]);
        assert_eq!(neg_derivative_pow(&one, 2), vec![int(0), int(0), rat(1, 2)]);
        let x2 = vec![int(0), int(0), int(1)];
        assert_eq!(neg_derivative_pow(&x2, 1)[3], rat(1, 3));
    }

    #[test]
    fn exponential_of_integration() {
        let c0 = exp_neg_derivative(&int(1), &[int(1)], 12);
        assert_eq!(c0, tricomi_coefficients(0, 12));
        let x = vec![int(0), int(1)];
        assert_eq!(exp_neg_derivative(&int(0), &x, 5)[..2], x[..]);
        let e = exp_neg_derivative(&int(1), &x, 4);
        assert_eq!(e, vec![int(0), int(1), rat(-1, 2), rat(1, 12), rat(-1, 144)]);
        // x^n ↦ n! x^n C_n(αx), numerically
        let a = 0.6;
        let f: Vec<f64> = vec![0.0, 0.0, 0.0, 1.0];
        let s = exp_neg_derivative(&a, &f, 40);
        let xv: f64 = 0.7;
        let lhs: f64 = s.iter().enumerate().map(|(j, c)| c * xv.powi(j as i32)).sum();
        let rhs = 6.0 * xv.powi(3) * tricomi_c(3, Complex64::new(a * xv, 0.0)).re;
        assert!((lhs - rhs).abs() < 1e-15);
        let _: Vec<BigRational> = exp_neg_derivative(&int(2), &[int(1)], 0);
    }

    #[test]
    fn evolution_values() {
        assert_eq!(tricomi_evolution(0.4, 0.0).unwrap().value, Complex64::new(1.0, 0.0));
        assert!(tricomi_evolution(0.4, -1.0).is_err());
        let v = tricomi_evolution(1.0, 1.0).unwrap();
        assert!((v.value.re - 0.5206029).abs() < 1e-7);
        assert!((v.value.re - tricomi_evolution_series(1.0, 1.0)).abs() < 1e-10);
        assert!(v.value.im.abs() < 1e-14);
        let small = tricomi_evolution(0.8, 1e-3).unwrap().value.re;
        assert!((small - (1.0 - 1e-3 * 0.64 / 2.0)).abs() < 1e-6);
    }
}
