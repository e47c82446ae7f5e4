//! The Laguerre derivative `LD = ∂ x ∂`, the Borel transform and the
//! integro-differential evolution `∂_τ F = −(LD + βD^{-1})^m F`.
//!
//! `LD` and `D^{-1}` satisfy `[LD, D^{-1}] = 1` on every polynomial, and
//! `C_0` is an eigenfunction: `LD C_0 = −C_0`.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Zero;

use super::operator::{eval_poly, TruncatedOperator};
use super::quadrature::{gauss_weighted_integral_with, QuadratureRule, WeightedIntegral, ADAPTIVE_TOLERANCE};
use super::tricomi::neg_derivative_pow;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::scalar::{binomial_row, factorial, factorial_f64, Scalar};
use crate::specfun::tricomi_c;

/// `x^n ↦ n² x^{n-1}`.
pub fn laguerre_derivative<T: Scalar>(f: &[T]) -> Vec<T> {
    if f.len() <= 1 {
        return vec![T::zero()];
    }
    f.iter().enumerate().skip(1).map(|(n, c)| c.clone() * T::from_i64((n * n) as i64)).collect()
}

/// `(LD∘D^{-1} − D^{-1}∘LD − 1) f` without any precondition on `f`.
pub fn commutator_residual_ld<T: Scalar>(f: &[T]) -> Vec<T> {
    let a = laguerre_derivative(&neg_derivative_pow(f, 1));
    let b = neg_derivative_pow(&laguerre_derivative(f), 1);
    let len = a.len().max(b.len()).max(f.len());
    (0..len)
        .map(|i| {
            let get = |v: &[T]| v.get(i).cloned().unwrap_or_else(T::zero);
            get(&a) - get(&b) - get(f)
        })
        .collect()
}

/// [`commutator_residual_ld`] restricted to `f(0) = 0`.
///
/// The residual vanishes for every polynomial, constant term included; the
/// restriction is kept so callers that rely on it get a clear error.
pub fn commutator_check_ld<T: Scalar>(f: &[T]) -> Result<Vec<T>> {
    if f.first().is_some_and(|c| !c.is_zero()) {
        return Err(Error::Precondition("commutator check expects f(0) = 0".into()));
    }
    Ok(commutator_residual_ld(f))
}

/// `x^n ↦ n! x^n`, the termwise form of `∫_0^∞ f(sx) e^{-s} ds`.
pub fn borel_transform<T: Scalar>(f: &[T]) -> Vec<T> {
    f.iter().enumerate().map(|(n, c)| c.clone() * T::from_bigint(&factorial(n))).collect()
}

/// `e^{αLD} f = f_B(D^{-1} + α) 1`: Borel-transform `f`, then expand each
/// `(D^{-1} + α)^n` binomially with `D^{-j} 1 = x^j / j!`.
pub fn exp_laguerre_derivative<T: Scalar>(alpha: &T, f: &[T]) -> Vec<T> {
    let fb = borel_transform(f);
    let mut out = vec![T::zero(); f.len().max(1)];
    let one = [T::one()];
    for (n, b) in fb.iter().enumerate() {
        if b.is_zero() {
            continue;
        }
        let row = binomial_row(n);
        let mut apow = T::one();
        // j runs downward so that α^{n-j} builds up incrementally
        for j in (0..=n).rev() {
            let basis = neg_derivative_pow(&one, j);
            out[j] = out[j].clone() + b.clone() * T::from_bigint(&row[j]) * apow.clone() * basis[j].clone();
            apow = apow * alpha.clone();
        }
    }
    out
}

/// Basis scales `(n!)²` under which `LD` and `D^{-1}` have entries `1` and
/// `n+1`.
pub fn laguerre_basis_scales(degree: usize) -> Vec<f64> {
    (0..=degree).map(|n| factorial_f64(n).powi(2)).collect()
}

/// `e^{αLD} f` by exponentiating the truncated `LD` matrix. `LD` lowers the
/// degree, so this is exact up to rounding for `deg f ≤ degree`.
pub fn exp_laguerre_derivative_matrix(alpha: Complex64, f: &[Complex64], degree: usize) -> Result<Vec<Complex64>> {
    if f.len() > degree + 1 {
        return Err(Error::Truncation(format!("polynomial of degree {} exceeds cap {degree}", f.len() - 1)));
    }
    let op = TruncatedOperator::laguerre_derivative(degree).scale(alpha);
    Ok(op.exp_scaled(&laguerre_basis_scales(degree))?.apply(f))
}

/// Initial data for the integro-differential evolution.
#[derive(Clone, Debug, PartialEq)]
pub enum InitialCondition {
    /// `C_0(x) = Σ (−x)^n / (n!)²`.
    Tricomi,
    /// A polynomial with ascending coefficients.
    Polynomial(Vec<Complex64>),
}

impl InitialCondition {
    pub fn eval(&self, x: f64) -> Complex64 {
        match self {
            InitialCondition::Tricomi => tricomi_c(0, Complex64::new(x, 0.0)),
            InitialCondition::Polynomial(p) => eval_poly(p, Complex64::new(x, 0.0)),
        }
    }

    /// Coefficients through `x^degree`.
    pub fn coefficients(&self, degree: usize) -> Vec<Complex64> {
        match self {
            InitialCondition::Tricomi => {
                let mut out = Vec::with_capacity(degree + 1);
                let mut c = 1.0;
                for n in 0..=degree {
                    if n > 0 {
                        c /= -((n * n) as f64);
                    }
                    out.push(Complex64::new(c, 0.0));
                }
                out
            }
            InitialCondition::Polynomial(p) => (0..=degree).map(|n| p.get(n).copied().unwrap_or_default()).collect(),
        }
    }

    /// `[e^{iβkD^{-1}} e^{ikLD} f](x)`.
    fn ordered_action(&self, beta: f64, k: f64, x: f64) -> Complex64 {
        let ik = Complex64::new(0.0, k);
        match self {
            // e^{ikLD} C_0 = e^{-ik} C_0, and e^{iβkD^{-1}} C_0(x) = C_0((1 − iβk)x)
            InitialCondition::Tricomi => (-ik).exp() * tricomi_c(0, Complex64::new(x, -beta * k * x)),
            InitialCondition::Polynomial(p) => {
                let g = exp_laguerre_derivative(&ik, p);
                // e^{-αD^{-1}} x^n = n! x^n C_n(αx) with α = −iβk
                let z = Complex64::new(0.0, -beta * k * x);
                let xc = Complex64::new(x, 0.0);
                g.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(n, c)| c * factorial_f64(n) * xc.powu(n as u32) * tricomi_c(n, z))
                    .sum()
            }
        }
    }
}

/// Largest `|x|` for which the evolution is offered.
pub const EVOLUTION_REGION: f64 = 0.5;

/// `ẽ_m(k, τ)` for `e^{-τ s^m}`, `m` even: `√(2/π) ∫_0^∞ e^{-τs^m} cos(ks) ds`.
/// Closed form for `m = 2`, composite Gauss–Legendre otherwise.
pub fn even_symbol_transform(m: usize, tau: f64, k: f64, base: &QuadratureRule) -> f64 {
    if m == 2 {
        return (-k * k / (4.0 * tau)).exp() / (2.0 * tau).sqrt();
    }
    let upper = (40.0 / tau).powf(1.0 / m as f64);
    let panels = (upper * (1.0 + k.abs()) / 1.5).ceil() as usize + 2;
    let h = upper / panels as f64;
    let mut sum = 0.0;
    for p in 0..panels {
        let mid = (p as f64 + 0.5) * h;
        for (u, w) in base.nodes().iter().zip(base.weights()) {
            let s = mid + 0.5 * h * u;
            sum += 0.5 * h * w * (-tau * s.powi(m as i32)).exp() * (k * s).cos();
        }
    }
    (2.0 / PI).sqrt() * sum
}

/// `F(x, τ) = e^{-τ(LD + βD^{-1})^m} f` at `x`.
///
/// Uses `e^{ik(LD+βD^{-1})} = e^{-βk²/2} e^{iβkD^{-1}} e^{ikLD}` and
/// `F = (1/√2π) ∫ ẽ_m(k, τ) e^{ik(LD+βD^{-1})} f dk`.
pub fn integro_diff_evolve(f: &InitialCondition, beta: f64, m: usize, tau: f64, x: f64) -> Result<WeightedIntegral> {
    integro_diff_evolve_with(Execution::Sequential, f, beta, m, tau, x)
}

/// [`integro_diff_evolve`] with quadrature nodes scheduled by `exec`.
pub fn integro_diff_evolve_with(
    exec: Execution,
    f: &InitialCondition,
    beta: f64,
    m: usize,
    tau: f64,
    x: f64,
) -> Result<WeightedIntegral> {
    if m == 0 || m % 2 == 1 {
        return Err(Error::UnsupportedSymbol(format!("exp(-tau s^{m}) needs an even positive power")));
    }
    if x.abs() > EVOLUTION_REGION {
        return Err(Error::Truncation(format!("|x| = {} is outside |x| <= {EVOLUTION_REGION}", x.abs())));
    }
    if !(beta >= 0.0 && beta.is_finite()) {
        return Err(Error::InvalidParameter(format!("beta must be nonnegative, got {beta}")));
    }
    if tau == 0.0 {
        return Ok(WeightedIntegral { value: f.eval(x), nodes: 0, converged: true });
    }
    if !(tau > 0.0 && tau.is_finite()) {
        return Err(Error::InvalidParameter(format!("evolution time must be nonnegative, got {tau}")));
    }
    let norm = 1.0 / (2.0 * PI).sqrt();
    if m == 2 {
        // e^{-k²/4τ} e^{-βk²/2} = e^{-k²/4y}
        let y = 1.0 / (1.0 / tau + 2.0 * beta);
        let r = gauss_weighted_integral_with(exec, |k| f.ordered_action(beta, k, x), y)?;
        return Ok(WeightedIntegral { value: r.value * norm / (2.0 * tau).sqrt(), ..r });
    }
    let base = QuadratureRule::gauss_legendre(16)?;
    if beta > 0.0 {
        let r = gauss_weighted_integral_with(
            exec,
            |k| even_symbol_transform(m, tau, k, &base) * f.ordered_action(beta, k, x),
            1.0 / (2.0 * beta),
        )?;
        return Ok(WeightedIntegral { value: r.value * norm, ..r });
    }
    // no Gaussian factor: integrate over a growing symmetric window
    let mut prev: Option<Complex64> = None;
    let mut half = 16.0;
    let mut nodes = 0;
    while half <= 256.0 {
        let rule = QuadratureRule::gauss_legendre_composite(-half, half, (4.0 * half) as usize, 16)?;
        let v = rule.apply(exec, |k| even_symbol_transform(m, tau, k, &base) * f.ordered_action(0.0, k, x)) * norm;
        nodes = rule.len();
        if let Some(p) = prev {
            if (v - p).norm() < ADAPTIVE_TOLERANCE * v.norm().max(1.0) {
                return Ok(WeightedIntegral { value: v, nodes, converged: true });
            }
        }
        prev = Some(v);
        half *= 2.0;
    }
    Ok(WeightedIntegral { value: prev.unwrap_or_default(), nodes, converged: false })
}

/// Oracle: `e^{-τ K^m}` with `K = LD + βD^{-1}` as a degree-`degree`
/// matrix, exponentiated in the `(n!)²` basis, applied to `f` and evaluated
/// at `x`.
pub fn integro_diff_matrix_oracle(
    f: &InitialCondition,
    beta: f64,
    m: usize,
    tau: f64,
    x: f64,
    degree: usize,
) -> Result<Complex64> {
    let k = TruncatedOperator::laguerre_derivative(degree)
        .add(&TruncatedOperator::neg_derivative(degree).scale(Complex64::new(beta, 0.0)))?;
    let e = k.pow(m)?.scale(Complex64::new(-tau, 0.0)).exp_scaled(&laguerre_basis_scales(degree))?;
    Ok(eval_poly(&e.apply(&f.coefficients(degree)), Complex64::new(x, 0.0)))
}

/// Degree used by the matrix oracle.
pub const ORACLE_DEGREE: usize = 40;
