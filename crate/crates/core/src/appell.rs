//! Appell polynomial families `Σ tⁿ a_n^±(x)/n! = A(t)^{±1} e^{tx}` and
//! expansions `f(x) = Σ α_n a_n^+(x)` computed by Fourier quadrature.
//!
//! Taylor coefficients of `A` and `1/A` are exact rationals; the reciprocal
//! comes from Newton iteration on truncated series.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::gftrans::{hermite_gf, GeneratingFunctions, HermiteVariant};
use crate::opcalc::quadrature::gauss_weighted_integral;
use crate::opcalc::symbol::SpectralSymbol;
use crate::scalar::{factorial, int, rational_to_complex, rational_to_f64};
use crate::seqcore::HermiteParams;

/// Default Taylor order kept for a family.
pub const DEFAULT_ORDER: usize = 32;
/// Largest coefficient index offered by [`expansion_coefficients`]; past it
/// the `1/n!` prefactor leaves nothing meaningful in double precision.
pub const MAX_COEFFICIENTS: usize = 24;
/// `|k|` values at which the expansion integrand is sampled before
/// integrating.
pub const GUARD_SAMPLES: [f64; 3] = [10.0, 20.0, 40.0];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    /// `a_n^+ = A(∂) xⁿ`.
    Plus,
    /// `a_n^- = [A(∂)]^{-1} xⁿ`.
    Minus,
}

/// The characteristic function `A(t)`.
#[derive(Clone, Debug, PartialEq)]
pub enum Characteristic {
    /// `A = 1`.
    Identity,
    /// `A = t/(e^t − 1)`.
    Bernoulli,
    /// `A = e^{ct²}`.
    Gaussian(BigRational),
    /// `A` is the polynomial with these ascending coefficients.
    Polynomial(Vec<BigRational>),
}

/// An Appell family: `A` (or `1/A` when inverted) with exact Taylor data.
#[derive(Clone, Debug, PartialEq)]
pub struct AppellFamily {
    kind: Characteristic,
    inverted: bool,
    taylor: Vec<BigRational>,
    inverse: Vec<BigRational>,
}

/// `1/a` through `t^{len-1}`, by `g ← g(2 − a g)` with doubling precision.
pub fn series_reciprocal(a: &[BigRational], len: usize) -> Result<Vec<BigRational>> {
    let a0 = a.first().filter(|v| !v.is_zero()).ok_or_else(|| {
        Error::InvalidParameter("characteristic function must not vanish at t = 0".into())
    })?;
    let mut g = vec![a0.recip()];
    while g.len() < len {
        let m = (2 * g.len()).min(len);
        let ag = truncated_product(a, &g, m);
        let mut two_minus: Vec<BigRational> = ag.into_iter().map(|v| -v).collect();
        two_minus[0] += int(2);
        g = truncated_product(&g, &two_minus, m);
    }
    g.truncate(len);
    Ok(g)
}

fn truncated_product(a: &[BigRational], b: &[BigRational], len: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn characteristic_taylor(kind: &Characteristic, len: usize) -> Result<Vec<BigRational>> {
    Ok(match kind {
        Characteristic::Identity => (0..len).map(|n| if n == 0 { int(1) } else { int(0) }).collect(),
        Characteristic::Bernoulli => {
            // t/(e^t − 1) is the reciprocal of Σ tⁿ/(n+1)!
            let e: Vec<BigRational> = (0..len).map(|n| BigRational::new(BigInt::one(), factorial(n + 1))).collect();
            series_reciprocal(&e, len)?
        }
        Characteristic::Gaussian(c) => {
            let mut v = vec![BigRational::zero(); len];
            let mut term = int(1);
            for j in 0..len.div_ceil(2) {
                if j > 0 {
                    term = term * c / int(j as i64);
                }
                v[2 * j] = term.clone();
            }
            v
        }
        Characteristic::Polynomial(p) => (0..len).map(|n| p.get(n).cloned().unwrap_or_else(BigRational::zero)).collect(),
    })
}

impl AppellFamily {
    pub fn new(kind: Characteristic, order: usize) -> Result<Self> {
        let len = order + 1;
        let taylor = characteristic_taylor(&kind, len)?;
        let inverse = series_reciprocal(&taylor, len)?;
        let fam = AppellFamily { kind, inverted: false, taylor, inverse };
        fam.check_reciprocal()?;
        Ok(fam)
    }

    pub fn identity(order: usize) -> Result<Self> {
        Self::new(Characteristic::Identity, order)
    }

    pub fn bernoulli(order: usize) -> Result<Self> {
        Self::new(Characteristic::Bernoulli, order)
    }

    /// `A(t) = e^{ct²}`.
    pub fn gaussian(c: BigRational, order: usize) -> Result<Self> {
        Self::new(Characteristic::Gaussian(c), order)
    }

    /// `A` given by its Taylor coefficients, treated as a polynomial.
    pub fn from_taylor(coeffs: Vec<BigRational>, order: usize) -> Result<Self> {
        Self::new(Characteristic::Polynomial(coeffs), order)
    }

    /// The family of `1/A`: its `+` polynomials are the `−` polynomials of
    /// `self`.
    pub fn reciprocal(&self) -> Self {
        AppellFamily {
            kind: self.kind.clone(),
            inverted: !self.inverted,
            taylor: self.inverse.clone(),
            inverse: self.taylor.clone(),
        }
    }

    /// The same family with Taylor data through `order`.
    pub fn with_order(&self, order: usize) -> Result<Self> {
        let fam = Self::new(self.kind.clone(), order)?;
        Ok(if self.inverted { fam.reciprocal() } else { fam })
    }

    fn check_reciprocal(&self) -> Result<()> {
        let prod = truncated_product(&self.taylor, &self.inverse, self.taylor.len());
        if prod.iter().enumerate().all(|(n, v)| if n == 0 { v.is_one() } else { v.is_zero() }) {
            Ok(())
        } else {
            Err(Error::Internal("series reciprocal failed its convolution check".into()))
        }
    }

    pub fn order(&self) -> usize {
        self.taylor.len() - 1
    }

    pub fn taylor(&self) -> &[BigRational] {
        &self.taylor
    }

    pub fn inverse_taylor(&self) -> &[BigRational] {
        &self.inverse
    }

    pub fn characteristic(&self) -> &Characteristic {
        &self.kind
    }

    pub fn label(&self) -> String {
        let base = match &self.kind {
            Characteristic::Identity => "identity".to_string(),
            Characteristic::Bernoulli => "bernoulli".to_string(),
            Characteristic::Gaussian(c) => format!("exp({c} t^2)"),
            Characteristic::Polynomial(_) => "taylor".to_string(),
        };
        if self.inverted {
            format!("1/{base}")
        } else {
            base
        }
    }

    fn coefficients(&self, sign: Sign) -> &[BigRational] {
        match sign {
            Sign::Plus => &self.taylor,
            Sign::Minus => &self.inverse,
        }
    }

    /// `A(t)^{±1}` from the closed form of the underlying characteristic.
    /// Each direction is evaluated directly so that neither overflows into
    /// the other.
    fn eval_base(&self, t: Complex64, sign: Sign) -> Complex64 {
        let plus = sign == Sign::Plus;
        match &self.kind {
            Characteristic::Identity => Complex64::new(1.0, 0.0),
            Characteristic::Bernoulli => {
                let q = bernoulli_quotient(t);
                if plus {
                    q.inv()
                } else {
                    q
                }
            }
            Characteristic::Gaussian(c) => {
                let c = rational_to_f64(c);
                (if plus { c } else { -c } * t * t).exp()
            }
            Characteristic::Polynomial(p) => {
                let v = p.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * t + rational_to_complex(c));
                if plus {
                    v
                } else {
                    v.inv()
                }
            }
        }
    }

    /// `A(t)^{±1}`.
    pub fn eval(&self, t: Complex64, sign: Sign) -> Complex64 {
        let flipped = match (sign, self.inverted) {
            (s, false) => s,
            (Sign::Plus, true) => Sign::Minus,
            (Sign::Minus, true) => Sign::Plus,
        };
        self.eval_base(t, flipped)
    }
}

/// `(e^t − 1)/t`, by its series for `|t| < 1/4`.
fn bernoulli_quotient(t: Complex64) -> Complex64 {
    if t.norm() < 0.25 {
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = term;
        for n in 1..20 {
            term *= t / (n as f64 + 1.0);
            sum += term;
        }
        sum
    } else {
        (t.exp() - 1.0) / t
    }
}

/// `a_n^±(x) = Σ_{m≤n} c_m n!/(n−m)! x^{n−m}` with `c` the Taylor
/// coefficients of `A^{±1}`, as ascending coefficients.
pub fn appell_poly(fam: &AppellFamily, n: usize, sign: Sign) -> Result<Vec<BigRational>> {
    if n > fam.order() {
        return Err(Error::Truncation(format!("degree {n} exceeds the family order {}", fam.order())));
    }
    let c = fam.coefficients(sign);
    let mut out = vec![BigRational::zero(); n + 1];
    let mut falling = BigInt::one();
    for m in 0..=n {
        if m > 0 {
            falling *= BigInt::from(n + 1 - m);
        }
        out[n - m] = &c[m] * BigRational::from_integer(falling.clone());
    }
    Ok(out)
}

/// `A(∂)^{±1} p` for a polynomial `p` of degree at most the family order.
pub fn apply_operator(fam: &AppellFamily, sign: Sign, p: &[BigRational]) -> Result<Vec<BigRational>> {
    if p.len() > fam.order() + 1 {
        return Err(Error::Truncation(format!("degree {} exceeds the family order {}", p.len() - 1, fam.order())));
    }
    let c = fam.coefficients(sign);
    let mut out = vec![BigRational::zero(); p.len().max(1)];
    let mut d = p.to_vec();
    for cm in c.iter().take(p.len()) {
        for (i, v) in d.iter().enumerate() {
            out[i] += cm * v;
        }
        d = d.iter().enumerate().skip(1).map(|(j, v)| v * int(j as i64)).collect();
    }
    Ok(out)
}

fn eval_rational_poly(p: &[BigRational], x: Complex64) -> Complex64 {
    p.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * x + rational_to_complex(c))
}

/// `|Σ_{n≤N} tⁿ a_n^±(x)/n! − A(t)^{±1} e^{tx}|`.
pub fn generating_check(fam: &AppellFamily, sign: Sign, n_max: usize, t: f64, x: f64) -> Result<f64> {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut tn = 1.0;
    for n in 0..=n_max {
        let p = appell_poly(fam, n, sign)?;
        sum += tn * eval_rational_poly(&p, Complex64::new(x, 0.0)) / rational_to_f64(&BigRational::from_integer(factorial(n)));
        tn *= t;
    }
    let closed = fam.eval(Complex64::new(t, 0.0), sign) * (t * x).exp();
    Ok((sum - closed).norm())
}

/// Coefficients `α_n` of `f = Σ α_n a_n^+`, with per-coefficient diagnostics.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionResult {
    pub family: String,
    pub coefficients: Vec<Complex64>,
    pub nodes: Vec<usize>,
    pub converged: Vec<bool>,
    /// Largest `|Im α_n|`; nonzero values are reported, never dropped.
    pub max_imaginary: f64,
}

/// Refuses integrands whose non-polynomial factor `f̃(k)[A(ik)]^{-1}` fails
/// to decay across [`GUARD_SAMPLES`].
pub fn integrability_guard<S>(fam: &AppellFamily, f: &S, n: usize) -> Result<()>
where
    S: SpectralSymbol + ?Sized,
{
    let mut prev = f64::INFINITY;
    for &k in &GUARD_SAMPLES {
        let mut worst: f64 = 0.0;
        for s in [k, -k] {
            let v = f.transform(s) * fam.eval(Complex64::new(0.0, s), Sign::Minus);
            let full = v.norm() * s.abs().powi(n as i32);
            if !full.is_finite() || !v.norm().is_finite() {
                return Err(Error::NotIntegrable { n, reason: format!("integrand is not finite at |k| = {k}") });
            }
            worst = worst.max(v.norm());
        }
        if worst > 0.0 && worst >= prev {
            return Err(Error::NotIntegrable { n, reason: format!("integrand grows between samples up to |k| = {k}") });
        }
        prev = worst;
    }
    Ok(())
}

/// `α_n = iⁿ/(√2π n!) ∫ f̃(k) [A(ik)]^{-1} kⁿ dk` for `n = 0..=n_max`.
pub fn expansion_coefficients<S>(fam: &AppellFamily, f: &S, n_max: usize) -> Result<ExpansionResult>
where
    S: SpectralSymbol + ?Sized,
{
    expansion_coefficients_with(Execution::Sequential, fam, f, n_max)
}

/// [`expansion_coefficients`] with the coefficients scheduled by `exec`.
pub fn expansion_coefficients_with<S>(exec: Execution, fam: &AppellFamily, f: &S, n_max: usize) -> Result<ExpansionResult>
where
    S: SpectralSymbol + ?Sized,
{
    if n_max > MAX_COEFFICIENTS {
        return Err(Error::InvalidParameter(format!(
            "at most {MAX_COEFFICIENTS} coefficients are meaningful in double precision, asked for {n_max}"
        )));
    }
    for n in 0..=n_max {
        integrability_guard(fam, f, n)?;
    }
    let results = exec::map_indexed(exec, n_max + 1, |n| {
        gauss_weighted_integral(
            |k| f.modulation(k) * fam.eval(Complex64::new(0.0, k), Sign::Minus) * k.powi(n as i32),
            f.variance(),
        )
    });
    let mut coefficients = Vec::with_capacity(n_max + 1);
    let mut nodes = Vec::with_capacity(n_max + 1);
    let mut converged = Vec::with_capacity(n_max + 1);
    for (n, r) in results.into_iter().enumerate() {
        let r = r?;
        let scale = Complex64::i().powu(n as u32) / ((2.0 * PI).sqrt() * crate::scalar::factorial_f64(n));
        coefficients.push(r.value * scale);
        nodes.push(r.nodes);
        converged.push(r.converged);
    }
    let max_imaginary = coefficients.iter().map(|c| c.im.abs()).fold(0.0, f64::max);
    Ok(ExpansionResult { family: fam.label(), coefficients, nodes, converged, max_imaginary })
}

/// Exact Taylor coefficients of `e^{-cx²}` through `x^len-1`.
pub fn gaussian_taylor(c: &BigRational, len: usize) -> Vec<BigRational> {
    characteristic_taylor(&Characteristic::Gaussian(-c.clone()), len).expect("Gaussian series needs no reciprocal")
}

/// Operational oracle: Taylor coefficients of `[A(∂)]^{-1} f`,
/// `α_n = Σ_m c⁻_m f_{n+m} (n+m)!/n!`, with `f` given by exact Taylor
/// coefficients. The sum runs over all of `f_taylor`.
pub fn operational_coefficients(fam: &AppellFamily, f_taylor: &[BigRational], n_max: usize) -> Result<Vec<BigRational>> {
    let len = f_taylor.len();
    if len <= n_max {
        return Err(Error::Truncation(format!("need more than {n_max} Taylor coefficients of f")));
    }
    let fam = if fam.order() + 1 < len { fam.with_order(len - 1)? } else { fam.clone() };
    let inv = fam.inverse_taylor();
    Ok((0..=n_max)
        .map(|n| {
            let mut sum = BigRational::zero();
            let mut ratio = BigInt::one(); // (n+m)!/n!
            for m in 0..(len - n) {
                if m > 0 {
                    ratio *= BigInt::from(n + m);
                }
                if !inv[m].is_zero() && !f_taylor[n + m].is_zero() {
                    sum += &inv[m] * &f_taylor[n + m] * BigRational::from_integer(ratio.clone());
                }
            }
            sum
        })
        .collect())
}

/// `Σ_{n≤N} α_n a_n^+(x)`.
pub fn reconstruct(fam: &AppellFamily, res: &ExpansionResult, x: f64) -> Result<Complex64> {
    let mut sum = Complex64::new(0.0, 0.0);
    for (n, a) in res.coefficients.iter().enumerate() {
        if *a == Complex64::new(0.0, 0.0) {
            continue;
        }
        sum += a * eval_rational_poly(&appell_poly(fam, n, Sign::Plus)?, Complex64::new(x, 0.0));
    }
    Ok(sum)
}

/// `max_x |reconstruct(x) − f(x)|` over `grid`.
pub fn reconstruction_residual(
    fam: &AppellFamily,
    res: &ExpansionResult,
    f: impl Fn(f64) -> f64,
    grid: &[f64],
) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for &x in grid {
        worst = worst.max((reconstruct(fam, res, x)? - f(x)).norm());
    }
    Ok(worst)
}

/// `e^{y∂_â²}` applied to `e^{xâ}` in the umbral image of `a`: the series
/// `Σ_n xⁿ/n! · a_n^+(â)` for the family `e^{yt²}`, with `â^k ↦ a_k`,
/// against the closed form `e^{yx²} g(x)`. Returns `(series, closed)`.
pub fn umbral_heat_bridge<G>(a: &G, y: &BigRational, x: f64, terms: usize) -> Result<(f64, f64)>
where
    G: GeneratingFunctions + ?Sized,
{
    let fam = AppellFamily::gaussian(y.clone(), terms)?;
    let mut sum = 0.0;
    let mut xn = 1.0;
    for n in 0..=terms {
        let p = appell_poly(&fam, n, Sign::Plus)?;
        let umbral = p.iter().enumerate().fold(BigRational::zero(), |acc, (k, c)| acc + c * a.term(k));
        sum += xn * rational_to_f64(&(umbral / BigRational::from_integer(factorial(n))));
        xn *= x;
    }
    let closed = hermite_gf(a, &HermiteParams::new(int(1), y.clone()), Complex64::new(x, 0.0), HermiteVariant::Complementary);
    Ok((sum, closed.re))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gftrans::SequenceFamily;
    use crate::opcalc::symbol::Spectrum;
    use crate::scalar::rat;

    #[test]
    fn reciprocal_series() {
        let e: Vec<BigRational> = (0..10).map(|n| BigRational::new(BigInt::one(), factorial(n))).collect();
        let inv = series_reciprocal(&e, 10).unwrap();
        for (n, v) in inv.iter().enumerate() {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(*v, BigRational::new(BigInt::from(sign), factorial(n)));
        }
        assert!(series_reciprocal(&[int(0), int(1)], 4).is_err());
    }

    #[test]
    fn bernoulli_polynomials() {
        let b = AppellFamily::bernoulli(12).unwrap();
        assert_eq!(appell_poly(&b, 1, Sign::Plus).unwrap(), vec![rat(-1, 2), int(1)]);
        assert_eq!(appell_poly(&b, 2, Sign::Plus).unwrap(), vec![rat(1, 6), int(-1), int(1)]);
        assert_eq!(appell_poly(&b, 1, Sign::Minus).unwrap(), vec![rat(1, 2), int(1)]);
        // ((x+1)^{n+1} − x^{n+1})/(n+1) for n = 4
        let m4 = appell_poly(&b, 4, Sign::Minus).unwrap();
        assert_eq!(m4, vec![rat(1, 5), int(1), int(2), int(2), int(1)]);
        let id = AppellFamily::identity(8).unwrap();
        assert_eq!(appell_poly(&id, 3, Sign::Minus).unwrap(), vec![int(0), int(0), int(0), int(1)]);
        assert!(appell_poly(&id, 9, Sign::Plus).is_err());
    }

    #[test]
    fn reciprocity_and_composition() {
        let b = AppellFamily::bernoulli(10).unwrap();
        let r = b.reciprocal();
        for n in 0..=10 {
            assert_eq!(appell_poly(&b, n, Sign::Minus).unwrap(), appell_poly(&r, n, Sign::Plus).unwrap());
            let minus = appell_poly(&b, n, Sign::Minus).unwrap();
            let mut xn = vec![int(0); n + 1];
            xn[n] = int(1);
            assert_eq!(apply_operator(&b, Sign::Plus, &minus).unwrap(), xn);
        }
    }

    #[test]
    fn generating_functions() {
        let b = AppellFamily::bernoulli(30).unwrap();
        assert!(generating_check(&b, Sign::Plus, 30, 0.3, 0.5).unwrap() < 1e-10);
        assert!(generating_check(&b, Sign::Minus, 30, 0.3, 0.5).unwrap() < 1e-10);
        assert_eq!(generating_check(&b, Sign::Plus, 30, 0.0, 0.5).unwrap(), 0.0);
        let id = AppellFamily::identity(20).unwrap();
        assert!(generating_check(&id, Sign::Plus, 20, 0.4, -0.7).unwrap() < 1e-15);
    }

    #[test]
    fn identity_expansion_is_taylor() {
        let id = AppellFamily::identity(DEFAULT_ORDER).unwrap();
        let f = Spectrum::gaussian(1.0).unwrap();
        let res = expansion_coefficients(&id, &f, 6).unwrap();
        let want = [1.0, 0.0, -1.0, 0.0, 0.5, 0.0, -1.0 / 6.0];
        for (a, w) in res.coefficients.iter().zip(want) {
            assert!((a - Complex64::new(w, 0.0)).norm() < 1e-12);
        }
        let v = reconstruct(&id, &res, 0.5).unwrap();
        let partial: f64 = want.iter().enumerate().map(|(n, c)| c * 0.5f64.powi(n as i32)).sum();
        assert!((v.re - partial).abs() < 1e-12);
        let zero = ExpansionResult { coefficients: vec![Complex64::default(); 4], ..res };
        assert_eq!(reconstruct(&id, &zero, 0.3).unwrap(), Complex64::default());
    }

    #[test]
    fn expansions_match_operational_oracle() {
        let cases = [(AppellFamily::bernoulli(DEFAULT_ORDER).unwrap(), int(1)), (AppellFamily::gaussian(int(-1), DEFAULT_ORDER).unwrap(), rat(1, 8))];
        for (fam, c) in cases {
            let f = Spectrum::gaussian(rational_to_f64(&c)).unwrap();
            let res = expansion_coefficients(&fam, &f, 10).unwrap();
            let oracle = operational_coefficients(&fam, &gaussian_taylor(&c, 240), 10).unwrap();
            for (a, o) in res.coefficients.iter().zip(&oracle) {
                assert!((a - rational_to_complex(o)).norm() < 1e-10, "{}: {a} vs {o}", fam.label());
            }
            assert!(res.max_imaginary < 1e-12);
        }
    }

    #[test]
    fn guard_rejects_growth() {
        let fam = AppellFamily::gaussian(int(1), DEFAULT_ORDER).unwrap();
        let f = Spectrum::gaussian(1.0).unwrap();
        match expansion_coefficients(&fam, &f, 4) {
            Err(Error::NotIntegrable { n, .. }) => assert_eq!(n, 0),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn reconstruction_improves() {
        let b = AppellFamily::bernoulli(DEFAULT_ORDER).unwrap();
        let f = Spectrum::gaussian(1.0).unwrap();
        let grid: Vec<f64> = (0..=20).map(|i| -1.0 + 0.1 * i as f64).collect();
        let target = |x: f64| (-x * x).exp();
        let r16 = reconstruction_residual(&b, &expansion_coefficients(&b, &f, 16).unwrap(), target, &grid).unwrap();
        let r20 = reconstruction_residual(&b, &expansion_coefficients(&b, &f, 20).unwrap(), target, &grid).unwrap();
        assert!(r20 < r16, "{r20} vs {r16}");
    }

    #[test]
    fn heat_bridge() {
        for fam in [SequenceFamily::Geometric(int(1)), SequenceFamily::LinearGeometric(rat(1, 2))] {
            for &x in &[-0.5, 0.1, 0.4] {
                let (s, c) = umbral_heat_bridge(&fam, &rat(1, 3), x, 60).unwrap();
                assert!((s - c).abs() < 1e-12, "{s} vs {c}");
            }
        }
    }
}
