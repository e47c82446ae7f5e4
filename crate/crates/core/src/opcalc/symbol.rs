//! Operator symbols `Φ(s)` with Gaussian-dominated Fourier transforms.
//!
//! Convention: `Φ(s) = (1/√2π) ∫ Φ̃(k) e^{iks} dk`. Every symbol factors its
//! transform as `Φ̃(k) = e^{-k²/(4y)} · modulation(k)`, which is what the
//! Gauss–Hermite integrator consumes.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A function of an operator, given through its Fourier transform.
pub trait SpectralSymbol: Sync {
    /// `y` in the Gaussian factor `e^{-k²/(4y)}` of `Φ̃`.
    fn variance(&self) -> f64;

    /// `Φ̃(k) / e^{-k²/(4y)}`.
    fn modulation(&self, k: f64) -> Complex64;

    /// `Φ(s)` for complex `s`.
    fn eval(&self, s: Complex64) -> Complex64;

    /// Taylor coefficients `c_0..c_n` of `Φ` at the origin.
    fn taylor(&self, n: usize) -> Vec<f64>;

    /// `Φ̃(k)`.
    fn transform(&self, k: f64) -> Complex64 {
        (-k * k / (4.0 * self.variance())).exp() * self.modulation(k)
    }
}

/// The symbols used throughout the crate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Spectrum {
    /// `Φ(s) = e^{-y s²}`, `Φ̃(k) = e^{-k²/4y} / √(2y)`.
    Gaussian { y: f64 },
    /// `Φ(s) = cos(ωs) e^{-y s²}`,
    /// `Φ̃(k) = e^{-k²/4y} e^{-ω²/4y} cosh(kω/2y) / √(2y)`.
    CosGaussian { y: f64, omega: f64 },
}

impl Spectrum {
    pub fn gaussian(y: f64) -> Result<Self> {
        check_y(y)?;
        Ok(Spectrum::Gaussian { y })
    }

    pub fn cos_gaussian(y: f64, omega: f64) -> Result<Self> {
        check_y(y)?;
        if !omega.is_finite() {
            return Err(Error::InvalidParameter(format!("frequency must be finite, got {omega}")));
        }
        Ok(Spectrum::CosGaussian { y, omega })
    }

    pub fn label(&self) -> String {
        match self {
            Spectrum::Gaussian { y } => format!("exp(-{y}s^2)"),
            Spectrum::CosGaussian { y, omega } => format!("cos({omega}s)exp(-{y}s^2)"),
        }
    }
}

fn check_y(y: f64) -> Result<()> {
    if y > 0.0 && y.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("Gaussian symbol needs y > 0, got {y}")))
    }
}

impl SpectralSymbol for Spectrum {
    fn variance(&self) -> f64 {
        match *self {
            Spectrum::Gaussian { y } | Spectrum::CosGaussian { y, .. } => y,
        }
    }

    fn modulation(&self, k: f64) -> Complex64 {
        match *self {
            Spectrum::Gaussian { y } => Complex64::new(1.0 / (2.0 * y).sqrt(), 0.0),
            Spectrum::CosGaussian { y, omega } => {
                // e^{-ω²/4y} cosh(kω/2y) written to avoid overflow in cosh
                let a = k * omega / (2.0 * y);
                let b = omega * omega / (4.0 * y);
                let v = 0.5 * ((a - b).exp() + (-a - b).exp());
                Complex64::new(v / (2.0 * y).sqrt(), 0.0)
            }
        }
    }

    fn eval(&self, s: Complex64) -> Complex64 {
        match *self {
            Spectrum::Gaussian { y } => (-y * s * s).exp(),
            Spectrum::CosGaussian { y, omega } => (omega * s).cos() * (-y * s * s).exp(),
        }
    }

    fn taylor(&self, n: usize) -> Vec<f64> {
        let gauss: Vec<f64> = {
            let y = self.variance();
            let mut c = vec![0.0; n + 1];
            let mut t = 1.0;
            for j in 0..=n / 2 {
                if j > 0 {
                    t *= -y / j as f64;
                }
                c[2 * j] = t;
            }
            c
        };
        match *self {
            Spectrum::Gaussian { .. } => gauss,
            Spectrum::CosGaussian { omega, .. } => {
                let mut cos = vec![0.0; n + 1];
                let mut t = 1.0;
                for j in 0..=n / 2 {
                    if j > 0 {
                        t *= -omega * omega / ((2 * j - 1) * 2 * j) as f64;
                    }
                    cos[2 * j] = t;
                }
                (0..=n).map(|i| (0..=i).map(|j| cos[j] * gauss[i - j]).sum()).collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opcalc::quadrature::gauss_weighted_integral;

    #[test]
    fn transform_pairs_invert() {
        let symbols = [Spectrum::gaussian(0.5).unwrap(), Spectrum::cos_gaussian(0.7, 1.3).unwrap()];
        for sym in symbols {
            for &s in &[0.0, 0.4, -1.1] {
                let v = gauss_weighted_integral(|k| sym.modulation(k) * Complex64::new(0.0, k * s).exp(), sym.variance())
                    .unwrap()
                    .value
                    / (2.0 * std::f64::consts::PI).sqrt();
                let direct = sym.eval(Complex64::new(s, 0.0));
                assert!((v - direct).norm() < 1e-13, "{} at {s}", sym.label());
            }
        }
    }

    #[test]
    fn taylor_matches_eval() {
        let sym = Spectrum::cos_gaussian(0.3, 0.8).unwrap();
        let c = sym.taylor(30);
        let s: f64 = 0.6;
        let sum: f64 = c.iter().enumerate().map(|(j, cj)| cj * s.powi(j as i32)).sum();
        assert!((sum - sym.eval(Complex64::new(s, 0.0)).re).abs() < 1e-15);
        assert!(Spectrum::gaussian(0.0).is_err());
    }
}
