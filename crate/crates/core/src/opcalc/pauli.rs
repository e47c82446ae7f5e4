//! Functions of the 2×2 matrix `M = Ωσ₊ + Ω*σ₋` with `Ω = i|Ω|`, so
//! `M = [[0, i|Ω|], [−i|Ω|, 0]]`, `M² = |Ω|² I` and
//! `e^{ikM} = [[cos, −sin], [sin, cos]](|Ω|k)`.

use std::f64::consts::PI;

use nalgebra::Matrix2;
use num_complex::Complex64;

use super::quadrature::gauss_weighted_integral;
use super::symbol::SpectralSymbol;
use crate::error::{Error, Result};

/// `f(M)` with the quadrature node count used for the slowest entry.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliFunction {
    pub matrix: Matrix2<Complex64>,
    pub nodes: usize,
    pub converged: bool,
}

pub fn pauli_generator(omega: f64) -> Matrix2<Complex64> {
    let i = Complex64::new(0.0, omega);
    Matrix2::new(Complex64::default(), i, -i, Complex64::default())
}

/// `f(M) = (1/√2π) ∫ f̃(k) R(|Ω|k) dk`, `R` the rotation matrix above.
pub fn matrix_function_pauli<S>(sym: &S, omega: f64) -> Result<PauliFunction>
where
    S: SpectralSymbol + ?Sized,
{
    if !(omega >= 0.0 && omega.is_finite()) {
        return Err(Error::InvalidParameter(format!("|Omega| must be nonnegative, got {omega}")));
    }
    let y = sym.variance();
    let cos = gauss_weighted_integral(|k| sym.modulation(k) * (omega * k).cos(), y)?;
    let sin = gauss_weighted_integral(|k| sym.modulation(k) * (omega * k).sin(), y)?;
    let s = 1.0 / (2.0 * PI).sqrt();
    let (c, sn) = (cos.value * s, sin.value * s);
    Ok(PauliFunction {
        matrix: Matrix2::new(c, -sn, sn, c),
        nodes: cos.nodes.max(sin.nodes),
        converged: cos.converged && sin.converged,
    })
}

/// `f(M) = V diag(f(λ)) V†` from the Hermitian eigendecomposition of `M`.
pub fn pauli_spectral<S>(sym: &S, omega: f64) -> Matrix2<Complex64>
where
    S: SpectralSymbol + ?Sized,
{
    let eig = pauli_generator(omega).symmetric_eigen();
    let v = eig.eigenvectors;
    let d = Matrix2::from_diagonal(&eig.eigenvalues.map(|l| sym.eval(Complex64::new(l, 0.0))));
    v * d * v.adjoint()
}

/// Largest entrywise difference between two 2×2 matrices.
pub fn max_entry_difference(a: &Matrix2<Complex64>, b: &Matrix2<Complex64>) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opcalc::symbol::Spectrum;

    #[test]
    fn quadrature_matches_spectral() {
        let syms = [Spectrum::gaussian(1.0).unwrap(), Spectrum::cos_gaussian(0.5, 1.2).unwrap()];
        for sym in syms {
            for &w in &[0.0, 0.7, 1.0, 2.0] {
                let q = matrix_function_pauli(&sym, w).unwrap();
                let s = pauli_spectral(&sym, w);
                assert!(max_entry_difference(&q.matrix, &s) < 1e-10, "{} {w}", sym.label());
            }
        }
    }

    #[test]
    fn gaussian_of_unit_generator() {
        let q = matrix_function_pauli(&Spectrum::gaussian(1.0).unwrap(), 1.0).unwrap();
        let want = Matrix2::identity() * Complex64::new((-1.0f64).exp(), 0.0);
        assert!(max_entry_difference(&q.matrix, &want) < 1e-13);
        let z = matrix_function_pauli(&Spectrum::gaussian(1.0).unwrap(), 0.0).unwrap();
        assert!(max_entry_difference(&z.matrix, &Matrix2::identity()) < 1e-13);
        assert!(matrix_function_pauli(&Spectrum::gaussian(1.0).unwrap(), -1.0).is_err());
    }
}
