//! Linear operators on polynomials of degree at most `D`, stored as dense
//! complex matrices in the monomial basis.
//!
//! Column `j` holds the image of `x^j`. Degree-raising factors push part of
//! the image past `x^D`; that part is dropped and the operator records the
//! highest input degree for which the result is still exact.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct TruncatedOperator {
    matrix: DMatrix<Complex64>,
    /// Highest input degree mapped exactly; `None` once exactness is lost for
    /// every input (for example after exponentiating a raising operator).
    validity_degree: Option<usize>,
    /// Largest degree increase; negative for strictly lowering operators.
    raise: isize,
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

impl TruncatedOperator {
    fn from_fn(degree_cap: usize, raise: isize, image: impl Fn(usize) -> Vec<(usize, Complex64)>) -> Self {
        let n = degree_cap + 1;
        let mut m = DMatrix::from_element(n, n, c(0.0));
        for j in 0..n {
            for (i, v) in image(j) {
                if i < n {
                    m[(i, j)] += v;
                }
            }
        }
        let validity_degree = if raise > 0 { degree_cap.checked_sub(raise as usize) } else { Some(degree_cap) };
        TruncatedOperator { matrix: m, validity_degree, raise }
    }

    pub fn identity(degree_cap: usize) -> Self {
        Self::from_fn(degree_cap, 0, |j| vec![(j, c(1.0))])
    }

    /// `∂_x`: `x^j ↦ j x^{j-1}`.
    pub fn derivative(degree_cap: usize) -> Self {
        Self::from_fn(degree_cap, -1, |j| if j == 0 { vec![] } else { vec![(j - 1, c(j as f64))] })
    }

    /// Multiplication by `x`.
    pub fn multiply_x(degree_cap: usize) -> Self {
        Self::from_fn(degree_cap, 1, |j| vec![(j + 1, c(1.0))])
    }

    /// `∂_x x ∂_x`: `x^j ↦ j² x^{j-1}`.
    pub fn laguerre_derivative(degree_cap: usize) -> Self {
        Self::from_fn(degree_cap, -1, |j| if j == 0 { vec![] } else { vec![(j - 1, c((j * j) as f64))] })
    }

    /// Integration from 0: `x^j ↦ x^{j+1}/(j+1)`.
    pub fn neg_derivative(degree_cap: usize) -> Self {
        Self::from_fn(degree_cap, 1, |j| vec![(j + 1, c(1.0 / (j + 1) as f64))])
    }

    pub fn degree_cap(&self) -> usize {
        self.matrix.nrows() - 1
    }

    pub fn validity_degree(&self) -> Option<usize> {
        self.validity_degree
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    fn same_cap(&self, other: &Self) -> Result<()> {
        if self.degree_cap() == other.degree_cap() {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "degree caps differ: {} vs {}",
                self.degree_cap(),
                other.degree_cap()
            )))
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        TruncatedOperator { matrix: &self.matrix * s, ..self.clone() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_cap(other)?;
        Ok(TruncatedOperator {
            matrix: &self.matrix + &other.matrix,
            validity_degree: min_opt(self.validity_degree, other.validity_degree),
            raise: self.raise.max(other.raise),
        })
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.same_cap(other)?;
        let cap = self.degree_cap() as isize;
        let after_other = self.validity_degree.and_then(|v| {
            let limit = (v as isize - other.raise).min(cap);
            (limit >= 0).then_some(limit as usize)
        });
        Ok(TruncatedOperator {
            matrix: &self.matrix * &other.matrix,
            validity_degree: min_opt(other.validity_degree, after_other),
            raise: self.raise + other.raise,
        })
    }

    pub fn pow(&self, m: usize) -> Result<Self> {
        let mut acc = Self::identity(self.degree_cap());
        for _ in 0..m {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Matrix exponential in the basis `x^j / s_j`: the matrix is conjugated
    /// by `diag(s)` before calling the Padé routine and conjugated back
    /// after, which keeps factorial-sized entries near unit size.
    pub fn exp_scaled(&self, scales: &[f64]) -> Result<Self> {
        let n = self.matrix.nrows();
        if scales.len() != n || scales.iter().any(|s| !(s.is_finite() && *s > 0.0)) {
            return Err(Error::InvalidParameter("basis scales must be positive and one per degree".into()));
        }
        // B = S^{-1} A S with S = diag(1/s): entry (i,j) picks up s_i / s_j
        let b = DMatrix::from_fn(n, n, |i, j| self.matrix[(i, j)] * (scales[i] / scales[j]));
        let e = b.exp();
        let matrix = DMatrix::from_fn(n, n, |i, j| e[(i, j)] * (scales[j] / scales[i]));
        Ok(TruncatedOperator {
            matrix,
            validity_degree: if self.raise > 0 { None } else { self.validity_degree },
            raise: if self.raise > 0 { isize::MAX / 4 } else { 0 },
        })
    }

    /// Matrix exponential with Osborne balancing to pick the basis scales.
    pub fn exp(&self) -> Result<Self> {
        let scales = osborne_scales(&self.matrix);
        self.exp_scaled(&scales)
    }

    /// Image of the polynomial with ascending coefficients `p`, padded or
    /// truncated to the cap.
    pub fn apply(&self, p: &[Complex64]) -> Vec<Complex64> {
        let n = self.matrix.nrows();
        let v = nalgebra::DVector::from_fn(n, |i, _| p.get(i).copied().unwrap_or(c(0.0)));
        (&self.matrix * v).iter().copied().collect()
    }
}

fn min_opt(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        _ => None,
    }
}

/// Diagonal scales from a bounded number of Osborne sweeps with power-of-two
/// steps. Rows or columns with no off-diagonal mass are left alone, and the
/// sweep count is capped because chains such as `∂` can be scaled toward
/// zero indefinitely.
pub fn osborne_scales(a: &DMatrix<Complex64>) -> Vec<f64> {
    let n = a.nrows();
    let mut d = vec![1.0f64; n];
    for _ in 0..32 {
        let mut changed = false;
        for i in 0..n {
            let mut r = 0.0;
            let mut col = 0.0;
            for j in 0..n {
                if j != i {
                    col += a[(j, i)].norm() * d[j] / d[i];
                    r += a[(i, j)].norm() * d[i] / d[j];
                }
            }
            if r == 0.0 || col == 0.0 {
                continue;
            }
            let mut f = 1.0;
            let (mut rr, mut cc) = (r, col);
            while cc < rr / 2.0 {
                cc *= 2.0;
                rr /= 2.0;
                f *= 2.0;
            }
            while cc >= rr * 2.0 {
                cc /= 2.0;
                rr *= 2.0;
                f /= 2.0;
            }
            if (rr + cc) < 0.95 * (r + col) {
                changed = true;
                d[i] /= f;
            }
        }
        if !changed {
            break;
        }
    }
    d
}

/// Evaluates a polynomial with complex coefficients at `x`.
pub fn eval_poly(p: &[Complex64], x: Complex64) -> Complex64 {
    p.iter().rev().fold(c(0.0), |acc, &cf| acc * x + cf)
}
