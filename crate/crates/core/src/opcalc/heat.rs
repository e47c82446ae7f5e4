//! Heat-type evolution `F = e^{α∂²} f` through the discrete Fourier transform.

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};

/// Samples of a function on the periodic grid `x_j = −L + j h`,
/// `h = 2L/N`, `N` a power of two.
#[derive(Clone, Debug, PartialEq)]
pub struct GridFunction {
    samples: Vec<Complex64>,
    half_width: f64,
}

/// Samples at the grid ends must stay below this, relative to the peak.
pub const BOUNDARY_DECAY: f64 = 1e-12;

impl GridFunction {
    pub fn new(samples: Vec<Complex64>, half_width: f64) -> Result<Self> {
        if !samples.len().is_power_of_two() || samples.len() < 2 {
            return Err(Error::InvalidParameter(format!("grid size {} is not a power of two", samples.len())));
        }
        if !(half_width > 0.0 && half_width.is_finite()) {
            return Err(Error::InvalidParameter(format!("grid half-width must be positive, got {half_width}")));
        }
        Ok(GridFunction { samples, half_width })
    }

    pub fn from_fn(f: impl Fn(f64) -> Complex64, half_width: f64, n: usize) -> Result<Self> {
        let h = 2.0 * half_width / n as f64;
        Self::new((0..n).map(|j| f(-half_width + j as f64 * h)).collect(), half_width)
    }

    /// Smallest power-of-two-extent grid, starting from `half_width = 1`, on
    /// which `f` has decayed below [`BOUNDARY_DECAY`] at both ends.
    pub fn fitted(f: impl Fn(f64) -> Complex64, n: usize) -> Result<Self> {
        let mut l = 1.0;
        for _ in 0..20 {
            let g = Self::from_fn(&f, l, n)?;
            if g.boundary_ok() {
                return Ok(g);
            }
            l *= 2.0;
        }
        Err(Error::DomainTooSmall("function does not decay within |x| < 2^20".into()))
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / self.len() as f64
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn x(&self, j: usize) -> f64 {
        -self.half_width + j as f64 * self.spacing()
    }

    fn boundary_ok(&self) -> bool {
        let peak = self.samples.iter().map(|v| v.norm()).fold(0.0, f64::max);
        let edge = self.samples[0].norm().max(self.samples[self.len() - 1].norm());
        edge <= BOUNDARY_DECAY * peak.max(f64::MIN_POSITIVE)
    }
}

/// `e^{α∂²} f`: transform, multiply by `e^{-αk²}`, transform back.
///
/// Both the input and the output must have decayed at the grid ends, since
/// the discrete transform treats the grid as periodic.
pub fn heat_evolve_ft(f: &GridFunction, alpha: f64) -> Result<GridFunction> {
    if !(alpha >= 0.0 && alpha.is_finite()) {
        return Err(Error::InvalidParameter(format!("heat evolution needs alpha >= 0, got {alpha}")));
    }
    if !f.boundary_ok() {
        return Err(Error::DomainTooSmall("input has not decayed at the grid boundary".into()));
    }
    if alpha == 0.0 {
        return Ok(f.clone());
    }
    let n = f.len();
    let mut planner = FftPlanner::<f64>::new();
    let forward = planner.plan_fft_forward(n);
    let inverse = planner.plan_fft_inverse(n);
    let mut buf = f.samples.clone();
    forward.process(&mut buf);
    let dk = 2.0 * std::f64::consts::PI / (n as f64 * f.spacing());
    for (j, v) in buf.iter_mut().enumerate() {
        let m = if j <= n / 2 { j as f64 } else { j as f64 - n as f64 };
        let k = m * dk;
        *v *= (-alpha * k * k).exp() / n as f64;
    }
    inverse.process(&mut buf);
    let out = GridFunction { samples: buf, half_width: f.half_width };
    if !out.boundary_ok() {
        return Err(Error::DomainTooSmall("evolved function reaches the grid boundary".into()));
    }
    Ok(out)
}
