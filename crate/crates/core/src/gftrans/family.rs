//! Sequences whose generating functions are known in closed form.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{factorial_f64, format_rational, powi, rational_to_f64};
use crate::seqcore::Sequence;
use crate::specfun::tricomi_c;

/// Exact terms of a sequence together with closed-form evaluators of its
/// ordinary generating function `f`, exponential generating function `g`
/// and `q(z) = Σ a_r z^r / (r!)²`.
///
/// Closed forms are analytic continuations: evaluating `f` outside the disc
/// of convergence of `Σ a_n z^n` is allowed and only fails at poles.
pub trait GeneratingFunctions: Sync {
    /// Exact `a_n`.
    fn term(&self, n: usize) -> BigRational;

    /// `f^{(r)}(z)`.
    fn ogf_derivative(&self, r: usize, z: Complex64) -> Result<Complex64>;

    /// `g^{(r)}(z)`.
    fn egf_derivative(&self, r: usize, z: Complex64) -> Complex64;

    /// `q(z) = Σ a_r z^r / (r!)²`.
    fn bessel_gf(&self, z: Complex64) -> Complex64;

    fn ogf(&self, z: Complex64) -> Result<Complex64> {
        self.ogf_derivative(0, z)
    }

    fn egf(&self, z: Complex64) -> Complex64 {
        self.egf_derivative(0, z)
    }

    /// `a_0..a_{len-1}` as a [`Sequence`].
    fn prefix(&self, len: usize) -> Sequence {
        Sequence::from_fn(len.max(1), |n| self.term(n)).expect("nonempty prefix")
    }

    fn label(&self) -> String;
}

/// Geometric-type sequences with rational ratio `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceFamily {
    /// `a_n = c^n`: `f = 1/(1 − cz)`, `g = e^{cz}`, `q = C_0(−cz)`.
    Geometric(BigRational),
    /// `a_n = n c^n`: `f = cz/(1 − cz)²`, `g = cz e^{cz}`, `q = cz C_1(−cz)`.
    LinearGeometric(BigRational),
}

const POLE_GUARD: f64 = 1e-12;

impl SequenceFamily {
    fn ratio(&self) -> &BigRational {
        match self {
            SequenceFamily::Geometric(c) | SequenceFamily::LinearGeometric(c) => c,
        }
    }

    /// `1/(1 − cz)`, failing near the pole.
    fn resolvent(&self, z: Complex64) -> Result<Complex64> {
        let c = rational_to_f64(self.ratio());
        let d = Complex64::new(1.0, 0.0) - c * z;
        if d.norm() < POLE_GUARD {
            return Err(Error::Divergence(format!("{} has a pole at z = {z}", self.label())));
        }
        Ok(d.inv())
    }
}

impl GeneratingFunctions for SequenceFamily {
    fn term(&self, n: usize) -> BigRational {
        match self {
            SequenceFamily::Geometric(c) => powi(c, n),
            SequenceFamily::LinearGeometric(c) => powi(c, n) * BigRational::from_integer(BigInt::from(n)),
        }
    }

    fn ogf_derivative(&self, r: usize, z: Complex64) -> Result<Complex64> {
        let c = rational_to_f64(self.ratio());
        let u = self.resolvent(z)?;
        let cr = c.powi(r as i32);
        Ok(match self {
            SequenceFamily::Geometric(_) => factorial_f64(r) * cr * u.powu(r as u32 + 1),
            // f = (1 − cz)^{-2} − (1 − cz)^{-1}
            SequenceFamily::LinearGeometric(_) => {
                factorial_f64(r + 1) * cr * u.powu(r as u32 + 2) - factorial_f64(r) * cr * u.powu(r as u32 + 1)
            }
        })
    }

    fn egf_derivative(&self, r: usize, z: Complex64) -> Complex64 {
        let c = rational_to_f64(self.ratio());
        let e = (c * z).exp() * c.powi(r as i32);
        match self {
            SequenceFamily::Geometric(_) => e,
            SequenceFamily::LinearGeometric(_) => e * (c * z + r as f64),
        }
    }

    fn bessel_gf(&self, z: Complex64) -> Complex64 {
        let c = rational_to_f64(self.ratio());
        match self {
            SequenceFamily::Geometric(_) => tricomi_c(0, -c * z),
            SequenceFamily::LinearGeometric(_) => c * z * tricomi_c(1, -c * z),
        }
    }

    fn label(&self) -> String {
        match self {
            SequenceFamily::Geometric(c) => format!("({})^n", format_rational(c)),
            SequenceFamily::LinearGeometric(c) => format!("n*({})^n", format_rational(c)),
        }
    }
}

/// A finite prefix read as a polynomial: terms past the end are zero.
impl GeneratingFunctions for Sequence {
    fn term(&self, n: usize) -> BigRational {
        self.get(n).cloned().unwrap_or_else(BigRational::zero)
    }

    fn ogf_derivative(&self, r: usize, z: Complex64) -> Result<Complex64> {
        let mut acc = Complex64::zero();
        for n in (r..self.len()).rev() {
            let falling: f64 = (n - r + 1..=n).map(|j| j as f64).product();
            acc = acc * z + rational_to_f64(&self.terms()[n]) * falling;
        }
        Ok(acc)
    }

    fn egf_derivative(&self, r: usize, z: Complex64) -> Complex64 {
        let mut acc = Complex64::zero();
        let mut zp = Complex64::one();
        for n in r..self.len() {
            acc += rational_to_f64(&self.terms()[n]) * zp / factorial_f64(n - r);
            zp *= z;
        }
        acc
    }

    fn bessel_gf(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::zero();
        let mut zp = Complex64::one();
        for (n, a) in self.terms().iter().enumerate() {
            let f = factorial_f64(n);
            acc += rational_to_f64(a) * zp / (f * f);
            zp *= z;
        }
        acc
    }

    fn label(&self) -> String {
        format!("finite{}", self)
    }
}

/// The five reference sequences of the identity suites:
/// `1^n`, `2^n`, `(−1/2)^n`, `n`, `n (1/2)^n`.
pub fn reference_families() -> Vec<SequenceFamily> {
    use crate::scalar::{int, rat};
    vec![
        SequenceFamily::Geometric(int(1)),
        SequenceFamily::Geometric(int(2)),
        SequenceFamily::Geometric(rat(-1, 2)),
        SequenceFamily::LinearGeometric(int(1)),
        SequenceFamily::LinearGeometric(rat(1, 2)),
    ]
}
