//! Closed-form generating functions of transformed sequences, expressed
//! through the generating functions of the input.

use num_complex::Complex64;

use super::family::GeneratingFunctions;
use super::SeriesKind;
use crate::error::{Error, Result};
use crate::scalar::{rational_to_f64, Scalar};
use crate::seqcore::{HermiteParams, LaguerreParams, ModularParams};
use crate::specfun::Stirling2Table;

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn require_inside(r: f64, what: &str) -> Result<()> {
    if r < 1.0 {
        Ok(())
    } else {
        Err(Error::Divergence(format!("{what} needs modulus < 1, got {r}")))
    }
}

/// The map `f ↦ (1/(1−x)) f(−x/(1−x))` on an arbitrary function. Applying
/// it twice gives back `f(x)`.
pub fn binomial_ogf_map(f: impl Fn(Complex64) -> Complex64, x: Complex64) -> Complex64 {
    let u = (one() - x).inv();
    u * f(-x * u)
}

/// Ordinary generating function of the binomial transform,
/// `(1/(1−x)) f(−x/(1−x))`, for `|x| < 1`.
pub fn binomial_gf_ordinary<G: GeneratingFunctions + ?Sized>(a: &G, x: Complex64) -> Result<Complex64> {
    require_inside(x.norm(), "binomial OGF argument")?;
    let u = (one() - x).inv();
    Ok(u * a.ogf(-x * u)?)
}

/// Exponential generating function of the binomial transform, `e^x g(−x)`.
pub fn binomial_gf_exponential<G: GeneratingFunctions + ?Sized>(a: &G, x: Complex64) -> Complex64 {
    x.exp() * a.egf(-x)
}

/// Modular transform: ordinary `(1/(1−αx)) f(βx/(αx−1))` for `|αx| < 1`,
/// exponential `e^{αx} g(−βx)`.
pub fn modular_gf<G: GeneratingFunctions + ?Sized>(
    a: &G,
    p: &ModularParams,
    x: Complex64,
    kind: SeriesKind,
) -> Result<Complex64> {
    let alpha = rational_to_f64(&p.alpha);
    let beta = rational_to_f64(&p.beta);
    match kind {
        SeriesKind::Ordinary => {
            require_inside((alpha * x).norm(), "modular OGF alpha*x")?;
            let u = (one() - alpha * x).inv();
            Ok(u * a.ogf(-beta * x * u)?)
        }
        SeriesKind::Exponential => Ok((alpha * x).exp() * a.egf(-beta * x)),
    }
}

/// Rising k-binomial transform through the Stirling expansion of
/// `(z d/dz)^k`: ordinary `Σ_r (−x)^r/(1−x)^{r+1} S2(r,k) f^{(r)}(−x/(1−x))`,
/// exponential `e^x Σ_r (−x)^r S2(r,k) g^{(r)}(−x)`.
pub fn k_binomial_gf<G: GeneratingFunctions + ?Sized>(
    a: &G,
    k: usize,
    x: Complex64,
    kind: SeriesKind,
) -> Result<Complex64> {
    let table = Stirling2Table::new(k)?;
    match kind {
        SeriesKind::Ordinary => {
            require_inside(x.norm(), "k-binomial OGF argument")?;
            let u = (one() - x).inv();
            let z = -x * u;
            let mut acc = Complex64::new(0.0, 0.0);
            for r in 0..=k {
                let s = <f64 as Scalar>::from_bigint(table.get(r, k));
                if s == 0.0 {
                    continue;
                }
                acc += (-x).powu(r as u32) * u.powu(r as u32 + 1) * s * a.ogf_derivative(r, z)?;
            }
            Ok(acc)
        }
        SeriesKind::Exponential => {
            let mut acc = Complex64::new(0.0, 0.0);
            for r in 0..=k {
                let s = <f64 as Scalar>::from_bigint(table.get(r, k));
                if s == 0.0 {
                    continue;
                }
                acc += (-x).powu(r as u32) * s * a.egf_derivative(r, -x);
            }
            Ok(x.exp() * acc)
        }
    }
}

/// Which Hermite transform a closed form refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HermiteVariant {
    /// `b_n = H_n(α, β â)`, EGF `e^{αx} g(βx²)`.
    Plain,
    /// `b_n = H_n(α â, β)`, EGF `e^{βx²} g(αx)`.
    Complementary,
}

/// Exponential generating function of a Hermite transform.
pub fn hermite_gf<G: GeneratingFunctions + ?Sized>(
    a: &G,
    p: &HermiteParams,
    x: Complex64,
    variant: HermiteVariant,
) -> Complex64 {
    let alpha = rational_to_f64(&p.alpha);
    let beta = rational_to_f64(&p.beta);
    match variant {
        HermiteVariant::Plain => (alpha * x).exp() * a.egf(beta * x * x),
        HermiteVariant::Complementary => (beta * x * x).exp() * a.egf(alpha * x),
    }
}

/// Laguerre transform: ordinary `(1/(1−βx)) g(−αx/(1−βx))` with `g` the
/// exponential generating function of `a`, for `|βx| < 1`; exponential
/// `e^{βx} q(−αx)`.
pub fn laguerre_gf<G: GeneratingFunctions + ?Sized>(
    a: &G,
    p: &LaguerreParams,
    x: Complex64,
    kind: SeriesKind,
) -> Result<Complex64> {
    let alpha = rational_to_f64(&p.alpha);
    let beta = rational_to_f64(&p.beta);
    match kind {
        SeriesKind::Ordinary => {
            require_inside((beta * x).norm(), "Laguerre OGF beta*x")?;
            let u = (one() - beta * x).inv();
            Ok(u * a.egf(-alpha * x * u))
        }
        SeriesKind::Exponential => Ok((beta * x).exp() * a.bessel_gf(-alpha * x)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gftrans::family::SequenceFamily;
    use crate::scalar::{int, rat};
    use crate::seqcore::Sequence;
    use crate::specfun::hermite2;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * a.norm().max(1.0)
    }

    #[test]
    fn binomial_examples() {
        let ones = SequenceFamily::Geometric(int(1));
        for &x in &[-0.4, 0.1, 0.45] {
            assert!(close(binomial_gf_ordinary(&ones, re(x)).unwrap(), re(1.0), 1e-15));
            assert!(close(binomial_gf_exponential(&ones, re(x)), re(1.0), 1e-15));
            let n = SequenceFamily::LinearGeometric(int(1));
            assert!(close(binomial_gf_exponential(&n, re(x)), re(-x), 1e-15));
        }
        let twos = SequenceFamily::Geometric(int(2));
        assert!(close(binomial_gf_ordinary(&twos, re(0.2)).unwrap(), re(1.0 / 1.2), 1e-15));
        let a = Sequence::from_integers(&[3, 1, 4]).unwrap();
        assert_eq!(binomial_gf_ordinary(&a, re(0.0)).unwrap(), re(3.0));
        assert_eq!(binomial_gf_exponential(&a, re(0.0)), re(3.0));
        assert!(binomial_gf_ordinary(&a, re(1.0)).is_err());
    }

    #[test]
    fn involution_at_function_level() {
        let f = |z: Complex64| (z * 0.7).exp() / (one() + z * z);
        for &x in &[re(0.3), Complex64::new(-0.2, 0.25), re(-0.45)] {
            let twice = binomial_ogf_map(|y| binomial_ogf_map(f, y), x);
            assert!(close(twice, f(x), 1e-12));
        }
    }

    #[test]
    fn modular_examples() {
        let ones = SequenceFamily::Geometric(int(1));
        let p = ModularParams::from_integers(2, 1);
        let v = modular_gf(&ones, &p, re(0.3), SeriesKind::Exponential).unwrap();
        assert!(close(v, re(0.3f64.exp()), 1e-15));
        let unit = ModularParams::from_integers(1, 1);
        let fam = SequenceFamily::Geometric(rat(-1, 2));
        for &x in &[0.1, -0.3] {
            assert!(close(
                modular_gf(&fam, &unit, re(x), SeriesKind::Ordinary).unwrap(),
                binomial_gf_ordinary(&fam, re(x)).unwrap(),
                1e-15
            ));
            assert!(close(
                modular_gf(&fam, &unit, re(x), SeriesKind::Exponential).unwrap(),
                binomial_gf_exponential(&fam, re(x)),
                1e-15
            ));
        }
    }

    #[test]
    fn k_binomial_examples() {
        let ones = SequenceFamily::Geometric(int(1));
        let v = k_binomial_gf(&ones, 1, re(0.4), SeriesKind::Exponential).unwrap();
        assert!(close(v, re(-0.4), 1e-15));
        let fam = SequenceFamily::Geometric(rat(-1, 2));
        for kind in [SeriesKind::Ordinary, SeriesKind::Exponential] {
            let a = k_binomial_gf(&fam, 0, re(0.25), kind).unwrap();
            let b = match kind {
                SeriesKind::Ordinary => binomial_gf_ordinary(&fam, re(0.25)).unwrap(),
                SeriesKind::Exponential => binomial_gf_exponential(&fam, re(0.25)),
            };
            assert!(close(a, b, 1e-15));
        }
    }

    #[test]
    fn hermite_examples() {
        let ones = SequenceFamily::Geometric(int(1));
        let p = HermiteParams::new(rat(1, 2), rat(-1, 3));
        let x: f64 = 0.4;
        let mut series = 0.0;
        for n in 0..40 {
            series += hermite2::<f64>(n, &0.5, &(-1.0 / 3.0)) * x.powi(n as i32) / crate::scalar::factorial_f64(n);
        }
        assert!(close(hermite_gf(&ones, &p, re(x), HermiteVariant::Plain), re(series), 1e-13));
        let zero_beta = HermiteParams::new(rat(3, 2), int(0));
        let fam = SequenceFamily::LinearGeometric(rat(1, 2));
        assert!(close(
            hermite_gf(&fam, &zero_beta, re(x), HermiteVariant::Complementary),
            fam.egf(re(1.5 * x)),
            1e-15
        ));
        let a = Sequence::from_integers(&[5, 1]).unwrap();
        assert_eq!(hermite_gf(&a, &p, re(0.0), HermiteVariant::Plain), re(5.0));
    }

    #[test]
    fn laguerre_specials() {
        let ones = SequenceFamily::Geometric(int(1));
        let p = LaguerreParams::from_integers(1, 1);
        for &x in &[0.0, 0.2, 0.5] {
            let ogf = laguerre_gf(&ones, &p, re(x), SeriesKind::Ordinary).unwrap();
            assert!(close(ogf, re((-x / (1.0 - x)).exp() / (1.0 - x)), 1e-15));
        }
        let a = Sequence::from_integers(&[7, 2]).unwrap();
        assert_eq!(laguerre_gf(&a, &p, re(0.0), SeriesKind::Exponential).unwrap(), re(7.0));
        assert!(laguerre_gf(&a, &LaguerreParams::from_integers(1, 4), re(0.3), SeriesKind::Ordinary).is_err());
    }
}
