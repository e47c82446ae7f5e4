//! Series-versus-closed-form comparison for every transform.
//!
//! The transformed sequence is computed exactly by [`crate::seqcore`] to a
//! generous length, weighted by the series kind, and summed to the requested
//! truncation order. The discarded part is bounded by the explicit sum of the
//! next terms up to the computed length, closed with a geometric estimate
//! from the ratio of the last computed terms.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use super::closed::{
    binomial_gf_exponential, binomial_gf_ordinary, hermite_gf, k_binomial_gf, laguerre_gf, modular_gf,
    HermiteVariant,
};
use super::family::GeneratingFunctions;
use super::SeriesKind;
use crate::error::Result;
use crate::scalar::{factorial, format_rational, rational_to_f64};
use crate::seqcore::{
    binomial_transform, hermite_complementary_seq, hermite_transform_seq, laguerre_transform_seq, modular_transform,
    rising_k_binomial, HermiteParams, LaguerreParams, ModularParams, Sequence,
};

/// A sequence transform that has a closed-form generating function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GfTransform {
    Binomial,
    Modular(ModularParams),
    RisingK(u32),
    Hermite(HermiteParams),
    HermiteComplementary(HermiteParams),
    Laguerre(LaguerreParams),
}

impl GfTransform {
    pub fn name(&self) -> String {
        match self {
            GfTransform::Binomial => "binomial".into(),
            GfTransform::Modular(p) => {
                format!("modular(alpha={},beta={})", format_rational(&p.alpha), format_rational(&p.beta))
            }
            GfTransform::RisingK(k) => format!("rising-k(k={k})"),
            GfTransform::Hermite(p) => {
                format!("hermite(alpha={},beta={})", format_rational(&p.alpha), format_rational(&p.beta))
            }
            GfTransform::HermiteComplementary(p) => format!(
                "hermite-complementary(alpha={},beta={})",
                format_rational(&p.alpha),
                format_rational(&p.beta)
            ),
            GfTransform::Laguerre(p) => {
                format!("laguerre(alpha={},beta={})", format_rational(&p.alpha), format_rational(&p.beta))
            }
        }
    }

    /// Series kinds for which a closed form exists.
    pub fn kinds(&self) -> &'static [SeriesKind] {
        match self {
            GfTransform::Hermite(_) | GfTransform::HermiteComplementary(_) => &[SeriesKind::Exponential],
            _ => &[SeriesKind::Ordinary, SeriesKind::Exponential],
        }
    }

    pub fn apply(&self, a: &Sequence) -> Sequence {
        match self {
            GfTransform::Binomial => binomial_transform(a),
            GfTransform::Modular(p) => modular_transform(a, p),
            GfTransform::RisingK(k) => rising_k_binomial(a, *k),
            GfTransform::Hermite(p) => hermite_transform_seq(a, p),
            GfTransform::HermiteComplementary(p) => hermite_complementary_seq(a, p),
            GfTransform::Laguerre(p) => laguerre_transform_seq(a, p),
        }
    }

    pub fn closed_form<G: GeneratingFunctions + ?Sized>(
        &self,
        a: &G,
        x: Complex64,
        kind: SeriesKind,
    ) -> Result<Complex64> {
        match (self, kind) {
            (GfTransform::Binomial, SeriesKind::Ordinary) => binomial_gf_ordinary(a, x),
            (GfTransform::Binomial, SeriesKind::Exponential) => Ok(binomial_gf_exponential(a, x)),
            (GfTransform::Modular(p), _) => modular_gf(a, p, x, kind),
            (GfTransform::RisingK(k), _) => k_binomial_gf(a, *k as usize, x, kind),
            (GfTransform::Hermite(p), SeriesKind::Exponential) => Ok(hermite_gf(a, p, x, HermiteVariant::Plain)),
            (GfTransform::HermiteComplementary(p), SeriesKind::Exponential) => {
                Ok(hermite_gf(a, p, x, HermiteVariant::Complementary))
            }
            (GfTransform::Laguerre(p), _) => laguerre_gf(a, p, x, kind),
            (t, k) => Err(crate::Error::InvalidParameter(format!("{} has no {k:?} closed form", t.name()))),
        }
    }

    /// The six transforms of the identity suites, with fixed parameters.
    pub fn reference_set() -> Vec<GfTransform> {
        use crate::scalar::rat;
        vec![
            GfTransform::Binomial,
            GfTransform::Modular(ModularParams::new(rat(1, 2), rat(1, 3))),
            GfTransform::RisingK(2),
            GfTransform::Hermite(HermiteParams::new(rat(1, 2), rat(1, 4))),
            GfTransform::HermiteComplementary(HermiteParams::new(rat(3, 4), rat(-1, 3))),
            GfTransform::Laguerre(LaguerreParams::new(rat(1, 1), rat(1, 2))),
        ]
    }
}

/// Weighted coefficients `b_n` (ordinary) or `b_n / n!` (exponential) of a
/// transformed sequence, kept as doubles after exact computation.
#[derive(Clone, Debug)]
pub struct TransformedSeries {
    weighted: Vec<Complex64>,
    kind: SeriesKind,
}

/// Number of exact terms computed beyond any truncation order in use.
pub const REFERENCE_TERMS: usize = 256;

impl TransformedSeries {
    pub fn new<G: GeneratingFunctions + ?Sized>(t: &GfTransform, a: &G, kind: SeriesKind, terms: usize) -> Self {
        let b = t.apply(&a.prefix(terms));
        Self::from_sequence(&b, kind)
    }

    pub fn from_sequence(b: &Sequence, kind: SeriesKind) -> Self {
        let mut fact = BigInt::from(1);
        let weighted = b
            .terms()
            .iter()
            .enumerate()
            .map(|(n, t)| {
                let w = match kind {
                    SeriesKind::Ordinary => rational_to_f64(t),
                    SeriesKind::Exponential => {
                        if n > 0 {
                            fact *= n;
                        }
                        rational_to_f64(&(t / BigRational::from_integer(fact.clone())))
                    }
                };
                Complex64::new(w, 0.0)
            })
            .collect();
        TransformedSeries { weighted, kind }
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.weighted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weighted.is_empty()
    }

    /// Sum through `order`, the explicit remainder through the computed
    /// length, and a geometric closure for what lies beyond.
    pub fn eval(&self, x: Complex64, order: usize) -> SeriesSplit {
        let mut truncated = Complex64::zero();
        let mut rest = Complex64::zero();
        let mut magnitude = 0.0;
        let mut tail = 0.0;
        let mut xp = Complex64::new(1.0, 0.0);
        let mut mags = Vec::with_capacity(self.weighted.len());
        for (n, c) in self.weighted.iter().enumerate() {
            let term = c * xp;
            mags.push(term.norm());
            if n <= order {
                truncated += term;
                magnitude += term.norm();
            } else {
                rest += term;
                tail += term.norm();
            }
            xp *= x;
        }
        let closure = geometric_closure(&mags);
        SeriesSplit {
            truncated,
            reference: truncated + rest,
            tail_bound: tail + closure,
            closure,
            magnitude: magnitude + tail,
        }
    }
}

/// `|t_N| q/(1−q)` with `q` the largest ratio among the last 16 nonzero
/// consecutive magnitudes; infinite when the terms are not decaying.
fn geometric_closure(mags: &[f64]) -> f64 {
    let n = mags.len();
    if n < 2 {
        return 0.0;
    }
    let window = &mags[n.saturating_sub(17)..];
    let last = *window.last().unwrap();
    let mut q: f64 = 0.0;
    let mut any = false;
    for w in window.windows(2) {
        if w[0] > 0.0 && w[1] > 0.0 {
            q = q.max(w[1] / w[0]);
            any = true;
        }
    }
    if !any {
        return 0.0;
    }
    if q >= 1.0 {
        return f64::INFINITY;
    }
    last * q / (1.0 - q)
}

/// Result of [`TransformedSeries::eval`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesSplit {
    /// `Σ_{n≤T}`.
    pub truncated: Complex64,
    /// Sum over every computed term.
    pub reference: Complex64,
    /// `Σ_{T<n<N} |term| + closure`.
    pub tail_bound: f64,
    pub closure: f64,
    /// `Σ |term|`, the scale for rounding error.
    pub magnitude: f64,
}

/// One closed-form-versus-series comparison.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IdentityCheck {
    pub x: Complex64,
    pub closed: Complex64,
    pub split: SeriesSplit,
}

impl IdentityCheck {
    pub fn new<G: GeneratingFunctions + ?Sized>(
        t: &GfTransform,
        a: &G,
        series: &TransformedSeries,
        x: Complex64,
        order: usize,
    ) -> Result<Self> {
        let closed = t.closed_form(a, x, series.kind())?;
        Ok(IdentityCheck { x, closed, split: series.eval(x, order) })
    }

    /// `|closed − Σ_{n≤T}|`.
    pub fn truncated_error(&self) -> f64 {
        (self.closed - self.split.truncated).norm()
    }

    /// `|closed − Σ_{n<N}|`.
    pub fn reference_error(&self) -> f64 {
        (self.closed - self.split.reference).norm()
    }

    /// Rounding allowance proportional to the summed magnitudes.
    pub fn rounding(&self) -> f64 {
        64.0 * f64::EPSILON * (self.split.magnitude + self.closed.norm())
    }

    /// Truncated sum within its tail bound and the full reference sum within
    /// `rel` of the closed form.
    pub fn passes(&self, rel: f64) -> bool {
        let scale = self.closed.norm().max(1.0);
        self.truncated_error() <= self.split.tail_bound + self.rounding() + rel * scale
            && self.reference_error() <= rel * scale
    }

    /// The worse of the two normalized discrepancies, for reporting.
    pub fn residual(&self) -> f64 {
        let scale = self.closed.norm().max(1.0);
        let over_tail = (self.truncated_error() - self.split.tail_bound - self.rounding()).max(0.0);
        (over_tail / scale).max(self.reference_error() / scale)
    }
}

/// `count` deterministic sample points with `|x| ≤ radius`: moduli evenly
/// spaced, arguments on a golden-angle spiral, the first three real.
pub fn sample_points(count: usize, radius: f64) -> Vec<Complex64> {
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..count)
        .map(|j| {
            let r = radius * (j + 1) as f64 / count as f64;
            match j % 7 {
                0 => Complex64::new(r, 0.0),
                3 => Complex64::new(-r, 0.0),
                _ => Complex64::from_polar(r, golden * j as f64),
            }
        })
        .collect()
}

/// Exact `n!` as a rational, for callers that weight sequences themselves.
pub fn factorial_rational(n: usize) -> BigRational {
    BigRational::from_integer(factorial(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gftrans::family::reference_families;

    #[test]
    fn master_property_small() {
        let points = sample_points(6, 0.5);
        for t in GfTransform::reference_set() {
            for fam in reference_families() {
                for &kind in t.kinds() {
                    let series = TransformedSeries::new(&t, &fam, kind, 160);
                    for &x in &points {
                        let check = IdentityCheck::new(&t, &fam, &series, x, 64).unwrap();
                        assert!(
                            check.passes(1e-10),
                            "{} {} {kind:?} x={x}: {check:?}",
                            t.name(),
                            fam.label()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn tampered_closed_form_is_caught() {
        // a wrong Laguerre prefactor must be visible at the 1e-10 level
        let t = GfTransform::Laguerre(LaguerreParams::new(crate::scalar::int(1), crate::scalar::int(1)));
        let fam = crate::gftrans::SequenceFamily::Geometric(crate::scalar::int(1));
        let b = crate::seqcore::laguerre_transform_unnormalized(&fam.prefix(100), &LaguerreParams::new(crate::scalar::int(1), crate::scalar::int(1)));
        let series = TransformedSeries::from_sequence(&b, SeriesKind::Exponential);
        let check = IdentityCheck::new(&t, &fam, &series, Complex64::new(0.4, 0.0), 64).unwrap();
        assert!(!check.passes(1e-10));
    }
}
