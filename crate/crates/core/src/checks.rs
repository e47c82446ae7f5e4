//! Named identity suites: each runs a family of closed-form-versus-oracle
//! comparisons and returns one row per check.
//!
//! Rows whose reference form is known to be misprinted are marked
//! [`Status::FlaggedErrata`] when the misprint reproduces, and fail if it
//! unexpectedly agrees.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::appell::{self, AppellFamily, Sign};
use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::gftrans::identity::sample_points;
use crate::gftrans::{
    hermite_gf, laguerre_gf, GeneratingFunctions, GfTransform, HermiteVariant, IdentityCheck, SequenceFamily,
    SeriesKind, TransformedSeries,
};
use crate::opcalc::disentangle::{cubic_errata_parameters, residual_magnitude};
use crate::opcalc::heat::{heat_evolve_ft, GridFunction};
use crate::opcalc::laguerre::ORACLE_DEGREE;
use crate::opcalc::pauli::max_entry_difference;
use crate::opcalc::{self as op, CubicConstants, InitialCondition, Spectrum};
use crate::scalar::{int, rat, rational_to_complex, rational_to_f64};
use crate::seqcore::{self, HermiteParams, LaguerreParams, ModularParams, Sequence, TransformSpec};
use crate::specfun::{hermite2, tricomi_coefficients};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    FlaggedErrata,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::FlaggedErrata => "flagged-errata",
        }
    }
}

/// One check of a suite.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRow {
    pub suite: String,
    pub check: String,
    pub status: Status,
    pub residual: f64,
    pub tolerance: f64,
    /// Largest quadrature node count used, when the check integrates.
    pub nodes: Option<usize>,
    #[serde(skip)]
    pub runtime: Duration,
}

/// Knobs shared by every suite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SuiteConfig {
    /// Replaces the default tolerance of every floating-point check.
    pub tolerance: Option<f64>,
    /// Seed for the randomized suites.
    pub seed: u64,
    /// Replaces the default truncation order where a suite has one.
    pub order: Option<usize>,
    pub exec: Execution,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { tolerance: None, seed: 0x5eed, order: None, exec: Execution::default() }
    }
}

impl SuiteConfig {
    fn tol(&self, default: f64) -> f64 {
        self.tolerance.unwrap_or(default)
    }
}

pub const SUITES: [&str; 14] = [
    "involution",
    "modular",
    "k-binomial",
    "gf-identities",
    "laguerre-special",
    "hermite-integral",
    "tricomi",
    "disentangle",
    "pauli",
    "weyl-borel",
    "integro-diff",
    "appell",
    "umbral",
    "heat",
];

/// Runs one suite, or every suite for `"all"`.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Vec<CheckRow>> {
    if name == "all" {
        let mut rows = Vec::new();
        for s in SUITES {
            rows.extend(run_suite(s, cfg)?);
        }
        return Ok(rows);
    }
    let mut suite = Suite { name, rows: Vec::new() };
    match name {
        "involution" => involution(&mut suite, cfg),
        "modular" => modular(&mut suite, cfg),
        "k-binomial" => k_binomial(&mut suite, cfg),
        "gf-identities" => gf_identities(&mut suite, cfg),
        "laguerre-special" => laguerre_special(&mut suite, cfg),
        "hermite-integral" => hermite_integral(&mut suite, cfg),
        "tricomi" => tricomi(&mut suite, cfg),
        "disentangle" => disentangle(&mut suite, cfg),
        "pauli" => pauli(&mut suite, cfg),
        "weyl-borel" => weyl_borel(&mut suite, cfg),
        "integro-diff" => integro_diff(&mut suite, cfg),
        "appell" => appell_suite(&mut suite, cfg),
        "umbral" => umbral(&mut suite, cfg),
        "heat" => heat(&mut suite, cfg),
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown suite {other:?}; expected one of {} or all",
                SUITES.join(", ")
            )))
        }
    }?;
    Ok(suite.rows)
}

struct Suite<'a> {
    name: &'a str,
    rows: Vec<CheckRow>,
}

/// What a measurement produced.
struct Measured {
    residual: f64,
    nodes: Option<usize>,
}

impl From<f64> for Measured {
    fn from(residual: f64) -> Self {
        Measured { residual, nodes: None }
    }
}

impl Suite<'_> {
    fn push(&mut self, check: &str, tolerance: f64, errata: bool, f: impl FnOnce() -> Result<Measured>) -> Result<()> {
        let start = Instant::now();
        let m = f()?;
        let runtime = start.elapsed();
        let within = m.residual <= tolerance;
        let status = match (errata, within) {
            (false, true) => Status::Pass,
            (true, false) => Status::FlaggedErrata,
            _ => Status::Fail,
        };
        self.rows.push(CheckRow {
            suite: self.name.to_string(),
            check: check.to_string(),
            status,
            residual: m.residual,
            tolerance,
            nodes: m.nodes,
            runtime,
        });
        Ok(())
    }

    fn check(&mut self, check: &str, tolerance: f64, f: impl FnOnce() -> Result<Measured>) -> Result<()> {
        self.push(check, tolerance, false, f)
    }

    fn errata(&mut self, check: &str, tolerance: f64, f: impl FnOnce() -> Result<Measured>) -> Result<()> {
        self.push(check, tolerance, true, f)
    }
}

/// Random rational sequence: length `1..=32`, numerators and denominators
/// bounded by `10⁶` in absolute value.
pub fn random_sequence(rng: &mut impl Rng) -> Sequence {
    let len = rng.random_range(1..=32);
    Sequence::new((0..len).map(|_| random_rational(rng)).collect()).expect("nonempty")
}

pub fn random_rational(rng: &mut impl Rng) -> BigRational {
    BigRational::new(
        BigInt::from(rng.random_range(-1_000_000i64..=1_000_000)),
        BigInt::from(rng.random_range(1i64..=1_000_000)),
    )
}

fn random_nonzero_rational(rng: &mut impl Rng) -> BigRational {
    loop {
        let r = random_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

fn mismatches(a: &[BigRational], b: &[BigRational]) -> f64 {
    let extra = a.len().abs_diff(b.len());
    (a.iter().zip(b).filter(|(x, y)| x != y).count() + extra) as f64
}

fn option_mismatches(closed: &[Option<BigRational>], direct: &Sequence) -> f64 {
    closed
        .iter()
        .zip(direct.terms())
        .filter(|(c, d)| c.as_ref() != Some(*d))
        .count() as f64
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, f64::max)
}

const SAMPLES: usize = 200;

fn involution(s: &mut Suite, cfg: &SuiteConfig) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let seqs: Vec<Sequence> = (0..SAMPLES).map(|_| random_sequence(&mut rng)).collect();
    s.check("binomial transform is an involution (200 random sequences)", 0.0, || {
        let bad = exec::map(cfg.exec, &seqs, |a| {
            mismatches(seqcore::binomial_transform(&seqcore::binomial_transform(a)).terms(), a.terms())
        });
        Ok(bad.iter().sum::<f64>().into())
    })
}

fn modular(s: &mut Suite, cfg: &SuiteConfig) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1));
    let cases: Vec<(Sequence, ModularParams)> = (0..SAMPLES)
        .map(|_| {
            let a = random_sequence(&mut rng);
            let p = ModularParams::new(random_rational(&mut rng), random_nonzero_rational(&mut rng));
            (a, p)
        })
        .collect();
    s.check("modular transform round trip (200 random)", 0.0, || {
        let bad = exec::map(cfg.exec, &cases, |(a, p)| -> Result<f64> {
            let back = seqcore::modular_inverse(&seqcore::modular_transform(a, p), p)?;
            Ok(mismatches(back.terms(), a.terms()))
        });
        Ok(bad.into_iter().sum::<Result<f64>>()?.into())
    })?;
    s.check("complementary Hermite round trip (200 random)", 0.0, || {
        let bad = exec::map(cfg.exec, &cases, |(a, p)| -> Result<f64> {
            let h = HermiteParams::new(p.beta.clone(), p.alpha.clone());
            let back = seqcore::hermite_inverse_seq(&seqcore::hermite_complementary_seq(a, &h), &h)?;
            Ok(mismatches(back.terms(), a.terms()))
        });
        Ok(bad.into_iter().sum::<Result<f64>>()?.into())
    })?;
    let composites: Vec<(Sequence, ModularParams, HermiteParams)> = (0..20)
        .map(|_| {
            let a = Sequence::new((0..12).map(|_| random_rational(&mut rng)).collect()).expect("nonempty");
            let m = ModularParams::new(rat(rng.random_range(-5..=5), 3), rat(rng.random_range(1..=5), 2));
            let h = HermiteParams::new(rat(rng.random_range(-5..=5), 2), rat(rng.random_range(-5..=5), 3));
            (a, m, h)
        })
        .collect();
    let composite_mismatch = |printed: bool| -> Result<f64> {
        let mut bad = 0.0;
        for (a, m, h) in &composites {
            let direct =
                seqcore::compose_transforms(&[TransformSpec::Modular(m.clone()), TransformSpec::Hermite(h.clone())], a)?;
            let closed = if printed {
                seqcore::composite_printed_form(a, m, h)
            } else {
                seqcore::modular_then_hermite_closed(a, m, h)
            };
            bad += option_mismatches(&closed, &direct);
        }
        Ok(bad)
    };
    s.check("modular then Hermite equals H_n(γ, δα − δβâ)", 0.0, || Ok(composite_mismatch(false)?.into()))?;
    s.check("Hermite then modular equals H_n(α − βγ, β²δâ)", 0.0, || {
        let mut bad = 0.0;
        for (a, m, h) in &composites {
            let direct =
                seqcore::compose_transforms(&[TransformSpec::Hermite(h.clone()), TransformSpec::Modular(m.clone())], a)?;
            bad += option_mismatches(&seqcore::hermite_then_modular_closed(a, h, m), &direct);
        }
        Ok(bad.into())
    })?;
    s.errata("printed composite H_n(α − βγâ, β²δ) against modular then Hermite", 0.0, || {
        Ok(composite_mismatch(true)?.into())
    })
}

fn reference_sequences() -> Vec<SequenceFamily> {
    vec![
        SequenceFamily::Geometric(int(1)),
        SequenceFamily::LinearGeometric(int(1)),
        SequenceFamily::Geometric(int(2)),
    ]
}

/// Worst normalized residual of the master property over families, kinds
/// and points; `Ok(None)` entries for out-of-domain closed forms are not
/// expected for the parameters used here and are errors.
fn master_property<G: GeneratingFunctions + Sync>(
    exec: Execution,
    t: &GfTransform,
    families: &[G],
    kind: SeriesKind,
    points: &[Complex64],
    order: usize,
    rel_tol: f64,
) -> Result<f64> {
    let per_family = exec::map(exec, families, |fam| -> Result<f64> {
        let series = TransformedSeries::new(t, fam, kind, crate::gftrans::identity::REFERENCE_TERMS);
        let mut worst: f64 = 0.0;
        for &x in points {
            let c = IdentityCheck::new(t, fam, &series, x, order)?;
            // a failing comparison reports at least the tolerance it broke
            let r = if c.passes(rel_tol) { c.residual() } else { c.residual().max(rel_tol * 2.0) };
            worst = worst.max(r);
        }
        Ok(worst)
    });
    per_family.into_iter().try_fold(0.0f64, |acc, r| Ok(acc.max(r?)))
}

fn k_binomial(s: &mut Suite, cfg: &SuiteConfig) -> Result<()> {
    let order = cfg.order.unwrap_or(64);
    let tol = cfg.tol(1e-10);
    let points = sample_points(20, 0.5);
    for k in 0..=3u32 {
        for kind in [SeriesKind::Ordinary, SeriesKind::Exponential] {
            let label = format!("rising k-binomial k={k} {} generating function", kind_label(kind));
            s.check(&label, tol, || {
                Ok(master_property(cfg.exec, &GfTransform::RisingK(k), &reference_sequences(), kind, &points, order, tol)?
                    .into())
            })?;
        }
    }
    Ok(())
}

fn kind_label(kind: SeriesKind) -> &'static str {
    match kind {
        SeriesKind::Ordinary => "ordinary",
        SeriesKind::Exponential => "exponential",
    }
}

fn gf_identities(s: &mut Suite, cfg: &SuiteConfig) -> Result<()> {
    let order = cfg.order.unwrap_or(64);
    let tol = cfg.tol(1e-10);
    let points = sample_points(20, 0.5);
    let families = crate::gftrans::family::reference_families();
    for t in GfTransform::reference_set() {
        for &kind in t.kinds() {
            s.check(&format!("{} {} generating function", t.name(), kind_label(kind)), tol, || {
                Ok(master_property(cfg.exec, &t, &families, kind, &points, order, tol)?.into())
            })?;
        }
    }
    // variants that drop the n! prefactor or use C(n,2r) weights
    let ones = SequenceFamily::Geometric(int(1));
    let lp = LaguerreParams::new(int(1), rat(1, 2));
    s.errata("Laguerre transform without the n! prefactor", tol, || {
        let b = seqcore::laguerre_transform_unnormalized(&ones.prefix(64), &lp);
        variant_residual(&GfTransform::Laguerre(lp.clone()), &ones, &b, SeriesKind::Exponential, &points)
    })?;
    let hp = HermiteParams::new(rat(3, 4), rat(-1, 3));
    s.errata("complementary Hermite with C(n,2r) weights", tol, || {
        let b = seqcore::hermite_complementary_binomial_variant(&ones.prefix(64), &hp);
        variant_residual(&GfTransform::HermiteComplementary(hp.clone()), &ones, &b, SeriesKind::Exponential, &points)
    })
}

fn variant_residual(
    t: &GfTransform,
    fam: &SequenceFamily,
    b: &Sequence,
    kind: SeriesKind,
    points: &[Complex64],
) -> Result<Measured> {
    let series = TransformedSeries::from_sequence(b, kind);
    let mut worst: f64 = 0.0;
    for &x in points {
        let closed = t.closed_form(fam, x, kind)?;
        worst = worst.max(rel(series.eval(x, b.len() - 1).reference, closed));
    }
    Ok(worst.into())
}

/// `J_0(z) = (1/π) ∫_0^π cos(z sin θ) dθ` by the trapezoid rule, which is
/// spectrally accurate for this periodic integrand.
pub fn bessel_j0(z: f64) -> f64 {
    let n = 64;
    let h = std::f64::consts::PI / n as f64;
    let mut sum = 0.5 * (1.0 + 1.0);
    for j in 1..n {
        sum += (z * (j as f64 * h).sin()).cos();
    }
    sum / n as f64
}

fn laguerre_special(s: &mut Suite, cfg: &SuiteConfig) -> Result<()> {
    let tol = cfg.tol(1e-10);
    let ones = SequenceFamily::Geometric(int(1));
    let p = LaguerreParams::new(int(1), int(1));
    let xs: Vec<f64> = (0..=20).map(|j| 0.5 * j as f64 / 20.0).collect();
    s.check("Laguerre exponential generating function equals e^x J0(2√x)", tol, || {
        let mut worst: f64 = 0.0;
        for &x in &xs {
            let v = laguerre_gf(&ones, &p, Complex64::new(x, 0.0), SeriesKind::Exponential)?;
            worst = worst.max(rel(v, Complex64::new(x.exp() * bessel_j0(2.0 * x.sqrt()), 0.0)));
        }
        Ok(worst.into())
    })?;
    s.check("Laguerre ordinary generating function equals e^{-x/(1-x)}/(1-x)", tol, || {
        let mut worst: f64 = 0.0;
        for &x in &xs {
            let v = laguerre_gf(&ones, &p, Complex64::new(x, 0.0), SeriesKind::Ordinary)?;
            worst = worst.max(rel(v, Complex64::new((-x / (1.0 - x)).exp() / (1.0 - x), 0.0)));
        }
        Ok(worst.into())
    })
}

fn hermite_grid() -> Vec<(usize, f64, f64)> {
    let mut g = Vec::with_capacity(125);
    for n in [0usize, 2, 5, 8, 10] {
        for x in [-2.0, -1.0, 0.0, 1.0, 2.0] {
            for y in [0.1, 0.5, 1.0, 1.5, 2.0] {
                g.push((n, x, y));
            }
        }
    }
    g
}

fn worst_with_nodes(results: Vec<Result<(f64, usize)>>) -> Result<Measured> {
    let mut residual: f64 = 0.0;
    let mut nodes = 0;
    for r in results {
        let (v, n) = r?;
        residual = residual.max(v);
        nodes = nodes.max(n);
    }
    Ok(Measured { residual, nodes: Some(nodes) })
}

fn hermite_integral(s: &mut Suite, cfg: &SuiteConfig) -> Result<()> {
    let tol = cfg.tol(1e-8);
    let grid = hermite_grid();
    s.check("Gaussian shift transform equals H_n(x, -y) on 125 points", tol, || {
        worst_with_nodes(exec::map(cfg.exec, &grid, |&(n, x, y)| {
            let sym = Spectrum::gaussian(y)?;
            let r = op::phi_shift_transform(&sym, |z| z.powu(n as u32), Complex64::new(x, 0.0))?;
            Ok((rel(r.value, Complex64::new(hermite2(n, &x, &-y), 0.0)), r.nodes))
        }))
    })?;
    s.check("Hermite integral representation returns x^n on 125 points", tol, || {
        worst_with_nodes(exec::map(cfg.exec, &grid, |&(n, x, y)| {
            let r = op::monomial_from_hermite(n, x, y)?;
            Ok((rel(r.value, Complex64::new(x.powi(n as i32), 0.0)), r.nodes))
        }))
    })
}

fn tricomi(s: &mut Suite, cfg: &SuiteConfig) -> Result<()> {
    let tol = cfg.tol(1e-8);
    let grid: Vec<(f64, f64)> =
        (0..=10).flat_map(|i| (0..=10).map(move |j| (i as f64 / 10.0, j as f64 / 10.0))).collect();
    s.check("Tricomi evolution against its series on an 11x11 grid", tol, || {
        worst_with_nodes(exec::map(cfg.exec, &grid, |&(x, tau)| {
            let r = op::tricomi_evolution(x, tau)?;
            Ok(((r.value - Complex64::new(op::tricomi_evolution_series(x, tau), 0.0)).norm(), r.nodes))
        }))
    })?;
    s.check("Tricomi evolution F(1,1) = 0.5206029", 5e-8, || {
        let r = op::tricomi_evolution(1.0, 1.0)?;
        Ok(Measured { residual: (r.value.re - 0.5206029).abs(), nodes: Some(r.nodes) })
    })
}

fn disentangle(s: &mut Suite, cfg: &SuiteConfig) -> Result<()> {
    let order = cfg.order.unwrap_or(8);
    let weyl_order = order.min(16);
    let cubic_order = order.min(10);
    for (a, b) in [(int(1), int(1)), (rat(2, 3), rat(-5, 7))] {
        s.check(&format!("Weyl ordered exponential a={a} b={b} through order {weyl_order}"), 0.0, || {
            Ok(residual_magnitude(&op::weyl_check(&a, &b, weyl_order)?).into())
        })?;
    }
    for (a, b) in [(int(1), int(1)), (rat(1, 3), rat(3, 4)), (int(4), int(1))] {
        s.check(&format!("cubic ordered exponential a={a} b={b} through order {cubic_order}"), 0.0, || {
            Ok(residual_magnitude(&op::cubic_disentangle_check(&a, &b, cubic_order, CubicConstants::Derived)?).into())
        })?;
    }
    let (a, b) = cubic_errata_parameters();
    s.errata(&format!("cubic ordered exponential with printed exponent on alpha, a={a} b={b}"), 0.0, || {
        Ok(residual_magnitude(&op::cubic_disentangle_check(&a, &b, cubic_order, CubicConstants::Printed)?).into())
    })?;
    let tol = cfg.tol(1e-7);
    let sym = Spectrum::gaussian(0.5)?;
    let cases = [(0.25, 0.25, 1usize, 0.5), (0.5, 0.0, 2, 1.0), (0.3, 0.2, 3, -0.4)];
    s.check("operator on monomial against its series", tol, || {
        let mut worst: f64 = 0.0;
        let mut nodes = 0;
        for &(al, be, n, x) in &cases {
            let r = op::o_on_monomial(&sym, al, be, n, x, CubicConstants::Derived)?;
            worst = worst.max((r.value - op::o_on_monomial_oracle(&sym, al, be, n, x)).norm());
            nodes = nodes.max(r.nodes);
        }
        Ok(Measured { residual: worst, nodes: Some(nodes) })
    })?;
    s.errata("operator on monomial with printed phase and shift", tol, || {
        let r = op::o_on_monomial(&sym, 0.25, 0.25, 1, 0.5, CubicConstants::Printed)?;
        Ok(Measured {
            residual: (r.value - op::o_on_monomial_oracle(&sym, 0.25, 0.25, 1, 0.5)).norm(),
            nodes: Some(r.nodes),
        })
    })
}

fn pauli(s: &mut Suite, cfg: &SuiteConfig) -> Result<()> {
    let tol = cfg.tol(1e-8);
    let symbols = [Spectrum::gaussian(1.0)?, Spectrum::cos_gaussian(0.5, 1.2)?];
    for sym in symbols {
        s.check(&format!("Pauli matrix function of {} against eigendecomposition", sym.label()), tol, || {
            let mut worst: f64 = 0.0;
            let mut nodes = 0;
            for w in [0.0, 0.7, 1.0, 2.0] {
                let q = op::matrix_function_pauli(&sym, w)?;
                worst = worst.max(max_entry_difference(&q.matrix, &op::pauli_spectral(&sym, w)));
                nodes = nodes.max(q.nodes);
            }
            Ok(Measured { residual: worst, nodes: Some(nodes) })
        })?;
    }
    s.check("exp(-M^2) at |Omega| = 1 equals exp(-1) I", tol, || {
        let q = op::matrix_function_pauli(&Spectrum::gaussian(1.0)?, 1.0)?;
        let want = nalgebra::Matrix2::identity() * Complex64::new((-1.0f64).exp(), 0.0);
        Ok(Measured { residual: max_entry_difference(&q.matrix, &want), nodes: Some(q.nodes) })
    })
}

fn weyl_borel(s: &mut Suite, cfg: &SuiteConfig) -> Result<()> {
    let polys: Vec<Vec<BigRational>> = vec![
        vec![int(0), int(1)],
        vec![int(0), int(0), int(0), int(1)],
        vec![int(0), int(1), int(2), int(0), int(0), int(-1)],
    ];
    s.check("[LD, D^-1] = 1 on polynomials vanishing at 0", 0.0, || {
        let mut bad = 0.0;
        for p in &polys {
            bad += op::commutator_check_ld(p)?.iter().filter(|v| !v.is_zero()).count() as f64;
        }
        Ok(bad.into())
    })?;
    s.errata("[LD, D^-1] = 1 claimed to fail when f(0) != 0 (f = 1 + x, claimed residual -1)", 0.0, || {
        let r = op::commutator_residual_ld(&[int(1), int(1)]);
        Ok(rational_to_f64(&(&r[0] - int(-1))).abs().into())
    })?;
    s.check("Borel transform of C_0 is e^-x", 0.0, || {
        let b = op::borel_transform(&tricomi_coefficients(0, 40));
        let e: Vec<BigRational> = (0..=40)
            .map(|n| BigRational::new(BigInt::from(if n % 2 == 0 { 1 } else { -1 }), crate::scalar::factorial(n)))
            .collect();
        Ok(mismatches(&b, &e).into())
    })?;
    let tol = cfg.tol(1e-10);
    s.check("exp(a LD) by Borel route and by matrix exponential", tol, || {
        let cases: Vec<(BigRational, Vec<BigRational>)> = vec![
            (int(1), vec![int(0), int(1)]),
            (rat(-2, 3), vec![rat(1, 2), int(-1), rat(3, 4), int(2)]),
            (rat(3, 2), (0..12).map(|n| rat(if n % 3 == 0 { 1 } else { -2 }, n + 1)).collect()),
        ];
        let mut worst: f64 = 0.0;
        for (a, p) in &cases {
            let borel = op::exp_laguerre_derivative(a, p);
            let pc: Vec<Complex64> = p.iter().map(rational_to_complex).collect();
            let m = op::exp_laguerre_derivative_matrix(rational_to_complex(a), &pc, ORACLE_DEGREE)?;
            // coefficients reach (deg!)², so compare against the largest one
            let scale = borel.iter().map(|v| rational_to_f64(v).abs()).fold(1.0, f64::max);
            for (j, v) in borel.iter().enumerate() {
                worst = worst.max((rational_to_complex(v) - m[j]).norm() / scale);
            }
        }
        Ok(worst.into())
    })?;
    s.check("exp(a LD) C_0 = exp(-a) C_0 by both routes", tol, || {
        let a = 0.7;
        let c0 = InitialCondition::Tricomi.coefficients(ORACLE_DEGREE);
        let borel = op::exp_laguerre_derivative(&Complex64::new(a, 0.0), &c0);
        let m = op::exp_laguerre_derivative_matrix(Complex64::new(a, 0.0), &c0, ORACLE_DEGREE)?;
        let mut worst: f64 = 0.0;
        for j in 0..=ORACLE_DEGREE {
            let want = c0[j] * (-a).exp();
            worst = worst.max((borel[j] - want).norm()).max((m[j] - want).norm());
        }
        Ok(worst.into())
    })
}

fn integro_grid() -> Vec<(f64, f64)> {
    (0..=5).flat_map(|i| (0..=5).map(move |j| (0.1 * i as f64, 0.1 * j as f64))).collect()
}

fn integro_diff(s: &mut Suite, cfg: &SuiteConfig) -> Result<()> {
    let tol = cfg.tol(1e-6);
    let grid = integro_grid();
    let f = InitialCondition::Tricomi;
    for beta in [0.0, 0.5, 1.0] {
        s.check(&format!("integro-differential evolution m=2 beta={beta} against degree-40 matrix"), tol, || {
            worst_with_nodes(exec::map(cfg.exec, &grid, |&(x, tau)| {
                let r = op::integro_diff_evolve(&f, beta, 2, tau, x)?;
                let o = op::integro_diff_matrix_oracle(&f, beta, 2, tau, x, ORACLE_DEGREE)?;
                Ok(((r.value - o).norm(), r.nodes))
            }))
        })?;
    }
    s.check("integro-differential evolution beta=0 gives exp(-tau) C_0", tol, || {
        worst_with_nodes(exec::map(cfg.exec, &grid, |&(x, tau)| {
            let r = op::integro_diff_evolve(&f, 0.0, 2, tau, x)?;
            Ok(((r.value - f.eval(x) * (-tau).exp()).norm(), r.nodes))
        }))
    })?;
    s.check("odd power of the generator is rejected", 0.0, || {
        let rejected = matches!(op::integro_diff_evolve(&f, 1.0, 3, 0.1, 0.2), Err(Error::UnsupportedSymbol(_)));
        Ok(if rejected { 0.0 } else { 1.0 }.into())
    })
}

fn appell_suite(s: &mut Suite, cfg: &SuiteConfig) -> Result<()> {
    let tol = cfg.tol(1e-8);
    let b = AppellFamily::bernoulli(appell::DEFAULT_ORDER)?;
    s.check("Bernoulli polynomial a_2 = x^2 - x + 1/6", 0.0, || {
        Ok(mismatches(&appell::appell_poly(&b, 2, Sign::Plus)?, &[rat(1, 6), int(-1), int(1)]).into())
    })?;
    s.check("Bernoulli generating function at t=0.3, x=0.5, N=30", cfg.tol(1e-10), || {
        Ok(appell::generating_check(&b, Sign::Plus, 30, 0.3, 0.5)?.into())
    })?;
    s.check("reciprocal family swaps plus and minus polynomials", 0.0, || {
        let r = b.reciprocal();
        let mut bad = 0.0;
        for n in 0..=12 {
            bad += mismatches(&appell::appell_poly(&b, n, Sign::Minus)?, &appell::appell_poly(&r, n, Sign::Plus)?);
        }
        Ok(bad.into())
    })?;
    let families = [(b.clone(), int(1)), (AppellFamily::gaussian(int(-1), appell::DEFAULT_ORDER)?, rat(1, 8))];
    for (fam, c) in families {
        s.check(&format!("{} expansion of exp(-{c} x^2) against operational series, n <= 10", fam.label()), tol, || {
            let f = Spectrum::gaussian(rational_to_f64(&c))?;
            let res = appell::expansion_coefficients_with(cfg.exec, &fam, &f, 10)?;
            let oracle = appell::operational_coefficients(&fam, &appell::gaussian_taylor(&c, 240), 10)?;
            let worst = max_of(res.coefficients.iter().zip(&oracle).map(|(a, o)| (a - rational_to_complex(o)).norm()));
            Ok(Measured { residual: worst, nodes: res.nodes.iter().copied().max() })
        })?;
    }
    s.check("exp(-t^2) expansion of exp(-x^2) against the heat-flow closed form", tol, || {
        // [A(∂)]^{-1} = e^{∂²} maps e^{-x²} to e^{-x²/5}/√5
        let fam = AppellFamily::gaussian(int(-1), appell::DEFAULT_ORDER)?;
        let res = appell::expansion_coefficients_with(cfg.exec, &fam, &Spectrum::gaussian(1.0)?, 10)?;
        let closed = appell::gaussian_taylor(&rat(1, 5), 11);
        let worst = max_of(
            res.coefficients.iter().zip(&closed).map(|(a, o)| (a - rational_to_f64(o) / 5f64.sqrt()).norm()),
        );
        Ok(Measured { residual: worst, nodes: res.nodes.iter().copied().max() })
    })?;
    s.check("exp(t^2) family against a Gaussian is refused", 0.0, || {
        let fam = AppellFamily::gaussian(int(1), appell::DEFAULT_ORDER)?;
        let refused = matches!(
            appell::expansion_coefficients(&fam, &Spectrum::gaussian(1.0)?, 4),
            Err(Error::NotIntegrable { .. })
        );
        Ok(if refused { 0.0 } else { 1.0 }.into())
    })
}

fn umbral(s: &mut Suite, cfg: &SuiteConfig) -> Result<()> {
    let tol = cfg.tol(1e-7);
    let sym = Spectrum::gaussian(0.05)?;
    let ones = SequenceFamily::Geometric(int(1));
    let xs: Vec<f64> = (-3..=3).map(|j| 0.1 * j as f64).collect();
    s.check("umbral operator transform against double sum, |x| <= 0.3", tol, || {
        worst_with_nodes(exec::map(cfg.exec, &xs, |&x| {
            let r = op::umbral_operator_transform(&sym, &ones, 1.0, x)?;
            let (o, _) = op::umbral_double_sum(&sym, &ones, x, 160)?;
            Ok(((r.value - Complex64::new(o, 0.0)).norm(), r.nodes))
        }))
    })?;
    let bridge_points: Vec<f64> = (0..10).map(|j| -0.5 + j as f64 / 9.0).collect();
    s.check("exp(y d^2) in the umbral image equals exp(y x^2) g(x)", cfg.tol(1e-10), || {
        let mut worst: f64 = 0.0;
        for fam in reference_sequences() {
            for &x in &bridge_points {
                let (series, closed) = appell::umbral_heat_bridge(&fam, &rat(1, 3), x, 80)?;
                worst = worst.max((series - closed).abs() / closed.abs().max(1.0));
            }
        }
        Ok(worst.into())
    })?;
    s.check("bridge closed form agrees with the complementary Hermite transform", cfg.tol(1e-10), || {
        let fam = SequenceFamily::Geometric(int(1));
        let p = HermiteParams::new(int(1), rat(1, 3));
        let series = TransformedSeries::new(&GfTransform::HermiteComplementary(p.clone()), &fam, SeriesKind::Exponential, 120);
        let mut worst: f64 = 0.0;
        for &x in &bridge_points {
            let z = Complex64::new(x, 0.0);
            worst = worst.max(rel(series.eval(z, 119).reference, hermite_gf(&fam, &p, z, HermiteVariant::Complementary)));
        }
        Ok(worst.into())
    })
}

fn heat(s: &mut Suite, cfg: &SuiteConfig) -> Result<()> {
    let tol = cfg.tol(1e-6);
    let gauss = |x: f64| Complex64::new((-x * x / 2.0).exp(), 0.0);
    let f = GridFunction::from_fn(gauss, 20.0, 512)?;
    s.check("heat evolution widens exp(-x^2/2) to exp(-x^2/4)/sqrt(2)", tol, || {
        let g = heat_evolve_ft(&f, 0.5)?;
        let worst = max_of((0..g.len()).map(|j| {
            let x = g.x(j);
            (g.samples()[j] - Complex64::new((-x * x / 4.0).exp() / 2f64.sqrt(), 0.0)).norm()
        }));
        Ok(worst.into())
    })?;
    s.check("heat evolution for zero time is the identity", 1e-15, || {
        let g = heat_evolve_ft(&f, 0.0)?;
        Ok(max_of(g.samples().iter().zip(f.samples()).map(|(a, b)| (a - b).norm())).into())
    })?;
    s.check("heat evolution is linear", 1e-12, || {
        let h = GridFunction::from_fn(|x| Complex64::new(x * (-x * x).exp(), 0.0), 20.0, 512)?;
        let sum = GridFunction::new(f.samples().iter().zip(h.samples()).map(|(a, b)| a + b).collect(), 20.0)?;
        let (ef, eh, es) = (heat_evolve_ft(&f, 0.3)?, heat_evolve_ft(&h, 0.3)?, heat_evolve_ft(&sum, 0.3)?);
        Ok(max_of((0..512).map(|j| (es.samples()[j] - ef.samples()[j] - eh.samples()[j]).norm())).into())
    })
}
