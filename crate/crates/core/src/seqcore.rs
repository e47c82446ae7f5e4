//! Exact sequence-to-sequence transforms: binomial, modular, rising
//! k-binomial, Hermite (plain, complementary, inverse) and Laguerre.
//!
//! Every transform works on [`Sequence`], a finite prefix `a_0..a_N` of exact
//! rationals, and returns a sequence of the same length. Each output term
//! `b_n` only reads `a_0..a_n`, so no padding is ever needed.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{binomial_row, common_denominator, format_rational, parse_rational, powi};

/// Finite prefix of an exact rational sequence. Never empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Sequence(Vec<BigRational>);

impl Sequence {
    pub fn new(terms: Vec<BigRational>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidParameter("a sequence needs at least one term".into()));
        }
        Ok(Sequence(terms))
    }

    pub fn from_integers(terms: &[i64]) -> Result<Self> {
        Self::new(terms.iter().map(|&t| BigRational::from_integer(BigInt::from(t))).collect())
    }

    /// Builds `a_0..a_{len-1}` from a term generator.
    pub fn from_fn(len: usize, f: impl Fn(usize) -> BigRational) -> Result<Self> {
        Self::new((0..len).map(f).collect())
    }

    pub fn terms(&self) -> &[BigRational] {
        &self.0
    }

    pub fn into_terms(self) -> Vec<BigRational> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<&BigRational> {
        self.0.get(n)
    }

    /// Parses the JSON exchange document `{"terms": ["p/q", ...]}`.
    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("sequence serialization cannot fail")
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SequenceDocument<T> {
    terms: Vec<T>,
}

impl Serialize for Sequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let doc = SequenceDocument {
            terms: self.0.iter().map(format_rational).collect::<Vec<_>>(),
        };
        doc.serialize(serializer)
    }
}

/// A rational rendered as a JSON string, parsed with position-carrying errors.
struct RationalText(BigRational);

impl<'de> Deserialize<'de> for RationalText {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_rational(&text).map(RationalText).map_err(de::Error::custom)
    }
}

impl<'de> Deserialize<'de> for Sequence {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = SequenceDocument::<RationalText>::deserialize(deserializer)?;
        Sequence::new(doc.terms.into_iter().map(|t| t.0).collect()).map_err(de::Error::custom)
    }
}

/// `(alpha, beta)` of the modular transform `b_n = Σ (-1)^s C(n,s) α^{n-s} β^s a_s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularParams {
    pub alpha: BigRational,
    pub beta: BigRational,
}

/// `(alpha, beta)` of the Hermite transforms; `alpha` is the first
/// argument of `H_n(x, y)` and `beta` the second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteParams {
    pub alpha: BigRational,
    pub beta: BigRational,
}

/// `(alpha, beta)` of the Laguerre transform `b_n = L_n(α â, β)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaguerreParams {
    pub alpha: BigRational,
    pub beta: BigRational,
}

macro_rules! params_ctor {
    ($t:ident) => {
        impl $t {
            pub fn new(alpha: BigRational, beta: BigRational) -> Self {
                $t { alpha, beta }
            }
            pub fn from_integers(alpha: i64, beta: i64) -> Self {
                $t {
                    alpha: BigRational::from_integer(alpha.into()),
                    beta: BigRational::from_integer(beta.into()),
                }
            }
        }
    };
}
params_ctor!(ModularParams);
params_ctor!(HermiteParams);
params_ctor!(LaguerreParams);

/// Integer kernel for `b_n = Σ_s (-1)^s C(n,s) u^{n-s} v^s w(s) a_s` with
/// `u = p/q`, `v = r/t` rational and integer weights `w(s)`.
///
/// All terms are brought over the common denominator `q^n t^n L`, so the
/// inner sum runs on big integers and each `b_n` is reduced only once.
fn signed_binomial_kernel(
    a: &Sequence,
    u: &BigRational,
    v: &BigRational,
    weight: impl Fn(usize) -> BigInt,
) -> Sequence {
    let l = common_denominator(a.terms());
    let scaled: Vec<BigInt> = a
        .terms()
        .iter()
        .enumerate()
        .map(|(s, t)| (t * BigRational::from_integer(l.clone())).to_integer() * weight(s))
        .collect();
    let (p, q) = (u.numer().clone(), u.denom().clone());
    let (r, t) = (v.numer().clone(), v.denom().clone());
    // u^{n-s} v^s = (p t)^{n-s} (r q)^s / (q t)^n
    let lo = &p * &t;
    let hi = -(&r * &q);
    let qt = &q * &t;
    let n_max = a.len();
    let lo_pow: Vec<BigInt> = successive_powers(&lo, n_max);
    let hi_pow: Vec<BigInt> = successive_powers(&hi, n_max);
    let mut den = l.clone();
    let mut out = Vec::with_capacity(n_max);
    for n in 0..n_max {
        let row = binomial_row(n);
        let mut acc = BigInt::zero();
        for s in 0..=n {
            if scaled[s].is_zero() {
                continue;
            }
            acc += &row[s] * &lo_pow[n - s] * &hi_pow[s] * &scaled[s];
        }
        out.push(BigRational::new(acc, den.clone()));
        den *= &qt;
    }
    Sequence(out)
}

fn successive_powers(x: &BigInt, count: usize) -> Vec<BigInt> {
    let mut v = Vec::with_capacity(count);
    let mut acc = BigInt::one();
    for _ in 0..count {
        v.push(acc.clone());
        acc *= x;
    }
    v
}

fn one() -> BigRational {
    BigRational::one()
}

/// `b_n = Σ_{s≤n} (-1)^s C(n,s) a_s`. An involution.
pub fn binomial_transform(a: &Sequence) -> Sequence {
    signed_binomial_kernel(a, &one(), &one(), |_| BigInt::one())
}

/// `b_n = Σ_{s≤n} (-1)^s C(n,s) α^{n-s} β^s a_s`.
pub fn modular_transform(a: &Sequence, p: &ModularParams) -> Sequence {
    signed_binomial_kernel(a, &p.alpha, &p.beta, |_| BigInt::one())
}

/// Inverse of [`modular_transform`]: `a_n = β^{-n} Σ (-1)^s C(n,s) α^{n-s} b_s`.
pub fn modular_inverse(b: &Sequence, p: &ModularParams) -> Result<Sequence> {
    if p.beta.is_zero() {
        return Err(Error::InvalidParameter("modular inverse needs beta != 0".into()));
    }
    let unscaled = signed_binomial_kernel(b, &p.alpha, &one(), |_| BigInt::one());
    let inv_beta = p.beta.recip();
    let terms = unscaled
        .0
        .into_iter()
        .enumerate()
        .map(|(n, t)| t * powi(&inv_beta, n))
        .collect();
    Ok(Sequence(terms))
}

/// `b_n = Σ_{s≤n} (-1)^s C(n,s) s^k a_s`, with `0^0 = 1` so `k = 0` is the
/// plain binomial transform.
pub fn rising_k_binomial(a: &Sequence, k: u32) -> Sequence {
    signed_binomial_kernel(a, &one(), &one(), |s| num_traits::pow(BigInt::from(s), k as usize))
}

/// `n! / ((n-2r)! r!)` for every admissible `r`.
fn hermite_weights(n: usize, facts: &[BigInt]) -> Vec<BigInt> {
    (0..=n / 2)
        .map(|r| &facts[n] / (&facts[n - 2 * r] * &facts[r]))
        .collect()
}

/// Numerator and denominator power tables of a rational, for summing many
/// terms over one common denominator without a gcd per term.
struct SplitPowers {
    num: Vec<BigInt>,
    den: Vec<BigInt>,
}

impl SplitPowers {
    fn new(x: &BigRational, n: usize) -> Self {
        SplitPowers { num: successive_powers(x.numer(), n), den: successive_powers(x.denom(), n) }
    }
}

/// `lcm(den a_0..a_k)` for every `k`.
fn running_lcm(a: &Sequence) -> Vec<BigInt> {
    let mut acc = BigInt::one();
    a.0.iter()
        .map(|t| {
            acc = acc.lcm(t.denom());
            acc.clone()
        })
        .collect()
}

fn scaled_term(t: &BigRational, lcm: &BigInt) -> BigInt {
    t.numer() * (lcm / t.denom())
}

fn factorial_table(n: usize) -> Vec<BigInt> {
    let mut v = Vec::with_capacity(n + 1);
    v.push(BigInt::one());
    for k in 1..=n {
        let next = &v[k - 1] * BigInt::from(k as u64);
        v.push(next);
    }
    v
}

/// `b_n = Σ_{r≤n/2} n!/((n-2r)! r!) α^{n-2r} β^r a_r`, umbrally `H_n(α, β â)`.
pub fn hermite_transform_seq(a: &Sequence, p: &HermiteParams) -> Sequence {
    let n_max = a.len();
    let facts = factorial_table(n_max);
    let out = (0..n_max)
        .map(|n| {
            hermite_weights(n, &facts)
                .iter()
                .enumerate()
                .fold(BigRational::zero(), |acc, (r, w)| {
                    acc + BigRational::from_integer(w.clone())
                        * powi(&p.alpha, n - 2 * r)
                        * powi(&p.beta, r)
                        * &a.0[r]
                })
        })
        .collect();
    Sequence(out)
}

/// Complementary Hermite transform, umbrally `H_n(α â, β)`:
/// `b_n = Σ_r n!/((n-2r)! r!) α^{n-2r} β^r a_{n-2r}`.
pub fn hermite_complementary_seq(a: &Sequence, p: &HermiteParams) -> Sequence {
    umbral_hermite_shift(a, &p.alpha, &p.beta)
}

/// `Σ_r n!/((n-2r)! r!) x^{n-2r} y^r a_{n-2r}` with `x` scaling the index.
fn umbral_hermite_shift(a: &Sequence, x: &BigRational, y: &BigRational) -> Sequence {
    let n_max = a.len();
    let facts = factorial_table(n_max);
    let (xp, yp) = (SplitPowers::new(x, n_max), SplitPowers::new(y, n_max));
    let lcms = running_lcm(a);
    let out = (0..n_max)
        .map(|n| {
            // common denominator den(x)^n den(y)^{n/2} lcm(den a_0..a_n)
            let h = n / 2;
            let sum = hermite_weights(n, &facts).iter().enumerate().fold(BigInt::zero(), |acc, (r, w)| {
                let k = n - 2 * r;
                acc + w * &xp.num[k] * &xp.den[2 * r] * &yp.num[r] * &yp.den[h - r] * scaled_term(&a.0[k], &lcms[n])
            });
            BigRational::new(sum, &xp.den[n] * &yp.den[h] * &lcms[n])
        })
        .collect();
    Sequence(out)
}

/// Inverse of [`hermite_complementary_seq`]:
/// `a_n = α^{-n} Σ_r n!/((n-2r)! r!) (-β)^r b_{n-2r}`.
///
/// The plain [`hermite_transform_seq`] only reads `a_0..a_{⌊n/2⌋}` and is not
/// injective on a finite prefix, so the complementary transform is the one
/// this inverts.
pub fn hermite_inverse_seq(b: &Sequence, p: &HermiteParams) -> Result<Sequence> {
    if p.alpha.is_zero() {
        return Err(Error::InvalidParameter("Hermite inverse needs alpha != 0".into()));
    }
    let unscaled = umbral_hermite_shift(b, &one(), &(-p.beta.clone()));
    let inv_alpha = p.alpha.recip();
    Ok(Sequence(
        unscaled
            .0
            .into_iter()
            .enumerate()
            .map(|(n, t)| t * powi(&inv_alpha, n))
            .collect(),
    ))
}

/// `b_n = n! Σ_{r≤n} (-1)^r β^{n-r} α^r a_r / ((r!)^2 (n-r)!)`, umbrally
/// `L_n(α â, β)`; with `α = β = 1` on the all-ones sequence this is the
/// classical Laguerre polynomial value `L_n(1)`.
pub fn laguerre_transform_seq(a: &Sequence, p: &LaguerreParams) -> Sequence {
    laguerre_with_prefactor(a, p, true)
}

/// The Laguerre sum without the leading `n!`. Kept as evidence for the
/// identity suite: it does not reproduce the classical polynomials.
pub fn laguerre_transform_unnormalized(a: &Sequence, p: &LaguerreParams) -> Sequence {
    laguerre_with_prefactor(a, p, false)
}

fn laguerre_with_prefactor(a: &Sequence, p: &LaguerreParams, with_factorial: bool) -> Sequence {
    let n_max = a.len();
    let facts = factorial_table(n_max);
    let (ap, bp) = (SplitPowers::new(&p.alpha, n_max), SplitPowers::new(&p.beta, n_max));
    let lcms = running_lcm(a);
    let out = (0..n_max)
        .map(|n| {
            // n!/(r!² (n-r)!) = C(n,r)·(n!/r!) / n!, over den(α)^n den(β)^n lcm
            let row = binomial_row(n);
            let sum = (0..=n).fold(BigInt::zero(), |acc, r| {
                let term = &row[r] * (&facts[n] / &facts[r])
                    * &bp.num[n - r]
                    * &bp.den[r]
                    * &ap.num[r]
                    * &ap.den[n - r]
                    * scaled_term(&a.0[r], &lcms[n]);
                if r % 2 == 1 {
                    acc - term
                } else {
                    acc + term
                }
            });
            let mut den = &facts[n] * &ap.den[n] * &bp.den[n] * &lcms[n];
            if !with_factorial {
                den *= &facts[n];
            }
            BigRational::new(sum, den)
        })
        .collect();
    Sequence(out)
}

/// Complementary Hermite sum with `C(n, 2r)` in place of `n!/((n-2r)! r!)`.
/// Its generating function is not `e^{βx²} g(αx)`; the identity suite uses
/// it to document the discrepancy.
pub fn hermite_complementary_binomial_variant(a: &Sequence, p: &HermiteParams) -> Sequence {
    let n_max = a.len();
    let out = (0..n_max)
        .map(|n| {
            let row = binomial_row(n);
            (0..=n / 2).fold(BigRational::zero(), |acc, r| {
                acc + BigRational::from_integer(row[2 * r].clone())
                    * powi(&p.alpha, n - 2 * r)
                    * powi(&p.beta, r)
                    * &a.0[n - 2 * r]
            })
        })
        .collect();
    Sequence(out)
}

/// A polynomial `c0 + c1 â` in the umbral symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UmbralLinear {
    pub constant: BigRational,
    pub umbral: BigRational,
}

impl UmbralLinear {
    pub fn new(constant: BigRational, umbral: BigRational) -> Self {
        UmbralLinear { constant, umbral }
    }
    pub fn constant(c: BigRational) -> Self {
        UmbralLinear { constant: c, umbral: BigRational::zero() }
    }
}

/// Multiplies polynomials in `â` given by ascending coefficients.
fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_pow(base: &[BigRational], e: usize) -> Vec<BigRational> {
    (0..e).fold(vec![BigRational::one()], |acc, _| poly_mul(&acc, base))
}

/// Evaluates `H_n(x, y)` where `x` and `y` are linear in the umbral symbol,
/// replacing `â^j` by `a_j` after expansion. Returns `None` when the
/// expansion needs a term beyond the sequence prefix.
pub fn umbral_hermite_eval(n: usize, x: &UmbralLinear, y: &UmbralLinear, a: &Sequence) -> Option<BigRational> {
    let facts = factorial_table(n);
    let xb = [x.constant.clone(), x.umbral.clone()];
    let yb = [y.constant.clone(), y.umbral.clone()];
    let mut poly = vec![BigRational::zero()];
    for (r, w) in hermite_weights(n, &facts).into_iter().enumerate() {
        let term = poly_mul(&poly_pow(&xb, n - 2 * r), &poly_pow(&yb, r));
        if poly.len() < term.len() {
            poly.resize(term.len(), BigRational::zero());
        }
        for (j, c) in term.into_iter().enumerate() {
            poly[j] += c * BigRational::from_integer(w.clone());
        }
    }
    let mut acc = BigRational::zero();
    for (j, c) in poly.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc += c * a.get(j)?;
    }
    Some(acc)
}

/// One stage of a transform pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TransformSpec {
    Binomial,
    Modular(ModularParams),
    ModularInverse(ModularParams),
    RisingK(u32),
    Hermite(HermiteParams),
    HermiteComplementary(HermiteParams),
    HermiteInverse(HermiteParams),
    Laguerre(LaguerreParams),
}

impl TransformSpec {
    pub fn apply(&self, a: &Sequence) -> Result<Sequence> {
        Ok(match self {
            TransformSpec::Binomial => binomial_transform(a),
            TransformSpec::Modular(p) => modular_transform(a, p),
            TransformSpec::ModularInverse(p) => modular_inverse(a, p)?,
            TransformSpec::RisingK(k) => rising_k_binomial(a, *k),
            TransformSpec::Hermite(p) => hermite_transform_seq(a, p),
            TransformSpec::HermiteComplementary(p) => hermite_complementary_seq(a, p),
            TransformSpec::HermiteInverse(p) => hermite_inverse_seq(a, p)?,
            TransformSpec::Laguerre(p) => laguerre_transform_seq(a, p),
        })
    }
}

/// Applies the stages left to right. An empty pipeline is the identity.
pub fn compose_transforms(pipeline: &[TransformSpec], a: &Sequence) -> Result<Sequence> {
    pipeline.iter().try_fold(a.clone(), |acc, stage| stage.apply(&acc))
}

/// Closed umbral form of "modular `(α, β)` then Hermite `(γ, δ)`":
/// `b_n = H_n(γ, δα − δβ â)`. `None` past the end of the prefix.
pub fn modular_then_hermite_closed(
    a: &Sequence,
    modular: &ModularParams,
    hermite: &HermiteParams,
) -> Vec<Option<BigRational>> {
    let x = UmbralLinear::constant(hermite.alpha.clone());
    let y = UmbralLinear::new(&hermite.beta * &modular.alpha, -(&hermite.beta * &modular.beta));
    (0..a.len()).map(|n| umbral_hermite_eval(n, &x, &y, a)).collect()
}

/// Closed umbral form of "Hermite `(γ, δ)` then modular `(α, β)`":
/// `b_n = H_n(α − βγ, β²δ â)`.
pub fn hermite_then_modular_closed(
    a: &Sequence,
    hermite: &HermiteParams,
    modular: &ModularParams,
) -> Vec<Option<BigRational>> {
    let x = UmbralLinear::constant(&modular.alpha - &modular.beta * &hermite.alpha);
    let y = UmbralLinear::new(BigRational::zero(), &modular.beta * &modular.beta * &hermite.beta);
    (0..a.len()).map(|n| umbral_hermite_eval(n, &x, &y, a)).collect()
}

/// The composite as it is commonly printed, `H_n(α − βγ â, β²δ)`.
/// Disagrees with sequential application; reported, never used.
pub fn composite_printed_form(
    a: &Sequence,
    modular: &ModularParams,
    hermite: &HermiteParams,
) -> Vec<Option<BigRational>> {
    let x = UmbralLinear::new(modular.alpha.clone(), -(&modular.beta * &hermite.alpha));
    let y = UmbralLinear::constant(&modular.beta * &modular.beta * &hermite.beta);
    (0..a.len()).map(|n| umbral_hermite_eval(n, &x, &y, a)).collect()
}

/// True when every term is an integer.
pub fn is_integral(a: &Sequence) -> bool {
    a.terms().iter().all(|t| t.is_integer())
}

/// Absolute value of the largest term, for diagnostics.
pub fn max_abs(a: &Sequence) -> BigRational {
    a.terms().iter().map(|t| t.abs()).max().unwrap_or_else(BigRational::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use proptest::prelude::*;

    fn seq(v: &[i64]) -> Sequence {
        Sequence::from_integers(v).unwrap()
    }

    fn seqr(v: &[(i64, i64)]) -> Sequence {
        Sequence::new(v.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
    }

    /// Direct transcription of the signed binomial sum, used as the oracle
    /// for the integer kernel.
    fn brute_modular(a: &Sequence, alpha: &BigRational, beta: &BigRational, k: u32) -> Sequence {
        let out = (0..a.len())
            .map(|n| {
                (0..=n).fold(BigRational::zero(), |acc, s| {
                    let sign = if s % 2 == 0 { int(1) } else { int(-1) };
                    let sk = if k == 0 { int(1) } else { powi(&int(s as i64), k as usize) };
                    acc + sign
                        * BigRational::from_integer(crate::scalar::binomial(n, s))
                        * powi(alpha, n - s)
                        * powi(beta, s)
                        * sk
                        * &a.terms()[s]
                })
            })
            .collect();
        Sequence::new(out).unwrap()
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_transform(&seq(&[1, 1, 1, 1])), seq(&[1, 0, 0, 0]));
        assert_eq!(binomial_transform(&seq(&[1, 0, 0, 0])), seq(&[1, 1, 1, 1]));
        assert_eq!(binomial_transform(&seq(&[0, 1, 2, 3])), seq(&[0, -1, 0, 0]));
    }

    #[test]
    fn modular_examples() {
        let a = seq(&[1, 1, 1]);
        assert_eq!(modular_transform(&a, &ModularParams::from_integers(2, 1)), seq(&[1, 1, 1]));
        let a = seq(&[1, 2, 4]);
        let unit = ModularParams::from_integers(1, 1);
        assert_eq!(modular_transform(&a, &unit), seq(&[1, -1, 1]));
        assert_eq!(modular_inverse(&modular_transform(&a, &unit), &unit).unwrap(), a);
        let b = seq(&[1, 0, 0]);
        assert_eq!(
            modular_inverse(&b, &ModularParams::from_integers(1, 2)).unwrap(),
            seqr(&[(1, 1), (1, 2), (1, 4)])
        );
        assert!(matches!(
            modular_inverse(&b, &ModularParams::from_integers(1, 0)),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn modular_inverse_is_scaled_forward_transform() {
        let b = seqr(&[(3, 2), (-1, 5), (7, 1), (2, 9)]);
        let p = ModularParams::new(rat(2, 3), rat(-5, 4));
        let inv = modular_inverse(&b, &p).unwrap();
        let fwd = modular_transform(&b, &ModularParams::new(rat(2, 3), int(1)));
        for n in 0..b.len() {
            assert_eq!(inv.terms()[n], &fwd.terms()[n] * powi(&p.beta.recip(), n));
        }
    }

    #[test]
    fn rising_k_examples() {
        let a = seq(&[1, 1, 1, 1]);
        assert_eq!(rising_k_binomial(&a, 0), binomial_transform(&a));
        assert_eq!(rising_k_binomial(&a, 1), seq(&[0, -1, 0, 0]));
        assert_eq!(rising_k_binomial(&seq(&[0, 1, 0, 0]), 1), seq(&[0, -1, -2, -3]));
    }

    #[test]
    fn kernel_matches_brute_force() {
        let a = seqr(&[(1, 3), (-2, 7), (5, 1), (0, 1), (9, 4), (-1, 6)]);
        let alpha = rat(-3, 2);
        let beta = rat(4, 5);
        assert_eq!(modular_transform(&a, &ModularParams::new(alpha.clone(), beta.clone())), brute_modular(&a, &alpha, &beta, 0));
        for k in 0..4 {
            assert_eq!(rising_k_binomial(&a, k), brute_modular(&a, &int(1), &int(1), k));
        }
    }

    #[test]
    fn hermite_examples() {
        let p = HermiteParams::from_integers(3, 5);
        let b = hermite_transform_seq(&seq(&[1, 0, 0, 0, 0]), &p);
        assert_eq!(b, seq(&[1, 3, 9, 27, 81]));
        let b = hermite_transform_seq(&seq(&[1, 1, 1, 1]), &HermiteParams::from_integers(1, 1));
        // H_n(1,1) = 1, 1, 3, 7
        assert_eq!(b, seq(&[1, 1, 3, 7]));
        let b = hermite_transform_seq(&seq(&[1, 1, 0]), &HermiteParams::from_integers(2, 3));
        assert_eq!(b.terms()[2], int(10));
    }

    #[test]
    fn complementary_examples() {
        let unit = HermiteParams::from_integers(1, 1);
        assert_eq!(hermite_complementary_seq(&seq(&[1, 1, 1, 1]), &unit), seq(&[1, 1, 3, 7]));
        let a = seqr(&[(1, 2), (3, 1), (-2, 3), (5, 7)]);
        let b = hermite_complementary_seq(&a, &HermiteParams::new(rat(2, 3), int(0)));
        for n in 0..a.len() {
            assert_eq!(b.terms()[n], powi(&rat(2, 3), n) * &a.terms()[n]);
        }
        assert_eq!(hermite_complementary_seq(&seq(&[1, 0, 1]), &unit).terms()[2], int(3));
    }

    #[test]
    fn hermite_inverse_examples() {
        let unit = HermiteParams::from_integers(1, 1);
        assert_eq!(hermite_inverse_seq(&seq(&[1, 0, 2]), &unit).unwrap().terms()[2], int(0));
        let b = seqr(&[(1, 2), (3, 1), (-2, 3)]);
        let a = hermite_inverse_seq(&b, &HermiteParams::new(int(2), int(0))).unwrap();
        assert_eq!(a, seqr(&[(1, 2), (3, 2), (-1, 6)]));
        assert!(matches!(
            hermite_inverse_seq(&b, &HermiteParams::from_integers(0, 1)),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn laguerre_examples() {
        let p = LaguerreParams::from_integers(1, 1);
        let b = laguerre_transform_seq(&seq(&[1, 1, 1]), &p);
        assert_eq!(b, seqr(&[(1, 1), (0, 1), (-1, 2)]));
        let p = LaguerreParams::new(rat(2, 3), rat(-3, 2));
        let b = laguerre_transform_seq(&seq(&[1, 0, 0, 0]), &p);
        for n in 0..4 {
            assert_eq!(b.terms()[n], powi(&rat(-3, 2), n));
        }
        let a = seqr(&[(5, 3), (1, 1), (2, 1)]);
        let b = laguerre_transform_seq(&a, &LaguerreParams::new(int(0), int(3)));
        for n in 0..3 {
            assert_eq!(b.terms()[n], powi(&int(3), n) * rat(5, 3));
        }
        // without the n! prefactor the classical value L_2(1) = -1/2 is lost
        let u = laguerre_transform_unnormalized(&seq(&[1, 1, 1]), &LaguerreParams::from_integers(1, 1));
        assert_eq!(u.terms()[2], rat(-1, 4));
    }

    #[test]
    fn composition() {
        let a = seqr(&[(1, 2), (2, 3), (-1, 1), (4, 1)]);
        assert_eq!(compose_transforms(&[], &a).unwrap(), a);
        let twice = [TransformSpec::Binomial, TransformSpec::Binomial];
        assert_eq!(compose_transforms(&twice, &a).unwrap(), a);
        let m = ModularParams::from_integers(2, 3);
        let h = HermiteParams::from_integers(5, 7);
        let ones = seq(&[1, 1, 1, 1]);
        let pipe = [TransformSpec::Modular(m.clone()), TransformSpec::Hermite(h.clone())];
        let composed = compose_transforms(&pipe, &ones).unwrap();
        let manual = hermite_transform_seq(&modular_transform(&ones, &m), &h);
        assert_eq!(composed, manual);
        let bad = [TransformSpec::ModularInverse(ModularParams::from_integers(1, 0))];
        assert!(compose_transforms(&bad, &ones).is_err());
    }

    #[test]
    fn composite_closed_forms() {
        let a = seqr(&[(1, 2), (2, 3), (-1, 1), (4, 1), (3, 5), (1, 7)]);
        let m = ModularParams::new(rat(2, 3), rat(-1, 2));
        let h = HermiteParams::new(rat(5, 4), int(3));
        let seq1 = hermite_transform_seq(&modular_transform(&a, &m), &h);
        let closed = modular_then_hermite_closed(&a, &m, &h);
        for n in 0..a.len() {
            assert_eq!(closed[n].as_ref(), Some(&seq1.terms()[n]));
        }
        let seq2 = modular_transform(&hermite_transform_seq(&a, &h), &m);
        let closed = hermite_then_modular_closed(&a, &h, &m);
        for n in 0..a.len() {
            assert_eq!(closed[n].as_ref(), Some(&seq2.terms()[n]));
        }
        let printed = composite_printed_form(&a, &m, &h);
        assert!((0..a.len()).any(|n| printed[n].as_ref() != Some(&seq1.terms()[n])));
    }

    #[test]
    fn complementary_binomial_variant_differs() {
        let unit = HermiteParams::from_integers(1, 1);
        let ones = seq(&[1, 1, 1, 1, 1]);
        let b = hermite_complementary_binomial_variant(&ones, &unit);
        assert_ne!(b, hermite_complementary_seq(&ones, &unit));
        assert_eq!(b.terms()[2], int(2));
    }

    #[test]
    fn exchange_format() {
        let a = seqr(&[(1, 2), (-3, 1), (0, 1)]);
        let text = a.to_json();
        assert!(text.contains("\"1/2\""));
        assert_eq!(Sequence::from_json(&text).unwrap(), a);
        let err = Sequence::from_json("{\n  \"terms\": [\"1\", \"1/0\"]\n}").unwrap_err();
        assert_eq!(err.line(), 2);
        assert!(Sequence::from_json("{\"terms\": []}").is_err());
        assert!(Sequence::from_json("{\"terms\": [\"1\"], \"x\": 1}").is_err());
    }

    fn arb_rational() -> impl Strategy<Value = BigRational> {
        (-1_000_000i64..=1_000_000, 1i64..=1_000_000).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_sequence(max_len: usize) -> impl Strategy<Value = Sequence> {
        prop::collection::vec(arb_rational(), 1..=max_len).prop_map(|v| Sequence::new(v).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn binomial_is_an_involution(a in arb_sequence(24)) {
            prop_assert_eq!(binomial_transform(&binomial_transform(&a)), a);
        }

        #[test]
        fn modular_roundtrip(a in arb_sequence(16), alpha in arb_rational(), beta in arb_rational()) {
            prop_assume!(!beta.is_zero());
            let p = ModularParams::new(alpha, beta);
            prop_assert_eq!(modular_inverse(&modular_transform(&a, &p), &p).unwrap(), a);
        }

        #[test]
        fn hermite_roundtrip(a in arb_sequence(16), alpha in arb_rational(), beta in arb_rational()) {
            prop_assume!(!alpha.is_zero());
            let p = HermiteParams::new(alpha, beta);
            prop_assert_eq!(hermite_inverse_seq(&hermite_complementary_seq(&a, &p), &p).unwrap(), a.clone());
            prop_assert_eq!(hermite_complementary_seq(&hermite_inverse_seq(&a, &p).unwrap(), &p), a);
        }

        #[test]
        fn zero_beta_hermite_projections(a in arb_sequence(12), alpha in arb_rational()) {
            let p = HermiteParams::new(alpha.clone(), BigRational::zero());
            let plain = hermite_transform_seq(&a, &p);
            let comp = hermite_complementary_seq(&a, &p);
            for n in 0..a.len() {
                prop_assert_eq!(&plain.terms()[n], &(powi(&alpha, n) * &a.terms()[0]));
                prop_assert_eq!(&comp.terms()[n], &(powi(&alpha, n) * &a.terms()[n]));
            }
        }

        #[test]
        fn zero_k_is_binomial(a in arb_sequence(16)) {
            prop_assert_eq!(rising_k_binomial(&a, 0), binomial_transform(&a));
        }

        #[test]
        fn exchange_roundtrip(a in arb_sequence(10)) {
            prop_assert_eq!(Sequence::from_json(&a.to_json()).unwrap(), a);
        }
    }
}
