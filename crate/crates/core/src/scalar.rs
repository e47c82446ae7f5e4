//! Coefficient arithmetic shared by the exact and floating-point paths.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A field element usable as a polynomial or series coefficient.
///
/// Implemented by [`BigRational`] (exact path), `f64` and [`Complex64`].
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + Send + Sync {
    fn from_i64(v: i64) -> Self;
    fn from_bigint(v: &BigInt) -> Self;
    fn from_ratio(num: &BigInt, den: &BigInt) -> Self {
        Self::from_bigint(num) / Self::from_bigint(den)
    }
    fn from_rational(r: &BigRational) -> Self {
        Self::from_ratio(r.numer(), r.denom())
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }
    fn from_ratio(num: &BigInt, den: &BigInt) -> Self {
        BigRational::new(num.clone(), den.clone())
    }
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_bigint(v: &BigInt) -> Self {
        v.to_f64().unwrap_or(f64::NAN)
    }
    fn from_ratio(num: &BigInt, den: &BigInt) -> Self {
        ratio_to_f64(num, den)
    }
}

impl Scalar for Complex64 {
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn from_bigint(v: &BigInt) -> Self {
        Complex64::new(v.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn from_ratio(num: &BigInt, den: &BigInt) -> Self {
        Complex64::new(ratio_to_f64(num, den), 0.0)
    }
}

/// Converts p/q to the nearest-ish double without overflowing on huge
/// numerators and denominators.
fn ratio_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    if let (Some(n), Some(d)) = (num.to_f64(), den.to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    let r = BigRational::new(num.clone(), den.clone());
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    ratio_to_f64(r.numer(), r.denom())
}

pub fn rational_to_complex(r: &BigRational) -> Complex64 {
    Complex64::new(rational_to_f64(r), 0.0)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact rational from a finite double (every finite double is a dyadic rational).
pub fn rational_from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_f64(x)
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let err = |reason: &str| Error::ParseRational {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err("numerator is not an integer"))?;
    let den: BigInt = den.parse().map_err(|_| err("denominator is not an integer"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

/// Renders a rational as `"p"` or `"p/q"` in lowest terms.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n as u64).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Row `C(n, 0..=n)` built multiplicatively.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for s in 0..n {
        c = c * BigInt::from((n - s) as u64) / BigInt::from((s + 1) as u64);
        row.push(c.clone());
    }
    row
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut c = BigInt::one();
    for s in 0..k {
        c = c * BigInt::from((n - s) as u64) / BigInt::from((s + 1) as u64);
    }
    c
}

/// `x^e` for any scalar, with `x^0 = 1` (including `0^0`).
pub fn powi<T: Scalar>(x: &T, e: usize) -> T {
    let mut acc = T::one();
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base.clone();
        }
        base = base.clone() * base;
        e >>= 1;
    }
    acc
}

/// Least common multiple of the denominators of `terms`.
pub fn common_denominator(terms: &[BigRational]) -> BigInt {
    terms.iter().fold(BigInt::one(), |acc, t| acc.lcm(t.denom()))
}

pub fn factorial_f64(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational(" -4 ").unwrap(), int(-4));
        assert_eq!(format_rational(&rat(-2, 4)), "-1/2");
        assert_eq!(format_rational(&int(7)), "7");
        assert!(matches!(parse_rational("1/0"), Err(Error::ParseRational { .. })));
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn binomials() {
        let row = binomial_row(5);
        let expected: Vec<BigInt> = [1, 5, 10, 10, 5, 1].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(row, expected);
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(powi(&int(0), 0), int(1));
    }

    #[test]
    fn huge_ratio_to_float() {
        let big = factorial(300);
        let r = BigRational::new(big.clone() * BigInt::from(3), big);
        assert_eq!(rational_to_f64(&r), 3.0);
    }
}
