//! Two-variable Hermite and Laguerre polynomials, Tricomi–Bessel functions
//! and Stirling numbers of the second kind.
//!
//! The polynomial evaluators are generic over [`Scalar`], so the same code
//! yields exact rationals, doubles or complex doubles.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{binomial, binomial_row, factorial, powi, Scalar};

/// `H_n(x, y) = n! Σ_{r≤n/2} x^{n-2r} y^r / ((n-2r)! r!)`, generating function
/// `e^{xt + yt²}`.
pub fn hermite2<T: Scalar>(n: usize, x: &T, y: &T) -> T {
    // Horner in y/x² is unsafe at x = 0, so sum directly with integer weights.
    let mut acc = T::zero();
    let nf = factorial(n);
    for r in 0..=n / 2 {
        let w = &nf / (factorial(n - 2 * r) * factorial(r));
        acc = acc + T::from_bigint(&w) * powi(x, n - 2 * r) * powi(y, r);
    }
    acc
}

/// `L_n(x, y) = n! Σ_{r≤n} (-1)^r x^r y^{n-r} / ((r!)² (n-r)!)`. `L_n(x, 1)`
/// is the classical Laguerre polynomial.
pub fn laguerre2<T: Scalar>(n: usize, x: &T, y: &T) -> T {
    let row = binomial_row(n);
    let mut acc = T::zero();
    for (r, c) in row.iter().enumerate() {
        let term = T::from_ratio(c, &factorial(r)) * powi(x, r) * powi(y, n - r);
        acc = if r % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// Relative cutoff for the Tricomi–Bessel series.
pub const TRICOMI_CUTOFF: f64 = 1e-18;
const TRICOMI_MAX_TERMS: usize = 20_000;

/// `C_n(z) = Σ_r (-z)^r / (r! (n+r)!)`; `C_0(x) = J_0(2√x)` for `x ≥ 0`.
///
/// Summation stops once at least `n + 10` terms are in and the latest term is
/// below `1e-18` of the running sum.
pub fn tricomi_c(n: usize, z: Complex64) -> Complex64 {
    let mut term = Complex64::new(1.0 / crate::scalar::factorial_f64(n), 0.0);
    let mut sum = term;
    let min_terms = n + 10;
    for r in 0..TRICOMI_MAX_TERMS {
        term *= -z / (((r + 1) * (n + r + 1)) as f64);
        sum += term;
        if r + 2 >= min_terms && term.norm() <= TRICOMI_CUTOFF * sum.norm() {
            break;
        }
        if term.norm() == 0.0 {
            break;
        }
    }
    sum
}

/// Exact Taylor coefficients of `C_n(x)` through `x^order`.
pub fn tricomi_coefficients(n: usize, order: usize) -> Vec<BigRational> {
    (0..=order)
        .map(|r| {
            let v = BigRational::new(BigInt::one(), factorial(r) * factorial(n + r));
            if r % 2 == 1 {
                -v
            } else {
                v
            }
        })
        .collect()
}

/// `S2(k, n) = (1/k!) Σ_{j≤k} (-1)^{k-j} C(k,j) j^n`: the number of ways to
/// split `n` labelled items into `k` nonempty blocks. Argument order is
/// (blocks, items).
pub fn stirling2(k: usize, n: usize) -> Result<BigInt> {
    let mut acc = BigInt::zero();
    for j in 0..=k {
        let term = binomial(k, j) * num_traits::pow(BigInt::from(j), n);
        if (k - j).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    let kf = factorial(k);
    let (q, rem) = acc.div_rem(&kf);
    if !rem.is_zero() || q.is_negative() {
        return Err(Error::Internal(format!("S2({k},{n}) sum {acc} is not divisible by {k}!")));
    }
    Ok(q)
}

/// Triangular table of `S2(k, n)` for `0 ≤ k ≤ n ≤ bound`, built once by the
/// recurrence `S2(k,n) = k S2(k,n-1) + S2(k-1,n-1)`.
#[derive(Clone, Debug)]
pub struct Stirling2Table {
    rows: Vec<Vec<BigInt>>,
}

impl Stirling2Table {
    pub fn new(bound: usize) -> Result<Self> {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(bound + 1);
        rows.push(vec![BigInt::one()]);
        for n in 1..=bound {
            let prev = &rows[n - 1];
            let row: Vec<BigInt> = (0..=n)
                .map(|k| {
                    let keep = if k < n { prev[k].clone() * BigInt::from(k) } else { BigInt::zero() };
                    let split = if k > 0 { prev[k - 1].clone() } else { BigInt::zero() };
                    keep + split
                })
                .collect();
            rows.push(row);
        }
        let table = Stirling2Table { rows };
        table.self_check()?;
        Ok(table)
    }

    pub fn bound(&self) -> usize {
        self.rows.len() - 1
    }

    /// `S2(k, n)`, zero when `k > n`. Panics if `n` exceeds the bound.
    pub fn get(&self, k: usize, n: usize) -> &BigInt {
        static ZERO: std::sync::OnceLock<BigInt> = std::sync::OnceLock::new();
        self.rows[n].get(k).unwrap_or_else(|| ZERO.get_or_init(BigInt::zero))
    }

    /// `Σ_k S2(k,n) (x)_k = x^n` at `x = n + 3` for every row.
    fn self_check(&self) -> Result<()> {
        for (n, row) in self.rows.iter().enumerate() {
            let x = BigInt::from(n + 3);
            let mut falling = BigInt::one();
            let mut acc = BigInt::zero();
            for (k, s) in row.iter().enumerate() {
                acc += s * &falling;
                falling *= &x - BigInt::from(k);
            }
            if acc != num_traits::pow(x, n) {
                return Err(Error::Internal(format!("Stirling row {n} fails the falling-factorial identity")));
            }
        }
        Ok(())
    }
}

/// `Σ_s C(n,s) x^s H_{n-s}(y,z) − H_n(x+y, z)`; zero for every input.
pub fn hermite_addition_check<T: Scalar>(n: usize, x: &T, y: &T, z: &T) -> T {
    let row = binomial_row(n);
    let mut lhs = T::zero();
    for (s, c) in row.iter().enumerate() {
        lhs = lhs + T::from_bigint(c) * powi(x, s) * hermite2(n - s, y, z);
    }
    lhs - hermite2(n, &(x.clone() + y.clone()), z)
}
