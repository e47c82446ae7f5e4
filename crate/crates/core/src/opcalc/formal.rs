//! Polynomials in `x` and power series in a bookkeeping parameter `ε`.
//!
//! Operator identities such as `e^{Â+B̂} = e^{Â} e^{B̂} e^{-[Â,B̂]/2}` are
//! checked by letting both sides act on monomials and comparing every
//! coefficient of `ε^j x^i` through a fixed order. With rational
//! coefficients the comparison is exact.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::scalar::{rational_to_f64, Scalar};

/// Ascending-coefficient polynomial helpers.
pub mod poly {
    use crate::scalar::Scalar;

    pub fn monomial<T: Scalar>(n: usize) -> Vec<T> {
        let mut v = vec![T::zero(); n + 1];
        v[n] = T::one();
        v
    }

    pub fn derivative<T: Scalar>(p: &[T]) -> Vec<T> {
        p.iter().enumerate().skip(1).map(|(j, c)| c.clone() * T::from_i64(j as i64)).collect()
    }

    pub fn mul_x<T: Scalar>(p: &[T]) -> Vec<T> {
        let mut v = Vec::with_capacity(p.len() + 1);
        v.push(T::zero());
        v.extend(p.iter().cloned());
        v
    }

    pub fn scale<T: Scalar>(p: &[T], s: &T) -> Vec<T> {
        p.iter().map(|c| c.clone() * s.clone()).collect()
    }

    pub fn add<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
        let n = a.len().max(b.len());
        (0..n)
            .map(|i| match (a.get(i), b.get(i)) {
                (Some(x), Some(y)) => x.clone() + y.clone(),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => T::zero(),
            })
            .collect()
    }

    pub fn sub<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
        let neg: Vec<T> = b.iter().map(|c| -c.clone()).collect();
        add(a, &neg)
    }

    pub fn eval<T: Scalar>(p: &[T], x: &T) -> T {
        p.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn is_zero<T: Scalar>(p: &[T]) -> bool {
        p.iter().all(|c| c.is_zero())
    }
}

/// `Σ_{j≤T} ε^j p_j(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalExpansion<T> {
    orders: Vec<Vec<T>>,
}

impl<T: Scalar> FormalExpansion<T> {
    /// `p(x) ε^0`, truncated at order `cap`.
    pub fn constant(p: Vec<T>, cap: usize) -> Self {
        let mut orders = vec![Vec::new(); cap + 1];
        orders[0] = p;
        FormalExpansion { orders }
    }

    pub fn zero(cap: usize) -> Self {
        FormalExpansion { orders: vec![Vec::new(); cap + 1] }
    }

    pub fn order_cap(&self) -> usize {
        self.orders.len() - 1
    }

    pub fn orders(&self) -> &[Vec<T>] {
        &self.orders
    }

    pub fn is_zero(&self) -> bool {
        self.orders.iter().all(|p| poly::is_zero(p))
    }

    pub fn sub(&self, other: &Self) -> Self {
        FormalExpansion {
            orders: self.orders.iter().zip(&other.orders).map(|(a, b)| poly::sub(a, b)).collect(),
        }
    }

    fn add_assign(&mut self, other: &Self) {
        for (a, b) in self.orders.iter_mut().zip(&other.orders) {
            *a = poly::add(a, b);
        }
    }
}

type PolyMap<'a, T> = Box<dyn Fn(&[T]) -> Vec<T> + 'a>;

/// A formal operator `X = Σ_j ε^j L_j` with each `L_j` linear on polynomials
/// and every `j ≥ 1`.
pub struct FormalGenerator<'a, T> {
    terms: Vec<(usize, PolyMap<'a, T>)>,
}

impl<'a, T: Scalar> Default for FormalGenerator<'a, T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<'a, T: Scalar> FormalGenerator<'a, T> {
    pub fn new() -> Self {
        FormalGenerator { terms: Vec::new() }
    }

    /// Adds `ε^order L`. Panics on `order == 0`, which would make the
    /// exponential series non-terminating order by order.
    pub fn with(mut self, order: usize, map: impl Fn(&[T]) -> Vec<T> + 'a) -> Self {
        assert!(order >= 1, "generator terms need a positive power of epsilon");
        self.terms.push((order, Box::new(map)));
        self
    }

    /// `X e`.
    pub fn apply(&self, e: &FormalExpansion<T>) -> FormalExpansion<T> {
        let cap = e.order_cap();
        let mut out = FormalExpansion::zero(cap);
        for (i, p) in e.orders.iter().enumerate() {
            if poly::is_zero(p) {
                continue;
            }
            for (j, map) in &self.terms {
                if i + j <= cap {
                    let q = map(p);
                    out.orders[i + j] = poly::add(&out.orders[i + j], &q);
                }
            }
        }
        out
    }

    /// `e^X e = Σ_n X^n e / n!`, exact through the order cap.
    pub fn exp_apply(&self, e: &FormalExpansion<T>) -> FormalExpansion<T> {
        let mut result = e.clone();
        let mut term = e.clone();
        for n in 1..=e.order_cap() {
            let next = self.apply(&term);
            let inv = T::one() / T::from_i64(n as i64);
            term = FormalExpansion { orders: next.orders.iter().map(|p| poly::scale(p, &inv)).collect() };
            if term.is_zero() {
                break;
            }
            result.add_assign(&term);
        }
        result
    }
}

/// Summary of an exact coefficientwise comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalResidual {
    /// Number of `ε^j x^i` coefficients compared.
    pub compared: usize,
    /// How many of them differ.
    pub nonzero: usize,
    /// Largest absolute difference.
    pub max_abs: BigRational,
}

impl FormalResidual {
    pub fn from_differences(diffs: &[FormalExpansion<BigRational>]) -> Self {
        let mut compared = 0;
        let mut nonzero = 0;
        let mut max_abs = BigRational::zero();
        for d in diffs {
            for p in d.orders() {
                for c in p {
                    compared += 1;
                    if !c.is_zero() {
                        nonzero += 1;
                        let a = c.abs();
                        if a > max_abs {
                            max_abs = a;
                        }
                    }
                }
            }
        }
        FormalResidual { compared, nonzero, max_abs }
    }

    pub fn is_exact_zero(&self) -> bool {
        self.nonzero == 0
    }

    pub fn max_abs_f64(&self) -> f64 {
        rational_to_f64(&self.max_abs)
    }
}

/// `Σ_j c_j L^j f` evaluated at `x`, where `c_j` are Taylor coefficients of
/// a symbol and `step` applies `L` to a polynomial. Used as a floating-point
/// oracle for `Φ(L) f`; the caller picks how many coefficients to pass.
pub fn symbol_series_oracle(
    taylor: &[f64],
    f: &[Complex64],
    step: impl Fn(&[Complex64]) -> Vec<Complex64>,
    x: Complex64,
) -> Complex64 {
    let mut p = f.to_vec();
    let mut sum = Complex64::new(0.0, 0.0);
    for (j, &c) in taylor.iter().enumerate() {
        if j > 0 {
            p = step(&p);
        }
        if c != 0.0 {
            sum += c * poly::eval(&p, &x);
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn exponential_of_derivative_is_a_shift() {
        // e^{ε∂} x^3 = (x + ε)^3
        let gen = FormalGenerator::<BigRational>::new().with(1, poly::derivative);
        let e = gen.exp_apply(&FormalExpansion::constant(poly::monomial(3), 5));
        assert_eq!(e.orders()[0], poly::monomial::<BigRational>(3));
        assert_eq!(poly::eval(&e.orders()[1], &int(1)), int(3));
        assert_eq!(e.orders()[2], vec![int(0), int(3)]);
        assert_eq!(e.orders()[3], vec![int(1)]);
        assert!(poly::is_zero(&e.orders()[4]));
    }

    #[test]
    fn polynomial_helpers() {
        let p = vec![rat(1, 2), int(3), int(-2)];
        assert_eq!(poly::derivative(&p), vec![int(3), int(-4)]);
        assert_eq!(poly::eval(&p, &int(2)), rat(1, 2) + int(6) - int(8));
        assert_eq!(poly::mul_x(&p)[3], int(-2));
        assert!(poly::is_zero(&poly::sub(&p, &p)));
    }
}
