use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use umbra_core::appell::{appell_poly, apply_operator, generating_check, AppellFamily, Sign};
use umbra_core::opcalc::disentangle::weyl_check;
use umbra_core::opcalc::heat::{heat_evolve_ft, GridFunction};
use umbra_core::opcalc::laguerre::{borel_transform, commutator_check_ld, exp_laguerre_derivative};
use umbra_core::opcalc::pauli::{matrix_function_pauli, max_entry_difference};
use umbra_core::opcalc::quadrature::QuadratureRule;
use umbra_core::opcalc::symbol::{SpectralSymbol, Spectrum};
use umbra_core::scalar::{factorial, rat};
use umbra_core::Execution;

fn rational() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_len: usize) -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::vec(rational(), 1..=max_len)
}

fn monomial(n: usize) -> Vec<BigRational> {
    let mut p = vec![BigRational::zero(); n + 1];
    p[n] = BigRational::one();
    p
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn appell_polynomials_invert(mut a in poly(5), n in 0usize..10) {
        if a[0].is_zero() {
            a[0] = BigRational::one();
        }
        let fam = AppellFamily::from_taylor(a, 12).unwrap();
        let minus = appell_poly(&fam, n, Sign::Minus).unwrap();
        let back = apply_operator(&fam, Sign::Plus, &minus).unwrap();
        prop_assert_eq!(trim(back), monomial(n));
        let plus = appell_poly(&fam, n, Sign::Plus).unwrap();
        let back = apply_operator(&fam, Sign::Minus, &plus).unwrap();
        prop_assert_eq!(trim(back), monomial(n));
    }

    #[test]
    fn identity_family_generates_exponential(t in -1.0f64..1.0, x in -2.0f64..2.0) {
        let fam = AppellFamily::identity(30).unwrap();
        prop_assert!(generating_check(&fam, Sign::Plus, 30, t, x).unwrap() < 1e-12);
    }

    #[test]
    fn weyl_identity_is_exact(a in rational(), b in rational()) {
        prop_assert!(weyl_check(&a, &b, 4).unwrap().is_exact_zero());
    }

    #[test]
    fn laguerre_commutator_vanishes(mut f in poly(8)) {
        f[0] = BigRational::zero();
        let r = commutator_check_ld(&f).unwrap();
        prop_assert!(r.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn exp_laguerre_derivative_is_a_group(a in rational(), b in rational(), f in poly(7)) {
        let two = exp_laguerre_derivative(&b, &exp_laguerre_derivative(&a, &f));
        let one = exp_laguerre_derivative(&(a + b), &f);
        prop_assert_eq!(two, one);
    }

    #[test]
    fn borel_scales_monomials(n in 0usize..20) {
        let b = borel_transform(&monomial(n));
        prop_assert_eq!(&b[n], &BigRational::from_integer(factorial(n)));
    }

    #[test]
    fn gauss_hermite_is_exact_below_twice_the_order(n in 4usize..40, c in prop::collection::vec(-1.0f64..1.0, 1..8)) {
        let rule = QuadratureRule::gauss_hermite(n).unwrap();
        let deg = (2 * n - 1).min(2 * c.len() - 2);
        // ∫ u^{2m} e^{-u²} du = Γ(m+½) = (2m−1)!! √π / 2^m
        let mut want = 0.0;
        let mut moment = PI.sqrt();
        for (m, cm) in c.iter().enumerate().take(deg / 2 + 1) {
            if m > 0 {
                moment *= (2 * m - 1) as f64 / 2.0;
            }
            want += cm * moment;
        }
        let got = rule.apply(Execution::Sequential, |u| {
            let u2 = u * u;
            let mut p = 0.0;
            for cm in c.iter().take(deg / 2 + 1).rev() {
                p = p * u2 + cm;
            }
            Complex64::new(p + u.powi(3), 0.0)
        });
        prop_assert!((got.re - want).abs() < 1e-10 * (1.0 + want.abs()), "{} vs {}", got.re, want);
    }

    #[test]
    fn pauli_even_symbol_is_scalar(omega in 0.0f64..3.0, y in 0.05f64..2.0) {
        let sym = Spectrum::gaussian(y).unwrap();
        let f = matrix_function_pauli(&sym, omega).unwrap();
        let s = sym.eval(Complex64::new(omega, 0.0));
        let want = nalgebra::Matrix2::new(s, Complex64::zero(), Complex64::zero(), s);
        prop_assert!(max_entry_difference(&f.matrix, &want) < 1e-10);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn heat_flow_is_a_semigroup(a in 0.0f64..0.5, b in 0.0f64..0.5, s in 0.3f64..2.0) {
        let g = GridFunction::from_fn(|x| Complex64::new((-s * x * x).exp(), 0.0), 24.0, 512).unwrap();
        let two = heat_evolve_ft(&heat_evolve_ft(&g, a).unwrap(), b).unwrap();
        let one = heat_evolve_ft(&g, a + b).unwrap();
        let diff = two.samples().iter().zip(one.samples()).map(|(p, q)| (p - q).norm()).fold(0.0, f64::max);
        prop_assert!(diff < 1e-12);
    }
}
