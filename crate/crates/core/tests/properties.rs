mod oracle;

use elimkit_core::discriminant::discriminant_value;
use elimkit_core::poly::{parse_polynomial, polar_power, LinearPoint};
use elimkit_core::resultant::{macaulay_resultant, sylvester_resultant, FormSystem};
use elimkit_core::{ExponentVector, Polynomial, Rational};
use num_bigint::BigInt;
use num_traits::Zero;
use oracle::q;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, d)| Rational::new(BigInt::from(p), BigInt::from(d)))
}

/// Sparse polynomial in `nvars` variables with exponents below 4.
fn poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..4, nvars), rational()), 0..6).prop_map(move |terms| {
        let mut p = Polynomial::zero(nvars);
        for (e, c) in terms {
            p.add_term(ExponentVector::new(e), c);
        }
        p
    })
}

/// Binary form of exact degree `d` with integer coefficients.
fn binary_form(d: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-5i64..=5, d as usize + 1)
        .prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
        .prop_map(move |c| {
            let mut p = Polynomial::zero(2);
            for (i, v) in c.into_iter().enumerate() {
                p.add_term(ExponentVector::new(vec![d - i as u32, i as u32]), q(v));
            }
            p
        })
}

fn ternary_form(d: u32) -> impl Strategy<Value = Polynomial> {
    let monos = elimkit_core::poly::monomials_of_degree(3, d);
    prop::collection::vec(-4i64..=4, monos.len())
        .prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
        .prop_map(move |c| {
            let mut p = Polynomial::zero(3);
            for (e, v) in monos.iter().zip(c) {
                p.add_term(e.clone(), q(v));
            }
            p
        })
}

fn point(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(3), b in poly(3), c in poly(3)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(3), a.clone());
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(3), b in poly(3), x in point(3)) {
        let (va, vb) = (a.eval(&x).unwrap(), b.eval(&x).unwrap());
        prop_assert_eq!((&a * &b).eval(&x).unwrap(), &va * &vb);
        prop_assert_eq!((&a + &b).eval(&x).unwrap(), va + vb);
    }

    #[test]
    fn print_parse_round_trip(a in poly(4)) {
        let text = a.to_string();
        prop_assert_eq!(parse_polynomial(&text, 4).unwrap(), a);
    }

    #[test]
    fn derivative_is_a_derivation(a in poly(3), b in poly(3), i in 0usize..3) {
        let lhs = (&a * &b).partial_derivative(i).unwrap();
        let rhs = &(&a.partial_derivative(i).unwrap() * &b) + &(&a * &b.partial_derivative(i).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn euler_relation_for_forms(f in ternary_form(3)) {
        // Σ x_i ∂_i f = d f
        let mut sum = Polynomial::zero(3);
        for i in 0..3 {
            sum = &sum + &(&Polynomial::var(3, i) * &f.partial_derivative(i).unwrap());
        }
        prop_assert_eq!(sum, f.scale(&q(3)));
    }

    #[test]
    fn full_polar_power_is_factorial_times_value(f in ternary_form(3), a in point(3)) {
        let p = polar_power(&f, &LinearPoint::new(a.clone()), 3).unwrap();
        prop_assert_eq!(p, Polynomial::constant(3, f.eval(&a).unwrap() * q(6)));
    }

    #[test]
    fn binary_resultant_matches_sylvester_matrix(f in binary_form(3), g in binary_form(2)) {
        let expect = oracle::sylvester(&f, 3, &g, 2);
        prop_assert_eq!(sylvester_resultant(&f, &g).unwrap(), expect.clone());
        let system = FormSystem::new(vec![f, g]).unwrap();
        prop_assert_eq!(macaulay_resultant(&system).unwrap(), expect);
    }

    #[test]
    fn resultant_swap_sign(f in binary_form(3), g in binary_form(2)) {
        // Res(g, f) = (-1)^{mn} Res(f, g) with m n = 6.
        prop_assert_eq!(sylvester_resultant(&g, &f).unwrap(), sylvester_resultant(&f, &g).unwrap());
    }

    #[test]
    fn resultant_is_multiplicative(f in binary_form(2), g in binary_form(1), h in binary_form(2)) {
        let fg = &f * &g;
        prop_assert_eq!(
            sylvester_resultant(&fg, &h).unwrap(),
            sylvester_resultant(&f, &h).unwrap() * sylvester_resultant(&g, &h).unwrap()
        );
    }

    #[test]
    fn ternary_resultant_matches_reference(
        f in ternary_form(2), g in ternary_form(1), h in ternary_form(2)
    ) {
        let forms = vec![f, g, h];
        let lib = macaulay_resultant(&FormSystem::new(forms.clone()).unwrap()).unwrap();
        prop_assert_eq!(lib, oracle::resultant(&forms));
    }

    #[test]
    fn discriminant_matches_classical_formulas(b3 in binary_form(3), t2 in ternary_form(2)) {
        prop_assert_eq!(discriminant_value(&b3).unwrap(), oracle::classical_discriminant(&b3));
        prop_assert_eq!(discriminant_value(&t2).unwrap(), oracle::classical_discriminant(&t2));
    }

    #[test]
    fn discriminant_invariant_under_unimodular_change(f in ternary_form(3), s in -3i64..=3, t in -3i64..=3) {
        // x_0 -> x_0 + s x_1 + t x_2 has determinant 1.
        let m = vec![
            vec![q(1), q(s), q(t)],
            vec![q(0), q(1), q(0)],
            vec![q(0), q(0), q(1)],
        ];
        let moved = f.linear_change(&m).unwrap();
        prop_assert_eq!(discriminant_value(&moved).unwrap(), discriminant_value(&f).unwrap());
    }

    #[test]
    fn discriminant_vanishes_on_planted_singularity(f in ternary_form(3)) {
        // Remove every term of order below 2 at (1:0:0).
        let g = f.filter_terms(|e| e.get(0) < 2);
        prop_assume!(!g.is_zero());
        prop_assert!(discriminant_value(&g).unwrap().is_zero());
    }
}
