//! Algebraic invariants checked on random inputs.

mod common;

use bracket_width::poly::{divide_multivariate, parse_poly};
use bracket_width::{buchberger, Coeff, Curve, Mono, MonomialOrder, Poly, Rat, Var};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rat::new(BigInt::from(n), BigInt::from(d)))
}

fn poly_in(vars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
    let ey = if vars > 1 { max_exp } else { 0 };
    let ez = if vars > 2 { max_exp } else { 0 };
    prop::collection::vec(
        ((0..=max_exp), (0..=ey), (0..=ez), rational()),
        0..=max_terms,
    )
    .prop_map(|ts| Poly::from_terms(ts.into_iter().map(|(a, b, c, r)| (Mono::new(a, b, c), r))))
}

fn poly() -> impl Strategy<Value = Poly> {
    poly_in(3, 3, 6)
}

fn order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![Just(MonomialOrder::Lex), Just(MonomialOrder::GrLex)]
}

fn var() -> impl Strategy<Value = Var> {
    prop_oneof![Just(Var::X), Just(Var::Y), Just(Var::Z)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn product_term_bound(a in poly(), b in poly()) {
        prop_assert!((&a * &b).len() <= a.len() * b.len());
    }

    #[test]
    fn division_invariant(p in poly(), ds in prop::collection::vec(poly(), 1..=3), ord in order()) {
        let ds: Vec<Poly> = ds.into_iter().filter(|d| !d.is_zero()).collect();
        prop_assume!(!ds.is_empty());
        let (qs, r) = divide_multivariate(&p, &ds, ord).unwrap();
        let back = qs.iter().zip(&ds).fold(r.clone(), |acc, (q, d)| &acc + &(q * d));
        prop_assert_eq!(back, p);
        for (m, _) in r.terms() {
            for d in &ds {
                prop_assert!(!d.leading_mono(ord).unwrap().divides(m));
            }
        }
    }

    #[test]
    fn display_round_trip(p in poly()) {
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn leibniz(a in poly(), b in poly(), v in var()) {
        let lhs = (&a * &b).derivative(v);
        let rhs = &(&a * &b.derivative(v)) + &(&b * &a.derivative(v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn antiderivative_round_trip(p in poly(), v in var()) {
        let r = p.antiderivative(v);
        prop_assert_eq!(r.derivative(v), p);
        prop_assert!(r.terms().iter().all(|(m, _)| m.exp(v) > 0));
    }

    #[test]
    fn localized_normalization(num in poly_in(1, 5, 5), m in 0u32..=4) {
        let c = Curve::line_minus(parse_poly("x^2 - x").unwrap()).unwrap();
        let loc = c.localization().unwrap();
        let e = loc.elem(num.clone(), m);
        // Idempotent.
        prop_assert_eq!(loc.elem(e.numerator().clone(), e.exponent()), e.clone());
        // Same value: num · f^e = e.num · f^m.
        prop_assert_eq!(
            &num * &loc.f().pow(e.exponent()),
            e.numerator() * &loc.f().pow(m)
        );
        if e.exponent() > 0 {
            let (_, r) = divide_multivariate(e.numerator(), &[loc.f().clone()], MonomialOrder::Lex).unwrap();
            prop_assert!(!r.is_zero());
        }
    }

    #[test]
    fn localized_mul_clears_denominators(
        p in poly_in(1, 4, 4), q in poly_in(1, 4, 4), a in 0u32..=3, b in 0u32..=3,
    ) {
        let c = Curve::line_minus(parse_poly("x^3 + 2").unwrap()).unwrap();
        let loc = c.localization().unwrap();
        let prod = loc.mul(&loc.elem(p.clone(), a), &loc.elem(q.clone(), b));
        // p·q / f^(a+b) == prod.num / f^prod.exp  <=>  p·q·f^prod.exp == prod.num·f^(a+b)
        prop_assert_eq!(
            &(&p * &q) * &loc.f().pow(prod.exponent()),
            prod.numerator() * &loc.f().pow(a + b)
        );
        let sum = loc.add(&loc.elem(p.clone(), a), &loc.elem(q.clone(), b));
        let m = a.max(b);
        let lhs = &(&(&p * &loc.f().pow(m - a)) + &(&q * &loc.f().pow(m - b))) * &loc.f().pow(sum.exponent());
        prop_assert_eq!(lhs, sum.numerator() * &loc.f().pow(m));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// Normal forms are a ring homomorphism onto canonical representatives.
    #[test]
    fn reduce_is_a_homomorphism(a in poly_in(2, 4, 6), b in poly_in(2, 4, 6)) {
        let c = Curve::plane(parse_poly("y^2 - x^3 - x").unwrap()).unwrap();
        let (ra, rb) = (c.reduce(&a), c.reduce(&b));
        prop_assert_eq!(c.reduce(&(&a * &b)), c.reduce(&(ra.repr() * rb.repr())));
        prop_assert_eq!(c.reduce(&(&a + &b)), c.reduce(&(ra.repr() + rb.repr())));
        prop_assert_eq!(c.reduce(ra.repr()), ra);
    }

    /// `τ(b)` does not depend on the lift of `b`.
    #[test]
    fn apply_tau_is_lift_independent(b in poly(), i1 in poly(), i2 in poly()) {
        let gens = [parse_poly("y - x^2").unwrap(), parse_poly("z - x^3").unwrap()];
        let tau = [Poly::one(), parse_poly("2x").unwrap(), parse_poly("3x^2").unwrap()];
        let c = Curve::space(&gens, tau).unwrap();
        let member = &(&i1 * &gens[0]) + &(&i2 * &gens[1]);
        let lift = |p: &Poly| Coeff::Ring(c.reduce(p));
        let direct = bracket_width::apply_tau(&c, &lift(&b));
        let shifted = bracket_width::groebner::apply_derivation(c.model().unwrap().tau(), &(&b + &member));
        prop_assert_eq!(direct, lift(&shifted));
    }

    #[test]
    fn groebner_certificates_recombine(gens in prop::collection::vec(poly_in(3, 2, 3), 1..=3), t in poly_in(3, 2, 3)) {
        let gb = buchberger(&gens, MonomialOrder::GrLex).unwrap();
        prop_assert!(gb.is_valid());
        let member = gens.iter().fold(Poly::zero(), |acc, g| &acc + &(&t * g));
        let cert = gb.certify(&member).unwrap();
        prop_assert!(cert.verify());
        prop_assert_eq!(gb.normal_form(&gb.normal_form(&t)), gb.normal_form(&t));
    }
}
