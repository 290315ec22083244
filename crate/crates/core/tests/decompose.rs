mod common;

use bracket_width::decompose::{from_cofactors, verify};
use bracket_width::liealg::{recombine, VField};
use bracket_width::{
    rational_decompose, single_bracket_line, three_bracket_space, two_bracket_plane, Coeff, Curve,
    Poly, Var,
};
use common::{p, random_poly, rng};
use rand::Rng;

/// 1 = (3x²+1)(1 + 3x²/2) − (9x/2)(x³+x) gives F = −(9/4)xy, G = 1 + (3/2)x².
#[test]
fn euclidean_cofactors_decompose_tau() {
    let c = Curve::plane(p("y^2 - x^3 - x")).unwrap();
    let model = c.model().unwrap();
    let (pt, qt) = (&model.tau()[0], &model.tau()[1]);
    let (f, g) = (p("-9/4*x*y"), p("1 + 3/2*x^2"));
    assert_eq!(c.reduce(&(&(pt * &f) + &(qt * &g))), c.reduce(&Poly::one()));

    let d = from_cofactors(&c, &[f, g]).unwrap();
    assert!(d.len() <= 2);
    assert!(verify(&d, &c.one()).unwrap());
}

#[test]
fn syzygy_shift_keeps_the_sum() {
    let mut rng = rng(11);
    let c = Curve::plane(p("y^2 - x^5 + x")).unwrap();
    let model = c.model().unwrap();
    let (pt, qt) = (model.tau()[0].clone(), model.tau()[1].clone());
    for _ in 0..50 {
        let target = c.elem(&random_poly(&mut rng, 2, 4)).unwrap();
        let lift = c.lift(&target).unwrap();
        let cert = model.tau_ideal().certify(&lift).unwrap();
        let (f, g) = (cert.cofactors()[0].clone(), cert.cofactors()[1].clone());
        let s = random_poly(&mut rng, 2, 3);
        let shifted = [&f + &(&qt * &s), &g - &(&pt * &s)];
        let a = from_cofactors(&c, &[f, g]).unwrap();
        let b = from_cofactors(&c, &shifted).unwrap();
        assert!(b.len() <= 2);
        assert_eq!(recombine(&a).unwrap(), recombine(&b).unwrap());
        assert!(verify(&b, &target).unwrap());
    }
}

#[test]
fn rational_curve_as_plane_curve() {
    // f(x)·y = 1 is the punctured line embedded in the plane.
    let mut rng = rng(12);
    let c = Curve::plane(p("(x^2 - 1)*y - 1")).unwrap();
    for _ in 0..30 {
        let target = c.elem(&random_poly(&mut rng, 2, 4)).unwrap();
        let d = two_bracket_plane(&c, &target).unwrap();
        assert!(d.len() <= 2);
        assert!(verify(&d, &target).unwrap());
    }
}

#[test]
fn hyperelliptic_targets_grlex() {
    let mut rng = rng(13);
    let c = Curve::plane_with(
        p("y^2 - x^5 - x - 1"),
        bracket_width::MonomialOrder::GrLex,
        &mut Default::default(),
    )
    .unwrap();
    for _ in 0..30 {
        let target = c.elem(&random_poly(&mut rng, 2, 5)).unwrap();
        let d = two_bracket_plane(&c, &target).unwrap();
        assert!(d.len() <= 2);
        assert!(verify(&d, &target).unwrap());
    }
}

#[test]
fn embedded_plane_curve_in_space() {
    let mut rng = rng(14);
    let f = p("y^2 - x^3 + x - 1");
    let tau = [f.derivative(Var::Y), -f.derivative(Var::X), Poly::zero()];
    let c = Curve::space(&[f.clone(), p("z")], tau).unwrap();
    for _ in 0..30 {
        let target = c.elem(&random_poly(&mut rng, 3, 4)).unwrap();
        let d = three_bracket_space(&c, &target).unwrap();
        assert!(d.len() <= 3);
        assert!(verify(&d, &target).unwrap());
    }
}

#[test]
fn space_curve_with_nontrivial_third_component() {
    // Rational normal curve t ↦ (t, t², t³) again, but with z eliminated last
    // so the decomposition actually uses the z slot for some targets.
    let gens = [p("y - x^2"), p("z - x*y")];
    let c = Curve::space(&gens, [p("1"), p("2x"), p("3x^2")]).unwrap();
    let mut rng = rng(15);
    for _ in 0..30 {
        let target = c.elem(&random_poly(&mut rng, 3, 3)).unwrap();
        let d = three_bracket_space(&c, &target).unwrap();
        assert!(d.len() <= 3);
        assert!(verify(&d, &target).unwrap());
    }
}

#[test]
fn line_random_targets() {
    let mut rng = rng(16);
    let line = Curve::line();
    for _ in 0..50 {
        let h = random_poly(&mut rng, 1, 10);
        let target = line.elem(&h).unwrap();
        let d = single_bracket_line(&line, &target).unwrap();
        assert_eq!(d.len(), usize::from(!h.is_zero()));
        assert!(verify(&d, &target).unwrap());
    }
}

#[test]
fn rational_decompose_nonsquarefree_f() {
    let c = Curve::line_minus(p("x^2*(x - 1)")).unwrap();
    let loc = c.localization().unwrap();
    assert!(!loc.is_squarefree());
    let mut rng = rng(17);
    for _ in 0..30 {
        let m = rng.random_range(0..=5);
        let target = loc.elem(random_poly(&mut rng, 1, 5), m);
        let d = rational_decompose(&c, &target).unwrap();
        assert!(d.len() <= 1);
        assert!(verify(&d, &Coeff::Local(target)).unwrap());
    }
}

#[test]
fn printed_coefficients_reparse() {
    let c = Curve::line_minus(p("x^3 - x")).unwrap();
    let loc = c.localization().unwrap();
    let target = loc.elem(p("x^4 - 2/3*x + 5"), 5);
    let d = rational_decompose(&c, &target).unwrap();
    for (a, b) in d.pairs() {
        for v in [a, b] {
            let text = c.display_coeff(v.coeff()).to_string();
            let (num, den) = bracket_width::poly::parse_fraction(&text).unwrap();
            let back = loc.from_fraction(&num, &den).unwrap();
            assert_eq!(VField::new(&c, &Coeff::Local(back)).unwrap(), *v, "{text}");
        }
    }
}
