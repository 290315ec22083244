//! Curve models and their coordinate rings.
//!
//! A [`Curve`] fixes the ring of regular functions (as normal forms modulo a
//! Gröbner basis, or as fractions `p/f^m` on a punctured line) together with
//! a lift `τ̃ = P ∂x + Q ∂y + R ∂z` of the trivializing field `τ`.

use alloc::vec::Vec;
use core::fmt;

use crate::groebner::{
    apply_derivation, buchberger_with_budget, is_smooth_plane_with, preserves_ideal_gb, Budget,
    GroebnerBasis, MembershipCertificate,
};
use crate::poly::{divide_multivariate, MonomialOrder, Poly, Rat, Var};
use crate::{Error, Result};

/// A regular function stored as its normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElem(Poly);

impl RingElem {
    pub fn repr(&self) -> &Poly {
        &self.0
    }

    pub fn into_poly(self) -> Poly {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `numerator / f^exponent` for the `f` of the surrounding [`Localization`].
///
/// Normalized means `exponent == 0` or `f` does not divide `numerator`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LocalizedElem {
    numerator: Poly,
    exponent: u32,
}

impl LocalizedElem {
    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

/// The ring `ℚ[x][1/f]` of the punctured line `𝔸¹ ∖ V(f)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Localization {
    f: Poly,
    df: Poly,
}

impl Localization {
    pub fn new(f: Poly) -> Result<Self> {
        if f.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        if !f.only_uses(&[Var::X]) {
            return Err(Error::BadVariables { allowed: "{x}" });
        }
        let df = f.derivative(Var::X);
        Ok(Localization { f, df })
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    /// `gcd(f, f') = 1`. A non-squarefree `f` still defines the same ring as
    /// its radical, so this is informational only.
    pub fn is_squarefree(&self) -> bool {
        buchberger_with_budget(
            &[self.f.clone(), self.df.clone()],
            MonomialOrder::Lex,
            &mut Budget::unlimited(),
        )
        .map(|gb| gb.is_unit())
        .unwrap_or(false)
    }

    fn divide_by_f(&self, p: &Poly) -> Option<Poly> {
        let (q, r) = divide_multivariate(p, core::slice::from_ref(&self.f), MonomialOrder::Lex)
            .expect("f is nonzero");
        r.is_zero()
            .then(|| q.into_iter().next().expect("one divisor"))
    }

    /// Builds `numerator / f^exponent` in normalized form.
    pub fn elem(&self, numerator: Poly, exponent: u32) -> LocalizedElem {
        let mut num = numerator;
        let mut m = exponent;
        if num.is_zero() {
            m = 0;
        }
        while m > 0 {
            match self.divide_by_f(&num) {
                Some(q) => {
                    num = q;
                    m -= 1;
                }
                None => break,
            }
        }
        LocalizedElem {
            numerator: num,
            exponent: m,
        }
    }

    pub fn from_poly(&self, p: Poly) -> LocalizedElem {
        self.elem(p, 0)
    }

    /// Interprets the quotient `num / den`; `den` must be a nonzero constant
    /// multiple of a power of `f`.
    pub fn from_fraction(&self, num: &Poly, den: &Poly) -> Result<LocalizedElem> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let mut rest = den.clone();
        let mut m = 0;
        while !rest.is_constant() {
            rest = self.divide_by_f(&rest).ok_or(Error::NotInLocalization)?;
            m += 1;
        }
        let c = rest.constant_term();
        Ok(self.elem(num.scale(&c.recip()), m))
    }

    /// `numerator · f^(target - exponent)` for `target >= exponent`.
    pub fn numerator_over(&self, a: &LocalizedElem, target: u32) -> Poly {
        debug_assert!(target >= a.exponent);
        &a.numerator * &self.f.pow(target - a.exponent)
    }

    pub fn add(&self, a: &LocalizedElem, b: &LocalizedElem) -> LocalizedElem {
        let m = a.exponent.max(b.exponent);
        self.elem(&self.numerator_over(a, m) + &self.numerator_over(b, m), m)
    }

    pub fn sub(&self, a: &LocalizedElem, b: &LocalizedElem) -> LocalizedElem {
        let m = a.exponent.max(b.exponent);
        self.elem(&self.numerator_over(a, m) - &self.numerator_over(b, m), m)
    }

    pub fn mul(&self, a: &LocalizedElem, b: &LocalizedElem) -> LocalizedElem {
        self.elem(&a.numerator * &b.numerator, a.exponent + b.exponent)
    }

    pub fn scale(&self, a: &LocalizedElem, c: &Rat) -> LocalizedElem {
        self.elem(a.numerator.scale(c), a.exponent)
    }

    /// `d/dx (p / f^m) = (p' f - m p f') / f^(m+1)`.
    pub fn derivative(&self, a: &LocalizedElem) -> LocalizedElem {
        let dp = a.numerator.derivative(Var::X);
        if a.exponent == 0 {
            return self.elem(dp, 0);
        }
        let m = Rat::from_integer(a.exponent.into());
        let num = &(&dp * &self.f) - &(&a.numerator * &self.df).scale(&m);
        self.elem(num, a.exponent + 1)
    }

    /// Prints `p`, `(p)/(f)` or `(p)/(f)^m`; the text parses back with
    /// [`crate::poly::parse_fraction`] and [`Localization::from_fraction`].
    pub fn display<'a>(&'a self, a: &'a LocalizedElem) -> impl fmt::Display + 'a {
        DisplayLocal { loc: self, elem: a }
    }
}

struct DisplayLocal<'a> {
    loc: &'a Localization,
    elem: &'a LocalizedElem,
}

impl fmt::Display for DisplayLocal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.elem.exponent {
            0 => write!(f, "{}", self.elem.numerator),
            1 => write!(f, "({})/({})", self.elem.numerator, self.loc.f),
            m => write!(f, "({})/({})^{}", self.elem.numerator, self.loc.f, m),
        }
    }
}

/// Coefficient `a` of a vector field `a·τ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Ring(RingElem),
    Local(LocalizedElem),
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Ring(r) => r.is_zero(),
            Coeff::Local(l) => l.is_zero(),
        }
    }

    pub fn as_ring(&self) -> Option<&RingElem> {
        match self {
            Coeff::Ring(r) => Some(r),
            Coeff::Local(_) => None,
        }
    }

    pub fn as_local(&self) -> Option<&LocalizedElem> {
        match self {
            Coeff::Local(l) => Some(l),
            Coeff::Ring(_) => None,
        }
    }
}

/// A curve given by an ideal `I ⊂ ℚ[x, y, z]` and a lifted field `τ̃` that
/// preserves `I`, together with the certificate `1 ∈ (P, Q, R) + I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedded {
    ideal: GroebnerBasis,
    tau: [Poly; 3],
    tau_slots: usize,
    tau_ideal: GroebnerBasis,
    unit_cert: MembershipCertificate,
}

impl Embedded {
    fn build(
        generators: &[Poly],
        tau: [Poly; 3],
        tau_slots: usize,
        order: MonomialOrder,
        budget: &mut Budget,
    ) -> Result<Self> {
        let ideal = buchberger_with_budget(generators, order, budget)?;
        if !preserves_ideal_gb(&tau, &ideal) {
            return Err(Error::DoesNotPreserveIdeal);
        }
        if tau.iter().all(|c| ideal.contains(c)) {
            return Err(Error::ZeroTau);
        }
        let mut tau_gens: Vec<Poly> = tau[..tau_slots].to_vec();
        tau_gens.extend(generators.iter().cloned());
        let tau_ideal = buchberger_with_budget(&tau_gens, order, budget)?;
        let unit_cert = tau_ideal
            .try_certify(&Poly::one(), budget)?
            .ok_or(Error::UnitCertificateAbsent)?;
        Ok(Embedded {
            ideal,
            tau,
            tau_slots,
            tau_ideal,
            unit_cert,
        })
    }

    pub fn generators(&self) -> &[Poly] {
        self.ideal.generators()
    }

    pub fn ideal(&self) -> &GroebnerBasis {
        &self.ideal
    }

    pub fn tau(&self) -> &[Poly; 3] {
        &self.tau
    }

    /// Number of leading generators of [`Embedded::tau_ideal`] that are
    /// components of `τ̃`: 2 for plane curves, 3 for space curves.
    pub fn tau_slots(&self) -> usize {
        self.tau_slots
    }

    /// Gröbner basis of `(P, Q[, R]) + I`, generators listed in that order.
    pub fn tau_ideal(&self) -> &GroebnerBasis {
        &self.tau_ideal
    }

    pub fn unit_cert(&self) -> &MembershipCertificate {
        &self.unit_cert
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Curve {
    /// `𝔸¹` with `τ = d/dx`.
    AffineLine,
    /// `𝔸¹ ∖ V(f)` with `τ = d/dx`.
    LocalizedLine(Localization),
    /// `F(x, y) = 0` with the Hamiltonian field `τ̃ = (F_y, -F_x)`.
    Plane {
        equation: Poly,
        smooth_cert: MembershipCertificate,
        model: Embedded,
    },
    /// A curve in `𝔸³` with a user-supplied `τ̃`.
    Space(Embedded),
}

/// Shared instance of the affine line.
pub static AFFINE_LINE: Curve = Curve::AffineLine;

impl Curve {
    pub fn line() -> Curve {
        Curve::AffineLine
    }

    pub fn line_minus(f: Poly) -> Result<Curve> {
        Ok(Curve::LocalizedLine(Localization::new(f)?))
    }

    pub fn plane(equation: Poly) -> Result<Curve> {
        Curve::plane_with(equation, MonomialOrder::Lex, &mut Budget::default())
    }

    pub fn plane_with(equation: Poly, order: MonomialOrder, budget: &mut Budget) -> Result<Curve> {
        let smooth_cert =
            is_smooth_plane_with(&equation, order, budget)?.ok_or(Error::NotSmooth)?;
        let tau = [
            equation.derivative(Var::Y),
            -equation.derivative(Var::X),
            Poly::zero(),
        ];
        let model = Embedded::build(core::slice::from_ref(&equation), tau, 2, order, budget)?;
        Ok(Curve::Plane {
            equation,
            smooth_cert,
            model,
        })
    }

    pub fn space(generators: &[Poly], tau: [Poly; 3]) -> Result<Curve> {
        Curve::space_with(generators, tau, MonomialOrder::Lex, &mut Budget::default())
    }

    pub fn space_with(
        generators: &[Poly],
        tau: [Poly; 3],
        order: MonomialOrder,
        budget: &mut Budget,
    ) -> Result<Curve> {
        if tau.iter().all(Poly::is_zero) {
            return Err(Error::ZeroTau);
        }
        if generators.is_empty() {
            return Err(Error::ConstantPolynomial);
        }
        Ok(Curve::Space(Embedded::build(
            generators, tau, 3, order, budget,
        )?))
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Curve::AffineLine => "line",
            Curve::LocalizedLine(_) => "localized line",
            Curve::Plane { .. } => "plane",
            Curve::Space(_) => "space",
        }
    }

    pub fn model(&self) -> Option<&Embedded> {
        match self {
            Curve::Plane { model, .. } | Curve::Space(model) => Some(model),
            _ => None,
        }
    }

    pub fn localization(&self) -> Option<&Localization> {
        match self {
            Curve::LocalizedLine(loc) => Some(loc),
            _ => None,
        }
    }

    /// Lifted components `(P, Q, R)` of `τ`.
    pub fn tau_lift(&self) -> [Poly; 3] {
        match self.model() {
            Some(m) => m.tau.clone(),
            None => [Poly::one(), Poly::zero(), Poly::zero()],
        }
    }

    /// Variables a representative may use.
    pub fn variables(&self) -> &'static [Var] {
        match self {
            Curve::AffineLine | Curve::LocalizedLine(_) => &[Var::X],
            Curve::Plane { .. } => &[Var::X, Var::Y],
            Curve::Space(_) => &Var::ALL,
        }
    }

    /// Canonical representative of `p` in the coordinate ring.
    ///
    /// On the line curves this is the identity.
    pub fn reduce(&self, p: &Poly) -> RingElem {
        match self.model() {
            Some(m) => RingElem(m.ideal.normal_form(p)),
            None => RingElem(p.clone()),
        }
    }

    /// The coefficient `p` as an element of this curve's ring, checking the
    /// variables used.
    pub fn elem(&self, p: &Poly) -> Result<Coeff> {
        if !p.only_uses(self.variables()) {
            return Err(Error::BadVariables {
                allowed: match self.variables().len() {
                    1 => "{x}",
                    2 => "{x, y}",
                    _ => "{x, y, z}",
                },
            });
        }
        Ok(self.coeff_of(p))
    }

    pub(crate) fn coeff_of(&self, p: &Poly) -> Coeff {
        match self {
            Curve::LocalizedLine(loc) => Coeff::Local(loc.from_poly(p.clone())),
            _ => Coeff::Ring(self.reduce(p)),
        }
    }

    /// Puts `c` in canonical form for this curve, rejecting fractions on
    /// curves without a localization.
    pub fn canonical(&self, c: &Coeff) -> Result<Coeff> {
        match (self, c) {
            (Curve::LocalizedLine(loc), Coeff::Local(l)) => {
                Ok(Coeff::Local(loc.elem(l.numerator.clone(), l.exponent)))
            }
            (Curve::LocalizedLine(_), Coeff::Ring(r)) => self.elem(r.repr()),
            (_, Coeff::Ring(r)) => self.elem(r.repr()),
            (_, Coeff::Local(l)) if l.exponent == 0 => self.elem(&l.numerator),
            (_, Coeff::Local(_)) => Err(Error::WrongCurveKind {
                expected: "localized line",
            }),
        }
    }

    pub fn zero(&self) -> Coeff {
        self.coeff_of(&Poly::zero())
    }

    pub fn one(&self) -> Coeff {
        self.coeff_of(&Poly::one())
    }

    fn local(&self, c: &Coeff) -> LocalizedElem {
        match c {
            Coeff::Local(l) => l.clone(),
            Coeff::Ring(r) => LocalizedElem {
                numerator: r.0.clone(),
                exponent: 0,
            },
        }
    }

    fn ring<'a>(&self, c: &'a Coeff) -> &'a Poly {
        match c {
            Coeff::Ring(r) => &r.0,
            Coeff::Local(l) => {
                assert_eq!(l.exponent, 0, "fraction on a curve without localization");
                &l.numerator
            }
        }
    }

    fn lift2(
        &self,
        a: &Coeff,
        b: &Coeff,
        local: impl Fn(&Localization, &LocalizedElem, &LocalizedElem) -> LocalizedElem,
        ring: impl Fn(&Poly, &Poly) -> Poly,
    ) -> Coeff {
        match self {
            Curve::LocalizedLine(loc) => Coeff::Local(local(loc, &self.local(a), &self.local(b))),
            _ => self.coeff_of(&ring(self.ring(a), self.ring(b))),
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.lift2(a, b, Localization::add, |p, q| p + q)
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.lift2(a, b, Localization::sub, |p, q| p - q)
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.lift2(a, b, Localization::mul, |p, q| p * q)
    }

    pub fn scale(&self, a: &Coeff, c: &Rat) -> Coeff {
        match self {
            Curve::LocalizedLine(loc) => Coeff::Local(loc.scale(&self.local(a), c)),
            _ => Coeff::Ring(RingElem(self.ring(a).scale(c))),
        }
    }

    /// `τ(b)`, computed on the polynomial lift of `b` and reduced.
    pub fn apply_tau(&self, b: &Coeff) -> Coeff {
        match self {
            Curve::AffineLine => Coeff::Ring(RingElem(self.ring(b).derivative(Var::X))),
            Curve::LocalizedLine(loc) => Coeff::Local(loc.derivative(&self.local(b))),
            _ => {
                let m = self.model().expect("embedded curve");
                self.coeff_of(&apply_derivation(&m.tau, self.ring(b)))
            }
        }
    }

    /// Lift of a coefficient to a polynomial. `None` for proper fractions.
    pub fn lift(&self, c: &Coeff) -> Option<Poly> {
        match c {
            Coeff::Ring(r) => Some(r.0.clone()),
            Coeff::Local(l) if l.exponent == 0 => Some(l.numerator.clone()),
            Coeff::Local(_) => None,
        }
    }

    pub fn coeff_is_one(&self, c: &Coeff) -> bool {
        self.lift(c).is_some_and(|p| p.is_one())
    }

    pub fn display_coeff<'a>(&'a self, c: &'a Coeff) -> impl fmt::Display + 'a {
        DisplayCoeff {
            curve: self,
            coeff: c,
        }
    }
}

struct DisplayCoeff<'a> {
    curve: &'a Curve,
    coeff: &'a Coeff,
}

impl fmt::Display for DisplayCoeff<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.curve, self.coeff) {
            (Curve::LocalizedLine(loc), Coeff::Local(l)) => loc.display(l).fmt(f),
            (_, Coeff::Ring(r)) => r.fmt(f),
            (_, Coeff::Local(l)) => l.numerator.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, ratio};

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn plane_curve_tau() {
        let c = Curve::plane(p("y^2 - x^3 - x")).unwrap();
        let tau = c.tau_lift();
        assert_eq!(tau[0], p("2y"));
        assert_eq!(tau[1], p("3x^2 + 1"));
        assert!(tau[2].is_zero());
        assert!(c.model().unwrap().unit_cert().verify());
    }

    #[test]
    fn cusp_is_rejected() {
        assert_eq!(Curve::plane(p("y^2 - x^3")), Err(Error::NotSmooth));
        assert!(matches!(
            Curve::plane(p("y - z")),
            Err(Error::BadVariables { .. })
        ));
    }

    #[test]
    fn rational_embedding_is_a_plane_curve() {
        let c = Curve::plane(p("(x^2 - 1)*y - 1")).unwrap();
        assert_eq!(c.kind(), "plane");
    }

    #[test]
    fn space_curves() {
        let gens = [p("y - x^2"), p("z - x^3")];
        let c = Curve::space(&gens, [p("1"), p("2x"), p("3x^2")]).unwrap();
        assert_eq!(c.reduce(&p("y")).repr(), &p("x^2"));
        assert_eq!(c.reduce(&p("y*z")).repr(), &p("x^5"));

        let f = p("y^2 - x^3 - x");
        let tau = [f.derivative(Var::Y), -f.derivative(Var::X), Poly::zero()];
        assert!(Curve::space(&[f.clone(), p("z")], tau).is_ok());

        assert_eq!(
            Curve::space(&gens, [Poly::zero(), Poly::zero(), Poly::zero()]),
            Err(Error::ZeroTau)
        );
        assert_eq!(
            Curve::space(&gens, [p("0"), p("1"), p("0")]),
            Err(Error::DoesNotPreserveIdeal)
        );
        // τ̃ = x·(1, 2x, 3x²) preserves I but vanishes at the origin.
        assert_eq!(
            Curve::space(&gens, [p("x"), p("2x^2"), p("3x^3")]),
            Err(Error::UnitCertificateAbsent)
        );
        // Components all in I: τ is zero on the curve.
        assert_eq!(
            Curve::space(&gens, [p("y - x^2"), p("0"), p("0")]),
            Err(Error::ZeroTau)
        );
    }

    #[test]
    fn reductions() {
        let c = Curve::plane(p("y^2 - x^3 - x")).unwrap();
        assert_eq!(c.reduce(&p("y^2")).repr(), &p("x^3 + x"));
        assert!(c.reduce(&Poly::zero()).is_zero());
        assert_eq!(Curve::line().reduce(&p("x^2")).repr(), &p("x^2"));
    }

    #[test]
    fn tau_annihilates_equation() {
        let c = Curve::plane(p("y^2 - x^5 - x - 1")).unwrap();
        let Curve::Plane { equation, .. } = &c else {
            unreachable!()
        };
        let applied = c.apply_tau(&Coeff::Ring(RingElem(equation.clone())));
        assert!(applied.is_zero());
    }

    #[test]
    fn localized_arithmetic() {
        let loc = Localization::new(p("x")).unwrap();
        let inv = loc.elem(Poly::one(), 1);
        let two = loc.add(&inv, &inv);
        assert_eq!(two, loc.elem(p("2"), 1));
        assert_eq!(loc.elem(p("x"), 1), loc.elem(Poly::one(), 0));
        assert_eq!(loc.elem(p("x^3 + x^2"), 2), loc.elem(p("x + 1"), 0));
        assert_eq!(loc.elem(Poly::zero(), 4).exponent(), 0);
        assert_eq!(loc.derivative(&inv), loc.elem(p("-1"), 2));
        assert_eq!(loc.scale(&inv, &ratio(1, 2)), loc.elem(p("1/2"), 1));
    }

    #[test]
    fn localized_from_fraction() {
        let loc = Localization::new(p("x^2 - 1")).unwrap();
        let e = loc.from_fraction(&p("3"), &p("2*(x^2-1)^2")).unwrap();
        assert_eq!(e, loc.elem(p("3/2"), 2));
        assert_eq!(
            loc.from_fraction(&p("1"), &p("x")),
            Err(Error::NotInLocalization)
        );
        assert!(matches!(
            Localization::new(p("3")),
            Err(Error::ConstantPolynomial)
        ));
        assert!(matches!(
            Localization::new(p("y")),
            Err(Error::BadVariables { .. })
        ));
    }

    #[test]
    fn squarefree_check() {
        assert!(Localization::new(p("x^3 - x")).unwrap().is_squarefree());
        assert!(!Localization::new(p("x^2*(x - 1)")).unwrap().is_squarefree());
    }
}
