//! Constructive bracket decompositions.
//!
//! On an embedded curve with lifted field `τ̃ = (P, Q, R)`,
//!
//! ```text
//! [τ̃, fτ̃] + [yτ̃, gτ̃] + [zτ̃, hτ̃] = (P·r_x + Q·(r_y − 2g) + R·(r_z − 2h))·τ̃,   r = f + y·g + z·h.
//! ```
//!
//! So once a target is written as `P·F + Q·G + R·H` modulo the curve ideal,
//! taking `r = ∫F dx`, `g = (r_y − G)/2`, `h = (r_z − H)/2` and
//! `f = r − y·g − z·h` produces at most three brackets (two on a plane
//! curve, where `R = 0` and `z` does not occur).

use alloc::vec::Vec;

use num_rational::BigRational;

use crate::curve::{Coeff, Curve, LocalizedElem, AFFINE_LINE};
use crate::liealg::{bracket, BracketDecomp, VField};
use crate::poly::{Poly, Rat, Var};
use crate::{Error, Result};

/// Intermediate values of a decomposition, for reporting.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Trace {
    /// Named polynomials in the order they were produced.
    pub steps: Vec<(&'static str, Poly)>,
    /// Localization exponent `k`, when one was used.
    pub k: Option<u32>,
}

impl Trace {
    fn push(&mut self, name: &'static str, p: &Poly) {
        self.steps.push((name, p.clone()));
    }

    pub fn get(&self, name: &str) -> Option<&Poly> {
        self.steps.iter().find(|(n, _)| *n == name).map(|(_, p)| p)
    }
}

fn half() -> Rat {
    BigRational::new(1.into(), 2.into())
}

/// Finds `(r, g, h)` with `F = r_x`, `G = r_y − 2g`, `H = r_z − 2h`.
pub fn solve_rgh(f: &Poly, g: &Poly, h: &Poly) -> (Poly, Poly, Poly) {
    let r = f.antiderivative(Var::X);
    let g2 = (&r.derivative(Var::Y) - g).scale(&half());
    let h2 = (&r.derivative(Var::Z) - h).scale(&half());
    (r, g2, h2)
}

/// Appends `[aτ, bτ]` unless that bracket is zero.
fn push_nonzero<'c>(d: &mut BracketDecomp<'c>, curve: &'c Curve, a: &Poly, b: &Poly) -> Result<()> {
    let u = VField::from_canonical(curve, curve.coeff_of(a));
    let v = VField::from_canonical(curve, curve.coeff_of(b));
    if !bracket(&u, &v)?.is_zero() {
        d.push(u, v)?;
    }
    Ok(())
}

fn require_lift(curve: &Curve, h: &Coeff) -> Result<Poly> {
    let c = curve.canonical(h)?;
    curve.lift(&c).ok_or(Error::WrongCurveKind {
        expected: "non-localized",
    })
}

/// `h·τ = [−H·τ, τ]` on `𝔸¹` with `H = ∫h dx`.
pub fn single_bracket_line<'c>(curve: &'c Curve, h: &Coeff) -> Result<BracketDecomp<'c>> {
    if !matches!(curve, Curve::AffineLine) {
        return Err(Error::WrongCurveKind {
            expected: "affine line",
        });
    }
    let h = require_lift(curve, h)?;
    let mut d = BracketDecomp::new(curve);
    if h.is_zero() {
        return Ok(d);
    }
    let anti = -h.antiderivative(Var::X);
    d.push(
        VField::from_canonical(curve, curve.coeff_of(&anti)),
        VField::tau(curve),
    )?;
    Ok(d)
}

/// Shared body of the plane and space constructions.
fn embedded_decompose<'c>(
    curve: &'c Curve,
    h: &Coeff,
    trace: &mut Trace,
) -> Result<BracketDecomp<'c>> {
    let model = curve.model().ok_or(Error::WrongCurveKind {
        expected: "plane or space",
    })?;
    let target = require_lift(curve, h)?;
    if target.is_zero() {
        return Ok(BracketDecomp::new(curve));
    }

    let cert = model
        .tau_ideal()
        .certify(&target)
        .ok_or(Error::CertificateFailure)?;
    decompose_cofactors(curve, &cert.cofactors()[..model.tau_slots()], trace)
}

/// Brackets realizing `P·F + Q·G (+ R·H)` from the cofactors `[F, G(, H)]`.
///
/// Any cofactors work, including ones shifted by a syzygy of `(P, Q, R)`;
/// only the sum of the brackets is determined by the target.
pub fn from_cofactors<'c>(curve: &'c Curve, cofactors: &[Poly]) -> Result<BracketDecomp<'c>> {
    decompose_cofactors(curve, cofactors, &mut Trace::default())
}

fn decompose_cofactors<'c>(
    curve: &'c Curve,
    cofactors: &[Poly],
    trace: &mut Trace,
) -> Result<BracketDecomp<'c>> {
    let model = curve.model().ok_or(Error::WrongCurveKind {
        expected: "plane or space",
    })?;
    let slots = model.tau_slots();
    if cofactors.len() != slots {
        return Err(Error::CertificateFailure);
    }
    // Cofactors only matter modulo I: P·(F + i) ≡ P·F.
    let mut cof: Vec<Poly> = cofactors
        .iter()
        .map(|c| model.ideal().normal_form(c))
        .collect();
    cof.resize(3, Poly::zero());
    for (name, c) in ["F", "G", "H"].iter().zip(&cof).take(slots) {
        trace.push(name, c);
    }

    let (r, g, h2) = solve_rgh(&cof[0], &cof[1], &cof[2]);
    let f = &(&r - &(&Poly::y() * &g)) - &(&Poly::z() * &h2);
    trace.push("r", &r);
    trace.push("f", &f);
    trace.push("g", &g);
    if slots == 3 {
        trace.push("h", &h2);
    }

    let mut d = BracketDecomp::new(curve);
    push_nonzero(&mut d, curve, &Poly::one(), &f)?;
    push_nonzero(&mut d, curve, &Poly::y(), &g)?;
    if slots == 3 {
        push_nonzero(&mut d, curve, &Poly::z(), &h2)?;
    }
    Ok(d)
}

/// At most two brackets `[τ, fτ] + [yτ, gτ]` on a smooth plane curve.
pub fn two_bracket_plane<'c>(curve: &'c Curve, h: &Coeff) -> Result<BracketDecomp<'c>> {
    two_bracket_plane_traced(curve, h).map(|(d, _)| d)
}

pub fn two_bracket_plane_traced<'c>(
    curve: &'c Curve,
    h: &Coeff,
) -> Result<(BracketDecomp<'c>, Trace)> {
    if !matches!(curve, Curve::Plane { .. }) {
        return Err(Error::WrongCurveKind { expected: "plane" });
    }
    let mut trace = Trace::default();
    let d = embedded_decompose(curve, h, &mut trace)?;
    debug_assert!(d.len() <= 2);
    Ok((d, trace))
}

/// At most three brackets `[τ, fτ] + [yτ, gτ] + [zτ, hτ]` on a space curve.
pub fn three_bracket_space<'c>(curve: &'c Curve, h: &Coeff) -> Result<BracketDecomp<'c>> {
    three_bracket_space_traced(curve, h).map(|(d, _)| d)
}

pub fn three_bracket_space_traced<'c>(
    curve: &'c Curve,
    h: &Coeff,
) -> Result<(BracketDecomp<'c>, Trace)> {
    if !matches!(curve, Curve::Space(_)) {
        return Err(Error::WrongCurveKind { expected: "space" });
    }
    let mut trace = Trace::default();
    let d = embedded_decompose(curve, h, &mut trace)?;
    debug_assert!(d.len() <= 3);
    Ok((d, trace))
}

/// Moves a decomposition of `g·τ` on `𝔸¹` to `𝔸¹ ∖ V(f)` by dividing every
/// coefficient by `f^k`; the result sums to `(g / f^(2k))·τ` with the same
/// number of brackets, since `[aτ/f^k, bτ/f^k] = [aτ, bτ]/f^(2k)`.
pub fn localize_decomp<'c>(
    d: &BracketDecomp<'_>,
    target: &'c Curve,
    k: u32,
) -> Result<BracketDecomp<'c>> {
    if !matches!(d.curve(), Curve::AffineLine) {
        return Err(Error::WrongCurveKind {
            expected: "affine line",
        });
    }
    let loc = target.localization().ok_or(Error::WrongCurveKind {
        expected: "localized line",
    })?;
    let divide = |v: &VField<'_>| {
        let p = d
            .curve()
            .lift(v.coeff())
            .expect("line coefficients are polynomials");
        VField::from_canonical(target, Coeff::Local(loc.elem(p, k)))
    };
    let mut out = BracketDecomp::new(target);
    for (a, b) in d.pairs() {
        out.push(divide(a), divide(b))?;
    }
    Ok(out)
}

/// One bracket for any field on `𝔸¹ ∖ V(f)`.
pub fn rational_decompose<'c>(
    curve: &'c Curve,
    target: &LocalizedElem,
) -> Result<BracketDecomp<'c>> {
    rational_decompose_traced(curve, target).map(|(d, _)| d)
}

pub fn rational_decompose_traced<'c>(
    curve: &'c Curve,
    target: &LocalizedElem,
) -> Result<(BracketDecomp<'c>, Trace)> {
    let loc = curve.localization().ok_or(Error::WrongCurveKind {
        expected: "localized line",
    })?;
    let target = loc.elem(target.numerator().clone(), target.exponent());
    let mut trace = Trace::default();
    if target.is_zero() {
        return Ok((BracketDecomp::new(curve), trace));
    }
    // target = g / f^(2k) with the least k such that 2k >= m.
    let m = target.exponent();
    let k = m.div_ceil(2);
    let g = loc.numerator_over(&target, 2 * k);
    trace.push("g", &g);
    trace.k = Some(k);

    let line = single_bracket_line(&AFFINE_LINE, &Coeff::Ring(AFFINE_LINE.reduce(&g)))?;
    if let Some((a, _)) = line.pairs().first() {
        if let Some(p) = AFFINE_LINE.lift(a.coeff()) {
            trace.push("a", &p);
        }
    }
    let d = localize_decomp(&line, curve, k)?;
    debug_assert!(d.len() <= 1);
    Ok((d, trace))
}

/// True when `d` sums to `target·τ`.
pub fn verify(d: &BracketDecomp<'_>, target: &Coeff) -> Result<bool> {
    let want = VField::new(d.curve(), target)?;
    Ok(crate::liealg::recombine(d)?.same_as(&want))
}
