//! The Lie algebra `Vec(C) = 𝒪(C)·τ`.
//!
//! For fields `aτ` and `bτ` the bracket is `[aτ, bτ] = (a·τ(b) − b·τ(a))·τ`.
//! [`recombine`] evaluates a sum of brackets and is what every
//! decomposition is checked against.

use alloc::vec::Vec;
use core::fmt;

use crate::curve::{Coeff, Curve};
use crate::poly::{Poly, Rat};
use crate::{Error, Result};

/// The vector field `coeff·τ` on `curve`.
#[derive(Debug, Clone)]
pub struct VField<'c> {
    curve: &'c Curve,
    coeff: Coeff,
}

fn same_curve(a: &Curve, b: &Curve) -> bool {
    core::ptr::eq(a, b) || a == b
}

impl<'c> VField<'c> {
    /// Canonicalizes `coeff` for `curve`.
    pub fn new(curve: &'c Curve, coeff: &Coeff) -> Result<Self> {
        Ok(VField {
            curve,
            coeff: curve.canonical(coeff)?,
        })
    }

    pub fn from_poly(curve: &'c Curve, p: &Poly) -> Result<Self> {
        Ok(VField {
            curve,
            coeff: curve.elem(p)?,
        })
    }

    /// `τ` itself.
    pub fn tau(curve: &'c Curve) -> Self {
        VField {
            curve,
            coeff: curve.one(),
        }
    }

    pub fn zero(curve: &'c Curve) -> Self {
        VField {
            curve,
            coeff: curve.zero(),
        }
    }

    pub(crate) fn from_canonical(curve: &'c Curve, coeff: Coeff) -> Self {
        VField { curve, coeff }
    }

    pub fn curve(&self) -> &'c Curve {
        self.curve
    }

    pub fn coeff(&self) -> &Coeff {
        &self.coeff
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    fn check(&self, other: &VField<'_>) -> Result<()> {
        if same_curve(self.curve, other.curve) {
            Ok(())
        } else {
            Err(Error::CurveMismatch)
        }
    }

    pub fn add(&self, other: &VField<'_>) -> Result<VField<'c>> {
        self.check(other)?;
        Ok(VField {
            curve: self.curve,
            coeff: self.curve.add(&self.coeff, &other.coeff),
        })
    }

    pub fn sub(&self, other: &VField<'_>) -> Result<VField<'c>> {
        self.check(other)?;
        Ok(VField {
            curve: self.curve,
            coeff: self.curve.sub(&self.coeff, &other.coeff),
        })
    }

    pub fn scale(&self, c: &Rat) -> VField<'c> {
        VField {
            curve: self.curve,
            coeff: self.curve.scale(&self.coeff, c),
        }
    }

    /// Field equality is coefficient equality on the same curve.
    pub fn same_as(&self, other: &VField<'_>) -> bool {
        same_curve(self.curve, other.curve) && self.coeff == other.coeff
    }
}

impl PartialEq for VField<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl fmt::Display for VField<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})·τ", self.curve.display_coeff(&self.coeff))
    }
}

/// `τ(b)` for a coefficient `b` on `curve`.
pub fn apply_tau(curve: &Curve, b: &Coeff) -> Coeff {
    curve.apply_tau(b)
}

/// `[aτ, bτ] = (a·τ(b) − b·τ(a))·τ`.
pub fn bracket<'c>(u: &VField<'c>, v: &VField<'_>) -> Result<VField<'c>> {
    u.check(v)?;
    let c = u.curve;
    let (a, b) = (&u.coeff, &v.coeff);
    let coeff = c.sub(&c.mul(a, &c.apply_tau(b)), &c.mul(b, &c.apply_tau(a)));
    Ok(VField { curve: c, coeff })
}

/// An ordered list of pairs `(aᵢτ, bᵢτ)` standing for `Σ [aᵢτ, bᵢτ]`.
#[derive(Debug, Clone)]
pub struct BracketDecomp<'c> {
    curve: &'c Curve,
    pairs: Vec<(VField<'c>, VField<'c>)>,
}

impl<'c> BracketDecomp<'c> {
    pub fn new(curve: &'c Curve) -> Self {
        BracketDecomp {
            curve,
            pairs: Vec::new(),
        }
    }

    pub fn curve(&self) -> &'c Curve {
        self.curve
    }

    pub fn push(&mut self, a: VField<'c>, b: VField<'c>) -> Result<()> {
        if !same_curve(self.curve, a.curve) || !same_curve(self.curve, b.curve) {
            return Err(Error::CurveMismatch);
        }
        self.pairs.push((a, b));
        Ok(())
    }

    pub fn pairs(&self) -> &[(VField<'c>, VField<'c>)] {
        &self.pairs
    }

    /// Number of brackets.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Evaluates `Σ [aᵢτ, bᵢτ]`.
pub fn recombine<'c>(d: &BracketDecomp<'c>) -> Result<VField<'c>> {
    let mut acc = VField::zero(d.curve);
    for (a, b) in &d.pairs {
        acc = acc.add(&bracket(a, b)?)?;
    }
    Ok(acc)
}
