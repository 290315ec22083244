//! Exact bracket decompositions of vector fields on smooth affine curves.
//!
//! On a smooth affine curve `C` with trivial tangent sheaf every vector field
//! is `a·τ` for a fixed nowhere-vanishing field `τ` and a regular function
//! `a`. This crate writes any such field as an explicit sum of Lie brackets
//! `Σ [aᵢτ, bᵢτ]` and checks the result by recombination:
//!
//! * plane curves `F(x, y) = 0`: at most two brackets ([`decompose::two_bracket_plane`]);
//! * curves in `𝔸³` with a supplied `τ`: at most three ([`decompose::three_bracket_space`]);
//! * the affine line and its principal open subsets: one bracket
//!   ([`decompose::single_bracket_line`], [`decompose::rational_decompose`]).
//!
//! All arithmetic is exact over ℚ. Ideal computations go through a
//! cofactor-tracking Buchberger implementation ([`groebner`]), so every
//! membership claim comes with an explicit certificate.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod curve;
pub mod decompose;
mod error;
pub mod groebner;
pub mod liealg;
pub mod poly;

pub use crate::curve::{Coeff, Curve, Localization, LocalizedElem, RingElem};
pub use crate::decompose::{
    from_cofactors, localize_decomp, rational_decompose, rational_decompose_traced,
    single_bracket_line, solve_rgh, three_bracket_space, three_bracket_space_traced,
    two_bracket_plane, two_bracket_plane_traced, verify, Trace,
};
pub use crate::error::{Error, Result};
pub use crate::groebner::{buchberger, is_smooth_plane, membership_certificate, preserves_ideal};
pub use crate::groebner::{Budget, GroebnerBasis, MembershipCertificate, DEFAULT_MAX_STEPS};
pub use crate::liealg::{apply_tau, bracket, recombine, BracketDecomp, VField};
pub use crate::poly::{Mono, MonomialOrder, Poly, Rat, Var};
