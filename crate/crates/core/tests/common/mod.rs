#![allow(dead_code)]

use bracket_width::poly::parse_poly;
use bracket_width::{Mono, Poly, Rat};
use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn p(s: &str) -> Poly {
    parse_poly(s).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn coeff(rng: &mut ChaCha8Rng) -> Rat {
    Rat::from_integer(BigInt::from(rng.random_range(-9i64..=9)))
}

/// Random polynomial with each monomial of total degree <= `deg` in the
/// given variables present with probability 1/2, coefficients in [-9, 9].
pub fn random_poly(rng: &mut ChaCha8Rng, vars: usize, deg: u32) -> Poly {
    let mut terms = Vec::new();
    for ex in 0..=deg {
        for ey in 0..=(if vars > 1 { deg - ex } else { 0 }) {
            for ez in 0..=(if vars > 2 { deg - ex - ey } else { 0 }) {
                if rng.random_bool(0.5) {
                    terms.push((Mono::new(ex, ey, ez), coeff(rng)));
                }
            }
        }
    }
    Poly::from_terms(terms)
}

/// Random nonzero polynomial.
pub fn random_nonzero(rng: &mut ChaCha8Rng, vars: usize, deg: u32) -> Poly {
    loop {
        let q = random_poly(rng, vars, deg);
        if !q.is_zero() {
            return q;
        }
    }
}
