//! Sparse multivariate polynomials over ℚ in the variables `x`, `y`, `z`.

mod division;
mod parse;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use self::division::{divide_multivariate, Divisors};
pub use self::parse::{parse_fraction, parse_poly};

/// Exact rational coefficient, always in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X = 0,
    Y = 1,
    Z = 2,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn name(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
            Var::Z => 'z',
        }
    }
}

/// Exponent vector `x^a y^b z^c`.
///
/// The derived `Ord` is not used; [`Mono`]'s ordering is the canonical
/// lexicographic order with `z > y > x`, which is also how [`Poly`] stores
/// its terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Mono {
    exps: [u32; 3],
}

impl Mono {
    pub const ONE: Mono = Mono { exps: [0; 3] };

    pub fn new(ex: u32, ey: u32, ez: u32) -> Self {
        Mono { exps: [ex, ey, ez] }
    }

    pub fn var(v: Var) -> Self {
        let mut m = Mono::ONE;
        m.exps[v as usize] = 1;
        m
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.exps[v as usize]
    }

    pub fn exps(&self) -> [u32; 3] {
        self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps == [0; 3]
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono {
            exps: [
                self.exps[0] + other.exps[0],
                self.exps[1] + other.exps[1],
                self.exps[2] + other.exps[2],
            ],
        }
    }

    pub fn divides(&self, other: &Mono) -> bool {
        (0..3).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Mono) -> Option<Mono> {
        self.divides(other).then(|| Mono {
            exps: [
                other.exps[0] - self.exps[0],
                other.exps[1] - self.exps[1],
                other.exps[2] - self.exps[2],
            ],
        })
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        Mono {
            exps: [
                self.exps[0].max(other.exps[0]),
                self.exps[1].max(other.exps[1]),
                self.exps[2].max(other.exps[2]),
            ],
        }
    }

    pub fn is_coprime(&self, other: &Mono) -> bool {
        (0..3).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps[2]
            .cmp(&other.exps[2])
            .then(self.exps[1].cmp(&other.exps[1]))
            .then(self.exps[0].cmp(&other.exps[0]))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}

/// Term order used for leading terms, division and Gröbner bases.
///
/// Both orders rank `z > y > x`, so `x` is the variable that survives in
/// normal forms and `y`, `z` are the ones eliminated first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    Lex,
    GrLex,
}

impl MonomialOrder {
    /// Sort key; comparing keys as arrays compares monomials in this order.
    pub fn key(self, m: &Mono) -> [u32; 4] {
        let [ex, ey, ez] = m.exps;
        match self {
            MonomialOrder::Lex => [0, ez, ey, ex],
            MonomialOrder::GrLex => [ex + ey + ez, ez, ey, ex],
        }
    }

    pub fn mono_from_key(key: &[u32; 4]) -> Mono {
        Mono::new(key[3], key[2], key[1])
    }

    pub fn cmp(self, a: &Mono, b: &Mono) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::GrLex => "grlex",
        }
    }
}

/// A polynomial in `ℚ[x, y, z]`.
///
/// Terms are kept sorted in ascending canonical (lex, `z > y > x`) order
/// with no zero coefficients, so structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Mono, Rat)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::monomial(Mono::ONE, c)
    }

    pub fn from_i64(c: i64) -> Self {
        Poly::constant(rat(c))
    }

    pub fn var(v: Var) -> Self {
        Poly::monomial(Mono::var(v), Rat::one())
    }

    pub fn x() -> Self {
        Poly::var(Var::X)
    }

    pub fn y() -> Self {
        Poly::var(Var::Y)
    }

    pub fn z() -> Self {
        Poly::var(Var::Z)
    }

    pub fn monomial(m: Mono, c: Rat) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: alloc::vec![(m, c)],
            }
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Mono, Rat)>>(terms: I) -> Self {
        let mut acc: BTreeMap<Mono, Rat> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(Rat::zero) += c;
        }
        Poly::from_map(acc)
    }

    fn from_map(map: BTreeMap<Mono, Rat>) -> Self {
        Poly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> &[(Mono, Rat)] {
        &self.terms
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_term(&self) -> Rat {
        match self.terms.first() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rat::zero(),
        }
    }

    pub fn coeff(&self, m: &Mono) -> Rat {
        self.terms
            .binary_search_by(|(t, _)| t.cmp(m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rat::zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.exp(v)).max()
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) > 0)
    }

    /// True when every variable the polynomial mentions is in `allowed`.
    pub fn only_uses(&self, allowed: &[Var]) -> bool {
        Var::ALL
            .iter()
            .all(|v| allowed.contains(v) || !self.uses(*v))
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Mono, &Rat)> {
        match order {
            MonomialOrder::Lex => self.terms.last().map(|(m, c)| (m, c)),
            _ => self
                .terms
                .iter()
                .max_by(|a, b| order.cmp(&a.0, &b.0))
                .map(|(m, c)| (m, c)),
        }
    }

    pub fn leading_mono(&self, order: MonomialOrder) -> Option<Mono> {
        self.leading_term(order).map(|(m, _)| *m)
    }

    pub fn leading_coeff(&self, order: MonomialOrder) -> Option<Rat> {
        self.leading_term(order).map(|(_, c)| c.clone())
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self, order: MonomialOrder) -> Poly {
        match self.leading_coeff(order) {
            Some(lc) => self.scale(&lc.recip()),
            None => Poly::zero(),
        }
    }

    /// Multiplies by the single term `c·m`.
    pub fn mul_term(&self, m: &Mono, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        // Multiplying by a monomial preserves the term order.
        Poly {
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: Var) -> Poly {
        let i = v as usize;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = m.exps[i];
            if e == 0 {
                continue;
            }
            let mut dm = *m;
            dm.exps[i] = e - 1;
            terms.push((dm, c * Rat::from_integer(BigInt::from(e))));
        }
        // Lowering one exponent keeps lex order among the surviving terms
        // only when v is the last key; re-sort to be safe for y and z.
        if v != Var::X {
            terms.sort_by_key(|t| t.0);
        }
        Poly { terms }
    }

    /// Antiderivative in `v` with integration constant zero: the result has
    /// no `v`-free terms and its `v`-derivative is `self`.
    pub fn antiderivative(&self, v: Var) -> Poly {
        let i = v as usize;
        let mut terms: Vec<(Mono, Rat)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut im = *m;
                im.exps[i] += 1;
                (im, c / Rat::from_integer(BigInt::from(im.exps[i])))
            })
            .collect();
        if v != Var::X {
            terms.sort_by_key(|t| t.0);
        }
        Poly { terms }
    }

    /// Substitutes polynomials for all three variables.
    pub fn compose(&self, xs: &[Poly; 3]) -> Poly {
        let mut acc = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for v in Var::ALL {
                let e = m.exp(v);
                if e > 0 {
                    t = &t * &xs[v as usize].pow(e);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    fn merge(&self, other: &Poly, negate_other: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let fix = |c: &Rat| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, fix(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, fix(c))));
        Poly { terms: out }
    }

    fn product(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut acc: BTreeMap<Mono, Rat> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                acc.entry(ma.mul(mb)).and_modify(|e| *e += &c).or_insert(c);
            }
        }
        Poly::from_map(acc)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        self.product(rhs)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        self.merge(&rhs, false)
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        self.merge(&rhs, true)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        self.product(&rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl From<Rat> for Poly {
    fn from(c: Rat) -> Self {
        Poly::constant(c)
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Self {
        Poly::var(v)
    }
}

impl core::str::FromStr for Poly {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        parse_poly(s)
    }
}

/// Prints highest terms first, e.g. `y^2 - x^3 - 3/2*x + 1`. The output
/// re-parses to the same polynomial.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", abs, m)?;
            }
        }
        Ok(())
    }
}
