//! Buchberger's algorithm with cofactor tracking.
//!
//! Every basis element carries a row of cofactors expressing it in terms of
//! the original generators, so ideal membership comes back as an explicit
//! identity `target = Σ cⱼ·gⱼ` rather than a yes/no answer.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::One;

use crate::poly::{Divisors, Mono, MonomialOrder, Poly, Rat, Var};
use crate::{Error, Result};

/// Default cap on reduction steps for one computation.
pub const DEFAULT_MAX_STEPS: u64 = 1_000_000;

/// Counts reduction steps and fails once a limit is passed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    limit: Option<u64>,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit: Some(limit),
            used: 0,
        }
    }

    pub fn unlimited() -> Self {
        Budget {
            limit: None,
            used: 0,
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        match self.limit {
            Some(limit) if self.used > limit => Err(Error::StepBudgetExceeded { limit }),
            _ => Ok(()),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_MAX_STEPS)
    }
}

/// Explicit witness that `target` lies in the ideal of `generators`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipCertificate {
    target: Poly,
    generators: Vec<Poly>,
    cofactors: Vec<Poly>,
}

impl MembershipCertificate {
    /// Checks `target = Σ cofactors[j]·generators[j]` before accepting.
    pub fn new(target: Poly, generators: Vec<Poly>, cofactors: Vec<Poly>) -> Result<Self> {
        let cert = MembershipCertificate {
            target,
            generators,
            cofactors,
        };
        if cert.verify() {
            Ok(cert)
        } else {
            Err(Error::CertificateFailure)
        }
    }

    pub fn target(&self) -> &Poly {
        &self.target
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn cofactors(&self) -> &[Poly] {
        &self.cofactors
    }

    pub fn recombine(&self) -> Poly {
        combine(&self.cofactors, &self.generators)
    }

    pub fn verify(&self) -> bool {
        self.cofactors.len() == self.generators.len() && self.recombine() == self.target
    }

    /// Certificate for `m·target`, obtained by scaling every cofactor.
    pub fn times(&self, m: &Poly) -> MembershipCertificate {
        MembershipCertificate {
            target: m * &self.target,
            generators: self.generators.clone(),
            cofactors: self.cofactors.iter().map(|c| m * c).collect(),
        }
    }
}

fn combine(coeffs: &[Poly], polys: &[Poly]) -> Poly {
    coeffs
        .iter()
        .zip(polys)
        .fold(Poly::zero(), |acc, (c, g)| &acc + &(c * g))
}

/// Reduced Gröbner basis together with its representation in terms of the
/// input generators: `basis[i] = Σⱼ cofactors[i][j]·generators[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: Vec<Poly>,
    basis: Vec<Poly>,
    cofactors: Vec<Vec<Poly>>,
    order: MonomialOrder,
}

#[derive(Debug, Clone)]
struct Tracked {
    poly: Poly,
    lead: Mono,
    row: Vec<Poly>,
}

fn sub_rows(row: &mut [Poly], quotients: &[Poly], rows: &[&[Poly]]) {
    for (q, r) in quotients.iter().zip(rows) {
        if q.is_zero() {
            continue;
        }
        for (acc, c) in row.iter_mut().zip(r.iter()) {
            if !c.is_zero() {
                *acc = &*acc - &(q * c);
            }
        }
    }
}

fn scale_row(row: &[Poly], c: &Rat) -> Vec<Poly> {
    row.iter().map(|p| p.scale(c)).collect()
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn cofactors(&self) -> &[Vec<Poly>] {
        &self.cofactors
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_one()
    }

    /// True when the ideal is `(0)`.
    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    fn divisors(&self) -> Divisors<'_> {
        Divisors::new(&self.basis, self.order).expect("basis elements are nonzero")
    }

    /// Canonical remainder of `p` modulo the ideal.
    pub fn normal_form(&self, p: &Poly) -> Poly {
        self.try_normal_form(p, &mut Budget::unlimited())
            .expect("an unlimited budget cannot run out")
    }

    pub fn try_normal_form(&self, p: &Poly, budget: &mut Budget) -> Result<Poly> {
        if self.basis.is_empty() {
            return Ok(p.clone());
        }
        let (_, r) = self.divisors().divide(p, false, budget)?;
        Ok(r)
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Membership certificate for `target` against the original generators,
    /// or `None` when `target` is not in the ideal.
    pub fn certify(&self, target: &Poly) -> Option<MembershipCertificate> {
        self.try_certify(target, &mut Budget::unlimited())
            .expect("an unlimited budget cannot run out")
    }

    pub fn try_certify(
        &self,
        target: &Poly,
        budget: &mut Budget,
    ) -> Result<Option<MembershipCertificate>> {
        let n = self.generators.len();
        if target.is_zero() {
            let cert = MembershipCertificate {
                target: Poly::zero(),
                generators: self.generators.clone(),
                cofactors: alloc::vec![Poly::zero(); n],
            };
            return Ok(Some(cert));
        }
        if self.basis.is_empty() {
            return Ok(None);
        }
        let (quotients, rem) = self.divisors().divide(target, true, budget)?;
        if !rem.is_zero() {
            return Ok(None);
        }
        let mut row = alloc::vec![Poly::zero(); n];
        let rows: Vec<&[Poly]> = self.cofactors.iter().map(|r| r.as_slice()).collect();
        // row = -Σ qᵢ·cofactorsᵢ, negated below.
        sub_rows(&mut row, &quotients, &rows);
        let cofactors = row.into_iter().map(|c| -c).collect();
        MembershipCertificate::new(target.clone(), self.generators.clone(), cofactors).map(Some)
    }

    /// S-polynomial of basis elements `i` and `j`.
    pub fn s_polynomial(&self, i: usize, j: usize) -> Poly {
        s_poly(&self.basis[i], &self.basis[j], self.order)
    }

    /// Checks the defining properties: S-pairs reduce to zero, cofactor rows
    /// reproduce the basis, and the basis is reduced and monic.
    pub fn is_valid(&self) -> bool {
        let order = self.order;
        let rows_ok = self
            .basis
            .iter()
            .zip(&self.cofactors)
            .all(|(b, row)| combine(row, &self.generators) == *b);
        let monic = self
            .basis
            .iter()
            .all(|b| b.leading_coeff(order).is_some_and(|c| c.is_one()));
        let leads: Vec<Mono> = self
            .basis
            .iter()
            .filter_map(|b| b.leading_mono(order))
            .collect();
        let reduced = self.basis.iter().enumerate().all(|(i, b)| {
            b.terms().iter().all(|(m, _)| {
                leads
                    .iter()
                    .enumerate()
                    .all(|(j, l)| j == i || !l.divides(m))
            })
        });
        let pairs_ok = (0..self.basis.len())
            .all(|i| (i + 1..self.basis.len()).all(|j| self.contains(&self.s_polynomial(i, j))));
        rows_ok && monic && reduced && pairs_ok && self.generators.iter().all(|g| self.contains(g))
    }
}

fn s_poly(f: &Poly, g: &Poly, order: MonomialOrder) -> Poly {
    let (mf, cf) = f.leading_term(order).expect("nonzero");
    let (mg, cg) = g.leading_term(order).expect("nonzero");
    let l = mf.lcm(mg);
    let a = f.mul_term(&mf.quotient_of(&l).expect("lcm"), &cf.recip());
    let b = g.mul_term(&mg.quotient_of(&l).expect("lcm"), &cg.recip());
    a - b
}

/// Reduced Gröbner basis of `generators` under `order`, with the default
/// step budget.
pub fn buchberger(generators: &[Poly], order: MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with_budget(generators, order, &mut Budget::default())
}

pub fn buchberger_with_budget(
    generators: &[Poly],
    order: MonomialOrder,
    budget: &mut Budget,
) -> Result<GroebnerBasis> {
    let n = generators.len();
    let unit_row = |j: usize, c: &Rat| {
        let mut row = alloc::vec![Poly::zero(); n];
        row[j] = Poly::constant(c.clone());
        row
    };

    let mut work: Vec<Tracked> = Vec::new();
    for (j, g) in generators.iter().enumerate() {
        if let Some((m, c)) = g.leading_term(order) {
            let inv = c.recip();
            work.push(Tracked {
                poly: g.scale(&inv),
                lead: *m,
                row: unit_row(j, &inv),
            });
        }
    }

    let finish = |work: Vec<Tracked>| GroebnerBasis {
        generators: generators.to_vec(),
        basis: work.iter().map(|t| t.poly.clone()).collect(),
        cofactors: work.into_iter().map(|t| t.row).collect(),
        order,
    };

    if let Some(t) = work.iter().find(|t| t.poly.is_one()) {
        return Ok(finish(alloc::vec![t.clone()]));
    }

    // Normal selection: smallest lcm first, ties broken by (j, i).
    let mut pairs: BTreeSet<([u32; 4], usize, usize)> = BTreeSet::new();
    for j in 0..work.len() {
        for i in 0..j {
            pairs.insert((order.key(&work[i].lead.lcm(&work[j].lead)), j, i));
        }
    }

    while let Some((_, j, i)) = pairs.pop_first() {
        if work[i].lead.is_coprime(&work[j].lead) {
            continue;
        }
        let (fi, fj) = (&work[i], &work[j]);
        let l = fi.lead.lcm(&fj.lead);
        let si = fi.lead.quotient_of(&l).expect("lcm");
        let sj = fj.lead.quotient_of(&l).expect("lcm");
        let one = Rat::one();
        let spoly = fi.poly.mul_term(&si, &one) - fj.poly.mul_term(&sj, &one);
        let mut row: Vec<Poly> = fi
            .row
            .iter()
            .zip(&fj.row)
            .map(|(a, b)| a.mul_term(&si, &one) - b.mul_term(&sj, &one))
            .collect();

        let polys: Vec<Poly> = work.iter().map(|t| t.poly.clone()).collect();
        let (quotients, rem) = Divisors::new(&polys, order)?.divide(&spoly, true, budget)?;
        if rem.is_zero() {
            continue;
        }
        let rows: Vec<&[Poly]> = work.iter().map(|t| t.row.as_slice()).collect();
        sub_rows(&mut row, &quotients, &rows);

        let (lead, lc) = rem
            .leading_term(order)
            .map(|(m, c)| (*m, c.clone()))
            .expect("nonzero");
        let inv = lc.recip();
        let tracked = Tracked {
            poly: rem.scale(&inv),
            lead,
            row: scale_row(&row, &inv),
        };
        if tracked.poly.is_one() {
            return Ok(finish(alloc::vec![tracked]));
        }
        let k = work.len();
        for (i, t) in work.iter().enumerate() {
            pairs.insert((order.key(&t.lead.lcm(&lead)), k, i));
        }
        work.push(tracked);
    }

    Ok(finish(reduce_basis(work, order, budget)?))
}

/// Minimizes and interreduces a Gröbner basis, keeping rows in sync.
fn reduce_basis(
    work: Vec<Tracked>,
    order: MonomialOrder,
    budget: &mut Budget,
) -> Result<Vec<Tracked>> {
    let mut minimal: Vec<Tracked> = Vec::new();
    for (i, t) in work.iter().enumerate() {
        let redundant = work
            .iter()
            .enumerate()
            .any(|(j, o)| j != i && o.lead.divides(&t.lead) && (o.lead != t.lead || j < i));
        if !redundant {
            minimal.push(t.clone());
        }
    }
    minimal.sort_by(|a, b| order.cmp(&a.lead, &b.lead));

    let mut out = minimal.clone();
    for i in 0..minimal.len() {
        let others: Vec<Poly> = out
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, t)| t.poly.clone())
            .collect();
        if others.is_empty() {
            break;
        }
        let (quotients, rem) = Divisors::new(&others, order)?.divide(&out[i].poly, true, budget)?;
        let mut row = out[i].row.clone();
        let rows: Vec<&[Poly]> = out
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, t)| t.row.as_slice())
            .collect();
        sub_rows(&mut row, &quotients, &rows);
        // The leading term cannot be reduced in a minimal basis.
        debug_assert_eq!(rem.leading_mono(order), Some(out[i].lead));
        out[i].poly = rem;
        out[i].row = row;
    }
    Ok(out)
}

/// Certificate for `target ∈ (generators)` or `None` if it is not a member.
pub fn membership_certificate(
    target: &Poly,
    generators: &[Poly],
    order: MonomialOrder,
) -> Result<Option<MembershipCertificate>> {
    buchberger(generators, order)?.try_certify(target, &mut Budget::default())
}

/// Jacobian criterion for the plane curve `F = 0`: returns the certificate
/// for `1 ∈ (F, F_x, F_y)` when the curve is smooth, `None` when singular.
pub fn is_smooth_plane(f: &Poly) -> Result<Option<MembershipCertificate>> {
    is_smooth_plane_with(f, MonomialOrder::Lex, &mut Budget::default())
}

pub fn is_smooth_plane_with(
    f: &Poly,
    order: MonomialOrder,
    budget: &mut Budget,
) -> Result<Option<MembershipCertificate>> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !f.only_uses(&[Var::X, Var::Y]) {
        return Err(Error::BadVariables { allowed: "{x, y}" });
    }
    let gens = [f.clone(), f.derivative(Var::X), f.derivative(Var::Y)];
    buchberger_with_budget(&gens, order, budget)?.try_certify(&Poly::one(), budget)
}

/// Applies the derivation `P ∂x + Q ∂y + R ∂z` to `p`.
pub fn apply_derivation(tau: &[Poly; 3], p: &Poly) -> Poly {
    Var::ALL
        .iter()
        .zip(tau)
        .filter(|(_, c)| !c.is_zero())
        .fold(Poly::zero(), |acc, (v, c)| &acc + &(c * &p.derivative(*v)))
}

/// True iff the derivation maps every generator back into the ideal.
pub fn preserves_ideal(tau: &[Poly; 3], generators: &[Poly], order: MonomialOrder) -> Result<bool> {
    let gb = buchberger(generators, order)?;
    Ok(preserves_ideal_gb(tau, &gb))
}

pub(crate) fn preserves_ideal_gb(tau: &[Poly; 3], gb: &GroebnerBasis) -> bool {
    gb.generators()
        .iter()
        .all(|g| gb.contains(&apply_derivation(tau, g)))
}
