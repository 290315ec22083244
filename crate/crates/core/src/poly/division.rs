//! Multivariate division with remainder.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{Mono, MonomialOrder, Poly, Rat};
use crate::groebner::Budget;
use crate::{Error, Result};

/// A divisor list prepared for repeated division under one order.
#[derive(Debug, Clone)]
pub struct Divisors<'a> {
    order: MonomialOrder,
    entries: Vec<Prepared<'a>>,
}

#[derive(Debug, Clone)]
struct Prepared<'a> {
    lead: Mono,
    lead_coeff: Rat,
    poly: &'a Poly,
}

impl<'a> Divisors<'a> {
    pub fn new(divisors: &'a [Poly], order: MonomialOrder) -> Result<Self> {
        let entries = divisors
            .iter()
            .map(|d| {
                let (m, c) = d.leading_term(order).ok_or(Error::ZeroDivisor)?;
                Ok(Prepared {
                    lead: *m,
                    lead_coeff: c.clone(),
                    poly: d,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Divisors { order, entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Full division of `p`. When `want_quotients` is false the quotient
    /// list is returned empty. The earliest divisor whose leading monomial
    /// divides the current leading term is always used.
    pub fn divide(
        &self,
        p: &Poly,
        want_quotients: bool,
        budget: &mut Budget,
    ) -> Result<(Vec<Poly>, Poly)> {
        let order = self.order;
        let mut work: BTreeMap<[u32; 4], Rat> = p
            .terms()
            .iter()
            .map(|(m, c)| (order.key(m), c.clone()))
            .collect();
        let mut quotients: Vec<Vec<(Mono, Rat)>> = if want_quotients {
            alloc::vec![Vec::new(); self.entries.len()]
        } else {
            Vec::new()
        };
        let mut remainder: Vec<(Mono, Rat)> = Vec::new();

        while let Some((key, coeff)) = work.pop_last() {
            let lead = MonomialOrder::mono_from_key(&key);
            let hit = self
                .entries
                .iter()
                .enumerate()
                .find_map(|(i, d)| d.lead.quotient_of(&lead).map(|q| (i, q)));
            let Some((i, shift)) = hit else {
                remainder.push((lead, coeff));
                continue;
            };
            budget.tick()?;
            let d = &self.entries[i];
            let factor = &coeff / &d.lead_coeff;
            for (m, c) in d.poly.terms() {
                if *m == d.lead {
                    continue;
                }
                let k = order.key(&m.mul(&shift));
                let delta = c * &factor;
                match work.get_mut(&k) {
                    Some(e) => {
                        *e -= delta;
                        if e.is_zero() {
                            work.remove(&k);
                        }
                    }
                    None => {
                        work.insert(k, -delta);
                    }
                }
            }
            if want_quotients {
                quotients[i].push((shift, factor));
            }
        }

        let quotients = quotients.into_iter().map(Poly::from_terms).collect();
        Ok((quotients, Poly::from_terms(remainder)))
    }
}

/// Divides `p` by `divisors`: `p = Σ qᵢ·dᵢ + r` with no term of `r`
/// divisible by any leading monomial.
pub fn divide_multivariate(
    p: &Poly,
    divisors: &[Poly],
    order: MonomialOrder,
) -> Result<(Vec<Poly>, Poly)> {
    if divisors.is_empty() {
        return Ok((Vec::new(), p.clone()));
    }
    Divisors::new(divisors, order)?.divide(p, true, &mut Budget::unlimited())
}
