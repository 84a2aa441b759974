//! The Kuperberg tensor network of a Heegaard diagram and its contraction.
//!
//! α_k carries the fourfold coproduct of the cointegral Λ, one factor per
//! point, listed from x_4 down to x_1. The factor at x is twisted by
//! ρ(w_x)⁻¹ and then hit by the antipode when m_x = −1; factors on the arc
//! β_g get the counit. β_j carries the integral λ of the product of its
//! factors, taken against the orientation of β_j. The α-tensors are listed
//! with k descending, the β-functionals with j descending, and odd factors
//! pick up the Koszul sign of reordering the first list into the second.
//!
//! Contraction absorbs α-tensors one at a time and applies each β-functional
//! as soon as all its legs are present, on the front of the leg list. Every
//! α-tensor and every nonzero β-block has the parity of Λ, so changing the
//! absorption or application order only multiplies by a block sign, which is
//! corrected for.

use std::collections::HashMap;

use hopf_core::koszul::{inversions, permutation_sign};
use hopf_core::{HopfAlgebraData, IntegralPair};
use scalar_ring::LaurentScalar;
use tangle_diagram::TangleRepresentation;

use crate::heegaard::{BetaTarget, HeegaardData, Slot};
use crate::KuperbergError;

type Entries = HashMap<Vec<usize>, LaurentScalar>;

/// A sparse tensor with named legs.
#[derive(Clone, Debug)]
pub struct AlphaTensor {
    pub curve: usize,
    pub legs: Vec<Slot>,
    pub entries: Vec<(Vec<usize>, LaurentScalar)>,
}

/// The functional x_1 ⊗ … ⊗ x_l ↦ λ(x_1⋯x_l) on the listed legs.
#[derive(Clone, Debug)]
pub struct BetaFunctional {
    pub curve: usize,
    pub legs: Vec<Slot>,
}

/// α-tensors and β-functionals in reference order.
#[derive(Clone, Debug)]
pub struct KuperbergNetwork {
    pub alphas: Vec<AlphaTensor>,
    pub betas: Vec<BetaFunctional>,
    /// Parity of Λ, shared by every block.
    pub parity: u8,
}

fn sparse_apply(cols: &[Vec<(usize, LaurentScalar)>], x: &[(usize, LaurentScalar)]) -> Vec<(usize, LaurentScalar)> {
    let mut out: HashMap<usize, LaurentScalar> = HashMap::new();
    for (i, c) in x {
        for (k, v) in &cols[*i] {
            *out.entry(*k).or_insert_with(LaurentScalar::zero) += c * v;
        }
    }
    let mut v: Vec<_> = out.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_by_key(|(k, _)| *k);
    v
}

/// Coefficients of (id^{⊗k−1} ⊗ Δ)∘…∘Δ applied to v, as k-tuples.
fn iterated_coproduct(
    h: &HopfAlgebraData,
    v: &[scalar_ring::FieldElement],
    k: usize,
) -> Vec<(Vec<usize>, scalar_ring::FieldElement)> {
    let mut cur: HashMap<Vec<usize>, scalar_ring::FieldElement> =
        v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (vec![i], c.clone())).collect();
    for _ in 1..k {
        let mut next: HashMap<Vec<usize>, scalar_ring::FieldElement> = HashMap::new();
        for (t, c) in cur {
            let (last, head) = t.split_last().unwrap();
            for (x, y, cc) in h.comult_basis(*last) {
                let mut key = head.to_vec();
                key.extend([*x, *y]);
                *next.entry(key).or_default() += &c * cc;
            }
        }
        cur = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    }
    let mut out: Vec<_> = cur.into_iter().collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

impl KuperbergNetwork {
    pub fn new(
        h: &HopfAlgebraData,
        integrals: &IntegralPair,
        hd: &HeegaardData,
        rho: &TangleRepresentation,
    ) -> Result<Self, KuperbergError> {
        let antipode: Vec<Vec<(usize, LaurentScalar)>> = (0..h.dim())
            .map(|j| h.antipode_basis(j).iter().map(|(i, c)| (*i, LaurentScalar::constant(c.clone()))).collect())
            .collect();
        let delta = iterated_coproduct(h, &integrals.left_cointegral, 4);
        let mut alphas = Vec::new();
        for a in hd.alphas.iter().rev() {
            let order = [3usize, 2, 1, 0];
            let legs: Vec<usize> = order.iter().copied().filter(|&p| a.points[p].target != BetaTarget::Arc).collect();
            let twists = legs
                .iter()
                .map(|&p| {
                    let w = rho.evaluate(&a.points[p].word)?.inverse()?;
                    Ok(w.laurent_columns(h))
                })
                .collect::<Result<Vec<_>, KuperbergError>>()?;
            let mut entries: Entries = HashMap::new();
            for (t, c) in &delta {
                let mut coeff = c.clone();
                for p in order.iter().filter(|&&p| a.points[p].target == BetaTarget::Arc) {
                    coeff *= h.counit_basis(t[3 - p]);
                }
                if coeff.is_zero() {
                    continue;
                }
                let mut partial: Vec<(Vec<usize>, LaurentScalar)> = vec![(vec![], LaurentScalar::constant(coeff))];
                for (&p, cols) in legs.iter().zip(&twists) {
                    let mut img = cols[t[3 - p]].clone();
                    if a.points[p].sign < 0 {
                        img = sparse_apply(&antipode, &img);
                    }
                    partial = partial
                        .iter()
                        .flat_map(|(key, cv)| {
                            img.iter().map(move |(y, cy)| {
                                let mut k = key.clone();
                                k.push(*y);
                                (k, cv * cy)
                            })
                        })
                        .collect();
                }
                for (key, v) in partial {
                    *entries.entry(key).or_insert_with(LaurentScalar::zero) += v;
                }
            }
            let mut entries: Vec<_> = entries.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            entries.sort_by(|x, y| x.0.cmp(&y.0));
            alphas.push(AlphaTensor { curve: a.index, legs: legs.iter().map(|&p| (a.index, p)).collect(), entries });
        }
        let betas = hd
            .betas
            .iter()
            .rev()
            .map(|b| BetaFunctional { curve: b.index, legs: b.slots.iter().rev().copied().collect() })
            .collect();
        Ok(Self { alphas, betas, parity: integrals.parity(h) })
    }

    /// Absorption order minimizing the number of open legs at each step.
    pub fn greedy_schedule(&self) -> Vec<usize> {
        let mut remaining: Vec<usize> = (0..self.alphas.len()).collect();
        let mut present: Vec<Slot> = Vec::new();
        let mut done = vec![false; self.betas.len()];
        let mut schedule = Vec::new();
        while !remaining.is_empty() {
            let cost = |i: usize| {
                let mut legs = present.clone();
                legs.extend(&self.alphas[i].legs);
                let closed: usize = self
                    .betas
                    .iter()
                    .zip(&done)
                    .filter(|(b, &d)| !d && b.legs.iter().all(|l| legs.contains(l)))
                    .map(|(b, _)| b.legs.len())
                    .sum();
                legs.len() - closed
            };
            let (pos, &best) = remaining.iter().enumerate().min_by_key(|(_, &i)| (cost(i), i)).unwrap();
            remaining.remove(pos);
            present.extend(&self.alphas[best].legs);
            for (b, d) in self.betas.iter().zip(done.iter_mut()) {
                if !*d && b.legs.iter().all(|l| present.contains(l)) {
                    *d = true;
                    present.retain(|l| !b.legs.contains(l));
                }
            }
            schedule.push(best);
        }
        schedule
    }

    /// Contracts with the α-tensors absorbed in `schedule` order.
    pub fn contract(
        &self,
        h: &HopfAlgebraData,
        integrals: &IntegralPair,
        schedule: &[usize],
    ) -> Result<LaurentScalar, KuperbergError> {
        let mut sorted = schedule.to_vec();
        sorted.sort_unstable();
        if sorted != (0..self.alphas.len()).collect::<Vec<_>>() {
            return Err(KuperbergError::Schedule);
        }
        let mut legs: Vec<Slot> = Vec::new();
        let mut work: Entries = HashMap::from([(vec![], LaurentScalar::one())]);
        let mut applied: Vec<usize> = Vec::new();
        let mut lambda_cache: HashMap<Vec<usize>, scalar_ring::FieldElement> = HashMap::new();
        for &i in schedule {
            let a = &self.alphas[i];
            let mut next: Entries = HashMap::new();
            for (k, v) in &work {
                for (ka, va) in &a.entries {
                    let mut key = k.clone();
                    key.extend(ka);
                    *next.entry(key).or_insert_with(LaurentScalar::zero) += v * va;
                }
            }
            work = next;
            legs.extend(&a.legs);
            for (j, b) in self.betas.iter().enumerate() {
                if applied.contains(&j) || !b.legs.iter().all(|l| legs.contains(l)) {
                    continue;
                }
                let front: Vec<usize> = b.legs.iter().map(|l| legs.iter().position(|m| m == l).unwrap()).collect();
                let order: Vec<usize> =
                    front.iter().copied().chain((0..legs.len()).filter(|p| !front.contains(p))).collect();
                let mut next: Entries = HashMap::new();
                for (key, v) in &work {
                    let block: Vec<usize> = front.iter().map(|&p| key[p]).collect();
                    let lam = lambda_cache
                        .entry(block.clone())
                        .or_insert_with(|| lambda_of_product(h, integrals, &block))
                        .clone();
                    if lam.is_zero() {
                        continue;
                    }
                    let parities: Vec<u8> = key.iter().map(|&x| h.parity(x)).collect();
                    let sign = permutation_sign(&parities, &order);
                    let rest: Vec<usize> = order[front.len()..].iter().map(|&p| key[p]).collect();
                    let term = v.scale(&lam);
                    let term = if sign < 0 { -term } else { term };
                    *next.entry(rest).or_insert_with(LaurentScalar::zero) += term;
                }
                work = next.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                legs = order[front.len()..].iter().map(|&p| legs[p]).collect();
                applied.push(j);
            }
        }
        if applied.len() != self.betas.len() || !legs.is_empty() {
            return Err(KuperbergError::Unmatched);
        }
        let block_sign = (inversions(schedule) + inversions(&applied)) * self.parity as usize;
        let total = work.remove(&Vec::new()).unwrap_or_else(LaurentScalar::zero);
        Ok(if block_sign % 2 == 1 { -total } else { total })
    }
}

fn lambda_of_product(h: &HopfAlgebraData, integrals: &IntegralPair, block: &[usize]) -> scalar_ring::FieldElement {
    let mut acc = h.unit();
    for &x in block {
        acc = h.mul(&acc, &h.basis_vec(x));
    }
    hopf_core::pair(&integrals.right_integral, &acc)
}
