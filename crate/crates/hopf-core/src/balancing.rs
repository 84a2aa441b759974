//! Kauffman–Radford balancing pairs (b, β) with b² = g, β² = ζ.
//!
//! Group-likes of H are found by scanning basis elements and closing under
//! products; group-likes of H* are the powers of ζ together with ε. A pair is
//! accepted only after [`verify_balancing`] confirms the S² identity.

use scalar_ring::FieldElement;

use crate::integrals::{pair, IntegralPair};
use crate::HopfAlgebraData;

/// Which leg of the threefold coproduct carries β⁻¹ in the S² identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BalancingOrientation {
    /// S²(h) = β⁻¹(h_(1))·b h_(2) b⁻¹·β(h_(3)).
    InverseFirst,
    /// S²(h) = β(h_(1))·b h_(2) b⁻¹·β⁻¹(h_(3)).
    InverseLast,
}

/// Group-likes b ∈ G(H) and β ∈ G(H*) balancing S².
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancingPair {
    pub b: Vec<FieldElement>,
    pub beta: Vec<FieldElement>,
}

impl BalancingPair {
    /// The trivial pair b = 1, β = ε.
    pub fn trivial(h: &HopfAlgebraData) -> Self {
        Self { b: h.unit(), beta: (0..h.dim()).map(|i| h.counit_basis(i).clone()).collect() }
    }
}

/// Whether x is group-like: Δ(x) = x⊗x and ε(x) = 1.
pub fn is_grouplike(h: &HopfAlgebraData, x: &[FieldElement]) -> bool {
    let d = h.dim();
    let delta = h.comul(x);
    h.counit(x).is_one() && (0..d * d).all(|k| delta[k] == &x[k / d] * &x[k % d])
}

/// Whether a covector is a character: β(xy) = β(x)β(y) and β(1) = 1.
pub fn is_character(h: &HopfAlgebraData, beta: &[FieldElement]) -> bool {
    let d = h.dim();
    pair(beta, &h.unit()).is_one()
        && (0..d).all(|i| {
            (0..d).all(|j| {
                let prod = h.mult_basis(i, j).iter().fold(FieldElement::zero(), |acc, (k, c)| acc + c * &beta[*k]);
                prod == &beta[i] * &beta[j]
            })
        })
}

/// Convolution product of two covectors, (f·g)(h) = f(h_(1)) g(h_(2)), for even f.
pub fn convolve(h: &HopfAlgebraData, f: &[FieldElement], g: &[FieldElement]) -> Vec<FieldElement> {
    (0..h.dim())
        .map(|k| h.comult_basis(k).iter().fold(FieldElement::zero(), |acc, (a, b, c)| acc + &(c * &f[*a]) * &g[*b]))
        .collect()
}

/// Group-likes of H: basis group-likes closed under multiplication.
pub fn find_grouplikes(h: &HopfAlgebraData) -> Vec<Vec<FieldElement>> {
    let mut found: Vec<Vec<FieldElement>> =
        (0..h.dim()).map(|i| h.basis_vec(i)).filter(|x| is_grouplike(h, x)).collect();
    let mut k = 0;
    while k < found.len() {
        for j in 0..=k {
            for p in [h.mul(&found[k], &found[j]), h.mul(&found[j], &found[k])] {
                if !found.contains(&p) {
                    found.push(p);
                }
            }
        }
        k += 1;
    }
    found
}

/// Group-likes of H* generated by ζ: ε, ζ, ζ², … until the cycle closes.
pub fn dual_grouplikes(h: &HopfAlgebraData, zeta: &[FieldElement]) -> Vec<Vec<FieldElement>> {
    let eps: Vec<FieldElement> = (0..h.dim()).map(|i| h.counit_basis(i).clone()).collect();
    let mut found = vec![eps.clone()];
    let mut cur = zeta.to_vec();
    while cur != eps && found.len() <= h.dim() {
        found.push(cur.clone());
        cur = convolve(h, &cur, zeta);
    }
    found
}

/// Checks b² = g, β² = ζ, group-likeness, and the S² identity.
///
/// Returns the orientation in which the S² identity holds, if any. When both
/// hold (e.g. β = ε) the first one is reported.
pub fn verify_balancing(
    h: &HopfAlgebraData,
    integrals: &IntegralPair,
    bp: &BalancingPair,
) -> Option<BalancingOrientation> {
    if !is_grouplike(h, &bp.b)
        || !is_character(h, &bp.beta)
        || h.mul(&bp.b, &bp.b) != integrals.g
        || convolve(h, &bp.beta, &bp.beta) != integrals.zeta
    {
        return None;
    }
    // Group-likes are invertible with b⁻¹ = S(b), β⁻¹ = β∘S.
    let b_inv = h.antipode(&bp.b);
    let beta_inv: Vec<FieldElement> = (0..h.dim()).map(|i| pair(&bp.beta, &h.antipode(&h.basis_vec(i)))).collect();
    let holds = |first: &[FieldElement], last: &[FieldElement]| {
        (0..h.dim()).all(|k| {
            let mut rhs = h.zero_vec();
            for (a, m, c) in h.comult_basis(k) {
                if first[*a].is_zero() {
                    continue;
                }
                for (x, y, c2) in h.comult_basis(*m) {
                    if last[*y].is_zero() {
                        continue;
                    }
                    let scale = &(c * c2) * &(&first[*a] * &last[*y]);
                    let conj = h.mul(&h.mul(&bp.b, &h.basis_vec(*x)), &b_inv);
                    for (i, v) in conj.iter().enumerate() {
                        rhs[i] += &scale * v;
                    }
                }
            }
            rhs == h.antipode(&h.antipode(&h.basis_vec(k)))
        })
    };
    if holds(&beta_inv, &bp.beta) {
        Some(BalancingOrientation::InverseFirst)
    } else if holds(&bp.beta, &beta_inv) {
        Some(BalancingOrientation::InverseLast)
    } else {
        None
    }
}

/// All verified balancing pairs among the enumerated group-likes.
pub fn find_balancing_pairs(
    h: &HopfAlgebraData,
    integrals: &IntegralPair,
) -> Vec<(BalancingPair, BalancingOrientation)> {
    let bs: Vec<_> = find_grouplikes(h).into_iter().filter(|b| h.mul(b, b) == integrals.g).collect();
    let betas: Vec<_> = dual_grouplikes(h, &integrals.zeta)
        .into_iter()
        .filter(|beta| convolve(h, beta, beta) == integrals.zeta)
        .collect();
    let mut out = Vec::new();
    for b in &bs {
        for beta in &betas {
            let bp = BalancingPair { b: b.clone(), beta: beta.clone() };
            if let Some(o) = verify_balancing(h, integrals, &bp) {
                out.push((bp, o));
            }
        }
    }
    out
}
