//! Integrals, cointegrals, distinguished group-likes, r_H and the Radford trace.
//!
//! Conventions: a right integral λ satisfies (λ⊗id)Δ(h) = λ(h)·1, a left
//! cointegral Λ satisfies h·Λ = ε(h)·Λ, the distinguished group-like g is
//! defined by (id⊗λ)Δ(h) = λ(h)·g and the distinguished character ζ by
//! Λ·h = ζ(h)·Λ. Every object is found by an exact linear solve.

use scalar_ring::{FieldElement, FieldMatrix, LaurentScalar};

use crate::automorphism::TwistedAutomorphism;
use crate::koszul::swap_sign;
use crate::{HopfAlgebraData, HopfError};

/// The normalized integral data of a Hopf algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralPair {
    /// Right integral λ_r as a covector.
    pub right_integral: Vec<FieldElement>,
    /// Left cointegral Λ_l as a vector, with λ_r(Λ_l) = 1.
    pub left_cointegral: Vec<FieldElement>,
    /// Distinguished group-like g ∈ H.
    pub g: Vec<FieldElement>,
    /// Distinguished group-like ζ ∈ H* (a character).
    pub zeta: Vec<FieldElement>,
}

impl IntegralPair {
    /// Parity of the cointegral (equal to that of the integral).
    pub fn parity(&self, h: &HopfAlgebraData) -> u8 {
        h.parity_of(&self.left_cointegral).unwrap_or(0)
    }

    /// ℤ-degree |Λ_l| of the cointegral.
    pub fn degree(&self, h: &HopfAlgebraData) -> i64 {
        self.left_cointegral.iter().enumerate().find(|(_, c)| !c.is_zero()).map_or(0, |(i, _)| h.degree(i))
    }
}

fn one_dimensional(m: FieldMatrix, what: &'static str) -> Result<Vec<FieldElement>, HopfError> {
    let mut ns = m.nullspace()?;
    if ns.len() != 1 {
        return Err(HopfError::NotOneDimensional { what, dim: ns.len() });
    }
    let mut v = ns.pop().unwrap();
    let lead = v.iter().find(|c| !c.is_zero()).unwrap().inv()?;
    for c in &mut v {
        *c *= &lead;
    }
    Ok(v)
}

/// Pairing ⟨f, x⟩ = Σ f_i x_i.
pub fn pair(f: &[FieldElement], x: &[FieldElement]) -> FieldElement {
    f.iter().zip(x).fold(FieldElement::zero(), |acc, (a, b)| acc + a * b)
}

/// Solves (λ⊗id)Δ(h) = λ(h)·1 (right) or (id⊗λ)Δ(h) = λ(h)·1 (left) for λ.
fn integral(h: &HopfAlgebraData, right: bool) -> Result<Vec<FieldElement>, HopfError> {
    let d = h.dim();
    let unit = h.unit();
    let mut m = FieldMatrix::zeros(d * d, d);
    for k in 0..d {
        for (a, b, c) in h.comult_basis(k) {
            let (unknown, out) = if right { (*a, *b) } else { (*b, *a) };
            m[(k * d + out, unknown)] += c;
        }
        for (out, u) in unit.iter().enumerate() {
            m[(k * d + out, k)] -= u;
        }
    }
    one_dimensional(m, if right { "right integral" } else { "left integral" })
}

/// Solves h·Λ = ε(h)·Λ (left) or Λ·h = ε(h)·Λ (right) for Λ.
fn cointegral(h: &HopfAlgebraData, left: bool) -> Result<Vec<FieldElement>, HopfError> {
    let d = h.dim();
    let mut m = FieldMatrix::zeros(d * d, d);
    for x in 0..d {
        for j in 0..d {
            let prod = if left { h.mult_basis(x, j) } else { h.mult_basis(j, x) };
            for (k, c) in prod {
                m[(x * d + k, j)] += c;
            }
            m[(x * d + j, j)] -= h.counit_basis(x);
        }
    }
    one_dimensional(m, if left { "left cointegral" } else { "right cointegral" })
}

pub fn right_integral(h: &HopfAlgebraData) -> Result<Vec<FieldElement>, HopfError> {
    integral(h, true)
}

pub fn left_integral(h: &HopfAlgebraData) -> Result<Vec<FieldElement>, HopfError> {
    integral(h, false)
}

pub fn left_cointegral(h: &HopfAlgebraData) -> Result<Vec<FieldElement>, HopfError> {
    cointegral(h, true)
}

pub fn right_cointegral(h: &HopfAlgebraData) -> Result<Vec<FieldElement>, HopfError> {
    cointegral(h, false)
}

/// Solves for g and ζ given a normalized λ_r and Λ_l.
pub fn distinguished_grouplikes(
    h: &HopfAlgebraData,
    lambda: &[FieldElement],
    cointegral: &[FieldElement],
) -> Result<(Vec<FieldElement>, Vec<FieldElement>), HopfError> {
    let d = h.dim();
    let lp = h.parity_of(lambda).unwrap_or(0);
    let id_lambda = |x: &[FieldElement]| {
        let mut out = h.zero_vec();
        for (k, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (i, j, c) in h.comult_basis(k) {
                if !lambda[*j].is_zero() {
                    let sign = FieldElement::from_int(swap_sign(lp, h.parity(*i)) as i64);
                    out[*i] += &(a * c) * &(&lambda[*j] * &sign);
                }
            }
        }
        out
    };
    let norm = pair(lambda, cointegral);
    if norm.is_zero() {
        return Err(HopfError::DegenerateIntegral);
    }
    let inv = norm.inv()?;
    let g: Vec<FieldElement> = id_lambda(cointegral).iter().map(|c| c * &inv).collect();
    for k in 0..d {
        let e = h.basis_vec(k);
        let want: Vec<FieldElement> = g.iter().map(|c| c * &lambda[k]).collect();
        if id_lambda(&e) != want {
            return Err(HopfError::Inconsistent("distinguished group-like g".into()));
        }
    }
    let pivot = cointegral.iter().position(|c| !c.is_zero()).ok_or(HopfError::DegenerateIntegral)?;
    let pinv = cointegral[pivot].inv()?;
    let mut zeta = Vec::with_capacity(d);
    for k in 0..d {
        let prod = h.mul(cointegral, &h.basis_vec(k));
        let z = &prod[pivot] * &pinv;
        if prod != cointegral.iter().map(|c| c * &z).collect::<Vec<_>>() {
            return Err(HopfError::Inconsistent("distinguished character zeta".into()));
        }
        zeta.push(z);
    }
    Ok((g, zeta))
}

/// Computes λ_r, Λ_l normalized so that λ_r(Λ_l) = 1, and the distinguished group-likes.
///
/// Λ_l is scaled to have leading coordinate 1 and λ_r is then rescaled.
pub fn integral_pair(h: &HopfAlgebraData) -> Result<IntegralPair, HopfError> {
    let lambda = right_integral(h)?;
    let cointegral = left_cointegral(h)?;
    let norm = pair(&lambda, &cointegral);
    if norm.is_zero() {
        return Err(HopfError::DegenerateIntegral);
    }
    let inv = norm.inv()?;
    let lambda: Vec<FieldElement> = lambda.iter().map(|c| c * &inv).collect();
    let (g, zeta) = distinguished_grouplikes(h, &lambda, &cointegral)?;
    Ok(IntegralPair { right_integral: lambda, left_cointegral: cointegral, g, zeta })
}

/// The scalar r_H(α) with λ_r ∘ α = r_H(α)·λ_r, cross-checked against α(Λ_l) = r_H(α)·Λ_l.
pub fn r_of_aut(
    h: &HopfAlgebraData,
    pair: &IntegralPair,
    alpha: &TwistedAutomorphism,
) -> Result<LaurentScalar, HopfError> {
    let cols = alpha.laurent_columns(h);
    let lam = &pair.right_integral;
    let lam_alpha: Vec<LaurentScalar> =
        cols.iter().map(|col| col.iter().fold(LaurentScalar::zero(), |acc, (i, c)| acc + c.scale(&lam[*i]))).collect();
    let j = lam.iter().position(|c| !c.is_zero()).ok_or(HopfError::DegenerateIntegral)?;
    let r = lam_alpha[j].scale(&lam[j].inv()?);
    let mismatch = || HopfError::Inconsistent(format!("r_H is not well defined for {alpha}"));
    if (0..h.dim()).any(|k| lam_alpha[k] != r.scale(&lam[k])) {
        return Err(mismatch());
    }
    let mut image = vec![LaurentScalar::zero(); h.dim()];
    for (j, col) in cols.iter().enumerate() {
        let cj = &pair.left_cointegral[j];
        if cj.is_zero() {
            continue;
        }
        for (i, c) in col {
            image[*i] += c.scale(cj);
        }
    }
    if (0..h.dim()).any(|k| image[k] != r.scale(&pair.left_cointegral[k])) {
        return Err(mismatch());
    }
    Ok(r)
}

/// Radford's expression λ(S(Λ_(2))·f(Λ_(1))) with the Koszul sign of the swap.
///
/// For even algebras this is the trace of f. On Λ(Kⁿ) it evaluates to
/// (−1)ⁿ times the supertrace of f, where n = |Λ_l|.
pub fn radford_trace(h: &HopfAlgebraData, pair: &IntegralPair, f: &FieldMatrix) -> Result<FieldElement, HopfError> {
    let d = h.dim();
    let mut total = FieldElement::zero();
    let delta = h.comul(&pair.left_cointegral);
    for a in 0..d {
        for b in 0..d {
            let c = &delta[a * d + b];
            if c.is_zero() {
                continue;
            }
            let sign = FieldElement::from_int(swap_sign(h.parity(a), h.parity(b)) as i64);
            let fa = f.apply(&h.basis_vec(a));
            let sb = h.antipode(&h.basis_vec(b));
            total += &(c * &sign) * &self::pair(&pair.right_integral, &h.mul(&sb, &fa));
        }
    }
    Ok(total)
}

/// Ordinary trace of f.
pub fn trace(f: &FieldMatrix) -> FieldElement {
    (0..f.rows()).fold(FieldElement::zero(), |acc, i| acc + &f[(i, i)])
}

/// Supertrace Σ (−1)^{|e_i|} f_ii.
pub fn supertrace(h: &HopfAlgebraData, f: &FieldMatrix) -> FieldElement {
    (0..f.rows()).fold(
        FieldElement::zero(),
        |acc, i| {
            if h.parity(i) == 1 {
                acc - &f[(i, i)]
            } else {
                acc + &f[(i, i)]
            }
        },
    )
}
