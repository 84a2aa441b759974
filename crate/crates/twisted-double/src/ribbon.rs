//! Drinfeld, ribbon and pivot elements of the twisted double.

use std::sync::OnceLock;

use hopf_core::{
    find_balancing_pairs, integral_pair, r_of_aut, verify_balancing, BalancingOrientation, BalancingPair, IntegralPair,
    TwistedAutomorphism,
};
use scalar_ring::{FieldElement, FieldMatrix, LaurentScalar};

use crate::double::TwistedDouble;
use crate::element::DoubleElement;
use crate::DoubleError;

/// Integral and balancing data fixing the ribbon structure of a twisted double.
#[derive(Debug)]
pub struct RibbonData<'a> {
    double: &'a TwistedDouble,
    integrals: IntegralPair,
    balancing: BalancingPair,
    orientation: BalancingOrientation,
    drinfeld_inverse: OnceLock<DoubleElement>,
}

impl<'a> RibbonData<'a> {
    /// Computes integrals and picks a balancing pair: (1, ε) when it balances S²,
    /// otherwise the first pair found by the group-like search.
    pub fn new(double: &'a TwistedDouble) -> Result<Self, DoubleError> {
        let h = double.hopf();
        let integrals = integral_pair(h)?;
        let trivial = BalancingPair::trivial(h);
        let (balancing, orientation) = match verify_balancing(h, &integrals, &trivial) {
            Some(o) => (trivial, o),
            None => find_balancing_pairs(h, &integrals).into_iter().next().ok_or(DoubleError::NotBalanced)?,
        };
        Ok(Self { double, integrals, balancing, orientation, drinfeld_inverse: OnceLock::new() })
    }

    /// Uses a caller-supplied balancing pair, verified first.
    pub fn with_balancing(double: &'a TwistedDouble, balancing: BalancingPair) -> Result<Self, DoubleError> {
        let integrals = integral_pair(double.hopf())?;
        let orientation = verify_balancing(double.hopf(), &integrals, &balancing).ok_or(DoubleError::NotBalanced)?;
        Ok(Self { double, integrals, balancing, orientation, drinfeld_inverse: OnceLock::new() })
    }

    pub fn double(&self) -> &TwistedDouble {
        self.double
    }

    pub fn integrals(&self) -> &IntegralPair {
        &self.integrals
    }

    pub fn balancing(&self) -> &BalancingPair {
        &self.balancing
    }

    pub fn orientation(&self) -> BalancingOrientation {
        self.orientation
    }

    /// r_H(α).
    pub fn r(&self, alpha: &TwistedAutomorphism) -> Result<LaurentScalar, DoubleError> {
        Ok(r_of_aut(self.double.hopf(), &self.integrals, alpha)?)
    }

    /// The monomial square root √r_H(α) with positive rational coefficient.
    ///
    /// Fails when r_H(α) has no rational square root, e.g. det α = −1 on an
    /// exterior algebra.
    pub fn sqrt_r(&self, alpha: &TwistedAutomorphism) -> Result<LaurentScalar, DoubleError> {
        let r = self.r(alpha)?;
        r.sqrt_monomial().map_err(|_| DoubleError::NoSquareRoot(r.to_string()))
    }

    /// u_α = m_α(S_{α⁻¹}φ_α ⊗ id)τ(R_{α,α⁻¹}), from the graded definition.
    pub fn drinfeld(&self, alpha: &TwistedAutomorphism) -> Result<DoubleElement, DoubleError> {
        let d = self.double;
        let ainv = alpha.inverse()?;
        let t = d.flip(&d.r_matrix(alpha, &ainv));
        let t = d.map_leg(&t, 0, |x| d.antipode(&d.phi(alpha, x)?))?;
        d.multiply_legs(&t)
    }

    /// u⁻¹ in the untwisted double, by an exact linear solve.
    pub fn drinfeld_inverse_untwisted(&self) -> Result<&DoubleElement, DoubleError> {
        if let Some(v) = self.drinfeld_inverse.get() {
            return Ok(v);
        }
        let d = self.double;
        let id = d.identity_grading();
        let u = self.drinfeld(&id)?;
        let big = d.dim();
        let mut m = FieldMatrix::zeros(big, big);
        for y in 0..big {
            let col = d.mul(&u, &d.basis(&id, y))?;
            for (i, c) in col.terms() {
                m[(i, y)] = c.as_constant().ok_or(DoubleError::NotInvertible)?;
            }
        }
        let one = d.one(&id);
        let rhs: Vec<FieldElement> =
            one.coeffs.iter().map(|c| c.as_constant().unwrap_or_else(FieldElement::zero)).collect();
        let sol = m.solve(&rhs)?.ok_or(DoubleError::NotInvertible)?;
        let v = DoubleElement { grading: id, coeffs: sol.into_iter().map(LaurentScalar::constant).collect() };
        Ok(self.drinfeld_inverse.get_or_init(|| v))
    }

    /// u_α⁻¹ = (id⊗α)(u⁻¹).
    pub fn drinfeld_inverse(&self, alpha: &TwistedAutomorphism) -> Result<DoubleElement, DoubleError> {
        let d = self.double;
        let n = d.base_dim();
        let cols = d.aut_columns(alpha);
        let ui = self.drinfeld_inverse_untwisted()?;
        let mut out = DoubleElement::zero(alpha.clone(), d.dim());
        for (i, c) in ui.terms() {
            let (p, a) = (i / n, i % n);
            for (k, ck) in &cols[a] {
                out.coeffs[p * n + k] += c * ck;
            }
        }
        Ok(out)
    }

    /// β⊗b and its inverse (ε⊗b⁻¹)(β⁻¹⊗1) in D_α.
    fn balancing_element(&self, alpha: &TwistedAutomorphism) -> Result<(DoubleElement, DoubleElement), DoubleError> {
        let d = self.double;
        let h = d.hopf();
        let BalancingPair { b, beta } = &self.balancing;
        let g = d.pure(alpha, beta, &h.unit());
        let g = d.mul(&g, &d.pure(alpha, &counit_vec(h), b))?;
        let b_inv = h.antipode(b);
        let beta_inv: Vec<FieldElement> =
            (0..h.dim()).map(|i| hopf_core::pair(beta, &h.antipode(&h.basis_vec(i)))).collect();
        let gi = d.mul(&d.pure(alpha, &counit_vec(h), &b_inv), &d.pure(alpha, &beta_inv, &h.unit()))?;
        Ok((g, gi))
    }

    /// The ribbon element v_α = √r_H(α)⁻¹ (β⊗b) u_α⁻¹.
    pub fn ribbon(&self, alpha: &TwistedAutomorphism) -> Result<DoubleElement, DoubleError> {
        let s = self.sqrt_r(alpha)?.inv_monomial()?;
        let (g, _) = self.balancing_element(alpha)?;
        Ok(self.double.mul(&g, &self.drinfeld_inverse(alpha)?)?.scale(&s))
    }

    /// v_α⁻¹ = √r_H(α) u_α (β⊗b)⁻¹.
    pub fn ribbon_inverse(&self, alpha: &TwistedAutomorphism) -> Result<DoubleElement, DoubleError> {
        let s = self.sqrt_r(alpha)?;
        let (_, gi) = self.balancing_element(alpha)?;
        Ok(self.double.mul(&self.drinfeld(alpha)?, &gi)?.scale(&s))
    }

    /// The pivot g_α = √r_H(α)⁻¹ (β⊗b).
    pub fn pivot(&self, alpha: &TwistedAutomorphism) -> Result<DoubleElement, DoubleError> {
        let s = self.sqrt_r(alpha)?.inv_monomial()?;
        Ok(self.balancing_element(alpha)?.0.scale(&s))
    }

    /// g_α⁻¹ = √r_H(α) (β⊗b)⁻¹.
    pub fn pivot_inverse(&self, alpha: &TwistedAutomorphism) -> Result<DoubleElement, DoubleError> {
        let s = self.sqrt_r(alpha)?;
        Ok(self.balancing_element(alpha)?.1.scale(&s))
    }
}

fn counit_vec(h: &hopf_core::HopfAlgebraData) -> Vec<FieldElement> {
    (0..h.dim()).map(|i| h.counit_basis(i).clone()).collect()
}
