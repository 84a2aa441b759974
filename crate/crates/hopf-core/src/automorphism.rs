//! Hopf automorphisms and their ℤ-graded twists α⊗n.

use std::fmt;

use scalar_ring::{FieldElement, FieldMatrix, LaurentScalar};

use crate::{HopfAlgebraData, HopfError};

/// A Hopf algebra automorphism as a d×d matrix; column j is the image of e_j.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HopfAutomorphism {
    matrix: FieldMatrix,
}

impl HopfAutomorphism {
    pub fn identity(d: usize) -> Self {
        Self { matrix: FieldMatrix::identity(d) }
    }

    /// Wraps a matrix without checking the automorphism axioms.
    pub fn from_matrix(matrix: FieldMatrix) -> Self {
        Self { matrix }
    }

    pub fn matrix(&self) -> &FieldMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// The composite self ∘ other.
    pub fn compose(&self, other: &Self) -> Self {
        Self { matrix: &self.matrix * &other.matrix }
    }

    pub fn inverse(&self) -> Result<Self, HopfError> {
        Ok(Self { matrix: self.matrix.inverse()?.ok_or(HopfError::SingularMatrix)? })
    }

    pub fn apply(&self, x: &[FieldElement]) -> Vec<FieldElement> {
        self.matrix.apply(x)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == FieldMatrix::identity(self.dim())
    }
}

/// Checks that α preserves degree and parity and commutes with m, 1, Δ, ε and S.
pub fn is_hopf_automorphism(h: &HopfAlgebraData, alpha: &HopfAutomorphism) -> bool {
    let d = h.dim();
    let m = alpha.matrix();
    if m.rows() != d || m.cols() != d || !matches!(m.det(), Ok(x) if !x.is_zero()) {
        return false;
    }
    let homogeneous = (0..d)
        .all(|j| (0..d).all(|i| m[(i, j)].is_zero() || (h.degree(i) == h.degree(j) && h.parity(i) == h.parity(j))));
    if !homogeneous || alpha.apply(&h.unit()) != h.unit() {
        return false;
    }
    let images: Vec<Vec<FieldElement>> = (0..d).map(|j| alpha.apply(&h.basis_vec(j))).collect();
    (0..d).all(|i| {
        h.counit(&images[i]) == *h.counit_basis(i)
            && alpha.apply(&h.antipode(&h.basis_vec(i))) == h.antipode(&images[i])
            && (0..d).all(|j| alpha.apply(&h.mul(&h.basis_vec(i), &h.basis_vec(j))) == h.mul(&images[i], &images[j]))
            && {
                let lhs = h.comul(&images[i]);
                let mut rhs = vec![FieldElement::zero(); d * d];
                for (a, b, c) in h.comult_basis(i) {
                    for (x, cx) in images[*a].iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                        for (y, cy) in images[*b].iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                            rhs[x * d + y] += c * &(cx * cy);
                        }
                    }
                }
                lhs == rhs
            }
    })
}

/// An element α⊗n of Aut(H) × ℤ acting by x ↦ t^{n|x|} α(x).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistedAutomorphism {
    base: HopfAutomorphism,
    shift: i64,
}

impl TwistedAutomorphism {
    pub fn new(base: HopfAutomorphism, shift: i64) -> Self {
        Self { base, shift }
    }

    pub fn identity(d: usize) -> Self {
        Self::new(HopfAutomorphism::identity(d), 0)
    }

    pub fn base(&self) -> &HopfAutomorphism {
        &self.base
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    /// (α⊗n)(β⊗m) = (αβ)⊗(n+m).
    pub fn compose(&self, other: &Self) -> Self {
        Self::new(self.base.compose(&other.base), self.shift + other.shift)
    }

    pub fn inverse(&self) -> Result<Self, HopfError> {
        Ok(Self::new(self.base.inverse()?, -self.shift))
    }

    /// x ↦ y x y⁻¹.
    pub fn conjugate_by(&self, y: &Self) -> Result<Self, HopfError> {
        Ok(y.compose(self).compose(&y.inverse()?))
    }

    pub fn is_identity(&self) -> bool {
        self.shift == 0 && self.base.is_identity()
    }

    /// Sparse columns over the Laurent ring: column j is t^{n|e_j|} α(e_j).
    pub fn laurent_columns(&self, h: &HopfAlgebraData) -> Vec<Vec<(usize, LaurentScalar)>> {
        let m = self.base.matrix();
        (0..h.dim())
            .map(|j| {
                let s = 2 * self.shift * h.degree(j);
                (0..h.dim())
                    .filter(|&i| !m[(i, j)].is_zero())
                    .map(|i| (i, LaurentScalar::monomial(m[(i, j)].clone(), s)))
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for TwistedAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (x) {}", self.base.matrix(), self.shift)
    }
}
