//! Wada's twisted Alexander invariant from the twisted Fox matrix.
//!
//! A generator b_k with matrix A_k and shift e_k acts by Φ(b_k) = t^{e_k}A_k
//! (t = s²). The Fox matrix has one n×n block row per relator and one block
//! column per generator. Deleting block column j leaves a square matrix; its
//! determinant over det(Φ(b_j) − I) is the invariant. The pair is returned
//! undivided.

use scalar_ring::{FieldMatrix, LaurentScalar};
use tangle_diagram::{wirtinger, Letter, TangleDiagram, TangleRepresentation, WirtingerPresentation};

use crate::group_ring::{fox_derivative, GroupRingElement};
use crate::matrix::LaurentMatrix;
use crate::FoxError;

/// Φ on the generators, with inverses precomputed.
#[derive(Clone, Debug)]
pub struct FoxImages {
    n: usize,
    images: Vec<LaurentMatrix>,
    inverses: Vec<LaurentMatrix>,
}

impl FoxImages {
    /// Φ(b_k) = t^{shift_k}·A_k.
    pub fn new(matrices: &[FieldMatrix], shifts: &[i64]) -> Result<Self, FoxError> {
        let n = matrices.first().map(FieldMatrix::rows).unwrap_or(1);
        let mut images = Vec::with_capacity(matrices.len());
        let mut inverses = Vec::with_capacity(matrices.len());
        for (k, (a, &e)) in matrices.iter().zip(shifts).enumerate() {
            if a.rows() != n || a.cols() != n {
                return Err(FoxError::Shape(k));
            }
            let inv = a.inverse()?.ok_or(FoxError::Singular(k))?;
            images.push(LaurentMatrix::from_field(a, 2 * e));
            inverses.push(LaurentMatrix::from_field(&inv, -2 * e));
        }
        Ok(Self { n, images, inverses })
    }

    /// Images of a representation that factors through GL(n).
    pub fn from_representation(rho: &TangleRepresentation) -> Result<Self, FoxError> {
        let matrices = rho.linear().ok_or(FoxError::NotLinear)?;
        Self::new(matrices, &rho.shifts())
    }

    /// Size n of the blocks.
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> usize {
        self.images.len()
    }

    /// Φ(b_k).
    pub fn image(&self, k: usize) -> &LaurentMatrix {
        &self.images[k]
    }

    /// Φ of a word.
    pub fn word(&self, w: &[Letter]) -> LaurentMatrix {
        w.iter().fold(LaurentMatrix::identity(self.n), |acc, l| {
            acc.mul(if l.inverse { &self.inverses[l.generator] } else { &self.images[l.generator] })
        })
    }

    /// Φ extended linearly to ℤF.
    pub fn evaluate(&self, x: &GroupRingElement) -> LaurentMatrix {
        x.terms().fold(LaurentMatrix::zeros(self.n, self.n), |acc, (w, c)| {
            acc.add(&self.word(w).scale(&LaurentScalar::from_int(c)))
        })
    }
}

/// Blocks Φ(∂r_i/∂b_j) of the twisted Fox matrix.
#[derive(Clone, Debug)]
pub struct TwistedMatrix {
    pub n: usize,
    pub blocks: Vec<Vec<LaurentMatrix>>,
}

impl TwistedMatrix {
    pub fn new(presentation: &WirtingerPresentation, images: &FoxImages) -> Self {
        let blocks = presentation
            .relators
            .iter()
            .map(|r| (0..presentation.generators).map(|j| images.evaluate(&fox_derivative(&r.letters, j))).collect())
            .collect();
        Self { n: images.dim(), blocks }
    }

    pub fn relators(&self) -> usize {
        self.blocks.len()
    }

    /// The full matrix with block column j removed.
    pub fn reduced(&self, j: usize) -> LaurentMatrix {
        let cols = self.blocks.first().map_or(0, Vec::len);
        let mut m = LaurentMatrix::zeros(self.n * self.relators(), self.n * cols.saturating_sub(1));
        for (i, row) in self.blocks.iter().enumerate() {
            for (c, block) in row.iter().enumerate().filter(|&(c, _)| c != j) {
                let cc = if c > j { c - 1 } else { c };
                m.set_block(i * self.n, cc * self.n, block);
            }
        }
        m
    }
}

/// det of the reduced Fox matrix and det(Φ(b_j) − I), for the deleted column j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WadaTorsion {
    pub column: usize,
    pub numerator: LaurentScalar,
    pub denominator: LaurentScalar,
}

fn checked_images(d: &TangleDiagram, images: &FoxImages) -> Result<WirtingerPresentation, FoxError> {
    let p = wirtinger(d);
    if images.generators() != p.generators {
        return Err(FoxError::GeneratorCount { expected: p.generators, found: images.generators() });
    }
    let id = LaurentMatrix::identity(images.dim());
    if p.relators.iter().any(|r| images.word(&r.letters) != id) {
        return Err(FoxError::NotARepresentation);
    }
    Ok(p)
}

/// The pair for column j, which must have a nonzero denominator.
pub fn wada_torsion_column(d: &TangleDiagram, images: &FoxImages, j: usize) -> Result<WadaTorsion, FoxError> {
    let p = checked_images(d, images)?;
    if j >= p.generators {
        return Err(FoxError::Column(j));
    }
    let denominator = images.image(j).sub(&LaurentMatrix::identity(images.dim())).det()?;
    if denominator.is_zero() {
        return Err(FoxError::Degenerate);
    }
    let numerator = TwistedMatrix::new(&p, images).reduced(j).det()?;
    Ok(WadaTorsion { column: j, numerator, denominator })
}

/// The pair for the first column with a nonzero denominator.
pub fn wada_torsion(d: &TangleDiagram, images: &FoxImages) -> Result<WadaTorsion, FoxError> {
    let p = checked_images(d, images)?;
    let id = LaurentMatrix::identity(images.dim());
    for j in 0..p.generators {
        if !images.image(j).sub(&id).det()?.is_zero() {
            return wada_torsion_column(d, images, j);
        }
    }
    Err(FoxError::Degenerate)
}

/// Checks det(A_j)·det(Φ(b_k) − I) ≐ det(A_k)·det(Φ(b_j) − I) over all
/// admissible pairs, up to ±s^{n·i}.
pub fn torsion_column_independence(d: &TangleDiagram, images: &FoxImages) -> Result<bool, FoxError> {
    let p = checked_images(d, images)?;
    let mut pairs = Vec::new();
    for j in 0..p.generators {
        match wada_torsion_column(d, images, j) {
            Ok(w) => pairs.push(w),
            Err(FoxError::Degenerate) => {}
            Err(e) => return Err(e),
        }
    }
    let step = images.dim() as u32;
    Ok(pairs.iter().all(|a| {
        pairs.iter().all(|b| {
            let lhs = &a.numerator * &b.denominator;
            let rhs = &b.numerator * &a.denominator;
            lhs.equal_up_to_unit(&rhs, step).is_some()
        })
    }))
}
