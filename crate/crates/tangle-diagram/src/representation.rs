//! Representations of the tangle group into twisted automorphisms of a Hopf
//! algebra, and the JSON representation file.
//!
//! A file lists generator images by printed name (`"b1"`, …, `"bN"`); the key
//! `"*"` supplies a default. Each image is either `matrix`, an n×n matrix
//! acting on the generators of an exterior algebra Λ(Kⁿ), or `automorphism`,
//! a full matrix on the basis of H; an empty image is the identity. Entries are rational strings or lists of
//! power-basis coordinates. `shift` defaults to 0; `"graded": true` sets
//! every shift to 1.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use hopf_core::{
    exterior_rank, gl_to_aut, is_hopf_automorphism, Coefficient, HopfAlgebraData, HopfAutomorphism, TwistedAutomorphism,
};
use scalar_ring::{FieldElement, FieldMatrix};

use crate::diagram::TangleDiagram;
use crate::wirtinger::{wirtinger, Letter};
use crate::TangleError;

/// Images of the Wirtinger generators e_0, …, e_{N−1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleRepresentation {
    images: Vec<TwistedAutomorphism>,
    linear: Option<Vec<FieldMatrix>>,
    graded: bool,
}

impl TangleRepresentation {
    /// Images given directly as twisted automorphisms.
    pub fn new(images: Vec<TwistedAutomorphism>, graded: bool) -> Self {
        Self { images, linear: None, graded }
    }

    /// Images gl(A_k) ⊗ t^{shift_k} on an exterior algebra. The matrices are
    /// kept for the Fox-calculus side.
    pub fn from_linear(
        h: &HopfAlgebraData,
        matrices: Vec<FieldMatrix>,
        shifts: Vec<i64>,
        graded: bool,
    ) -> Result<Self, TangleError> {
        let shifts = if graded { vec![1; matrices.len()] } else { shifts };
        let images = matrices
            .iter()
            .zip(&shifts)
            .map(|(a, &s)| Ok(TwistedAutomorphism::new(gl_to_aut(h, a)?, s)))
            .collect::<Result<Vec<_>, TangleError>>()?;
        Ok(Self { images, linear: Some(matrices), graded })
    }

    /// Every generator sent to the identity, shifted by 1 when graded.
    pub fn trivial(h: &HopfAlgebraData, generators: usize, graded: bool) -> Self {
        let image = TwistedAutomorphism::new(HopfAutomorphism::identity(h.dim()), i64::from(graded));
        Self { images: vec![image; generators], linear: None, graded }
    }

    /// Trivial representation through GL(n), keeping identity matrices.
    pub fn trivial_linear(h: &HopfAlgebraData, n: usize, generators: usize, graded: bool) -> Result<Self, TangleError> {
        Self::from_linear(h, vec![FieldMatrix::identity(n); generators], vec![0; generators], graded)
    }

    pub fn images(&self) -> &[TwistedAutomorphism] {
        &self.images
    }

    pub fn image(&self, generator: usize) -> &TwistedAutomorphism {
        &self.images[generator]
    }

    /// The matrices A_k when the representation factors through GL(n).
    pub fn linear(&self) -> Option<&[FieldMatrix]> {
        self.linear.as_deref()
    }

    pub fn graded(&self) -> bool {
        self.graded
    }

    pub fn shifts(&self) -> Vec<i64> {
        self.images.iter().map(TwistedAutomorphism::shift).collect()
    }

    /// Image of a word in the generators.
    pub fn evaluate(&self, word: &[Letter]) -> Result<TwistedAutomorphism, TangleError> {
        let d = self.images.first().map(|a| a.dim()).unwrap_or(1);
        let mut acc = TwistedAutomorphism::identity(d);
        for l in word {
            let x =
                self.images.get(l.generator).ok_or_else(|| TangleError::MissingGenerator(l.generator.to_string()))?;
            let x = if l.inverse { x.inverse()? } else { x.clone() };
            acc = acc.compose(&x);
        }
        Ok(acc)
    }

    /// Labels of the arcs e_0, …, e_g of the open diagram; e_g carries the
    /// label of e_0.
    pub fn arc_labels(&self, d: &TangleDiagram) -> Result<Vec<TwistedAutomorphism>, TangleError> {
        if self.images.len() != d.generator_count() {
            return Err(TangleError::GeneratorCount { expected: d.generator_count(), found: self.images.len() });
        }
        Ok((0..=d.g()).map(|k| self.images[d.closure_arc(k)].clone()).collect())
    }

    /// ρ_y = y ρ y⁻¹ on every generator.
    pub fn conjugated(&self, y: &TwistedAutomorphism) -> Result<Self, TangleError> {
        let images = self.images.iter().map(|x| x.conjugate_by(y)).collect::<Result<Vec<_>, _>>()?;
        Ok(Self { images, linear: None, graded: self.graded })
    }

    /// Reads a representation file for the diagram `d` over `h`.
    pub fn from_json(text: &str, h: &HopfAlgebraData, d: &TangleDiagram) -> Result<Self, TangleError> {
        let file: RepresentationFile = serde_json::from_str(text)?;
        file.realize(h, d)
    }

    pub fn load(path: impl AsRef<Path>, h: &HopfAlgebraData, d: &TangleDiagram) -> Result<Self, TangleError> {
        let text = std::fs::read_to_string(path.as_ref())
            .map_err(|e| TangleError::Io(format!("{}: {e}", path.as_ref().display())))?;
        Self::from_json(&text, h, d)
    }
}

/// Checks that every Wirtinger relator maps to the identity, that each image
/// is a Hopf automorphism, and that all shifts are 1 for a graded
/// representation.
pub fn check_representation(
    d: &TangleDiagram,
    rho: &TangleRepresentation,
    h: &HopfAlgebraData,
) -> Result<bool, TangleError> {
    if rho.images.len() != d.generator_count() {
        return Err(TangleError::GeneratorCount { expected: d.generator_count(), found: rho.images.len() });
    }
    if rho.images.iter().any(|a| a.dim() != h.dim() || !is_hopf_automorphism(h, a.base())) {
        return Ok(false);
    }
    if rho.graded && rho.images.iter().any(|a| a.shift() != 1) {
        return Ok(false);
    }
    for r in wirtinger(d).relators {
        if !rho.evaluate(&r.letters)?.is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The on-disk representation document.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationFile {
    /// Algebra the file was written for, if recorded.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    /// Order n of ℚ(ζ_n) for coordinate-list entries; 1 or absent means ℚ.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cyclotomic_order: Option<u32>,
    #[serde(default)]
    pub graded: bool,
    pub generators: BTreeMap<String, GeneratorSpec>,
}

/// One generator image.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<Coefficient>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub automorphism: Option<Vec<Vec<Coefficient>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift: Option<i64>,
}

impl RepresentationFile {
    /// Builds the representation, resolving printed generator names against `d`.
    pub fn realize(&self, h: &HopfAlgebraData, d: &TangleDiagram) -> Result<TangleRepresentation, TangleError> {
        if let Some(order) = self.cyclotomic_order {
            if order > 1 && order != h.field().order() {
                return Err(TangleError::Representation(format!(
                    "file uses Q(zeta_{order}) but the algebra is over Q(zeta_{})",
                    h.field().order()
                )));
            }
        }
        for name in self.generators.keys() {
            if name != "*" && d.generator_index(name).is_none() {
                return Err(TangleError::Representation(format!("unknown generator `{name}`")));
            }
        }
        let n = d.generator_count();
        let specs = (0..n)
            .map(|k| {
                let name = d.generator_name(k);
                self.generators
                    .get(&name)
                    .or_else(|| self.generators.get("*"))
                    .ok_or(TangleError::MissingGenerator(name))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let shifts: Vec<i64> = specs.iter().map(|s| if self.graded { 1 } else { s.shift.unwrap_or(0) }).collect();
        let field = h.field();
        let decode = |rows: &Vec<Vec<Coefficient>>| -> Result<FieldMatrix, TangleError> {
            let rows = rows
                .iter()
                .map(|r| r.iter().map(|c| c.decode(field)).collect::<Result<Vec<FieldElement>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            Ok(FieldMatrix::from_rows(rows)?)
        };
        if let Some(rank) = exterior_rank(h).filter(|_| specs.iter().all(|s| s.automorphism.is_none())) {
            let matrices = specs
                .iter()
                .map(|s| s.matrix.as_ref().map_or_else(|| Ok(FieldMatrix::identity(rank)), decode))
                .collect::<Result<Vec<_>, _>>()?;
            return TangleRepresentation::from_linear(h, matrices, shifts, self.graded);
        }
        let images = specs
            .iter()
            .zip(&shifts)
            .map(|(s, &shift)| {
                let base = match (&s.matrix, &s.automorphism) {
                    (_, Some(rows)) => HopfAutomorphism::from_matrix(decode(rows)?),
                    (Some(_), None) => {
                        return Err(TangleError::Representation("`matrix` needs an exterior algebra".into()))
                    }
                    (None, None) => HopfAutomorphism::identity(h.dim()),
                };
                if base.dim() != h.dim() || base.matrix().cols() != h.dim() {
                    return Err(TangleError::Representation(format!("automorphism must be {0}x{0}", h.dim())));
                }
                Ok(TwistedAutomorphism::new(base, shift))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TangleRepresentation::new(images, self.graded))
    }
}
