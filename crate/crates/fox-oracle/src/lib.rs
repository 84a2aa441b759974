//! Fox calculus on the Wirtinger presentation of a tangle closure, and
//! Wada's twisted Alexander invariant as a numerator/denominator pair.
//!
//! This crate is an oracle for the invariants computed elsewhere in the
//! workspace: it shares only the diagram and its presentation with them.

mod group_ring;
mod matrix;
mod wada;

use scalar_ring::ScalarError;

pub use group_ring::{fox_derivative, fundamental_identity, invert, reduce, GroupRingElement};
pub use matrix::LaurentMatrix;
pub use wada::{torsion_column_independence, wada_torsion, wada_torsion_column, FoxImages, TwistedMatrix, WadaTorsion};

/// Errors raised by the oracle.
#[derive(Debug, thiserror::Error)]
pub enum FoxError {
    #[error("the representation has no matrix images")]
    NotLinear,
    #[error("matrix of generator {0} has the wrong size")]
    Shape(usize),
    #[error("matrix of generator {0} is singular")]
    Singular(usize),
    #[error("expected {expected} generator images, found {found}")]
    GeneratorCount { expected: usize, found: usize },
    #[error("the matrices do not satisfy the Wirtinger relators")]
    NotARepresentation,
    #[error("generator column {0} does not exist")]
    Column(usize),
    #[error("the denominator det(Φ(b_j) − I) vanishes")]
    Degenerate,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
