//! Finite-dimensional Hopf superalgebras given by structure tensors.
//!
//! Provides exact axiom verification, integrals and cointegrals found by
//! linear solves, distinguished group-likes, the scalar r_H of an
//! automorphism, balancing pairs, JSON serialization, and the exterior and
//! Taft presets.

mod algebra;
mod automorphism;
mod balancing;
mod integrals;
mod io;
pub mod koszul;
mod presets;

use scalar_ring::ScalarError;

pub use algebra::{AxiomReport, HopfAlgebraData, SparseVec, StructureTensors};
pub use automorphism::{is_hopf_automorphism, HopfAutomorphism, TwistedAutomorphism};
pub use balancing::{
    convolve, dual_grouplikes, find_balancing_pairs, find_grouplikes, is_character, is_grouplike, verify_balancing,
    BalancingOrientation, BalancingPair,
};
pub use integrals::{
    distinguished_grouplikes, integral_pair, left_cointegral, left_integral, pair, r_of_aut, radford_trace,
    right_cointegral, right_integral, supertrace, trace, IntegralPair,
};
pub use io::{from_json, load_algebra, to_json, Coefficient, HopfDocument};
pub use presets::{exterior_algebra, exterior_rank, gl_to_aut, preset, taft_algebra};

/// Errors raised while building or analysing a Hopf algebra.
#[derive(Debug, thiserror::Error)]
pub enum HopfError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("antipode is not invertible")]
    SingularAntipode,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("{0} is not an exterior algebra preset")]
    NotExterior(String),
    #[error("unknown algebra preset `{0}`")]
    UnknownPreset(String),
    #[error("{what} solution space has dimension {dim}, expected 1")]
    NotOneDimensional { what: &'static str, dim: usize },
    #[error("integral pairs to zero")]
    DegenerateIntegral,
    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
