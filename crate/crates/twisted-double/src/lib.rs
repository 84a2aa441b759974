//! The twisted Drinfeld double D(H)_α of a Hopf superalgebra H, graded by
//! Aut(H) × ℤ, with its R-matrix, Drinfeld, ribbon and pivot elements.
//!
//! Elements live in H*⊗H with Laurent coefficients in s = t^{1/2}; the
//! ℤ-part of a grading acts by t^{n|x|}. Every operation checks gradings.

mod battery;
mod double;
mod element;
mod ribbon;

pub use battery::{verify_double_axioms, BatteryConfig, BatteryReport};
pub use double::TwistedDouble;
pub use element::{DoubleElement, DoubleTensor};
pub use ribbon::RibbonData;

use hopf_core::HopfError;
use scalar_ring::ScalarError;

/// Errors raised by double computations.
#[derive(Debug, thiserror::Error)]
pub enum DoubleError {
    #[error("grading mismatch: expected {expected}, found {found}")]
    GradingMismatch { expected: String, found: String },
    #[error("r_H = {0} has no monomial square root over the coefficient field")]
    NoSquareRoot(String),
    #[error("no balancing pair (b, beta) exists among the enumerated group-likes")]
    NotBalanced,
    #[error("Drinfeld element is not invertible")]
    NotInvertible,
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
