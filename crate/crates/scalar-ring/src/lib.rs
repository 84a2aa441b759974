//! Exact scalars for knot invariants.
//!
//! The coefficient field is ℚ or a cyclotomic field ℚ[q]/Φ_n(q)
//! ([`FieldElement`], [`CyclotomicField`]). Invariant values live in
//! [`LaurentScalar`], Laurent polynomials in s = t^{1/2} over that field.
//! Nothing here uses floating point.

mod field;
mod laurent;
mod matrix;
mod text;

pub use field::{CyclotomicField, FieldElement};
pub use laurent::{LaurentScalar, UnitWitness};
pub use matrix::FieldMatrix;

use thiserror::Error;

/// Errors raised by scalar arithmetic and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("cyclotomic order must be positive, got {0}")]
    InvalidOrder(u32),
    #[error("cannot combine elements of Q(zeta_{left}) and Q(zeta_{right})")]
    FieldMismatch { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("`{0}` is not a monomial")]
    NotMonomial(String),
    #[error("`{0}` has no monomial square root over the coefficient field")]
    NoSquareRoot(String),
    #[error("zero has no canonical unit form")]
    ZeroInput,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Builds the coefficient field for the n-th cyclotomic extension.
pub fn cyclotomic_field(n: u32) -> Result<std::sync::Arc<CyclotomicField>, ScalarError> {
    CyclotomicField::new(n)
}
