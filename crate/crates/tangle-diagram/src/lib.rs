//! Oriented, blackboard-framed (1,1)-tangle diagrams.
//!
//! A diagram is a Morse word read bottom to top. Analysis traces the single
//! strand from the bottom endpoint to the top one and derives arcs, crossing
//! data, the Wirtinger presentation, writhe and rotation number.
//! Representations of the tangle group into twisted Hopf automorphisms are
//! loaded from JSON and checked against the Wirtinger relators.

mod diagram;
mod morse;
mod representation;
mod wirtinger;

use hopf_core::HopfError;
use scalar_ring::ScalarError;

pub use diagram::{parse_tangle, Corner, Crossing, Segment, SegmentEnd, TangleDiagram, Turn, TurnKind, WalkStep};
pub use morse::{Located, MorseEvent, MorseWord};
pub use representation::{check_representation, GeneratorSpec, RepresentationFile, TangleRepresentation};
pub use wirtinger::{underpasses, wirtinger, Letter, Relator, Underpass, WirtingerPresentation};

/// Errors from parsing diagrams and loading representations.
#[derive(Debug, thiserror::Error)]
pub enum TangleError {
    #[error("line {line}, column {column}: unknown token `{token}`")]
    Token { line: usize, column: usize, token: String },
    #[error("empty diagram")]
    Empty,
    #[error("line {line}, column {column}: strand count mismatch: {message}")]
    StrandCount { line: usize, column: usize, message: String },
    #[error("line {line}, column {column}: orientation mismatch: {message}")]
    Orientation { line: usize, column: usize, message: String },
    #[error("line {line}: {message}")]
    Boundary { line: usize, message: String },
    #[error("closure has more than one component")]
    MultipleComponents,
    #[error("representation has {found} generators, diagram has {expected}")]
    GeneratorCount { expected: usize, found: usize },
    #[error("generator `{0}` missing from the representation")]
    MissingGenerator(String),
    #[error("representation: {0}")]
    Representation(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
