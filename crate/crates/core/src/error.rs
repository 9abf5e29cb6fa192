use thiserror::Error;

use crate::diagrams::Kind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid diagram: chord {chord} occurs {count} times (expected 2)")]
    Occurrence { chord: usize, count: usize },
    #[error("invalid diagram: framing table has {framings} entries for {chords} chords")]
    FramingCount { chords: usize, framings: usize },
    #[error("invalid diagram: chord {chord} carries two different framings")]
    FramingMismatch { chord: usize },
    #[error("kind mismatch: expected {expected}, found {found}")]
    KindMismatch { expected: Kind, found: Kind },
    #[error("operation not defined for {0} diagrams")]
    UnsupportedKind(Kind),
    #[error("cut point {index} out of range for a diagram with {arcs} arcs")]
    CutOutOfRange { index: usize, arcs: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
