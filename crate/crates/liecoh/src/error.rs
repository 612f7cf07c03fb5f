//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the library.
///
/// The split mirrors the CLI exit codes: `Parse`/`Shape` are malformed-input
/// problems, `Invariant` is a mathematical check that failed on well-formed
/// input, and `Inconsistent` means two independent computations of the same
/// quantity disagreed (always a bug worth loud failure).
#[derive(Debug, Error)]
pub enum Error {
    /// Input text or JSON could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// Operands have incompatible dimensions or malformed shape.
    #[error("shape error: {0}")]
    Shape(String),
    /// A mathematical invariant (axiom, homomorphism property, ...) failed.
    #[error("invariant violated: {0}")]
    Invariant(String),
    /// Two independent computations of the same value disagreed.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
