//! Exact computation in universal C*-algebras presented by unitary generators
//! with phase-twisted monomial relations.
//!
//! The crate works entirely over a decidable subgroup of the circle group:
//! phases are rationals modulo one plus rational combinations of formal
//! symbols (see [`phase`]). On top of that sit integer-lattice decision
//! procedures ([`lattice`]), a small presentation DSL ([`words`]), twisted
//! normal forms and bounded derivation search ([`rewrite`]), exact monomial
//! representations ([`represent`]), and the certificate engine ([`certify`])
//! that produces and independently revalidates nonsimplicity certificates.

pub mod certify;
pub mod lattice;
pub mod phase;
pub mod represent;
pub mod rewrite;
pub mod words;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Syntax error in the presentation DSL or a matrix/witness file.
    #[error("parse error at line {line}, column {col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },

    /// Syntax error in a phase literal.
    #[error("invalid phase `{text}`: {message}")]
    PhaseSyntax { text: String, message: String },

    /// A generator name that is not declared in the presentation.
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    /// Structurally invalid presentation (duplicate names, bad indices, a
    /// negative exponent on a non-unitary generator, ...).
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    /// A matrix that violates its shape or skewness invariants.
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    /// Word refers to a generator index outside the presentation.
    #[error("generator index {index} out of range (have {count} generators)")]
    GeneratorOutOfRange { index: usize, count: usize },

    /// Mismatched generator lists between presentations or witnesses.
    #[error("generator mismatch: {0}")]
    GeneratorMismatch(String),

    /// Mismatched matrix dimensions.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A symbolic phase where a purely rational one is required.
    #[error("symbolic phase entries are not supported here: {0}")]
    SymbolicEntries(String),

    /// Requested representation dimension exceeds the configured cap.
    #[error("representation dimension {dim} exceeds cap {cap}")]
    DimensionCap { dim: u128, cap: u128 },

    /// An operation was invoked outside its stated hypotheses.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// A certificate that cannot be interpreted at all (as opposed to one
    /// that interprets fine but fails validation).
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
