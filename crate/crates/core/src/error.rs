use thiserror::Error;

/// Errors shared across the crate. Axiom *failures* are not errors: checkers
/// return a [`crate::report::CheckReport`] listing which axiom broke and
/// where. Errors are reserved for inputs that do not even parse as the kind
/// of object an operation needs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },

    #[error("tensor position out of range: {position} not in 1..={legs}")]
    PositionOutOfRange { position: usize, legs: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("element is not invertible")]
    NotInvertible,

    #[error("subspace is not closed under multiplication: product of basis vectors {i} and {j} leaves the span")]
    NotClosed { i: usize, j: usize },

    #[error("subspace is not a coideal: comultiplication of basis vector {index} leaves H tensor the span")]
    NotCoideal { index: usize },

    #[error("inclusion does not have full column rank")]
    NotInjective,

    #[error("unit element is not contained in the subspace")]
    UnitNotContained,

    #[error("element {label} is not central")]
    NotCentral { label: String },

    #[error("element {label} is not an involution")]
    NotInvolution { label: String },

    #[error("R-matrix is not triangular")]
    NotTriangularR,

    #[error("K-matrix is not triangular")]
    NotTriangularK,

    #[error("construction failed certification: {what}")]
    ConstructionFailed { what: String },

    #[error("rank {n} is not supported: {why}")]
    UnsupportedRank { n: usize, why: String },

    #[error("the two carriers live over different host Hopf algebras")]
    HostMismatch,

    #[error("unknown generator {name} for this presentation")]
    UnknownGenerator { name: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    BadInput(String),

    #[error("group table is not a group: {why}")]
    NotAGroup { why: String },
}

impl Error {
    pub fn dim(context: impl Into<String>) -> Self {
        Error::DimensionMismatch {
            context: context.into(),
        }
    }

    pub fn bad(context: impl Into<String>) -> Self {
        Error::BadInput(context.into())
    }
}
