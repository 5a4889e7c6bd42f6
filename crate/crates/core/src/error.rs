use thiserror::Error;

/// Errors produced by the library.
///
/// Everything in this crate is exact arithmetic, so most variants signal a
/// violated precondition or a broken algebraic identity rather than a
/// numerical problem.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("inexact division: {0}")]
    Divisibility(String),

    #[error("series with zero constant term is not invertible")]
    NonInvertibleSeries,

    #[error("parse error at token {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("closure has {components} components; not a knot")]
    NotKnotClosure { components: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency violation: {0}")]
    InternalConsistency(String),

    #[error("singular contraction at slot {0}: pivot has zero constant term")]
    SingularContraction(usize),

    #[error("unknown generator name `{0}` (expected a, b, phi or psi)")]
    UnknownGenerator(String),
}

pub type Result<T> = std::result::Result<T, Error>;
