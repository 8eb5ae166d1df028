use crate::linalg::Rational;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("partition parts must be positive integers")]
    ZeroPart,

    #[error("segre characteristic contains an empty group")]
    EmptyGroup,

    #[error("segre characteristic needs at least one group")]
    NoGroups,

    #[error("invalid rank pattern: {0}")]
    InvalidRankPattern(String),

    #[error(
        "nullity growth increases at step {step} ({previous} then {current}); \
         no matrix has this rank pattern"
    )]
    NonMonotoneGrowth {
        step: usize,
        previous: usize,
        current: usize,
    },

    #[error("blocks of total size {total} do not fit in dimension {dimension}")]
    BlocksExceedDimension { total: usize, dimension: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("{eigenvalues} eigenvalues given for {groups} groups")]
    EigenvalueCount { eigenvalues: usize, groups: usize },

    #[error("eigenvalue {0} is assigned to more than one group")]
    DuplicateEigenvalue(Rational),

    #[error(
        "characteristic polynomial has a factor of degree {remainder_degree} \
         with no rational roots; only matrices with rational eigenvalues can be analyzed"
    )]
    IrrationalEigenvalue { remainder_degree: usize },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_error(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}
