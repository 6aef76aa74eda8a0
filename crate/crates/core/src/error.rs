use thiserror::Error;

/// Errors raised by the library.
///
/// Every variant falls into one of three classes (see [`ErrorKind`]) which the
/// command-line front end maps onto exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("unknown or malformed type label `{0}`")]
    BadLabel(String),

    #[error("{0:?} is not a root of {1}")]
    NotARoot(Vec<i32>, String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("generator index {index} out of range 1..={rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("not a permutation of 1..={n}: {values:?}")]
    NotAPermutation { n: usize, values: Vec<usize> },

    #[error("operation requires type A, got {0}")]
    RequiresTypeA(String),

    #[error("elements belong to different groups ({left} vs {right})")]
    MixedGroups { left: String, right: String },

    #[error("Bruhat precondition violated: {0}")]
    BruhatPrecondition(String),

    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),

    #[error("word {word:?} is a reduced word for {actual}, expected {expected}")]
    WordMismatch {
        word: Vec<usize>,
        expected: String,
        actual: String,
    },

    #[error("point is not certified cominuscule: {0}")]
    NotCominuscule(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

/// Coarse classification of [`Error`] values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input: labels, matrices, words, permutations.
    Input,
    /// Well-formed input for which the operation is not defined.
    Precondition,
    /// A computed value failed a self-check.
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::InvalidCartan(_)
            | Error::BadLabel(_)
            | Error::NotARoot(..)
            | Error::DimensionMismatch { .. }
            | Error::GeneratorOutOfRange { .. }
            | Error::NotAPermutation { .. }
            | Error::Parse(_) => ErrorKind::Input,
            Error::RequiresTypeA(_)
            | Error::MixedGroups { .. }
            | Error::BruhatPrecondition(_)
            | Error::NotReduced(_)
            | Error::WordMismatch { .. }
            | Error::NotCominuscule(_)
            | Error::Precondition(_) => ErrorKind::Precondition,
            Error::Inconsistent(_) => ErrorKind::Internal,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
