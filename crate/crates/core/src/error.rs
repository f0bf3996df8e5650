use thiserror::Error;

/// Errors produced by the transforms, decompositions and matrix I/O.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DsihtError {
    #[error("zero generator pair")]
    ZeroGeneratorPair,

    #[error("zero generator")]
    ZeroGenerator,

    #[error("generator needs at least 2 components, got {0}")]
    GeneratorTooShort(usize),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("matrix must be square, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("schedule has {found} stages, matrix needs {expected}")]
    ScheduleLength { expected: usize, found: usize },

    #[error("analytic engine requires an all-M schedule")]
    AnalyticRequiresM,

    #[error("rank-deficient column {0}")]
    RankDeficient(usize),

    #[error("angular representation requires real generator")]
    NonRealGenerator,

    #[error("empty matrix text")]
    EmptyInput,

    #[error("ragged rows: row {row} has {found} entries, expected {expected}")]
    RaggedRows { row: usize, expected: usize, found: usize },

    #[error("malformed entry {token:?} at row {row}, column {col}: {reason}")]
    MalformedEntry {
        row: usize,
        col: usize,
        token: String,
        reason: &'static str,
    },

    #[error("digits must be in 1..=17, got {0}")]
    InvalidDigits(usize),

    #[error("dimension must be positive")]
    ZeroDimension,
}

pub type Result<T> = std::result::Result<T, DsihtError>;
