use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("subset size {k} exceeds ground set size {n}")]
    SubsetTooLarge { n: usize, k: usize },

    #[error("rank {rank} out of range: there are {count} subsets of size {k} in {{1..{n}}}")]
    RankOutOfRange {
        n: usize,
        k: usize,
        rank: usize,
        count: usize,
    },

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("binomial({n}, {k}) overflows a 64-bit integer")]
    Overflow { n: usize, k: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("cannot mix exact and float scalars in one computation")]
    ModeMismatch,

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },

    #[error("grade {grade} out of range for a {rows}x{cols} matrix")]
    GradeOutOfRange {
        grade: usize,
        rows: usize,
        cols: usize,
    },

    #[error("non-finite float value {0}")]
    NonFinite(f64),

    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid shape spec: {0}")]
    InvalidShape(String),

    #[error("broken jacobian sampler: {0}")]
    BrokenSampler(String),
}

impl Error {
    /// True for errors caused by malformed input text rather than
    /// mathematically invalid (but well-formed) input.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::ZeroDenominator(_)
                | Error::NonFinite(_)
                | Error::InvalidShape(_)
                | Error::InvalidSubset(_)
        )
    }
}
