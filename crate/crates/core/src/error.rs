use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    /// The pattern has no edges, so there is no matching to reason about.
    #[error("term rank is zero: the pattern has no nonzero entries")]
    ZeroTermRank,
    #[error("expected a square pattern, found {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("pattern has term rank {term_rank} but {rows} rows; full row term rank required")]
    RankDeficient { term_rank: usize, rows: usize },
    #[error("{what} is {actual}, exceeding the guard of {limit}")]
    GuardExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("edge ({row}, {col}) is not in the graph")]
    EdgeNotPresent { row: usize, col: usize },
    #[error("polynomial gcd of two zero polynomials is undefined")]
    ZeroGcd,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

pub type Result<T, E = AnalysisError> = std::result::Result<T, E>;
