#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("Bernoulli number requested for odd index {0}")]
    OddBernoulli(u32),
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    #[error("lattice mismatch: {0}")]
    LatticeMismatch(String),
    #[error("interpolation system is underdetermined (rank {rank} < {unknowns} unknowns)")]
    Underdetermined { rank: usize, unknowns: usize },
    #[error("interpolation data is inconsistent with a single polynomial of degree {degree}")]
    Inconsistent { degree: u32 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("malformed measure JSON: {0}")]
    Json(String),
}
