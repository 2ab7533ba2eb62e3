use thiserror::Error;

#[derive(Debug, Error)]
pub enum BoxSplineError {
    #[error("slice dimension {dim} exceeds the supported maximum {max}")]
    SliceTooLarge { dim: usize, max: usize },
    #[error("expected a point with {expected} coordinates, got {got}")]
    Length { expected: usize, got: usize },
    #[error(transparent)]
    Oracle(#[from] lrbox_multoracle::OracleError),
}
