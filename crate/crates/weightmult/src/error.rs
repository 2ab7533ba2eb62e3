use lrbox_core::CoreError;
use lrbox_deconv::DeconvError;
use lrbox_multoracle::OracleError;
use lrbox_volumefn::VolumeError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum WeightError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Volume(#[from] VolumeError),
    #[error(transparent)]
    Deconv(#[from] DeconvError),
    #[error("expected {expected} coordinates, got {got}")]
    Length { expected: usize, got: usize },
    #[error("{mu:?} is not in {lambda:?} + Q")]
    NotInLattice { lambda: Vec<i64>, mu: Vec<i64> },
    #[error("only type A is supported, got {0}")]
    NotTypeA(String),
    #[error("the pair is not shielded")]
    NotShielded,
    #[error("value {value} at {at:?} is not a nonnegative integer")]
    NonInteger { at: Vec<i64>, value: String },
    #[error("quadrature value {value} is {residual} away from an integer")]
    Residual { value: f64, residual: f64 },
}
