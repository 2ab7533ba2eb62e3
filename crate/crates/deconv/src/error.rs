use lrbox_core::CoreError;
use lrbox_multoracle::OracleError;
use lrbox_volumefn::VolumeError;

#[derive(thiserror::Error, Debug)]
pub enum DeconvError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Volume(#[from] VolumeError),
    #[error("cannot deconvolve by the zero measure")]
    ZeroDivisor,
    #[error("measure is not a convolution multiple of the divisor: {0}")]
    NotInImage(String),
    #[error("recovered measure is not Weyl-skew at {0:?}")]
    NotSkew(Vec<i64>),
    #[error("recovered multiplicity {value} at {at:?} is not a nonnegative integer")]
    NonInteger { at: Vec<i64>, value: String },
    #[error("quadrature value {value} is {residual:e} away from an integer")]
    Residual { value: f64, residual: f64 },
    #[error("rank {rank} exceeds the quadrature limit {max}")]
    RankTooLarge { rank: usize, max: usize },
    #[error("operation is only defined for type A, got {0}")]
    NotTypeA(String),
    #[error("triple is not shielded")]
    NotShielded,
    #[error("quadrature did not converge: {coarse} at the coarse grid, {fine} at the fine grid")]
    NoConvergence { coarse: f64, fine: f64 },
}
