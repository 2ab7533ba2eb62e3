use lrbox_boxspline::BoxSplineError;
use lrbox_core::CoreError;
use lrbox_multoracle::OracleError;

#[derive(thiserror::Error, Debug)]
pub enum VolumeError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    BoxSpline(#[from] BoxSplineError),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("expected {expected} coordinates, got {got}")]
    Length { expected: usize, got: usize },
    #[error("weights {lambda:?}, {mu:?}, {nu:?} are not compatible")]
    Incompatible { lambda: Vec<i64>, mu: Vec<i64>, nu: Vec<i64> },
    #[error("operation is only defined for type A, got {0}")]
    NotTypeA(String),
    #[error("argument {0:?} is not strictly dominant")]
    NotStrictlyDominant(Vec<String>),
    #[error("discriminant vanishes")]
    Singular,
    #[error("triple is not shielded")]
    NotShielded,
    #[error("local fit failed: {0}")]
    FitInconsistent(String),
    #[error("operator output {0} is not a nonnegative integer")]
    NonInteger(String),
    #[error("stretched coefficient at N = {n}: predicted {predicted}, actual {actual}")]
    PolynomialityViolated { n: i64, predicted: String, actual: u64 },
    #[error("volume function vanishes at the requested point")]
    ZeroVolume,
}
