#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("point is not in the root lattice")]
    NotInRootLattice,
    #[error("point is not in the shifted lattice lambda + mu + rho + Q")]
    LatticeMismatch,
    #[error("expected {expected} coordinates, got {got}")]
    Length { expected: usize, got: usize },
}
