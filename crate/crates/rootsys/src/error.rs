#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("unsupported root system {0}")]
    Unsupported(String),
    #[error("cannot parse algebra label {0:?}")]
    Parse(String),
    #[error("vector has length {got}, expected {expected}")]
    Length { expected: usize, got: usize },
    #[error("point is not in the {0} lattice")]
    NotInLattice(&'static str),
}
