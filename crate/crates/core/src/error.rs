use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("invalid simplicial set: {0}")]
    InvalidSimplicialSet(String),

    #[error("invalid simplicial map: {0}")]
    InvalidMap(String),

    #[error("invalid group action: {0}")]
    InvalidAction(String),

    #[error("map is not equivariant: {0}")]
    NotEquivariant(String),

    #[error("invalid orbit diagram: {0}")]
    InvalidDiagram(String),

    #[error("the family does not contain the trivial subgroup, so the free orbit G/e is missing")]
    MissingFreeOrbit,

    #[error("homology in degree {degree} needs simplices of level {needed}, but the dimension bound is {dim}")]
    TruncationInsufficient { degree: usize, needed: usize, dim: usize },

    #[error("integer overflow during Smith normal form")]
    Overflow,

    #[error("simplicial set is disconnected: components rooted at vertices {0:?}")]
    Disconnected(Vec<usize>),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}
