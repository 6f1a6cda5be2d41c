use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("invalid set composition: {0}")]
    InvalidSetComposition(String),
    #[error("invalid set partition: {0}")]
    InvalidSetPartition(String),
    #[error("subset element {element} lies outside [1, {max}]")]
    SubsetOutOfRange { element: u32, max: u32 },
    #[error("{finer} does not refine {coarser}")]
    NotRefining { finer: String, coarser: String },
    #[error("{col} is not in the coarsening interval of {row}")]
    OutsideInterval { row: String, col: String },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),
    #[error("set order `{0}` does not project to an order on integers")]
    NonProjective(String),
    #[error("set composition {0} is not strict under `{1}`")]
    NotStrict(String, String),
    #[error("not a permutation: {0}")]
    NotPermutation(String),
    #[error("blocks overlap after shifting: {0}")]
    Overlap(String),
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),
}
