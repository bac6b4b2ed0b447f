use kvertex_core::ExactError;
use kvertex_locvertex::LocError;
use kvertex_toroidal::ToroidalError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QdeError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Toroidal(#[from] ToroidalError),
    #[error(transparent)]
    Loc(#[from] LocError),
    #[error("resonant specialization: q^{order} O(1)_{col} = O(1)_{row}")]
    ResonantSpecialization { order: usize, row: usize, col: usize },
    #[error("1 - Ad is not invertible at entry ({row}, {col})")]
    NonInvertibleAd { row: usize, col: usize },
    #[error("diagonal part is not block diagonal in the bidegree")]
    NotBlockDiagonal,
    #[error("no specialization without resonances after {0} draws")]
    NoGenericPoint(usize),
    #[error("operator of size {got} where {expected} was expected")]
    DimensionMismatch { expected: usize, got: usize },
}
