use kvertex_core::ExactError;
use thiserror::Error;

use crate::fock::MacdonaldConvention;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ToroidalError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("zero lattice vector has no generator")]
    ZeroVector,
    #[error("no empty-triangle decomposition for ({0},{1})")]
    NoDecomposition(i32, i32),
    #[error("central exponent of ({0},{1}) is not integral under this reading")]
    HalfIntegralAlpha(i32, i32),
    #[error("Macdonald eigencheck failed for {0:?}")]
    EigencheckFailed(MacdonaldConvention),
    #[error("no candidate convention passes the relation checks")]
    NoConvention,
    #[error("|a-component| {component} exceeds the truncation {n}")]
    TruncationTooSmall { component: i32, n: u32 },
    #[error("operator is not nilpotent on the truncation")]
    NotNilpotent,
    #[error("factor {0} is out of range for the tensor space")]
    FactorOutOfRange(usize),
}
