//! Equivariant localization data at quasimap fixed points and the bare
//! descendent vertex.

mod character;
mod descendent;
mod facver;
mod vertex;

pub use character::{Character, Framing};
pub use descendent::Descendent;
pub use facver::{facver_check, facver_check_termwise, normalized as facver_normalized, FacverEntry, FacverReport, ShiftForm};
pub use vertex::{
    bare_vertex, box_weight, descendent_eval, fixed_point_term, roof_hat, s_character,
    taut_character, tvir_character, Quotient, VertexConvention,
};

use kvertex_core::combinat::CombinatError;
use kvertex_core::ExactError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocError {
    #[error(transparent)]
    Combinat(#[from] CombinatError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("character has a constant term {0}")]
    ConstantTermPresent(i64),
    #[error("character is not divisible by (q - 1)")]
    NonDivisible,
    #[error("a->0 leading exponent {0} is nonzero")]
    NonzeroLeadingExponent(i32),
    #[error("framing has {framing} entries but the shape has rank {rank}")]
    FramingMismatch { framing: usize, rank: usize },
}
