//! Quantum toroidal gl1 acting on truncated Fock spaces.
//!
//! Generators are built at evaluation parameter 1 and rescaled by the
//! evaluation scalar of their b-component on demand.

pub mod algebra;
pub mod bop;
mod error;
pub mod fock;
pub mod lattice;
pub mod tensor;

pub use algebra::{arbitrate_macdonald, relation_suite, Algebra, ConventionVerdict, RelationCheck};
pub use bop::{b_series, series_identity, series_times, BReading, MatrixSeries};
pub use error::ToroidalError;
pub use fock::{
    exp_nilpotent, EvalExponent, Fock, FockConventions, FockParams, MacdonaldBlock, MacdonaldConvention,
    PartitionTable, SignReading,
};
pub use lattice::{alpha, AlphaReading, LatticeVector, Slope};
pub use tensor::{
    coproduct_at, limit_at_zero, r_infinity, r_infinity_character, r_infinity_eigenvalue,
    r_infinity_exponent_check, r_infinity_variable, CoproductGen, CoproductTerm, CoproductTwist,
    TensorContext, TensorSpace, WallSign,
};
