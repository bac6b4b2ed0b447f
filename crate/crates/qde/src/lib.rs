//! Capping operator of the rank one quantum difference equation, the wall
//! KZ solver and the verification drivers built on them.

pub mod bundle;
pub mod capping;
pub mod classical;
pub mod cocycle;
mod error;
pub mod prop8;
pub mod rationality;
pub mod wkz;

pub use bundle::{fixed_point_normalization, localization_weight, DiagonalLineBundle, KHalfSign, LineBundleChoice};
pub use capping::{capped_from_parts, qde_residual_vanishes, solve_psi, CappingSeries, QdeConventions, RankOne};
pub use error::QdeError;
pub use rationality::{exp_series, rationality_check, RationalityReport};
pub use wkz::{
    hbar_omega_conjugation, is_block_diagonal, is_lower_triangular, solve_wkz, triple_product_holds, univ_qkz_holds,
    wkz_residual_vanishes, ConjugationOutcome, GroupSplit,
};
pub use cocycle::{
    cocycle_boundary_holds, cocycle_sides, e_series, factorization_structure, rescaled, tensor_capping, CocycleSides,
    FactorizationStructure,
};
pub use prop8::{proposition8, slope_zero_shift_independent, Proposition8Report, WallLimit, WallPoint};
pub use classical::{
    arbitrate_classical, at_generic_point, bundle_candidates, classical_check, ClassicalEntry, ClassicalReport,
    RANK_ONE_VARS,
};
