//! Exact algebra: Laurent polynomials in square-root variables, rational
//! functions with factored denominators, truncated z-series, dense matrices
//! over an exact field, specialization and Pade reconstruction.

mod error;
mod field;
mod laurent;
mod matrix;
mod monomial;
mod pade;
mod ratfun;
mod series;
mod specialize;

pub use error::ExactError;
pub use field::{Field, VarMap};
pub use laurent::LaurentPoly;
pub use matrix::Matrix;
pub use monomial::{Monomial, Var, NVARS};
pub use pade::{pade_reconstruct, PadeFit};
pub use ratfun::RatFun;
pub use series::SeriesZ;
pub use specialize::{Assignment, Specializer};
