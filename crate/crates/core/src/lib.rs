//! Exact arithmetic kernel and fixed-point combinatorics.

pub mod combinat;
pub mod exactalg;

pub use combinat::{Cell, DegreeData, Monotonicity, MultiPartition, Partition};
pub use exactalg::{
    Assignment, ExactError, Field, LaurentPoly, Matrix, Monomial, RatFun, SeriesZ, Specializer,
    Var, VarMap,
};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Shorthand for an exact rational from numerator and denominator.
pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
