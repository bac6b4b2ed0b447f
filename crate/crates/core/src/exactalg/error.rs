use thiserror::Error;

use super::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("denominator vanishes under the assignment")]
    DenominatorVanishes,
    #[error("variable {0} is not assigned")]
    Unassigned(Var),
    #[error("zero input has no leading term")]
    ZeroInput,
    #[error("division by zero")]
    DivisionByZero,
    #[error("series has {got} coefficients, {needed} required")]
    InsufficientOrder { needed: usize, got: usize },
    #[error("Pade system is inconsistent")]
    PadeInconsistent,
    #[error("matrix is singular")]
    Singular,
}
