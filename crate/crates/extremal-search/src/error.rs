use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("a leap direction class occurs in both paths")]
    SharedSlope,

    #[error("basis is degenerate (zero determinant)")]
    Degenerate,

    #[error("the diagonal lattice is not a sublattice of the given lattice")]
    NotSublattice,

    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),

    #[error("search budget exceeded before the result was exact")]
    BudgetExceeded,
}
