use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChordError {
    #[error("figure must contain at least one cell")]
    EmptyFigure,

    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),

    #[error("quadrilateral is not strictly convex in the given vertex order")]
    NotConvex,

    #[error("coefficient product is not negative; the pair is not a fork input")]
    NotFork,

    #[error("forcing failure: {0}")]
    ForcingFailure(String),

    #[error("fork procedure exceeded its iteration limit")]
    IterationLimit,
}
