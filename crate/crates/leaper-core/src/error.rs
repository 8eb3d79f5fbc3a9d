use thiserror::Error;

use crate::vec::IntVec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("{0} is not a leap of the ({1}, {2})-leaper")]
    NotALeap(IntVec, i64, i64),

    #[error("path revisits vertex {0}")]
    SelfIntersection(IntVec),

    #[error("paths have different vertex counts: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("leaper ({0}, {1}) is not reducible")]
    NotReducible(i64, i64),

    #[error("expected a {expected} leaper, found {found}")]
    WrongClass {
        expected: &'static str,
        found: String,
    },

    #[error("parameter {name} must be at least {min}, got {got}")]
    BadParameter {
        name: &'static str,
        min: i64,
        got: i64,
    },

    #[error("difference sets overlap at {0}; the product has coincident points")]
    Overlap(IntVec),

    #[error("rhombus identity fails at grid cell ({row}, {col})")]
    RhombusViolation { row: usize, col: usize },

    #[error("embedding has {got} points, expected {expected}")]
    BadPointCount { expected: usize, got: usize },

    #[error("embedding repeats the point {0}")]
    DuplicatePoint(IntVec),

    #[error("board of size {0} is too small")]
    BoardTooSmall(i64),
}
