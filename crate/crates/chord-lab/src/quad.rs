use serde::{Deserialize, Serialize};

use leaper_core::IntVec;

use crate::error::ChordError;
use crate::figure::{is_connected, Figure};

/// Edge label of a quadrilateral ABCD, in vertex order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    AB,
    BC,
    CD,
    DA,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::AB, Side::BC, Side::CD, Side::DA];
}

/// A realized quadrilateral side: its label, difference vector, and a witness
/// cell pair in the figure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizedSide {
    pub side: Side,
    pub vector: IntVec,
    pub witness: (IntVec, IntVec),
}

/// Strict convexity of ABCD in the given cyclic order: all four turns have
/// the same nonzero orientation.
pub fn strictly_convex(a: IntVec, b: IntVec, c: IntVec, d: IntVec) -> bool {
    let edges = [b - a, c - b, d - c, a - d];
    let mut sign = 0i64;
    for i in 0..4 {
        let cr = edges[i].cross(edges[(i + 1) % 4]);
        if cr == 0 {
            return false;
        }
        let s = cr.signum();
        if sign == 0 {
            sign = s;
        } else if s != sign {
            return false;
        }
    }
    true
}

/// For a connected figure realizing both diagonals of a strictly convex
/// quadrilateral, finds a realized side. Absence of one is a counterexample
/// to the implementation and surfaces as `ForcingFailure`.
pub fn quad_check(
    figure: &Figure,
    a: IntVec,
    b: IntVec,
    c: IntVec,
    d: IntVec,
) -> Result<RealizedSide, ChordError> {
    if !strictly_convex(a, b, c, d) {
        return Err(ChordError::NotConvex);
    }
    if !is_connected(figure) {
        return Err(ChordError::PreconditionUnmet(
            "figure is not connected".into(),
        ));
    }
    for diag in [a - c, b - d] {
        if figure.realizes(diag).is_none() {
            return Err(ChordError::PreconditionUnmet(format!(
                "figure does not realize diagonal {diag}"
            )));
        }
    }
    let vectors = [a - b, b - c, c - d, d - a];
    for (side, vector) in Side::ALL.into_iter().zip(vectors) {
        if let Some(witness) = figure.realizes(vector) {
            return Ok(RealizedSide {
                side,
                vector,
                witness,
            });
        }
    }
    Err(ChordError::ForcingFailure(format!(
        "no side of the quadrilateral {a} {b} {c} {d} is realized"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig(cells: &[(i64, i64)]) -> Figure {
        Figure::new(cells.iter().map(|&(x, y)| IntVec::new(x, y))).unwrap()
    }

    #[test]
    fn block_realizes_a_unit_square_side() {
        let block = fig(&[(0, 0), (0, 1), (1, 0), (1, 1)]);
        let r = quad_check(
            &block,
            IntVec::new(0, 0),
            IntVec::new(0, -1),
            IntVec::new(1, -1),
            IntVec::new(1, 0),
        )
        .unwrap();
        assert_eq!(r.witness.1 - r.witness.0, r.vector);
    }

    #[test]
    fn parallelogram_with_diagonal_sum_and_difference() {
        // Diagonals (1,1) and (1,-1) force a unit side.
        let a = IntVec::new(0, 0);
        let b = IntVec::new(0, -1);
        let c = IntVec::new(-1, -1);
        let d = IntVec::new(-1, 0);
        assert_eq!(a - c, IntVec::new(1, 1));
        assert_eq!(b - d, IntVec::new(1, -1));
        let f = fig(&[(0, 0), (1, 0), (1, 1), (2, 1), (2, 0), (3, 0), (3, -1)]);
        assert!(f.realizes(IntVec::new(1, 1)).is_some());
        assert!(f.realizes(IntVec::new(1, -1)).is_some());
        let r = quad_check(&f, a, b, c, d).unwrap();
        let v = r.vector;
        assert!(
            (v.x.abs() == 1 && v.y == 0) || (v.x == 0 && v.y.abs() == 1),
            "expected a unit side, got {v}"
        );
    }

    #[test]
    fn rejects_nonconvex_order() {
        let block = fig(&[(0, 0), (0, 1), (1, 0), (1, 1)]);
        // Crossed order of a square.
        let err = quad_check(
            &block,
            IntVec::new(0, 0),
            IntVec::new(1, -1),
            IntVec::new(0, -1),
            IntVec::new(1, 0),
        );
        assert_eq!(err, Err(ChordError::NotConvex));
    }

    #[test]
    fn rejects_missing_diagonal() {
        let dot = fig(&[(0, 0), (1, 0)]);
        let err = quad_check(
            &dot,
            IntVec::new(0, 0),
            IntVec::new(0, -1),
            IntVec::new(1, -1),
            IntVec::new(1, 0),
        );
        assert!(matches!(err, Err(ChordError::PreconditionUnmet(_))));
    }
}
