use leaper_core::IntVec;

use crate::error::ChordError;
use crate::figure::{is_connected, Figure};

/// Tests the divided-chord property: a connected figure realizing n*v is
/// asserted to realize v; a `false` return is a counterexample to the
/// implementation, not to the property.
pub fn chord_check(figure: &Figure, v: IntVec, n: i64) -> Result<bool, ChordError> {
    if n < 1 {
        return Err(ChordError::PreconditionUnmet(format!(
            "divisor must be positive, got {n}"
        )));
    }
    if !is_connected(figure) {
        return Err(ChordError::PreconditionUnmet(
            "figure is not connected".into(),
        ));
    }
    if figure.realizes(v * n).is_none() {
        return Err(ChordError::PreconditionUnmet(format!(
            "figure does not realize {}",
            v * n
        )));
    }
    Ok(figure.realizes(v).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig(cells: &[(i64, i64)]) -> Figure {
        Figure::new(cells.iter().map(|&(x, y)| IntVec::new(x, y))).unwrap()
    }

    #[test]
    fn segment_subchords() {
        let seg = fig(&[(0, 0), (1, 0), (2, 0), (3, 0), (4, 0)]);
        assert!(chord_check(&seg, IntVec::new(1, 0), 4).unwrap());
        assert!(chord_check(&seg, IntVec::new(2, 0), 2).unwrap());
    }

    #[test]
    fn precondition_failures() {
        let seg = fig(&[(0, 0), (1, 0)]);
        assert!(matches!(
            chord_check(&seg, IntVec::new(1, 0), 5),
            Err(ChordError::PreconditionUnmet(_))
        ));
        let gap = fig(&[(0, 0), (2, 0)]);
        assert!(matches!(
            chord_check(&gap, IntVec::new(1, 0), 2),
            Err(ChordError::PreconditionUnmet(_))
        ));
    }

    #[test]
    fn halving_a_diagonal() {
        // Connected figures realizing (2, 2) must realize (1, 1).
        let f = fig(&[(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)]);
        assert!(chord_check(&f, IntVec::new(1, 1), 2).unwrap());
    }
}
