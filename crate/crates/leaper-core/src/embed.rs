use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::bbox::BoundingBox;
use crate::error::CoreError;
use crate::leaper::Leaper;
use crate::path::LeaperPath;
use crate::vec::IntVec;

/// An m x m array of plane points realizing the grid graph inside a leaper graph.
///
/// Entry (i, j) is stored row-major at `points[i * m + j]`. Construction checks
/// the leaper-independent invariants: pairwise distinct points and the rhombus
/// identity P(i,j) + P(i+1,j+1) = P(i,j+1) + P(i+1,j). Leap adjacency depends on
/// the owning leaper and is checked by `validate_leaps` / `verify_embedding`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridEmbedding {
    m: usize,
    points: Vec<IntVec>,
}

impl GridEmbedding {
    pub fn new(m: usize, points: Vec<IntVec>) -> Result<GridEmbedding, CoreError> {
        if m == 0 {
            return Err(CoreError::BadParameter {
                name: "m",
                min: 1,
                got: 0,
            });
        }
        if points.len() != m * m {
            return Err(CoreError::BadPointCount {
                expected: m * m,
                got: points.len(),
            });
        }
        let mut seen = HashSet::with_capacity(points.len());
        for &p in &points {
            if !seen.insert(p) {
                return Err(CoreError::DuplicatePoint(p));
            }
        }
        let e = GridEmbedding { m, points };
        for i in 0..m - 1 {
            for j in 0..m - 1 {
                if e.point(i, j) + e.point(i + 1, j + 1) != e.point(i, j + 1) + e.point(i + 1, j) {
                    return Err(CoreError::RhombusViolation { row: i, col: j });
                }
            }
        }
        Ok(e)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn point(&self, i: usize, j: usize) -> IntVec {
        self.points[i * self.m + j]
    }

    pub fn points(&self) -> &[IntVec] {
        &self.points
    }

    pub fn bounding_box(&self) -> BoundingBox {
        BoundingBox::of_points(&self.points)
    }

    pub fn translate(&self, offset: IntVec) -> GridEmbedding {
        GridEmbedding {
            m: self.m,
            points: self.points.iter().map(|&p| p + offset).collect(),
        }
    }

    /// Checks that every grid edge maps to a leap of `leaper`.
    pub fn validate_leaps(&self, leaper: &Leaper) -> Result<(), CoreError> {
        for i in 0..self.m {
            for j in 0..self.m {
                if j + 1 < self.m {
                    let d = self.point(i, j + 1) - self.point(i, j);
                    if !leaper.is_leap(d) {
                        return Err(CoreError::NotALeap(d, leaper.p(), leaper.q()));
                    }
                }
                if i + 1 < self.m {
                    let d = self.point(i + 1, j) - self.point(i, j);
                    if !leaper.is_leap(d) {
                        return Err(CoreError::NotALeap(d, leaper.p(), leaper.q()));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Outcome of checking a path pair against the embedding criterion for board size n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    /// Difference sets of the two paths are disjoint.
    pub disjoint: bool,
    /// Bounding boxes satisfy a_x + b_x <= n + 1 and a_y + b_y <= n + 1.
    pub box_ok: bool,
    /// A common difference when `disjoint` is false.
    pub witness_overlap: Option<IntVec>,
    pub a_x: i64,
    pub a_y: i64,
    pub b_x: i64,
    pub b_y: i64,
    /// Smallest board size for which the box condition holds.
    pub min_n: i64,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.disjoint && self.box_ok
    }
}

/// Checks the two conditions under which the product of a path pair embeds the
/// m x m grid graph into the n x n leaper graph: disjoint difference sets, and
/// bounding boxes that together fit the board.
pub fn check_pair(
    alpha: &LeaperPath,
    beta: &LeaperPath,
    n: i64,
) -> Result<VerificationReport, CoreError> {
    if alpha.len() != beta.len() {
        return Err(CoreError::LengthMismatch(alpha.len(), beta.len()));
    }
    let da = alpha.difference_set();
    let db = beta.difference_set();
    let witness_overlap = da.intersection_witness(&db);
    let ba = alpha.bounding_box();
    let bb = beta.bounding_box();
    let (a_x, a_y) = (ba.width(), ba.height());
    let (b_x, b_y) = (bb.width(), bb.height());
    let min_n = (a_x + b_x).max(a_y + b_y) - 1;
    Ok(VerificationReport {
        disjoint: witness_overlap.is_none(),
        box_ok: min_n <= n,
        witness_overlap,
        a_x,
        a_y,
        b_x,
        b_y,
        min_n,
    })
}

/// The product embedding P(i,j) = A_i + B_j.
///
/// Fails with `Overlap` when the paths share a difference, which is exactly
/// when two product points would coincide.
pub fn product(alpha: &LeaperPath, beta: &LeaperPath) -> Result<GridEmbedding, CoreError> {
    if alpha.len() != beta.len() {
        return Err(CoreError::LengthMismatch(alpha.len(), beta.len()));
    }
    let m = alpha.len();
    let mut points = Vec::with_capacity(m * m);
    for &a in alpha.vertices() {
        for &b in beta.vertices() {
            points.push(a + b);
        }
    }
    let mut seen = HashSet::with_capacity(points.len());
    for &p in &points {
        if !seen.insert(p) {
            let witness = alpha
                .difference_set()
                .intersection_witness(&beta.difference_set())
                .unwrap_or(p);
            return Err(CoreError::Overlap(witness));
        }
    }
    GridEmbedding::new(m, points)
}

/// Recovers the two paths whose product is the embedding, normalized so that
/// A_1 = (0, 0) and B_j = P(1, j). Product of the result reproduces the input.
pub fn factor(e: &GridEmbedding) -> Result<(LeaperPath, LeaperPath), CoreError> {
    let m = e.m();
    for i in 0..m.saturating_sub(1) {
        for j in 0..m - 1 {
            if e.point(i, j) + e.point(i + 1, j + 1) != e.point(i, j + 1) + e.point(i + 1, j) {
                return Err(CoreError::RhombusViolation { row: i, col: j });
            }
        }
    }
    let origin = e.point(0, 0);
    let alpha: Vec<IntVec> = (0..m).map(|i| e.point(i, 0) - origin).collect();
    let beta: Vec<IntVec> = (0..m).map(|j| e.point(0, j)).collect();
    Ok((
        LeaperPath::from_vertices_unchecked(alpha),
        LeaperPath::from_vertices_unchecked(beta),
    ))
}

/// Independent embedding oracle: points pairwise distinct, bounding box within
/// n x n, and every grid edge a leap. Deliberately avoids the factorization.
pub fn verify_embedding(e: &GridEmbedding, leaper: &Leaper, n: i64) -> bool {
    let m = e.m();
    let mut seen = HashSet::with_capacity(m * m);
    for &p in e.points() {
        if !seen.insert(p) {
            return false;
        }
    }
    let b = e.bounding_box();
    if b.width() > n || b.height() > n {
        return false;
    }
    for i in 0..m {
        for j in 0..m {
            if j + 1 < m && !leaper.is_leap(e.point(i, j + 1) - e.point(i, j)) {
                return false;
            }
            if i + 1 < m && !leaper.is_leap(e.point(i + 1, j) - e.point(i, j)) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn knight() -> Leaper {
        Leaper::classify(1, 2)
    }

    fn path(verts: &[(i64, i64)], leaper: &Leaper) -> LeaperPath {
        LeaperPath::new(verts.iter().map(|&(x, y)| IntVec::new(x, y)).collect(), leaper).unwrap()
    }

    #[test]
    fn product_2x2() {
        let a = path(&[(0, 0), (1, 2)], &knight());
        let b = path(&[(0, 0), (2, -1)], &knight());
        let e = product(&a, &b).unwrap();
        assert_eq!(e.m(), 2);
        let pts: HashSet<IntVec> = e.points().iter().copied().collect();
        for &(x, y) in &[(0, 0), (1, 2), (2, -1), (3, 1)] {
            assert!(pts.contains(&IntVec::new(x, y)));
        }
    }

    #[test]
    fn product_1x1() {
        let a = path(&[(0, 0)], &knight());
        let e = product(&a, &a).unwrap();
        assert_eq!(e.m(), 1);
        assert_eq!(e.points(), &[IntVec::ZERO]);
    }

    #[test]
    fn product_rejects_overlap() {
        let a = path(&[(0, 0), (1, 2)], &knight());
        let err = product(&a, &a);
        assert!(matches!(err, Err(CoreError::Overlap(_))));
    }

    #[test]
    fn factor_round_trip() {
        let a = path(&[(3, 3), (4, 5), (5, 3)], &knight());
        let b = path(&[(0, 0), (2, 1), (4, 0)], &knight());
        let e = product(&a, &b).unwrap();
        let (fa, fb) = factor(&e).unwrap();
        // Normalization: alpha translated so A_1 = origin, beta absorbs the offset.
        let shift = a.first();
        assert_eq!(fa.vertices(), a.translate(-shift).vertices());
        assert_eq!(fb.vertices(), b.translate(shift).vertices());
        let back = product(&fa, &fb).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn factor_2x2_example() {
        let pts = vec![
            IntVec::new(0, 0),
            IntVec::new(2, -1),
            IntVec::new(1, 2),
            IntVec::new(3, 1),
        ];
        let e = GridEmbedding::new(2, pts).unwrap();
        let (a, b) = factor(&e).unwrap();
        assert_eq!(a.vertices(), &[IntVec::ZERO, IntVec::new(1, 2)]);
        assert_eq!(b.vertices(), &[IntVec::ZERO, IntVec::new(2, -1)]);
    }

    #[test]
    fn factor_singleton() {
        let e = GridEmbedding::new(1, vec![IntVec::new(7, -2)]).unwrap();
        let (a, b) = factor(&e).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(b.vertices(), &[IntVec::new(7, -2)]);
    }

    #[test]
    fn rhombus_violation_detected() {
        let pts = vec![
            IntVec::new(0, 0),
            IntVec::new(1, 2),
            IntVec::new(2, 1),
            IntVec::new(4, 2),
        ];
        assert!(matches!(
            GridEmbedding::new(2, pts),
            Err(CoreError::RhombusViolation { .. })
        ));
    }

    #[test]
    fn check_pair_identical_paths_overlap() {
        let a = path(&[(0, 0), (1, 2)], &knight());
        let r = check_pair(&a, &a, 100).unwrap();
        assert!(!r.disjoint);
        let w = r.witness_overlap.unwrap();
        assert!(a.difference_set().contains(w));
    }

    #[test]
    fn check_pair_length_mismatch() {
        let a = path(&[(0, 0), (1, 2)], &knight());
        let b = path(&[(0, 0)], &knight());
        assert!(matches!(
            check_pair(&a, &b, 5),
            Err(CoreError::LengthMismatch(2, 1))
        ));
    }

    #[test]
    fn verify_singleton_on_unit_board() {
        let e = GridEmbedding::new(1, vec![IntVec::new(1, 1)]).unwrap();
        assert!(verify_embedding(&e, &knight(), 1));
    }
}
