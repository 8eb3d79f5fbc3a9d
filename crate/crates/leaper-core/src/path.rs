use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::bbox::BoundingBox;
use crate::error::CoreError;
use crate::leaper::Leaper;
use crate::vec::IntVec;

/// A leaper path: pairwise distinct vertices, each consecutive pair joined by a leap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeaperPath {
    vertices: Vec<IntVec>,
}

impl LeaperPath {
    /// Validates distinctness and that every step is a leap of `leaper`.
    pub fn new(vertices: Vec<IntVec>, leaper: &Leaper) -> Result<LeaperPath, CoreError> {
        if vertices.is_empty() {
            return Err(CoreError::BadParameter {
                name: "vertices",
                min: 1,
                got: 0,
            });
        }
        for w in vertices.windows(2) {
            let d = w[1] - w[0];
            if !leaper.is_leap(d) {
                return Err(CoreError::NotALeap(d, leaper.p(), leaper.q()));
            }
        }
        let mut seen = HashSet::with_capacity(vertices.len());
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(CoreError::SelfIntersection(v));
            }
        }
        Ok(LeaperPath { vertices })
    }

    /// For callers that guarantee distinctness and leap steps structurally.
    pub(crate) fn from_vertices_unchecked(vertices: Vec<IntVec>) -> LeaperPath {
        debug_assert!(!vertices.is_empty());
        LeaperPath { vertices }
    }

    /// Expands a move sequence into the path of partial sums from `start`.
    pub fn from_moves(
        start: IntVec,
        moves: &[IntVec],
        leaper: &Leaper,
    ) -> Result<LeaperPath, CoreError> {
        let mut vertices = Vec::with_capacity(moves.len() + 1);
        let mut seen = HashSet::with_capacity(moves.len() + 1);
        let mut cur = start;
        vertices.push(cur);
        seen.insert(cur);
        for &mv in moves {
            if !leaper.is_leap(mv) {
                return Err(CoreError::NotALeap(mv, leaper.p(), leaper.q()));
            }
            cur = cur + mv;
            if !seen.insert(cur) {
                return Err(CoreError::SelfIntersection(cur));
            }
            vertices.push(cur);
        }
        Ok(LeaperPath { vertices })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[IntVec] {
        &self.vertices
    }

    pub fn first(&self) -> IntVec {
        self.vertices[0]
    }

    /// The move sequence (consecutive vertex differences).
    pub fn moves(&self) -> Vec<IntVec> {
        self.vertices.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Counterclockwise quarter turn of every vertex.
    pub fn rotate90(&self) -> LeaperPath {
        LeaperPath {
            vertices: self.vertices.iter().map(|v| v.rot90()).collect(),
        }
    }

    pub fn translate(&self, offset: IntVec) -> LeaperPath {
        LeaperPath {
            vertices: self.vertices.iter().map(|&v| v + offset).collect(),
        }
    }

    /// Prefix with the first `len` vertices.
    pub fn prefix(&self, len: usize) -> LeaperPath {
        assert!(len >= 1 && len <= self.vertices.len());
        LeaperPath {
            vertices: self.vertices[..len].to_vec(),
        }
    }

    pub fn bounding_box(&self) -> BoundingBox {
        BoundingBox::of_points(&self.vertices)
    }

    pub fn difference_set(&self) -> DiffSet {
        difference_set(&self.vertices)
    }
}

/// The set of nonzero pairwise differences of a vertex set, closed under negation.
#[derive(Clone, Debug, Default)]
pub struct DiffSet {
    set: HashSet<IntVec>,
}

impl DiffSet {
    pub fn contains(&self, v: IntVec) -> bool {
        self.set.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = IntVec> + '_ {
        self.set.iter().copied()
    }

    /// Lexicographically smallest common element, if any.
    pub fn intersection_witness(&self, other: &DiffSet) -> Option<IntVec> {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .set
            .iter()
            .filter(|v| large.set.contains(v))
            .copied()
            .min()
    }
}

/// All differences u - v over distinct vertices u, v.
pub fn difference_set(vertices: &[IntVec]) -> DiffSet {
    let mut set = HashSet::with_capacity(vertices.len() * vertices.len());
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            let d = u - v;
            set.insert(d);
            set.insert(-d);
        }
    }
    DiffSet { set }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn knight() -> Leaper {
        Leaper::classify(1, 2)
    }

    #[test]
    fn from_moves_partial_sums() {
        let p = LeaperPath::from_moves(IntVec::ZERO, &[IntVec::new(1, 2)], &knight()).unwrap();
        assert_eq!(p.vertices(), &[IntVec::ZERO, IntVec::new(1, 2)]);

        let p = LeaperPath::from_moves(
            IntVec::ZERO,
            &[IntVec::new(1, 2), IntVec::new(-1, 2)],
            &knight(),
        )
        .unwrap();
        assert_eq!(
            p.vertices(),
            &[IntVec::ZERO, IntVec::new(1, 2), IntVec::new(0, 4)]
        );
    }

    #[test]
    fn from_moves_rejects_bad_input() {
        let err = LeaperPath::from_moves(IntVec::ZERO, &[IntVec::new(1, 1)], &knight());
        assert!(matches!(err, Err(CoreError::NotALeap(..))));

        let err = LeaperPath::from_moves(
            IntVec::ZERO,
            &[IntVec::new(1, 2), IntVec::new(-1, -2)],
            &knight(),
        );
        assert!(matches!(err, Err(CoreError::SelfIntersection(v)) if v == IntVec::ZERO));
    }

    #[test]
    fn rotate90_examples() {
        let p = LeaperPath::new(vec![IntVec::ZERO, IntVec::new(1, 2)], &knight()).unwrap();
        let r = p.rotate90();
        assert_eq!(r.vertices(), &[IntVec::ZERO, IntVec::new(-2, 1)]);
        let four = p.rotate90().rotate90().rotate90().rotate90();
        assert_eq!(four, p);
        assert_eq!(r.difference_set().len(), p.difference_set().len());
    }

    #[test]
    fn difference_set_examples() {
        let d = difference_set(&[IntVec::ZERO, IntVec::new(1, 2)]);
        assert_eq!(d.len(), 2);
        assert!(d.contains(IntVec::new(1, 2)));
        assert!(d.contains(IntVec::new(-1, -2)));

        let single = difference_set(&[IntVec::new(5, 5)]);
        assert!(single.is_empty());
    }

    #[test]
    fn intersection_witness_is_lex_min() {
        let a = difference_set(&[IntVec::ZERO, IntVec::new(1, 2), IntVec::new(2, 4)]);
        let b = difference_set(&[IntVec::ZERO, IntVec::new(1, 2)]);
        // Common elements are (1,2) and (-1,-2); lex-min is (-1,-2).
        assert_eq!(a.intersection_witness(&b), Some(IntVec::new(-1, -2)));
    }
}
