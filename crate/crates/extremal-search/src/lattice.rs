//! Rank-2 integer lattices: canonical bases, membership, and intersection.

use serde::{Deserialize, Serialize};

use leaper_core::IntVec;

use crate::error::SearchError;

/// A basis of a rank-2 lattice in the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeBasis {
    pub b1: IntVec,
    pub b2: IntVec,
}

impl LatticeBasis {
    pub fn new(b1: IntVec, b2: IntVec) -> Result<LatticeBasis, SearchError> {
        if b1.cross(b2) == 0 {
            return Err(SearchError::Degenerate);
        }
        Ok(LatticeBasis { b1, b2 })
    }

    pub fn det(&self) -> i64 {
        self.b1.cross(self.b2)
    }

    pub fn fundamental_area(&self) -> i64 {
        self.det().abs()
    }

    /// Membership test: v = a*b1 + c*b2 has an integer solution iff both
    /// Cramer numerators are divisible by the determinant.
    pub fn contains(&self, v: IntVec) -> bool {
        let det = self.det();
        v.cross(self.b2) % det == 0 && self.b1.cross(v) % det == 0
    }

    /// Hermite-style canonical form: rows ((g, e), (0, f)) with g, f > 0 and
    /// 0 <= e < f. Two bases generate the same lattice iff their canonical
    /// forms are equal.
    pub fn canonical(&self) -> LatticeBasis {
        let (mut w1, mut w2) = (self.b1, self.b2);
        // Zero out the x-coordinate of w2 by the gcd of the x-coordinates.
        while w2.x != 0 {
            if w1.x == 0 {
                std::mem::swap(&mut w1, &mut w2);
                continue;
            }
            let k = w2.x.div_euclid(w1.x);
            w2 = w2 - w1 * k;
            if w2.x != 0 {
                std::mem::swap(&mut w1, &mut w2);
            }
        }
        if w1.x < 0 {
            w1 = -w1;
        }
        if w2.y < 0 {
            w2 = -w2;
        }
        debug_assert!(w1.x > 0 && w2.x == 0 && w2.y > 0);
        let e = w1.y.rem_euclid(w2.y);
        w1 = IntVec::new(w1.x, e);
        LatticeBasis { b1: w1, b2: w2 }
    }

    pub fn same_lattice(&self, other: &LatticeBasis) -> bool {
        self.canonical() == other.canonical()
    }
}

/// Column-reduces a 2 x 4 integer matrix by unimodular column operations and
/// returns a basis of its integer kernel (two 4-vectors).
fn kernel_2x4(mut k: [[i64; 4]; 2]) -> [[i64; 4]; 2] {
    let mut u = [[0i64; 4]; 4];
    for (i, row) in u.iter_mut().enumerate() {
        row[i] = 1;
    }
    let mut col_start = 0usize;
    for row in 0..2 {
        loop {
            let nonzero: Vec<usize> = (col_start..4).filter(|&c| k[row][c] != 0).collect();
            match nonzero.len() {
                0 => break,
                1 => {
                    let c = nonzero[0];
                    for r in k.iter_mut() {
                        r.swap(c, col_start);
                    }
                    for r in u.iter_mut() {
                        r.swap(c, col_start);
                    }
                    col_start += 1;
                    break;
                }
                _ => {
                    // Reduce the larger entry by the smaller.
                    let (mut ca, mut cb) = (nonzero[0], nonzero[1]);
                    if k[row][ca].abs() > k[row][cb].abs() {
                        std::mem::swap(&mut ca, &mut cb);
                    }
                    let q = k[row][cb] / k[row][ca];
                    for r in 0..2 {
                        k[r][cb] -= q * k[r][ca];
                    }
                    for r in 0..4 {
                        u[r][cb] -= q * u[r][ca];
                    }
                }
            }
        }
    }
    debug_assert_eq!(col_start, 2, "input matrix must have rank 2");
    let mut out = [[0i64; 4]; 2];
    for (j, o) in out.iter_mut().enumerate() {
        for r in 0..4 {
            o[r] = u[r][2 + j];
        }
    }
    out
}

/// Basis of the intersection of two lattices, in canonical form. A vector is
/// common exactly when it is an integer combination on both sides, i.e. the
/// stacked coefficient vector lies in the kernel of (a1 a2 -b1 -b2).
pub fn lattice_intersection(a: &LatticeBasis, b: &LatticeBasis) -> LatticeBasis {
    let m = [
        [a.b1.x, a.b2.x, -b.b1.x, -b.b2.x],
        [a.b1.y, a.b2.y, -b.b1.y, -b.b2.y],
    ];
    let kernel = kernel_2x4(m);
    let g1 = a.b1 * kernel[0][0] + a.b2 * kernel[0][1];
    let g2 = a.b1 * kernel[1][0] + a.b2 * kernel[1][1];
    LatticeBasis::new(g1, g2)
        .expect("intersection of full-rank lattices is full-rank")
        .canonical()
}

/// The diagonal lattice generated by (h, h) and (-h, h).
pub fn diagonal_lattice(h: i64) -> LatticeBasis {
    LatticeBasis::new(IntVec::new(h, h), IntVec::new(-h, h)).expect("h must be nonzero")
}

/// Verifies that the diagonal lattice with parameter h sits inside `a` with
/// index exactly h (fundamental area ratio 2h^2 / s).
pub fn partition_count_check(a: &LatticeBasis, h: i64) -> Result<bool, SearchError> {
    let hl = diagonal_lattice(h);
    if !a.contains(hl.b1) || !a.contains(hl.b2) {
        return Err(SearchError::NotSublattice);
    }
    let s = a.fundamental_area();
    let area_h = hl.fundamental_area();
    Ok(area_h % s == 0 && area_h / s == h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis(a: (i64, i64), b: (i64, i64)) -> LatticeBasis {
        LatticeBasis::new(IntVec::new(a.0, a.1), IntVec::new(b.0, b.1)).unwrap()
    }

    #[test]
    fn canonical_forms_identify_lattices() {
        let a = basis((2, 1), (0, 3));
        let b = basis((2, 4), (0, 3));
        assert!(a.same_lattice(&b));
        let c = basis((1, 0), (0, 1));
        assert!(!a.same_lattice(&c));
        // An index-2 sublattice is not the same lattice.
        let sub = basis((2, 4), (-2, 2));
        assert_eq!(sub.fundamental_area(), 2 * a.fundamental_area());
        assert!(!a.same_lattice(&sub));
        // Canonical form of the unit lattice is itself.
        assert_eq!(c.canonical(), basis((1, 0), (0, 1)));
    }

    #[test]
    fn intersection_unit_lattice() {
        let unit = basis((1, 0), (0, 1));
        assert_eq!(lattice_intersection(&unit, &unit), unit.canonical());
    }

    #[test]
    fn intersection_decoupled_axes() {
        let a = basis((2, 0), (0, 1));
        let b = basis((3, 0), (0, 1));
        let i = lattice_intersection(&a, &b);
        assert!(i.same_lattice(&basis((6, 0), (0, 1))));
    }

    #[test]
    fn intersection_contains_and_is_contained() {
        let a = basis((1, 3), (-1, 3));
        let b = basis((3, 1), (-3, 1));
        let i = lattice_intersection(&a, &b);
        assert!(a.contains(i.b1) && a.contains(i.b2));
        assert!(b.contains(i.b1) && b.contains(i.b2));
        assert!(i.same_lattice(&diagonal_lattice(3)));
    }

    #[test]
    fn membership() {
        let a = basis((1, 3), (-1, 3));
        assert!(a.contains(IntVec::new(3, 3)));
        assert!(a.contains(IntVec::new(0, 6)));
        assert!(!a.contains(IntVec::new(1, 0)));
    }

    #[test]
    fn partition_examples() {
        let a = basis((1, 3), (-1, 3));
        assert!(partition_count_check(&a, 3).unwrap());
        let c = basis((1, 3), (-3, 1));
        assert!(partition_count_check(&c, 5).unwrap());
        // Degenerate case: the diagonal lattice inside itself has index 1.
        assert!(partition_count_check(&diagonal_lattice(1), 1).unwrap());
        // Wrong h fails the index check or sublattice containment.
        assert!(matches!(
            partition_count_check(&a, 2),
            Err(SearchError::NotSublattice) | Ok(false)
        ));
        let unit = basis((1, 0), (0, 1));
        assert_eq!(partition_count_check(&unit, 1), Ok(false));
    }

    #[test]
    fn degenerate_rejected() {
        assert!(LatticeBasis::new(IntVec::new(1, 1), IntVec::new(2, 2)).is_err());
    }
}
