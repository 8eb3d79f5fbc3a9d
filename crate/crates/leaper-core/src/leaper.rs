use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::vec::IntVec;

/// Classification of a (p, q)-leaper by the structure of its board graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LeaperClass {
    /// p = 0, q = 0, or p = q: not a skew leaper.
    NonSkew,
    /// Skew with gcd(p, q) = d >= 2; the problem reduces to (p/d, q/d).
    Reducible(i64),
    /// Skew, coprime, p + q odd: the board graph is connected on large boards.
    Free,
    /// Skew, coprime, both odd: the board graph splits into two parity components.
    HalfFree,
}

impl LeaperClass {
    pub fn name(self) -> &'static str {
        match self {
            LeaperClass::NonSkew => "non-skew",
            LeaperClass::Reducible(_) => "reducible",
            LeaperClass::Free => "free",
            LeaperClass::HalfFree => "half-free",
        }
    }
}

/// A (p, q)-leaper together with its classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Leaper {
    p: i64,
    q: i64,
    class: LeaperClass,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Leaper {
    /// Classifies the (p, q)-leaper. Exactly one class applies.
    pub fn classify(p: i64, q: i64) -> Leaper {
        assert!(p >= 0 && q >= 0, "leap lengths must be non-negative");
        let class = if p == 0 || q == 0 || p == q {
            LeaperClass::NonSkew
        } else {
            let d = gcd(p, q);
            if d >= 2 {
                LeaperClass::Reducible(d)
            } else if (p + q) % 2 == 1 {
                LeaperClass::Free
            } else {
                LeaperClass::HalfFree
            }
        };
        Leaper { p, q, class }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn class(&self) -> LeaperClass {
        self.class
    }

    pub fn is_free(&self) -> bool {
        self.class == LeaperClass::Free
    }

    pub fn is_half_free(&self) -> bool {
        self.class == LeaperClass::HalfFree
    }

    /// True iff d is a legal leap: {|dx|, |dy|} = {p, q}.
    pub fn is_leap(&self, d: IntVec) -> bool {
        let (a, b) = (d.x.abs(), d.y.abs());
        (a == self.p && b == self.q) || (a == self.q && b == self.p)
    }

    /// The distinct leap directions, in lexicographic order.
    pub fn directions(&self) -> Vec<IntVec> {
        let mut dirs = Vec::with_capacity(8);
        for &(a, b) in &[(self.p, self.q), (self.q, self.p)] {
            for &sx in &[-1i64, 1] {
                for &sy in &[-1i64, 1] {
                    dirs.push(IntVec::new(sx * a, sy * b));
                }
            }
        }
        dirs.sort();
        dirs.dedup();
        dirs
    }
}

/// Reduces a reducible leaper problem: (p, q, n) -> (p/d, q/d, ceil(n/d)).
pub fn reduce(p: i64, q: i64, n: i64) -> Result<(i64, i64, i64), CoreError> {
    match Leaper::classify(p, q).class() {
        LeaperClass::Reducible(d) => Ok((p / d, q / d, (n + d - 1) / d)),
        _ => Err(CoreError::NotReducible(p, q)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        assert_eq!(Leaper::classify(1, 2).class(), LeaperClass::Free);
        assert_eq!(Leaper::classify(1, 3).class(), LeaperClass::HalfFree);
        assert_eq!(Leaper::classify(2, 4).class(), LeaperClass::Reducible(2));
        assert_eq!(Leaper::classify(3, 3).class(), LeaperClass::NonSkew);
        assert_eq!(Leaper::classify(0, 5).class(), LeaperClass::NonSkew);
        assert_eq!(Leaper::classify(2, 3).class(), LeaperClass::Free);
        assert_eq!(Leaper::classify(3, 5).class(), LeaperClass::HalfFree);
    }

    #[test]
    fn exactly_one_class_over_small_range() {
        for p in 0..=12 {
            for q in 0..=12 {
                let l = Leaper::classify(p, q);
                let skew = p != 0 && q != 0 && p != q;
                let d = gcd(p, q);
                let expected = if !skew {
                    LeaperClass::NonSkew
                } else if d >= 2 {
                    LeaperClass::Reducible(d)
                } else if (p + q) % 2 == 1 {
                    LeaperClass::Free
                } else {
                    LeaperClass::HalfFree
                };
                assert_eq!(l.class(), expected, "({p}, {q})");
            }
        }
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(2, 4, 9).unwrap(), (1, 2, 5));
        assert_eq!(reduce(3, 6, 6).unwrap(), (1, 2, 2));
        assert_eq!(reduce(2, 6, 2).unwrap(), (1, 3, 1));
        assert!(matches!(reduce(1, 2, 5), Err(CoreError::NotReducible(1, 2))));
    }

    #[test]
    fn reduce_lands_on_free_or_half_free() {
        for p in 1..=12 {
            for q in 1..=12 {
                if let Ok((p2, q2, _)) = reduce(p, q, 10) {
                    let c = Leaper::classify(p2, q2).class();
                    assert!(matches!(c, LeaperClass::Free | LeaperClass::HalfFree));
                }
            }
        }
    }

    #[test]
    fn knight_directions() {
        let knight = Leaper::classify(1, 2);
        let dirs = knight.directions();
        assert_eq!(dirs.len(), 8);
        assert!(dirs.contains(&IntVec::new(-2, 1)));
        assert!(knight.is_leap(IntVec::new(2, -1)));
        assert!(!knight.is_leap(IntVec::new(2, 2)));
    }
}
