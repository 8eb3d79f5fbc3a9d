use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::{Deserialize, Deserializer};
use serde::ser::{Serialize, Serializer};

/// An integer vector in the plane, in board units. Doubles as a point.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVec {
    pub x: i64,
    pub y: i64,
}

impl IntVec {
    pub const ZERO: IntVec = IntVec { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        IntVec { x, y }
    }

    /// Counterclockwise quarter turn: (x, y) -> (-y, x).
    pub const fn rot90(self) -> Self {
        IntVec {
            x: -self.y,
            y: self.x,
        }
    }

    /// Cross product z-component; zero iff the vectors are parallel.
    pub const fn cross(self, other: IntVec) -> i64 {
        self.x * other.y - self.y * other.x
    }

    pub const fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0
    }
}

impl Add for IntVec {
    type Output = IntVec;
    fn add(self, rhs: IntVec) -> IntVec {
        IntVec::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for IntVec {
    type Output = IntVec;
    fn sub(self, rhs: IntVec) -> IntVec {
        IntVec::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for IntVec {
    type Output = IntVec;
    fn neg(self) -> IntVec {
        IntVec::new(-self.x, -self.y)
    }
}

impl Mul<i64> for IntVec {
    type Output = IntVec;
    fn mul(self, k: i64) -> IntVec {
        IntVec::new(self.x * k, self.y * k)
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

// Wire format: a two-element array [x, y].
impl Serialize for IntVec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (self.x, self.y).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntVec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (x, y) = <(i64, i64)>::deserialize(deserializer)?;
        Ok(IntVec::new(x, y))
    }
}
