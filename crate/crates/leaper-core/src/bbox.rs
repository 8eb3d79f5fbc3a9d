use serde::{Deserialize, Serialize};

use crate::vec::IntVec;

/// An axis-aligned box of integer points, always nonempty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundingBox {
    pub x_min: i64,
    pub x_max: i64,
    pub y_min: i64,
    pub y_max: i64,
}

impl BoundingBox {
    pub fn new(x_min: i64, x_max: i64, y_min: i64, y_max: i64) -> BoundingBox {
        assert!(x_min <= x_max && y_min <= y_max, "empty box");
        BoundingBox {
            x_min,
            x_max,
            y_min,
            y_max,
        }
    }

    pub fn of_point(p: IntVec) -> BoundingBox {
        BoundingBox::new(p.x, p.x, p.y, p.y)
    }

    /// Smallest box containing all points. Panics on an empty slice.
    pub fn of_points(points: &[IntVec]) -> BoundingBox {
        let mut it = points.iter();
        let first = *it.next().expect("bounding box of empty point set");
        let mut b = BoundingBox::of_point(first);
        for &p in it {
            b.expand(p);
        }
        b
    }

    pub fn expand(&mut self, p: IntVec) {
        self.x_min = self.x_min.min(p.x);
        self.x_max = self.x_max.max(p.x);
        self.y_min = self.y_min.min(p.y);
        self.y_max = self.y_max.max(p.y);
    }

    /// Number of integer columns spanned.
    pub fn width(&self) -> i64 {
        self.x_max - self.x_min + 1
    }

    /// Number of integer rows spanned.
    pub fn height(&self) -> i64 {
        self.y_max - self.y_min + 1
    }

    pub fn contains(&self, p: IntVec) -> bool {
        self.x_min <= p.x && p.x <= self.x_max && self.y_min <= p.y && p.y <= self.y_max
    }

    /// Offset that moves the min corner of this box onto `corner`.
    pub fn offset_to_corner(&self, corner: IntVec) -> IntVec {
        IntVec::new(corner.x - self.x_min, corner.y - self.y_min)
    }
}
