use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use leaper_core::{difference_set, BoundingBox, DiffSet, IntVec};

use crate::error::ChordError;

/// A finite set of grid cells; edges are implied between cells at unit
/// distance. Cells are kept sorted so iteration order is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Figure {
    cells: BTreeSet<IntVec>,
}

const UNIT_STEPS: [IntVec; 4] = [
    IntVec::new(1, 0),
    IntVec::new(-1, 0),
    IntVec::new(0, 1),
    IntVec::new(0, -1),
];

impl Figure {
    pub fn new(cells: impl IntoIterator<Item = IntVec>) -> Result<Figure, ChordError> {
        let cells: BTreeSet<IntVec> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(ChordError::EmptyFigure);
        }
        Ok(Figure { cells })
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, cell: IntVec) -> bool {
        self.cells.contains(&cell)
    }

    pub fn cells(&self) -> impl Iterator<Item = IntVec> + '_ {
        self.cells.iter().copied()
    }

    pub fn bounding_box(&self) -> BoundingBox {
        let v: Vec<IntVec> = self.cells.iter().copied().collect();
        BoundingBox::of_points(&v)
    }

    /// A witness pair (a, b) with b - a = u, if the figure realizes u.
    /// The zero vector is realized by any cell paired with itself.
    pub fn realizes(&self, u: IntVec) -> Option<(IntVec, IntVec)> {
        if u.is_zero() {
            let a = *self.cells.iter().next().unwrap();
            return Some((a, a));
        }
        self.cells
            .iter()
            .find(|&&a| self.cells.contains(&(a + u)))
            .map(|&a| (a, a + u))
    }

    /// All nonzero pairwise differences between cells.
    pub fn realized_set(&self) -> DiffSet {
        let v: Vec<IntVec> = self.cells.iter().copied().collect();
        difference_set(&v)
    }
}

/// True iff the cells form a single unit-step component.
pub fn is_connected(figure: &Figure) -> bool {
    let start = figure.cells().next().unwrap();
    let mut seen: HashSet<IntVec> = HashSet::with_capacity(figure.len());
    let mut queue = VecDeque::new();
    seen.insert(start);
    queue.push_back(start);
    while let Some(c) = queue.pop_front() {
        for &d in &UNIT_STEPS {
            let nb = c + d;
            if figure.contains(nb) && seen.insert(nb) {
                queue.push_back(nb);
            }
        }
    }
    seen.len() == figure.len()
}

/// Connected figure grown by seeded random boundary accretion inside a box.
/// Deterministic for a fixed seed; stops early if the box fills up.
pub fn random_figure(seed: u64, target_size: usize, bounding: &BoundingBox) -> Figure {
    assert!(target_size >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = IntVec::new(
        rng.gen_range(bounding.x_min..=bounding.x_max),
        rng.gen_range(bounding.y_min..=bounding.y_max),
    );
    let mut cells: HashSet<IntVec> = HashSet::with_capacity(target_size);
    cells.insert(start);
    let mut frontier: Vec<IntVec> = Vec::new();
    let mut in_frontier: HashSet<IntVec> = HashSet::new();
    let push_frontier = |cell: IntVec,
                         cells: &HashSet<IntVec>,
                         frontier: &mut Vec<IntVec>,
                         in_frontier: &mut HashSet<IntVec>| {
        for &d in &UNIT_STEPS {
            let nb = cell + d;
            if bounding.contains(nb) && !cells.contains(&nb) && in_frontier.insert(nb) {
                frontier.push(nb);
            }
        }
    };
    push_frontier(start, &cells, &mut frontier, &mut in_frontier);
    while cells.len() < target_size && !frontier.is_empty() {
        let i = rng.gen_range(0..frontier.len());
        let cell = frontier.swap_remove(i);
        in_frontier.remove(&cell);
        cells.insert(cell);
        push_frontier(cell, &cells, &mut frontier, &mut in_frontier);
    }
    Figure::new(cells).unwrap()
}

/// Cells of an axis-aligned staircase from a to b (inclusive): first along x,
/// then along y.
pub fn rectilinear_cells(a: IntVec, b: IntVec) -> Vec<IntVec> {
    let mut out = Vec::new();
    let sx = (b.x - a.x).signum();
    let mut x = a.x;
    loop {
        out.push(IntVec::new(x, a.y));
        if x == b.x {
            break;
        }
        x += sx;
    }
    let sy = (b.y - a.y).signum();
    let mut y = a.y;
    while y != b.y {
        y += sy;
        out.push(IntVec::new(b.x, y));
    }
    out
}

/// Connected figure guaranteed to realize each of the given vectors, built
/// from rectilinear spines through random anchor offsets, plus a little
/// random accretion for variety. Deterministic in the rng state.
pub fn figure_realizing(rng: &mut ChaCha8Rng, vectors: &[IntVec], extra_cells: usize) -> Figure {
    let mut cells: BTreeSet<IntVec> = BTreeSet::new();
    let mut cursor = IntVec::ZERO;
    cells.insert(cursor);
    for &v in vectors {
        let anchor = IntVec::new(rng.gen_range(-4..=4), rng.gen_range(-4..=4));
        for c in rectilinear_cells(cursor, anchor) {
            cells.insert(c);
        }
        for c in rectilinear_cells(anchor, anchor + v) {
            cells.insert(c);
        }
        cursor = anchor + v;
    }
    if extra_cells > 0 {
        let all: Vec<IntVec> = cells.iter().copied().collect();
        let b = BoundingBox::of_points(&all);
        let roomy = BoundingBox::new(b.x_min - 2, b.x_max + 2, b.y_min - 2, b.y_max + 2);
        let mut grown: HashSet<IntVec> = cells.iter().copied().collect();
        for _ in 0..extra_cells {
            let seed_cell = all[rng.gen_range(0..all.len())];
            let step = UNIT_STEPS[rng.gen_range(0..4)];
            let nb = seed_cell + step;
            if roomy.contains(nb) {
                grown.insert(nb);
            }
        }
        cells = grown.into_iter().collect();
    }
    Figure::new(cells).unwrap()
}
