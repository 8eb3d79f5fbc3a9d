//! Enumeration of fixed polyominoes (connected cell sets up to translation),
//! used as the exhaustive ground set for the forced-chord suites.

use std::collections::HashSet;

use leaper_core::IntVec;

use crate::figure::Figure;

const UNIT_STEPS: [IntVec; 4] = [
    IntVec::new(1, 0),
    IntVec::new(-1, 0),
    IntVec::new(0, 1),
    IntVec::new(0, -1),
];

fn canonical(mut cells: Vec<IntVec>) -> Vec<IntVec> {
    let min_x = cells.iter().map(|c| c.x).min().unwrap();
    let min_y = cells.iter().map(|c| c.y).min().unwrap();
    for c in &mut cells {
        c.x -= min_x;
        c.y -= min_y;
    }
    cells.sort();
    cells
}

/// All fixed polyominoes with 1..=max_cells cells, each translated so its
/// bounding-box corner sits at the origin. Output order is deterministic.
pub fn fixed_polyominoes(max_cells: usize) -> Vec<Vec<IntVec>> {
    assert!(max_cells >= 1);
    let mut all: Vec<Vec<IntVec>> = Vec::new();
    let mut level: Vec<Vec<IntVec>> = vec![vec![IntVec::ZERO]];
    all.extend(level.iter().cloned());
    for _ in 1..max_cells {
        let mut next: HashSet<Vec<IntVec>> = HashSet::new();
        for poly in &level {
            let occupied: HashSet<IntVec> = poly.iter().copied().collect();
            for &cell in poly {
                for &d in &UNIT_STEPS {
                    let nb = cell + d;
                    if !occupied.contains(&nb) {
                        let mut grown = poly.clone();
                        grown.push(nb);
                        next.insert(canonical(grown));
                    }
                }
            }
        }
        let mut next: Vec<Vec<IntVec>> = next.into_iter().collect();
        next.sort();
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

pub fn polyomino_figure(cells: &[IntVec]) -> Figure {
    Figure::new(cells.iter().copied()).unwrap()
}
