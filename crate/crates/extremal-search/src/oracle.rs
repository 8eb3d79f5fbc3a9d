//! Brute-force embedding oracle, independent of the path-pair machinery:
//! places the m x m grid points directly onto board cells one by one,
//! constraining each placement by its already-placed grid neighbors.

use leaper_core::{IntVec, Leaper};

/// Whether the m x m grid graph embeds into the n x n board graph, by direct
/// placement search. Board cells are indexed row-major; n*n must fit in the
/// u64 occupancy mask.
pub fn embeds_direct(leaper: &Leaper, n: i64, m: usize) -> bool {
    assert!(n >= 1 && (n * n) as usize <= 64, "oracle is for tiny boards");
    assert!(m >= 1);
    let nn = n as usize;
    let cells: Vec<IntVec> = (0..nn as i64)
        .flat_map(|y| (0..nn as i64).map(move |x| IntVec::new(x, y)))
        .collect();
    let index = |p: IntVec| -> usize { (p.y * n + p.x) as usize };
    // Leap neighbors per cell.
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); cells.len()];
    for (i, &c) in cells.iter().enumerate() {
        for d in leaper.directions() {
            let t = c + d;
            if t.x >= 0 && t.x < n && t.y >= 0 && t.y < n {
                nbrs[i].push(index(t));
            }
        }
    }

    fn place(
        pos: usize,
        m: usize,
        total: usize,
        nbrs: &[Vec<usize>],
        assign: &mut Vec<usize>,
        used: u64,
    ) -> bool {
        if pos == m * m {
            return true;
        }
        let (i, j) = (pos / m, pos % m);
        let try_cell = |cell: usize, assign: &mut Vec<usize>, used: u64| -> bool {
            if used & (1u64 << cell) != 0 {
                return false;
            }
            if i > 0 {
                let up = assign[pos - m];
                if !nbrs[up].contains(&cell) {
                    return false;
                }
            }
            assign.push(cell);
            let ok = place(pos + 1, m, total, nbrs, assign, used | (1u64 << cell));
            if !ok {
                assign.pop();
            }
            ok
        };
        if j > 0 {
            let left = assign[pos - 1];
            let candidates = nbrs[left].clone();
            for cell in candidates {
                if try_cell(cell, assign, used) {
                    return true;
                }
            }
        } else {
            for cell in 0..total {
                if try_cell(cell, assign, used) {
                    return true;
                }
            }
        }
        false
    }

    let mut assign: Vec<usize> = Vec::with_capacity(m * m);
    place(0, m, cells.len(), &nbrs, &mut assign, 0)
}

/// Largest m <= cap for which the direct-placement oracle finds an embedding.
pub fn max_m_direct(leaper: &Leaper, n: i64, cap: usize) -> usize {
    let mut best = 0;
    for m in 1..=cap {
        if embeds_direct(leaper, n, m) {
            best = m;
        } else {
            break;
        }
    }
    best
}
