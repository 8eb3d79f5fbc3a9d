//! Explicit path constructions that realize large grid graphs inside leaper
//! graphs, and the shear reduction from half-free to free leapers.

use serde::{Deserialize, Serialize};

use crate::embed::{product, GridEmbedding};
use crate::error::CoreError;
use crate::leaper::{Leaper, LeaperClass};
use crate::path::LeaperPath;
use crate::vec::IntVec;

/// A constructed path pair together with the grid and board sizes it realizes.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Construction {
    pub alpha: LeaperPath,
    pub beta: LeaperPath,
    /// Grid size: alpha and beta have m vertices each.
    pub m: i64,
    /// Board size at which the pair passes verification.
    pub n: i64,
    /// Leap lengths in the orientation the construction used internally.
    pub oriented_p: i64,
    pub oriented_q: i64,
    pub swapped: bool,
}

fn repeat_pair(seq: &mut Vec<IntVec>, a: IntVec, b: IntVec, times: i64) {
    for _ in 0..times {
        seq.push(a);
        seq.push(b);
    }
}

/// Move block for the free construction with p odd and q even; 4p moves that
/// climb to height 2pq and return, drifting 4p to the right.
fn free_block(p: i64, q: i64) -> Vec<IntVec> {
    let mut seq = Vec::with_capacity(4 * p as usize);
    repeat_pair(&mut seq, IntVec::new(p, q), IntVec::new(-p, q), p - 1);
    seq.push(IntVec::new(p, q));
    seq.push(IntVec::new(p, q));
    repeat_pair(&mut seq, IntVec::new(p, -q), IntVec::new(-p, -q), p - 1);
    seq.push(IntVec::new(p, -q));
    seq.push(IntVec::new(p, -q));
    seq
}

/// Move block for the half-free construction with p >= 3; 2p moves that climb
/// to height q(p - 1) and return, drifting 4p to the right.
fn halffree_block(p: i64, q: i64) -> Vec<IntVec> {
    let mut seq = Vec::with_capacity(2 * p as usize);
    repeat_pair(&mut seq, IntVec::new(p, q), IntVec::new(-p, q), (p - 3) / 2);
    seq.push(IntVec::new(p, q));
    seq.push(IntVec::new(p, q));
    repeat_pair(&mut seq, IntVec::new(p, -q), IntVec::new(-p, -q), (p - 1) / 2);
    seq.push(IntVec::new(p, -q));
    seq.push(IntVec::new(p, q));
    seq
}

fn build_pair(
    leaper: &Leaper,
    block: Vec<IntVec>,
    k: i64,
    m: i64,
    n: i64,
    oriented: (i64, i64),
    swapped: bool,
) -> Result<Construction, CoreError> {
    let mut moves = Vec::with_capacity(block.len() * k as usize);
    for _ in 0..k {
        moves.extend_from_slice(&block);
    }
    let alpha = LeaperPath::from_moves(IntVec::ZERO, &moves, leaper)?;
    let beta = alpha.rotate90();
    debug_assert_eq!(alpha.len() as i64, m);
    debug_assert!(crate::embed::check_pair(&alpha, &beta, n)
        .map(|r| r.is_valid())
        .unwrap_or(false));
    Ok(Construction {
        alpha,
        beta,
        m,
        n,
        oriented_p: oriented.0,
        oriented_q: oriented.1,
        swapped,
    })
}

/// For a free leaper, builds a pair realizing the (4kp+1)-grid on the
/// (4kp+2pq+1)-board, where p is the odd leap length.
pub fn free_construction(leaper: &Leaper, k: i64) -> Result<Construction, CoreError> {
    if leaper.class() != LeaperClass::Free {
        return Err(CoreError::WrongClass {
            expected: "free",
            found: leaper.class().name().to_string(),
        });
    }
    if k < 1 {
        return Err(CoreError::BadParameter {
            name: "k",
            min: 1,
            got: k,
        });
    }
    // Orient so p is odd and q even; a free leaper has one of each.
    let swapped = leaper.p() % 2 == 0;
    let (p, q) = if swapped {
        (leaper.q(), leaper.p())
    } else {
        (leaper.p(), leaper.q())
    };
    let m = 4 * k * p + 1;
    let n = 4 * k * p + 2 * p * q + 1;
    build_pair(leaper, free_block(p, q), k, m, n, (p, q), swapped)
}

/// For a half-free leaper, builds a pair realizing the (2kp+1)-grid on the
/// (4kp+pq+1)-board, where p is oriented to be at least 3.
pub fn halffree_construction(leaper: &Leaper, k: i64) -> Result<Construction, CoreError> {
    if leaper.class() != LeaperClass::HalfFree {
        return Err(CoreError::WrongClass {
            expected: "half-free",
            found: leaper.class().name().to_string(),
        });
    }
    if k < 1 {
        return Err(CoreError::BadParameter {
            name: "k",
            min: 1,
            got: k,
        });
    }
    let swapped = leaper.p() < 3;
    let (p, q) = if swapped {
        (leaper.q(), leaper.p())
    } else {
        (leaper.p(), leaper.q())
    };
    let m = 2 * k * p + 1;
    let n = 4 * k * p + p * q + 1;
    build_pair(leaper, halffree_block(p, q), k, m, n, (p, q), swapped)
}

/// Shear-and-scale map (x, y) -> (x - y, x + y). Sends leaps of the derived
/// free leaper onto leaps of the original half-free leaper.
pub fn phi_map(v: IntVec) -> IntVec {
    IntVec::new(v.x - v.y, v.x + v.y)
}

/// The free leaper (|p-q|/2, (p+q)/2) derived from a half-free leaper.
pub fn derived_free_leaper(leaper: &Leaper) -> Result<Leaper, CoreError> {
    if leaper.class() != LeaperClass::HalfFree {
        return Err(CoreError::WrongClass {
            expected: "half-free",
            found: leaper.class().name().to_string(),
        });
    }
    let p2 = (leaper.p() - leaper.q()).abs() / 2;
    let q2 = (leaper.p() + leaper.q()) / 2;
    let derived = Leaper::classify(p2, q2);
    debug_assert_eq!(derived.class(), LeaperClass::Free);
    Ok(derived)
}

/// A grid embedding for a half-free leaper obtained by mapping a free
/// construction for the derived leaper through `phi_map`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PhiEmbedding {
    pub embedding: GridEmbedding,
    pub derived_p: i64,
    pub derived_q: i64,
    /// Grid size actually realized.
    pub m: i64,
    /// Board size the embedding fits in.
    pub n: i64,
}

/// Builds the largest phi-image of a derived free construction that fits an
/// n x n board. The construction path is extended block by block and then cut
/// to the longest prefix whose product still fits after the shear; whole
/// blocks alone are too coarse for tight boards.
pub fn phi_embed(leaper: &Leaper, n: i64) -> Result<PhiEmbedding, CoreError> {
    let derived = derived_free_leaper(leaper)?;
    if n < 1 {
        return Err(CoreError::BoardTooSmall(n));
    }
    let p2 = if derived.p() % 2 == 1 {
        derived.p()
    } else {
        derived.q()
    };

    // In sheared coordinates u = x - y, v = x + y, the rotated partner of a
    // prefix has u-span equal to the prefix's v-span and vice versa, so the
    // sheared product occupies a square of side (u-span + v-span + 1).
    let mut k = 1i64;
    let best = loop {
        let c = free_construction(&derived, k)?;
        let verts = c.alpha.vertices();
        let mut best_len = 0usize;
        let (mut umin, mut umax, mut vmin, mut vmax) = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
        for (idx, w) in verts.iter().enumerate() {
            let (u, v) = (w.x - w.y, w.x + w.y);
            umin = umin.min(u);
            umax = umax.max(u);
            vmin = vmin.min(v);
            vmax = vmax.max(v);
            if (umax - umin) + (vmax - vmin) + 1 <= n {
                best_len = idx + 1;
            } else {
                break;
            }
        }
        if best_len == 0 {
            return Err(CoreError::BoardTooSmall(n));
        }
        if best_len < verts.len() {
            break c.alpha.prefix(best_len);
        }
        // The whole path fits; a longer one might too.
        k += 1;
        if 4 * k * p2 + 1 > 2 * n {
            break c.alpha;
        }
    };

    let alpha = best;
    let beta = alpha.rotate90();
    let raw = product(&alpha, &beta)?;
    let sheared: Vec<IntVec> = raw.points().iter().map(|&p| phi_map(p)).collect();
    let sheared = GridEmbedding::new(raw.m(), sheared)?;
    let offset = sheared.bounding_box().offset_to_corner(IntVec::new(1, 1));
    let embedding = sheared.translate(offset);
    debug_assert!(crate::embed::verify_embedding(&embedding, leaper, n));
    Ok(PhiEmbedding {
        derived_p: derived.p(),
        derived_q: derived.q(),
        m: embedding.m() as i64,
        n,
        embedding,
    })
}
