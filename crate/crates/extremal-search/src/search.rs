//! Exact maximal-grid search. For each candidate grid size m the search
//! enumerates alpha paths canonically (anchored at the origin, reduced by the
//! dihedral symmetries and reversal, pruned by box budgets), then enumerates
//! beta paths against alpha's difference set, failing fast on the first
//! common difference. Grid feasibility is monotone in m, so iterative
//! deepening on m gives the exact maximum once a level exhausts with no pair.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use leaper_core::{check_pair, IntVec, Leaper, LeaperPath};

use crate::error::SearchError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLimits {
    pub max_nodes: u64,
    pub max_m: usize,
    pub time_budget: Duration,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_nodes: 200_000_000,
            max_m: 64,
            time_budget: Duration::from_secs(3600),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub n: i64,
    /// Largest m with a verified pair; exact iff `exhausted`.
    pub m_star: usize,
    /// Trivial cap from the box condition; equals m_star when exhausted.
    pub upper_bound: usize,
    pub witness: Option<(LeaperPath, LeaperPath)>,
    pub exhausted: bool,
    pub nodes: u64,
}

enum LevelOutcome {
    Found(LeaperPath, LeaperPath),
    Infeasible,
    Budget,
}

struct Budget {
    nodes: AtomicU64,
    max_nodes: u64,
    deadline: Instant,
}

impl Budget {
    fn new(limits: &SearchLimits) -> Budget {
        Budget {
            nodes: AtomicU64::new(0),
            max_nodes: limits.max_nodes,
            deadline: Instant::now() + limits.time_budget,
        }
    }

    /// Records one expanded node; false once the budget is gone.
    fn tick(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed);
        if n >= self.max_nodes {
            return false;
        }
        if n % 4096 == 0 && Instant::now() > self.deadline {
            return false;
        }
        true
    }

    fn used(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }
}

fn apply_d4(t: usize, v: IntVec) -> IntVec {
    match t {
        0 => v,
        1 => IntVec::new(-v.x, v.y),
        2 => IntVec::new(v.x, -v.y),
        3 => IntVec::new(-v.x, -v.y),
        4 => IntVec::new(v.y, v.x),
        5 => IntVec::new(-v.y, v.x),
        6 => IntVec::new(v.y, -v.x),
        _ => IntVec::new(-v.y, -v.x),
    }
}

/// Translates a vertex sequence so its bounding-box corner sits at the origin.
fn corner_normalize(seq: &[IntVec]) -> Vec<IntVec> {
    let min_x = seq.iter().map(|v| v.x).min().unwrap();
    let min_y = seq.iter().map(|v| v.y).min().unwrap();
    seq.iter()
        .map(|v| IntVec::new(v.x - min_x, v.y - min_y))
        .collect()
}

/// A path sequence is canonical when it is the lexicographic minimum of its
/// orbit under the eight dihedral transforms and reversal, compared after
/// corner normalization.
fn is_canonical(seq: &[IntVec]) -> bool {
    let base = corner_normalize(seq);
    let mut buf: Vec<IntVec> = Vec::with_capacity(seq.len());
    for t in 0..8 {
        for rev in [false, true] {
            buf.clear();
            if rev {
                buf.extend(seq.iter().rev().map(|&v| apply_d4(t, v)));
            } else {
                buf.extend(seq.iter().map(|&v| apply_d4(t, v)));
            }
            if corner_normalize(&buf) < base {
                return false;
            }
        }
    }
    true
}

/// Depth-first enumeration of origin-anchored self-avoiding leaper walks with
/// m vertices and bounding box within (max_w, max_h). Calls `sink` on each
/// complete walk until it returns true (found) or the budget dies (None).
fn enumerate_paths<F>(
    dirs: &[IntVec],
    m: usize,
    max_w: i64,
    max_h: i64,
    budget: &Budget,
    sink: &mut F,
) -> Option<bool>
where
    F: FnMut(&[IntVec]) -> Option<bool>,
{
    fn dfs<F>(
        dirs: &[IntVec],
        m: usize,
        max_w: i64,
        max_h: i64,
        budget: &Budget,
        seq: &mut Vec<IntVec>,
        bbox: (i64, i64, i64, i64),
        sink: &mut F,
    ) -> Option<bool>
    where
        F: FnMut(&[IntVec]) -> Option<bool>,
    {
        if !budget.tick() {
            return None;
        }
        if seq.len() == m {
            return sink(seq);
        }
        let last = *seq.last().unwrap();
        for &d in dirs {
            let v = last + d;
            if seq.contains(&v) {
                continue;
            }
            let nb = (
                bbox.0.min(v.x),
                bbox.1.max(v.x),
                bbox.2.min(v.y),
                bbox.3.max(v.y),
            );
            if nb.1 - nb.0 + 1 > max_w || nb.3 - nb.2 + 1 > max_h {
                continue;
            }
            seq.push(v);
            match dfs(dirs, m, max_w, max_h, budget, seq, nb, sink) {
                Some(false) => {}
                other => {
                    seq.pop();
                    return other;
                }
            }
            seq.pop();
        }
        Some(false)
    }

    let mut seq = vec![IntVec::ZERO];
    if m == 1 {
        if !budget.tick() {
            return None;
        }
        return sink(&seq);
    }
    dfs(dirs, m, max_w, max_h, budget, &mut seq, (0, 0, 0, 0), sink)
}

/// Collects all canonical alpha candidates for grid size m.
fn canonical_alphas(
    leaper: &Leaper,
    n: i64,
    m: usize,
    budget: &Budget,
) -> Option<Vec<Vec<IntVec>>> {
    // Beta needs at least min(p, q) + 1 columns and rows once m >= 2.
    let beta_min = if m >= 2 {
        leaper.p().min(leaper.q()) + 1
    } else {
        1
    };
    let max_side = n + 1 - beta_min;
    if max_side < 1 {
        return Some(Vec::new());
    }
    let dirs = leaper.directions();
    let mut out = Vec::new();
    let complete = enumerate_paths(&dirs, m, max_side, max_side, budget, &mut |seq| {
        if is_canonical(seq) {
            out.push(seq.to_vec());
        }
        Some(false)
    });
    complete.map(|_| out)
}

/// Searches for a beta partner against a fixed alpha: box budget from the
/// remaining board space, and every candidate vertex is rejected as soon as
/// it creates a difference already realized by alpha.
fn beta_search(
    leaper: &Leaper,
    alpha: &[IntVec],
    n: i64,
    budget: &Budget,
) -> Option<Option<(LeaperPath, LeaperPath)>> {
    fn dfs(
        dirs: &[IntVec],
        m: usize,
        max_w: i64,
        max_h: i64,
        budget: &Budget,
        diffs: &leaper_core::DiffSet,
        seq: &mut Vec<IntVec>,
        bbox: (i64, i64, i64, i64),
    ) -> Option<Option<Vec<IntVec>>> {
        if !budget.tick() {
            return None;
        }
        if seq.len() == m {
            return Some(Some(seq.clone()));
        }
        let last = *seq.last().unwrap();
        'dirs: for &d in dirs {
            let v = last + d;
            if seq.contains(&v) {
                continue;
            }
            let nb = (
                bbox.0.min(v.x),
                bbox.1.max(v.x),
                bbox.2.min(v.y),
                bbox.3.max(v.y),
            );
            if nb.1 - nb.0 + 1 > max_w || nb.3 - nb.2 + 1 > max_h {
                continue;
            }
            for &u in seq.iter() {
                if diffs.contains(v - u) {
                    continue 'dirs;
                }
            }
            seq.push(v);
            let r = dfs(dirs, m, max_w, max_h, budget, diffs, seq, nb);
            seq.pop();
            match r {
                Some(None) => {}
                other => return other,
            }
        }
        Some(None)
    }

    let m = alpha.len();
    let abox = leaper_core::BoundingBox::of_points(alpha);
    let max_w = n + 1 - abox.width();
    let max_h = n + 1 - abox.height();
    if max_w < 1 || max_h < 1 {
        return Some(None);
    }
    let diffs = leaper_core::difference_set(alpha);
    let dirs = leaper.directions();
    let mut seq = vec![IntVec::ZERO];
    let hit = if m == 1 {
        if !budget.tick() {
            return None;
        }
        Some(Some(seq.clone()))
    } else {
        dfs(&dirs, m, max_w, max_h, budget, &diffs, &mut seq, (0, 0, 0, 0))
    };
    hit.map(|opt| {
        opt.map(|beta| {
            (
                LeaperPath::new(alpha.to_vec(), leaper).expect("alpha is a valid path"),
                LeaperPath::new(beta, leaper).expect("beta is a valid path"),
            )
        })
    })
}

enum AlphaHit {
    Found(LeaperPath, LeaperPath),
    Budget,
}

fn alpha_hit(
    leaper: &Leaper,
    alpha: &[IntVec],
    n: i64,
    budget: &Budget,
) -> Option<AlphaHit> {
    match beta_search(leaper, alpha, n, budget) {
        None => Some(AlphaHit::Budget),
        Some(Some((a, b))) => Some(AlphaHit::Found(a, b)),
        Some(None) => None,
    }
}

fn finish_level(hit: Option<AlphaHit>) -> LevelOutcome {
    match hit {
        Some(AlphaHit::Found(a, b)) => LevelOutcome::Found(a, b),
        Some(AlphaHit::Budget) => LevelOutcome::Budget,
        None => LevelOutcome::Infeasible,
    }
}

/// One deepening level with the beta searches fanned out over alpha
/// candidates; the earliest hit in candidate order wins.
#[cfg(feature = "parallel")]
fn level_search(leaper: &Leaper, n: i64, m: usize, budget: &Budget) -> LevelOutcome {
    let alphas = match canonical_alphas(leaper, n, m, budget) {
        None => return LevelOutcome::Budget,
        Some(a) => a,
    };
    finish_level(
        alphas
            .par_iter()
            .find_map_first(|alpha| alpha_hit(leaper, alpha, n, budget)),
    )
}

fn level_search_sequential(leaper: &Leaper, n: i64, m: usize, budget: &Budget) -> LevelOutcome {
    let alphas = match canonical_alphas(leaper, n, m, budget) {
        None => return LevelOutcome::Budget,
        Some(a) => a,
    };
    finish_level(
        alphas
            .iter()
            .find_map(|alpha| alpha_hit(leaper, alpha, n, budget)),
    )
}

/// Cap on m from the box condition alone: both path boxes must hold m
/// vertices and share the board.
fn box_upper_bound(n: i64) -> usize {
    let mut best = 0i64;
    for ax in 1..=n {
        for ay in 1..=n {
            let cap = (ax * ay).min((n + 1 - ax) * (n + 1 - ay));
            best = best.max(cap);
        }
    }
    best as usize
}

fn run_search<F>(leaper: &Leaper, n: i64, limits: &SearchLimits, level: F) -> SearchResult
where
    F: Fn(&Leaper, i64, usize, &Budget) -> LevelOutcome,
{
    assert!(n >= 1);
    let budget = Budget::new(limits);
    let cap = box_upper_bound(n).min(limits.max_m);
    let mut result = SearchResult {
        n,
        m_star: 0,
        upper_bound: cap,
        witness: None,
        exhausted: false,
        nodes: 0,
    };
    for m in 1..=cap {
        match level(leaper, n, m, &budget) {
            LevelOutcome::Found(a, b) => {
                debug_assert!(check_pair(&a, &b, n).map(|r| r.is_valid()).unwrap_or(false));
                result.m_star = m;
                result.witness = Some((a, b));
            }
            LevelOutcome::Infeasible => {
                result.exhausted = true;
                result.upper_bound = result.m_star;
                break;
            }
            LevelOutcome::Budget => {
                result.exhausted = false;
                break;
            }
        }
        if m == cap {
            // The box bound itself closed the search.
            result.exhausted = true;
            result.upper_bound = result.m_star;
        }
    }
    result.nodes = budget.used();
    result
}

/// Exact largest m such that the m x m grid graph embeds in the n x n board
/// graph of `leaper`, by iterative deepening; brackets when the budget dies.
pub fn max_grid_exact(leaper: &Leaper, n: i64, limits: &SearchLimits) -> SearchResult {
    #[cfg(feature = "parallel")]
    {
        run_search(leaper, n, limits, level_search)
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_search(leaper, n, limits, level_search_sequential)
    }
}

/// Sequential reference implementation of `max_grid_exact`; the parallel path
/// must agree with it on exhaustive runs.
pub fn max_grid_exact_sequential(leaper: &Leaper, n: i64, limits: &SearchLimits) -> SearchResult {
    run_search(leaper, n, limits, level_search_sequential)
}

/// No perfect embedding: the exact maximum for an n x n board stays below n.
/// Requires the search to be exact within the budget.
pub fn no_perfect_embedding(
    leaper: &Leaper,
    n: i64,
    limits: &SearchLimits,
) -> Result<bool, SearchError> {
    assert!(n >= 2);
    let r = max_grid_exact(leaper, n, limits);
    if !r.exhausted {
        return Err(SearchError::BudgetExceeded);
    }
    Ok((r.m_star as i64) < n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn knight() -> Leaper {
        Leaper::classify(1, 2)
    }

    fn camel() -> Leaper {
        Leaper::classify(1, 3)
    }

    #[test]
    fn knight_tiny_boards() {
        let limits = SearchLimits::default();
        let r = max_grid_exact(&knight(), 1, &limits);
        assert!(r.exhausted);
        assert_eq!(r.m_star, 1);

        let r = max_grid_exact(&knight(), 3, &limits);
        assert!(r.exhausted);
        assert_eq!(r.m_star, 1);

        let r = max_grid_exact(&knight(), 4, &limits);
        assert!(r.exhausted);
        assert_eq!(r.m_star, 2);
        let (a, b) = r.witness.unwrap();
        assert!(check_pair(&a, &b, 4).unwrap().is_valid());
    }

    #[test]
    fn no_perfect_embedding_small() {
        let limits = SearchLimits::default();
        for n in 2..=4 {
            assert!(no_perfect_embedding(&knight(), n, &limits).unwrap());
            assert!(no_perfect_embedding(&camel(), n, &limits).unwrap());
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let limits = SearchLimits::default();
        for n in 1..=5 {
            let a = max_grid_exact(&knight(), n, &limits);
            let b = max_grid_exact_sequential(&knight(), n, &limits);
            assert_eq!(a.m_star, b.m_star, "n = {n}");
            assert!(a.exhausted && b.exhausted);
        }
    }

    #[test]
    fn m_star_monotone_in_n() {
        let limits = SearchLimits::default();
        let mut prev = 0;
        for n in 1..=6 {
            let r = max_grid_exact(&camel(), n, &limits);
            assert!(r.exhausted);
            assert!(r.m_star >= prev);
            prev = r.m_star;
        }
    }

    #[test]
    fn budget_reports_brackets() {
        let limits = SearchLimits {
            max_nodes: 50,
            max_m: 64,
            time_budget: Duration::from_secs(3600),
        };
        let r = max_grid_exact(&knight(), 6, &limits);
        assert!(!r.exhausted);
        assert!(r.upper_bound >= r.m_star);
    }
}
