//! Slope splits and covering diagnostics for half-free leaper path pairs.
//!
//! The four leap direction classes +-(p,q), +-(q,p), +-(-p,q), +-(-q,p) must
//! split between the two paths of a disjoint pair. For a two/two split both
//! sides generate lattices of one common fundamental area s (2pq, |p^2-q^2|,
//! or p^2+q^2 depending on the split), whose intersection is the diagonal
//! lattice with parameter h = s/2. Diagonal and zigzag multiplicities cap how
//! many path vertices can share one covering line of that lattice.

use std::collections::BTreeSet;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use leaper_core::{IntVec, Leaper, LeaperPath};

use crate::error::SearchError;
use crate::lattice::LatticeBasis;

/// One of the four leap direction classes, each closed under negation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DirClass {
    /// +-(p, q)
    PQ,
    /// +-(q, p)
    QP,
    /// +-(-p, q)
    NegPQ,
    /// +-(-q, p)
    NegQP,
}

impl DirClass {
    pub const ALL: [DirClass; 4] = [DirClass::PQ, DirClass::QP, DirClass::NegPQ, DirClass::NegQP];

    /// Representative vector with positive second coordinate.
    pub fn representative(self, leaper: &Leaper) -> IntVec {
        let (p, q) = (leaper.p(), leaper.q());
        match self {
            DirClass::PQ => IntVec::new(p, q),
            DirClass::QP => IntVec::new(q, p),
            DirClass::NegPQ => IntVec::new(-p, q),
            DirClass::NegQP => IntVec::new(-q, p),
        }
    }
}

/// Class of a leap direction, for a skew leaper.
pub fn class_of_move(leaper: &Leaper, d: IntVec) -> Option<DirClass> {
    let (p, q) = (leaper.p(), leaper.q());
    assert_ne!(p, q, "direction classes require a skew leaper");
    if !leaper.is_leap(d) {
        return None;
    }
    let positive_slope = d.x.signum() * d.y.signum() > 0;
    Some(if d.x.abs() == p && d.y.abs() == q {
        if positive_slope {
            DirClass::PQ
        } else {
            DirClass::NegPQ
        }
    } else if positive_slope {
        DirClass::QP
    } else {
        DirClass::NegQP
    })
}

/// Which direction classes each path of a pair uses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeSplit {
    pub alpha: BTreeSet<DirClass>,
    pub beta: BTreeSet<DirClass>,
}

impl SlopeSplit {
    /// True when some path uses at most one class.
    pub fn single_slope(&self) -> bool {
        self.alpha.len() <= 1 || self.beta.len() <= 1
    }

    pub fn two_two(&self) -> bool {
        self.alpha.len() == 2 && self.beta.len() == 2
    }
}

/// Assigns each direction class to alpha, beta, or neither. A class used by
/// both paths is a disjointness violation upstream and surfaces as an error.
pub fn slope_split(
    leaper: &Leaper,
    alpha: &LeaperPath,
    beta: &LeaperPath,
) -> Result<SlopeSplit, SearchError> {
    let classes = |path: &LeaperPath| -> BTreeSet<DirClass> {
        path.moves()
            .iter()
            .filter_map(|&m| class_of_move(leaper, m))
            .collect()
    };
    let a = classes(alpha);
    let b = classes(beta);
    if a.intersection(&b).next().is_some() {
        return Err(SearchError::SharedSlope);
    }
    Ok(SlopeSplit { alpha: a, beta: b })
}

/// Fundamental area of the slope-split lattices and its half.
pub fn fundamental_area(leaper: &Leaper, split: &SlopeSplit) -> Result<(i64, i64), SearchError> {
    if !split.two_two() {
        return Err(SearchError::PreconditionUnmet(
            "fundamental area requires a two/two slope split".into(),
        ));
    }
    let side_area = |classes: &BTreeSet<DirClass>| -> i64 {
        let reps: Vec<IntVec> = classes.iter().map(|c| c.representative(leaper)).collect();
        reps[0].cross(reps[1]).abs()
    };
    let s = side_area(&split.alpha);
    let s_beta = side_area(&split.beta);
    debug_assert_eq!(s, s_beta, "both sides share one fundamental area");
    if s % 2 != 0 {
        return Err(SearchError::PreconditionUnmet(format!(
            "fundamental area {s} is odd; expected a half-free leaper"
        )));
    }
    Ok((s, s / 2))
}

/// Lattice generated by a side of a two/two split.
pub fn split_lattice(leaper: &Leaper, classes: &BTreeSet<DirClass>) -> LatticeBasis {
    let reps: Vec<IntVec> = classes.iter().map(|c| c.representative(leaper)).collect();
    assert_eq!(reps.len(), 2);
    LatticeBasis::new(reps[0], reps[1]).expect("distinct direction classes are non-parallel")
}

/// Caps on how many path vertices share one diagonal or zigzag of the
/// diagonal lattice with parameter h.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathMultiplicities {
    /// Max vertices pairwise differing by multiples of (h, h).
    pub diagonal_pos: usize,
    /// Max vertices pairwise differing by multiples of (-h, h).
    pub diagonal_neg: usize,
    /// Max vertices on one vertical zigzag (coefficients d1, d2 on (h, h) and
    /// (-h, h) with |d1 - d2| <= 1).
    pub zigzag_vertical: usize,
    /// Horizontal analogue (coefficients c1, -c2 with |c1 - c2| <= 1).
    pub zigzag_horizontal: usize,
}

fn max_group<K: std::hash::Hash + Eq, I: Iterator<Item = K>>(keys: I) -> usize {
    let mut counts: HashMap<K, usize> = HashMap::new();
    let mut best = 0;
    for k in keys {
        let c = counts.entry(k).or_insert(0);
        *c += 1;
        best = best.max(*c);
    }
    best
}

/// Largest count of values lying in a window {t, t+1}.
fn max_window2(values: &mut Vec<i64>) -> usize {
    values.sort_unstable();
    let mut best = 0;
    let mut lo = 0;
    for hi in 0..values.len() {
        while values[hi] - values[lo] > 1 {
            lo += 1;
        }
        best = best.max(hi - lo + 1);
    }
    best
}

pub fn multiplicity_diagnostics(path: &LeaperPath, h: i64) -> PathMultiplicities {
    assert!(h >= 1);
    let verts = path.vertices();
    // Two vertices share a slope +1 diagonal iff x - y matches and x matches
    // mod h; slope -1 uses x + y.
    let diagonal_pos = max_group(verts.iter().map(|v| (v.x - v.y, v.x.rem_euclid(h))));
    let diagonal_neg = max_group(verts.iter().map(|v| (v.x + v.y, v.x.rem_euclid(h))));

    // Zigzags live inside one residue class of the diagonal lattice. Within a
    // class, express offsets as a*(h,h) + b*(-h,h); a vertical zigzag pins
    // a - b to a window of two, a horizontal one pins a + b.
    let mut cosets: HashMap<(i64, i64, i64), Vec<(i64, i64)>> = HashMap::new();
    for v in verts {
        let key = (
            v.x.rem_euclid(h),
            v.y.rem_euclid(h),
            (v.x.div_euclid(h) + v.y.div_euclid(h)).rem_euclid(2),
        );
        let entry = cosets.entry(key).or_default();
        entry.push((v.x, v.y));
    }
    let mut zigzag_vertical = 0;
    let mut zigzag_horizontal = 0;
    for members in cosets.values() {
        let (x0, y0) = members[0];
        let mut diffs: Vec<i64> = Vec::with_capacity(members.len());
        let mut sums: Vec<i64> = Vec::with_capacity(members.len());
        for &(x, y) in members {
            let (du, dv) = ((x - x0) / h, (y - y0) / h);
            // a - b = du and a + b = dv for offset a*(h,h) + b*(-h,h).
            diffs.push(du);
            sums.push(dv);
        }
        zigzag_vertical = zigzag_vertical.max(max_window2(&mut diffs));
        zigzag_horizontal = zigzag_horizontal.max(max_window2(&mut sums));
    }
    PathMultiplicities {
        diagonal_pos,
        diagonal_neg,
        zigzag_vertical,
        zigzag_horizontal,
    }
}

/// How a disjoint half-free pair relates to the covering bounds: slope split,
/// fundamental area, realization of the two diagonal generators, per-path
/// multiplicities, and the measured slack 2m - n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfFreeDiagnostic {
    pub split: SlopeSplit,
    pub case: CaseKind,
    pub s: Option<i64>,
    pub h: Option<i64>,
    pub realized_h1_alpha: bool,
    pub realized_h2_alpha: bool,
    pub realized_h1_beta: bool,
    pub realized_h2_beta: bool,
    pub alpha_multiplicities: Option<PathMultiplicities>,
    pub beta_multiplicities: Option<PathMultiplicities>,
    pub m: usize,
    pub n: i64,
    /// 2m - n; the half-integer slack m - n/2 doubled to stay integral.
    pub slack_times_two: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseKind {
    /// Some path uses at most one direction class.
    SingleSlope,
    /// Each path misses exactly one of the diagonal generators.
    Case1,
    /// One path misses both diagonal generators.
    Case2,
}

pub fn halffree_bound_report(
    leaper: &Leaper,
    alpha: &LeaperPath,
    beta: &LeaperPath,
    n: i64,
) -> Result<HalfFreeDiagnostic, SearchError> {
    if alpha.len() != beta.len() {
        return Err(SearchError::PreconditionUnmet(
            "paths must have equal vertex counts".into(),
        ));
    }
    let split = slope_split(leaper, alpha, beta)?;
    let m = alpha.len();
    let base = HalfFreeDiagnostic {
        split: split.clone(),
        case: CaseKind::SingleSlope,
        s: None,
        h: None,
        realized_h1_alpha: false,
        realized_h2_alpha: false,
        realized_h1_beta: false,
        realized_h2_beta: false,
        alpha_multiplicities: None,
        beta_multiplicities: None,
        m,
        n,
        slack_times_two: 2 * m as i64 - n,
    };
    if split.single_slope() {
        return Ok(base);
    }
    let (s, h) = fundamental_area(leaper, &split)?;
    let h1 = IntVec::new(h, h);
    let h2 = IntVec::new(-h, h);
    let da = alpha.difference_set();
    let db = beta.difference_set();
    let (a1, a2) = (da.contains(h1), da.contains(h2));
    let (b1, b2) = (db.contains(h1), db.contains(h2));
    let case = if (!a1 && !a2) || (!b1 && !b2) {
        CaseKind::Case2
    } else {
        CaseKind::Case1
    };
    Ok(HalfFreeDiagnostic {
        case,
        s: Some(s),
        h: Some(h),
        realized_h1_alpha: a1,
        realized_h2_alpha: a2,
        realized_h1_beta: b1,
        realized_h2_beta: b2,
        alpha_multiplicities: Some(multiplicity_diagnostics(alpha, h)),
        beta_multiplicities: Some(multiplicity_diagnostics(beta, h)),
        ..base
    })
}

/// The three two/two slope splits, as (alpha classes, beta classes) with the
/// class containing (p, q) kept on the alpha side.
pub fn all_two_two_splits() -> [(BTreeSet<DirClass>, BTreeSet<DirClass>); 3] {
    use DirClass::*;
    let set = |a: DirClass, b: DirClass| -> BTreeSet<DirClass> { [a, b].into_iter().collect() };
    [
        (set(PQ, NegPQ), set(QP, NegQP)),
        (set(PQ, QP), set(NegPQ, NegQP)),
        (set(PQ, NegQP), set(QP, NegPQ)),
    ]
}
