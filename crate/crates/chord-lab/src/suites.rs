//! Counterexample-hunting suites: exhaustive over small polyominoes for the
//! divided-chord property, seeded randomized for the quadrilateral and fork
//! properties. Cases are independent, so they parallelize over indices; the
//! per-case rng is derived from (seed, index) and results do not depend on
//! scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use leaper_core::IntVec;

use crate::chord::chord_check;
use crate::figure::{figure_realizing, Figure};
use crate::fork::{fork_trace, Basis};
use crate::polyomino::{fixed_polyominoes, polyomino_figure};
use crate::quad::{quad_check, strictly_convex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    /// Individual property checks performed.
    pub cases: u64,
    pub failures: u64,
    /// Description of the first failing case, by case order.
    pub counterexample: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn merge(mut self, other: SuiteReport) -> SuiteReport {
        self.cases += other.cases;
        self.failures += other.failures;
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
        self
    }

    fn empty() -> SuiteReport {
        SuiteReport {
            cases: 0,
            failures: 0,
            counterexample: None,
        }
    }
}

fn case_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn map_reduce<F>(total: u64, per_case: F) -> SuiteReport
where
    F: Fn(u64) -> SuiteReport + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..total)
            .into_par_iter()
            .map(per_case)
            .reduce(SuiteReport::empty, SuiteReport::merge)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_reduce_sequential(total, per_case)
    }
}

fn map_reduce_sequential<F>(total: u64, per_case: F) -> SuiteReport
where
    F: Fn(u64) -> SuiteReport,
{
    (0..total)
        .map(per_case)
        .fold(SuiteReport::empty(), SuiteReport::merge)
}

fn describe_figure(figure: &Figure) -> String {
    let cells: Vec<String> = figure.cells().map(|c| c.to_string()).collect();
    cells.join(" ")
}

// ---------------------------------------------------------------------------
// Divided-chord suite (exhaustive over fixed polyominoes)
// ---------------------------------------------------------------------------

fn chord_cases_for(poly: &[IntVec], max_n: i64) -> SuiteReport {
    let figure = polyomino_figure(poly);
    let mut report = SuiteReport::empty();
    for d in figure.realized_set().iter() {
        for n in 2..=max_n {
            if d.x % n == 0 && d.y % n == 0 {
                let v = IntVec::new(d.x / n, d.y / n);
                report.cases += 1;
                if !chord_check(&figure, v, n).unwrap() {
                    report.failures += 1;
                    if report.counterexample.is_none() {
                        report.counterexample = Some(format!(
                            "figure [{}] realizes {d} but not {v} (n = {n})",
                            describe_figure(&figure)
                        ));
                    }
                }
            }
        }
    }
    report
}

/// Checks every connected polyomino with up to `max_cells` cells against
/// every realized vector divisible by some n <= max_n.
pub fn chord_suite(max_cells: usize, max_n: i64) -> SuiteReport {
    #[cfg(feature = "parallel")]
    {
        fixed_polyominoes(max_cells)
            .par_iter()
            .map(|p| chord_cases_for(p, max_n))
            .reduce(SuiteReport::empty, SuiteReport::merge)
    }
    #[cfg(not(feature = "parallel"))]
    {
        chord_suite_sequential(max_cells, max_n)
    }
}

pub fn chord_suite_sequential(max_cells: usize, max_n: i64) -> SuiteReport {
    fixed_polyominoes(max_cells)
        .iter()
        .map(|p| chord_cases_for(p, max_n))
        .fold(SuiteReport::empty(), SuiteReport::merge)
}

// ---------------------------------------------------------------------------
// Quadrilateral suite (seeded randomized)
// ---------------------------------------------------------------------------

/// Random strictly convex integer quadrilateral: four points in a small box,
/// reordered into convex position when possible.
fn random_convex_quad(rng: &mut ChaCha8Rng) -> [IntVec; 4] {
    loop {
        let mut pts = [IntVec::ZERO; 4];
        for p in &mut pts {
            *p = IntVec::new(rng.gen_range(-6..=6), rng.gen_range(-6..=6));
        }
        let [a, b, c, d] = pts;
        for order in [[a, b, c, d], [a, b, d, c], [a, c, b, d]] {
            if strictly_convex(order[0], order[1], order[2], order[3]) {
                return order;
            }
        }
    }
}

fn quad_case(seed: u64, index: u64) -> SuiteReport {
    let mut rng = case_rng(seed, index);
    let [a, b, c, d] = random_convex_quad(&mut rng);
    let extra = rng.gen_range(0..24);
    let figure = figure_realizing(&mut rng, &[a - c, b - d], extra);
    let mut report = SuiteReport {
        cases: 1,
        failures: 0,
        counterexample: None,
    };
    match quad_check(&figure, a, b, c, d) {
        Ok(realized) => {
            let (wa, wb) = realized.witness;
            if wb - wa != realized.vector {
                report.failures = 1;
                report.counterexample =
                    Some(format!("case {index}: witness mismatch for side {:?}", realized.side));
            }
        }
        Err(e) => {
            report.failures = 1;
            report.counterexample = Some(format!(
                "case {index}: quad {a} {b} {c} {d} on figure [{}]: {e}",
                describe_figure(&figure)
            ));
        }
    }
    report
}

/// Random (figure, convex quadrilateral) cases meeting the diagonal
/// precondition by construction; every case must yield a realized side.
pub fn quad_suite(cases: u64, seed: u64) -> SuiteReport {
    map_reduce(cases, |i| quad_case(seed, i))
}

pub fn quad_suite_sequential(cases: u64, seed: u64) -> SuiteReport {
    map_reduce_sequential(cases, |i| quad_case(seed, i))
}

// ---------------------------------------------------------------------------
// Fork suite (seeded randomized)
// ---------------------------------------------------------------------------

fn random_fork_input(rng: &mut ChaCha8Rng) -> (Basis, IntVec, IntVec) {
    let basis = loop {
        let u = IntVec::new(rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        let v = IntVec::new(rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        if u.cross(v) != 0 {
            break Basis::new(u, v).unwrap();
        }
    };
    loop {
        let mut c = [0i64; 4];
        for e in &mut c {
            *e = rng.gen_range(1..=4) * if rng.gen_bool(0.5) { 1 } else { -1 };
        }
        if c[0] * c[1] * c[2] * c[3] < 0 {
            return (basis, IntVec::new(c[0], c[1]), IntVec::new(c[2], c[3]));
        }
    }
}

fn fork_case(seed: u64, index: u64) -> SuiteReport {
    let mut rng = case_rng(seed, index);
    let (basis, u1, u2) = random_fork_input(&mut rng);
    let w1 = basis.combine(u1);
    let w2 = basis.combine(u2);
    let extra = rng.gen_range(0..24);
    let figure = figure_realizing(&mut rng, &[w1, w2], extra);
    let mut report = SuiteReport {
        cases: 1,
        failures: 0,
        counterexample: None,
    };
    let fail = |report: &mut SuiteReport, msg: String| {
        report.failures = 1;
        report.counterexample = Some(format!(
            "case {index}: basis ({}, {}), coefficients {u1} {u2}: {msg}",
            basis.u(),
            basis.v()
        ));
    };
    match fork_trace(&figure, &basis, u1, u2) {
        Ok(cert) => {
            if let Err(msg) = cert.validate(&figure) {
                fail(&mut report, msg);
            }
        }
        Err(e) => fail(&mut report, e.to_string()),
    }
    report
}

/// Random valid fork inputs; every trace must terminate with a validated
/// certificate containing at most one irregular step.
pub fn fork_suite(cases: u64, seed: u64) -> SuiteReport {
    map_reduce(cases, |i| fork_case(seed, i))
}

pub fn fork_suite_sequential(cases: u64, seed: u64) -> SuiteReport {
    map_reduce_sequential(cases, |i| fork_case(seed, i))
}
