//! The fork procedure: a connected figure realizing a*u + b*v and c*u + d*v
//! with abcd < 0 must realize u or v. The procedure repeatedly builds a
//! convex quadrilateral whose diagonals are the current coefficient pair,
//! picks a realized side, and either terminates through a divided-chord
//! reduction (axis-aligned side) or replaces one pair member by the side.
//! Every run produces an auditable certificate.

use serde::{Deserialize, Serialize};

use leaper_core::IntVec;

use crate::chord::chord_check;
use crate::error::ChordError;
use crate::figure::{is_connected, Figure};
use crate::quad::Side;

/// Two non-parallel plane vectors serving as the coefficient frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Basis {
    u: IntVec,
    v: IntVec,
}

impl Basis {
    pub fn new(u: IntVec, v: IntVec) -> Result<Basis, ChordError> {
        if u.cross(v) == 0 {
            return Err(ChordError::PreconditionUnmet(format!(
                "basis vectors {u} and {v} are parallel"
            )));
        }
        Ok(Basis { u, v })
    }

    pub fn u(&self) -> IntVec {
        self.u
    }

    pub fn v(&self) -> IntVec {
        self.v
    }

    /// Plane vector for coefficient pair (c.x, c.y).
    pub fn combine(&self, c: IntVec) -> IntVec {
        self.u * c.x + self.v * c.y
    }
}

/// A good pair of coefficient vectors (x, y) and (-z, t) with x, y, z, t all
/// strictly positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodPair {
    first: IntVec,
    second: IntVec,
}

impl GoodPair {
    pub fn new(first: IntVec, second: IntVec) -> Result<GoodPair, ChordError> {
        if first.x <= 0 || first.y <= 0 || second.x >= 0 || second.y <= 0 {
            return Err(ChordError::PreconditionUnmet(format!(
                "({first}, {second}) is not a good pair"
            )));
        }
        Ok(GoodPair { first, second })
    }

    pub fn first(&self) -> IntVec {
        self.first
    }

    pub fn second(&self) -> IntVec {
        self.second
    }

    pub fn x(&self) -> i64 {
        self.first.x
    }

    pub fn y(&self) -> i64 {
        self.first.y
    }

    pub fn z(&self) -> i64 {
        -self.second.x
    }

    pub fn t(&self) -> i64 {
        self.second.y
    }

    fn coefficient_sum(&self) -> i64 {
        self.x() + self.y() + self.z() + self.t()
    }
}

/// Sign-normalizes and orders two coefficient vectors into a good pair.
/// Requires the coefficient product to be negative.
pub fn normalize_fork_input(u1: IntVec, u2: IntVec) -> Result<GoodPair, ChordError> {
    let product = u1.x.signum() * u1.y.signum() * u2.x.signum() * u2.y.signum();
    if u1.x == 0 || u1.y == 0 || u2.x == 0 || u2.y == 0 || product >= 0 {
        return Err(ChordError::NotFork);
    }
    let flip = |w: IntVec| if w.y < 0 { -w } else { w };
    let (a, b) = (flip(u1), flip(u2));
    // With both second coordinates positive, exactly one first coordinate is
    // positive; that vector leads.
    if a.x > 0 {
        GoodPair::new(a, b)
    } else {
        GoodPair::new(b, a)
    }
}

/// Side difference vectors (A-B, B-C, C-D, D-A) of the quadrilateral built on
/// a good pair. The half-integer vertex coordinates cancel in differences.
pub fn fork_quadrilateral(gp: &GoodPair) -> [IntVec; 4] {
    let (x, y, z, t) = (gp.x(), gp.y(), gp.z(), gp.t());
    let w = x.min(z);
    [
        IntVec::new(-w, 0),
        IntVec::new(w - x, -y),
        IntVec::new(x + z - w, y - t),
        IntVec::new(w - z, t),
    ]
}

/// One audited iteration of the fork procedure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForkStep {
    pub pair: GoodPair,
    /// Coefficient side vectors in the order AB, BC, CD, DA.
    pub sides: [IntVec; 4],
    pub chosen: Side,
    /// Coefficient vector of the chosen side.
    pub side_vector: IntVec,
    /// Figure cells realizing the chosen side in the plane.
    pub witness: (IntVec, IntVec),
    /// One coefficient strictly decreased while the rest stayed; terminating
    /// steps count as regular.
    pub regular: bool,
    /// Pair after replacement; absent on the terminating step.
    pub replaced_with: Option<GoodPair>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasisTarget {
    U,
    V,
}

/// The terminating reduction: an axis-aligned side realizes a multiple of a
/// basis vector, and the divided-chord property yields the vector itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForkConclusion {
    pub target: BasisTarget,
    /// Plane vector of the concluded basis element.
    pub plane_vector: IntVec,
    /// Multiple that the axis-aligned side realized.
    pub chord_divisor: i64,
    pub witness: (IntVec, IntVec),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForkCertificate {
    pub basis: Basis,
    pub steps: Vec<ForkStep>,
    pub conclusion: ForkConclusion,
}

impl ForkCertificate {
    pub fn irregular_steps(&self) -> usize {
        self.steps.iter().filter(|s| !s.regular).count()
    }

    /// Re-audits the certificate against a figure: every step witness must
    /// realize its side, at most one irregular step may occur, an irregular
    /// step must equalize the first coefficient magnitudes, and the
    /// conclusion witness must realize the concluded basis vector.
    pub fn validate(&self, figure: &Figure) -> Result<(), String> {
        for (i, step) in self.steps.iter().enumerate() {
            if fork_quadrilateral(&step.pair) != step.sides {
                return Err(format!("step {i}: sides do not match the pair"));
            }
            let plane = self.basis.combine(step.side_vector);
            let (a, b) = step.witness;
            if b - a != plane {
                return Err(format!("step {i}: witness does not realize {plane}"));
            }
            if !figure.contains(a) || !figure.contains(b) {
                return Err(format!("step {i}: witness cells not in figure"));
            }
            if let Some(next) = &step.replaced_with {
                if !step.regular && next.x() != next.z() {
                    return Err(format!(
                        "step {i}: irregular step must equalize first coefficients"
                    ));
                }
            } else if i + 1 != self.steps.len() {
                return Err(format!("step {i}: only the last step may terminate"));
            }
        }
        if self.irregular_steps() > 1 {
            return Err("more than one irregular step".into());
        }
        let (a, b) = self.conclusion.witness;
        if b - a != self.conclusion.plane_vector {
            return Err("conclusion witness does not realize the target".into());
        }
        if !figure.contains(a) || !figure.contains(b) {
            return Err("conclusion witness cells not in figure".into());
        }
        let expected = match self.conclusion.target {
            BasisTarget::U => self.basis.u(),
            BasisTarget::V => self.basis.v(),
        };
        if self.conclusion.plane_vector != expected {
            return Err("conclusion plane vector is not a basis element".into());
        }
        Ok(())
    }
}

fn is_regular(before: &GoodPair, after: &GoodPair) -> bool {
    let b = [before.x(), before.y(), before.z(), before.t()];
    let a = [after.x(), after.y(), after.z(), after.t()];
    let mut strict = 0;
    for i in 0..4 {
        if a[i] > b[i] {
            return false;
        }
        if a[i] < b[i] {
            strict += 1;
        }
    }
    strict == 1
}

/// Runs the fork procedure on coefficient vectors u1, u2 over `basis`,
/// producing a certificate whose conclusion witness realizes u or v.
pub fn fork_trace(
    figure: &Figure,
    basis: &Basis,
    u1: IntVec,
    u2: IntVec,
) -> Result<ForkCertificate, ChordError> {
    if !is_connected(figure) {
        return Err(ChordError::PreconditionUnmet(
            "figure is not connected".into(),
        ));
    }
    for coeff in [u1, u2] {
        let plane = basis.combine(coeff);
        if figure.realizes(plane).is_none() {
            return Err(ChordError::PreconditionUnmet(format!(
                "figure does not realize {plane} (coefficients {coeff})"
            )));
        }
    }
    let mut pair = normalize_fork_input(u1, u2)
        .map_err(|_| ChordError::PreconditionUnmet("coefficient product is not negative".into()))?;

    let limit = 4 * pair.coefficient_sum();
    let mut steps: Vec<ForkStep> = Vec::new();

    for _ in 0..limit {
        let sides = fork_quadrilateral(&pair);
        let mut realized: Vec<(Side, IntVec, (IntVec, IntVec))> = Vec::new();
        for (side, vec) in Side::ALL.into_iter().zip(sides) {
            if let Some(w) = figure.realizes(basis.combine(vec)) {
                realized.push((side, vec, w));
            }
        }
        if realized.is_empty() {
            return Err(ChordError::ForcingFailure(format!(
                "no quadrilateral side realized for pair ({}, {})",
                pair.first(),
                pair.second()
            )));
        }
        // Axis-aligned sides terminate; prefer them, breaking ties by the
        // lexicographically smallest side vector.
        let axis = realized
            .iter()
            .filter(|(_, v, _)| v.x == 0 || v.y == 0)
            .min_by_key(|(_, v, _)| *v)
            .cloned();
        let (side, vec, witness) = match axis {
            Some(choice) => choice,
            None => realized.into_iter().min_by_key(|(_, v, _)| *v).unwrap(),
        };

        if vec.x == 0 || vec.y == 0 {
            let (target, base, divisor) = if vec.y == 0 {
                (BasisTarget::U, basis.u(), vec.x.abs())
            } else {
                (BasisTarget::V, basis.v(), vec.y.abs())
            };
            if !chord_check(figure, base, divisor)? {
                return Err(ChordError::ForcingFailure(format!(
                    "figure realizes {divisor} times {base} but not {base}"
                )));
            }
            let conclusion_witness = figure.realizes(base).unwrap();
            steps.push(ForkStep {
                pair,
                sides,
                chosen: side,
                side_vector: vec,
                witness,
                regular: true,
                replaced_with: None,
            });
            return Ok(ForkCertificate {
                basis: *basis,
                steps,
                conclusion: ForkConclusion {
                    target,
                    plane_vector: base,
                    chord_divisor: divisor,
                    witness: conclusion_witness,
                },
            });
        }

        // Discard whichever pair member shares the side's slope sign.
        let replacement = if vec.y < 0 { -vec } else { vec };
        let next = if vec.x.signum() * vec.y.signum() > 0 {
            GoodPair::new(replacement, pair.second())
        } else {
            GoodPair::new(pair.first(), replacement)
        }
        .map_err(|e| {
            ChordError::ForcingFailure(format!("replacement is not a good pair: {e}"))
        })?;
        steps.push(ForkStep {
            pair,
            sides,
            chosen: side,
            side_vector: vec,
            witness,
            regular: is_regular(&pair, &next),
            replaced_with: Some(next),
        });
        pair = next;
    }
    Err(ChordError::IterationLimit)
}
