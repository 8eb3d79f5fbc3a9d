//! Discrete connected figures on the grid, realization of integer vectors,
//! harnesses for the forced-chord properties, and the certificate-producing
//! fork procedure.

mod chord;
mod error;
mod figure;
mod fork;
mod polyomino;
mod quad;
mod suites;

pub use chord::chord_check;
pub use error::ChordError;
pub use figure::{figure_realizing, is_connected, random_figure, rectilinear_cells, Figure};
pub use fork::{
    fork_quadrilateral, fork_trace, normalize_fork_input, Basis, BasisTarget, ForkCertificate,
    ForkConclusion, ForkStep, GoodPair,
};
pub use polyomino::{fixed_polyominoes, polyomino_figure};
pub use quad::{quad_check, strictly_convex, RealizedSide, Side};
pub use suites::{
    chord_suite, chord_suite_sequential, fork_suite, fork_suite_sequential, quad_suite,
    quad_suite_sequential, SuiteReport,
};
