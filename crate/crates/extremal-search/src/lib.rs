//! Exact maximal-grid search for small boards, an independent placement
//! oracle, and the lattice and slope-split diagnostics for half-free leapers.

mod error;
mod lattice;
mod oracle;
mod search;
mod slopes;

pub use error::SearchError;
pub use lattice::{diagonal_lattice, lattice_intersection, partition_count_check, LatticeBasis};
pub use oracle::{embeds_direct, max_m_direct};
pub use search::{
    max_grid_exact, max_grid_exact_sequential, no_perfect_embedding, SearchLimits, SearchResult,
};
pub use slopes::{
    all_two_two_splits, class_of_move, fundamental_area, halffree_bound_report,
    multiplicity_diagnostics, slope_split, split_lattice, CaseKind, DirClass, HalfFreeDiagnostic,
    PathMultiplicities, SlopeSplit,
};
