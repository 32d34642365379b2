//! Recognition and obstruction procedures for unit disks on axes-parallel
//! lines: unit interval recognition, obstruction detection for the
//! one-horizontal/one-vertical class, one-sided sufficiency checks, and a
//! resolution-bounded grid solver that operationalizes "realizable on the
//! given lines".
//!
//! The grid solver is sound for YES answers (every returned placement is
//! re-verified exactly) and explicitly incomplete for NO: an empty result
//! means "no realization at this step/window", never a proof.

mod grid;
mod obstructions;
mod oracle;
mod uig;

pub use grid::{solve_placement_grid, solve_placement_grid_with_jobs, GridOutcome, SearchBudget};
pub use obstructions::{
    apud11_obstructions, apud11_sufficient, apud_gt2_sufficient, ObstructionReport, Verdict,
    GAMMA_PATTERNS,
};
pub use oracle::uig_oracle;
pub use uig::{is_unit_interval, UIG_GUARD};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecognizeError {
    #[error("{what} limited to {limit} vertices, got {got}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("bad search budget: {0}")]
    BadBudget(String),
    #[error(transparent)]
    Graph(#[from] apud_graph::GraphError),
    #[error(transparent)]
    Geometry(#[from] apud_geometry::GeometryError),
}
