//! The logic-engine compiler: parse monotone NAE3SAT, build the frame of
//! axes-parallel lines, generate the skeleton graph (frame paths with
//! diamonds, the hinge path with 4-stars, literal paths with end 4-cycles),
//! attach clause/literal flags, and construct exact witness embeddings from
//! NAE-satisfying assignments.
//!
//! Construction is deterministic: identical inputs produce byte-identical
//! instances and placements.

mod formula;
mod instance;
mod lift;
mod profile;
mod roles;
mod skeleton;
mod witness;

pub use formula::{
    solve_nae_bruteforce, Assignment, NaeFormula, BRUTE_FORCE_VARIABLE_LIMIT,
};
pub use instance::{attach_flags, reduce, reduce_skeleton, InstanceParams, ReductionInstance};
pub use lift::lift_to_3d;
pub use profile::LayoutProfile;
pub use roles::{EndPart, Frame, PathPos, Role, TipSide};
pub use skeleton::{build_lines, build_skeleton, clause_pairs, Skeleton, VertexMap};
pub use witness::witness_embedding;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReduceError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("rejected input: {0}")]
    Invalid(String),
    #[error("{what} limited to {limit}, got {got}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("layout profile infeasible: {0}")]
    ProfileInfeasible(String),
    #[error("assignment does not NAE-satisfy the formula (clause {clause} is all-equal)")]
    NotNaeSatisfying { clause: usize },
    #[error(transparent)]
    Graph(#[from] apud_graph::GraphError),
    #[error(transparent)]
    Geometry(#[from] apud_geometry::GeometryError),
}
