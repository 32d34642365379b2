//! Exact rational geometry for unit disks centered on axes-parallel lines.
//!
//! Disks have radius 1; two disks intersect exactly when the squared
//! distance between their centers is at most 4. Every predicate here is
//! decided in exact rational arithmetic (squared distances, no roots), so
//! boundary-tight contacts — distance exactly 2 — count as intersecting,
//! which the witness layouts rely on.

mod intersect;
mod lines;
mod placement;
mod point;
pub mod rational;
mod verify;

pub use intersect::{disks_intersect, intersection_graph, triangle_blocking};
pub use lines::{Axis, LineConfig, LineRef};
pub use placement::Placement;
pub use point::Point;
pub use rational::{parse_rat, rat, rat_string, Rat};
pub use verify::{verify_realization, LineViolation, VerificationReport};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("vertex {0} has no placed point")]
    UnplacedVertex(usize),
    #[error("placement names vertex {0}, but the graph has {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("vertex {vertex} assigned to {axis:?} line {index}, but the config has {count}")]
    LineOutOfRange {
        vertex: usize,
        axis: Axis,
        index: usize,
        count: usize,
    },
    #[error("vertex {0} is placed but has no line assignment")]
    UnassignedVertex(usize),
    #[error("duplicate {0:?} line value {1}")]
    DuplicateLine(Axis, String),
    #[error("rejected input: {0}")]
    Rejected(String),
}
