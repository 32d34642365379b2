//! Undirected simple graphs at desk scale, the canonical pattern graphs used
//! by the line-constrained disk machinery (cycles, stars, sunlets, suns,
//! claw/net/diamond), and exact induced-subgraph search.
//!
//! Everything here is immutable after construction and safe to share across
//! threads; the search routines are pure functions.

mod cycles;
mod graph;
mod induced;
mod pattern;

pub use cycles::{find_chordless_cycle_at_least, longest_cycle_at_most};
pub use graph::{Graph, GraphError};
pub use induced::{exists_induced, find_induced, find_induced_embeddings, is_induced_free, Occurrence};
pub use pattern::{make_pattern, PatternKind};
