use crate::RecognizeError;
use apud_graph::{exists_induced, find_chordless_cycle_at_least, make_pattern, Graph, PatternKind};

/// Vertex guard for the forbidden-subgraph checks; the chordless-cycle
/// enumeration is exponential in the worst case.
pub const UIG_GUARD: usize = 64;

/// Unit interval recognition by forbidden induced subgraphs: a graph is a
/// unit interval graph exactly when it contains no induced claw, net,
/// 3-sun, nor any induced cycle of length at least 4.
pub fn is_unit_interval(g: &Graph) -> Result<bool, RecognizeError> {
    if g.vertex_count() > UIG_GUARD {
        return Err(RecognizeError::GuardExceeded {
            what: "unit interval check",
            limit: UIG_GUARD,
            got: g.vertex_count(),
        });
    }
    for kind in [PatternKind::Claw, PatternKind::Net, PatternKind::Sun(3)] {
        if exists_induced(g, &make_pattern(kind)?) {
            return Ok(false);
        }
    }
    Ok(find_chordless_cycle_at_least(g, 4).is_none())
}
