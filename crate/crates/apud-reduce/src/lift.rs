use apud_geometry::{rational::rat_int, Rat};
use apud_graph::Graph;
use num_traits::Zero;

/// The 3D companion construction: two stacked copies of `g` with each
/// vertex joined to its copy, plus the pair of z-planes `0` and
/// `1 - epsilon` the copies live on.
///
/// The copy of vertex `v` is `v + n`. Edges are `E`, the mirrored `E'`,
/// and the per-vertex matching `{v v'}` — the paired-copy reading, under
/// which triangle flags become prisms and 4-cycles become cubes. (A
/// complete-bipartite join between the copies would contradict that
/// geometric intent, so it is deliberately not what this builds.) No 3D
/// placement generator is provided; the intersection predicate accepts
/// z-coordinates for verifying candidate ball placements by hand.
pub fn lift_to_3d(g: &Graph, epsilon: &Rat) -> (Graph, [Rat; 2]) {
    let n = g.vertex_count();
    let mut lifted = Graph::new(2 * n);
    for (u, v) in g.edges() {
        lifted.add_edge(u, v).unwrap();
        lifted.add_edge(u + n, v + n).unwrap();
    }
    for v in 0..n {
        lifted.add_edge(v, v + n).unwrap();
    }
    (lifted, [Rat::zero(), rat_int(1) - epsilon])
}

#[cfg(test)]
mod tests {
    use super::*;
    use apud_geometry::rational::rat;
    use apud_graph::{find_induced_embeddings, make_pattern, PatternKind};

    #[test]
    fn k2_lifts_to_c4() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        let (lifted, planes) = lift_to_3d(&k2, &rat(1, 10));
        assert_eq!(lifted.vertex_count(), 4);
        assert_eq!(lifted.edge_count(), 4);
        let c4 = make_pattern(PatternKind::Cycle(4)).unwrap();
        assert_eq!(find_induced_embeddings(&lifted, &c4).len(), 1);
        assert_eq!(planes, [rat(0, 1), rat(9, 10)]);
    }

    #[test]
    fn k1_lifts_to_k2() {
        let (lifted, _) = lift_to_3d(&Graph::new(1), &rat(1, 10));
        assert_eq!(lifted.vertex_count(), 2);
        assert_eq!(lifted.edges(), vec![(0, 1)]);
    }

    #[test]
    fn empty_graph_lifts_to_matching() {
        let (lifted, _) = lift_to_3d(&Graph::new(3), &rat(1, 10));
        assert_eq!(lifted.vertex_count(), 6);
        assert_eq!(lifted.edges(), vec![(0, 3), (1, 4), (2, 5)]);
    }

    #[test]
    fn triangle_flag_becomes_prism() {
        let tri = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let (lifted, _) = lift_to_3d(&tri, &rat(1, 10));
        assert_eq!(lifted.vertex_count(), 6);
        assert_eq!(lifted.edge_count(), 9);
        // Two triangles plus a perfect matching between them.
        assert!(lifted.adjacent(3, 4) && lifted.adjacent(4, 5) && lifted.adjacent(3, 5));
    }
}
