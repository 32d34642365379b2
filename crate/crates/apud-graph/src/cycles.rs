use crate::Graph;

/// Biconnected components as vertex lists (components with at least one
/// edge). Every simple cycle lives inside one biconnected component, which
/// keeps the cycle-length check cheap on the gadget graphs this workspace
/// produces: their components are single diamonds, triangles and 4-cycles
/// strung along long paths.
fn biconnected_components(g: &Graph) -> Vec<Vec<usize>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        timer: usize,
        edges: Vec<(usize, usize)>,
        comps: Vec<Vec<usize>>,
    }

    fn dfs(st: &mut State, u: usize, parent: usize) {
        st.disc[u] = st.timer;
        st.low[u] = st.timer;
        st.timer += 1;
        let neighbors: Vec<usize> = st.g.neighbors(u).collect();
        for v in neighbors {
            if st.disc[v] == usize::MAX {
                st.edges.push((u, v));
                dfs(st, v, u);
                st.low[u] = st.low[u].min(st.low[v]);
                if st.low[v] >= st.disc[u] {
                    let mut verts = Vec::new();
                    while let Some((a, b)) = st.edges.pop() {
                        verts.push(a);
                        verts.push(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    verts.sort_unstable();
                    verts.dedup();
                    st.comps.push(verts);
                }
            } else if v != parent && st.disc[v] < st.disc[u] {
                st.edges.push((u, v));
                st.low[u] = st.low[u].min(st.disc[v]);
            }
        }
    }

    let n = g.vertex_count();
    let mut st = State {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        timer: 0,
        edges: Vec::new(),
        comps: Vec::new(),
    };
    for root in 0..n {
        if st.disc[root] == usize::MAX {
            dfs(&mut st, root, usize::MAX);
        }
    }
    st.comps
}

/// Longest simple cycle through vertex 0 of `g`... see
/// [`longest_cycle_at_most`] for the public contract. Works on a small
/// graph (one biconnected component); returns as soon as a cycle longer
/// than `bound` is found.
fn component_has_cycle_longer_than(g: &Graph, bound: usize) -> bool {
    let n = g.vertex_count();
    let mut in_path = vec![false; n];
    // Enumerate cycles by their minimum vertex `s`.
    for s in 0..n {
        let mut path = vec![s];
        in_path[s] = true;
        if dfs_longer_cycle(g, s, bound, &mut path, &mut in_path) {
            return true;
        }
        in_path[s] = false;
    }
    false
}

fn dfs_longer_cycle(
    g: &Graph,
    s: usize,
    bound: usize,
    path: &mut Vec<usize>,
    in_path: &mut Vec<bool>,
) -> bool {
    let tail = *path.last().unwrap();
    for v in g.neighbors(tail) {
        if v == s && path.len() > bound {
            return true;
        }
        if v > s && !in_path[v] {
            path.push(v);
            in_path[v] = true;
            let hit = dfs_longer_cycle(g, s, bound, path, in_path);
            in_path[v] = false;
            path.pop();
            if hit {
                return true;
            }
        }
    }
    false
}

/// True iff `g` has no simple cycle of length greater than `bound`.
/// Bounded DFS cycle enumeration per biconnected component; intended for
/// instance graphs at desk scale.
pub fn longest_cycle_at_most(g: &Graph, bound: usize) -> bool {
    for comp in biconnected_components(g) {
        if comp.len() <= bound {
            continue; // a component with k vertices has no cycle longer than k
        }
        let sub = g.induced_on(&comp);
        if component_has_cycle_longer_than(&sub, bound) {
            return false;
        }
    }
    true
}

/// Finds an induced (chordless) cycle of length at least `k`, if one
/// exists, as a vertex list in cycle order. DFS over induced paths with
/// chord pruning, enumerated from each cycle-minimal start vertex.
pub fn find_chordless_cycle_at_least(g: &Graph, k: usize) -> Option<Vec<usize>> {
    assert!(k >= 3);
    let n = g.vertex_count();
    let words = g.words_per_row();
    // interior[w] marks path vertices that new extensions may not touch.
    let mut interior = vec![0u64; words];
    for s in 0..n {
        for a in g.neighbors(s) {
            if a < s {
                continue;
            }
            let mut path = vec![s, a];
            if let Some(cycle) = extend_chordless(g, s, k, &mut path, &mut interior) {
                return Some(cycle);
            }
        }
    }
    None
}

fn extend_chordless(
    g: &Graph,
    s: usize,
    k: usize,
    path: &mut Vec<usize>,
    interior: &mut [u64],
) -> Option<Vec<usize>> {
    let tail = *path.last().unwrap();
    for v in g.neighbors(tail) {
        if v <= s || path.contains(&v) {
            continue;
        }
        // v must see only the tail among path vertices (s checked separately).
        if g.adjacent_to_set(v, interior) {
            continue;
        }
        let closes = g.adjacent(v, s);
        if closes && path.len() + 1 >= k {
            path.push(v);
            let cycle = path.clone();
            path.pop();
            return Some(cycle);
        }
        if !closes {
            // The current tail becomes interior.
            interior[tail / 64] |= 1 << (tail % 64);
            path.push(v);
            let hit = extend_chordless(g, s, k, path, interior);
            path.pop();
            interior[tail / 64] &= !(1 << (tail % 64));
            if hit.is_some() {
                return hit;
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{make_pattern, PatternKind};

    #[test]
    fn cycle_bounds() {
        let c4 = make_pattern(PatternKind::Cycle(4)).unwrap();
        let c5 = make_pattern(PatternKind::Cycle(5)).unwrap();
        assert!(longest_cycle_at_most(&c4, 4));
        assert!(!longest_cycle_at_most(&c5, 4));
        assert!(longest_cycle_at_most(&c5, 5));
        assert!(longest_cycle_at_most(&Graph::path(7), 4));
    }

    #[test]
    fn diamond_longest_cycle_is_4() {
        let d = make_pattern(PatternKind::Diamond).unwrap();
        assert!(longest_cycle_at_most(&d, 4));
        assert!(!longest_cycle_at_most(&d, 3));
    }

    #[test]
    fn k4_longest_cycle_is_4() {
        let k4 = Graph::complete(4);
        assert!(longest_cycle_at_most(&k4, 4));
        assert!(!longest_cycle_at_most(&k4, 3));
    }

    #[test]
    fn gadget_chain_stays_bounded() {
        // Two diamonds joined by a path: still nothing longer than a 4-cycle.
        let mut g = Graph::new(11);
        for (u, v) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)] {
            g.add_edge(u, v).unwrap();
        }
        for (u, v) in [(1, 4), (4, 5), (5, 6)] {
            g.add_edge(u, v).unwrap();
        }
        for (u, v) in [(6, 7), (6, 8), (6, 9), (7, 8), (7, 9), (5, 10)] {
            g.add_edge(u, v).unwrap();
        }
        assert!(longest_cycle_at_most(&g, 4));
    }

    #[test]
    fn chordless_cycles() {
        let c5 = make_pattern(PatternKind::Cycle(5)).unwrap();
        let found = find_chordless_cycle_at_least(&c5, 4).unwrap();
        assert_eq!(found.len(), 5);

        let d = make_pattern(PatternKind::Diamond).unwrap();
        assert!(find_chordless_cycle_at_least(&d, 4).is_none());

        let k4 = Graph::complete(4);
        assert!(find_chordless_cycle_at_least(&k4, 4).is_none());

        let c6 = make_pattern(PatternKind::Cycle(6)).unwrap();
        assert_eq!(find_chordless_cycle_at_least(&c6, 4).unwrap().len(), 6);
        assert!(find_chordless_cycle_at_least(&c6, 7).is_none());
    }
}
