use crate::RecognizeError;
use apud_geometry::{intersection_graph, Point, Rat};
use apud_graph::Graph;
use num_bigint::BigInt;
use num_traits::Zero;

/// Vertex guard for the ordering enumeration (factorial).
const ORACLE_GUARD: usize = 9;

/// Exhaustive one-line realizability oracle, independent of the
/// forbidden-subgraph route.
///
/// Enumerates vertex orderings; for each, solves the difference-constraint
/// system "adjacent centers within 2, non-adjacent centers strictly more
/// than 2 apart in order direction" by Bellman-Ford feasibility with strict
/// inequalities tracked through an integer scaling. Any solution is
/// re-verified exactly; returns exact rational coordinates or `None`.
pub fn uig_oracle(g: &Graph) -> Result<Option<Vec<Rat>>, RecognizeError> {
    let n = g.vertex_count();
    if n > ORACLE_GUARD {
        return Err(RecognizeError::GuardExceeded {
            what: "one-line placement oracle",
            limit: ORACLE_GUARD,
            got: n,
        });
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    // Strictness scale: a simple constraint cycle carries at most n^2
    // strict edges, so representing "<= -2" as -(2*SC + 1) keeps signs of
    // cycle sums faithful.
    let sc = (n * n + 1) as i64;

    let mut perm: Vec<usize> = (0..n).collect();
    let mut found: Option<Vec<Rat>> = None;
    permute(&mut perm, 0, &mut |order: &[usize]| {
        // Orders and their reversals yield mirrored solutions; skip half.
        if n > 1 && order[0] > order[n - 1] {
            return false;
        }
        if let Some(xs) = solve_order(g, order, sc) {
            let points: Vec<Point> = xs
                .iter()
                .map(|x| Point::new(x.clone(), Rat::zero()))
                .collect();
            if &intersection_graph(&points) == g {
                found = Some(xs);
                return true;
            }
        }
        false
    });
    Ok(found)
}

/// Difference-constraint feasibility for one vertex order. Returns scaled
/// exact coordinates when the system is consistent.
fn solve_order(g: &Graph, order: &[usize], sc: i64) -> Option<Vec<Rat>> {
    let n = order.len();
    // Constraint x_a - x_b <= w becomes edge (b -> a, w).
    let mut edges: Vec<(usize, usize, i64)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (u, v) = (order[i], order[j]);
            if g.adjacent(u, v) {
                edges.push((u, v, 2 * sc));
                edges.push((v, u, 2 * sc));
            } else {
                // v comes later in the order: x_v - x_u > 2, i.e.
                // x_u - x_v <= -(2 + strict).
                edges.push((v, u, -(2 * sc + 1)));
            }
        }
    }
    // Bellman-Ford from an implicit source at distance 0 to every vertex.
    let mut dist = vec![0i64; n];
    for round in 0..=n {
        let mut changed = false;
        for &(b, a, w) in &edges {
            if dist[b] + w < dist[a] {
                dist[a] = dist[b] + w;
                changed = true;
            }
        }
        if !changed {
            break;
        }
        if round == n {
            return None; // negative cycle: infeasible (or strict-tight)
        }
    }
    let min = *dist.iter().min().unwrap();
    Some(
        dist.iter()
            .map(|&d| Rat::new(BigInt::from(d - min), BigInt::from(sc)))
            .collect(),
    )
}

/// Visits permutations in lexicographic-ish deterministic order; the
/// callback returns true to stop.
fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == items.len() {
        return visit(items);
    }
    for i in k..items.len() {
        items.swap(k, i);
        if permute(items, k + 1, visit) {
            return true;
        }
        items.swap(k, i);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::is_unit_interval;
    use apud_geometry::rational::rat_int;
    use apud_graph::{make_pattern, PatternKind};

    #[test]
    fn path_gets_forced_spacing() {
        let xs = uig_oracle(&Graph::path(3)).unwrap().unwrap();
        // Consecutive within 2, ends strictly beyond 2.
        assert!(&xs[1] - &xs[0] <= rat_int(2));
        assert!((&xs[2] - &xs[0]) > rat_int(2));
    }

    #[test]
    fn claw_has_no_line_placement() {
        let claw = make_pattern(PatternKind::Claw).unwrap();
        assert_eq!(uig_oracle(&claw).unwrap(), None);
    }

    #[test]
    fn oracle_agrees_with_forbidden_subgraphs_up_to_5() {
        // Exhaustive over all graphs on up to 5 labeled vertices.
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                .collect();
            for mask in 0u32..1 << pairs.len() {
                let mut g = Graph::new(n);
                for (b, &(i, j)) in pairs.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        g.add_edge(i, j).unwrap();
                    }
                }
                let by_oracle = uig_oracle(&g).unwrap().is_some();
                let by_patterns = is_unit_interval(&g).unwrap();
                assert_eq!(by_oracle, by_patterns, "disagree on {:?}", g);
            }
        }
    }

    #[test]
    fn guard_is_enforced() {
        assert!(matches!(
            uig_oracle(&Graph::new(10)),
            Err(RecognizeError::GuardExceeded { .. })
        ));
    }
}
