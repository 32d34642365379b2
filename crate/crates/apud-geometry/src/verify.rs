use crate::intersect::{disks_intersect, scaled_coords, scaled_intersect};
use crate::lines::{Axis, LineConfig, LineRef};
use crate::placement::Placement;
use crate::point::Point;
use crate::GeometryError;
use apud_graph::Graph;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineViolation {
    pub vertex: usize,
    pub line: LineRef,
}

/// Outcome of checking a placement against a graph and line configuration.
/// The realization is valid exactly when all three lists are empty:
/// every vertex on its assigned line, every graph edge realized by
/// intersecting disks, and no intersection between non-adjacent vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct VerificationReport {
    pub line_violations: Vec<LineViolation>,
    pub missing_edges: Vec<(usize, usize)>,
    pub excess_edges: Vec<(usize, usize)>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.line_violations.is_empty()
            && self.missing_edges.is_empty()
            && self.excess_edges.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.is_valid() {
            "valid realization".into()
        } else {
            format!(
                "invalid realization: {} line violation(s), {} missing edge(s), {} excess edge(s)",
                self.line_violations.len(),
                self.missing_edges.len(),
                self.excess_edges.len()
            )
        }
    }
}

fn on_line(point: &Point, lines: &LineConfig, line: LineRef) -> bool {
    if !point.z.is_zero() {
        return false;
    }
    match lines.value(line) {
        None => false,
        Some(v) => match line.axis {
            Axis::H => &point.y == v,
            Axis::V => &point.x == v,
        },
    }
}

/// Checks a candidate realization of `g` on `lines`, exactly.
///
/// Errors on structural defects (vertex without point or assignment, line
/// index out of range, placement naming vertices the graph lacks); geometric
/// defects land in the report instead.
pub fn verify_realization(
    g: &Graph,
    lines: &LineConfig,
    placement: &Placement,
) -> Result<VerificationReport, GeometryError> {
    let n = g.vertex_count();
    for (&v, _) in placement.points.iter() {
        if v >= n {
            return Err(GeometryError::VertexOutOfRange(v, n));
        }
    }
    let mut points = Vec::with_capacity(n);
    let mut refs = Vec::with_capacity(n);
    for v in 0..n {
        let p = placement
            .points
            .get(&v)
            .ok_or(GeometryError::UnplacedVertex(v))?;
        let l = placement
            .assignment
            .get(&v)
            .copied()
            .ok_or(GeometryError::UnassignedVertex(v))?;
        if lines.value(l).is_none() {
            return Err(GeometryError::LineOutOfRange {
                vertex: v,
                axis: l.axis,
                index: l.index,
                count: match l.axis {
                    Axis::H => lines.horizontals().len(),
                    Axis::V => lines.verticals().len(),
                },
            });
        }
        points.push(p.clone());
        refs.push(l);
    }

    let mut report = VerificationReport::default();
    for v in 0..n {
        if !on_line(&points[v], lines, refs[v]) {
            report.line_violations.push(LineViolation {
                vertex: v,
                line: refs[v],
            });
        }
    }

    match scaled_coords(&points) {
        Some((scaled, d)) => {
            let four_d2 = 4 * d * d;
            for u in 0..n {
                for v in u + 1..n {
                    let touch = scaled_intersect(&scaled[u], &scaled[v], four_d2);
                    match (g.adjacent(u, v), touch) {
                        (true, false) => report.missing_edges.push((u, v)),
                        (false, true) => report.excess_edges.push((u, v)),
                        _ => {}
                    }
                }
            }
        }
        None => {
            for u in 0..n {
                for v in u + 1..n {
                    let touch = disks_intersect(&points[u], &points[v]);
                    match (g.adjacent(u, v), touch) {
                        (true, false) => report.missing_edges.push((u, v)),
                        (false, true) => report.excess_edges.push((u, v)),
                        _ => {}
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use apud_graph::{make_pattern, PatternKind};

    /// Sun(3) on the perpendicular pair with the canonical six centers.
    fn sun3_setup() -> (Graph, LineConfig, Placement) {
        let g = make_pattern(PatternKind::Sun(3)).unwrap();
        let lines = LineConfig::origin_cross();
        let mut pl = Placement::new();
        let pts = [
            (rat(-1, 1), rat(0, 1), LineRef::h(0)),
            (rat(0, 1), rat(1, 1), LineRef::v(0)),
            (rat(1, 1), rat(0, 1), LineRef::h(0)),
            (rat(-3, 2), rat(0, 1), LineRef::h(0)),
            (rat(3, 2), rat(0, 1), LineRef::h(0)),
            (rat(0, 1), rat(-3, 2), LineRef::v(0)),
        ];
        for (v, (x, y, l)) in pts.into_iter().enumerate() {
            pl.place(v, Point::new(x, y), l);
        }
        (g, lines, pl)
    }

    #[test]
    fn sun3_realization_is_valid() {
        let (g, lines, pl) = sun3_setup();
        let report = verify_realization(&g, &lines, &pl).unwrap();
        assert!(report.is_valid(), "{:?}", report);
    }

    #[test]
    fn coincident_disks_on_a_shared_line() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let lines = LineConfig::origin_cross();
        let mut pl = Placement::new();
        pl.place(0, Point::new(rat_int(1), rat_int(0)), LineRef::h(0));
        pl.place(1, Point::new(rat_int(1), rat_int(0)), LineRef::h(0));
        assert!(verify_realization(&g, &lines, &pl).unwrap().is_valid());
    }

    #[test]
    fn perturbed_point_reports_line_violation() {
        let (g, lines, mut pl) = sun3_setup();
        let p = pl.points.get_mut(&3).unwrap();
        p.y = rat(1, 1000);
        let report = verify_realization(&g, &lines, &pl).unwrap();
        assert_eq!(report.line_violations.len(), 1);
        assert_eq!(report.line_violations[0].vertex, 3);
    }

    #[test]
    fn moved_point_reports_edge_diffs() {
        let (g, lines, mut pl) = sun3_setup();
        // Push ray 4 out of reach of clique vertex 2 along the line.
        pl.place(4, Point::new(rat_int(4), rat_int(0)), LineRef::h(0));
        let report = verify_realization(&g, &lines, &pl).unwrap();
        assert!(report.missing_edges.contains(&(1, 4)));
        assert!(report.missing_edges.contains(&(2, 4)));
    }

    #[test]
    fn structural_errors() {
        let (g, lines, mut pl) = sun3_setup();
        pl.points.remove(&5);
        assert_eq!(
            verify_realization(&g, &lines, &pl),
            Err(GeometryError::UnplacedVertex(5))
        );

        let (g, lines, mut pl) = sun3_setup();
        pl.assignment.insert(0, LineRef::h(7));
        assert!(matches!(
            verify_realization(&g, &lines, &pl),
            Err(GeometryError::LineOutOfRange { vertex: 0, .. })
        ));
    }

    #[test]
    fn valid_implies_intersection_graph_matches() {
        let (g, lines, pl) = sun3_setup();
        let report = verify_realization(&g, &lines, &pl).unwrap();
        assert!(report.is_valid());
        let pts = pl.points_for(g.vertex_count()).unwrap();
        assert_eq!(crate::intersection_graph(&pts), g);
    }
}
