use crate::point::Point;
use crate::rational::{rat_int, Rat};
use crate::GeometryError;
use apud_graph::Graph;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// Radius-1 disks around `p` and `q` intersect iff the squared center
/// distance is at most 4, decided exactly (boundary contact intersects).
pub fn disks_intersect(p: &Point, q: &Point) -> bool {
    p.dist2(q) <= rat_int(4)
}

/// All centers scaled to a common denominator as `[x, y, z]` integer
/// triples, provided everything fits comfortably in `i128`. The scaled
/// comparison `dx^2+dy^2+dz^2 <= 4*D^2` is exact and far cheaper than
/// big-rational arithmetic on instance-sized placements.
pub(crate) fn scaled_coords(points: &[Point]) -> Option<(Vec<[i128; 3]>, i128)> {
    let mut denom = BigInt::from(1);
    for p in points {
        for c in [&p.x, &p.y, &p.z] {
            denom = denom.lcm(c.denom());
        }
    }
    let limit = BigInt::from(1i128 << 60);
    if denom.abs() >= limit {
        return None;
    }
    let mut out = Vec::with_capacity(points.len());
    for p in points {
        let mut triple = [0i128; 3];
        for (i, c) in [&p.x, &p.y, &p.z].into_iter().enumerate() {
            let scaled = c.numer() * (&denom / c.denom());
            if scaled.abs() >= limit {
                return None;
            }
            triple[i] = scaled.to_i128()?;
        }
        out.push(triple);
    }
    Some((out, denom.to_i128()?))
}

#[inline]
pub(crate) fn scaled_intersect(a: &[i128; 3], b: &[i128; 3], four_d2: i128) -> bool {
    let dx = a[0] - b[0];
    let dy = a[1] - b[1];
    let dz = a[2] - b[2];
    dx * dx + dy * dy + dz * dz <= four_d2
}

/// The unit disk graph of `points`: vertex `i` per center, edge `(i, j)`
/// iff the disks intersect.
pub fn intersection_graph(points: &[Point]) -> Graph {
    let n = points.len();
    let mut g = Graph::new(n);
    if let Some((scaled, d)) = scaled_coords(points) {
        let four_d2 = 4 * d * d;
        for i in 0..n {
            for j in i + 1..n {
                if scaled_intersect(&scaled[i], &scaled[j], four_d2) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
    } else {
        for i in 0..n {
            for j in i + 1..n {
                if disks_intersect(&points[i], &points[j]) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
    }
    g
}

/// Executable form of the horizontal-blocking fact: with disks at `(a,0)`
/// and `(b,0)`, `0 < |a| < |b|`, a disk at `(0,c)` cannot intersect the
/// farther one without intersecting the nearer one. Returns whether the
/// implication holds for these values (it always does; the operation exists
/// so the property can be hammered by tests).
pub fn triangle_blocking(a: &Rat, b: &Rat, c: &Rat) -> Result<bool, GeometryError> {
    if a.is_zero() || a.abs() >= b.abs() {
        return Err(GeometryError::Rejected(format!(
            "triangle_blocking needs 0 < |a| < |b|, got a={}, b={}",
            a, b
        )));
    }
    let origin_side = Point::new(Rat::zero(), c.clone());
    let near = Point::new(a.clone(), Rat::zero());
    let far = Point::new(b.clone(), Rat::zero());
    Ok(!disks_intersect(&origin_side, &far) || disks_intersect(&origin_side, &near))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use apud_graph::{make_pattern, PatternKind};

    fn p(x: Rat, y: Rat) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn boundary_contact_intersects() {
        assert!(disks_intersect(
            &p(rat(0, 1), rat(0, 1)),
            &p(rat(2, 1), rat(0, 1))
        ));
        assert!(!disks_intersect(
            &p(rat(0, 1), rat(0, 1)),
            &p(rat(201, 100), rat(0, 1))
        ));
    }

    #[test]
    fn sun3_witness_pairs() {
        // From the two-perpendicular-lines S_3 layout: (-3/2,0) misses (1,0)
        // but reaches (0,1).
        assert!(!disks_intersect(
            &p(rat(-3, 2), rat(0, 1)),
            &p(rat(1, 1), rat(0, 1))
        ));
        assert!(disks_intersect(
            &p(rat(-3, 2), rat(0, 1)),
            &p(rat(0, 1), rat(1, 1))
        ));
    }

    /// The six-center layout on `{y=0},{x=0}` whose intersection graph is
    /// exactly the canonical 3-sun: clique (-1,0),(0,1),(1,0); rays
    /// (-3/2,0),(3/2,0),(0,-3/2).
    pub(crate) fn sun3_points() -> Vec<Point> {
        vec![
            p(rat(-1, 1), rat(0, 1)),
            p(rat(0, 1), rat(1, 1)),
            p(rat(1, 1), rat(0, 1)),
            p(rat(-3, 2), rat(0, 1)),
            p(rat(3, 2), rat(0, 1)),
            p(rat(0, 1), rat(-3, 2)),
        ]
    }

    #[test]
    fn sun3_intersection_graph_is_canonical() {
        let g = intersection_graph(&sun3_points());
        assert_eq!(g, make_pattern(PatternKind::Sun(3)).unwrap());
    }

    #[test]
    fn tiny_graphs() {
        assert_eq!(intersection_graph(&[p(rat(0, 1), rat(0, 1))]).edge_count(), 0);
        let path = intersection_graph(&[
            p(rat(0, 1), rat(0, 1)),
            p(rat(2, 1), rat(0, 1)),
            p(rat(4, 1), rat(0, 1)),
        ]);
        assert_eq!(path.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn blocking_examples() {
        assert!(triangle_blocking(&rat(1, 1), &rat(3, 2), &rat(1, 1)).unwrap());
        assert!(triangle_blocking(&rat(1, 1), &rat(2, 1), &rat(0, 1)).unwrap());
        assert!(triangle_blocking(&rat(0, 1), &rat(1, 1), &rat(0, 1)).is_err());
        assert!(triangle_blocking(&rat(2, 1), &rat(-2, 1), &rat(0, 1)).is_err());
    }

    #[test]
    fn fast_path_matches_exact() {
        let pts = sun3_points();
        let (scaled, d) = scaled_coords(&pts).unwrap();
        let four_d2 = 4 * d * d;
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                assert_eq!(
                    scaled_intersect(&scaled[i], &scaled[j], four_d2),
                    disks_intersect(&pts[i], &pts[j])
                );
            }
        }
    }
}
