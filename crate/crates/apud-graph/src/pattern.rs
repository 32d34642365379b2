use crate::{Graph, GraphError};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// The pattern graphs the obstruction and structure checks look for.
///
/// `Claw` is `Star(3)` and `Net` is `Sunlet(3)`; they are kept as named
/// variants because the recognition procedures talk about them by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PatternKind {
    /// `C_m`, m >= 3.
    Cycle(usize),
    /// `K_{1,m}`: a center with m independent rays, m >= 1.
    Star(usize),
    /// `I_m`: an m-cycle with one pendant ray per cycle vertex, m >= 3.
    Sunlet(usize),
    /// `S_m`: an m-clique with m rays, ray i adjacent to clique i and i+1, m >= 3.
    Sun(usize),
    Claw,
    Net,
    /// A 4-cycle plus one chord (4 vertices, 5 edges).
    Diamond,
}

impl PatternKind {
    /// Resolves the named aliases to their parameterized forms.
    pub fn canonical(self) -> PatternKind {
        match self {
            PatternKind::Claw => PatternKind::Star(3),
            PatternKind::Net => PatternKind::Sunlet(3),
            other => other,
        }
    }

    pub fn vertex_count(self) -> usize {
        match self.canonical() {
            PatternKind::Cycle(m) => m,
            PatternKind::Star(m) => m + 1,
            PatternKind::Sunlet(m) | PatternKind::Sun(m) => 2 * m,
            PatternKind::Diamond => 4,
            _ => unreachable!(),
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternKind::Cycle(m) => write!(f, "c{}", m),
            PatternKind::Star(m) => write!(f, "star{}", m),
            PatternKind::Sunlet(m) => write!(f, "sunlet{}", m),
            PatternKind::Sun(m) => write!(f, "sun{}", m),
            PatternKind::Claw => write!(f, "claw"),
            PatternKind::Net => write!(f, "net"),
            PatternKind::Diamond => write!(f, "diamond"),
        }
    }
}

impl FromStr for PatternKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim().to_ascii_lowercase();
        let tail = |prefix: &str| -> Option<Result<usize, String>> {
            s.strip_prefix(prefix).map(|t| {
                t.parse::<usize>()
                    .map_err(|_| format!("bad pattern size in `{}`", s))
            })
        };
        match s.as_str() {
            "claw" => return Ok(PatternKind::Claw),
            "net" => return Ok(PatternKind::Net),
            "diamond" => return Ok(PatternKind::Diamond),
            _ => {}
        }
        // Longest prefix first so `sunlet4` is not read as `sun` + junk.
        if let Some(m) = tail("sunlet") {
            return Ok(PatternKind::Sunlet(m?));
        }
        if let Some(m) = tail("sun") {
            return Ok(PatternKind::Sun(m?));
        }
        if let Some(m) = tail("star") {
            return Ok(PatternKind::Star(m?));
        }
        if let Some(m) = tail("c") {
            return Ok(PatternKind::Cycle(m?));
        }
        Err(format!(
            "unknown pattern `{}` (expected c<k>, star<m>, sun<m>, sunlet<m>, claw, net, diamond)",
            s
        ))
    }
}

/// Builds the canonical pattern graph for `kind`.
///
/// Vertex numbering is fixed: cycle/clique vertices come first in their
/// cyclic order, rays second (ray i attached to core vertex i), the star
/// center is vertex 0, and the diamond chord is the edge (0, 1) with tips
/// 2 and 3.
pub fn make_pattern(kind: PatternKind) -> Result<Graph, GraphError> {
    let out_of_range = |kind: &'static str, size: usize, reason: &'static str| {
        Err(GraphError::SizeOutOfRange { kind, size, reason })
    };
    match kind.canonical() {
        PatternKind::Cycle(m) => {
            if m < 3 {
                return out_of_range("cycle", m, "needs m >= 3");
            }
            let mut g = Graph::new(m);
            for i in 0..m {
                g.add_edge(i, (i + 1) % m)?;
            }
            Ok(g)
        }
        PatternKind::Star(m) => {
            if m < 1 {
                return out_of_range("star", m, "needs m >= 1");
            }
            let mut g = Graph::new(m + 1);
            for i in 1..=m {
                g.add_edge(0, i)?;
            }
            Ok(g)
        }
        PatternKind::Sunlet(m) => {
            if m < 3 {
                return out_of_range("sunlet", m, "needs m >= 3");
            }
            let mut g = Graph::new(2 * m);
            for i in 0..m {
                g.add_edge(i, (i + 1) % m)?;
                g.add_edge(i, m + i)?;
            }
            Ok(g)
        }
        PatternKind::Sun(m) => {
            if m < 3 {
                return out_of_range("sun", m, "needs m >= 3");
            }
            let mut g = Graph::new(2 * m);
            for i in 0..m {
                for j in i + 1..m {
                    g.add_edge(i, j)?;
                }
                g.add_edge(m + i, i)?;
                g.add_edge(m + i, (i + 1) % m)?;
            }
            Ok(g)
        }
        PatternKind::Diamond => {
            let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])?;
            Ok(g)
        }
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle5_is_2_regular() {
        let g = make_pattern(PatternKind::Cycle(5)).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 5);
        assert!((0..5).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn sun3_structure() {
        // Central clique 0,1,2; ray i adjacent to exactly clique i and (i+1) mod 3.
        let g = make_pattern(PatternKind::Sun(3)).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert!(g.adjacent(0, 1) && g.adjacent(1, 2) && g.adjacent(0, 2));
        for i in 0..3 {
            let rays: Vec<_> = g.neighbors(3 + i).collect();
            let mut expect = vec![i, (i + 1) % 3];
            expect.sort_unstable();
            assert_eq!(rays, expect, "ray {}", i);
        }
    }

    #[test]
    fn sunlet4_rays_have_degree_1() {
        let g = make_pattern(PatternKind::Sunlet(4)).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 8);
        assert!((4..8).all(|v| g.degree(v) == 1));
    }

    #[test]
    fn edge_count_formulas() {
        for m in 3..=8 {
            assert_eq!(make_pattern(PatternKind::Cycle(m)).unwrap().edge_count(), m);
            assert_eq!(make_pattern(PatternKind::Star(m)).unwrap().edge_count(), m);
            assert_eq!(
                make_pattern(PatternKind::Sunlet(m)).unwrap().edge_count(),
                2 * m
            );
            assert_eq!(
                make_pattern(PatternKind::Sun(m)).unwrap().edge_count(),
                m * (m - 1) / 2 + 2 * m
            );
        }
    }

    #[test]
    fn aliases_match_parameterized_forms() {
        assert_eq!(
            make_pattern(PatternKind::Claw).unwrap(),
            make_pattern(PatternKind::Star(3)).unwrap()
        );
        assert_eq!(
            make_pattern(PatternKind::Net).unwrap(),
            make_pattern(PatternKind::Sunlet(3)).unwrap()
        );
    }

    #[test]
    fn size_out_of_range_is_rejected() {
        assert!(make_pattern(PatternKind::Cycle(2)).is_err());
        assert!(make_pattern(PatternKind::Star(0)).is_err());
        assert!(make_pattern(PatternKind::Sun(2)).is_err());
    }

    #[test]
    fn parse_names() {
        assert_eq!("c5".parse::<PatternKind>().unwrap(), PatternKind::Cycle(5));
        assert_eq!(
            "sunlet4".parse::<PatternKind>().unwrap(),
            PatternKind::Sunlet(4)
        );
        assert_eq!("sun3".parse::<PatternKind>().unwrap(), PatternKind::Sun(3));
        assert_eq!("claw".parse::<PatternKind>().unwrap(), PatternKind::Claw);
        assert!("sun".parse::<PatternKind>().is_err());
        assert!("q7".parse::<PatternKind>().is_err());
    }
}
