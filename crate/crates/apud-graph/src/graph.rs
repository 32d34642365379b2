use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("pattern size {size} out of range for {kind}: {reason}")]
    SizeOutOfRange {
        kind: &'static str,
        size: usize,
        reason: &'static str,
    },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// An undirected simple graph on vertices `0..n`.
///
/// Adjacency is stored as one bitset row per vertex, which keeps the
/// backtracking searches in this workspace cheap. Duplicate edge insertions
/// are idempotent; self-loops are rejected.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    m: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            rows: vec![0; words * n.max(1)],
            m: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !self.adjacent(u, v) {
            self.rows[u * self.words + v / 64] |= 1 << (v % 64);
            self.rows[v * self.words + u / 64] |= 1 << (u % 64);
            self.m += 1;
        }
        Ok(())
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// Adjacency bitset row of `v` (`words_per_row` words).
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn words_per_row(&self) -> usize {
        self.words
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True when `v` is adjacent to at least one vertex of the bitset `mask`
    /// (same word layout as adjacency rows).
    #[inline]
    pub fn adjacent_to_set(&self, v: usize, mask: &[u64]) -> bool {
        self.row(v).iter().zip(mask).any(|(a, b)| a & b != 0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// The induced subgraph on the complement of `drop`, relabeled to
    /// `0..n-|drop|` preserving vertex order. Out-of-range entries in `drop`
    /// are ignored.
    pub fn without_vertices(&self, drop: &[usize]) -> Graph {
        let mut dead = vec![false; self.n];
        for &v in drop {
            if v < self.n {
                dead[v] = true;
            }
        }
        let mut map = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if !dead[v] {
                map[v] = next;
                next += 1;
            }
        }
        let mut g = Graph::new(next);
        for (u, v) in self.edges() {
            if !dead[u] && !dead[v] {
                g.add_edge(map[u], map[v]).unwrap();
            }
        }
        g
    }

    /// The induced subgraph on `keep` (sorted order = new labels `0..`).
    pub fn induced_on(&self, keep: &[usize]) -> Graph {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut g = Graph::new(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v).unwrap();
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Text form: header `graph <n> <m>` followed by one `u v` pair per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("graph {} {}\n", self.n, self.m);
        for (u, v) in self.edges() {
            s.push_str(&format!("{} {}\n", u, v));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (lno, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            msg: "empty graph file".into(),
        })?;
        let mut it = header.split_whitespace();
        if it.next() != Some("graph") {
            return Err(GraphError::Parse {
                line: lno,
                msg: "expected header `graph <n> <m>`".into(),
            });
        }
        let parse_num = |tok: Option<&str>, lno: usize| -> Result<usize, GraphError> {
            tok.ok_or(GraphError::Parse {
                line: lno,
                msg: "missing number".into(),
            })?
            .parse()
            .map_err(|_| GraphError::Parse {
                line: lno,
                msg: "invalid number".into(),
            })
        };
        let n = parse_num(it.next(), lno)?;
        let m = parse_num(it.next(), lno)?;
        let mut g = Graph::new(n);
        for (lno, line) in lines {
            let mut it = line.split_whitespace();
            let u = parse_num(it.next(), lno)?;
            let v = parse_num(it.next(), lno)?;
            g.add_edge(u, v).map_err(|e| GraphError::Parse {
                line: lno,
                msg: e.to_string(),
            })?;
        }
        if g.m != m {
            return Err(GraphError::Parse {
                line: 1,
                msg: format!("header declares {} edges, found {}", m, g.m),
            });
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n,
            edges: self.edges(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(d)?;
        Graph::from_edges(repr.n, repr.edges).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_and_query() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.adjacent(1, 0));
        assert!(!g.adjacent(0, 2));
        assert_eq!(g.neighbors(1).collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn rejects_bad_edges() {
        let mut g = Graph::new(3);
        assert_eq!(g.add_edge(0, 0), Err(GraphError::SelfLoop(0)));
        assert_eq!(g.add_edge(0, 3), Err(GraphError::VertexOutOfRange(3, 3)));
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 0).unwrap(); // duplicate is a no-op
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn text_round_trip() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let text = g.to_text();
        assert!(text.starts_with("graph 5 3\n"));
        assert_eq!(Graph::from_text(&text).unwrap(), g);
    }

    #[test]
    fn text_errors_carry_line_numbers() {
        let err = Graph::from_text("graph 2 1\n0 2\n").unwrap_err();
        assert_eq!(
            err,
            GraphError::Parse {
                line: 2,
                msg: "vertex 2 out of range (graph has 2 vertices)".into()
            }
        );
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::from_edges(3, [(0, 2), (0, 1)]).unwrap();
        let js = serde_json::to_string(&g).unwrap();
        assert_eq!(js, r#"{"n":3,"edges":[[0,1],[0,2]]}"#);
        let back: Graph = serde_json::from_str(&js).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn induced_and_deletion() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let h = g.without_vertices(&[2]);
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.edges(), vec![(0, 1), (0, 3), (2, 3)]);
        let k = g.induced_on(&[0, 1, 2]);
        assert_eq!(k.edges(), vec![(0, 1), (1, 2)]);
    }
}
