use crate::lines::LineRef;
use crate::point::Point;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;

/// A candidate realization: exact coordinates per vertex plus the line each
/// vertex is assigned to. A placement is only meaningful against a graph
/// and a [`crate::LineConfig`]; the verifier checks the full contract.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Placement {
    pub points: BTreeMap<usize, Point>,
    pub assignment: BTreeMap<usize, LineRef>,
}

impl Placement {
    pub fn new() -> Self {
        Placement::default()
    }

    pub fn place(&mut self, vertex: usize, point: Point, line: LineRef) {
        self.points.insert(vertex, point);
        self.assignment.insert(vertex, line);
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points in vertex order; `None` if any of `0..n` is missing.
    pub fn points_for(&self, n: usize) -> Option<Vec<Point>> {
        (0..n).map(|v| self.points.get(&v).cloned()).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct PlacementRepr {
    points: BTreeMap<String, Point>,
    assignment: BTreeMap<String, LineRef>,
}

impl Serialize for Placement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PlacementRepr {
            points: self
                .points
                .iter()
                .map(|(v, p)| (v.to_string(), p.clone()))
                .collect(),
            assignment: self
                .assignment
                .iter()
                .map(|(v, l)| (v.to_string(), *l))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Placement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = PlacementRepr::deserialize(d)?;
        let parse_key = |k: &String| -> Result<usize, D::Error> {
            k.parse()
                .map_err(|_| D::Error::custom(format!("bad vertex key `{}`", k)))
        };
        let mut out = Placement::new();
        for (k, p) in &repr.points {
            out.points.insert(parse_key(k)?, p.clone());
        }
        for (k, l) in &repr.assignment {
            out.assignment.insert(parse_key(k)?, *l);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn serde_shape() {
        let mut pl = Placement::new();
        pl.place(0, Point::new(rat(0, 1), rat(0, 1)), LineRef::h(0));
        pl.place(1, Point::new(rat(-3, 2), rat(0, 1)), LineRef::v(1));
        let js = serde_json::to_string(&pl).unwrap();
        assert_eq!(
            js,
            r#"{"points":{"0":["0/1","0/1"],"1":["-3/2","0/1"]},"assignment":{"0":{"axis":"H","index":0},"1":{"axis":"V","index":1}}}"#
        );
        assert_eq!(serde_json::from_str::<Placement>(&js).unwrap(), pl);
    }
}
