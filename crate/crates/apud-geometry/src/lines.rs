use crate::rational::{parse_rat, rat_string, Rat};
use crate::GeometryError;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axis {
    H,
    V,
}

/// A reference to one line of a [`LineConfig`]: an index into the sorted
/// horizontal or vertical list, never a raw coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LineRef {
    pub axis: Axis,
    pub index: usize,
}

impl LineRef {
    pub fn h(index: usize) -> Self {
        LineRef {
            axis: Axis::H,
            index,
        }
    }

    pub fn v(index: usize) -> Self {
        LineRef {
            axis: Axis::V,
            index,
        }
    }
}

/// The input line sets: horizontal lines `y = h` for each value in `H` and
/// vertical lines `x = v` for each value in `V`. Values are kept sorted and
/// distinct within each list; either list may be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineConfig {
    horizontals: Vec<Rat>,
    verticals: Vec<Rat>,
}

impl LineConfig {
    pub fn new(
        mut horizontals: Vec<Rat>,
        mut verticals: Vec<Rat>,
    ) -> Result<Self, GeometryError> {
        horizontals.sort();
        verticals.sort();
        for w in horizontals.windows(2) {
            if w[0] == w[1] {
                return Err(GeometryError::DuplicateLine(Axis::H, rat_string(&w[0])));
            }
        }
        for w in verticals.windows(2) {
            if w[0] == w[1] {
                return Err(GeometryError::DuplicateLine(Axis::V, rat_string(&w[0])));
            }
        }
        Ok(LineConfig {
            horizontals,
            verticals,
        })
    }

    /// The `{y=0}, {x=0}` configuration of the two-perpendicular-line checks.
    pub fn origin_cross() -> Self {
        use num_traits::Zero;
        LineConfig {
            horizontals: vec![Rat::zero()],
            verticals: vec![Rat::zero()],
        }
    }

    pub fn horizontals(&self) -> &[Rat] {
        &self.horizontals
    }

    pub fn verticals(&self) -> &[Rat] {
        &self.verticals
    }

    pub fn value(&self, line: LineRef) -> Option<&Rat> {
        match line.axis {
            Axis::H => self.horizontals.get(line.index),
            Axis::V => self.verticals.get(line.index),
        }
    }

    pub fn line_count(&self) -> usize {
        self.horizontals.len() + self.verticals.len()
    }

    /// All line references, horizontals first.
    pub fn refs(&self) -> impl Iterator<Item = LineRef> + '_ {
        (0..self.horizontals.len())
            .map(LineRef::h)
            .chain((0..self.verticals.len()).map(LineRef::v))
    }

    /// Index of a horizontal line with exactly this value.
    pub fn find_h(&self, y: &Rat) -> Option<usize> {
        self.horizontals.binary_search(y).ok()
    }

    pub fn find_v(&self, x: &Rat) -> Option<usize> {
        self.verticals.binary_search(x).ok()
    }
}

#[derive(Serialize, Deserialize)]
struct LineConfigRepr {
    #[serde(rename = "H")]
    h: Vec<String>,
    #[serde(rename = "V")]
    v: Vec<String>,
}

impl Serialize for LineConfig {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LineConfigRepr {
            h: self.horizontals.iter().map(rat_string).collect(),
            v: self.verticals.iter().map(rat_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LineConfig {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = LineConfigRepr::deserialize(d)?;
        let parse_all = |v: &[String]| -> Result<Vec<Rat>, D::Error> {
            v.iter()
                .map(|s| parse_rat(s).map_err(D::Error::custom))
                .collect()
        };
        LineConfig::new(parse_all(&repr.h)?, parse_all(&repr.v)?).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn sorted_and_distinct() {
        let cfg = LineConfig::new(vec![rat(1, 1), rat(-1, 2)], vec![]).unwrap();
        assert_eq!(cfg.horizontals(), &[rat(-1, 2), rat(1, 1)]);
        assert!(LineConfig::new(vec![rat(1, 2), rat(2, 4)], vec![]).is_err());
    }

    #[test]
    fn serde_round_trip() {
        let cfg = LineConfig::new(vec![rat(0, 1)], vec![rat(39, 10), rat(0, 1)]).unwrap();
        let js = serde_json::to_string(&cfg).unwrap();
        assert_eq!(js, r#"{"H":["0/1"],"V":["0/1","39/10"]}"#);
        assert_eq!(serde_json::from_str::<LineConfig>(&js).unwrap(), cfg);
    }
}
