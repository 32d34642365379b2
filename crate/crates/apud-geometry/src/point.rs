use crate::rational::{parse_rat, rat_string, Rat};
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// A disk center with exact rational coordinates. `z` defaults to 0; the
/// 3D lift uses the same type with two z-planes.
#[derive(Clone, PartialEq, Eq)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
    pub z: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point {
            x,
            y,
            z: Rat::zero(),
        }
    }

    pub fn new3(x: Rat, y: Rat, z: Rat) -> Self {
        Point { x, y, z }
    }

    /// Squared Euclidean distance, exact.
    pub fn dist2(&self, other: &Point) -> Rat {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        let dz = &self.z - &other.z;
        &dx * &dx + &dy * &dy + &dz * &dz
    }

    pub fn translate(&self, dx: &Rat, dy: &Rat) -> Point {
        Point {
            x: &self.x + dx,
            y: &self.y + dy,
            z: self.z.clone(),
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.z.is_zero() {
            write!(f, "({}, {})", self.x, self.y)
        } else {
            write!(f, "({}, {}, {})", self.x, self.y, self.z)
        }
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut v = vec![rat_string(&self.x), rat_string(&self.y)];
        if !self.z.is_zero() {
            v.push(rat_string(&self.z));
        }
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        if v.len() != 2 && v.len() != 3 {
            return Err(D::Error::custom("point needs 2 or 3 coordinates"));
        }
        let mut coords = v
            .iter()
            .map(|s| parse_rat(s).map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        let z = if coords.len() == 3 {
            coords.pop().unwrap()
        } else {
            Rat::zero()
        };
        let y = coords.pop().unwrap();
        let x = coords.pop().unwrap();
        Ok(Point { x, y, z })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn dist2_is_exact() {
        let p = Point::new(rat(0, 1), rat(0, 1));
        let q = Point::new(rat(3, 2), rat(0, 1));
        assert_eq!(p.dist2(&q), rat(9, 4));
    }

    #[test]
    fn serde_point() {
        let p = Point::new(rat(-3, 2), rat(1, 1));
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"["-3/2","1/1"]"#);
        assert_eq!(serde_json::from_str::<Point>(&js).unwrap(), p);
        let p3 = Point::new3(rat(0, 1), rat(0, 1), rat(9, 10));
        let js3 = serde_json::to_string(&p3).unwrap();
        assert_eq!(js3, r#"["0/1","0/1","9/10"]"#);
        assert_eq!(serde_json::from_str::<Point>(&js3).unwrap(), p3);
    }
}
