//! Exact rationals and their canonical `num/den` wire form.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub type Rat = num_rational::BigRational;

/// `n/d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Canonical serialization: always `num/den` with positive denominator and
/// the fraction fully reduced, e.g. `39/10`, `-3/2`, `0/1`.
pub fn rat_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den` or a bare integer `num`.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| format!("invalid rational numerator `{}`", s))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| format!("invalid rational denominator `{}`", s))?;
    if d.is_zero() {
        return Err(format!("zero denominator in `{}`", s));
    }
    Ok(Rat::new(n, d))
}

/// Decimal rendering for SVG output: exact when the denominator divides a
/// power of ten up to 10^9, otherwise rounded half-up to 9 fractional
/// digits. Deterministic for equal inputs.
pub fn rat_decimal(r: &Rat) -> String {
    const DIGITS: u32 = 9;
    let scale = BigInt::from(10u64.pow(DIGITS));
    let scaled = r * Rat::from_integer(scale.clone());
    let rounded = if scaled.is_negative() {
        -(-scaled + rat(1, 2)).floor()
    } else {
        (scaled + rat(1, 2)).floor()
    };
    let v = rounded.to_integer();
    let neg = v.is_negative();
    let abs = v.abs();
    let int_part = &abs / &scale;
    let frac_part = &abs % &scale;
    let mut frac = format!("{:09}", frac_part);
    while frac.ends_with('0') {
        frac.pop();
    }
    let sign = if neg && (!int_part.is_zero() || !frac.is_empty()) {
        "-"
    } else {
        ""
    };
    if frac.is_empty() {
        format!("{}{}", sign, int_part)
    } else {
        format!("{}{}.{}", sign, int_part, frac)
    }
}

/// Serde adapter: a `Rat` as its `num/den` string.
pub mod serde_rat {
    use super::*;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rat_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_strings() {
        assert_eq!(rat_string(&rat(39, 10)), "39/10");
        assert_eq!(rat_string(&rat(-6, 4)), "-3/2");
        assert_eq!(rat_string(&rat(0, 7)), "0/1");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rat("39/10").unwrap(), rat(39, 10));
        assert_eq!(parse_rat("-3").unwrap(), rat_int(-3));
        assert_eq!(parse_rat(" 4 / -8 ").unwrap(), rat(-1, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(rat_decimal(&rat(39, 10)), "3.9");
        assert_eq!(rat_decimal(&rat(-1, 2)), "-0.5");
        assert_eq!(rat_decimal(&rat_int(7)), "7");
        assert_eq!(rat_decimal(&rat(1, 3)), "0.333333333");
        assert_eq!(rat_decimal(&rat(0, 1)), "0");
    }
}
