//! Exact rational multiples of `π`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// The angle `q·π` for a rational `q` kept in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Angle(BigRational);

impl Angle {
    /// `num/den · π`. Panics when `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Angle(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `q · π`.
    pub fn from_ratio(q: BigRational) -> Self {
        Angle(q)
    }

    /// `k · π/30`.
    pub fn thirtieths(k: i64) -> Self {
        Angle::new(k, 30)
    }

    pub fn zero() -> Self {
        Angle(BigRational::zero())
    }

    /// `π`.
    pub fn pi() -> Self {
        Angle(BigRational::one())
    }

    /// The rational coefficient of `π`.
    pub fn coefficient(&self) -> &BigRational {
        &self.0
    }

    /// The value in units of `π/30`, when it is an integer multiple.
    pub fn as_thirtieths(&self) -> Option<BigInt> {
        let v = &self.0 * BigRational::from_integer(BigInt::from(30));
        v.is_integer().then(|| v.to_integer())
    }

    /// The value in units of `π/30`, as an exact rational.
    pub fn thirtieths_ratio(&self) -> BigRational {
        &self.0 * BigRational::from_integer(BigInt::from(30))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// Multiplies by an integer.
    pub fn times(&self, k: i64) -> Self {
        Angle(&self.0 * BigRational::from_integer(BigInt::from(k)))
    }
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, o: Angle) -> Angle {
        Angle(self.0 + o.0)
    }
}

impl<'a> Add<&'a Angle> for &'a Angle {
    type Output = Angle;
    fn add(self, o: &Angle) -> Angle {
        Angle(&self.0 + &o.0)
    }
}

impl AddAssign for Angle {
    fn add_assign(&mut self, o: Angle) {
        self.0 += o.0;
    }
}

impl Sub for Angle {
    type Output = Angle;
    fn sub(self, o: Angle) -> Angle {
        Angle(self.0 - o.0)
    }
}

impl Neg for Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        Angle(-self.0)
    }
}

impl Mul<i64> for Angle {
    type Output = Angle;
    fn mul(self, k: i64) -> Angle {
        self.times(k)
    }
}

impl std::iter::Sum for Angle {
    fn sum<I: Iterator<Item = Angle>>(iter: I) -> Angle {
        iter.fold(Angle::zero(), |a, b| a + b)
    }
}

/// Renders as `0`, `pi`, `-pi`, `2 pi`, `1/6 pi` or `-13/30 pi`.
impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = &self.0;
        if q.is_zero() {
            return write!(f, "0");
        }
        if q.is_integer() {
            let n = q.to_integer();
            if n.is_one() {
                return write!(f, "pi");
            }
            if n == -BigInt::one() {
                return write!(f, "-pi");
            }
            return write!(f, "{n} pi");
        }
        write!(f, "{}/{} pi", q.numer(), q.denom())
    }
}

/// Error from [`Angle::from_str`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse angle `{0}`")]
pub struct AngleParseError(pub String);

/// Accepts the [`fmt::Display`] forms plus `pi/6`, `-pi/6` and `13pi/30`.
impl FromStr for Angle {
    type Err = AngleParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || AngleParseError(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "0" {
            return Ok(Angle::zero());
        }
        let (neg, t) = match t.strip_prefix('-') {
            Some(r) => (true, r.to_string()),
            None => (false, t),
        };
        let (before, after) = t.split_once("pi").ok_or_else(err)?;
        let int = |x: &str| x.parse::<BigInt>().map_err(|_| err());
        let num_den = |x: &str| -> Result<(BigInt, BigInt), AngleParseError> {
            match x.split_once('/') {
                Some((n, d)) => Ok((int(n)?, int(d)?)),
                None if x.is_empty() => Ok((BigInt::one(), BigInt::one())),
                None => Ok((int(x)?, BigInt::one())),
            }
        };
        let (mut n, mut d) = num_den(before)?;
        if let Some(den) = after.strip_prefix('/') {
            d *= int(den)?;
        } else if !after.is_empty() {
            return Err(err());
        }
        if d.is_zero() {
            return Err(err());
        }
        if neg {
            n = -n;
        }
        Ok(Angle(BigRational::new(n, d)))
    }
}

impl Serialize for Angle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Angle {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(Angle::new(1, 6).to_string(), "1/6 pi");
        assert_eq!(Angle::new(0, 5).to_string(), "0");
        assert_eq!(Angle::new(4, 2).to_string(), "2 pi");
        assert_eq!(Angle::new(-13, 30).to_string(), "-13/30 pi");
        assert_eq!(Angle::new(-1, 1).to_string(), "-pi");
    }

    #[test]
    fn parse_forms() {
        for (s, a) in [
            ("1/6 pi", Angle::new(1, 6)),
            ("pi/6", Angle::new(1, 6)),
            ("-31pi/210", Angle::new(-31, 210)),
            ("2 pi", Angle::new(2, 1)),
            ("-pi", Angle::new(-1, 1)),
            ("0", Angle::zero()),
        ] {
            assert_eq!(s.parse::<Angle>().unwrap(), a, "{s}");
            assert_eq!(a.to_string().parse::<Angle>().unwrap(), a);
        }
        assert!("pi/0".parse::<Angle>().is_err());
        assert!("3".parse::<Angle>().is_err());
    }

    #[test]
    fn thirtieths() {
        assert_eq!(Angle::new(2, 3).as_thirtieths(), Some(BigInt::from(20)));
        assert_eq!(Angle::new(1, 7).as_thirtieths(), None);
    }
}
