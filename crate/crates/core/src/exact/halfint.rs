use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Error;

/// A number in `Z/2`, stored as twice its value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);
    pub const ONE: HalfInt = HalfInt(2);

    pub const fn from_int(k: i64) -> Self {
        HalfInt(2 * k)
    }

    pub const fn from_twice(t: i64) -> Self {
        HalfInt(t)
    }

    /// `k / 2`.
    pub const fn half(k: i64) -> Self {
        HalfInt(k)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    pub fn is_nonpositive_integer(self) -> bool {
        self.is_integer() && self.0 <= 0
    }

    pub fn floor(self) -> i64 {
        self.0.div_euclid(2)
    }

    pub fn to_rational(self) -> BigRational {
        BigRational::new(BigInt::from(self.0), BigInt::from(2))
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl From<i64> for HalfInt {
    fn from(k: i64) -> Self {
        HalfInt::from_int(k)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 + o.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 - o.0)
    }
}

impl Add<i64> for HalfInt {
    type Output = HalfInt;
    fn add(self, k: i64) -> HalfInt {
        HalfInt(self.0 + 2 * k)
    }
}

impl Sub<i64> for HalfInt {
    type Output = HalfInt;
    fn sub(self, k: i64) -> HalfInt {
        HalfInt(self.0 - 2 * k)
    }
}

impl Mul<i64> for HalfInt {
    type Output = HalfInt;
    fn mul(self, k: i64) -> HalfInt {
        HalfInt(self.0 * k)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Parse(s.to_string());
        match s.split_once('/') {
            None => s.parse::<i64>().map(HalfInt::from_int).map_err(|_| bad()),
            Some((p, "2")) => p.trim().parse::<i64>().map(HalfInt).map_err(|_| bad()),
            Some(_) => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let x = HalfInt::half(3);
        assert_eq!(x + HalfInt::HALF, HalfInt::from_int(2));
        assert_eq!(x - 2, HalfInt::half(-1));
        assert_eq!(-x, HalfInt::half(-3));
        assert_eq!(x.floor(), 1);
        assert_eq!(HalfInt::half(-3).floor(), -2);
        assert!(HalfInt::from_int(-2).is_nonpositive_integer());
        assert!(!HalfInt::half(-1).is_nonpositive_integer());
    }

    #[test]
    fn display_round_trip() {
        for t in -7..7 {
            let x = HalfInt::from_twice(t);
            assert_eq!(x.to_string().parse::<HalfInt>().unwrap(), x);
        }
        assert!("1/3".parse::<HalfInt>().is_err());
    }
}
