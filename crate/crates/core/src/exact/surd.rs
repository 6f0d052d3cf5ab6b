use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Div, Mul, Neg};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::primes::squarefree_split;
use crate::error::{Error, Result};

/// `coeff * sqrt(radicand)` with a squarefree integer radicand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurdValue {
    coeff: BigRational,
    radicand: BigUint,
}

/// For squarefree `r1`, `r2`: `r1 * r2 = s^2 * r` with `r` squarefree.
pub(crate) fn combine_radicands(r1: &BigUint, r2: &BigUint) -> (BigUint, BigUint) {
    let g = r1.gcd(r2);
    let r = (r1 / &g) * (r2 / &g);
    (g, r)
}

impl SurdValue {
    pub fn zero() -> Self {
        SurdValue { coeff: BigRational::zero(), radicand: BigUint::one() }
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn rational(coeff: BigRational) -> Self {
        SurdValue { coeff, radicand: BigUint::one() }
    }

    /// Trusted constructor: `radicand` must already be squarefree.
    pub(crate) fn from_parts(coeff: BigRational, radicand: BigUint) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            SurdValue { coeff, radicand }
        }
    }

    /// `coeff * sqrt(radicand)` brought to normal form.
    pub fn new(coeff: BigRational, radicand: BigRational) -> Result<Self> {
        if radicand.is_negative() {
            return Err(Error::NegativeRadicand);
        }
        if coeff.is_zero() || radicand.is_zero() {
            return Ok(Self::zero());
        }
        let p = radicand.numer().magnitude();
        let q = radicand.denom().magnitude();
        let (s, r) = squarefree_split(&(p * q));
        let scale = BigRational::new(BigInt::from(s), BigInt::from(q.clone()));
        Ok(SurdValue { coeff: coeff * scale, radicand: r })
    }

    /// `sign(q) * sqrt(|q|)`.
    pub fn from_signed_square(q: &BigRational) -> Self {
        let v = Self::new(BigRational::one(), q.abs()).expect("nonnegative radicand");
        if q.is_negative() {
            -v
        } else {
            v
        }
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigUint {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.radicand.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.coeff.is_negative()
    }

    /// The square of the value, carrying the sign of the value.
    pub fn signed_square(&self) -> BigRational {
        let sq = &self.coeff * &self.coeff * BigRational::from_integer(BigInt::from(self.radicand.clone()));
        if self.coeff.is_negative() {
            -sq
        } else {
            sq
        }
    }

    pub fn square(&self) -> BigRational {
        self.signed_square().abs()
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self::from_parts(&self.coeff * q, self.radicand.clone())
    }

    pub fn to_f64(&self) -> f64 {
        self.coeff.to_f64().unwrap_or(f64::NAN) * self.radicand.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    /// Decimal expansion truncated toward zero after `digits` places.
    pub fn to_decimal(&self, digits: usize) -> String {
        let p = self.coeff.numer().magnitude();
        let q = self.coeff.denom().magnitude();
        let ten = BigUint::from(10u32).pow(digits as u32);
        let big = p * p * &self.radicand * &ten * &ten;
        let scaled = big.sqrt() / q;
        let s = scaled.to_string();
        let s = if s.len() <= digits { format!("{}{}", "0".repeat(digits + 1 - s.len()), s) } else { s };
        let (int, frac) = s.split_at(s.len() - digits);
        let sign = if self.is_negative() && !scaled.is_zero() { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }
}

impl<'a> Mul<&'a SurdValue> for &'a SurdValue {
    type Output = SurdValue;
    fn mul(self, o: &SurdValue) -> SurdValue {
        let (s, r) = combine_radicands(&self.radicand, &o.radicand);
        let c = &self.coeff * &o.coeff * BigRational::from_integer(BigInt::from(s));
        SurdValue::from_parts(c, r)
    }
}

impl Mul for SurdValue {
    type Output = SurdValue;
    fn mul(self, o: SurdValue) -> SurdValue {
        &self * &o
    }
}

impl<'a> Div<&'a SurdValue> for &'a SurdValue {
    type Output = SurdValue;
    fn div(self, o: &SurdValue) -> SurdValue {
        assert!(!o.is_zero(), "division by zero surd");
        let inv = SurdValue::from_parts(
            BigRational::one() / (&o.coeff * BigRational::from_integer(BigInt::from(o.radicand.clone()))),
            o.radicand.clone(),
        );
        self * &inv
    }
}

impl Div for SurdValue {
    type Output = SurdValue;
    fn div(self, o: SurdValue) -> SurdValue {
        &self / &o
    }
}

impl Neg for SurdValue {
    type Output = SurdValue;
    fn neg(self) -> SurdValue {
        SurdValue { coeff: -self.coeff, radicand: self.radicand }
    }
}

impl fmt::Display for SurdValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand.is_one() {
            write!(f, "{}", self.coeff)
        } else {
            write!(f, "{}*sqrt({})", self.coeff, self.radicand)
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(BigRational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p = p.trim().parse::<BigInt>().map_err(|_| bad())?;
            let q = q.trim().parse::<BigInt>().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

impl FromStr for SurdValue {
    type Err = Error;

    /// Accepts `p`, `p/q`, `p/q*sqrt(r)` and `p/q*sqrt(r/s)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once("*sqrt(") {
            None => Ok(SurdValue::rational(parse_rational(s)?)),
            Some((c, rest)) => {
                let inner = rest.strip_suffix(')').ok_or_else(|| Error::Parse(s.to_string()))?;
                SurdValue::new(parse_rational(c)?, parse_rational(inner)?)
            }
        }
    }
}

/// A finite sum of surds, grouped by squarefree radicand.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SurdSum {
    terms: BTreeMap<BigUint, BigRational>,
}

impl SurdSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, v: &SurdValue) {
        if v.is_zero() {
            return;
        }
        let entry = self.terms.entry(v.radicand.clone()).or_insert_with(BigRational::zero);
        *entry += &v.coeff;
        if entry.is_zero() {
            self.terms.remove(&v.radicand);
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul_surd(&self, v: &SurdValue) -> SurdSum {
        let mut out = SurdSum::new();
        for (r, c) in &self.terms {
            out.add(&(&SurdValue::from_parts(c.clone(), r.clone()) * v));
        }
        out
    }

    /// Collapses to a single surd; fails when two incommensurable roots remain.
    pub fn into_surd(self) -> Result<SurdValue> {
        match self.terms.len() {
            0 => Ok(SurdValue::zero()),
            1 => {
                let (r, c) = self.terms.into_iter().next().expect("one term");
                Ok(SurdValue::from_parts(c, r))
            }
            k => Err(Error::MixedSurds(k)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn normalization_examples() {
        let v = SurdValue::new(q(1, 1), q(4, 1)).unwrap();
        assert_eq!(v, SurdValue::rational(q(2, 1)));
        let v = SurdValue::new(q(1, 1), q(8, 9)).unwrap();
        assert_eq!(v.coeff(), &q(2, 3));
        assert_eq!(v.radicand(), &BigUint::from(2u32));
        let v = SurdValue::new(q(0, 1), q(5, 1)).unwrap();
        assert_eq!(v, SurdValue::zero());
        assert_eq!(SurdValue::new(q(1, 1), q(-1, 1)), Err(Error::NegativeRadicand));
    }

    #[test]
    fn rational_radicand_moves_denominator() {
        let v = SurdValue::new(q(1, 1), q(1, 2)).unwrap();
        assert_eq!(v.coeff(), &q(1, 2));
        assert_eq!(v.radicand(), &BigUint::from(2u32));
    }

    #[test]
    fn products_and_quotients() {
        let a = SurdValue::new(q(1, 1), q(6, 1)).unwrap();
        let b = SurdValue::new(q(1, 1), q(10, 1)).unwrap();
        let p = &a * &b;
        assert_eq!(p.coeff(), &q(2, 1));
        assert_eq!(p.radicand(), &BigUint::from(15u32));
        assert_eq!(&p / &b, a);
    }

    #[test]
    fn rendering_round_trip() {
        for v in [
            SurdValue::new(q(-3, 7), q(12, 5)).unwrap(),
            SurdValue::rational(q(5, 2)),
            SurdValue::zero(),
        ] {
            let s = v.to_string();
            assert_eq!(s.parse::<SurdValue>().unwrap(), v);
            assert_eq!(s.parse::<SurdValue>().unwrap().to_string(), s);
        }
        assert_eq!("1/2*sqrt(1/2)".parse::<SurdValue>().unwrap(), SurdValue::new(q(1, 1), q(1, 8)).unwrap());
    }

    #[test]
    fn decimals_truncate() {
        let v = SurdValue::new(q(1, 1), q(2, 1)).unwrap();
        assert_eq!(v.to_decimal(5), "1.41421");
        assert_eq!((-v).to_decimal(3), "-1.414");
        assert_eq!(SurdValue::rational(q(1, 3)).to_decimal(4), "0.3333");
        assert_eq!(SurdValue::rational(q(7, 1)).to_decimal(0), "7");
    }

    #[test]
    fn sums_collapse() {
        let mut s = SurdSum::new();
        s.add(&SurdValue::new(q(1, 1), q(8, 1)).unwrap());
        s.add(&SurdValue::new(q(-1, 1), q(2, 1)).unwrap());
        assert_eq!(s.clone().into_surd().unwrap(), SurdValue::new(q(1, 1), q(2, 1)).unwrap());
        s.add(&SurdValue::rational(q(1, 1)));
        assert_eq!(s.into_surd(), Err(Error::MixedSurds(2)));
    }
}
