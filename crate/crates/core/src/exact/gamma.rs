use std::fmt;
use std::ops::{Div, Mul};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::halfint::HalfInt;
use super::primes;
use crate::error::{Error, Result};

/// `coeff * sqrt(pi)^sqrtpi_exp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaExact {
    pub coeff: BigRational,
    pub sqrtpi_exp: i32,
}

impl GammaExact {
    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    pub fn rational(coeff: BigRational) -> Self {
        GammaExact { coeff, sqrtpi_exp: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.sqrtpi_exp == 0 || self.coeff.is_zero()
    }

    pub fn to_rational(&self) -> Result<BigRational> {
        if self.is_rational() {
            Ok(self.coeff.clone())
        } else {
            Err(Error::ResidualSqrtPi(self.sqrtpi_exp))
        }
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.coeff.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI.sqrt().powi(self.sqrtpi_exp)
    }
}

impl Mul for GammaExact {
    type Output = GammaExact;
    fn mul(self, o: GammaExact) -> GammaExact {
        GammaExact { coeff: self.coeff * o.coeff, sqrtpi_exp: self.sqrtpi_exp + o.sqrtpi_exp }
    }
}

impl Div for GammaExact {
    type Output = GammaExact;
    fn div(self, o: GammaExact) -> GammaExact {
        GammaExact { coeff: self.coeff / o.coeff, sqrtpi_exp: self.sqrtpi_exp - o.sqrtpi_exp }
    }
}

impl fmt::Display for GammaExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sqrtpi_exp {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "{}*sqrt(pi)", self.coeff),
            p => write!(f, "{}*sqrt(pi)^{}", self.coeff, p),
        }
    }
}

/// Accumulates products and ratios of gamma values at half-integers.
///
/// Poles are tracked as formal orders of `1/eps`; a gamma at `-m` contributes
/// its residue `(-1)^m / m!`. Net negative order means zero, net positive
/// order is an error.
#[derive(Clone, Debug)]
pub struct GammaProduct {
    negative: bool,
    zero: bool,
    exps: Vec<i32>,
    num: BigUint,
    den: BigUint,
    sqrtpi: i32,
    poles: i32,
}

impl Default for GammaProduct {
    fn default() -> Self {
        Self::new()
    }
}

impl GammaProduct {
    pub fn new() -> Self {
        GammaProduct {
            negative: false,
            zero: false,
            exps: Vec::new(),
            num: BigUint::one(),
            den: BigUint::one(),
            sqrtpi: 0,
            poles: 0,
        }
    }

    fn factorial(&mut self, m: u64, sign: i32) {
        if m > primes::sieve_limit() {
            let mut big = BigUint::one();
            for k in 2..=m {
                big *= k;
            }
            if sign > 0 {
                self.num *= big;
            } else {
                self.den *= big;
            }
        } else {
            primes::add_factorial(&mut self.exps, m, sign);
        }
    }

    fn integer(&mut self, m: u64, sign: i32) {
        let rest = primes::add_integer(&mut self.exps, m, sign);
        if rest != 1 {
            if sign > 0 {
                self.num *= rest;
            } else {
                self.den *= rest;
            }
        }
    }

    fn gamma(&mut self, x: HalfInt, sign: i32) {
        let t = x.twice();
        if t % 2 == 0 {
            let m = t / 2;
            if m >= 1 {
                self.factorial((m - 1) as u64, sign);
            } else {
                let k = (-m) as u64;
                self.negative ^= k % 2 == 1;
                self.factorial(k, -sign);
                self.poles += sign;
            }
        } else if t > 0 {
            let k = ((t - 1) / 2) as u64;
            self.factorial(2 * k, sign);
            self.factorial(k, -sign);
            self.integer(2, -sign * 2 * k as i32);
            self.sqrtpi += sign;
        } else {
            let k = ((1 - t) / 2) as u64;
            self.negative ^= k % 2 == 1;
            self.integer(2, sign * 2 * k as i32);
            self.factorial(k, sign);
            self.factorial(2 * k, -sign);
            self.sqrtpi += sign;
        }
    }

    pub fn mul_gamma(&mut self, x: HalfInt) -> &mut Self {
        self.gamma(x, 1);
        self
    }

    pub fn div_gamma(&mut self, x: HalfInt) -> &mut Self {
        self.gamma(x, -1);
        self
    }

    /// `m!`, read as `Gamma(m + 1)`.
    pub fn mul_factorial(&mut self, m: i64) -> &mut Self {
        self.gamma(HalfInt::from_int(m + 1), 1);
        self
    }

    pub fn div_factorial(&mut self, m: i64) -> &mut Self {
        self.gamma(HalfInt::from_int(m + 1), -1);
        self
    }

    pub fn mul_int(&mut self, k: i64) -> &mut Self {
        if k == 0 {
            self.zero = true;
        } else {
            self.negative ^= k < 0;
            self.integer(k.unsigned_abs(), 1);
        }
        self
    }

    pub fn div_int(&mut self, k: i64) -> &mut Self {
        assert!(k != 0, "division by zero");
        self.negative ^= k < 0;
        self.integer(k.unsigned_abs(), -1);
        self
    }

    pub fn mul_big(&mut self, k: &BigInt) -> &mut Self {
        if k.is_zero() {
            self.zero = true;
        } else {
            self.negative ^= k.is_negative();
            self.num *= k.magnitude();
        }
        self
    }

    pub fn mul_rational(&mut self, q: &BigRational) -> &mut Self {
        self.mul_big(q.numer());
        self.negative ^= q.denom().is_negative();
        self.den *= q.denom().magnitude();
        self
    }

    pub fn negate(&mut self) -> &mut Self {
        self.negative = !self.negative;
        self
    }

    /// `(-1)^k`.
    pub fn mul_sign(&mut self, k: i64) -> &mut Self {
        self.negative ^= k.rem_euclid(2) == 1;
        self
    }

    pub fn pole_order(&self) -> i32 {
        self.poles
    }

    pub fn sqrtpi_exp(&self) -> i32 {
        self.sqrtpi
    }

    pub fn is_zero(&self) -> bool {
        self.zero || self.poles < 0
    }

    pub fn evaluate(&self) -> Result<GammaExact> {
        if self.is_zero() {
            return Ok(GammaExact::zero());
        }
        if self.poles > 0 {
            return Err(Error::UnpairedPole(self.poles));
        }
        let num = primes::pow_product(&self.exps, true) * &self.num;
        let den = primes::pow_product(&self.exps, false) * &self.den;
        let sign = if self.negative { Sign::Minus } else { Sign::Plus };
        let coeff = BigRational::new(BigInt::from_biguint(sign, num), BigInt::from(den));
        Ok(GammaExact { coeff, sqrtpi_exp: self.sqrtpi })
    }

    pub fn to_rational(&self) -> Result<BigRational> {
        self.evaluate()?.to_rational()
    }

    /// Writes a nonnegative rational product as `s^2 * r`, with `r` a
    /// squarefree integer.
    pub fn sqrt_split(&self) -> Result<(BigRational, BigUint)> {
        if self.is_zero() {
            return Ok((BigRational::zero(), BigUint::one()));
        }
        if self.poles > 0 {
            return Err(Error::UnpairedPole(self.poles));
        }
        if self.sqrtpi != 0 {
            return Err(Error::ResidualSqrtPi(self.sqrtpi));
        }
        if self.negative {
            return Err(Error::NegativeRadicand);
        }
        let mut out_num = BigUint::one();
        let mut out_den = BigUint::one();
        let mut radicand = BigUint::one();
        for (idx, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let p = BigUint::from(primes::primes()[idx]);
            let a = e.unsigned_abs();
            let half = a / 2 + if e < 0 { a % 2 } else { 0 };
            if e > 0 {
                out_num *= p.pow(half);
            } else {
                out_den *= p.pow(half);
            }
            if a % 2 == 1 {
                radicand *= p;
            }
        }
        let (s1, r1) = primes::squarefree_split(&(&self.num * &self.den));
        let (s, r) = super::surd::combine_radicands(&radicand, &r1);
        out_num *= s1 * s;
        out_den *= &self.den;
        let coeff = BigRational::new(BigInt::from(out_num), BigInt::from(out_den));
        Ok((coeff, r))
    }
}

pub fn gamma_exact(x: HalfInt) -> Result<GammaExact> {
    if x.is_nonpositive_integer() {
        return Err(Error::GammaPole(x));
    }
    GammaProduct::new().mul_gamma(x).evaluate()
}

/// `prod Gamma(num) / prod Gamma(den)`, pairing poles by their residues.
pub fn gamma_ratio_product(nums: &[HalfInt], dens: &[HalfInt]) -> Result<GammaExact> {
    let mut g = GammaProduct::new();
    for &x in nums {
        g.mul_gamma(x);
    }
    for &x in dens {
        g.div_gamma(x);
    }
    g.evaluate()
}

pub fn pochhammer(a: &BigRational, k: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut x = a.clone();
    for _ in 0..k {
        acc *= &x;
        if acc.is_zero() {
            break;
        }
        x += BigRational::one();
    }
    acc
}

pub fn pochhammer_half(a: HalfInt, k: u64) -> BigRational {
    let mut num = BigInt::one();
    let mut t = a.twice();
    for _ in 0..k {
        if t == 0 {
            return BigRational::zero();
        }
        num *= t;
        t += 2;
    }
    BigRational::new(num, BigInt::one() << k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn h(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn spot_values() {
        assert_eq!(gamma_exact(HalfInt::from_int(1)).unwrap(), GammaExact::one());
        let g = gamma_exact(h(1)).unwrap();
        assert_eq!((g.coeff, g.sqrtpi_exp), (q(1, 1), 1));
        let g = gamma_exact(h(7)).unwrap();
        assert_eq!((g.coeff, g.sqrtpi_exp), (q(15, 8), 1));
        let g = gamma_exact(h(-3)).unwrap();
        assert_eq!((g.coeff, g.sqrtpi_exp), (q(4, 3), 1));
        assert!(matches!(gamma_exact(HalfInt::from_int(-2)), Err(Error::GammaPole(_))));
    }

    #[test]
    fn ratios() {
        let r = gamma_ratio_product(&[HalfInt::from_int(5)], &[HalfInt::from_int(3)]).unwrap();
        assert_eq!(r, GammaExact::rational(q(12, 1)));
        let r = gamma_ratio_product(&[HalfInt::from_int(-2)], &[HalfInt::from_int(-4)]).unwrap();
        assert_eq!(r, GammaExact::rational(q(12, 1)));
        let r = gamma_ratio_product(&[h(7)], &[h(1)]).unwrap();
        assert_eq!(r, GammaExact::rational(q(15, 8)));
        let r = gamma_ratio_product(&[HalfInt::from_int(1)], &[HalfInt::from_int(-1)]).unwrap();
        assert!(r.is_zero());
        assert_eq!(
            gamma_ratio_product(&[HalfInt::from_int(0)], &[]),
            Err(Error::UnpairedPole(1))
        );
    }

    #[test]
    fn recurrence_on_half_integers() {
        for t in -21..21 {
            let x = h(t);
            if x.is_nonpositive_integer() || (x + 1).is_nonpositive_integer() {
                continue;
            }
            let lhs = gamma_exact(x + 1).unwrap();
            let rhs = gamma_exact(x).unwrap() * GammaExact::rational(x.to_rational());
            assert_eq!(lhs, rhs, "x = {x}");
        }
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&q(7, 3), 0), q(1, 1));
        assert_eq!(pochhammer(&q(-3, 1), 5), q(0, 1));
        assert_eq!(pochhammer(&q(1, 2), 3), q(15, 8));
        assert_eq!(pochhammer_half(h(1), 3), q(15, 8));
        assert_eq!(pochhammer_half(h(-6), 5), q(0, 1));
        assert_eq!(pochhammer_half(h(-6), 3), q(-6, 1));
    }

    #[test]
    fn split_square_root() {
        let mut g = GammaProduct::new();
        g.mul_factorial(6).div_int(5);
        let (s, r) = g.sqrt_split().unwrap();
        assert_eq!(&s * &s * BigRational::from_integer(BigInt::from(r)), q(144, 1));
        let mut g = GammaProduct::new();
        g.mul_int(8).div_int(9);
        let (s, r) = g.sqrt_split().unwrap();
        assert_eq!((s, r), (q(2, 3), BigUint::from(2u32)));
    }
}
