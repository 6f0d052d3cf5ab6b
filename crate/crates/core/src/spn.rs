//! Recoupling coefficients of Sp(2n) for antisymmetric irreps `<1^v>`,
//! continued from SO(-2n).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{integer, GammaProduct, HalfInt, Rational, SurdValue};
use crate::labels::{classical_symmetries, shelepin, RArray, SixJLabels};
use crate::sixj::series::DoubleSeries;

/// Column heights in the `{a b e; d c f}` arrangement, for Sp(2n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpLabels {
    pub a: i64,
    pub b: i64,
    pub e: i64,
    pub d: i64,
    pub c: i64,
    pub f: i64,
    pub n: i64,
}

impl SpLabels {
    pub fn new(n: i64, [a, b, e, d, c, f]: [i64; 6]) -> Self {
        SpLabels { a, b, e, d, c, f, n }
    }

    pub fn as_array(&self) -> [i64; 6] {
        [self.a, self.b, self.e, self.d, self.c, self.f]
    }

    fn triads(&self) -> SixJLabels {
        SixJLabels::new(self.n, self.as_array())
    }

    pub fn admissible(&self) -> bool {
        self.triads().admissible()
    }

    fn check(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::Precondition(format!("Sp(2n) needs n >= 1, got {}", self.n)));
        }
        if self.as_array().iter().any(|&x| x < 0 || x > self.n) {
            return Err(Error::Precondition(format!("labels of {self} must lie in 0..={}", self.n)));
        }
        Ok(())
    }
}

impl fmt::Display for SpLabels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{} {} {}; {} {} {}}}_Sp({})", self.a, self.b, self.e, self.d, self.c, self.f, 2 * self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpMethod {
    A,
    B,
    C,
}

impl SpMethod {
    pub const ALL: [SpMethod; 3] = [SpMethod::A, SpMethod::B, SpMethod::C];

    pub fn name(self) -> &'static str {
        match self {
            SpMethod::A => "a",
            SpMethod::B => "b",
            SpMethod::C => "c",
        }
    }
}

impl fmt::Display for SpMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SpMethod::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpU {
    pub value: SurdValue,
    pub labels: SpLabels,
    pub method: SpMethod,
}

pub fn dim_sp(n: i64, v: i64) -> Result<Rational> {
    if v < 0 || v > n {
        return Err(Error::Precondition(format!("<1^{v}> needs 0 <= v <= n = {n}")));
    }
    let mut g = GammaProduct::new();
    g.mul_int(2).mul_factorial(2 * n + 1).mul_int(n - v + 1);
    g.div_factorial(v).div_factorial(2 * n - v + 2);
    g.to_rational()
}

/// The double sums with `n -> -2n` and `tau -> -n - 1` already applied.
pub fn sp_series(ra: &RArray, n: i64, method: SpMethod) -> DoubleSeries {
    let r = |i, k| HalfInt::from_int(ra.at(i, k));
    let al = |k| HalfInt::from_int(ra.al(k));
    let be = |i| HalfInt::from_int(ra.be(i));
    let one = HalfInt::ONE;
    match method {
        SpMethod::A => DoubleSeries {
            r1: ra.at(1, 1),
            r2: ra.at(1, 3),
            up1: vec![-r(1, 4), r(2, 2) + one, r(2, 3) - (n + 1)],
            down1: vec![-r(2, 1), -al(4) + (n + 1), r(3, 4) - (n + 1)],
            up2: vec![r(2, 4) - (n + 1), -r(1, 2) + (n + 2)],
            down2: vec![-al(2) + (n + 1), r(3, 2) - (n + 1)],
            coupled_up: vec![(be(2) - be(1) + one, 1)],
            coupled_down: vec![(-r(2, 1) + (n + 2), -1)],
        },
        SpMethod::B => DoubleSeries {
            r1: ra.at(1, 1),
            r2: ra.at(3, 1),
            up1: vec![-r(1, 4), r(2, 2) + one, r(2, 3) - (n + 1)],
            down1: vec![-r(2, 1), r(3, 4) - (n + 1), -al(4) + (n + 1)],
            up2: vec![-al(2) + (n + 1), -al(3) + (2 * n + 3)],
            down2: vec![r(2, 4) - (n + 1), al(1) - (2 * n + 2)],
            coupled_up: vec![(-r(3, 4) - r(1, 1) + (n + 2), 1)],
            coupled_down: vec![(r(3, 4) + one, -1)],
        },
        SpMethod::C => DoubleSeries {
            r1: ra.at(1, 1),
            r2: ra.at(3, 1),
            up1: vec![-r(1, 2), -al(3) + (n + 1), -al(4) + (n + 1)],
            down1: vec![r(3, 2) - (n + 1), r(2, 2) + one, al(1) - (2 * n + 2)],
            up2: vec![r(2, 3) - (n + 1), r(2, 4) - (n + 1)],
            down2: vec![-al(2) + (n + 1), -r(2, 1) + (n + 2)],
            coupled_up: vec![(-r(3, 2) - r(1, 1) + (n + 2), 1)],
            coupled_down: vec![(r(3, 2) + one, -1)],
        },
    }
}

/// Factorials in front of the sum, phase `(-1)^chi12` with `chi12 = beta1`
/// included.
fn sp_prefactor(ra: &RArray, n: i64, method: SpMethod) -> GammaProduct {
    let r = |i, k| ra.at(i, k);
    let mut g = GammaProduct::new();
    for _ in 0..3 {
        g.mul_factorial(n);
    }
    g.mul_factorial(2 * n + 2);
    for k in 2..=4 {
        g.mul_factorial(n - ra.al(k));
    }
    for (i, k) in [(2, 3), (2, 4), (3, 3), (3, 4)] {
        g.div_factorial(n - r(i, k) + 1);
    }
    let (lead, plain, shifted): (i64, &[(usize, usize)], &[(usize, usize)]) = match method {
        SpMethod::A => (ra.al(3), &[(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (3, 3)], &[(2, 2), (3, 2)]),
        SpMethod::B => (ra.al(1), &[(1, 1), (1, 2), (1, 4), (2, 1), (3, 1), (3, 3)], &[(1, 2), (2, 2)]),
        SpMethod::C => (ra.al(1), &[(1, 1), (1, 2), (2, 1), (3, 1), (3, 3), (3, 4)], &[(2, 2), (3, 2)]),
    };
    g.div_factorial(2 * n + 2 - lead);
    for &(i, k) in plain {
        g.div_factorial(r(i, k));
    }
    for &(i, k) in shifted {
        g.div_factorial(n - r(i, k) + 1);
    }
    g.mul_sign(ra.be(1));
    if method == SpMethod::C {
        g.mul_sign((ra.be(1) - ra.be(3)).abs());
    }
    g
}

/// `N^2 d_e d_f`.
fn radicand(ra: &RArray, labels: &SpLabels) -> Result<GammaProduct> {
    let n = labels.n;
    let mut g = GammaProduct::new();
    for row in ra.r {
        for x in row {
            g.mul_factorial(x).mul_factorial(n + 1 - x);
        }
    }
    for al in ra.alpha {
        g.mul_factorial(2 * n + 2 - al).div_factorial(n - al);
    }
    for _ in 0..4 {
        g.div_factorial(2 * n + 2);
    }
    for _ in 0..8 {
        g.div_factorial(n);
    }
    g.mul_rational(&dim_sp(n, labels.e)?).mul_rational(&dim_sp(n, labels.f)?);
    Ok(g)
}

pub fn u_sp(labels: &SpLabels, method: SpMethod) -> Result<SpU> {
    labels.check()?;
    let zero = SpU { value: SurdValue::zero(), labels: *labels, method };
    if !labels.admissible() {
        return Ok(zero);
    }
    let ra = shelepin(&labels.triads())?;
    if ra.alpha.iter().any(|&al| labels.n - al < 0) {
        return Ok(zero);
    }
    let n = labels.n;
    let sum = sp_series(&ra, n, method).sum();
    if sum.is_zero() {
        return Ok(zero);
    }
    let v = sp_prefactor(&ra, n, method).to_rational()? * sum;
    let (s, r) = radicand(&ra, labels)?.sqrt_split()?;
    let value = SurdValue::new(v * s, BigRational::from_integer(BigInt::from(r)))?;
    Ok(SpU { value, labels: *labels, method })
}

/// `U / sqrt(d_e d_f)`: real and fixed by the classical symmetries.
pub fn renormalized(labels: &SpLabels, method: SpMethod) -> Result<SurdValue> {
    let u = u_sp(labels, method)?.value;
    if u.is_zero() {
        return Ok(u);
    }
    let d = SurdValue::new(BigRational::one(), dim_sp(labels.n, labels.e)? * dim_sp(labels.n, labels.f)?)?;
    Ok(&u / &d)
}

/// Image of the labels under the `(b,e)(c,f)` interchange with
/// `U(image) = factor * U(labels)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpSymmetry {
    pub labels: SpLabels,
    pub phase: i64,
    pub factor: SurdValue,
}

pub fn sp_symmetry_transform(labels: &SpLabels) -> Result<SpSymmetry> {
    labels.check()?;
    let SpLabels { a, b, e, d, c, f, n } = *labels;
    let image = SpLabels { a, b: e, e: b, d, c: f, f: c, n };
    let t = labels.triads();
    let beta1 = (a + b + c + d) / 2;
    let beta2 = (a + d + e + f) / 2;
    let phase = if !t.parity_ok() || (beta2 - beta1 + (b + c - e - f) / 2) % 2 == 0 { 1 } else { -1 };
    let ratio = dim_sp(n, b)? * dim_sp(n, c)? / (dim_sp(n, e)? * dim_sp(n, f)?);
    let factor = SurdValue::new(integer(phase), ratio)?;
    Ok(SpSymmetry { labels: image, phase, factor })
}

/// The 24 classical rearrangements of the columns.
pub fn sp_classical_symmetries(labels: &SpLabels) -> Vec<SpLabels> {
    classical_symmetries(&labels.triads()).into_iter().map(|x| SpLabels::new(labels.n, x.as_array())).collect()
}

/// Every label set with entries in `0..=n` passing the triangle rules.
pub fn admissible_sp_labels(n: i64) -> Vec<SpLabels> {
    let mut out = Vec::new();
    let mut x = [0i64; 6];
    loop {
        let l = SpLabels::new(n, x);
        if l.admissible() {
            out.push(l);
        }
        let mut k = 5;
        loop {
            x[k] += 1;
            if x[k] <= n {
                break;
            }
            x[k] = 0;
            if k == 0 {
                return out;
            }
            k -= 1;
        }
    }
}
