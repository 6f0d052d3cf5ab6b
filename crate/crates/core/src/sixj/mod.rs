//! 6j-symbols of SO(n) for symmetric irreps.

mod cache;
mod closed;
pub mod forms;
mod select;
pub mod series;

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub use cache::SixJCache;
pub use closed::{c_alpha_near_stretched, c_alpha_stretched};
pub use forms::{c_alpha_factorial, FactorialForm};
pub use select::{candidates, select_method, Selection};

use crate::error::{Error, Result};
use crate::exact::{integer, GammaExact, GammaProduct, HalfInt, Rational, SurdValue};
use crate::labels::{shelepin, triangle_ok, SixJLabels};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    A,
    B,
    C,
    T3,
    StretchedE,
    NearStretchedE,
}

impl Method {
    pub const ALL: [Method; 6] = [Method::A, Method::B, Method::C, Method::T3, Method::StretchedE, Method::NearStretchedE];

    pub fn name(self) -> &'static str {
        match self {
            Method::A => "A",
            Method::B => "B",
            Method::C => "C",
            Method::T3 => "T3",
            Method::StretchedE => "StretchedE",
            Method::NearStretchedE => "NearStretchedE",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MethodChoice {
    #[default]
    Auto,
    Forced(Method),
}

/// The rational c-function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CAlpha {
    pub value: Rational,
    pub labels: SixJLabels,
    pub method: Method,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SixJValue {
    pub value: SurdValue,
    pub labels: SixJLabels,
    pub method: Method,
    pub predicted_terms: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EvalOptions {
    /// Accept `n = 3`. The formulas are not guaranteed there.
    pub allow_n3: bool,
}

fn check_group(n: i64, opts: &EvalOptions) -> Result<()> {
    if n >= 4 || (n == 3 && opts.allow_n3) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("SO(n) evaluators need n >= 4, got {n}")))
    }
}

/// Dimension of the symmetric irrep `l`; the formula is also read formally
/// for negative `l`, poles paired as gamma ratios. Under `l -> -l - n + 2`
/// it picks up `(-1)^n`.
pub fn dim_formal(n: i64, l: i64) -> Result<Rational> {
    let mut g = GammaProduct::new();
    g.mul_int(2 * l + n - 2).mul_factorial(l + n - 3).div_factorial(l).div_factorial(n - 2);
    g.to_rational()
}

pub fn dim(n: i64, l: i64) -> Rational {
    assert!(n >= 3 && l >= 0, "dim needs n >= 3 and l >= 0");
    dim_formal(n, l).expect("finite for n >= 3")
}

/// `(a,b,c,d,e,f)_[n] = (1/64) prod (2x + n - 2)`.
pub fn normalization(labels: &SixJLabels) -> Rational {
    let mut acc = BigRational::new(1.into(), 64.into());
    for x in labels.as_array() {
        acc *= integer(2 * x + labels.n - 2);
    }
    acc
}

/// The special 3j-symbol, with positive sign.
pub fn threej_zero(n: i64, l1: i64, l2: i64, l3: i64) -> Result<SurdValue> {
    check_group(n, &EvalOptions { allow_n3: true })?;
    if !triangle_ok(l1, l2, l3) {
        return Ok(SurdValue::zero());
    }
    let j = (l1 + l2 + l3) / 2;
    let hn = HalfInt::half(n);
    let mut g = GammaProduct::new();
    g.mul_factorial(j + n - 3).div_factorial(n - 3).div_gamma(hn + j);
    for l in [l1, l2, l3] {
        g.mul_int(2 * l + n - 2).div_int(2);
        g.mul_gamma(hn + (j - l - 1));
        g.mul_rational(&(BigRational::one() / dim(n, l)));
        g.div_factorial(j - l);
    }
    g.div_gamma(hn).div_gamma(hn);
    let (s, r) = g.sqrt_split()?;
    Ok(SurdValue::from_parts(s, r))
}

fn nabla_args(n: i64, a: i64, b: i64, e: i64, swapped: bool) -> ([HalfInt; 4], [HalfInt; 4]) {
    let h = HalfInt::half;
    let mut num = [h(b + e - a) + 1, h(a - b + e) + 1, h(a + b - e) + 1, h(a + b + e + n)];
    let mut den = [h(b + e - a + n) - 1, h(a - b + e + n) - 1, h(a + b - e + n) - 1, h(a + b + e) + n - 2];
    if swapped {
        for k in 0..2 {
            std::mem::swap(&mut num[k], &mut den[k]);
        }
    }
    (num, den)
}

fn push_nabla_sq(g: &mut GammaProduct, n: i64, a: i64, b: i64, e: i64, swapped: bool) {
    let (num, den) = nabla_args(n, a, b, e, swapped);
    for x in num {
        g.mul_gamma(x);
    }
    for x in den {
        g.div_gamma(x);
    }
}

fn nabla_sq(n: i64, a: i64, b: i64, e: i64, swapped: bool) -> Result<GammaExact> {
    if !triangle_ok(a, b, e) {
        return Err(Error::Precondition(format!("({a}, {b}, {e}) is not a triangle")));
    }
    let mut g = GammaProduct::new();
    push_nabla_sq(&mut g, n, a, b, e, swapped);
    g.evaluate()
}

/// Square of the first triangular coefficient.
pub fn nabla_tilde_0123_sq(n: i64, a: i64, b: i64, e: i64) -> Result<GammaExact> {
    nabla_sq(n, a, b, e, false)
}

/// Square of the second triangular coefficient.
pub fn nabla_tilde_0356_sq(n: i64, a: i64, b: i64, e: i64) -> Result<GammaExact> {
    nabla_sq(n, a, b, e, true)
}

fn nabla_surd(sq: GammaExact) -> Result<SurdValue> {
    let q = sq.to_rational()?;
    Ok(SurdValue::from_signed_square(&q))
}

/// Defined as a surd only when the square carries no power of pi (even `n`).
pub fn nabla_tilde_0123(n: i64, a: i64, b: i64, e: i64) -> Result<SurdValue> {
    nabla_surd(nabla_tilde_0123_sq(n, a, b, e)?)
}

pub fn nabla_tilde_0356(n: i64, a: i64, b: i64, e: i64) -> Result<SurdValue> {
    nabla_surd(nabla_tilde_0356_sq(n, a, b, e)?)
}

fn prepare(labels: &SixJLabels, opts: &EvalOptions) -> Result<Option<crate::labels::RArray>> {
    check_group(labels.n, opts)?;
    labels.check_nonnegative()?;
    let ra = shelepin(labels)?;
    Ok((ra.min_entry() >= 0).then_some(ra))
}

fn zero(labels: &SixJLabels, method: Method) -> CAlpha {
    CAlpha { value: Rational::zero(), labels: *labels, method }
}

fn pochhammer_form(labels: &SixJLabels, method: Method, opts: &EvalOptions) -> Result<CAlpha> {
    let Some(ra) = prepare(labels, opts)? else {
        return Ok(zero(labels, method));
    };
    let n = labels.n;
    let sum = series::kernel(&ra, HalfInt::half(n - 2), n, method).sum();
    let mut g = series::prefactor(&ra, n, method);
    g.mul_rational(&sum).mul_rational(&normalization(labels));
    Ok(CAlpha { value: g.to_rational()?, labels: *labels, method })
}

/// Power of `sqrt(pi)` left in the gamma prefactor of a Pochhammer form.
pub fn residual_sqrtpi_exp(labels: &SixJLabels, method: Method) -> Result<i32> {
    let Some(ra) = prepare(labels, &EvalOptions::default())? else {
        return Ok(0);
    };
    Ok(series::prefactor(&ra, labels.n, method).sqrtpi_exp())
}

/// The c-function evaluated on the given labels by the given method.
pub fn c_alpha_with(labels: &SixJLabels, method: Method, opts: &EvalOptions) -> Result<CAlpha> {
    match method {
        Method::A | Method::B | Method::C => pochhammer_form(labels, method, opts),
        Method::T3 => {
            check_group(labels.n, opts)?;
            forms::triple(labels)
        }
        Method::StretchedE => {
            check_group(labels.n, opts)?;
            c_alpha_stretched(labels)
        }
        Method::NearStretchedE => {
            check_group(labels.n, opts)?;
            c_alpha_near_stretched(labels)
        }
    }
}

pub fn c_alpha(labels: &SixJLabels, method: Method) -> Result<CAlpha> {
    c_alpha_with(labels, method, &EvalOptions::default())
}

pub fn c_alpha_triple(labels: &SixJLabels) -> Result<CAlpha> {
    c_alpha(labels, Method::T3)
}

/// The c-function via the cheapest orbit variant, rescaled to `labels`.
pub fn c_alpha_auto(labels: &SixJLabels) -> Result<(CAlpha, Selection)> {
    c_alpha_auto_with(labels, &EvalOptions::default())
}

pub fn c_alpha_auto_with(labels: &SixJLabels, opts: &EvalOptions) -> Result<(CAlpha, Selection)> {
    if prepare(labels, opts)?.is_none() {
        let sel = Selection { method: Method::A, predicted_terms: 0, variant: *labels };
        return Ok((zero(labels, Method::A), sel));
    }
    let sel = select_method(labels)?;
    let on_variant = c_alpha_with(&sel.variant, sel.method, opts)?;
    let value = on_variant.value * normalization(labels) / normalization(&sel.variant);
    Ok((CAlpha { value, labels: *labels, method: sel.method }, sel))
}

/// Number of nonzero terms the method actually sums on these labels.
pub fn count_nonzero_terms(labels: &SixJLabels, method: Method) -> Result<u64> {
    let Some(ra) = prepare(labels, &EvalOptions::default())? else {
        return Ok(0);
    };
    match method {
        Method::A | Method::B | Method::C => {
            Ok(series::kernel(&ra, HalfInt::half(labels.n - 2), labels.n, method).count_nonzero())
        }
        Method::T3 => forms::triple_form(labels).expect("parity checked").count_nonzero(),
        Method::StretchedE | Method::NearStretchedE => {
            Ok(u64::from(!c_alpha(labels, method)?.value.is_zero()))
        }
    }
}

/// `prod nabla^2 * ((n-3)!^2 Gamma(n/2)^4 / norm)^2`, split as `s^2 r`.
fn assembly_radicand(labels: &SixJLabels) -> Result<(Rational, num_bigint::BigUint)> {
    let n = labels.n;
    let mut g = GammaProduct::new();
    for (x, y, z) in labels.triads() {
        push_nabla_sq(&mut g, n, x, y, z, false);
    }
    for _ in 0..4 {
        g.mul_factorial(n - 3);
    }
    for _ in 0..8 {
        g.mul_gamma(HalfInt::half(n));
    }
    let norm = normalization(labels);
    g.mul_rational(&(BigRational::one() / (&norm * &norm)));
    g.sqrt_split()
}

/// Converts a c-function into the 6j-symbol.
pub fn sixj_from_c_alpha(c: &CAlpha) -> Result<SurdValue> {
    if c.value.is_zero() {
        return Ok(SurdValue::zero());
    }
    let (s, r) = assembly_radicand(&c.labels)?;
    Ok(SurdValue::from_parts(&c.value * s, r))
}

pub fn sixj_with(labels: &SixJLabels, choice: MethodChoice, opts: &EvalOptions) -> Result<SixJValue> {
    check_group(labels.n, opts)?;
    labels.check_nonnegative()?;
    if !labels.parity_ok() {
        let method = match choice {
            MethodChoice::Auto => Method::A,
            MethodChoice::Forced(m) => m,
        };
        return Ok(SixJValue { value: SurdValue::zero(), labels: *labels, method, predicted_terms: 0 });
    }
    let (c, predicted) = match choice {
        MethodChoice::Auto => {
            let (c, sel) = c_alpha_auto_with(labels, opts)?;
            (c, sel.predicted_terms)
        }
        MethodChoice::Forced(m) => {
            let c = c_alpha_with(labels, m, opts)?;
            let predicted = match shelepin(labels) {
                Ok(ra) if ra.min_entry() >= 0 => select::cost(&ra, m).unwrap_or(0),
                _ => 0,
            };
            (c, predicted)
        }
    };
    Ok(SixJValue { value: sixj_from_c_alpha(&c)?, labels: *labels, method: c.method, predicted_terms: predicted })
}

pub fn sixj(labels: &SixJLabels, choice: MethodChoice) -> Result<SixJValue> {
    sixj_with(labels, choice, &EvalOptions::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;

    fn l(n: i64, x: [i64; 6]) -> SixJLabels {
        SixJLabels::new(n, x)
    }

    #[test]
    fn dimensions() {
        for n in 3..10 {
            assert_eq!(dim(n, 0), integer(1));
            assert_eq!(dim(n, 1), integer(n));
        }
        assert_eq!(dim(5, 2), integer(14));
        assert_eq!(dim(3, 4), integer(9));
        assert_eq!(dim(4, 3), integer(16));
    }

    #[test]
    fn dimension_under_hook_reflection() {
        for n in 3..11 {
            for l in 0..8 {
                let sign = if n % 2 == 0 { 1 } else { -1 };
                assert_eq!(dim_formal(n, -l - n + 2).unwrap(), dim(n, l) * integer(sign), "n={n} l={l}");
            }
        }
    }

    #[test]
    fn special_threej() {
        for n in 4..11 {
            assert_eq!(threej_zero(n, 0, 0, 0).unwrap(), SurdValue::one());
            for k in 0..7 {
                let v = threej_zero(n, k, k, 0).unwrap();
                assert_eq!(v.signed_square(), BigRational::one() / dim(n, k), "n={n} l={k}");
            }
        }
        assert!(threej_zero(6, 1, 1, 1).unwrap().is_zero());
    }

    #[test]
    fn nabla_values() {
        for n in 4..10 {
            let hn = HalfInt::half(n);
            let mut g = GammaProduct::new();
            g.mul_gamma(hn).div_gamma(hn - 1).div_gamma(hn - 1).div_gamma(hn - 1).div_factorial(n - 3);
            assert_eq!(nabla_tilde_0123_sq(n, 0, 0, 0).unwrap(), g.evaluate().unwrap());
        }
        assert!(nabla_tilde_0123(6, 0, 0, 0).is_ok());
        assert_eq!(nabla_tilde_0123(5, 0, 0, 0), Err(Error::ResidualSqrtPi(-2)));
        assert!(nabla_tilde_0123_sq(6, 1, 1, 1).is_err());
    }

    #[test]
    fn nabla_product_identity() {
        for n in 4..9 {
            for (a, b, e) in [(0, 0, 0), (1, 1, 2), (2, 3, 3), (4, 2, 4), (5, 3, 6)] {
                let p = nabla_tilde_0123_sq(n, a, b, e).unwrap() * nabla_tilde_0356_sq(n, a, b, e).unwrap();
                let mut g = GammaProduct::new();
                g.mul_factorial((a + b - e) / 2)
                    .mul_gamma(HalfInt::half(a + b + e + n))
                    .div_gamma(HalfInt::half(a + b - e + n) - 1)
                    .div_factorial((a + b + e) / 2 + n - 3);
                let s = g.evaluate().unwrap();
                assert_eq!(p, s.clone() * s, "n={n} {a} {b} {e}");
            }
        }
    }

    #[test]
    fn trivial_labels() {
        for n in 4..10 {
            for m in [Method::A, Method::B, Method::C, Method::T3, Method::StretchedE] {
                assert_eq!(c_alpha(&l(n, [0; 6]), m).unwrap().value, integer(1), "n={n} {m}");
            }
            assert_eq!(sixj(&l(n, [0; 6]), MethodChoice::Auto).unwrap().value, SurdValue::one());
        }
    }

    #[test]
    fn methods_agree_on_all_twos() {
        for n in 4..10 {
            let x = l(n, [2; 6]);
            let a = c_alpha(&x, Method::A).unwrap().value;
            for m in [Method::B, Method::C, Method::T3, Method::NearStretchedE] {
                assert_eq!(c_alpha(&x, m).unwrap().value, a, "n={n} {m}");
            }
            for form in [FactorialForm::First, FactorialForm::Second, FactorialForm::Third] {
                assert_eq!(c_alpha_factorial(&x, form).unwrap().value, a, "n={n} {form:?}");
            }
        }
    }

    #[test]
    fn inadmissible_is_zero() {
        let x = l(6, [2, 2, 6, 2, 2, 2]);
        assert_eq!(c_alpha(&x, Method::A).unwrap().value, rational(0, 1));
        assert!(sixj(&x, MethodChoice::Auto).unwrap().value.is_zero());
        assert!(matches!(c_alpha(&l(6, [1, 1, 1, 0, 0, 0]), Method::A), Err(Error::Parity(_))));
        assert!(sixj(&l(6, [1, 1, 1, 0, 0, 0]), MethodChoice::Auto).unwrap().value.is_zero());
        assert!(matches!(c_alpha(&l(3, [0; 6]), Method::A), Err(Error::Precondition(_))));
        let opts = EvalOptions { allow_n3: true };
        assert!(c_alpha_with(&l(3, [0; 6]), Method::A, &opts).is_ok());
    }

    #[test]
    fn stretched_with_zero_d() {
        for n in 4..10 {
            for (a, b) in [(0, 0), (1, 2), (3, 1), (2, 4)] {
                let e = a + b;
                let x = l(n, [a, b, e, 0, e, b]);
                let v = sixj(&x, MethodChoice::Forced(Method::StretchedE)).unwrap().value;
                assert!(!v.is_negative());
                assert_eq!(v.square(), BigRational::one() / (dim(n, b) * dim(n, e)), "{x}");
            }
        }
    }
}
