//! Independent even-`n` evaluators built from SU(2) 6j coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{integer, GammaProduct, HalfInt, SurdSum, SurdValue};
use crate::labels::SixJLabels;
use crate::sixj::{dim, nabla_tilde_0356, threej_zero};

fn fact(k: i64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

fn su2_triangle(a: HalfInt, b: HalfInt, c: HalfInt) -> bool {
    (a + b + c).is_integer() && (a + b - c).twice() >= 0 && (a - b + c).twice() >= 0 && (b + c - a).twice() >= 0
}

fn delta_sq(a: HalfInt, b: HalfInt, c: HalfInt) -> BigRational {
    let k = |x: HalfInt| fact(x.to_int().expect("integer triangle sum"));
    BigRational::new(k(a + b - c) * k(a - b + c) * k(b + c - a), k(a + b + c + 1))
}

/// Racah's single sum.
pub fn su2_6j(j1: HalfInt, j2: HalfInt, j3: HalfInt, l1: HalfInt, l2: HalfInt, l3: HalfInt) -> SurdValue {
    let triads = [(j1, j2, j3), (j1, l2, l3), (l1, j2, l3), (l1, l2, j3)];
    if triads.iter().any(|&(a, b, c)| a.twice() < 0 || b.twice() < 0 || c.twice() < 0 || !su2_triangle(a, b, c)) {
        return SurdValue::zero();
    }
    let d = triads.iter().fold(BigRational::one(), |acc, &(a, b, c)| acc * delta_sq(a, b, c));
    let int = |x: HalfInt| x.to_int().expect("integer");
    let al = [j1 + j2 + j3, j1 + l2 + l3, l1 + j2 + l3, l1 + l2 + j3].map(int);
    let be = [j1 + j2 + l1 + l2, j2 + j3 + l2 + l3, j3 + j1 + l3 + l1].map(int);
    let mut s = BigRational::zero();
    let lo = *al.iter().max().expect("four");
    let hi = *be.iter().min().expect("three");
    for t in lo..=hi {
        let mut den = BigInt::one();
        for x in al {
            den *= fact(t - x);
        }
        for x in be {
            den *= fact(x - t);
        }
        let term = BigRational::new(fact(t + 1), den);
        if t % 2 == 0 {
            s += term;
        } else {
            s -= term;
        }
    }
    SurdValue::new(s, d).expect("nonnegative radicand")
}

fn check_even(labels: &SixJLabels) -> Result<()> {
    if labels.n < 4 || labels.n % 2 != 0 {
        return Err(Error::Precondition(format!("oracles need even n >= 4, got {}", labels.n)));
    }
    labels.check_nonnegative()
}

/// Common factor built from the `(c, d, e)` special 3j-symbol.
fn outer(labels: &SixJLabels) -> Result<SurdValue> {
    let SixJLabels { e, d, c, n, .. } = *labels;
    let three = threej_zero(n, c, d, e)?.square();
    let q = integer((2 * c + n - 2) * (2 * d + n - 2) * (2 * e + n - 2))
        / (integer(8) * dim(n, c) * dim(n, d) * dim(n, e))
        / three;
    SurdValue::new(BigRational::one(), q)
}

/// The expansion over `l'` with three SU(2) 6j factors. The range of `l'`
/// is whatever the SU(2) triangles allow.
pub fn sixj_via_df6j(labels: &SixJLabels) -> Result<SurdValue> {
    check_even(labels)?;
    if !labels.admissible() {
        return Ok(SurdValue::zero());
    }
    let SixJLabels { a, b, e, d, c, f, n } = *labels;
    let h = HalfInt::half;
    let q = h(n / 2 - 2);
    let mut tot = SurdSum::new();
    let top: i64 = labels.as_array().iter().sum::<i64>() + 1;
    for lp in 0..=top {
        let l = HalfInt::from_int(lp) + h(n) - 2;
        let mut t = su2_6j(h(b), h(f) + q, h(d) + q, h(f) + q, h(b + n) - 2, l);
        if t.is_zero() {
            continue;
        }
        t = &t * &su2_6j(h(a), h(f) + q, h(c) + q, h(f) + q, h(a + n) - 2, l);
        if t.is_zero() {
            continue;
        }
        t = &t * &su2_6j(h(a), h(b) + q, h(e) + q, h(b) + q, h(a + n) - 2, l);
        if t.is_zero() {
            continue;
        }
        let mut g = GammaProduct::new();
        g.mul_factorial(lp).mul_factorial(n - 3).div_factorial(lp + n - 4);
        let (s, r) = g.sqrt_split()?;
        let phase = (c + d - e) / 2 + f + n + lp;
        let mut w = s * integer(2 * lp + n - 3);
        if phase % 2 != 0 {
            w = -w;
        }
        tot.add(&(&t * &SurdValue::new(w, BigRational::from_integer(BigInt::from(r)))?));
    }
    Ok(&outer(labels)? * &tot.into_surd()?)
}

/// The triple-sum form over `g in e..=a+b`. `extra_phase` reinstates a
/// factor `(-1)^((g - e)/2)` for comparison.
pub fn sixj_via_rtr6j(labels: &SixJLabels, extra_phase: bool) -> Result<SurdValue> {
    check_even(labels)?;
    if !labels.admissible() {
        return Ok(SurdValue::zero());
    }
    let SixJLabels { a, b, e, d, c, f, n } = *labels;
    let h = HalfInt::half;
    let q = h(n / 2 - 2);
    let pre = &outer(labels)? * &nabla_tilde_0356(n, a, b, e)?;
    let mut tot = SurdSum::new();
    for g in (e..=a + b).step_by(2) {
        let mut wg = GammaProduct::new();
        wg.mul_gamma(h(g - e + n) - 2).mul_gamma(h(g + e) + n - 3);
        wg.div_gamma(h(g - e) + 1).div_gamma(h(g + e + n)).div_gamma(h(n) - 2);
        wg.mul_int(g + n - 3);
        let w = wg.to_rational()?;
        if w.is_zero() || a - b + g < 0 || b - a + g < 0 {
            continue;
        }
        let (p, m) = ((a - b + g) / 2, (b - a + g) / 2);
        let mut sg = GammaProduct::new();
        sg.mul_factorial(p).mul_factorial(m).mul_factorial(n - 3);
        sg.div_factorial(p + n - 4).div_factorial(m + n - 4);
        let (s, r) = sg.sqrt_split()?;
        let mut coeff = w * s;
        if extra_phase && ((g - e) / 2) % 2 == 1 {
            coeff = -coeff;
        }
        let g2 = h(g + n) - 2;
        let mut t = SurdValue::new(coeff, BigRational::from_integer(BigInt::from(r)))?;
        t = &t * &su2_6j(h(c) + q, h(a), h(f) + q, h(b + n) - 2, h(d) + q, g2);
        if t.is_zero() {
            continue;
        }
        t = &t * &su2_6j(h(b), h(a + n) - 2, g2, h(c) + q, h(d) + q, h(f) + q);
        tot.add(&t);
    }
    Ok(&pre * &tot.into_surd()?)
}
