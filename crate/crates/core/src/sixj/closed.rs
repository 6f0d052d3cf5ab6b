//! Closed forms for `e = a + b` and `e = a + b - 2`.

use num_rational::BigRational;

use super::{normalization, CAlpha, Method};
use crate::error::{Error, Result};
use crate::exact::{GammaProduct, HalfInt};
use crate::labels::SixJLabels;

/// Square of the SU(2)-type triangle coefficient with arguments given as
/// four times their value.
fn nabla_sq(g: &mut GammaProduct, x4: i64, y4: i64, j4: i64, sign: i32) {
    let arg = |s: i64| HalfInt::from_twice(s / 2);
    let (num, den) = (
        [arg(x4 + y4 - j4) + 1, arg(x4 - y4 + j4) + 1, arg(x4 + y4 + j4) + 2],
        arg(y4 + j4 - x4) + 1,
    );
    if sign > 0 {
        num.iter().for_each(|&x| {
            g.mul_gamma(x);
        });
        g.div_gamma(den);
    } else {
        num.iter().for_each(|&x| {
            g.div_gamma(x);
        });
        g.mul_gamma(den);
    }
}

fn common(labels: &SixJLabels, shift: i64) -> GammaProduct {
    let SixJLabels { a, b, e, d, c, f, n } = *labels;
    let hn = HalfInt::half(n);
    let q4 = n - 4;
    let mut g = GammaProduct::new();
    g.mul_gamma(hn + a - shift).mul_gamma(hn + b - shift);
    g.div_factorial(n - 3);
    for _ in 0..3 {
        g.div_gamma(hn);
    }
    g.div_gamma(hn + e + shift - 1);
    nabla_sq(&mut g, 2 * (e + n) - 8, 2 * c + q4, 2 * d + q4, 1);
    nabla_sq(&mut g, 2 * a, 2 * c + q4, 2 * f + q4, -1);
    nabla_sq(&mut g, 2 * b, 2 * d + q4, 2 * f + q4, -1);
    g
}

fn check(labels: &SixJLabels, gap: i64) -> Result<()> {
    labels.check_nonnegative()?;
    if labels.e != labels.a + labels.b - gap || !labels.admissible() {
        return Err(Error::Precondition(format!("closed form with e = a + b - {gap} does not apply to {labels}")));
    }
    Ok(())
}

pub fn c_alpha_stretched(labels: &SixJLabels) -> Result<CAlpha> {
    check(labels, 0)?;
    let value = common(labels, 1).to_rational()? * normalization(labels);
    Ok(CAlpha { value, labels: *labels, method: Method::StretchedE })
}

pub fn c_alpha_near_stretched(labels: &SixJLabels) -> Result<CAlpha> {
    check(labels, 2)?;
    let SixJLabels { a, b, e, d, c, f, n } = *labels;
    let mut g = common(labels, 2);
    g.div_int(64);
    let bracket = 2 * a
        * (c + d - e)
        * (e - c + d + n - 2)
        * ((c + d - e + n - 4) * (b + d - f) * (a + c - f + n - 4) - (c + d + e + 2 * n - 4) * (a - c + f) * (b - d + f))
        + (2 * e + n)
            * (a - c + f)
            * (c + f - a + n - 2)
            * ((c + d + e + 2 * n - 4) * (b - d + f) * (a - c + f + n - 4) - (b + d - f) * (c + d - e) * (a + c - f + n - 4));
    g.mul_int(bracket);
    let value: BigRational = g.to_rational()? * normalization(labels);
    Ok(CAlpha { value, labels: *labels, method: Method::NearStretchedE })
}
