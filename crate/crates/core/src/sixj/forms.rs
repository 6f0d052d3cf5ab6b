//! Factorial forms of the c-function: three double sums and the triple sum.
//!
//! Terms with a negative factorial in the denominator vanish; the
//! summation box is read off those same factorials.

use num_rational::BigRational;
use num_traits::Zero;

use super::{normalization, CAlpha, Method};
use crate::error::{Error, Result};
use crate::exact::{GammaExact, GammaProduct, HalfInt};
use crate::labels::{shelepin, SixJLabels};

/// `c + sum_j z[j] * var_j`.
#[derive(Clone, Copy, Debug)]
pub struct Affine<const K: usize> {
    pub c: HalfInt,
    pub z: [i64; K],
}

impl<const K: usize> Affine<K> {
    fn at(&self, v: &[i64; K]) -> HalfInt {
        let mut out = self.c;
        for j in 0..K {
            out = out + self.z[j] * v[j];
        }
        out
    }
}

/// Sum over `K` indices of `(-1)^(sign + sum vars) * prod fac / prod fac * prod Gamma / prod Gamma`.
#[derive(Clone, Debug)]
pub struct FactorialSeries<const K: usize> {
    pub prefactor: GammaProduct,
    pub fac_num: Vec<Affine<K>>,
    pub fac_den: Vec<Affine<K>>,
    pub gamma_num: Vec<Affine<K>>,
    pub gamma_den: Vec<Affine<K>>,
    pub sign: i64,
}

impl<const K: usize> FactorialSeries<K> {
    /// Summation box implied by the denominator factorials.
    pub fn ranges(&self) -> Result<[(i64, i64); K]> {
        let mut lo = [i64::MIN; K];
        let mut hi = [i64::MAX; K];
        let constraints: Vec<(i64, [i64; K])> = self
            .fac_den
            .iter()
            .map(|a| (a.c.to_int().expect("integer factorial argument"), a.z))
            .collect();
        for _ in 0..=K {
            for (c, z) in &constraints {
                for j in 0..K {
                    if z[j] == 0 {
                        continue;
                    }
                    // c + z_j v_j + sum_{i != j} z_i v_i >= 0
                    let mut rest = *c;
                    let mut bounded = true;
                    for i in 0..K {
                        if i == j || z[i] == 0 {
                            continue;
                        }
                        let edge = if z[i] > 0 { hi[i] } else { lo[i] };
                        if edge == i64::MIN || edge == i64::MAX {
                            bounded = false;
                            break;
                        }
                        rest += z[i] * edge;
                    }
                    if !bounded {
                        continue;
                    }
                    match z[j] {
                        1 => lo[j] = lo[j].max(-rest),
                        -1 => hi[j] = hi[j].min(rest),
                        _ => {}
                    }
                }
            }
        }
        let mut out = [(0, 0); K];
        for j in 0..K {
            if lo[j] == i64::MIN || hi[j] == i64::MAX {
                return Err(Error::Precondition(format!("summation index {j} is unbounded")));
            }
            out[j] = (lo[j], hi[j]);
        }
        Ok(out)
    }

    fn term(&self, v: &[i64; K]) -> Option<GammaProduct> {
        let mut g = GammaProduct::new();
        for a in &self.fac_den {
            let x = a.at(v).to_int().expect("integer factorial argument");
            if x < 0 {
                return None;
            }
            g.div_factorial(x);
        }
        for a in &self.fac_num {
            g.mul_factorial(a.at(v).to_int().expect("integer factorial argument"));
        }
        for a in &self.gamma_num {
            g.mul_gamma(a.at(v));
        }
        for a in &self.gamma_den {
            g.div_gamma(a.at(v));
        }
        g.mul_sign(self.sign + v.iter().sum::<i64>());
        Some(g)
    }

    fn visit(&self, mut f: impl FnMut(GammaExact) -> Result<()>) -> Result<()> {
        let ranges = self.ranges()?;
        if ranges.iter().any(|&(l, h)| l > h) {
            return Ok(());
        }
        let mut v = ranges.map(|(l, _)| l);
        loop {
            if let Some(g) = self.term(&v) {
                f(g.evaluate()?)?;
            }
            let mut j = 0;
            loop {
                if j == K {
                    return Ok(());
                }
                if v[j] < ranges[j].1 {
                    v[j] += 1;
                    break;
                }
                v[j] = ranges[j].0;
                j += 1;
            }
        }
    }

    pub fn sum(&self) -> Result<BigRational> {
        let mut total = BigRational::zero();
        let mut exp = None;
        self.visit(|t| {
            if t.is_zero() {
                return Ok(());
            }
            match exp {
                None => exp = Some(t.sqrtpi_exp),
                Some(e) if e != t.sqrtpi_exp => return Err(Error::ResidualSqrtPi(t.sqrtpi_exp - e)),
                _ => {}
            }
            total += t.coeff;
            Ok(())
        })?;
        let pre = self.prefactor.evaluate()?;
        GammaExact { coeff: pre.coeff * total, sqrtpi_exp: pre.sqrtpi_exp + exp.unwrap_or(-pre.sqrtpi_exp) }
            .to_rational()
    }

    pub fn count_nonzero(&self) -> Result<u64> {
        let mut k = 0;
        self.visit(|t| {
            k += u64::from(!t.is_zero());
            Ok(())
        })?;
        Ok(k)
    }
}

fn h(twice: i64) -> HalfInt {
    HalfInt::half(twice)
}

fn int(k: i64) -> HalfInt {
    HalfInt::from_int(k)
}

fn a2(c: HalfInt, z1: i64, z2: i64) -> Affine<2> {
    Affine { c, z: [z1, z2] }
}

fn a3(c: HalfInt, z1: i64, z2: i64, z3: i64) -> Affine<3> {
    Affine { c, z: [z1, z2, z3] }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorialForm {
    First,
    Second,
    Third,
}

fn prefactor(nums: &[HalfInt], dens: &[HalfInt], sign: i64) -> GammaProduct {
    let mut g = GammaProduct::new();
    for &x in nums {
        g.mul_gamma(x);
    }
    for &x in dens {
        g.div_gamma(x);
    }
    g.mul_sign(sign);
    g
}

/// One of the three double-sum factorial forms; `None` when the triad
/// parity fails.
pub fn double_form(labels: &SixJLabels, form: FactorialForm) -> Option<FactorialSeries<2>> {
    if !labels.parity_ok() {
        return None;
    }
    let SixJLabels { a, b, e, d, c, f, n } = *labels;
    let hn = h(n);
    Some(match form {
        FactorialForm::First => FactorialSeries {
            prefactor: prefactor(
                &[h(a + c + f) + n - 2, h(a + c - f + n) - 1, h(b + e - a + n) - 1, h(a - b + e + n) - 1],
                &[int(n - 2), h(a + c + f + n), hn, hn, hn, h(b + e - a) + 1, h(a - b + e) + 1, h(a + c - f) + 1],
                (b + c - e - f) / 2,
            ),
            fac_num: vec![a2(h(a + c - f), 1, 0), a2(int(0), 1, 1)],
            fac_den: vec![
                a2(int(0), 1, 0),
                a2(h(a - c + f), -1, 0),
                a2(h(d + f - b), -1, 0),
                a2(h(b + c - e - f), 1, 0),
                a2(int(0), 0, 1),
                a2(h(b + d - f), 0, -1),
                a2(h(e + f - b - c), 0, 1),
            ],
            gamma_num: vec![
                a2(h(b + d - f + n) - 1, 1, 0),
                a2(int(f) + hn - 1, -1, 0),
                a2(h(b + c + e - f + n) - 1, 0, -1),
                a2(h(d + f - b + n) - 1, 0, 1),
                a2(h(a - c + f + n) - 1, 0, 1),
            ],
            gamma_den: vec![
                a2(h(b + c + e - f + n), 1, 0),
                a2(h(a + c - f + n) - 1, 0, -1),
                a2(int(f) + hn, 0, 1),
                a2(hn - 1, 1, 1),
            ],
            sign: 0,
        },
        FactorialForm::Second => FactorialSeries {
            prefactor: prefactor(
                &[h(a + c + f) + n - 2, h(a + c - f + n) - 1, h(b + e - a + n) - 1, h(a - b + e + n) - 1],
                &[int(n - 2), h(a + c + f + n), hn, hn, hn, h(b + e - a) + 1, h(a - b + e) + 1, h(a + c - f) + 1],
                (a - b - c + d) / 2,
            ),
            fac_num: vec![a2(h(a + c - f), 1, 0), a2(int(f), -1, -1), a2(h(b + c + e + f) + n - 3, 0, -1)],
            fac_den: vec![
                a2(int(0), 1, 0),
                a2(int(0), 0, 1),
                a2(h(a - c + f), -1, 0),
                a2(h(b + c - e - f), 1, 0),
                a2(h(d + f - b), -1, 0),
                a2(h(b - d + f), 0, -1),
                a2(h(c + f - a), 0, -1),
                a2(h(a + c + f) + n - 3, 0, -1),
            ],
            gamma_num: vec![
                a2(h(b + d - f + n) - 1, 1, 0),
                a2(int(f) + hn - 1, -1, 0),
                a2(h(b + c - e + f + n) - 1, 0, -1),
                a2(int(f) + hn - 1, 0, -1),
            ],
            gamma_den: vec![
                a2(h(b + c + e - f + n), 1, 0),
                a2(int(f) + hn - 1, -1, -1),
                a2(h(b + d + f + n), 0, -1),
            ],
            sign: 0,
        },
        FactorialForm::Third => FactorialSeries {
            prefactor: prefactor(
                &[h(c + f - a + n) - 1, h(a - c + f + n) - 1, h(b + e - a + n) - 1, h(a - b + e + n) - 1],
                &[int(n - 2), h(c + f - a) + 1, h(a - c + f) + 1, hn, hn, hn, h(b + e - a) + 1, h(a - b + e) + 1],
                (a + d - e - f) / 2,
            ),
            fac_num: vec![a2(int(a), -1, 0), a2(h(a + b + c + d) + n - 3, -1, 0), a2(h(a + b + c - d), -1, -1)],
            fac_den: vec![
                a2(int(0), 1, 0),
                a2(int(0), 0, 1),
                a2(h(a + b - e), -1, 0),
                a2(h(a + c - f), -1, 0),
                a2(h(b - d + f), 0, -1),
                a2(h(c - d + e), 0, -1),
            ],
            gamma_num: vec![
                a2(h(a + b + c - d + n) - 1, -1, 0),
                a2(h(d + f - b + n) - 1, 0, 1),
                a2(h(d + e - c + n) - 1, 0, 1),
                a2(h(a + b + c - d + n) - 1, 0, -1),
            ],
            gamma_den: vec![
                a2(h(a + b + e + n), -1, 0),
                a2(h(a + c + f + n), -1, 0),
                a2(h(a - b - c + d + n) - 1, 0, 1),
                a2(int(d) + hn, 0, 1),
                a2(h(a + b + c - d + n) - 1, -1, -1),
            ],
            sign: 0,
        },
    })
}

/// The triple sum restricted by `r11`.
pub fn triple_form(labels: &SixJLabels) -> Option<FactorialSeries<3>> {
    if !labels.parity_ok() {
        return None;
    }
    let SixJLabels { a, b, e, d, c, f, n } = *labels;
    let hn = h(n);
    let r11 = (a + b - e) / 2;
    Some(FactorialSeries {
        prefactor: prefactor(
            &[
                h(a + b + e) + n - 2,
                h(a + b - e + n) - 1,
                h(b + e - a + n) - 1,
                h(a - b + e + n) - 1,
                h(d - b + f + n) - 1,
            ],
            &[
                int(n - 2),
                h(a + c + f + n),
                h(a + c - f) + 1,
                hn,
                hn,
                hn,
                h(b + e - a) + 1,
                h(a - b + e) + 1,
                h(b - d + f) + 1,
            ],
            0,
        ),
        fac_num: vec![
            a3(int(a), -1, 0, 0),
            a3(int(b), 0, -1, 0),
            a3(int(r11), 0, 0, -1),
            a3(h(a + b + c + d) + n - 3, 0, -1, 0),
        ],
        fac_den: vec![
            a3(int(0), 1, 0, 0),
            a3(int(0), 0, 1, 0),
            a3(int(0), 0, 0, 1),
            a3(h(c + d - a - b), 1, 0, 0),
            a3(h(a - c + f), -1, 0, 0),
            a3(h(b + d - f), 0, -1, 0),
            a3(int(a + b + n - 3), -1, -1, 0),
            a3(int(r11), -1, 0, -1),
            a3(int(r11), 0, -1, -1),
        ],
        gamma_num: vec![
            a3(h(c + f - a + n) - 1, 1, 0, 0),
            a3(int(a + b) + h(d - c - e + n) - 1, -1, -1, -1),
            a3(h(c - d + e + n) - 1, 0, 0, 1),
        ],
        gamma_den: vec![a3(int(e) + hn, 0, 0, 1), a3(h(b + d + f + n), 0, -1, 0), a3(h(a + b - e + n) - 1, 0, 0, -1)],
        sign: r11,
    })
}

fn finish(labels: &SixJLabels, method: Method, sum: Result<BigRational>) -> Result<CAlpha> {
    let value = sum? * normalization(labels);
    Ok(CAlpha { value, labels: *labels, method })
}

fn zero_if_inadmissible(labels: &SixJLabels, method: Method) -> Result<Option<CAlpha>> {
    labels.check_nonnegative()?;
    shelepin(labels)?;
    if !labels.admissible() {
        return Ok(Some(CAlpha { value: BigRational::zero(), labels: *labels, method }));
    }
    Ok(None)
}

/// A double-sum factorial form, evaluated independently of the Pochhammer
/// forms. The reported method is the one with the same term structure.
pub fn c_alpha_factorial(labels: &SixJLabels, form: FactorialForm) -> Result<CAlpha> {
    let method = match form {
        FactorialForm::First => Method::A,
        FactorialForm::Second => Method::B,
        FactorialForm::Third => Method::C,
    };
    if let Some(z) = zero_if_inadmissible(labels, method)? {
        return Ok(z);
    }
    let series = double_form(labels, form).expect("parity checked");
    finish(labels, method, series.sum())
}

pub(crate) fn triple(labels: &SixJLabels) -> Result<CAlpha> {
    if let Some(z) = zero_if_inadmissible(labels, Method::T3)? {
        return Ok(z);
    }
    let series = triple_form(labels).expect("parity checked");
    finish(labels, Method::T3, series.sum())
}
