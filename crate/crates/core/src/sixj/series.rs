//! Pochhammer double sums over `x1 in 0..=r1`, `x2 in 0..=r2`.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Method;
use crate::exact::{GammaProduct, HalfInt};
use crate::labels::RArray;

/// `sum C(r1,x1) C(r2,x2) (-1)^(x1+x2) * prod (p)_k` where each Pochhammer
/// runs over `x1`, `r1 - x1`, `x2` or `r2 - x2`, and the coupled ones have
/// a base shifted by a multiple of `x2`.
#[derive(Clone, Debug, Default)]
pub struct DoubleSeries {
    pub r1: i64,
    pub r2: i64,
    pub up1: Vec<HalfInt>,
    pub down1: Vec<HalfInt>,
    pub up2: Vec<HalfInt>,
    pub down2: Vec<HalfInt>,
    /// `(base + shift * x2)_{x1}`.
    pub coupled_up: Vec<(HalfInt, i64)>,
    /// `(base + shift * x2)_{r1 - x1}`.
    pub coupled_down: Vec<(HalfInt, i64)>,
}

/// `D[k] = prod_{i<k} (2h + 2i)`, so that `(h)_k = D[k] / 2^k`.
fn doubled(h: HalfInt, len: i64) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(len as usize + 1);
    let mut acc = BigInt::one();
    out.push(acc.clone());
    let mut t = h.twice();
    for _ in 0..len {
        acc *= t;
        t += 2;
        out.push(acc.clone());
    }
    out
}

fn side(r: i64, up: &[HalfInt], down: &[HalfInt]) -> Vec<BigInt> {
    let ups: Vec<_> = up.iter().map(|&h| doubled(h, r)).collect();
    let downs: Vec<_> = down.iter().map(|&h| doubled(h, r)).collect();
    (0..=r)
        .map(|x| {
            let mut v = binomial(BigInt::from(r), BigInt::from(x));
            for t in &ups {
                v *= &t[x as usize];
            }
            for t in &downs {
                v *= &t[(r - x) as usize];
            }
            v
        })
        .collect()
}

impl DoubleSeries {
    fn two_power(&self, x1: i64, x2: i64) -> i64 {
        let u1 = (self.up1.len() + self.coupled_up.len()) as i64;
        let d1 = (self.down1.len() + self.coupled_down.len()) as i64;
        u1 * x1 + d1 * (self.r1 - x1) + self.up2.len() as i64 * x2 + self.down2.len() as i64 * (self.r2 - x2)
    }

    fn for_each_term(&self, mut visit: impl FnMut(i64, i64, BigInt)) {
        if self.r1 < 0 || self.r2 < 0 {
            return;
        }
        let s1 = side(self.r1, &self.up1, &self.down1);
        let s2 = side(self.r2, &self.up2, &self.down2);
        for x2 in 0..=self.r2 {
            let w2 = &s2[x2 as usize];
            if w2.is_zero() {
                continue;
            }
            let cu: Vec<_> = self.coupled_up.iter().map(|&(h, k)| doubled(h + k * x2, self.r1)).collect();
            let cd: Vec<_> = self.coupled_down.iter().map(|&(h, k)| doubled(h + k * x2, self.r1)).collect();
            for x1 in 0..=self.r1 {
                let w1 = &s1[x1 as usize];
                if w1.is_zero() {
                    continue;
                }
                let mut t = w1 * w2;
                for c in &cu {
                    t *= &c[x1 as usize];
                }
                for c in &cd {
                    t *= &c[(self.r1 - x1) as usize];
                }
                if (x1 + x2) % 2 == 1 {
                    t = -t;
                }
                visit(x1, x2, t);
            }
        }
    }

    pub fn sum(&self) -> BigRational {
        let mut emax = 0;
        for x1 in 0..=self.r1.max(0) {
            for x2 in 0..=self.r2.max(0) {
                emax = emax.max(self.two_power(x1, x2));
            }
        }
        let mut total = BigInt::zero();
        self.for_each_term(|x1, x2, t| {
            if !t.is_zero() {
                total += t << (emax - self.two_power(x1, x2)) as usize;
            }
        });
        BigRational::new(total, BigInt::one() << emax as usize)
    }

    pub fn terms(&self) -> Vec<((i64, i64), BigRational)> {
        let mut out = Vec::new();
        self.for_each_term(|x1, x2, t| {
            let e = self.two_power(x1, x2) as usize;
            out.push(((x1, x2), BigRational::new(t, BigInt::one() << e)));
        });
        out
    }

    pub fn count_nonzero(&self) -> u64 {
        let mut k = 0;
        self.for_each_term(|_, _, t| k += u64::from(!t.is_zero()));
        k
    }

    pub fn term_bound(&self) -> u64 {
        ((self.r1 + 1) * (self.r2 + 1)) as u64
    }
}

/// The double series of the three Pochhammer forms, with `tau` and `n`
/// free so that the continued values can be substituted.
pub fn kernel(ra: &RArray, tau: HalfInt, n: i64, method: Method) -> DoubleSeries {
    let r = |i, k| HalfInt::from_int(ra.at(i, k));
    let al = |k| HalfInt::from_int(ra.al(k));
    let be = |i| HalfInt::from_int(ra.be(i));
    let one = HalfInt::ONE;
    match method {
        Method::A => DoubleSeries {
            r1: ra.at(1, 1),
            r2: ra.at(1, 3),
            up1: vec![-r(1, 4), r(2, 2) + one, r(2, 3) + tau],
            down1: vec![-r(2, 1), -al(4) - tau, r(3, 4) + tau],
            up2: vec![r(2, 4) + tau, -r(1, 2) - tau + one],
            down2: vec![-al(2) - tau, r(3, 2) + tau],
            coupled_up: vec![(be(2) - be(1) + one, 1)],
            coupled_down: vec![(-r(2, 1) - tau + one, -1)],
        },
        Method::B => DoubleSeries {
            r1: ra.at(1, 1),
            r2: ra.at(3, 1),
            up1: vec![-r(1, 4), r(2, 2) + one, r(2, 3) + tau],
            down1: vec![-r(2, 1), r(3, 4) + tau, -al(4) - tau],
            up2: vec![-al(2) - tau, -al(3) - n + 3],
            down2: vec![r(2, 4) + tau, al(1) + n - 2],
            coupled_up: vec![(-r(3, 4) - r(1, 1) - tau + one, 1)],
            coupled_down: vec![(r(3, 4) + one, -1)],
        },
        Method::C => DoubleSeries {
            r1: ra.at(1, 1),
            r2: ra.at(3, 1),
            up1: vec![-r(1, 2), -al(3) - tau, -al(4) - tau],
            down1: vec![r(3, 2) + tau, r(2, 2) + one, al(1) + n - 2],
            up2: vec![r(2, 3) + tau, r(2, 4) + tau],
            down2: vec![-al(2) - tau, -r(2, 1) - tau + one],
            coupled_up: vec![(-r(3, 2) - r(1, 1) - tau + one, 1)],
            coupled_down: vec![(r(3, 2) + one, -1)],
        },
        _ => panic!("no double series for {method:?}"),
    }
}

/// Gamma prefactor of the Pochhammer forms, without the normalization.
pub fn prefactor(ra: &RArray, n: i64, method: Method) -> GammaProduct {
    let tau = HalfInt::half(n - 2);
    let half_n = HalfInt::half(n);
    let mut g = GammaProduct::new();
    let (sign, lead, facs, gammas): (i64, i64, [(usize, usize); 6], [(usize, usize); 6]) = match method {
        Method::A => (
            ra.al(1) - ra.al(3),
            ra.al(3),
            [(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (3, 3)],
            [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4)],
        ),
        Method::B => (
            ra.be(1) - ra.be(3),
            ra.al(1),
            [(1, 1), (1, 2), (1, 4), (2, 1), (3, 1), (3, 3)],
            [(1, 2), (2, 2), (2, 3), (2, 4), (3, 3), (3, 4)],
        ),
        Method::C => (
            ra.be(1) - ra.be(3),
            ra.al(1),
            [(1, 1), (1, 2), (2, 1), (3, 1), (3, 3), (3, 4)],
            [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4)],
        ),
        _ => panic!("no double series for {method:?}"),
    };
    g.mul_sign(sign);
    g.mul_factorial(lead + n - 3);
    g.div_factorial(n - 3);
    for _ in 0..3 {
        g.div_gamma(half_n);
    }
    for (i, k) in facs {
        g.div_factorial(ra.at(i, k));
    }
    for (i, k) in gammas {
        g.mul_gamma(HalfInt::from_int(ra.at(i, k)) + tau);
    }
    for k in 2..=4 {
        g.div_gamma(HalfInt::from_int(ra.al(k)) + tau + 1);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::pochhammer_half;

    #[test]
    fn fast_sum_matches_direct_terms() {
        let s = DoubleSeries {
            r1: 3,
            r2: 2,
            up1: vec![HalfInt::half(3), HalfInt::from_int(-2)],
            down1: vec![HalfInt::half(-5)],
            up2: vec![HalfInt::from_int(4)],
            down2: vec![HalfInt::half(7)],
            coupled_up: vec![(HalfInt::half(1), 1)],
            coupled_down: vec![(HalfInt::from_int(2), -1)],
        };
        let mut direct = BigRational::zero();
        for x1 in 0..=3i64 {
            for x2 in 0..=2i64 {
                let mut t = BigRational::from_integer(
                    binomial(BigInt::from(3), BigInt::from(x1)) * binomial(BigInt::from(2), BigInt::from(x2)),
                );
                if (x1 + x2) % 2 == 1 {
                    t = -t;
                }
                t *= pochhammer_half(HalfInt::half(3), x1 as u64);
                t *= pochhammer_half(HalfInt::from_int(-2), x1 as u64);
                t *= pochhammer_half(HalfInt::half(-5), (3 - x1) as u64);
                t *= pochhammer_half(HalfInt::from_int(4), x2 as u64);
                t *= pochhammer_half(HalfInt::half(7), (2 - x2) as u64);
                t *= pochhammer_half(HalfInt::half(1) + x2, x1 as u64);
                t *= pochhammer_half(HalfInt::from_int(2) - x2, (3 - x1) as u64);
                direct += t;
            }
        }
        assert_eq!(s.sum(), direct);
        let by_terms: BigRational = s.terms().into_iter().map(|(_, t)| t).sum();
        assert_eq!(by_terms, direct);
        assert!(s.count_nonzero() <= s.term_bound());
    }
}
