//! Terminating Kampé de Fériet series `F(1:4;4 / 1:3;3)` at `x = y = 1` and
//! their SO(n) parameterizations.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{pochhammer_half, GammaExact, GammaProduct, HalfInt};
use crate::labels::{hook_reflect, shelepin, FormalLabels, FormalRArray, HookReflection, SixJLabels};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KdFParams {
    pub a1: HalfInt,
    pub c1: HalfInt,
    pub b: [HalfInt; 4],
    pub d: [HalfInt; 3],
    pub b_prime: [HalfInt; 4],
    pub d_prime: [HalfInt; 3],
    pub x: BigRational,
    pub y: BigRational,
    pub n: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KdFVariant {
    V1a,
    V1b,
    V2a,
    V2b,
    V3a,
    V3b,
}

impl KdFVariant {
    pub const ALL: [KdFVariant; 6] =
        [KdFVariant::V1a, KdFVariant::V1b, KdFVariant::V2a, KdFVariant::V2b, KdFVariant::V3a, KdFVariant::V3b];

    pub fn tag(self) -> &'static str {
        match self {
            KdFVariant::V1a => "1a",
            KdFVariant::V1b => "1b",
            KdFVariant::V2a => "2a",
            KdFVariant::V2b => "2b",
            KdFVariant::V3a => "3a",
            KdFVariant::V3b => "3b",
        }
    }

    pub fn family(self) -> Family {
        match self {
            KdFVariant::V1a | KdFVariant::V2a | KdFVariant::V3b => Family::Bala,
            KdFVariant::V1b | KdFVariant::V2b | KdFVariant::V3a => Family::Balb,
        }
    }
}

impl fmt::Display for KdFVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for KdFVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        KdFVariant::ALL.into_iter().find(|v| v.tag() == s).ok_or_else(|| Error::Parse(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Bala,
    Balb,
}

/// Which terminating numerator bounds each axis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Termination {
    /// The smallest terminating index on each axis.
    #[default]
    Shortest,
    /// The largest one; the extra terms vanish.
    Longest,
}

fn axis_bound(params: &[HalfInt], t: Termination) -> Result<i64> {
    let ends = params.iter().filter(|x| x.is_nonpositive_integer()).map(|x| -x.floor());
    match t {
        Termination::Shortest => ends.min(),
        Termination::Longest => ends.max(),
    }
    .ok_or(Error::NonTerminating)
}

pub fn kdf_eval(p: &KdFParams) -> Result<BigRational> {
    kdf_eval_with(p, Termination::Shortest)
}

pub fn kdf_eval_with(p: &KdFParams, t: Termination) -> Result<BigRational> {
    let sm = axis_bound(&p.b, t)?;
    let tm = axis_bound(&p.b_prime, t)?;
    let mut total = BigRational::zero();
    let mut xs = BigRational::one();
    for s in 0..=sm as u64 {
        let mut xt = xs.clone();
        for u in 0..=tm as u64 {
            let mut num = pochhammer_half(p.a1, s + u);
            for &x in &p.b {
                num *= pochhammer_half(x, s);
            }
            for &x in &p.b_prime {
                num *= pochhammer_half(x, u);
            }
            if !num.is_zero() {
                let mut den = pochhammer_half(p.c1, s + u);
                den *= BigRational::from_integer(factorial(s) * factorial(u));
                for &x in &p.d {
                    den *= pochhammer_half(x, s);
                }
                for &x in &p.d_prime {
                    den *= pochhammer_half(x, u);
                }
                if den.is_zero() {
                    return Err(Error::SeriesPole { s, t: u });
                }
                total += num / den * &xt;
            }
            xt *= &p.y;
        }
        xs *= &p.x;
    }
    Ok(total)
}

fn factorial(k: u64) -> num_bigint::BigInt {
    (1..=k).fold(num_bigint::BigInt::one(), |acc, i| acc * i)
}

/// Gamma prefactor of a variant before its arguments are checked.
#[derive(Clone, Debug, Default)]
struct Prefactor {
    sign: HalfInt,
    fac_num: Vec<HalfInt>,
    fac_den: Vec<HalfInt>,
    gamma_num: Vec<HalfInt>,
    gamma_den: Vec<HalfInt>,
}

impl Prefactor {
    fn evaluate(&self, variant: KdFVariant, n: i64) -> Result<GammaExact> {
        let indefinite = |x: HalfInt| Error::IndefinitePrefactor { variant: variant.tag().to_string(), detail: x.to_string() };
        let mut g = GammaProduct::new();
        for &x in self.fac_num.iter().chain(&self.fac_den) {
            if x.twice() < 0 {
                return Err(indefinite(x));
            }
        }
        for &x in self.gamma_num.iter().chain(&self.gamma_den) {
            if x.is_nonpositive_integer() {
                return Err(indefinite(x));
            }
        }
        g.mul_sign(self.sign.to_int().expect("integer phase").abs());
        for &x in &self.fac_num {
            g.mul_gamma(x + 1);
        }
        for &x in &self.fac_den {
            g.div_gamma(x + 1);
        }
        for &x in &self.gamma_num {
            g.mul_gamma(x);
        }
        for &x in &self.gamma_den {
            g.div_gamma(x);
        }
        for _ in 0..3 {
            g.div_gamma(HalfInt::half(n));
        }
        g.evaluate()
    }
}

fn build(variant: KdFVariant, n: i64, ra: &FormalRArray) -> (Prefactor, KdFParams) {
    let t = HalfInt::half(n) - 1;
    let r = |i, k| ra.at(i, k);
    let rh = |i, k| ra.at(i, k) + t;
    let a = |k| ra.al(k);
    let ah = |k| ra.al(k) + t;
    let b = |i| ra.be(i);
    let bh = |i| ra.be(i) + t;
    let nn = HalfInt::from_int(n);
    let pf = |sign, fac_num: Vec<HalfInt>, fac_den: Vec<HalfInt>, gamma_num: Vec<HalfInt>, gamma_den: Vec<HalfInt>| {
        let mut fac_den = fac_den;
        fac_den.insert(0, nn - 3);
        Prefactor { sign, fac_num, fac_den, gamma_num, gamma_den }
    };
    let zero = HalfInt::ZERO;
    let (pre, a1, c1, bs, ds, bps, dps) = match variant {
        KdFVariant::V1a => (
            pf(
                zero,
                vec![a(3) + n - 3],
                vec![r(1, 1), r(1, 2), r(1, 3), r(1, 4), r(3, 3), b(2) - b(1)],
                vec![rh(2, 1), rh(2, 2), rh(2, 3), rh(2, 4), rh(3, 3), rh(3, 4) + r(1, 1), rh(3, 2) + r(1, 3)],
                vec![ah(3) + 1, bh(2) - b(1), ah(2) - r(1, 3) + 1, ah(4) - r(1, 1) + 1],
            ),
            b(2) - b(1) + 1,
            bh(2) - b(1),
            [-r(1, 1), -r(1, 4), rh(2, 3), r(2, 2) + 1],
            [b(2) - b(1) + 1, ah(4) - r(1, 1) + 1, -rh(3, 4) - r(1, 1) + 1],
            [rh(2, 1), rh(2, 4), -r(1, 3), -rh(1, 2) + 1],
            [b(2) - b(1) + 1, -rh(3, 2) - r(1, 3) + 1, ah(2) - r(1, 3) + 1],
        ),
        KdFVariant::V1b => (
            pf(
                a(1) - a(3),
                vec![a(3) + n - 3, r(1, 1) + r(2, 2), r(1, 1) + r(2, 3)],
                vec![r(1, 1), r(1, 2), r(1, 3), r(2, 1), r(2, 2), r(2, 3), r(3, 3), a(1) - a(4)],
                vec![rh(1, 2), rh(2, 2), rh(3, 2), rh(3, 3), rh(3, 4), r(1, 3) + rh(2, 4), r(1, 1) + rh(2, 3)],
                vec![ah(2) + 1, ah(3) + 1, ah(4) + 1, ah(3) - a(2)],
            ),
            -r(1, 1) - rh(2, 3) + 1,
            -r(1, 1) - r(2, 3),
            [-r(1, 1), -r(2, 1), -ah(4), rh(3, 4)],
            [-r(1, 1) - rh(2, 3) + 1, a(1) - a(4) + 1, -r(1, 1) - r(2, 2)],
            [-r(2, 3), -r(1, 3), rh(3, 2), -ah(2)],
            [-r(1, 1) - rh(2, 3) + 1, -r(1, 3) - rh(2, 4) + 1, ah(3) - a(2)],
        ),
        KdFVariant::V2a => (
            pf(
                b(1) - b(3),
                vec![r(3, 4) + r(1, 1), b(3) + n - 3],
                vec![r(1, 1), r(1, 2), r(1, 4), r(3, 1), r(3, 3), r(3, 4), b(2) - b(1)],
                vec![rh(1, 2), rh(2, 2), rh(2, 3), rh(3, 3), rh(2, 4) + r(3, 1), rh(3, 4) + r(1, 1)],
                vec![ah(2) + 1, ah(3) + 1, ah(4) - r(1, 1) + 1],
            ),
            -rh(3, 4) - r(1, 1) + 1,
            -r(3, 4) - r(1, 1),
            [-r(1, 1), -r(1, 4), rh(2, 3), r(2, 2) + 1],
            [-rh(3, 4) - r(1, 1) + 1, b(2) - b(1) + 1, ah(4) - r(1, 1) + 1],
            [-r(3, 4), -r(3, 1), -ah(2), -a(3) - n + 3],
            [-rh(1, 4) - r(3, 1) + 1, -rh(2, 4) - r(3, 1) + 1, -b(3) - n + 3],
        ),
        KdFVariant::V2b => (
            pf(
                zero,
                vec![a(1) + n - 3, a(3) + n - 3, r(1, 1) + r(2, 2)],
                vec![r(1, 1), r(1, 2), r(2, 1), r(2, 2), r(3, 1), r(3, 3), a(3) - r(3, 1) + n - 3, a(1) - a(4)],
                vec![rh(1, 2), rh(1, 4), rh(2, 2), rh(2, 4), rh(3, 3), rh(3, 4), r(1, 1) + rh(2, 3)],
                vec![ah(3) + 1, ah(4) + 1, ah(1) - a(4), ah(2) - r(3, 1) + 1],
            ),
            a(1) - a(4) + 1,
            ah(1) - a(4),
            [-r(1, 1), -r(2, 1), rh(3, 4), -ah(4)],
            [a(1) - a(4) + 1, -r(1, 1) - rh(2, 3) + 1, -r(1, 1) - r(2, 2)],
            [rh(1, 4), rh(2, 4), -r(3, 1), a(1) + n - 2],
            [a(1) - a(4) + 1, ah(2) - r(3, 1) + 1, a(3) - r(3, 1) + n - 2],
        ),
        KdFVariant::V3a => (
            pf(
                b(1) - b(3),
                vec![b(1) + n - 3, r(1, 1) + r(2, 2), r(1, 1) + r(3, 2)],
                vec![r(1, 1), r(1, 2), r(2, 1), r(2, 2), r(3, 1), r(3, 2), r(3, 3), r(3, 4)],
                vec![rh(2, 1), rh(2, 2), rh(2, 3), rh(2, 4), rh(3, 3), rh(3, 4), rh(3, 2) + r(1, 1)],
                vec![ah(3) + 1, ah(4) + 1, ah(2) - r(3, 1) + 1, bh(2) - b(3)],
            ),
            -rh(3, 2) - r(1, 1) + 1,
            -r(3, 2) - r(1, 1),
            [-r(1, 1), -r(1, 2), -ah(3), -ah(4)],
            [-rh(3, 2) - r(1, 1) + 1, -b(1) - n + 3, -r(1, 1) - r(2, 2)],
            [-r(3, 2), -r(3, 1), rh(2, 4), rh(2, 3)],
            [-rh(3, 2) - r(1, 1) + 1, ah(2) - r(3, 1) + 1, bh(2) - b(3)],
        ),
        KdFVariant::V3b => (
            pf(
                zero,
                vec![a(1) + n - 3],
                vec![r(1, 1), r(2, 1), r(3, 1), r(3, 3), r(3, 4), a(1) - a(2)],
                vec![rh(1, 2), rh(2, 2), rh(3, 2), rh(3, 3), rh(3, 4), rh(2, 3) + r(3, 1), rh(2, 4) + r(3, 1)],
                vec![ah(2) + 1, ah(3) - r(1, 1) + 1, ah(4) - r(1, 1) + 1, ah(1) - a(2)],
            ),
            a(1) - a(2) + 1,
            ah(1) - a(2),
            [-r(1, 1), rh(3, 2), a(1) + n - 2, r(2, 2) + 1],
            [a(1) - a(2) + 1, ah(3) - r(1, 1) + 1, ah(4) - r(1, 1) + 1],
            [rh(1, 2), -r(3, 1), -ah(2), -rh(2, 1) + 1],
            [a(1) - a(2) + 1, -rh(2, 4) - r(3, 1) + 1, -rh(2, 3) - r(3, 1) + 1],
        ),
    };
    let params = KdFParams {
        a1,
        c1,
        b: bs,
        d: ds,
        b_prime: bps,
        d_prime: dps,
        x: BigRational::one(),
        y: BigRational::one(),
        n,
    };
    (pre, params)
}

/// Parameters and gamma prefactor of a variant; `prefactor * kdf_eval`
/// times the normalization is the c-function.
pub fn kdf_params_for(labels: &SixJLabels, variant: KdFVariant) -> Result<(KdFParams, GammaExact)> {
    if !labels.admissible() {
        return Err(Error::Precondition(format!("{labels} is not admissible")));
    }
    let ra = FormalRArray::from(shelepin(labels)?);
    let (pre, params) = build(variant, labels.n, &ra);
    let g = pre.evaluate(variant, labels.n)?;
    Ok((params, g))
}

/// Parameters at formal labels, with no prefactor.
pub fn kdf_params_formal(labels: &FormalLabels, variant: KdFVariant) -> KdFParams {
    build(variant, labels.n, &labels.shelepin()).1
}

/// `c1 - a1 = n/2 - 2` and the same excess on each axis.
pub fn is_balanced(p: &KdFParams) -> bool {
    let target = HalfInt::half(p.n) - 2;
    let excess = |b: &[HalfInt], d: &[HalfInt]| {
        b.iter().fold(HalfInt::ONE, |s, &x| s + x) - d.iter().fold(HalfInt::ZERO, |s, &x| s + x)
    };
    p.c1 - p.a1 == target && excess(&p.b, &p.d) == target && excess(&p.b_prime, &p.d_prime) == target
}

pub fn check_dependencies(p: &KdFParams, family: Family) -> bool {
    let (b, d, bp, dp) = (&p.b, &p.d, &p.b_prime, &p.d_prime);
    let n = p.n;
    if !(p.a1 == d[0] && p.a1 == dp[0] && p.a1 == d[1] + dp[1] - 1) {
        return false;
    }
    match family {
        Family::Bala => {
            p.a1 == d[2] + dp[2] - 1 && p.c1 == b[3] + bp[3] + (n - 4) && (0..3).all(|i| p.c1 == b[i] + bp[i])
        }
        Family::Balb => p.a1 == d[2] + dp[2] - (n - 3) && (0..4).all(|i| p.c1 == b[i] + bp[i]),
    }
}

type Axis = (Vec<HalfInt>, Vec<HalfInt>);

/// `(a1, c1, {axis multisets})`, blind to the order inside each group and
/// to the interchange of the two axes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamKey {
    pub a1: HalfInt,
    pub c1: HalfInt,
    pub axes: BTreeSet<Axis>,
}

pub fn param_key(p: &KdFParams) -> ParamKey {
    let axis = |b: &[HalfInt], d: &[HalfInt]| {
        let mut b = b.to_vec();
        let mut d = d.to_vec();
        b.sort();
        d.sort();
        (b, d)
    };
    let axes = [axis(&p.b, &p.d), axis(&p.b_prime, &p.d_prime)].into_iter().collect();
    ParamKey { a1: p.a1, c1: p.c1, axes }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HookPair {
    P1a2a,
    P1b2b,
    P1a3b,
    P1b3a,
}

impl HookPair {
    pub const ALL: [HookPair; 4] = [HookPair::P1a2a, HookPair::P1b2b, HookPair::P1a3b, HookPair::P1b3a];

    pub fn variants(self) -> (KdFVariant, KdFVariant) {
        match self {
            HookPair::P1a2a => (KdFVariant::V1a, KdFVariant::V2a),
            HookPair::P1b2b => (KdFVariant::V1b, KdFVariant::V2b),
            HookPair::P1a3b => (KdFVariant::V1a, KdFVariant::V3b),
            HookPair::P1b3a => (KdFVariant::V1b, KdFVariant::V3a),
        }
    }

    /// The reflection that carries the first variant onto the second.
    pub fn reflection(self) -> HookReflection {
        match self {
            HookPair::P1a2a => HookReflection::SingleF,
            HookPair::P1b2b => HookReflection::SingleD,
            HookPair::P1a3b | HookPair::P1b3a => HookReflection::TripleCdf,
        }
    }
}

pub fn hook_reflection_map_check(labels: &SixJLabels, pair: HookPair) -> bool {
    let (from, to) = pair.variants();
    let x = FormalLabels::from(*labels);
    let y = hook_reflect(&x, pair.reflection());
    param_key(&kdf_params_formal(&x, from)) == param_key(&kdf_params_formal(&y, to))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sixj::{c_alpha_with, normalization, EvalOptions, Method};

    fn h(k: i64) -> HalfInt {
        HalfInt::from_int(k)
    }

    fn generic(b0: i64, bp0: i64) -> KdFParams {
        KdFParams {
            a1: HalfInt::half(3),
            c1: h(5),
            b: [h(b0), h(2), h(3), HalfInt::half(7)],
            d: [h(4), h(6), HalfInt::half(9)],
            b_prime: [h(bp0), h(1), h(1), h(1)],
            d_prime: [h(2), h(2), h(2)],
            x: BigRational::one(),
            y: BigRational::one(),
            n: 6,
        }
    }

    #[test]
    fn trivial_sums() {
        assert_eq!(kdf_eval(&generic(0, 0)).unwrap(), BigRational::one());
        let expect = BigRational::one()
            + HalfInt::half(3).to_rational() * h(-1).to_rational() * h(2).to_rational() * h(3).to_rational()
                * HalfInt::half(7).to_rational()
                / (h(5).to_rational() * h(4).to_rational() * h(6).to_rational() * HalfInt::half(9).to_rational());
        assert_eq!(kdf_eval(&generic(-1, 0)).unwrap(), expect);
    }

    #[test]
    fn nonterminating_is_an_error() {
        let mut p = generic(0, 0);
        p.b[0] = h(1);
        assert_eq!(kdf_eval(&p), Err(Error::NonTerminating));
    }

    #[test]
    fn pole_is_an_error() {
        let mut p = generic(-2, 0);
        p.d[0] = h(-1);
        assert_eq!(kdf_eval(&p), Err(Error::SeriesPole { s: 2, t: 0 }));
    }

    #[test]
    fn variant_1a_on_all_twos() {
        let x = SixJLabels::new(6, [2; 6]);
        let (p, pre) = kdf_params_for(&x, KdFVariant::V1a).unwrap();
        assert!(p.b.contains(&h(-1)) && p.b_prime.contains(&h(-1)));
        let value = (pre * GammaExact::rational(kdf_eval(&p).unwrap())).to_rational().unwrap() * normalization(&x);
        assert_eq!(value, c_alpha_with(&x, Method::A, &EvalOptions::default()).unwrap().value);
        assert!(is_balanced(&p));
        assert!(check_dependencies(&p, Family::Bala));
        let mut q = p.clone();
        q.c1 = q.c1 + 1;
        assert!(!check_dependencies(&q, Family::Bala));
    }

    #[test]
    fn indefinite_prefactor() {
        // beta2 < beta1
        let x = SixJLabels::new(6, [4, 4, 2, 4, 4, 2]);
        let ra = shelepin(&x).unwrap();
        assert!(ra.be(2) < ra.be(1));
        assert!(matches!(kdf_params_for(&x, KdFVariant::V1a), Err(Error::IndefinitePrefactor { .. })));
    }
}
