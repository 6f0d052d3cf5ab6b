use num_bigint::BigUint;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

const SIEVE_LIMIT: usize = 1 << 20;

static PRIMES: Lazy<Vec<u64>> = Lazy::new(|| {
    let mut composite = vec![false; SIEVE_LIMIT + 1];
    let mut out = Vec::new();
    for i in 2..=SIEVE_LIMIT {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= SIEVE_LIMIT {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
});

pub(crate) fn primes() -> &'static [u64] {
    &PRIMES
}

pub(crate) fn sieve_limit() -> u64 {
    SIEVE_LIMIT as u64
}

/// Adds `sign * v_p(m!)` to `exps` for every prime `p <= m`.
pub(crate) fn add_factorial(exps: &mut Vec<i32>, m: u64, sign: i32) {
    for (idx, &p) in primes().iter().enumerate() {
        if p > m {
            break;
        }
        let mut v = 0u64;
        let mut q = m;
        while q >= p {
            q /= p;
            v += q;
        }
        if exps.len() <= idx {
            exps.resize(idx + 1, 0);
        }
        exps[idx] += sign * v as i32;
    }
}

/// Adds `sign * v_p(m)` for the sieve primes; returns the cofactor left over.
pub(crate) fn add_integer(exps: &mut Vec<i32>, mut m: u64, sign: i32) -> u64 {
    for (idx, &p) in primes().iter().enumerate() {
        if m == 1 {
            break;
        }
        if p * p > m {
            if let Some(j) = index_of(m) {
                bump(exps, j, sign);
                return 1;
            }
            return m;
        }
        while m.is_multiple_of(p) {
            m /= p;
            bump(exps, idx, sign);
        }
    }
    m
}

fn index_of(p: u64) -> Option<usize> {
    primes().binary_search(&p).ok()
}

fn bump(exps: &mut Vec<i32>, idx: usize, sign: i32) {
    if exps.len() <= idx {
        exps.resize(idx + 1, 0);
    }
    exps[idx] += sign;
}

pub(crate) fn pow_product(exps: &[i32], positive: bool) -> BigUint {
    let mut acc = BigUint::one();
    for (idx, &e) in exps.iter().enumerate() {
        let e = if positive { e } else { -e };
        if e > 0 {
            acc *= BigUint::from(primes()[idx]).pow(e as u32);
        }
    }
    acc
}

/// Splits `m` as `s^2 * r` with `r` squarefree.
///
/// Trial division covers the sieve primes; a cofactor beyond them is kept in
/// `r` unless it is a perfect square.
pub fn squarefree_split(m: &BigUint) -> (BigUint, BigUint) {
    if m.is_zero() {
        return (BigUint::zero(), BigUint::one());
    }
    let mut rest = m.clone();
    let mut outside = BigUint::one();
    let mut radicand = BigUint::one();
    for &p in primes() {
        if rest.is_one() {
            break;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        let mut e = 0u32;
        loop {
            let (q, r) = num_integer::Integer::div_rem(&rest, &pb);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            outside *= pb.pow(e / 2);
            if e % 2 == 1 {
                radicand *= &pb;
            }
        }
    }
    if !rest.is_one() {
        let s = rest.sqrt();
        if &s * &s == rest {
            outside *= s;
        } else {
            radicand *= rest;
        }
    }
    (outside, radicand)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_matches_direct_factorial() {
        let mut exps = Vec::new();
        add_factorial(&mut exps, 10, 1);
        assert_eq!(pow_product(&exps, true), BigUint::from(3_628_800u64));
    }

    #[test]
    fn integer_factoring() {
        let mut exps = Vec::new();
        assert_eq!(add_integer(&mut exps, 360, 1), 1);
        assert_eq!(pow_product(&exps, true), BigUint::from(360u32));
        let big = 2_147_483_647u64;
        assert_eq!(add_integer(&mut exps, big, 1), big);
        assert_eq!(add_integer(&mut exps, 1_000_003 * 1_000_033, 1), 1);
    }

    #[test]
    fn squarefree() {
        let (s, r) = squarefree_split(&BigUint::from(72u32));
        assert_eq!((s, r), (BigUint::from(6u32), BigUint::from(2u32)));
        let p = BigUint::from(1_000_003u64);
        let (s, r) = squarefree_split(&(&p * &p * 5u32));
        assert_eq!((s, r), (p, BigUint::from(5u32)));
    }
}
