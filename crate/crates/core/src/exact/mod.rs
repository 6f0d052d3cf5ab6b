//! Exact arithmetic: rationals, half-integers, gamma values and surds.

mod gamma;
mod halfint;
mod primes;
mod surd;

pub use gamma::{gamma_exact, gamma_ratio_product, pochhammer, pochhammer_half, GammaExact, GammaProduct};
pub use halfint::HalfInt;
pub use primes::squarefree_split;
pub use surd::{SurdSum, SurdValue};

pub type Rational = num_rational::BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
