use thiserror::Error;

use crate::exact::HalfInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gamma function has a pole at {0}")]
    GammaPole(HalfInt),

    #[error("unpaired gamma pole (net order {0})")]
    UnpairedPole(i32),

    #[error("residual power of sqrt(pi): {0}")]
    ResidualSqrtPi(i32),

    #[error("negative radicand")]
    NegativeRadicand,

    #[error("value mixes {0} distinct square roots")]
    MixedSurds(usize),

    #[error("triad parity violated for {0}")]
    Parity(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("indefinite prefactor in variant {variant}: {detail}")]
    IndefinitePrefactor { variant: String, detail: String },

    #[error("series does not terminate")]
    NonTerminating,

    #[error("series denominator vanishes at term ({s}, {t})")]
    SeriesPole { s: u64, t: u64 },

    #[error("cannot parse {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
