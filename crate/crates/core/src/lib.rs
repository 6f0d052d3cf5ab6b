//! Exact 6j-symbols of SO(n) for symmetric irreps, with independent
//! evaluators for cross-checking and the Sp(2n) antisymmetric analogue.

pub mod error;
pub mod exact;
pub mod kdf;
pub mod labels;
pub mod oracle;
pub mod sixj;
pub mod spn;

pub use error::{Error, Result};
