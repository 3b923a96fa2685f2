//! Exact evaluation of truncated hypergeometric series and prime-by-prime
//! verification of supercongruences, combinatorial identities and
//! hypergeometric evaluation identities.
//!
//! Everything is computed over the rationals; congruences are decided by
//! exact p-adic valuations.

pub mod error;
pub mod exact;
pub mod harness;
pub mod hypergeometric;
pub mod modular;
pub mod series;

pub use error::{ArithError, HarnessError, HypError, ModularError, SeriesError};
pub use exact::{Rational, Valuation};
pub use series::TruncSeries;
