//! Exact rational arithmetic and the p-adic primitives every check is phrased in.

mod combinatorics;
mod padic;
mod rational;

pub use combinatorics::{
    binomial, central_half_ratio, central_half_ratios, factorial, harmonic2, harmonic2_table, odd_harmonic2,
    rising_factorial,
};
pub use padic::{congruent_mod_power, ensure_prime, is_prime, padic_valuation, primes_in, Valuation};
pub use rational::Rational;
