mod congruence;
mod exact;
mod series;

use std::sync::Arc;

use crate::exact::{is_prime, Rational};

use super::{Case, HIGHER_R_PRIME_CAP};

pub use congruence::PowerSum;

/// Every standard case in canonical order.
pub(super) fn standard_cases() -> Vec<Arc<dyn Case>> {
    let mut out = congruence::cases();
    out.extend(exact::cases());
    out.extend(series::cases());
    out
}

pub(crate) fn above_three(p: u64) -> bool {
    p > 3 && is_prime(p)
}

/// `r = 1` always; higher `r` only for small primes.
pub(crate) fn r_admissible(p: u64, r: i64) -> bool {
    r == 1 || (r >= 2 && p <= HIGHER_R_PRIME_CAP)
}

/// `(p^r - 1) / 2`, or `None` on overflow.
pub(crate) fn half_power(p: u64, r: i64) -> Option<u64> {
    let r = u32::try_from(r).ok()?;
    Some((p.checked_pow(r)? - 1) / 2)
}

/// `(-1)^((p-1)/2)`.
pub(crate) fn sign_half(p: u64) -> Rational {
    Rational::sign_power(((p - 1) / 2) as i64)
}

/// `(-1)^((p^2-1)/8 + (p-1)/2)`.
pub(crate) fn sign_eighth(p: u64) -> Rational {
    let e = (p as u128 * p as u128 - 1) / 8 + (p as u128 - 1) / 2;
    Rational::sign_power((e % 2) as i64)
}

pub(crate) fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}
