//! q-expansion of the weight-4 eta product `η(2z)^4 η(4z)^4`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::ModularError;
use crate::exact::is_prime;

/// Default largest index an expansion may be asked for (covers `p^2` for `p <= 97`).
pub const DEFAULT_BUDGET: u64 = 10_000;

/// Largest prime for which `a_{p^2}` is cross-checked against `a_p^2 - p^3`.
pub const HECKE_CHECK_LIMIT: u64 = 31;

/// Coefficients `a_1..=a_N` of `q prod_{n>=1} (1-q^{2n})^4 (1-q^{4n})^4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QExpansion {
    coeffs: Vec<BigInt>,
}

impl QExpansion {
    pub fn bound(&self) -> u64 {
        self.coeffs.len() as u64
    }

    pub fn coefficient_at(&self, n: u64) -> Result<&BigInt, ModularError> {
        if n == 0 || n > self.bound() {
            return Err(ModularError::OutOfRange { index: n, bound: self.bound() });
        }
        Ok(&self.coeffs[n as usize - 1])
    }

    /// `(n, a_n)` pairs in index order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.coeffs.iter().enumerate().map(|(i, a)| (i as u64 + 1, a))
    }
}

fn mul_one_minus_power(poly: &mut [BigInt], m: usize) {
    // every exponent in the product is even, so odd slots stay zero
    let top = (poly.len() - 1) & !1;
    for i in (m..=top).rev().step_by(2) {
        let (lo, hi) = poly.split_at_mut(i);
        if !lo[i - m].is_zero() {
            hi[0] -= &lo[i - m];
        }
    }
}

/// Expands the eta product up to `q^bound` by multiplying in one
/// `(1 - q^m)` factor at a time, truncating at the bound.
pub fn eta_product_expansion(bound: u64) -> Result<QExpansion, ModularError> {
    if bound == 0 {
        return Err(ModularError::EmptyExpansion);
    }
    // P(q) with a_n = [q^{n-1}] P
    let degree = (bound - 1) as usize;
    let mut poly = vec![BigInt::zero(); degree + 1];
    poly[0] = BigInt::one();
    for step in [2usize, 4] {
        for m in (step..=degree).step_by(step) {
            for _ in 0..4 {
                mul_one_minus_power(&mut poly, m);
            }
        }
    }
    Ok(QExpansion { coeffs: poly })
}

/// `a_{p^r}` together with whether the Hecke relation was also checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimePowerCoefficient {
    pub value: BigInt,
    pub hecke_checked: bool,
}

fn checked_prime_power(p: u64, r: u32) -> Option<u64> {
    p.checked_pow(r)
}

/// Reads `a_{p^r}` from an existing expansion. For `r = 2` and
/// `p <= HECKE_CHECK_LIMIT` also requires `a_{p^2} = a_p^2 - p^3`.
pub fn prime_power_coefficient_in(e: &QExpansion, p: u64, r: u32) -> Result<PrimePowerCoefficient, ModularError> {
    if p == 2 || !is_prime(p) || r == 0 {
        return Err(ModularError::NotOddPrime(p));
    }
    let index =
        checked_prime_power(p, r).ok_or(ModularError::BudgetExceeded { requested: u64::MAX, budget: e.bound() })?;
    let value = e.coefficient_at(index)?.clone();
    let mut hecke_checked = false;
    if r == 2 && p <= HECKE_CHECK_LIMIT {
        let ap = e.coefficient_at(p)?;
        let recursion = ap * ap - BigInt::from(p).pow(3);
        if recursion != value {
            return Err(ModularError::HeckeMismatch { p, direct: value.to_string(), recursion: recursion.to_string() });
        }
        hecke_checked = true;
    }
    Ok(PrimePowerCoefficient { value, hecke_checked })
}

/// `a_{p^r}` from a fresh expansion to `p^r`, refusing indices beyond `budget`.
pub fn prime_power_coefficient(p: u64, r: u32, budget: u64) -> Result<PrimePowerCoefficient, ModularError> {
    if p == 2 || !is_prime(p) || r == 0 {
        return Err(ModularError::NotOddPrime(p));
    }
    let index = checked_prime_power(p, r)
        .filter(|&i| i <= budget)
        .ok_or(ModularError::BudgetExceeded { requested: p.saturating_pow(r), budget })?;
    let e = eta_product_expansion(index)?;
    prime_power_coefficient_in(&e, p, r)
}
