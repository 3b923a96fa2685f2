//! Registry of runnable checks.
//!
//! Every supercongruence, exact identity and series-divisibility statement is
//! a [`Case`]: a named strategy that knows which primes and parameters it
//! applies to and how to build both sides exactly. Cases are registered by
//! name in a [`CaseRegistry`] and selected at runtime; [`run_suite`] drives a
//! selection over a prime range.
//!
//! | case | statement | requirement |
//! |------|-----------|-------------|
//! | `EQ0` | `sum (4k+1) h_k^3 (-1)^k ≡ (-1)^((p-1)/2) p` | `v >= 3` |
//! | `THM1(r)` | `sum_{k<=(p^r-1)/2} (4k+1) h_k^4 ≡ p^r` | `v >= 3+r` |
//! | `THM2` | `sum (4k+1) h_k^6 ≡ p a_p` | `v >= 4` |
//! | `KILBOURN` | `sum h_k^4 ≡ a_p` | `v >= 3` |
//! | `CONJ1(r)` | `sum_{k<=(p^r-1)/2} (4k+1) h_k^6 ≡ p^r a_{p^r}` (conjectural) | `v >= 3+r` |
//! | `THM3` | `sum (6k+1) h_k^3 4^-k ≡ (-1)^((p-1)/2) p` | `v >= 4` |
//! | `THM4` | `sum (6k+1) h_k^3 (-8)^-k ≡ (-1)^((p^2-1)/8+(p-1)/2) p` | `v >= 2` |
//! | `THM4_STRONG` | same, modulo `p^3` (conjectural) | `v >= 3` |
//! | `COMCONJ2` | the odd/even harmonic correction sum `≡ 0` (conjectural) | `v >= 1` |
//! | `CAI(r)` | `(-1)^n binom(2n, n) ≡ h_n^2`, `n = (p^r-1)/2` | `v >= 3` |
//! | `BINOM_NEG(r)` | `(-1)^k binom(n, k) ≡ h_k` for `1 <= k <= n` | `v >= 1` |
//! | `BINOM_POS(r)` | `binom(n+k, k) ≡ h_k` | `v >= 1` |
//! | `BINOM_PROD(r)` | `(-1)^k binom(n, k) binom(n+k, k) ≡ h_k^2` | `v >= 2` |
//! | `H2_HALF`, `ODDH2_HALF` | `H^(2)_((p-1)/2) ≡ 0`, odd-reciprocal analogue | `v >= 1` |
//! | `H2_REFLECT` | `H^(2)_k + H^(2)_(p-1-k) ≡ 0` for `1 <= k <= p-2` | `v >= 1` |
//! | `THMKEY(s)` | `sum h_k^(2s) H^(2)_(2k) ≡ 0` | `v >= 1` |
//! | `COMIDEN0(n)`, `COMIDEN1(n)`, `COMIDEN2(n)` | closed-form Pochhammer/binomial identities | exact |
//! | `LEMMA10`, `LEMMA12` | terminating `(6k+1)` sums at `1/4` and `-1/8` equal `±p` | exact |
//! | identity names | fixed-seed randomized checks of the six evaluation identities | exact |
//! | `EQ10_A2` | `x^2` coefficient of the deformed `(4k+1)` sum at `-1` | `v >= 1` |
//! | `SIX_F_FIVE_COEFFS` | every coefficient of the deformed 6F5 | `v >= 1` |
//! | `LEM_THM1_B2K` | `x^2` coefficient of the deformed inner sum of `THM2` | `v >= 1` |
//! | `THM3_QUOTIENT_X2` | `x^2` coefficient of the normalized deformed `(6k+1)` sum | `v >= 1` |
//! | `EXACT_DIV_P` | `(3/4)_n (5/4)_n / n!^2`, `n = (p-1)/2` | `v == 1` |
//!
//! Here `h_k = (1/2)_k / k!` and sums run over `0 <= k <= (p-1)/2` unless noted.

mod cases;
mod context;
mod record;
mod registry;
mod suite;

use std::fmt;

pub use cases::PowerSum;
pub use context::Context;
pub use record::{Achieved, Requirement, VerificationRecord};
pub use registry::CaseRegistry;
pub use suite::{run_case, run_suite, SuitePlan};

use crate::error::HarnessError;

/// Primes above this bound skip the `r >= 2` variants of r-parameterized cases.
pub const HIGHER_R_PRIME_CAP: u64 = 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseKind {
    Congruence,
    Exact,
    Series,
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseKind::Congruence => "congruence",
            CaseKind::Exact => "exact",
            CaseKind::Series => "series",
        })
    }
}

/// One checkable statement.
pub trait Case: Send + Sync {
    fn name(&self) -> &'static str;

    fn kind(&self) -> CaseKind;

    /// Conjectural cases never affect the overall verdict.
    fn conjectural(&self) -> bool {
        false
    }

    /// Cases that do not depend on a prime run once per suite with `p = 0`.
    fn prime_free(&self) -> bool {
        false
    }

    fn required(&self, param: i64) -> Requirement;

    /// Whether the case's hypotheses admit `p` and `param`.
    fn applies(&self, p: u64, param: i64) -> bool;

    /// Candidate parameter values at `p`; the suite keeps those that apply.
    fn params(&self, _p: u64, _plan: &SuitePlan) -> Vec<i64> {
        vec![0]
    }

    /// Largest eta-product index the check reads, if any.
    fn coefficient_index(&self, _p: u64, _param: i64) -> Option<u64> {
        None
    }

    /// Computes both sides and the resulting record.
    fn check(&self, ctx: &Context, p: u64, param: i64) -> Result<VerificationRecord, HarnessError>;
}

fn verify_kind(
    registry: &CaseRegistry,
    kind: CaseKind,
    name: &str,
    p: u64,
    param: i64,
) -> Result<VerificationRecord, HarnessError> {
    let case = registry.get(name)?;
    if case.kind() != kind {
        return Err(HarnessError::WrongKind { case: case.name().to_string(), actual: case.kind().to_string() });
    }
    if !case.applies(p, param) {
        return Err(HarnessError::NotApplicable { case: case.name().to_string(), p, param });
    }
    Ok(run_case(case.as_ref(), &Context::default(), p, param))
}

/// Runs one congruence case with the default context.
pub fn verify_congruence_case(name: &str, p: u64, param: i64) -> Result<VerificationRecord, HarnessError> {
    verify_kind(&CaseRegistry::standard(), CaseKind::Congruence, name, p, param)
}

/// Runs one exact case; `param` is `n` for the `COMIDEN*` cases and the
/// draw count for identity cases.
pub fn verify_exact_case(name: &str, p: u64, param: i64) -> Result<VerificationRecord, HarnessError> {
    verify_kind(&CaseRegistry::standard(), CaseKind::Exact, name, p, param)
}

pub fn verify_series_case(name: &str, p: u64) -> Result<VerificationRecord, HarnessError> {
    verify_kind(&CaseRegistry::standard(), CaseKind::Series, name, p, 0)
}
