use std::ops::RangeInclusive;
use std::sync::Arc;

use rayon::prelude::*;

use super::{Case, Context, VerificationRecord};
use crate::exact::primes_in;
use crate::hypergeometric::identity::IDENTITY_DRAWS;

/// Parameters shared by every case in a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuitePlan {
    /// Exponents `r` for r-parameterized cases.
    pub rs: Vec<u32>,
    /// Random draws per evaluation identity.
    pub draws: usize,
}

impl Default for SuitePlan {
    fn default() -> Self {
        SuitePlan { rs: vec![1], draws: IDENTITY_DRAWS }
    }
}

impl SuitePlan {
    /// `r = 1..=max_r`.
    pub fn up_to_r(max_r: u32) -> Self {
        SuitePlan { rs: (1..=max_r).collect(), ..Self::default() }
    }
}

/// Runs one check, turning errors into failed records.
pub fn run_case(case: &dyn Case, ctx: &Context, p: u64, param: i64) -> VerificationRecord {
    case.check(ctx, p, param)
        .unwrap_or_else(|e| VerificationRecord::failed(case.name(), p, param, case.required(param), e))
        .conjectural(case.conjectural())
}

/// Runs every applicable `(case, p, param)` for primes in `primes`, in
/// registry order, then by `p`, then by parameter. Prime-free cases run once
/// with `p = 0` when the range holds at least one prime.
pub fn run_suite(
    cases: &[Arc<dyn Case>],
    primes: RangeInclusive<u64>,
    plan: &SuitePlan,
    ctx: &Context,
) -> Vec<VerificationRecord> {
    let primes = primes_in(*primes.start(), *primes.end());
    if primes.is_empty() {
        return Vec::new();
    }
    let mut jobs: Vec<(&dyn Case, u64, i64)> = Vec::new();
    for case in cases {
        let ps: &[u64] = if case.prime_free() { &[0] } else { &primes };
        for &p in ps {
            for param in case.params(p, plan) {
                if case.applies(p, param) {
                    jobs.push((case.as_ref(), p, param));
                }
            }
        }
    }
    // grow the shared expansion once, up front
    let top =
        jobs.iter().filter_map(|(c, p, param)| c.coefficient_index(*p, *param)).filter(|&n| n <= ctx.budget()).max();
    if let Some(n) = top {
        let _ = ctx.expansion_to(n);
    }
    jobs.par_iter().map(|&(case, p, param)| run_case(case, ctx, p, param)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::CaseRegistry;

    #[test]
    fn empty_range_is_empty() {
        let reg = CaseRegistry::standard();
        assert!(run_suite(reg.cases(), 24..=28, &SuitePlan::default(), &Context::default()).is_empty());
        assert!(run_suite(reg.cases(), 0..=1, &SuitePlan::default(), &Context::default()).is_empty());
    }

    #[test]
    fn three_runs_only_kilbourn() {
        let reg = CaseRegistry::standard();
        let cases = reg.select(&["EQ0", "KILBOURN", "THM1"]).unwrap();
        let recs = run_suite(&cases, 3..=3, &SuitePlan::default(), &Context::default());
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].case, "KILBOURN");
        assert!(recs[0].pass);
    }

    #[test]
    fn canonical_order_and_flags() {
        let reg = CaseRegistry::standard();
        let cases = reg.select(&["THM4_STRONG", "EQ0", "WHIPPLE_4F3"]).unwrap();
        let plan = SuitePlan { draws: 3, ..SuitePlan::default() };
        let recs = run_suite(&cases, 5..=11, &plan, &Context::default());
        let keys: Vec<_> = recs.iter().map(|r| (r.case.as_str(), r.p)).collect();
        assert_eq!(
            keys,
            [
                ("EQ0", 5),
                ("EQ0", 7),
                ("EQ0", 11),
                ("THM4_STRONG", 5),
                ("THM4_STRONG", 7),
                ("THM4_STRONG", 11),
                ("WHIPPLE_4F3", 0)
            ]
        );
        assert!(recs.iter().all(|r| r.pass));
        assert!(recs.iter().all(|r| r.conjectural == (r.case == "THM4_STRONG")));
    }
}
