use std::sync::Arc;

use num_bigint::BigInt;

use super::{above_three, q, sign_eighth, sign_half};
use crate::error::HarnessError;
use crate::exact::{rising_factorial, Rational};
use crate::harness::{Case, CaseKind, Context, Requirement, SuitePlan, VerificationRecord};
use crate::hypergeometric::identity::IDENTITY_SEED;
use crate::hypergeometric::{eval_hyp_sum, randomized_check, AffineParam, HypSum, IdentityId, Weight};

pub(super) fn cases() -> Vec<Arc<dyn Case>> {
    let mut out: Vec<Arc<dyn Case>> = vec![
        Arc::new(ComIden::Zero),
        Arc::new(ComIden::One),
        Arc::new(ComIden::Two),
        Arc::new(SixKSum::LEMMA10),
        Arc::new(SixKSum::LEMMA12),
    ];
    out.extend(IdentityId::ALL.into_iter().map(|id| Arc::new(IdentityCase(id)) as Arc<dyn Case>));
    out
}

/// Closed-form identities in an integer `n`; the suite runs them at `n = p`.
#[derive(Clone, Copy)]
enum ComIden {
    /// `(2n+1) sum_{k<=n} (-1)^k binom(n,k) binom(n+k,k) / (2k+1) = 1`, `n > 1`
    Zero,
    /// `(3/2-n/4)_m (1-n/2)_m / ((2-n/2)_m (1-n/4)_m) = (-1)^m n`, odd `n`, `m = (n-1)/2`
    One,
    /// `2^m (3/2-n/4)_m / (2-n/2)_m = (-1)^((n^2-1)/8 + m) n`, odd `n`
    Two,
}

impl ComIden {
    fn sides(&self, n: i64) -> (Rational, Rational) {
        let nq = Rational::from(n);
        let m = ((n - 1) / 2) as u64;
        let poch = |a: Rational| rising_factorial(&a, m);
        let quarter = &nq / Rational::from(4);
        let half = &nq / Rational::from(2);
        match self {
            ComIden::Zero => {
                let n = n as u64;
                let mut term = Rational::one();
                let mut sum = Rational::one();
                for k in 1..=n {
                    // (-1)^k binom(n,k) binom(n+k,k), updated from k-1
                    term *= Rational::new(-(BigInt::from(n - k + 1) * (n + k)), BigInt::from(k) * k);
                    sum += &term / Rational::from(2 * k + 1);
                }
                (Rational::from(2 * n + 1) * sum, Rational::one())
            }
            ComIden::One => {
                let num = poch(q(3, 2) - &quarter) * poch(Rational::one() - &half);
                let den = poch(Rational::from(2) - &half) * poch(Rational::one() - &quarter);
                (num / den, Rational::sign_power(m as i64) * nq)
            }
            ComIden::Two => {
                let lhs = poch(q(3, 2) - &quarter) / poch(Rational::from(2) - &half) * Rational::from(2).pow(m as i32);
                (lhs, sign_eighth(n as u64) * nq)
            }
        }
    }
}

impl Case for ComIden {
    fn name(&self) -> &'static str {
        match self {
            ComIden::Zero => "COMIDEN0",
            ComIden::One => "COMIDEN1",
            ComIden::Two => "COMIDEN2",
        }
    }

    fn kind(&self) -> CaseKind {
        CaseKind::Exact
    }

    fn required(&self, _: i64) -> Requirement {
        Requirement::Equal
    }

    /// `p` only labels the record; the identity depends on `n` alone.
    fn applies(&self, _: u64, n: i64) -> bool {
        let bounded = n < i64::from(i32::MAX);
        match self {
            ComIden::Zero => n > 1 && bounded,
            ComIden::One | ComIden::Two => n >= 1 && n % 2 == 1 && bounded,
        }
    }

    fn params(&self, p: u64, _: &SuitePlan) -> Vec<i64> {
        if above_three(p) {
            vec![p as i64]
        } else {
            Vec::new()
        }
    }

    fn check(&self, _: &Context, p: u64, n: i64) -> Result<VerificationRecord, HarnessError> {
        let (lhs, rhs) = self.sides(n);
        Ok(VerificationRecord::exact(self.name(), p, n, lhs, rhs))
    }
}

/// `sum_{k<=(p-1)/2} (6k+1) (1/2)_k (1/2-p/2)_k (1/2+p/2)_k / (k! (1+p/4)_k (1-p/4)_k) z^k = ±p`.
struct SixKSum {
    name: &'static str,
    z: (i64, i64),
    eighth_sign: bool,
}

impl SixKSum {
    const LEMMA10: SixKSum = SixKSum { name: "LEMMA10", z: (1, 4), eighth_sign: false };
    const LEMMA12: SixKSum = SixKSum { name: "LEMMA12", z: (-1, 8), eighth_sign: true };

    fn spec(&self, p: u64) -> HypSum {
        let pq = Rational::from(p);
        let c = |base: Rational, num: i64, den: i64| AffineParam::constant(base + &pq * q(num, den));
        HypSum::new(q(self.z.0, self.z.1), (p - 1) / 2)
            .upper_all([c(q(1, 2), 0, 1), c(q(1, 2), -1, 2), c(q(1, 2), 1, 2)])
            .lower_all([c(Rational::one(), 1, 4), c(Rational::one(), -1, 4)])
            .weight(Weight::new(6, 1))
    }
}

impl Case for SixKSum {
    fn name(&self) -> &'static str {
        self.name
    }

    fn kind(&self) -> CaseKind {
        CaseKind::Exact
    }

    fn required(&self, _: i64) -> Requirement {
        Requirement::Equal
    }

    fn applies(&self, p: u64, param: i64) -> bool {
        above_three(p) && param == 0
    }

    fn check(&self, _: &Context, p: u64, param: i64) -> Result<VerificationRecord, HarnessError> {
        let lhs = eval_hyp_sum(&self.spec(p))?;
        let sign = if self.eighth_sign { sign_eighth(p) } else { sign_half(p) };
        Ok(VerificationRecord::exact(self.name, p, param, lhs, sign * Rational::from(p)))
    }
}

/// Fixed-seed randomized check of one evaluation identity; `param` is the draw count.
struct IdentityCase(IdentityId);

impl Case for IdentityCase {
    fn name(&self) -> &'static str {
        self.0.name()
    }

    fn kind(&self) -> CaseKind {
        CaseKind::Exact
    }

    fn prime_free(&self) -> bool {
        true
    }

    fn required(&self, _: i64) -> Requirement {
        Requirement::Equal
    }

    fn applies(&self, p: u64, draws: i64) -> bool {
        p == 0 && draws > 0
    }

    fn params(&self, _: u64, plan: &SuitePlan) -> Vec<i64> {
        vec![plan.draws as i64]
    }

    /// Reports the first mismatching draw, else the last accepted one.
    fn check(&self, _: &Context, p: u64, draws: i64) -> Result<VerificationRecord, HarnessError> {
        let out = randomized_check(self.0, IDENTITY_SEED, draws as usize)?;
        let name = self.name();
        if let Some(m) = out.mismatches.first() {
            return Ok(VerificationRecord::exact(name, p, draws, m.lhs.clone(), m.rhs.clone()));
        }
        let Some((lhs, rhs)) = out.last.clone() else {
            return Ok(VerificationRecord::exact(name, p, draws, Rational::zero(), Rational::zero())
                .violate("no pole-free draw found"));
        };
        let rec = VerificationRecord::exact(name, p, draws, lhs, rhs);
        if out.accepted < draws as usize {
            return Ok(rec.violate(format!("only {} of {draws} draws were pole-free", out.accepted)));
        }
        Ok(rec)
    }
}
