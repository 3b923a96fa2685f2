use std::sync::Arc;

use num_bigint::BigInt;

use super::{above_three, half_power, q, r_admissible, sign_eighth, sign_half};
use crate::error::{ArithError, HarnessError};
use crate::exact::{binomial, central_half_ratio, central_half_ratios, harmonic2_table, odd_harmonic2, Rational};
use crate::harness::{Case, CaseKind, Context, Requirement, SuitePlan, VerificationRecord};
use crate::hypergeometric::{eval_hyp_sum, eval_hyp_sum_series, AffineParam, HypSum, Weight};

pub(super) fn cases() -> Vec<Arc<dyn Case>> {
    vec![
        Arc::new(PowerSum::EQ0),
        Arc::new(PowerSum::THM1),
        Arc::new(PowerSum::THM2),
        Arc::new(PowerSum::KILBOURN),
        Arc::new(PowerSum::CONJ1),
        Arc::new(PowerSum::THM3),
        Arc::new(PowerSum::THM4),
        Arc::new(PowerSum::THM4_STRONG),
        Arc::new(ComConj2),
        Arc::new(Cai),
        Arc::new(Binom::Neg),
        Arc::new(Binom::Pos),
        Arc::new(Binom::Prod),
        Arc::new(HalfHarmonic { odd: false }),
        Arc::new(HalfHarmonic { odd: true }),
        Arc::new(H2Reflect),
        Arc::new(ThmKey),
    ]
}

/// Right-hand side of a [`PowerSum`] congruence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rhs {
    /// `(-1)^((p-1)/2) p`
    SignedHalf,
    /// `(-1)^((p^2-1)/8 + (p-1)/2) p`
    SignedEighth,
    /// `p^r`
    PrimePower,
    /// `a_p`
    Coefficient,
    /// `p^r a_{p^r}`
    ScaledCoefficient,
}

/// `sum_{k=0}^{(p^r-1)/2} (w1 k + w0) h_k^m z^k ≡ rhs`, with
/// `h_k = (1/2)_k / k!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSum {
    pub name: &'static str,
    pub power: usize,
    pub weight: (i64, i64),
    pub z: (i64, i64),
    pub rhs: Rhs,
    /// Required valuation at `r = 1`; r-parameterized cases add `r - 1`.
    pub required: i64,
    pub r_param: bool,
    pub conjectural: bool,
    /// Admits `p = 3`.
    pub allows_three: bool,
}

impl PowerSum {
    pub const EQ0: PowerSum = PowerSum::fixed("EQ0", 3, (4, 1), (-1, 1), Rhs::SignedHalf, 3);
    pub const THM1: PowerSum =
        PowerSum { r_param: true, ..PowerSum::fixed("THM1", 4, (4, 1), (1, 1), Rhs::PrimePower, 4) };
    pub const THM2: PowerSum = PowerSum::fixed("THM2", 6, (4, 1), (1, 1), Rhs::ScaledCoefficient, 4);
    pub const KILBOURN: PowerSum =
        PowerSum { allows_three: true, ..PowerSum::fixed("KILBOURN", 4, (0, 1), (1, 1), Rhs::Coefficient, 3) };
    pub const CONJ1: PowerSum = PowerSum {
        r_param: true,
        conjectural: true,
        ..PowerSum::fixed("CONJ1", 6, (4, 1), (1, 1), Rhs::ScaledCoefficient, 4)
    };
    pub const THM3: PowerSum = PowerSum::fixed("THM3", 3, (6, 1), (1, 4), Rhs::SignedHalf, 4);
    pub const THM4: PowerSum = PowerSum::fixed("THM4", 3, (6, 1), (-1, 8), Rhs::SignedEighth, 2);
    pub const THM4_STRONG: PowerSum =
        PowerSum { conjectural: true, ..PowerSum::fixed("THM4_STRONG", 3, (6, 1), (-1, 8), Rhs::SignedEighth, 3) };

    const fn fixed(
        name: &'static str,
        power: usize,
        weight: (i64, i64),
        z: (i64, i64),
        rhs: Rhs,
        required: i64,
    ) -> Self {
        PowerSum { name, power, weight, z, rhs, required, r_param: false, conjectural: false, allows_three: false }
    }

    /// The sum as hypergeometric data: `m` upper `1/2`s over `m - 1` lower `1`s.
    pub fn spec(&self, p: u64, r: i64) -> Option<HypSum> {
        let k = half_power(p, r)?;
        let half = AffineParam::constant(q(1, 2));
        let one = AffineParam::constant(Rational::one());
        Some(
            HypSum::new(q(self.z.0, self.z.1), k)
                .upper_all(std::iter::repeat_n(half, self.power))
                .lower_all(std::iter::repeat_n(one, self.power - 1))
                .weight(Weight::new(self.weight.0, self.weight.1)),
        )
    }

    fn r_of(&self, param: i64) -> i64 {
        if self.r_param {
            param
        } else {
            1
        }
    }

    fn rhs_value(&self, ctx: &Context, p: u64, r: i64) -> Result<Rational, HarnessError> {
        let pr = || Rational::from(BigInt::from(p).pow(r as u32));
        Ok(match self.rhs {
            Rhs::SignedHalf => sign_half(p) * Rational::from(p),
            Rhs::SignedEighth => sign_eighth(p) * Rational::from(p),
            Rhs::PrimePower => pr(),
            Rhs::Coefficient => Rational::from(ctx.coefficient(p)?),
            Rhs::ScaledCoefficient => pr() * Rational::from(ctx.prime_power_coefficient(p, r as u32)?.value),
        })
    }
}

impl Case for PowerSum {
    fn name(&self) -> &'static str {
        self.name
    }

    fn kind(&self) -> CaseKind {
        CaseKind::Congruence
    }

    fn conjectural(&self) -> bool {
        self.conjectural
    }

    fn required(&self, param: i64) -> Requirement {
        Requirement::AtLeast(self.required + self.r_of(param) - 1)
    }

    fn applies(&self, p: u64, param: i64) -> bool {
        let prime_ok = above_three(p) || (self.allows_three && p == 3);
        let param_ok = if self.r_param { r_admissible(p, param) } else { param == 0 };
        prime_ok && param_ok
    }

    fn params(&self, _p: u64, plan: &SuitePlan) -> Vec<i64> {
        if self.r_param {
            plan.rs.iter().map(|&r| r as i64).collect()
        } else {
            vec![0]
        }
    }

    fn coefficient_index(&self, p: u64, param: i64) -> Option<u64> {
        match self.rhs {
            Rhs::Coefficient | Rhs::ScaledCoefficient => p.checked_pow(u32::try_from(self.r_of(param)).ok()?),
            _ => None,
        }
    }

    fn check(&self, ctx: &Context, p: u64, param: i64) -> Result<VerificationRecord, HarnessError> {
        let r = self.r_of(param);
        let spec = self.spec(p, r).ok_or(HarnessError::NotApplicable { case: self.name.into(), p, param })?;
        let rhs = self.rhs_value(ctx, p, r)?;
        let lhs = eval_hyp_sum(&spec)?;
        Ok(VerificationRecord::congruence(self.name, p, param, self.required(param), lhs, rhs)?)
    }
}

/// Record for the `(lhs, rhs)` pair of least `v_p(lhs - rhs)`.
fn worst_pair(
    case: &str,
    p: u64,
    param: i64,
    required: Requirement,
    pairs: impl IntoIterator<Item = (Rational, Rational)>,
) -> Result<VerificationRecord, ArithError> {
    let mut worst: Option<VerificationRecord> = None;
    for (lhs, rhs) in pairs {
        let rec = VerificationRecord::congruence(case, p, param, required, lhs, rhs)?;
        if worst.as_ref().is_none_or(|w| rec.valuation() < w.valuation()) {
            worst = Some(rec);
        }
    }
    Ok(worst.unwrap_or_else(|| {
        VerificationRecord::congruence(case, p, param, required, Rational::zero(), Rational::zero())
            .expect("zero difference")
    }))
}

fn only_param_zero(p: u64, param: i64) -> bool {
    above_three(p) && param == 0
}

/// `sum (6k+1) h_k^3 (O_k - H_k/16) (-1/8)^k ≡ 0`, where `O_k` and `H_k` are
/// the odd and full second-order harmonic sums.
struct ComConj2;

impl ComConj2 {
    fn deformed(p: u64) -> HypSum {
        HypSum::new(q(-1, 8), (p - 1) / 2)
            .upper_all([
                AffineParam::constant(q(1, 2)),
                AffineParam::new(q(1, 2), q(-1, 2)),
                AffineParam::new(q(1, 2), q(1, 2)),
            ])
            .lower_all([AffineParam::new(q(1, 1), q(1, 4)), AffineParam::new(q(1, 1), q(-1, 4))])
            .weight(Weight::new(6, 1))
    }
}

impl Case for ComConj2 {
    fn name(&self) -> &'static str {
        "COMCONJ2"
    }

    fn kind(&self) -> CaseKind {
        CaseKind::Congruence
    }

    fn conjectural(&self) -> bool {
        true
    }

    fn required(&self, _: i64) -> Requirement {
        Requirement::AtLeast(1)
    }

    fn applies(&self, p: u64, param: i64) -> bool {
        only_param_zero(p, param)
    }

    fn check(&self, _: &Context, p: u64, param: i64) -> Result<VerificationRecord, HarnessError> {
        let n = (p - 1) / 2;
        let hs = central_half_ratios(n);
        let h2 = harmonic2_table(n);
        let z = q(-1, 8);
        let mut zk = Rational::one();
        let mut odd = Rational::zero();
        let mut lhs = Rational::zero();
        for k in 0..=n {
            if k > 0 {
                odd += odd_term(k);
                zk *= &z;
            }
            let correction = &odd - &h2[k as usize] / Rational::from(16);
            lhs += Rational::from(6 * k + 1) * hs[k as usize].pow(3) * correction * &zk;
        }
        let rec =
            VerificationRecord::congruence(self.name(), p, param, self.required(param), lhs.clone(), Rational::zero())?;
        // the same sum is minus the x^2 coefficient of the deformed (6k+1) sum at -1/8
        let series = eval_hyp_sum_series(&Self::deformed(p), 2)?;
        if series.coefficient(2)? != &-lhs {
            return Ok(rec.violate("disagrees with the deformed series"));
        }
        Ok(rec)
    }
}

fn odd_term(k: u64) -> Rational {
    let o = BigInt::from(2 * k - 1);
    Rational::new(1, &o * &o)
}

/// `(-1)^n binom(p^r - 1, n) ≡ h_n^2 (mod p^3)`, `n = (p^r-1)/2`.
struct Cai;

impl Case for Cai {
    fn name(&self) -> &'static str {
        "CAI"
    }

    fn kind(&self) -> CaseKind {
        CaseKind::Congruence
    }

    fn required(&self, _: i64) -> Requirement {
        Requirement::AtLeast(3)
    }

    fn applies(&self, p: u64, r: i64) -> bool {
        above_three(p) && r_admissible(p, r)
    }

    fn params(&self, _: u64, plan: &SuitePlan) -> Vec<i64> {
        plan.rs.iter().map(|&r| r as i64).collect()
    }

    fn check(&self, _: &Context, p: u64, r: i64) -> Result<VerificationRecord, HarnessError> {
        let n = half_power(p, r).ok_or(HarnessError::NotApplicable { case: self.name().into(), p, param: r })?;
        let lhs = Rational::sign_power(n as i64) * Rational::from(binomial(2 * n, n));
        let rhs = central_half_ratio(n).pow(2);
        Ok(VerificationRecord::congruence(self.name(), p, r, self.required(r), lhs, rhs)?)
    }
}

/// Per-k binomial approximations of `h_k` with `n = (p^r-1)/2`, `1 <= k <= n`.
#[derive(Clone, Copy)]
enum Binom {
    /// `(-1)^k binom(n, k) ≡ h_k (mod p)`
    Neg,
    /// `binom(n+k, k) ≡ h_k (mod p)`
    Pos,
    /// `(-1)^k binom(n, k) binom(n+k, k) ≡ h_k^2 (mod p^2)`
    Prod,
}

impl Case for Binom {
    fn name(&self) -> &'static str {
        match self {
            Binom::Neg => "BINOM_NEG",
            Binom::Pos => "BINOM_POS",
            Binom::Prod => "BINOM_PROD",
        }
    }

    fn kind(&self) -> CaseKind {
        CaseKind::Congruence
    }

    fn required(&self, _: i64) -> Requirement {
        Requirement::AtLeast(if matches!(self, Binom::Prod) { 2 } else { 1 })
    }

    fn applies(&self, p: u64, r: i64) -> bool {
        above_three(p) && r_admissible(p, r)
    }

    fn params(&self, _: u64, plan: &SuitePlan) -> Vec<i64> {
        plan.rs.iter().map(|&r| r as i64).collect()
    }

    fn check(&self, _: &Context, p: u64, r: i64) -> Result<VerificationRecord, HarnessError> {
        let n = half_power(p, r).ok_or(HarnessError::NotApplicable { case: self.name().into(), p, param: r })?;
        let mut pairs = Vec::with_capacity(n as usize);
        let (mut neg, mut pos, mut h) = (Rational::one(), Rational::one(), Rational::one());
        for k in 1..=n {
            // running (-1)^k binom(n, k), binom(n+k, k) and h_k
            neg *= Rational::new(-BigInt::from(n - k + 1), BigInt::from(k));
            pos *= Rational::new(n + k, k);
            h *= Rational::new(2 * k - 1, 2 * k);
            pairs.push(match self {
                Binom::Neg => (neg.clone(), h.clone()),
                Binom::Pos => (pos.clone(), h.clone()),
                Binom::Prod => (&neg * &pos, h.pow(2)),
            });
        }
        Ok(worst_pair(self.name(), p, r, self.required(r), pairs)?)
    }
}

/// `H^(2)_((p-1)/2) ≡ 0`, or with odd reciprocals `sum_{j<=(p-1)/2} 1/(2j-1)^2 ≡ 0`.
struct HalfHarmonic {
    odd: bool,
}

impl Case for HalfHarmonic {
    fn name(&self) -> &'static str {
        if self.odd {
            "ODDH2_HALF"
        } else {
            "H2_HALF"
        }
    }

    fn kind(&self) -> CaseKind {
        CaseKind::Congruence
    }

    fn required(&self, _: i64) -> Requirement {
        Requirement::AtLeast(1)
    }

    fn applies(&self, p: u64, param: i64) -> bool {
        only_param_zero(p, param)
    }

    fn check(&self, _: &Context, p: u64, param: i64) -> Result<VerificationRecord, HarnessError> {
        let n = (p - 1) / 2;
        let lhs = if self.odd { odd_harmonic2(n) } else { harmonic2_table(n).pop().expect("table has n+1 entries") };
        Ok(VerificationRecord::congruence(self.name(), p, param, self.required(param), lhs, Rational::zero())?)
    }
}

/// `H^(2)_k + H^(2)_(p-1-k) ≡ 0` for `1 <= k <= p-2`.
struct H2Reflect;

impl Case for H2Reflect {
    fn name(&self) -> &'static str {
        "H2_REFLECT"
    }

    fn kind(&self) -> CaseKind {
        CaseKind::Congruence
    }

    fn required(&self, _: i64) -> Requirement {
        Requirement::AtLeast(1)
    }

    fn applies(&self, p: u64, param: i64) -> bool {
        only_param_zero(p, param)
    }

    fn check(&self, _: &Context, p: u64, param: i64) -> Result<VerificationRecord, HarnessError> {
        let t = harmonic2_table(p - 1);
        let m = (p - 1) as usize;
        let pairs = (1..m).map(|k| (&t[k] + &t[m - k], Rational::zero()));
        Ok(worst_pair(self.name(), p, param, self.required(param), pairs)?)
    }
}

/// `sum_{k<=(p-1)/2} h_k^(2s) H^(2)_(2k) ≡ 0` for `s >= 1`.
struct ThmKey;

/// Exponents `s` the suite runs.
const THMKEY_EXPONENTS: [i64; 3] = [1, 2, 3];

impl Case for ThmKey {
    fn name(&self) -> &'static str {
        "THMKEY"
    }

    fn kind(&self) -> CaseKind {
        CaseKind::Congruence
    }

    fn required(&self, _: i64) -> Requirement {
        Requirement::AtLeast(1)
    }

    fn applies(&self, p: u64, s: i64) -> bool {
        above_three(p) && (1..=i32::MAX as i64).contains(&s)
    }

    fn params(&self, _: u64, _: &SuitePlan) -> Vec<i64> {
        THMKEY_EXPONENTS.to_vec()
    }

    fn check(&self, _: &Context, p: u64, s: i64) -> Result<VerificationRecord, HarnessError> {
        let n = (p - 1) / 2;
        let hs = central_half_ratios(n);
        let h2 = harmonic2_table(2 * n);
        let lhs: Rational = (0..=n as usize).map(|k| hs[k].pow(2 * s as i32) * &h2[2 * k]).sum();
        Ok(VerificationRecord::congruence(self.name(), p, s, self.required(s), lhs, Rational::zero())?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Valuation;
    use crate::harness::Achieved;

    fn run(case: &dyn Case, p: u64, param: i64) -> VerificationRecord {
        assert!(case.applies(p, param), "{} at {p}, {param}", case.name());
        case.check(&Context::default(), p, param).unwrap()
    }

    fn achieved(rec: &VerificationRecord) -> i64 {
        rec.valuation().and_then(|v| v.finite()).expect("finite valuation")
    }

    #[test]
    fn power_sums_at_five() {
        let table: [(&PowerSum, i64, Rational, Rational, i64); 6] = [
            (&PowerSum::EQ0, 0, q(435, 512), q(5, 1), 3),
            (&PowerSum::THM1, 1, q(6105, 4096), q(5, 1), 4),
            (&PowerSum::THM2, 0, q(289185, 262144), q(-10, 1), 4),
            (&PowerSum::THM3, 0, q(10335, 8192), q(5, 1), 4),
            (&PowerSum::THM4, 0, q(29535, 32768), q(-5, 1), 3),
            (&PowerSum::KILBOURN, 0, q(4433, 4096), q(-2, 1), 3),
        ];
        for (case, param, lhs, rhs, v) in table {
            let rec = run(case, 5, param);
            assert_eq!((&rec.lhs, &rec.rhs), (&lhs, &rhs), "{}", case.name);
            assert_eq!(achieved(&rec), v, "{}", case.name);
            assert!(rec.pass);
        }
    }

    #[test]
    fn kilbourn_admits_three_others_do_not() {
        let rec = run(&PowerSum::KILBOURN, 3, 0);
        assert_eq!(rec.lhs, q(17, 16));
        assert_eq!(rec.rhs, q(-4, 1));
        assert_eq!(achieved(&rec), 4);
        assert!(!PowerSum::EQ0.applies(3, 0));
        assert!(!PowerSum::THM1.applies(3, 1));
        assert!(!PowerSum::EQ0.applies(9, 0));
    }

    #[test]
    fn higher_r_gating() {
        assert!(PowerSum::THM1.applies(31, 2));
        assert!(!PowerSum::THM1.applies(37, 2));
        assert!(!PowerSum::THM1.applies(5, 0));
        assert!(!PowerSum::EQ0.applies(5, 1));
        assert_eq!(PowerSum::THM1.required(2), Requirement::AtLeast(5));
        assert_eq!(PowerSum::CONJ1.required(1), Requirement::AtLeast(4));
    }

    #[test]
    fn conj1_at_r1_matches_thm2() {
        for p in [5u64, 7, 11] {
            let a = run(&PowerSum::CONJ1, p, 1);
            let b = run(&PowerSum::THM2, p, 0);
            assert_eq!((a.lhs, a.rhs, a.achieved), (b.lhs, b.rhs, b.achieved));
        }
    }

    #[test]
    fn conj1_budget_error() {
        let ctx = Context::new(100);
        let err = PowerSum::CONJ1.check(&ctx, 11, 2).unwrap_err();
        assert!(matches!(err, HarnessError::Modular(crate::error::ModularError::BudgetExceeded { .. })));
    }

    #[test]
    fn cai_and_thmkey_examples() {
        let rec = run(&Cai, 5, 1);
        assert_eq!(rec.lhs, q(6, 1));
        assert_eq!(rec.rhs, q(9, 64));
        assert_eq!(achieved(&rec), 3);
        let rec = run(&ThmKey, 5, 1);
        assert_eq!(rec.lhs, q(4725, 9216));
        assert_eq!(achieved(&rec), 2);
    }

    #[test]
    fn small_prime_statements() {
        for p in [5u64, 7, 11, 13] {
            for case in cases() {
                for param in [0, 1] {
                    if case.applies(p, param) && case.name() != "CONJ1" {
                        let rec = case.check(&Context::default(), p, param).unwrap();
                        assert!(rec.pass, "{} p={p} param={param}: {}", case.name(), rec.achieved);
                    }
                }
            }
        }
    }

    #[test]
    fn comconj2_is_conjectural_and_cross_checked() {
        let rec = run(&ComConj2, 7, 0);
        assert!(ComConj2.conjectural());
        assert!(matches!(rec.achieved, Achieved::Valuation(_)));
        assert!(rec.pass);
    }

    #[test]
    fn binom_worst_case_is_reported() {
        let rec = run(&Binom::Prod, 5, 1);
        assert!(rec.valuation().unwrap() >= Valuation::Finite(2));
    }
}
