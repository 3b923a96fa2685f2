use std::sync::Arc;

use super::{above_three, q};
use crate::error::HarnessError;
use crate::exact::{
    central_half_ratios, factorial, harmonic2_table, padic_valuation, rising_factorial, Rational, Valuation,
};
use crate::harness::{Achieved, Case, CaseKind, Context, Requirement, VerificationRecord};
use crate::hypergeometric::{eval_hyp_sum, eval_hyp_sum_series, AffineParam, HypSum, Weight};
use crate::series::{TruncSeries, DEFAULT_ORDER};

pub(super) fn cases() -> Vec<Arc<dyn Case>> {
    vec![
        Arc::new(Eq10A2),
        Arc::new(SixFFiveCoeffs),
        Arc::new(Thm1InnerB2),
        Arc::new(Thm3QuotientX2),
        Arc::new(ExactDivP),
    ]
}

fn affine(base: (i64, i64), slope: (i64, i64)) -> AffineParam {
    AffineParam::new(q(base.0, base.1), q(slope.0, slope.1))
}

fn constant(n: i64, d: i64) -> AffineParam {
    AffineParam::constant(q(n, d))
}

/// `sum_{k<=(p-1)/2} (4k+1) (1/2)_k (1/2-x/2)_k (1/2+x/2)_k / (k! (1+x/2)_k (1-x/2)_k) (-1)^k`.
/// The terminating parameter `(1-p)/2` enters only through the truncation.
pub(crate) fn eq10_spec(p: u64) -> HypSum {
    HypSum::new(q(-1, 1), (p - 1) / 2)
        .upper_all([constant(1, 2), affine((1, 2), (-1, 2)), affine((1, 2), (1, 2))])
        .lower_all([affine((1, 1), (1, 2)), affine((1, 1), (-1, 2))])
        .weight(Weight::new(4, 1))
}

/// Deformed well-poised 6F5 at `-1` with `e = (1-p)/2`, `d = 1`.
pub(crate) fn six_f_five_spec(p: u64) -> HypSum {
    let pq = Rational::from(p as i64);
    HypSum::new(q(-1, 1), (p - 1) / 2)
        .upper_all([
            constant(1, 2),
            affine((1, 2), (-1, 2)),
            affine((1, 2), (1, 2)),
            AffineParam::constant((Rational::one() - &pq) / Rational::from(2)),
            constant(1, 1),
        ])
        .lower_all([
            affine((1, 1), (1, 2)),
            affine((1, 1), (-1, 2)),
            constant(1, 2),
            AffineParam::constant(Rational::one() + &pq / Rational::from(2)),
        ])
        .weight(Weight::new(4, 1))
}

/// The 3F2 at `1` that the 6F5 reduces to, before the factor `p`.
pub(crate) fn three_f_two_spec(p: u64) -> HypSum {
    let pq = Rational::from(p as i64);
    HypSum::new(Rational::one(), (p - 1) / 2)
        .upper_all([constant(1, 2), constant(1, 1), AffineParam::constant((Rational::one() - pq) / Rational::from(2))])
        .lower_all([affine((1, 1), (1, 2)), affine((1, 1), (-1, 2))])
}

/// `sum (1/2)_k^2 (1/2+x/2)_k (1/2-x/2)_k / (k!^2 (1-ix/2)_k (1+ix/2)_k)`.
pub(crate) fn thm1_inner_spec(p: u64) -> HypSum {
    HypSum::new(Rational::one(), (p - 1) / 2)
        .upper_all([constant(1, 2), constant(1, 2), affine((1, 2), (1, 2)), affine((1, 2), (-1, 2))])
        .lower(constant(1, 1))
        .conj_lower(affine((1, 1), (1, 2)))
}

/// `sum (6k+1) (1/2)_k (1/2-x/2)_k (1/2+x/2)_k / (k! (1+x/4)_k (1-x/4)_k) 4^-k`.
pub(crate) fn thm3_numerator_spec(p: u64) -> HypSum {
    HypSum::new(q(1, 4), (p - 1) / 2)
        .upper_all([constant(1, 2), affine((1, 2), (-1, 2)), affine((1, 2), (1, 2))])
        .lower_all([affine((1, 1), (1, 4)), affine((1, 1), (-1, 4))])
        .weight(Weight::new(6, 1))
}

fn min_valuation(s: &TruncSeries, p: u64) -> Result<Valuation, HarnessError> {
    let mut min = Valuation::Infinite;
    for c in s.coeffs() {
        min = min.min(padic_valuation(c, p)?);
    }
    Ok(min)
}

macro_rules! series_case {
    ($ty:ident, $name:literal, $req:expr) => {
        impl Case for $ty {
            fn name(&self) -> &'static str {
                $name
            }

            fn kind(&self) -> CaseKind {
                CaseKind::Series
            }

            fn required(&self, _: i64) -> Requirement {
                $req
            }

            fn applies(&self, p: u64, param: i64) -> bool {
                above_three(p) && param == 0
            }

            fn check(&self, _: &Context, p: u64, param: i64) -> Result<VerificationRecord, HarnessError> {
                self.run(p, param)
            }
        }
    };
}

/// `A_2`, the `x^2` coefficient of the deformed `(4k+1)` sum at `-1`.
struct Eq10A2;

impl Eq10A2 {
    fn run(&self, p: u64, param: i64) -> Result<VerificationRecord, HarnessError> {
        let s = eval_hyp_sum_series(&eq10_spec(p), DEFAULT_ORDER)?;
        let a2 = s.coefficient(2)?.clone();
        let rec = VerificationRecord::congruence(self.name(), p, param, self.required(param), a2, Rational::zero())?;
        if !s.is_even() {
            return Ok(rec.violate("odd coefficient"));
        }
        if s.constant_term() != &eval_hyp_sum(&eq10_spec(p).scalarized())? {
            return Ok(rec.violate("constant term differs from the undeformed sum"));
        }
        Ok(rec)
    }
}

series_case!(Eq10A2, "EQ10_A2", Requirement::AtLeast(1));

/// Every coefficient of the deformed 6F5 lies in `pZ_p`, the 6F5 equals `p`
/// times its 3F2 reduction, and its constant term agrees with the deformed
/// `(4k+1)` sum modulo `p`.
struct SixFFiveCoeffs;

impl SixFFiveCoeffs {
    fn run(&self, p: u64, param: i64) -> Result<VerificationRecord, HarnessError> {
        let lhs = eval_hyp_sum_series(&six_f_five_spec(p), DEFAULT_ORDER)?;
        let rhs = eval_hyp_sum_series(&three_f_two_spec(p), DEFAULT_ORDER)?.scale(&Rational::from(p));
        let v = min_valuation(&lhs, p)?;
        let rec = VerificationRecord::with_achieved(
            self.name(),
            p,
            param,
            self.required(param),
            Achieved::Valuation(v),
            lhs.constant_term().clone(),
            Rational::zero(),
        );
        if lhs != rhs {
            return Ok(rec.violate("6F5 differs from p times the 3F2"));
        }
        let eq10 = eval_hyp_sum(&eq10_spec(p).scalarized())?;
        if !padic_valuation(&(eq10 - lhs.constant_term()), p)?.at_least(1) {
            return Ok(rec.violate("constant terms disagree modulo p"));
        }
        Ok(rec)
    }
}

series_case!(SixFFiveCoeffs, "SIX_F_FIVE_COEFFS", Requirement::AtLeast(1));

/// `b_2 = sum_k b_{2,k} h_k^4` of the deformed inner sum, which must equal
/// `-sum_k h_k^4 H^(2)_(2k)`.
struct Thm1InnerB2;

impl Thm1InnerB2 {
    fn run(&self, p: u64, param: i64) -> Result<VerificationRecord, HarnessError> {
        let n = (p - 1) / 2;
        let s = eval_hyp_sum_series(&thm1_inner_spec(p), 2)?;
        let b2 = s.coefficient(2)?.clone();
        let hs = central_half_ratios(n);
        let h2 = harmonic2_table(2 * n);
        let expected: Rational = -(0..=n as usize).map(|k| hs[k].pow(4) * &h2[2 * k]).sum::<Rational>();
        let rec =
            VerificationRecord::congruence(self.name(), p, param, self.required(param), b2.clone(), Rational::zero())?;
        if b2 != expected {
            return Ok(rec.violate("x^2 coefficient is not -sum h_k^4 H2(2k)"));
        }
        Ok(rec)
    }
}

series_case!(Thm1InnerB2, "LEM_THM1_B2K", Requirement::AtLeast(1));

/// `x^2` coefficient of `N(x) / N(0)` for the deformed `(6k+1)` sum at `1/4`.
struct Thm3QuotientX2;

impl Thm3QuotientX2 {
    fn run(&self, p: u64, param: i64) -> Result<VerificationRecord, HarnessError> {
        let numerator = eval_hyp_sum_series(&thm3_numerator_spec(p), DEFAULT_ORDER)?;
        let n0 = numerator.constant_term().checked_recip()?;
        let quotient = numerator.scale(&n0);
        let x2 = quotient.coefficient(2)?.clone();
        let rec = VerificationRecord::congruence(self.name(), p, param, self.required(param), x2, Rational::zero())?;
        if !quotient.is_even() {
            return Ok(rec.violate("odd coefficient"));
        }
        if !min_valuation(&quotient, p)?.at_least(0) {
            return Ok(rec.violate("quotient is not p-integral"));
        }
        Ok(rec)
    }
}

series_case!(Thm3QuotientX2, "THM3_QUOTIENT_X2", Requirement::AtLeast(1));

/// `v_p((3/4)_n (5/4)_n / n!^2) = 1` exactly, `n = (p-1)/2`.
struct ExactDivP;

impl ExactDivP {
    fn run(&self, p: u64, param: i64) -> Result<VerificationRecord, HarnessError> {
        let n = (p - 1) / 2;
        let f = Rational::from(factorial(n));
        let value = rising_factorial(&q(3, 4), n) * rising_factorial(&q(5, 4), n) / (&f * &f);
        Ok(VerificationRecord::congruence(self.name(), p, param, self.required(param), value, Rational::zero())?)
    }
}

series_case!(ExactDivP, "EXACT_DIV_P", Requirement::Exactly(1));
