use std::fmt;

use crate::error::HypError;
use crate::exact::Rational;
use crate::series::TruncSeries;

/// A parameter `base + slope * x`, affine in the deformation variable `x`.
#[derive(Clone, PartialEq, Eq)]
pub struct AffineParam {
    pub base: Rational,
    pub slope: Rational,
}

impl AffineParam {
    pub fn new(base: Rational, slope: Rational) -> Self {
        AffineParam { base, slope }
    }

    pub fn constant(base: Rational) -> Self {
        AffineParam { base, slope: Rational::zero() }
    }

    pub fn is_constant(&self) -> bool {
        self.slope.is_zero()
    }

    /// The parameter at `x = 0`.
    pub fn scalarized(&self) -> AffineParam {
        AffineParam::constant(self.base.clone())
    }
}

impl From<Rational> for AffineParam {
    fn from(base: Rational) -> Self {
        AffineParam::constant(base)
    }
}

impl fmt::Debug for AffineParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slope.is_zero() {
            write!(f, "{}", self.base)
        } else {
            write!(f, "{} + ({})x", self.base, self.slope)
        }
    }
}

/// Affine weight `slope * k + offset` multiplying the k-th term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    pub slope: Rational,
    pub offset: Rational,
}

impl Weight {
    pub fn new(slope: impl Into<Rational>, offset: impl Into<Rational>) -> Self {
        Weight { slope: slope.into(), offset: offset.into() }
    }

    pub fn unit() -> Self {
        Weight::new(0, 1)
    }

    pub fn at(&self, k: u64) -> Rational {
        &self.slope * Rational::from(k) + &self.offset
    }
}

/// A weighted truncated hypergeometric sum
///
/// ```text
///   sum_{k=0}^{K} (w1 k + w0) * prod_i (u_i)_k / (k! prod_j (l_j)_k) * z^k
/// ```
///
/// Conjugate pairs stand for `(b + i s x)_k (b - i s x)_k = prod_{j<k} ((b+j)^2 + s^2 x^2)`,
/// which keeps parameters like `1 ± i x/2` expressible over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypSum {
    pub upper: Vec<AffineParam>,
    pub lower: Vec<AffineParam>,
    pub conj_upper: Vec<AffineParam>,
    pub conj_lower: Vec<AffineParam>,
    pub z: Rational,
    pub truncation: u64,
    pub weight: Weight,
}

impl HypSum {
    pub fn new(z: Rational, truncation: u64) -> Self {
        HypSum {
            upper: Vec::new(),
            lower: Vec::new(),
            conj_upper: Vec::new(),
            conj_lower: Vec::new(),
            z,
            truncation,
            weight: Weight::unit(),
        }
    }

    pub fn upper(mut self, p: impl Into<AffineParam>) -> Self {
        self.upper.push(p.into());
        self
    }

    pub fn lower(mut self, p: impl Into<AffineParam>) -> Self {
        self.lower.push(p.into());
        self
    }

    pub fn upper_all<P: Into<AffineParam>>(mut self, ps: impl IntoIterator<Item = P>) -> Self {
        self.upper.extend(ps.into_iter().map(Into::into));
        self
    }

    pub fn lower_all<P: Into<AffineParam>>(mut self, ps: impl IntoIterator<Item = P>) -> Self {
        self.lower.extend(ps.into_iter().map(Into::into));
        self
    }

    pub fn conj_upper(mut self, p: AffineParam) -> Self {
        self.conj_upper.push(p);
        self
    }

    pub fn conj_lower(mut self, p: AffineParam) -> Self {
        self.conj_lower.push(p);
        self
    }

    pub fn weight(mut self, w: Weight) -> Self {
        self.weight = w;
        self
    }

    /// All parameters evaluated at `x = 0`.
    pub fn scalarized(&self) -> HypSum {
        let flat = |v: &[AffineParam]| v.iter().map(AffineParam::scalarized).collect();
        HypSum {
            upper: flat(&self.upper),
            lower: flat(&self.lower),
            conj_upper: flat(&self.conj_upper),
            conj_lower: flat(&self.conj_lower),
            ..self.clone()
        }
    }

    pub fn is_constant(&self) -> bool {
        [&self.upper, &self.lower, &self.conj_upper, &self.conj_lower]
            .iter()
            .all(|v| v.iter().all(AffineParam::is_constant))
    }

    /// Reports the first lower parameter whose Pochhammer symbol hits a zero
    /// factor at some `k <= K`. `as_series` distinguishes true poles from
    /// factors that vanish only at `x = 0`.
    fn check_lower(&self, as_series: bool) -> Result<(), HypError> {
        let k = self.truncation as i64;
        let params = self.lower.iter().chain(&self.conj_lower);
        for p in params {
            let Some(b) = p.base.to_i64() else { continue };
            if b <= 0 && b > -k {
                if as_series && !p.slope.is_zero() {
                    return Err(HypError::NotInvertible { param: format!("{p:?}") });
                }
                return Err(HypError::Pole { param: format!("{p:?}"), index: (1 - b) as u64 });
            }
        }
        Ok(())
    }
}

/// Exact value of the truncated weighted sum at `x = 0`.
pub fn eval_hyp_sum(s: &HypSum) -> Result<Rational, HypError> {
    s.check_lower(false)?;
    let mut term = Rational::one();
    let mut sum = Rational::zero();
    for k in 0..=s.truncation {
        sum += s.weight.at(k) * &term;
        if k == s.truncation {
            break;
        }
        let kq = Rational::from(k);
        let mut num = s.z.clone();
        let mut den = Rational::from(k + 1);
        for u in &s.upper {
            num *= &u.base + &kq;
        }
        for l in &s.lower {
            den *= &l.base + &kq;
        }
        for u in &s.conj_upper {
            num *= (&u.base + &kq).pow(2);
        }
        for l in &s.conj_lower {
            den *= (&l.base + &kq).pow(2);
        }
        term *= num.checked_div(&den)?;
        if term.is_zero() {
            break;
        }
    }
    Ok(sum)
}

/// The truncated sum as a power series in the deformation variable `x`.
pub fn eval_hyp_sum_series(s: &HypSum, order: usize) -> Result<TruncSeries, HypError> {
    s.check_lower(true)?;
    let mut term = TruncSeries::one(order);
    let mut sum = TruncSeries::zero(order);
    for k in 0..=s.truncation {
        sum = &sum + &term.scale(&s.weight.at(k));
        if k == s.truncation {
            break;
        }
        let kq = Rational::from(k);
        for u in &s.upper {
            term.mul_linear(&(&u.base + &kq), &u.slope);
        }
        for l in &s.lower {
            term.div_linear(&(&l.base + &kq), &l.slope)?;
        }
        for u in &s.conj_upper {
            term.mul_quadratic(&(&u.base + &kq).pow(2), &u.slope.pow(2));
        }
        for l in &s.conj_lower {
            term.div_quadratic(&(&l.base + &kq).pow(2), &l.slope.pow(2))?;
        }
        term = term.scale(&(&s.z / Rational::from(k + 1)));
        if term.coeffs().iter().all(Rational::is_zero) {
            break;
        }
    }
    Ok(sum)
}

/// Smallest `n` such that some constant upper parameter equals `-n`.
pub fn termination_index(s: &HypSum) -> Option<u64> {
    s.upper
        .iter()
        .filter(|p| p.is_constant())
        .filter_map(|p| p.base.to_i64())
        .filter(|&b| b <= 0)
        .map(|b| (-b) as u64)
        .min()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{harmonic2, rising_factorial};
    use crate::series::{pochhammer_series, ps_invert, ps_mul};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn half() -> AffineParam {
        AffineParam::constant(r(1, 2))
    }

    /// Independent route: every term built from full Pochhammer products.
    fn naive_series(s: &HypSum, order: usize) -> TruncSeries {
        let mut sum = TruncSeries::zero(order);
        for k in 0..=s.truncation {
            let mut t = TruncSeries::constant(s.weight.at(k) * s.z.pow(k as i32), order);
            t = t.scale(&rising_factorial(&Rational::one(), k).checked_recip().unwrap());
            for u in &s.upper {
                t = ps_mul(&t, &pochhammer_series(&u.base, &u.slope, k, order));
            }
            for l in &s.lower {
                t = ps_mul(&t, &ps_invert(&pochhammer_series(&l.base, &l.slope, k, order)).unwrap());
            }
            for u in &s.conj_upper {
                for j in 0..k {
                    let b = &u.base + Rational::from(j);
                    t = ps_mul(&t, &TruncSeries::new(vec![&b * &b, Rational::zero(), u.slope.pow(2)], order));
                }
            }
            for l in &s.conj_lower {
                for j in 0..k {
                    let b = &l.base + Rational::from(j);
                    let q = TruncSeries::new(vec![&b * &b, Rational::zero(), l.slope.pow(2)], order);
                    t = ps_mul(&t, &ps_invert(&q).unwrap());
                }
            }
            sum = &sum + &t;
        }
        sum
    }

    fn eq0_spec(p: u64) -> HypSum {
        HypSum::new(r(-1, 1), (p - 1) / 2)
            .upper_all([half(), half(), half()])
            .lower_all([AffineParam::constant(r(1, 1)), AffineParam::constant(r(1, 1))])
            .weight(Weight::new(4, 1))
    }

    #[test]
    fn eq0_left_side_at_five() {
        assert_eq!(eval_hyp_sum(&eq0_spec(5)).unwrap(), r(435, 512));
    }

    #[test]
    fn fourth_power_sum_at_five() {
        let s = HypSum::new(r(1, 1), 2).upper_all([half(), half(), half(), half()]).lower_all([
            AffineParam::constant(r(1, 1)),
            AffineParam::constant(r(1, 1)),
            AffineParam::constant(r(1, 1)),
        ]);
        assert_eq!(eval_hyp_sum(&s).unwrap(), r(4433, 4096));
    }

    #[test]
    fn empty_truncation_is_weight_at_zero() {
        let s = HypSum::new(r(7, 3), 0).upper(half()).lower(AffineParam::constant(r(0, 1)));
        assert_eq!(eval_hyp_sum(&s).unwrap(), Rational::one());
    }

    #[test]
    fn lower_pole_is_reported() {
        let s = HypSum::new(r(1, 1), 3).lower(AffineParam::constant(r(-2, 1)));
        assert!(matches!(eval_hyp_sum(&s), Err(HypError::Pole { index: 3, .. })));
        // -3 first vanishes at k = 4, beyond the truncation
        let s = HypSum::new(r(1, 1), 3).lower(AffineParam::constant(r(-3, 1)));
        assert!(eval_hyp_sum(&s).is_ok());
    }

    #[test]
    fn series_rejects_vanishing_deformed_lower() {
        let s = HypSum::new(r(1, 1), 2).lower(AffineParam::new(r(0, 1), r(1, 1)));
        assert!(matches!(eval_hyp_sum_series(&s, 2), Err(HypError::NotInvertible { .. })));
    }

    #[test]
    fn eq10_constant_term_matches_scalar() {
        let s = HypSum::new(r(-1, 1), 2)
            .upper_all([half(), AffineParam::new(r(1, 2), r(-1, 2)), AffineParam::new(r(1, 2), r(1, 2))])
            .lower_all([AffineParam::new(r(1, 1), r(1, 2)), AffineParam::new(r(1, 1), r(-1, 2))])
            .weight(Weight::new(4, 1));
        let series = eval_hyp_sum_series(&s, 2).unwrap();
        assert_eq!(series.constant_term(), &r(435, 512));
        assert_eq!(series, naive_series(&s, 2));
    }

    #[test]
    fn constant_spec_gives_constant_series() {
        let s = eq0_spec(7);
        let series = eval_hyp_sum_series(&s, 2).unwrap();
        assert!(series.is_constant());
        assert_eq!(series.constant_term(), &eval_hyp_sum(&s).unwrap());
    }

    #[test]
    fn deformed_fourth_power_term_coefficients() {
        // (1/2)_k^2 (1/2 ± x/2)_k / (k!^2 (1 ± i x/2)_k), per-term x^2 coefficient
        let spec = |k: u64| {
            HypSum::new(r(1, 1), k)
                .upper_all([half(), half(), AffineParam::new(r(1, 2), r(1, 2)), AffineParam::new(r(1, 2), r(-1, 2))])
                .lower(AffineParam::constant(r(1, 1)))
                .conj_lower(AffineParam::new(r(1, 1), r(1, 2)))
        };
        let mut previous = Rational::zero();
        for k in 0..=2u64 {
            let series = eval_hyp_sum_series(&spec(k), 4).unwrap();
            assert_eq!(series, naive_series(&spec(k), 4));
            let x2 = series.coefficient(2).unwrap().clone();
            let h = crate::exact::central_half_ratio(k);
            assert_eq!(&x2 - &previous, -(h.pow(4) * harmonic2(2 * k)));
            previous = x2;
        }
    }

    #[test]
    fn termination_examples() {
        let s = HypSum::new(r(1, 1), 5).upper(AffineParam::constant(r(-3, 1)));
        assert_eq!(termination_index(&s), Some(3));
        let s = HypSum::new(r(1, 1), 5).upper_all([half(), AffineParam::constant(r(1 - 5, 2))]);
        assert_eq!(termination_index(&s), Some(2));
        let s = HypSum::new(r(1, 1), 5).upper_all([half(), AffineParam::constant(r(3, 1))]);
        assert_eq!(termination_index(&s), None);
        let s = HypSum::new(r(1, 1), 5).upper(AffineParam::new(r(-3, 1), r(1, 1)));
        assert_eq!(termination_index(&s), None);
    }
}
