//! Truncated univariate power series over the rationals.
//!
//! A [`TruncSeries`] of order `D` stores `c_0..=c_D` and represents
//! `c_0 + c_1 x + ... + c_D x^D + O(x^{D+1})`. Binary operations truncate to
//! the smaller of the two orders.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::SeriesError;
use crate::exact::Rational;

/// Truncation order used when a caller has no reason to pick another:
/// enough for the `x^2` coefficient plus room to see parity at `x^4`.
pub const DEFAULT_ORDER: usize = 4;

#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    /// Series of order `order` from leading coefficients; missing ones are zero
    /// and coefficients beyond `order` are dropped.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncSeries { coeffs }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// `base + slope * x`.
    pub fn linear(base: Rational, slope: Rational, order: usize) -> Self {
        Self::new(vec![base, slope], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn coefficient(&self, degree: usize) -> Result<&Rational, SeriesError> {
        self.coeffs.get(degree).ok_or(SeriesError::DegreeOutOfRange { degree, order: self.order() })
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec(), order.min(self.order()))
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// True when every odd-degree coefficient is exactly zero.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Rational::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let c0_inv = self.coeffs[0].checked_recip().map_err(|_| SeriesError::NotInvertible)?;
        let order = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
        out.push(c0_inv.clone());
        for n in 1..=order {
            let acc: Rational = (1..=n).map(|i| &self.coeffs[i] * &out[n - i]).sum();
            out.push(-(acc * &c0_inv));
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// In-place multiplication by `base + slope * x`.
    pub fn mul_linear(&mut self, base: &Rational, slope: &Rational) {
        if slope.is_zero() {
            for c in &mut self.coeffs {
                *c *= base;
            }
            return;
        }
        for n in (0..self.coeffs.len()).rev() {
            let mut next = &self.coeffs[n] * base;
            if n > 0 {
                next += &self.coeffs[n - 1] * slope;
            }
            self.coeffs[n] = next;
        }
    }

    /// In-place division by `base + slope * x`; `base` must be nonzero.
    pub fn div_linear(&mut self, base: &Rational, slope: &Rational) -> Result<(), SeriesError> {
        let inv = base.checked_recip().map_err(|_| SeriesError::NotInvertible)?;
        // b_n = (a_n - slope * b_{n-1}) / base
        for n in 0..self.coeffs.len() {
            let mut next = self.coeffs[n].clone();
            if n > 0 && !slope.is_zero() {
                next -= &self.coeffs[n - 1] * slope;
            }
            self.coeffs[n] = next * &inv;
        }
        Ok(())
    }

    /// In-place multiplication by `base + square_coeff * x^2`.
    pub fn mul_quadratic(&mut self, base: &Rational, square_coeff: &Rational) {
        for n in (0..self.coeffs.len()).rev() {
            let mut next = &self.coeffs[n] * base;
            if n > 1 && !square_coeff.is_zero() {
                next += &self.coeffs[n - 2] * square_coeff;
            }
            self.coeffs[n] = next;
        }
    }

    /// In-place division by `base + square_coeff * x^2`; `base` must be nonzero.
    pub fn div_quadratic(&mut self, base: &Rational, square_coeff: &Rational) -> Result<(), SeriesError> {
        let inv = base.checked_recip().map_err(|_| SeriesError::NotInvertible)?;
        for n in 0..self.coeffs.len() {
            let mut next = self.coeffs[n].clone();
            if n > 1 && !square_coeff.is_zero() {
                next -= &self.coeffs[n - 2] * square_coeff;
            }
            self.coeffs[n] = next * &inv;
        }
        Ok(())
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let order = self.order().min(rhs.order());
        TruncSeries { coeffs: (0..=order).map(|i| f(&self.coeffs[i], &rhs.coeffs[i])).collect() }
    }
}

/// Cauchy product truncated at the smaller order.
pub fn ps_mul(a: &TruncSeries, b: &TruncSeries) -> TruncSeries {
    let order = a.order().min(b.order());
    let coeffs = (0..=order).map(|n| (0..=n).map(|i| &a.coeffs[i] * &b.coeffs[n - i]).sum()).collect();
    TruncSeries { coeffs }
}

pub fn ps_invert(a: &TruncSeries) -> Result<TruncSeries, SeriesError> {
    a.invert()
}

/// Expansion of `(a0 + slope*x)_k = prod_{i<k} (a0 + i + slope*x)` to order `order`.
pub fn pochhammer_series(a0: &Rational, slope: &Rational, k: u64, order: usize) -> TruncSeries {
    let mut acc = TruncSeries::one(order);
    let mut base = a0.clone();
    let one = Rational::one();
    for _ in 0..k {
        acc.mul_linear(&base, slope);
        base += &one;
    }
    acc
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        ps_mul(self, rhs)
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        self.scale(&-Rational::one())
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}
