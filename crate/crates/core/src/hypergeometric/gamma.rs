use std::collections::BTreeMap;

use num_traits::Signed;

use crate::error::HypError;
use crate::exact::{rising_factorial, Rational};

/// `prod Γ(numerator_i) / prod Γ(denominator_j)` with rational arguments.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GammaRatioExpr {
    pub numerator: Vec<Rational>,
    pub denominator: Vec<Rational>,
}

impl GammaRatioExpr {
    pub fn new(numerator: Vec<Rational>, denominator: Vec<Rational>) -> Self {
        GammaRatioExpr { numerator, denominator }
    }
}

fn is_gamma_pole(x: &Rational) -> bool {
    x.is_integer() && !x.numer().is_positive()
}

/// Reduces the ratio to a rational through `Γ(x+1) = xΓ(x)`.
///
/// Arguments are grouped by fractional part; within a group numerator and
/// denominator arguments are sorted and paired in order, and each pair
/// `Γ(α+m)/Γ(α)` becomes `(α)_m`, or `1/(α+m)_{-m}` when `m < 0`.
pub fn gamma_ratio_value(g: &GammaRatioExpr) -> Result<Rational, HypError> {
    for x in g.numerator.iter().chain(&g.denominator) {
        if is_gamma_pole(x) {
            return Err(HypError::GammaPole(x.to_string()));
        }
    }
    let mut groups: BTreeMap<Rational, (Vec<&Rational>, Vec<&Rational>)> = BTreeMap::new();
    for x in &g.numerator {
        groups.entry(x.fract()).or_default().0.push(x);
    }
    for x in &g.denominator {
        groups.entry(x.fract()).or_default().1.push(x);
    }
    let mut value = Rational::one();
    for (_, (mut nums, mut dens)) in groups {
        if nums.len() != dens.len() {
            return Err(HypError::Unpairable);
        }
        nums.sort();
        dens.sort();
        for (n, d) in nums.into_iter().zip(dens) {
            let shift = (n - d).to_i64().expect("paired arguments differ by an integer");
            if shift >= 0 {
                value *= rising_factorial(d, shift as u64);
            } else {
                // nonzero: n..d contains no integer <= 0 since neither endpoint is a pole
                value /= rising_factorial(n, (-shift) as u64);
            }
        }
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn trivial_ratio() {
        let g = GammaRatioExpr::new(vec![r(7, 3)], vec![r(7, 3)]);
        assert_eq!(gamma_ratio_value(&g).unwrap(), Rational::one());
        assert_eq!(gamma_ratio_value(&GammaRatioExpr::default()).unwrap(), Rational::one());
    }

    #[test]
    fn eq0_right_side_at_five() {
        // Γ(1-5/2)Γ(1+5/2) / (Γ(1/2)Γ(3/2))
        let g = GammaRatioExpr::new(vec![r(-3, 2), r(7, 2)], vec![r(1, 2), r(3, 2)]);
        assert_eq!(gamma_ratio_value(&g).unwrap(), r(5, 1));
    }

    #[test]
    fn theorem1_prefactor_at_five() {
        let g = GammaRatioExpr::new(vec![r(-3, 2), r(7, 2), r(-1, 2)], vec![r(3, 2), r(-5, 2), r(5, 2)]);
        assert_eq!(gamma_ratio_value(&g).unwrap(), r(25, 1));
    }

    #[test]
    fn integer_arguments_reduce_to_factorials() {
        // Γ(6)/Γ(3) = 5!/2! = 60
        let g = GammaRatioExpr::new(vec![r(6, 1)], vec![r(3, 1)]);
        assert_eq!(gamma_ratio_value(&g).unwrap(), r(60, 1));
        let g = GammaRatioExpr::new(vec![r(3, 1)], vec![r(6, 1)]);
        assert_eq!(gamma_ratio_value(&g).unwrap(), r(1, 60));
    }

    #[test]
    fn errors() {
        let g = GammaRatioExpr::new(vec![r(1, 3)], vec![r(1, 2)]);
        assert_eq!(gamma_ratio_value(&g), Err(HypError::Unpairable));
        let g = GammaRatioExpr::new(vec![r(1, 3), r(1, 2)], vec![r(4, 3)]);
        assert_eq!(gamma_ratio_value(&g), Err(HypError::Unpairable));
        let g = GammaRatioExpr::new(vec![r(-2, 1)], vec![r(1, 1)]);
        assert!(matches!(gamma_ratio_value(&g), Err(HypError::GammaPole(_))));
        let g = GammaRatioExpr::new(vec![r(1, 1)], vec![r(0, 1)]);
        assert!(matches!(gamma_ratio_value(&g), Err(HypError::GammaPole(_))));
    }
}
