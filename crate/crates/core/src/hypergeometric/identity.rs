//! Terminating hypergeometric evaluation identities, each behind the
//! [`Identity`] trait and looked up by [`IdentityId`].
//!
//! Every identity is checked pointwise: both sides are evaluated exactly at
//! rational parameter values and compared for equality. The randomized
//! driver draws parameters from a fixed-seed generator and redraws whenever a
//! side hits a pole.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{eval_hyp_sum, gamma_ratio_value, GammaRatioExpr, HypSum};
use crate::error::{ArithError, HypError};
use crate::exact::{rising_factorial, Rational};

/// Seed for the randomized identity suite.
pub const IDENTITY_SEED: u64 = 20_090_417;
/// Accepted (pole-free) draws per identity.
pub const IDENTITY_DRAWS: usize = 50;
/// Bound on numerator and denominator magnitude of random parameters.
pub const PARAM_BOUND: i64 = 20;
/// Largest terminating index drawn.
pub const MAX_TERMINATING: u64 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    Whipple4F3,
    Whipple6F5,
    Whipple7F6,
    Gessel31_1,
    GosperStrange,
    GesselP544,
}

impl IdentityId {
    pub const ALL: [IdentityId; 6] = [
        IdentityId::Whipple4F3,
        IdentityId::Whipple6F5,
        IdentityId::Whipple7F6,
        IdentityId::Gessel31_1,
        IdentityId::GosperStrange,
        IdentityId::GesselP544,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            IdentityId::Whipple4F3 => "WHIPPLE_4F3",
            IdentityId::Whipple6F5 => "WHIPPLE_6F5",
            IdentityId::Whipple7F6 => "WHIPPLE_7F6",
            IdentityId::Gessel31_1 => "GESSEL_31_1",
            IdentityId::GosperStrange => "GOSPER_STRANGE",
            IdentityId::GesselP544 => "GESSEL_P544",
        }
    }

    pub fn strategy(&self) -> &'static dyn Identity {
        match self {
            IdentityId::Whipple4F3 => &Whipple4F3,
            IdentityId::Whipple6F5 => &Whipple6F5,
            IdentityId::Whipple7F6 => &Whipple7F6,
            IdentityId::Gessel31_1 => &Gessel31_1,
            IdentityId::GosperStrange => &GosperStrange,
            IdentityId::GesselP544 => &GesselP544,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown identity {s:?}"))
    }
}

/// How an identity terminates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Termination {
    /// This letter must be a nonpositive integer `-n`.
    NegatedLetter(char),
    /// This letter is the nonnegative integer `n` itself.
    Count(char),
}

/// Named rational parameters for an identity check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityParams(BTreeMap<char, Rational>);

impl IdentityParams {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, letter: char, value: impl Into<Rational>) -> Self {
        self.0.insert(letter, value.into());
        self
    }

    pub fn get(&self, letter: char) -> Result<&Rational, HypError> {
        self.0.get(&letter).ok_or(HypError::MissingParam(letter))
    }

    fn terminating_index(&self, t: Termination) -> Result<u64, HypError> {
        let (letter, sign) = match t {
            Termination::NegatedLetter(c) => (c, -1),
            Termination::Count(c) => (c, 1),
        };
        let value = self.get(letter)?;
        value
            .to_i64()
            .map(|v| v * sign)
            .filter(|&n| n >= 0)
            .map(|n| n as u64)
            .ok_or_else(|| HypError::NotTerminating { letter, value: value.to_string() })
    }
}

impl fmt::Display for IdentityParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(","))
    }
}

/// A terminating evaluation identity `LHS = RHS`.
pub trait Identity: Send + Sync {
    fn id(&self) -> IdentityId;

    /// Letters drawn freely in randomized checks.
    fn free_letters(&self) -> &'static [char];

    fn termination(&self) -> Termination;

    /// Both sides evaluated exactly.
    fn sides(&self, params: &IdentityParams) -> Result<(Rational, Rational), HypError>;
}

/// `prod (nums_i)_n / prod (dens_j)_n`; a vanishing denominator is a pole.
fn pochhammer_quotient(nums: &[Rational], dens: &[Rational], n: u64) -> Result<Rational, HypError> {
    let mut value = Rational::one();
    for a in nums {
        value *= rising_factorial(a, n);
    }
    for b in dens {
        let q = rising_factorial(b, n);
        if q.is_zero() {
            return Err(HypError::Pole { param: b.to_string(), index: n });
        }
        value /= q;
    }
    Ok(value)
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn well_poised_lower(a: &Rational, letters: &[&Rational]) -> Vec<Rational> {
    let one_plus_a = Rational::one() + a;
    std::iter::once(a / q(2, 1)).chain(letters.iter().map(|x| &one_plus_a - *x)).collect()
}

/// 4F3[a, 1+a/2, c, d; a/2, 1+a-c, 1+a-d; -1] = Γ(1+a-c)Γ(1+a-d) / (Γ(1+a)Γ(1+a-c-d)).
pub struct Whipple4F3;

impl Identity for Whipple4F3 {
    fn id(&self) -> IdentityId {
        IdentityId::Whipple4F3
    }

    fn free_letters(&self) -> &'static [char] {
        &['a', 'c']
    }

    fn termination(&self) -> Termination {
        Termination::NegatedLetter('d')
    }

    fn sides(&self, params: &IdentityParams) -> Result<(Rational, Rational), HypError> {
        let n = params.terminating_index(self.termination())?;
        let (a, c, d) = (params.get('a')?, params.get('c')?, params.get('d')?);
        let one = Rational::one();
        let lhs = HypSum::new(q(-1, 1), n)
            .upper_all([a.clone(), &one + a / q(2, 1), c.clone(), d.clone()])
            .lower_all(well_poised_lower(a, &[c, d]));
        let rhs = GammaRatioExpr::new(vec![&one + a - c, &one + a - d], vec![&one + a, &one + a - c - d]);
        Ok((eval_hyp_sum(&lhs)?, gamma_ratio_value(&rhs)?))
    }
}

/// Well-poised 6F5 at -1 reduced to a prefactor times a 3F2 at 1.
pub struct Whipple6F5;

impl Identity for Whipple6F5 {
    fn id(&self) -> IdentityId {
        IdentityId::Whipple6F5
    }

    fn free_letters(&self) -> &'static [char] {
        &['a', 'b', 'c', 'd']
    }

    fn termination(&self) -> Termination {
        Termination::NegatedLetter('e')
    }

    fn sides(&self, params: &IdentityParams) -> Result<(Rational, Rational), HypError> {
        let n = params.terminating_index(self.termination())?;
        let (a, b, c, d, e) =
            (params.get('a')?, params.get('b')?, params.get('c')?, params.get('d')?, params.get('e')?);
        let one = Rational::one();
        let lhs = HypSum::new(q(-1, 1), n)
            .upper_all([a.clone(), &one + a / q(2, 1), b.clone(), c.clone(), d.clone(), e.clone()])
            .lower_all(well_poised_lower(a, &[b, c, d, e]));
        let prefactor = GammaRatioExpr::new(vec![&one + a - d, &one + a - e], vec![&one + a, &one + a - d - e]);
        let tail = HypSum::new(q(1, 1), n)
            .upper_all([&one + a - b - c, d.clone(), e.clone()])
            .lower_all([&one + a - b, &one + a - c]);
        Ok((eval_hyp_sum(&lhs)?, gamma_ratio_value(&prefactor)? * eval_hyp_sum(&tail)?))
    }
}

/// Whipple's 7F6 to balanced 4F3 transformation. The Gamma prefactor is
/// `Γ(1+a-e)Γ(1+a-f)Γ(1+a-g)Γ(1+a-e-f-g) / (Γ(1+a)Γ(1+a-f-g)Γ(1+a-e-g)Γ(1+a-e-f))`.
pub struct Whipple7F6;

impl Identity for Whipple7F6 {
    fn id(&self) -> IdentityId {
        IdentityId::Whipple7F6
    }

    fn free_letters(&self) -> &'static [char] {
        &['a', 'c', 'd', 'e', 'g']
    }

    fn termination(&self) -> Termination {
        Termination::NegatedLetter('f')
    }

    fn sides(&self, params: &IdentityParams) -> Result<(Rational, Rational), HypError> {
        let n = params.terminating_index(self.termination())?;
        let (a, c, d, e, f, g) = (
            params.get('a')?,
            params.get('c')?,
            params.get('d')?,
            params.get('e')?,
            params.get('f')?,
            params.get('g')?,
        );
        let one = Rational::one();
        let ap1 = &one + a;
        let lhs = HypSum::new(q(1, 1), n)
            .upper_all([a.clone(), &one + a / q(2, 1), c.clone(), d.clone(), e.clone(), f.clone(), g.clone()])
            .lower_all(well_poised_lower(a, &[c, d, e, f, g]));
        let prefactor = GammaRatioExpr::new(
            vec![&ap1 - e, &ap1 - f, &ap1 - g, &ap1 - e - f - g],
            vec![ap1.clone(), &ap1 - f - g, &ap1 - e - g, &ap1 - e - f],
        );
        let tail = HypSum::new(q(1, 1), n).upper_all([&ap1 - c - d, e.clone(), f.clone(), g.clone()]).lower_all([
            e + f + g - a,
            &ap1 - c,
            &ap1 - d,
        ]);
        Ok((eval_hyp_sum(&lhs)?, gamma_ratio_value(&prefactor)? * eval_hyp_sum(&tail)?))
    }
}

/// Gessel's terminating 5F4 at 1/4.
pub struct Gessel31_1;

impl Identity for Gessel31_1 {
    fn id(&self) -> IdentityId {
        IdentityId::Gessel31_1
    }

    fn free_letters(&self) -> &'static [char] {
        &['a', 'c']
    }

    fn termination(&self) -> Termination {
        Termination::Count('n')
    }

    fn sides(&self, params: &IdentityParams) -> Result<(Rational, Rational), HypError> {
        let n = params.terminating_index(self.termination())?;
        let (a, c) = (params.get('a')?, params.get('c')?);
        let nq = Rational::from(n);
        let two_c_third = c * q(2, 3);
        let n_third = &nq / q(3, 1);
        let lhs = HypSum::new(q(1, 4), n)
            .upper_all([
                q(1, 2) + a - c,
                -&nq,
                &nq + q(1, 1),
                q(2, 1) - c * q(2, 1) + &nq,
                q(5, 3) - &two_c_third + &n_third,
            ])
            .lower_all([
                q(2, 1) - c + &nq,
                q(2, 3) - &two_c_third + &n_third,
                &nq - a * q(2, 1) + q(2, 1),
                q(3, 2) - c,
            ]);
        let rhs = pochhammer_quotient(&[q(2, 1) - c, q(2, 1) - a * q(2, 1)], &[q(3, 1) - c * q(2, 1), q(3, 2) - a], n)?;
        Ok((eval_hyp_sum(&lhs)?, rhs))
    }
}

/// Gosper's strange evaluation of a terminating 5F4 at 1/4. The lower
/// parameter paired with `2b` is `a - b + 1`.
pub struct GosperStrange;

impl Identity for GosperStrange {
    fn id(&self) -> IdentityId {
        IdentityId::GosperStrange
    }

    fn free_letters(&self) -> &'static [char] {
        &['a', 'b']
    }

    fn termination(&self) -> Termination {
        Termination::Count('n')
    }

    fn sides(&self, params: &IdentityParams) -> Result<(Rational, Rational), HypError> {
        let n = params.terminating_index(self.termination())?;
        let (a, b) = (params.get('a')?, params.get('b')?);
        let nq = Rational::from(n);
        let one = Rational::one();
        let two_a = a * q(2, 1);
        let lhs = HypSum::new(q(1, 4), n)
            .upper_all([two_a.clone(), b * q(2, 1), &one - b * q(2, 1), &one + &two_a / q(3, 1), -&nq])
            .lower_all([a - b + &one, a + b + q(1, 2), &two_a / q(3, 1), &one + &two_a + &nq * q(2, 1)]);
        let rhs = pochhammer_quotient(&[a + q(1, 2), a + &one], &[a + b + q(1, 2), a - b + &one], n)?;
        Ok((eval_hyp_sum(&lhs)?, rhs))
    }
}

/// Gessel's terminating 4F3 at -1/8.
pub struct GesselP544;

impl Identity for GesselP544 {
    fn id(&self) -> IdentityId {
        IdentityId::GesselP544
    }

    fn free_letters(&self) -> &'static [char] {
        &['a']
    }

    fn termination(&self) -> Termination {
        Termination::Count('n')
    }

    fn sides(&self, params: &IdentityParams) -> Result<(Rational, Rational), HypError> {
        let n = params.terminating_index(self.termination())?;
        let a = params.get('a')?;
        let nq = Rational::from(n);
        let one = Rational::one();
        let two_a = a * q(2, 1);
        let third = (&two_a + &nq) / q(3, 1);
        let lhs = HypSum::new(q(-1, 8), n)
            .upper_all([&two_a + &nq + &one, &nq + &one, &third + q(4, 3), -&nq])
            .lower_all([a + q(3, 2) + &nq, &third + q(1, 3), &one + a]);
        let rhs = pochhammer_quotient(&[a + q(3, 2)], &[&two_a + q(2, 1)], n)? * Rational::from(2).pow(n as i32);
        Ok((eval_hyp_sum(&lhs)?, rhs))
    }
}

/// Evaluates both sides of `id` at `params`.
pub fn identity_sides(id: IdentityId, params: &IdentityParams) -> Result<(Rational, Rational), HypError> {
    id.strategy().sides(params)
}

/// Exact equality of the two sides of `id` at `params`.
pub fn check_identity(id: IdentityId, params: &IdentityParams) -> Result<bool, HypError> {
    let (lhs, rhs) = identity_sides(id, params)?;
    Ok(lhs == rhs)
}

fn is_pole(e: &HypError) -> bool {
    matches!(
        e,
        HypError::Pole { .. }
            | HypError::NotInvertible { .. }
            | HypError::GammaPole(_)
            | HypError::Unpairable
            | HypError::Arith(ArithError::DivisionByZero)
    )
}

fn random_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(-PARAM_BOUND..=PARAM_BOUND), rng.gen_range(1..=PARAM_BOUND))
}

/// Draws one parameter record for `identity`.
pub fn random_params(identity: &dyn Identity, rng: &mut impl Rng) -> IdentityParams {
    let mut params = IdentityParams::new();
    for &letter in identity.free_letters() {
        params = params.with(letter, random_rational(rng));
    }
    let n = rng.gen_range(0..=MAX_TERMINATING) as i64;
    match identity.termination() {
        Termination::NegatedLetter(c) => params.with(c, -n),
        Termination::Count(c) => params.with(c, n),
    }
}

/// One draw whose two sides disagreed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub params: IdentityParams,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Clone, Debug)]
pub struct RandomizedOutcome {
    pub id: IdentityId,
    pub accepted: usize,
    pub rejected: usize,
    pub mismatches: Vec<Mismatch>,
    /// Sides of the last accepted draw.
    pub last: Option<(Rational, Rational)>,
}

impl RandomizedOutcome {
    pub fn passed(&self, wanted: usize) -> bool {
        self.accepted == wanted && self.mismatches.is_empty()
    }
}

/// Checks `id` on `draws` pole-free random parameter records.
pub fn randomized_check(id: IdentityId, seed: u64, draws: usize) -> Result<RandomizedOutcome, HypError> {
    let identity = id.strategy();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (id as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let mut out = RandomizedOutcome { id, accepted: 0, rejected: 0, mismatches: Vec::new(), last: None };
    let max_attempts = draws * 200;
    while out.accepted < draws && out.accepted + out.rejected < max_attempts {
        let params = random_params(identity, &mut rng);
        match identity.sides(&params) {
            Ok((lhs, rhs)) => {
                out.accepted += 1;
                if lhs != rhs {
                    out.mismatches.push(Mismatch { params, lhs: lhs.clone(), rhs: rhs.clone() });
                }
                out.last = Some((lhs, rhs));
            }
            Err(e) if is_pole(&e) => out.rejected += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}
