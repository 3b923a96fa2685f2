use std::fmt;

use crate::error::ArithError;
use crate::exact::{padic_valuation, Rational, Valuation};

/// What a case must achieve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Requirement {
    /// `v_p(lhs - rhs) >= n`.
    AtLeast(i64),
    /// `v_p(lhs - rhs) == n`.
    Exactly(i64),
    /// `lhs == rhs` as rationals.
    Equal,
}

impl fmt::Display for Requirement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Requirement::AtLeast(n) => write!(f, "v>={n}"),
            Requirement::Exactly(n) => write!(f, "v=={n}"),
            Requirement::Equal => f.write_str("exact"),
        }
    }
}

/// What a case actually achieved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Achieved {
    Valuation(Valuation),
    Equal,
    Unequal,
    /// A side contract was violated or the computation errored.
    Failed(String),
}

impl fmt::Display for Achieved {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Achieved::Valuation(v) => write!(f, "{v}"),
            Achieved::Equal => f.write_str("equal"),
            Achieved::Unequal => f.write_str("unequal"),
            Achieved::Failed(msg) => f.write_str(msg),
        }
    }
}

/// Outcome of one check at one prime and parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationRecord {
    pub case: String,
    /// 0 for prime-free cases.
    pub p: u64,
    /// r, s, n or draw count, depending on the case; 0 if unused.
    pub param: i64,
    pub required: Requirement,
    pub achieved: Achieved,
    pub lhs: Rational,
    pub rhs: Rational,
    pub pass: bool,
    pub conjectural: bool,
}

fn passes(required: Requirement, achieved: &Achieved) -> bool {
    match (required, achieved) {
        (Requirement::AtLeast(n), Achieved::Valuation(v)) => v.at_least(n),
        (Requirement::Exactly(n), Achieved::Valuation(v)) => *v == Valuation::Finite(n),
        (Requirement::Equal, Achieved::Equal) => true,
        _ => false,
    }
}

impl VerificationRecord {
    /// Congruence record: achieved is `v_p(lhs - rhs)`, reported unclamped.
    pub fn congruence(
        case: &str,
        p: u64,
        param: i64,
        required: Requirement,
        lhs: Rational,
        rhs: Rational,
    ) -> Result<Self, ArithError> {
        let v = padic_valuation(&(&lhs - &rhs), p)?;
        Ok(Self::with_achieved(case, p, param, required, Achieved::Valuation(v), lhs, rhs))
    }

    pub fn exact(case: &str, p: u64, param: i64, lhs: Rational, rhs: Rational) -> Self {
        let achieved = if lhs == rhs { Achieved::Equal } else { Achieved::Unequal };
        Self::with_achieved(case, p, param, Requirement::Equal, achieved, lhs, rhs)
    }

    pub fn with_achieved(
        case: &str,
        p: u64,
        param: i64,
        required: Requirement,
        achieved: Achieved,
        lhs: Rational,
        rhs: Rational,
    ) -> Self {
        let pass = passes(required, &achieved);
        VerificationRecord { case: case.to_string(), p, param, required, achieved, lhs, rhs, pass, conjectural: false }
    }

    /// Marks a side contract as broken; the record fails regardless of valuation.
    pub fn violate(mut self, msg: impl Into<String>) -> Self {
        self.achieved = Achieved::Failed(format!("violated: {}", msg.into()));
        self.pass = false;
        self
    }

    pub fn failed(case: &str, p: u64, param: i64, required: Requirement, err: impl fmt::Display) -> Self {
        Self::with_achieved(
            case,
            p,
            param,
            required,
            Achieved::Failed(format!("error: {err}")),
            Rational::zero(),
            Rational::zero(),
        )
    }

    pub fn conjectural(mut self, yes: bool) -> Self {
        self.conjectural = yes;
        self
    }

    /// The achieved valuation, if this record carries one.
    pub fn valuation(&self) -> Option<Valuation> {
        match self.achieved {
            Achieved::Valuation(v) => Some(v),
            _ => None,
        }
    }
}
