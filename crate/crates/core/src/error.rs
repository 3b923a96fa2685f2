use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series with zero constant term is not invertible")]
    NotInvertible,
    #[error("degree {degree} exceeds truncation order {order}")]
    DegreeOutOfRange { degree: usize, order: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypError {
    #[error("lower parameter {param} vanishes in its Pochhammer symbol at index {index}")]
    Pole { param: String, index: u64 },
    #[error("lower parameter {param} has a zero factor with nonzero slope; series factor is not invertible")]
    NotInvertible { param: String },
    #[error("Gamma argument {0} is a nonpositive integer")]
    GammaPole(String),
    #[error("Gamma arguments cannot be paired by fractional part")]
    Unpairable,
    #[error("missing identity parameter {0:?}")]
    MissingParam(char),
    #[error("parameter {letter:?} = {value} is not a valid terminating specialization")]
    NotTerminating { letter: char, value: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModularError {
    #[error("index {index} outside expansion bound {bound}")]
    OutOfRange { index: u64, bound: u64 },
    #[error("p^r = {requested} exceeds expansion budget {budget}")]
    BudgetExceeded { requested: u64, budget: u64 },
    #[error("expansion bound must be at least 1")]
    EmptyExpansion,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("Hecke cross-check failed at p = {p}: a_(p^2) = {direct}, a_p^2 - p^3 = {recursion}")]
    HeckeMismatch { p: u64, direct: String, recursion: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown case {0:?}")]
    UnknownCase(String),
    #[error("case {case} is a {actual} case")]
    WrongKind { case: String, actual: String },
    #[error("case {case} does not apply at p = {p}, parameter {param}")]
    NotApplicable { case: String, p: u64, param: i64 },
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Hyp(#[from] HypError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Modular(#[from] ModularError),
}
