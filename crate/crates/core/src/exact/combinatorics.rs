//! Pochhammer symbols, binomials and second-order harmonic sums.

use num_bigint::BigInt;
use num_traits::One;

use super::Rational;

/// Rising factorial `(a)_k = a(a+1)...(a+k-1)`; `(a)_0 = 1`.
pub fn rising_factorial(a: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    let mut factor = a.clone();
    let one = Rational::one();
    for _ in 0..k {
        acc *= &factor;
        if acc.is_zero() {
            return acc;
        }
        factor += &one;
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `binom(n, k)` for nonnegative `n`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `(1/2)_k / k!`, computed by the running ratio `(2j-1)/(2j)`.
pub fn central_half_ratio(k: u64) -> Rational {
    let mut acc = Rational::one();
    for j in 1..=k {
        acc *= Rational::new(2 * j - 1, 2 * j);
    }
    acc
}

/// `[(1/2)_k / k! for k in 0..=n]`.
pub fn central_half_ratios(n: u64) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut acc = Rational::one();
    out.push(acc.clone());
    for j in 1..=n {
        acc *= Rational::new(2 * j - 1, 2 * j);
        out.push(acc.clone());
    }
    out
}

/// `H_k^(2) = sum_{j=1}^k 1/j^2`.
pub fn harmonic2(k: u64) -> Rational {
    (1..=k).map(|j| Rational::new(1, BigInt::from(j) * j)).sum()
}

/// `sum_{j=1}^k 1/(2j-1)^2`.
pub fn odd_harmonic2(k: u64) -> Rational {
    (1..=k)
        .map(|j| {
            let odd = BigInt::from(2 * j - 1);
            Rational::new(1, &odd * &odd)
        })
        .sum()
}

/// `[H_j^(2) for j in 0..=n]`.
pub fn harmonic2_table(n: u64) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut acc = Rational::zero();
    out.push(acc.clone());
    for j in 1..=n {
        acc += Rational::new(1, BigInt::from(j) * j);
        out.push(acc.clone());
    }
    out
}
