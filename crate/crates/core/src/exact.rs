//! Exact integer primitives: factorials, binomials, double and falling
//! factorials.
//!
//! Conventions matter here and are load-bearing for the series module:
//! binomials vanish outside 0 ≤ k ≤ n (including negative upper index),
//! (−1)!! = 1, and falling factorials with negative exponent vanish.

use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// n! as an unbounded integer. 0! = 1.
pub fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Binomial coefficient C(n, k) with the combinatorial convention: zero for
/// k < 0 and for k > n.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    // Exact at every step: after the t-th iteration acc = C(n, t+1).
    for t in 0..k {
        acc = acc * BigUint::from(n - t) / BigUint::from(t + 1);
    }
    acc
}

/// Binomial with a possibly negative upper index, clipped to zero whenever
/// n < 0. This is not the generalized binomial: C(−1, 0) here is 0, not 1.
/// The vertical-array count f relies on that (terms past the support of a
/// sum must vanish even at k = l), so do not "fix" this to the generalized
/// convention.
pub(crate) fn binomial_clipped(n: i64, k: i64) -> BigUint {
    if n < 0 {
        return BigUint::zero();
    }
    binomial(n as u64, k)
}

/// Double factorial m!! for odd m ≥ −1, with (−1)!! = 1.
pub fn double_factorial(m: i64) -> Result<BigUint, ExactError> {
    if m < -1 {
        return Err(ExactError::DoubleFactorialRange(m));
    }
    if m.rem_euclid(2) == 0 {
        return Err(ExactError::DoubleFactorialEven(m));
    }
    let mut acc = BigUint::one();
    let mut t = 1;
    while t <= m {
        acc *= BigUint::from(t as u64);
        t += 2;
    }
    Ok(acc)
}

/// Falling factorial (x)_i = x(x−1)…(x−i+1) as a signed integer; 1 for
/// i = 0, zero for i < 0.
pub fn falling_factorial(x: i64, i: i64) -> BigInt {
    if i < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for t in 0..i {
        acc *= BigInt::from(x - t);
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExactError {
    /// Double factorial of an even argument is not defined here.
    DoubleFactorialEven(i64),
    /// Double factorial below −1 is not defined.
    DoubleFactorialRange(i64),
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::DoubleFactorialEven(m) => {
                write!(f, "double factorial of even argument {m}")
            }
            ExactError::DoubleFactorialRange(m) => {
                write!(f, "double factorial of {m} (below -1)")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), big(1));
        assert_eq!(factorial(1), big(1));
        assert_eq!(factorial(5), big(120));
        assert_eq!(factorial(20), BigUint::from(2_432_902_008_176_640_000u64));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(7, 7), big(1));
        assert_eq!(binomial(7, 0), big(1));
        assert_eq!(binomial(3, -1), big(0));
        assert_eq!(binomial(3, 4), big(0));
        assert_eq!(binomial(60, 30), "118264581564861424".parse().unwrap());
    }

    #[test]
    fn clipped_binomial_zeroes_negative_upper_index() {
        assert_eq!(binomial_clipped(-1, 0), big(0));
        assert_eq!(binomial_clipped(-3, 2), big(0));
        assert_eq!(binomial_clipped(4, 2), big(6));
    }

    #[test]
    fn double_factorial_values() {
        assert_eq!(double_factorial(-1).unwrap(), big(1));
        assert_eq!(double_factorial(1).unwrap(), big(1));
        assert_eq!(double_factorial(5).unwrap(), big(15));
        assert_eq!(double_factorial(15).unwrap(), big(2_027_025));
        assert_eq!(
            double_factorial(4),
            Err(ExactError::DoubleFactorialEven(4))
        );
        assert_eq!(
            double_factorial(-3),
            Err(ExactError::DoubleFactorialRange(-3))
        );
    }

    #[test]
    fn falling_factorial_values() {
        assert_eq!(falling_factorial(5, 2), BigInt::from(20));
        assert_eq!(falling_factorial(7, 0), BigInt::from(1));
        assert_eq!(falling_factorial(3, -1), BigInt::from(0));
        assert_eq!(falling_factorial(-2, 3), BigInt::from(-24));
        assert_eq!(falling_factorial(2, 3), BigInt::from(0));
    }
}
