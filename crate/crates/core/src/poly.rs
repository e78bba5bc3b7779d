//! Polynomials in the binomial-coefficient basis C(x,k) and the monomial
//! basis, with exact conversions both ways.
//!
//! The binomial basis is where the counting lives: the coefficient of C(x,k)
//! is the number of objects paired with a surjection onto [k]. The monomial
//! basis is where distributions live: the coefficient of x^k is the number
//! of objects with exactly k cycles. Conversions go through Stirling
//! numbers; binomial → monomial divides by k! and asserts the result is
//! integral, monomial → binomial is integral term by term.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact::{binomial, factorial};
use crate::ground::CycleDistribution;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyError {
    /// A coefficient that must be an integer is not; upstream bug.
    NonIntegralCoefficient { power: usize },
    /// A distribution coefficient is negative; upstream bug.
    NegativeCoefficient { power: usize },
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::NonIntegralCoefficient { power } => {
                write!(f, "non-integral coefficient at power {power}")
            }
            PolyError::NegativeCoefficient { power } => {
                write!(f, "negative coefficient at power {power}")
            }
        }
    }
}

/// Polynomial Σ_k c_k · C(x,k) with integer coefficients. Zero coefficients
/// are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BinomialPoly {
    coeffs: BTreeMap<usize, BigInt>,
}

impl BinomialPoly {
    pub fn zero() -> BinomialPoly {
        BinomialPoly::default()
    }

    pub fn from_coeffs<I>(coeffs: I) -> BinomialPoly
    where
        I: IntoIterator<Item = (usize, BigInt)>,
    {
        let mut poly = BinomialPoly::zero();
        for (k, c) in coeffs {
            poly.add_term(k, c);
        }
        poly
    }

    pub fn add_term(&mut self, k: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(k).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// Σ_k c_k · C(x,k) at a nonnegative integer x.
    pub fn evaluate(&self, x: u64) -> BigInt {
        self.coeffs
            .iter()
            .map(|(&k, c)| c * BigInt::from(binomial(x, k as i64)))
            .sum()
    }

    /// Exact change of basis into monomials: C(x,k) = (1/k!) Σ_m s(k,m) x^m
    /// with signed Stirling numbers of the first kind. Errors when the
    /// result is not an integer polynomial, which signals an upstream bug.
    pub fn to_monomial(&self) -> Result<MonomialPoly, PolyError> {
        let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (&k, c) in &self.coeffs {
            let kfact = BigInt::from(factorial(k as u64));
            let row = stirling_first_signed(k);
            for (m, s) in row.into_iter().enumerate() {
                if s.is_zero() {
                    continue;
                }
                let term = BigRational::new(c * s, kfact.clone());
                let slot = acc.entry(m).or_insert_with(BigRational::zero);
                *slot += term;
            }
        }
        let mut poly = MonomialPoly::zero();
        for (m, r) in acc {
            if r.is_zero() {
                continue;
            }
            if !r.is_integer() {
                return Err(PolyError::NonIntegralCoefficient { power: m });
            }
            poly.add_term(m, r.to_integer());
        }
        Ok(poly)
    }
}

/// Polynomial Σ_m c_m · x^m with integer coefficients. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MonomialPoly {
    coeffs: BTreeMap<usize, BigInt>,
}

impl MonomialPoly {
    pub fn zero() -> MonomialPoly {
        MonomialPoly::default()
    }

    pub fn from_coeffs<I>(coeffs: I) -> MonomialPoly
    where
        I: IntoIterator<Item = (usize, BigInt)>,
    {
        let mut poly = MonomialPoly::zero();
        for (m, c) in coeffs {
            poly.add_term(m, c);
        }
        poly
    }

    pub fn add_term(&mut self, m: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(m).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&m);
        }
    }

    pub fn add_assign(&mut self, other: &MonomialPoly) {
        for (&m, c) in &other.coeffs {
            self.add_term(m, c.clone());
        }
    }

    pub fn coeff(&self, m: usize) -> BigInt {
        self.coeffs.get(&m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(&m, c)| (m, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .map(|(&m, c)| c * x.pow(m as u32))
            .sum()
    }

    /// Exact change of basis into binomial coefficients:
    /// x^m = Σ_k S(m,k) · k! · C(x,k) with Stirling numbers of the second
    /// kind. Always integral.
    pub fn to_binomial(&self) -> BinomialPoly {
        let mut poly = BinomialPoly::zero();
        for (&m, c) in &self.coeffs {
            let row = stirling_second(m);
            for (k, s) in row.into_iter().enumerate() {
                if s.is_zero() {
                    continue;
                }
                poly.add_term(k, c * BigInt::from(s) * BigInt::from(factorial(k as u64)));
            }
        }
        poly
    }

    /// Reads a distribution as the polynomial Σ_k count(k) · x^k.
    pub fn from_distribution(dist: &CycleDistribution) -> MonomialPoly {
        MonomialPoly::from_coeffs(
            dist.iter()
                .map(|(k, n)| (k, BigInt::from_biguint(Sign::Plus, n.clone()))),
        )
    }

    /// Interprets the polynomial as a distribution; errors on negative
    /// coefficients.
    pub fn to_distribution(&self) -> Result<CycleDistribution, PolyError> {
        let mut dist = CycleDistribution::new();
        for (&m, c) in &self.coeffs {
            if c.is_negative() {
                return Err(PolyError::NegativeCoefficient { power: m });
            }
            dist.add(m, c.magnitude().clone());
        }
        Ok(dist)
    }
}

impl fmt::Display for MonomialPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&m, c) in self.coeffs.iter().rev() {
            let mag = c.magnitude();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && m > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match m {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{m}")?,
            }
        }
        Ok(())
    }
}

/// Forward differences of the values A(0), A(1), …, A(d): returns b with
/// b_k = Σ_m (−1)^{k−m} C(k,m) A(m), the coefficients of Σ_k b_k C(x,k)
/// interpolating those values.
pub fn forward_differences(values: &[BigInt]) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(values.len());
    for k in 0..values.len() {
        let mut b = BigInt::zero();
        for (m, a) in values.iter().enumerate().take(k + 1) {
            let c = BigInt::from(binomial(k as u64, m as i64));
            if (k - m) % 2 == 0 {
                b += c * a;
            } else {
                b -= c * a;
            }
        }
        out.push(b);
    }
    out
}

/// Row k of signed Stirling numbers of the first kind: s(k, 0..=k), defined
/// by x(x−1)…(x−k+1) = Σ_m s(k,m) x^m.
pub(crate) fn stirling_first_signed(k: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for step in 0..k {
        // Multiply Σ s_m x^m by (x − step).
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (m, s) in row.iter().enumerate() {
            next[m + 1] += s;
            next[m] -= BigInt::from(step as u64) * s;
        }
        row = next;
    }
    row
}

/// Row m of Stirling numbers of the second kind: S(m, 0..=m).
pub(crate) fn stirling_second(m: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for _ in 0..m {
        let mut next = vec![BigUint::zero(); row.len() + 1];
        for (k, s) in row.iter().enumerate() {
            next[k + 1] += s;
            next[k] += BigUint::from(k) * s;
        }
        row = next;
    }
    row
}

/// Dense rational polynomial used internally to assemble series whose terms
/// are rational multiples of products of linear factors, before the final
/// integrality check.
#[derive(Clone, Debug, Default)]
pub(crate) struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub(crate) fn zero() -> RatPoly {
        RatPoly::default()
    }

    /// Adds scale · Σ ints[m] x^m.
    pub(crate) fn add_scaled(&mut self, ints: &[BigInt], scale: &BigRational) {
        if self.coeffs.len() < ints.len() {
            self.coeffs.resize(ints.len(), BigRational::zero());
        }
        for (m, c) in ints.iter().enumerate() {
            if !c.is_zero() {
                self.coeffs[m] += scale * BigRational::from_integer(c.clone());
            }
        }
    }

    pub(crate) fn into_monomial(self) -> Result<MonomialPoly, PolyError> {
        let mut poly = MonomialPoly::zero();
        for (m, r) in self.coeffs.into_iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            if !r.is_integer() {
                return Err(PolyError::NonIntegralCoefficient { power: m });
            }
            poly.add_term(m, r.to_integer());
        }
        Ok(poly)
    }
}

/// Coefficients of Π_t (x + shifts[t]) with index = power of x.
pub(crate) fn product_of_linear(shifts: &[i64]) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::one()];
    for &c in shifts {
        let mut next = vec![BigInt::zero(); coeffs.len() + 1];
        for (m, a) in coeffs.iter().enumerate() {
            next[m + 1] += a;
            next[m] += BigInt::from(c) * a;
        }
        coeffs = next;
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn stirling_rows() {
        // x(x−1)(x−2) = x³ − 3x² + 2x.
        assert_eq!(
            stirling_first_signed(3),
            vec![int(0), int(2), int(-3), int(1)]
        );
        // S(4, ·) = 0, 1, 7, 6, 1.
        assert_eq!(
            stirling_second(4),
            [0u32, 1, 7, 6, 1].map(BigUint::from).to_vec()
        );
    }

    #[test]
    fn binomial_to_monomial() {
        // 6·C(x,3) = x³ − 3x² + 2x.
        let poly = BinomialPoly::from_coeffs([(3, int(6))]);
        let mono = poly.to_monomial().unwrap();
        assert_eq!(
            mono,
            MonomialPoly::from_coeffs([(3, int(1)), (2, int(-3)), (1, int(2))])
        );

        let bad = BinomialPoly::from_coeffs([(3, int(1))]);
        assert_eq!(
            bad.to_monomial(),
            Err(PolyError::NonIntegralCoefficient { power: 1 })
        );
    }

    #[test]
    fn monomial_to_binomial_roundtrip() {
        // x³ = 6C(x,3) + 6C(x,2) + C(x,1).
        let mono = MonomialPoly::from_coeffs([(3, int(1))]);
        let bin = mono.to_binomial();
        assert_eq!(
            bin,
            BinomialPoly::from_coeffs([(3, int(6)), (2, int(6)), (1, int(1))])
        );
        assert_eq!(bin.to_monomial().unwrap(), mono);

        let mixed = MonomialPoly::from_coeffs([(4, int(3)), (2, int(-7)), (0, int(5))]);
        assert_eq!(mixed.to_binomial().to_monomial().unwrap(), mixed);
    }

    #[test]
    fn evaluation_agrees_across_bases() {
        let bin = BinomialPoly::from_coeffs([(0, int(4)), (2, int(-3)), (5, int(2))]);
        let mono = BinomialPoly::from_coeffs([(0, int(4)), (2, int(-3)), (5, int(2))])
            .to_monomial();
        // 2·C(x,5) is not integral as a monomial polynomial; evaluate in the
        // binomial basis and compare against direct summation instead.
        assert!(mono.is_err());
        assert_eq!(bin.evaluate(0), int(4));
        assert_eq!(bin.evaluate(2), int(4) - int(3));
        assert_eq!(bin.evaluate(6), int(4) - int(3) * int(15) + int(2) * int(6));
    }

    #[test]
    fn forward_differences_reconstruct() {
        // A(x) = 2x³ + x at x = 0..4.
        let values: Vec<BigInt> = (0..=4)
            .map(|x| int(2) * int(x).pow(3) + int(x))
            .collect();
        let diffs = forward_differences(&values);
        let poly = BinomialPoly::from_coeffs(diffs.into_iter().enumerate());
        for x in 0..=10u64 {
            assert_eq!(poly.evaluate(x), int(2) * int(x as i64).pow(3) + int(x as i64));
        }
        assert_eq!(
            poly.to_monomial().unwrap(),
            MonomialPoly::from_coeffs([(3, int(2)), (1, int(1))])
        );
    }

    #[test]
    fn distribution_conversion() {
        let dist = CycleDistribution::from_counts([
            (1, BigUint::from(3u32)),
            (3, BigUint::from(2u32)),
        ]);
        let mono = MonomialPoly::from_distribution(&dist);
        assert_eq!(mono.to_distribution().unwrap(), dist);
        let neg = MonomialPoly::from_coeffs([(2, int(-1))]);
        assert_eq!(
            neg.to_distribution(),
            Err(PolyError::NegativeCoefficient { power: 2 })
        );
    }

    #[test]
    fn product_of_linear_expands() {
        // (x+1)(x+2) = x² + 3x + 2.
        assert_eq!(product_of_linear(&[1, 2]), vec![int(2), int(3), int(1)]);
        // (x)(x−1) = x² − x.
        assert_eq!(product_of_linear(&[0, -1]), vec![int(0), int(-1), int(1)]);
        assert_eq!(product_of_linear(&[]), vec![int(1)]);
    }

    #[test]
    fn display_format() {
        let poly = MonomialPoly::from_coeffs([(3, int(2)), (1, int(1))]);
        assert_eq!(alloc::format!("{poly}"), "2x^3 + x");
        let signed = MonomialPoly::from_coeffs([(2, int(-1)), (0, int(7))]);
        assert_eq!(alloc::format!("{signed}"), "-x^2 + 7");
        assert_eq!(alloc::format!("{}", MonomialPoly::zero()), "0");
    }
}
