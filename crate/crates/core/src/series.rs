//! The closed forms: one-vertex and two-vertex cycle-count series, planar
//! coefficients, vertical-array counts, the reduction-chain coefficient, and
//! rooted-map counts.
//!
//! For n = (p+q)/2 edges, the two-vertex series A⁽ˢ⁾_{p,q}(x) = Σ_k c_{p,q,k} x^k
//! counts pairings μ of [p] ∪ [q]′ with exactly s mixed pairs by the cycle
//! count k of μγ⁻¹. The one-vertex series A_p(x) does the same on [p] with
//! γ a single p-cycle. Cycle counts translate to genus: k = n − 2g + 1 with
//! one vertex, k = n − 2g with two.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact::{binomial, binomial_clipped, double_factorial, factorial};
use crate::ground::GroundSet;
use crate::poly::{product_of_linear, BinomialPoly, MonomialPoly, RatPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesError {
    /// Degrees must be positive.
    ZeroDegree,
    /// One-vertex series needs an even degree p ≥ 2.
    OneVertexParity(usize),
    /// s must satisfy s ≡ p ≡ q (mod 2).
    MixedParity { p: usize, q: usize, s: usize },
    /// s must satisfy 1 ≤ s ≤ min(p, q).
    MixedRange { p: usize, q: usize, s: usize },
    /// Summed two-vertex series need p ≡ q (mod 2).
    SumParity { p: usize, q: usize },
    /// No map with the given vertex count and edge count attains this cycle
    /// count: it fails k's range or the parity forced by integral genus.
    ImpossibleCycleCount { k: usize, n: usize, vertices: usize },
    /// Maps here have one or two vertices, nothing else.
    BadVertexCount(usize),
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::ZeroDegree => write!(f, "vertex degrees must be positive"),
            SeriesError::OneVertexParity(p) => {
                write!(f, "one-vertex series needs even p >= 2, got {p}")
            }
            SeriesError::MixedParity { p, q, s } => {
                write!(f, "s = {s} must have the parity of p = {p} and q = {q}")
            }
            SeriesError::MixedRange { p, q, s } => {
                write!(f, "s = {s} outside 1..=min({p}, {q})")
            }
            SeriesError::SumParity { p, q } => {
                write!(f, "p = {p} and q = {q} must have equal parity")
            }
            SeriesError::ImpossibleCycleCount { k, n, vertices } => write!(
                f,
                "no {vertices}-vertex map with {n} edges has {k} faces"
            ),
            SeriesError::BadVertexCount(v) => write!(f, "unsupported vertex count {v}"),
        }
    }
}

/// Validated parameters (p, q, s) of a two-vertex series: vertex degrees
/// p and q, and the number s of mixed pairs (equivalently, edges joining the
/// two vertices).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeriesSpec {
    p: usize,
    q: usize,
    s: usize,
}

impl SeriesSpec {
    pub fn new(p: usize, q: usize, s: usize) -> Result<SeriesSpec, SeriesError> {
        if p == 0 || q == 0 {
            return Err(SeriesError::ZeroDegree);
        }
        if s == 0 || s > p.min(q) {
            return Err(SeriesError::MixedRange { p, q, s });
        }
        if s % 2 != p % 2 || s % 2 != q % 2 {
            return Err(SeriesError::MixedParity { p, q, s });
        }
        Ok(SeriesSpec { p, q, s })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// Edge count n = (p + q) / 2.
    pub fn edges(&self) -> usize {
        (self.p + self.q) / 2
    }

    pub fn ground(&self) -> GroundSet {
        GroundSet::new(self.p, self.q)
    }

    /// Number of pairings of [p] ∪ [q]′ with exactly s mixed pairs:
    /// C(p,s) C(q,s) s! (p−s−1)!! (q−s−1)!!.
    pub fn pairing_count(&self) -> BigUint {
        let (p, q, s) = (self.p as i64, self.q as i64, self.s as i64);
        binomial(self.p as u64, s)
            * binomial(self.q as u64, s)
            * factorial(self.s as u64)
            * double_factorial(p - s - 1).expect("parity checked")
            * double_factorial(q - s - 1).expect("parity checked")
    }
}

/// One-vertex (Harer–Zagier) series for even p = 2n:
/// A_p(x) = (2n−1)!! Σ_{k=1}^{n+1} 2^{k−1} C(n, k−1) C(x, k).
pub fn hz_series(p: usize) -> Result<BinomialPoly, SeriesError> {
    if p == 0 {
        return Err(SeriesError::ZeroDegree);
    }
    if p % 2 != 0 {
        return Err(SeriesError::OneVertexParity(p));
    }
    let n = p / 2;
    let scale = BigInt::from(double_factorial(p as i64 - 1).expect("odd"));
    let mut poly = BinomialPoly::zero();
    for k in 1..=n + 1 {
        let c = BigInt::from(2u32).pow(k as u32 - 1)
            * BigInt::from(binomial(n as u64, k as i64 - 1));
        poly.add_term(k, &scale * c);
    }
    Ok(poly)
}

/// The signed bracket Δ⁽ˢ⁾_{k,p,q}(i,j) =
/// C(k−1, (p−s)/2 − i) C(k−1, (q−s)/2 − j) − C(k−1, (p+s)/2 − i) C(k−1, (q+s)/2 − j).
/// Binomials with negative lower index vanish, which is what confines the
/// negative branch to terms that are zero anyway in the assembled series.
pub fn delta(spec: &SeriesSpec, k: usize, i: usize, j: usize) -> BigInt {
    assert!(k >= 1, "delta needs k >= 1");
    let (p, q, s) = (spec.p as i64, spec.q as i64, spec.s as i64);
    let (i, j) = (i as i64, j as i64);
    let top = (k - 1) as u64;
    let plus = |a: i64, b: i64| BigInt::from(binomial(top, a) * binomial(top, b));
    plus((p - s) / 2 - i, (q - s) / 2 - j) - plus((p + s) / 2 - i, (q + s) / 2 - j)
}

/// Two-vertex series with exactly s mixed pairs, in the binomial basis:
/// A⁽ˢ⁾_{p,q}(x) = p! q! Σ_{k=1}^{n+1} C(x,k) Σ_{i≤p/2} Σ_{j≤q/2}
///   C(n−i−j, k−1) Δ⁽ˢ⁾_{k,p,q}(i,j) / (2^{i+j} i! j! (n−i−j)!).
///
/// Each coefficient is asserted to be a nonnegative integer; a violation is
/// an arithmetic bug, not an input error.
pub fn main_series(spec: &SeriesSpec) -> BinomialPoly {
    let n = spec.edges();
    let pq_fact = BigInt::from(factorial(spec.p as u64) * factorial(spec.q as u64));
    let mut poly = BinomialPoly::zero();
    for k in 1..=n + 1 {
        let mut acc = BigRational::zero();
        for i in 0..=spec.p / 2 {
            for j in 0..=spec.q / 2 {
                let d = delta(spec, k, i, j);
                if d.is_zero() {
                    continue;
                }
                let num = d * BigInt::from(binomial((n - i - j) as u64, k as i64 - 1));
                let den = BigInt::from(2u32).pow((i + j) as u32)
                    * BigInt::from(factorial(i as u64))
                    * BigInt::from(factorial(j as u64))
                    * BigInt::from(factorial((n - i - j) as u64));
                acc += BigRational::new(num, den);
            }
        }
        let coeff = acc * BigRational::from_integer(pq_fact.clone());
        assert!(coeff.is_integer(), "series coefficient must be integral");
        let coeff = coeff.to_integer();
        assert!(!coeff.is_negative(), "series coefficient must count");
        poly.add_term(k, coeff);
    }
    poly
}

/// Monomial view of `main_series`; exact by construction.
pub fn main_series_monomial(spec: &SeriesSpec) -> MonomialPoly {
    main_series(spec)
        .to_monomial()
        .expect("two-vertex series is integral in the monomial basis")
}

/// Coefficient of the planar term x^n in A⁽ˢ⁾_{p,q}:
/// s · C(p, (p−s)/2) · C(q, (q−s)/2).
pub fn planar_coefficient(spec: &SeriesSpec) -> BigUint {
    BigUint::from(spec.s)
        * binomial(spec.p as u64, ((spec.p - spec.s) / 2) as i64)
        * binomial(spec.q as u64, ((spec.q - spec.s) / 2) as i64)
}

/// Σ_s A⁽ˢ⁾_{p,q}(x) over all feasible s, in the monomial basis. This is the
/// series of the full pairing set of [p] ∪ [q]′.
pub fn summed_series(p: usize, q: usize) -> Result<MonomialPoly, SeriesError> {
    if p == 0 || q == 0 {
        return Err(SeriesError::ZeroDegree);
    }
    if p % 2 != q % 2 {
        return Err(SeriesError::SumParity { p, q });
    }
    let mut total = MonomialPoly::zero();
    let mut s = if p % 2 == 0 { 2 } else { 1 };
    while s <= p.min(q) {
        let spec = SeriesSpec::new(p, q, s).expect("feasible by construction");
        total.add_assign(&main_series_monomial(&spec));
        s += 2;
    }
    Ok(total)
}

/// Jackson's summed series for p = q = n, assembled in the shifted basis
/// C(x+j+i, n) and expanded exactly:
/// A_{n,n}(x) = n! Σ_j Σ_i Σ_k 4^{−k} C(2k,k) C(n,2k) C(2j,j) C(n−2j−1,i) C(x+j+i,n).
pub fn jackson_series(n: usize) -> Result<MonomialPoly, SeriesError> {
    if n == 0 {
        return Err(SeriesError::ZeroDegree);
    }
    // The leading n! cancels against the 1/n! of each expanded
    // C(x+j+i, n) = (1/n!) Π_{t<n} (x + j + i − t).
    let mut acc = RatPoly::zero();
    for j in 0..=(n - 1) / 2 {
        let j_weight = BigInt::from(binomial(2 * j as u64, j as i64));
        for i in 0..=n - 2 * j - 1 {
            let i_weight = BigInt::from(binomial((n - 2 * j - 1) as u64, i as i64));
            let shifts: Vec<i64> = (0..n).map(|t| (j + i) as i64 - t as i64).collect();
            let base = product_of_linear(&shifts);
            let mut k_sum = BigRational::zero();
            for k in 0..=(n - 2 * j - 1) / 2 {
                let num = binomial(2 * k as u64, k as i64) * binomial(n as u64, 2 * k as i64);
                k_sum += BigRational::new(
                    BigInt::from(num),
                    BigInt::from(4u32).pow(k as u32),
                );
            }
            let scale = k_sum * BigRational::from_integer(&j_weight * i_weight);
            acc.add_scaled(&base, &scale);
        }
    }
    Ok(acc
        .into_monomial()
        .expect("summed series is integral in the monomial basis"))
}

/// Goupil and Schaeffer's summed series for general degrees, p ≤ q after
/// swapping, p + q = 2n:
/// A_{p,q}(x) = p! q! Σ_j Σ_i Σ_k C(2j,j) C(n−2j−1,i) C(x+j+i,n) /
/// (2^{n−p+2k} k! (p−2k)! (n−p+k)!), j up to (p−1)/2, i up to n−2j−1, k up
/// to (p−2j−1)/2. Assembled in the shifted basis and expanded exactly.
pub fn gs_series(p: usize, q: usize) -> Result<MonomialPoly, SeriesError> {
    if p == 0 || q == 0 {
        return Err(SeriesError::ZeroDegree);
    }
    if p % 2 != q % 2 {
        return Err(SeriesError::SumParity { p, q });
    }
    let (p, q) = if p <= q { (p, q) } else { (q, p) };
    let n = (p + q) / 2;
    // p! q! / n!, with the n! coming from the expansion of C(x+j+i, n).
    let outer = BigRational::new(
        BigInt::from(factorial(p as u64) * factorial(q as u64)),
        BigInt::from(factorial(n as u64)),
    );
    let mut acc = RatPoly::zero();
    for j in 0..=(p - 1) / 2 {
        let j_weight = BigInt::from(binomial(2 * j as u64, j as i64));
        for i in 0..=n - 2 * j - 1 {
            let i_weight = BigInt::from(binomial((n - 2 * j - 1) as u64, i as i64));
            let shifts: Vec<i64> = (0..n).map(|t| (j + i) as i64 - t as i64).collect();
            let base = product_of_linear(&shifts);
            let mut k_sum = BigRational::zero();
            for k in 0..=(p - 2 * j - 1) / 2 {
                let den = BigInt::from(2u32).pow((n - p + 2 * k) as u32)
                    * BigInt::from(factorial(k as u64))
                    * BigInt::from(factorial((p - 2 * k) as u64))
                    * BigInt::from(factorial((n - p + k) as u64));
                k_sum += BigRational::new(BigInt::one(), den);
            }
            let scale = k_sum * BigRational::from_integer(&j_weight * i_weight) * &outer;
            acc.add_scaled(&base, &scale);
        }
    }
    Ok(acc
        .into_monomial()
        .expect("summed series is integral in the monomial basis"))
}

/// Number of full vertical arrays with shape spread over k columns:
/// f⁽ˢ⁾_{k,i,j} = s! Σ_{l=0}^{k−1} C(s−1−l, k−1−l) C(k−1−l, i) C(k−1−l, j).
/// The first factor is a clipped binomial: it vanishes for l > s−1 even when
/// the lower index is 0.
pub fn f_full_vertical(s: usize, k: usize, i: usize, j: usize) -> BigUint {
    assert!(s >= 1 && k >= 1, "f needs s, k >= 1");
    let mut sum = BigUint::zero();
    for l in 0..k {
        sum += binomial_clipped(s as i64 - 1 - l as i64, (k - 1 - l) as i64)
            * binomial((k - 1 - l) as u64, i as i64)
            * binomial((k - 1 - l) as u64, j as i64);
    }
    factorial(s as u64) * sum
}

/// Number of vertical arrays with s mixed pairs, k columns, and mark counts
/// i+1 and j+1:
/// v⁽ˢ⁾_{k,i,j} = [(s+i)!(s+j)!/(s+i+j)!] C(s+i+j, k−1)
///   [C(k−1,i) C(k−1,j) − C(k−1,s+i) C(k−1,s+j)].
/// Asserted nonnegative and integral.
pub fn v_vertical(s: usize, k: usize, i: usize, j: usize) -> BigUint {
    assert!(s >= 1 && k >= 1, "v needs s, k >= 1");
    let top = (k - 1) as u64;
    let bracket = BigInt::from(binomial(top, i as i64) * binomial(top, j as i64))
        - BigInt::from(binomial(top, (s + i) as i64) * binomial(top, (s + j) as i64));
    let num = BigInt::from(factorial((s + i) as u64))
        * BigInt::from(factorial((s + j) as u64))
        * BigInt::from(binomial((s + i + j) as u64, k as i64 - 1))
        * bracket;
    let value = BigRational::new(num, BigInt::from(factorial((s + i + j) as u64)));
    assert!(value.is_integer(), "v must be integral");
    let value = value.to_integer();
    assert!(!value.is_negative(), "v must count");
    value.magnitude().clone()
}

/// Coefficient of C(x,k) in A⁽ˢ⁾_{p,q} computed through the reduction chain
/// (pairings → canonical arrays → minimal arrays → vertical arrays):
/// Σ_{i,j} p! q! v⁽ˢ⁾_{k,(p−s)/2−i,(q−s)/2−j}
///   / (2^{i+j} i! j! ((p+s)/2 − i)! ((q+s)/2 − j)!).
pub fn c_via_reduction(spec: &SeriesSpec, k: usize) -> BigUint {
    assert!(k >= 1, "cycle counts start at 1");
    let (p, q, s) = (spec.p, spec.q, spec.s);
    let pq_fact = BigInt::from(factorial(p as u64) * factorial(q as u64));
    let mut acc = BigRational::zero();
    for i in 0..=(p - s) / 2 {
        for j in 0..=(q - s) / 2 {
            let v = v_vertical(s, k, (p - s) / 2 - i, (q - s) / 2 - j);
            if v.is_zero() {
                continue;
            }
            let den = BigInt::from(2u32).pow((i + j) as u32)
                * BigInt::from(factorial(i as u64))
                * BigInt::from(factorial(j as u64))
                * BigInt::from(factorial(((p + s) / 2 - i) as u64))
                * BigInt::from(factorial(((q + s) / 2 - j) as u64));
            acc += BigRational::new(&pq_fact * BigInt::from(v), den);
        }
    }
    assert!(acc.is_integer(), "reduction coefficient must be integral");
    let value = acc.to_integer();
    assert!(!value.is_negative(), "reduction coefficient must count");
    value.magnitude().clone()
}

/// Genus from cycle count: k = n − 2g + 1 on one vertex, k = n − 2g on two.
pub fn genus_of(k: usize, n: usize, vertices: usize) -> Result<usize, SeriesError> {
    let base = match vertices {
        1 => n + 1,
        2 => n,
        v => return Err(SeriesError::BadVertexCount(v)),
    };
    if k == 0 || k > base || (base - k) % 2 != 0 {
        return Err(SeriesError::ImpossibleCycleCount { k, n, vertices });
    }
    Ok((base - k) / 2)
}

/// Cycle count from genus, inverse of `genus_of`.
pub fn cycles_of_genus(g: usize, n: usize, vertices: usize) -> Result<usize, SeriesError> {
    let base = match vertices {
        1 => n + 1,
        2 => n,
        v => return Err(SeriesError::BadVertexCount(v)),
    };
    if 2 * g >= base {
        return Err(SeriesError::ImpossibleCycleCount {
            k: 0,
            n,
            vertices,
        });
    }
    Ok(base - 2 * g)
}

/// Size of the conjugacy class of permutations of [2n] with cycle type
/// (p, q): (2n)!/(pq), halved when p = q.
fn class_size(p: usize, q: usize) -> BigUint {
    let n2 = (p + q) as u64;
    let mut den = BigUint::from(p) * BigUint::from(q);
    if p == q {
        den *= BigUint::from(2u32);
    }
    factorial(n2) / den
}

/// Number of rooted maps with two vertices of degrees p and q, s edges
/// joining them, and k faces: the x^k coefficient of the series times
/// |C_{p,q}| / (2n−1)!. The division is asserted exact.
pub fn rooted_map_count(spec: &SeriesSpec, k: usize) -> BigUint {
    let coeff = main_series_monomial(spec).coeff(k);
    assert!(!coeff.is_negative(), "distribution coefficient");
    let num = coeff.magnitude() * class_size(spec.p, spec.q);
    let den = factorial((spec.p + spec.q) as u64 - 1);
    let (count, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "rooted map count must be integral");
    count
}

/// Rooted-map counts of `rooted_map_count` for every attained k, keyed by
/// genus.
pub fn rooted_map_distribution(spec: &SeriesSpec) -> BTreeMap<usize, BigUint> {
    let n = spec.edges();
    let mono = main_series_monomial(spec);
    let mut out = BTreeMap::new();
    for (k, _) in mono.iter() {
        let count = rooted_map_count(spec, k);
        if !count.is_zero() {
            let g = genus_of(k, n, 2).expect("attained cycle count is feasible");
            out.insert(g, count);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn spec(p: usize, q: usize, s: usize) -> SeriesSpec {
        SeriesSpec::new(p, q, s).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(SeriesSpec::new(3, 1, 1).is_ok());
        assert_eq!(
            SeriesSpec::new(3, 3, 2),
            Err(SeriesError::MixedParity { p: 3, q: 3, s: 2 })
        );
        assert_eq!(
            SeriesSpec::new(3, 1, 2),
            Err(SeriesError::MixedRange { p: 3, q: 1, s: 2 })
        );
        assert_eq!(
            SeriesSpec::new(2, 2, 4),
            Err(SeriesError::MixedRange { p: 2, q: 2, s: 4 })
        );
        assert_eq!(
            SeriesSpec::new(2, 2, 0),
            Err(SeriesError::MixedRange { p: 2, q: 2, s: 0 })
        );
        assert_eq!(SeriesSpec::new(0, 2, 0), Err(SeriesError::ZeroDegree));
        // Odd p with odd q is fine; opposite parities never are.
        assert!(SeriesSpec::new(3, 3, 3).is_ok());
        assert_eq!(
            SeriesSpec::new(3, 2, 1),
            Err(SeriesError::MixedParity { p: 3, q: 2, s: 1 })
        );
    }

    #[test]
    fn pairing_counts() {
        assert_eq!(spec(3, 1, 1).pairing_count(), BigUint::from(3u32));
        assert_eq!(spec(3, 3, 1).pairing_count(), BigUint::from(9u32));
        assert_eq!(spec(3, 3, 3).pairing_count(), BigUint::from(6u32));
        assert_eq!(spec(2, 2, 2).pairing_count(), BigUint::from(2u32));
    }

    #[test]
    fn hz_small_cases() {
        // A_2(x) = x², A_4(x) = 2x³ + x.
        assert_eq!(
            hz_series(2).unwrap().to_monomial().unwrap(),
            MonomialPoly::from_coeffs([(2, int(1))])
        );
        assert_eq!(
            hz_series(4).unwrap().to_monomial().unwrap(),
            MonomialPoly::from_coeffs([(3, int(2)), (1, int(1))])
        );
        assert_eq!(hz_series(3), Err(SeriesError::OneVertexParity(3)));
        assert_eq!(hz_series(0), Err(SeriesError::ZeroDegree));
    }

    #[test]
    fn hz_total_mass() {
        // A_p(1) = (p−1)!!: every pairing counted once.
        for p in [2usize, 4, 6, 8, 10] {
            let total = hz_series(p).unwrap().evaluate(1);
            assert_eq!(
                total,
                BigInt::from(double_factorial(p as i64 - 1).unwrap())
            );
        }
    }

    #[test]
    fn main_series_small_cases() {
        assert_eq!(
            main_series_monomial(&spec(1, 1, 1)),
            MonomialPoly::from_coeffs([(1, int(1))])
        );
        assert_eq!(
            main_series_monomial(&spec(3, 1, 1)),
            MonomialPoly::from_coeffs([(2, int(3))])
        );
        assert_eq!(
            main_series_monomial(&spec(2, 2, 2)),
            MonomialPoly::from_coeffs([(2, int(2))])
        );
    }

    #[test]
    fn main_series_mass_and_planar() {
        for (p, q) in [(3, 1), (2, 2), (3, 3), (4, 2), (5, 3), (4, 4)] {
            let mut s = if p % 2 == 0 { 2 } else { 1 };
            while s <= p.min(q) {
                let sp = spec(p, q, s);
                let mono = main_series_monomial(&sp);
                // Mass: A(1) counts every pairing with s mixed pairs.
                assert_eq!(
                    mono.evaluate(&int(1)),
                    BigInt::from(sp.pairing_count()),
                    "mass p={p} q={q} s={s}"
                );
                // Planar coefficient at k = n.
                assert_eq!(
                    mono.coeff(sp.edges()),
                    BigInt::from(planar_coefficient(&sp)),
                    "planar p={p} q={q} s={s}"
                );
                s += 2;
            }
        }
    }

    #[test]
    fn summed_series_matches_gs_and_jackson() {
        for (p, q) in [(1, 1), (2, 2), (3, 1), (2, 4), (3, 3), (5, 3), (4, 4)] {
            let by_sum = summed_series(p, q).unwrap();
            let by_gs = gs_series(p, q).unwrap();
            assert_eq!(by_sum, by_gs, "p={p} q={q}");
        }
        for n in 1..=5 {
            assert_eq!(jackson_series(n).unwrap(), gs_series(n, n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn gs_small_cases() {
        assert_eq!(
            gs_series(1, 1).unwrap(),
            MonomialPoly::from_coeffs([(1, int(1))])
        );
        assert_eq!(
            gs_series(2, 4).unwrap(),
            MonomialPoly::from_coeffs([(3, int(8)), (1, int(4))])
        );
        // Swapping p and q changes nothing.
        assert_eq!(gs_series(4, 2).unwrap(), gs_series(2, 4).unwrap());
        assert_eq!(
            jackson_series(2).unwrap(),
            MonomialPoly::from_coeffs([(2, int(2))])
        );
        assert_eq!(
            jackson_series(1).unwrap(),
            MonomialPoly::from_coeffs([(1, int(1))])
        );
        assert_eq!(gs_series(3, 2), Err(SeriesError::SumParity { p: 3, q: 2 }));
    }

    #[test]
    fn vertical_counts() {
        assert_eq!(f_full_vertical(1, 1, 0, 0), BigUint::from(1u32));
        assert_eq!(f_full_vertical(2, 2, 0, 0), BigUint::from(4u32));
        assert_eq!(f_full_vertical(4, 1, 0, 0), BigUint::from(24u32));
        // Support ends at k = s even though clipped C(−1, 0) would not.
        assert_eq!(f_full_vertical(1, 2, 0, 0), BigUint::from(0u32));
        assert_eq!(v_vertical(1, 1, 0, 0), BigUint::from(1u32));
    }

    #[test]
    fn reduction_chain_coefficients() {
        // Forward differences of A(3,1,1) = 3x²: b_1 = 3, b_2 = 6.
        let sp = spec(3, 1, 1);
        assert_eq!(c_via_reduction(&sp, 1), BigUint::from(3u32));
        assert_eq!(c_via_reduction(&sp, 2), BigUint::from(6u32));
        // And they agree with the closed form's binomial coefficients.
        let series = main_series(&sp);
        assert_eq!(series.coeff(1), int(3));
        assert_eq!(series.coeff(2), int(6));
    }

    #[test]
    fn genus_translation() {
        assert_eq!(genus_of(3, 3, 2).unwrap(), 0);
        assert_eq!(genus_of(1, 3, 2).unwrap(), 1);
        assert_eq!(genus_of(3, 2, 1).unwrap(), 0);
        assert_eq!(genus_of(1, 2, 1).unwrap(), 1);
        assert!(genus_of(2, 3, 2).is_err());
        assert!(genus_of(0, 3, 2).is_err());
        assert!(genus_of(4, 3, 2).is_err());
        assert!(genus_of(2, 2, 3).is_err());
        for n in 1..=6 {
            for vertices in [1, 2] {
                let mut k = if vertices == 1 { n + 1 } else { n };
                let mut g = 0;
                while k >= 1 {
                    assert_eq!(genus_of(k, n, vertices).unwrap(), g);
                    assert_eq!(cycles_of_genus(g, n, vertices).unwrap(), k);
                    if k < 2 {
                        break;
                    }
                    k -= 2;
                    g += 1;
                }
            }
        }
    }

    #[test]
    fn rooted_map_counts() {
        assert_eq!(rooted_map_count(&spec(1, 1, 1), 1), BigUint::from(1u32));
        assert_eq!(rooted_map_count(&spec(2, 2, 2), 2), BigUint::from(1u32));
        assert_eq!(rooted_map_count(&spec(3, 1, 1), 2), BigUint::from(4u32));
        let dist = rooted_map_distribution(&spec(4, 2, 2));
        assert_eq!(dist.get(&0), Some(&BigUint::from(6u32)));
        assert_eq!(dist.get(&1), Some(&BigUint::from(3u32)));
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(3, 1), BigUint::from(8u32));
        assert_eq!(class_size(2, 2), BigUint::from(3u32));
        assert_eq!(class_size(1, 1), BigUint::from(1u32));
    }

    #[test]
    fn structural_zeros() {
        // k = n + 1 vanishes and so does every k with the wrong parity.
        for (p, q) in [(3, 1), (2, 2), (4, 2), (3, 3), (5, 1)] {
            let mut s = if p % 2 == 0 { 2 } else { 1 };
            while s <= p.min(q) {
                let sp = spec(p, q, s);
                let n = sp.edges();
                let mono = main_series_monomial(&sp);
                assert_eq!(mono.coeff(n + 1), BigInt::zero());
                for k in 1..=n {
                    if (n - k) % 2 == 1 {
                        assert_eq!(mono.coeff(k), BigInt::zero(), "p={p} q={q} s={s} k={k}");
                    }
                }
                s += 2;
            }
        }
    }
}
