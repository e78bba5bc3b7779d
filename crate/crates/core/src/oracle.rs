//! Brute-force oracles.
//!
//! Everything here recomputes, by direct enumeration, quantities the rest of
//! the crate obtains from closed forms or bijections: cycle-count
//! distributions by walking every pairing, series values by evaluating those
//! distributions, and rooted-map counts by enumerating rotation systems on
//! labelled half-edges and dividing out the relabelling group. None of it
//! shares logic with the formulas it checks.
//!
//! The pairing walks run on `PairingCursor`, whose `branch` constructor
//! splits the space by the partner of the first point; `branch_cursors`
//! hands the p+q−1 disjoint branches to callers that want to spread them
//! over threads. Per-branch tallies fit in `u64` (at most 17!! ≈ 3.4 · 10⁷
//! leaves per branch at the default ceiling).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::exact::factorial;
use crate::ground::{
    standard_rotation, CycleDistribution, GroundError, GroundSet, MixedFilter, PairingCursor,
};
use crate::series::SeriesSpec;

/// Cycle counter for μγ⁻¹ given μ as a partner slice. Reused across leaves;
/// `gamma_inv[x]` is γ⁻¹(x).
struct FaceCounter {
    gamma_inv: Vec<usize>,
    seen: Vec<bool>,
}

impl FaceCounter {
    fn new(ground: GroundSet) -> Result<FaceCounter, GroundError> {
        let gamma = standard_rotation(ground)?;
        let gamma_inv: Vec<usize> = (0..ground.size())
            .map(|x| gamma.inverse().apply(x))
            .collect();
        Ok(FaceCounter {
            gamma_inv,
            seen: vec![false; ground.size()],
        })
    }

    fn count(&mut self, partner: &[usize]) -> usize {
        self.seen.iter_mut().for_each(|s| *s = false);
        let mut cycles = 0;
        for start in 0..partner.len() {
            if self.seen[start] {
                continue;
            }
            cycles += 1;
            let mut at = start;
            while !self.seen[at] {
                self.seen[at] = true;
                at = partner[self.gamma_inv[at]];
            }
        }
        cycles
    }
}

/// Drains a cursor, tallying the cycle count of μγ⁻¹ for every pairing it
/// visits.
pub fn tally_cursor(cursor: &mut PairingCursor) -> Result<CycleDistribution, GroundError> {
    let mut counter = FaceCounter::new(cursor.ground())?;
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    while cursor.advance() {
        *counts.entry(counter.count(cursor.partners())).or_default() += 1;
    }
    Ok(CycleDistribution::from_counts(
        counts.into_iter().map(|(k, n)| (k, BigUint::from(n))),
    ))
}

/// The p+q−1 disjoint branch cursors covering the whole pairing space, split
/// by the partner of the first point. Draining them all (in any order, on
/// any threads) and merging tallies equals one full walk.
pub fn branch_cursors(
    ground: GroundSet,
    filter: MixedFilter,
) -> Result<Vec<PairingCursor>, GroundError> {
    (1..ground.size())
        .map(|t| PairingCursor::branch(ground, filter, t))
        .collect()
}

/// Cycle-count distribution over every pairing of [p] ∪ [q]′ with exactly s
/// mixed pairs, by brute enumeration.
pub fn brute_distribution(spec: &SeriesSpec) -> Result<CycleDistribution, GroundError> {
    let mut cursor = PairingCursor::new(spec.ground(), MixedFilter::Exactly(spec.s()))?;
    tally_cursor(&mut cursor)
}

/// One full walk over all pairings of the ground set, bucketed by mixed-pair
/// count.
pub fn brute_distribution_by_mixed(
    ground: GroundSet,
) -> Result<BTreeMap<usize, CycleDistribution>, GroundError> {
    let mut counter = FaceCounter::new(ground)?;
    let mut cursor = PairingCursor::new(ground, MixedFilter::Any)?;
    let mut counts: BTreeMap<usize, BTreeMap<usize, u64>> = BTreeMap::new();
    while cursor.advance() {
        let k = counter.count(cursor.partners());
        *counts
            .entry(cursor.mixed_count())
            .or_default()
            .entry(k)
            .or_default() += 1;
    }
    Ok(counts
        .into_iter()
        .map(|(s, by_k)| {
            (
                s,
                CycleDistribution::from_counts(
                    by_k.into_iter().map(|(k, n)| (k, BigUint::from(n))),
                ),
            )
        })
        .collect())
}

/// One-vertex distribution: cycle counts of μγ⁻¹ over all pairings of [p]
/// alone (q = 0).
pub fn brute_hz_distribution(p: usize) -> Result<CycleDistribution, GroundError> {
    let mut cursor = PairingCursor::new(GroundSet::new(p, 0), MixedFilter::Any)?;
    tally_cursor(&mut cursor)
}

/// Values of the brute-force series at x = 0, 1, …, upto: the evaluation
/// Σ_k count(k) xᵏ of the distribution polynomial. Forward differences of
/// these values recover the binomial-basis coefficients.
pub fn brute_series_values(spec: &SeriesSpec, upto: u64) -> Result<Vec<BigUint>, GroundError> {
    let dist = brute_distribution(spec)?;
    Ok((0..=upto).map(|x| dist.evaluate(x)).collect())
}

/// Rooted two-vertex maps by genus, counted independently of the pairing
/// model: enumerate rotation systems on labelled half-edges (s bridges,
/// (p−s)/2 loops at the first vertex, (q−s)/2 at the second), read the face
/// count off ν∘ε, and divide the tally by the relabelling group
/// s!  ℓ₁! 2^ℓ₁  ℓ₂! 2^ℓ₂ (doubled when p = q for the vertex swap), times
/// 2n root choices. Automorphisms act freely on roots, so the division is
/// exact, and is asserted.
pub fn brute_rooted_maps(spec: &SeriesSpec) -> BTreeMap<usize, BigUint> {
    let (p, q, s) = (spec.p(), spec.q(), spec.s());
    let n = spec.edges();
    let (l1, l2) = ((p - s) / 2, (q - s) / 2);

    // Global end ids: vertex 1 holds 0..p (bridges first, then loop ends in
    // side pairs), vertex 2 holds p..p+q likewise.
    let mut epsilon = vec![0usize; 2 * n];
    for t in 0..s {
        epsilon[t] = p + t;
        epsilon[p + t] = t;
    }
    for t in 0..l1 {
        epsilon[s + 2 * t] = s + 2 * t + 1;
        epsilon[s + 2 * t + 1] = s + 2 * t;
    }
    for t in 0..l2 {
        epsilon[p + s + 2 * t] = p + s + 2 * t + 1;
        epsilon[p + s + 2 * t + 1] = p + s + 2 * t;
    }

    // Anchor each vertex's cyclic order at its first bridge end (s ≥ 1).
    let mut rest1: Vec<usize> = (1..p).collect();
    let mut rest2: Vec<usize> = (p + 1..p + q).collect();
    let mut nu = vec![0usize; 2 * n];
    let mut faces: BTreeMap<usize, u64> = BTreeMap::new();
    let mut seen = vec![false; 2 * n];
    let mut order1: Vec<usize> = Vec::with_capacity(p);
    let count_for = |nu: &[usize], seen: &mut [bool]| {
        seen.iter_mut().for_each(|s| *s = false);
        let mut cycles = 0;
        for start in 0..nu.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                at = nu[epsilon[at]];
            }
        }
        cycles
    };
    for_each_permutation(&mut rest1, &mut |tail1| {
        order1.clear();
        order1.push(0);
        order1.extend_from_slice(tail1);
        for i in 0..p {
            nu[order1[i]] = order1[(i + 1) % p];
        }
        for_each_permutation(&mut rest2, &mut |tail2| {
            nu[p] = *tail2.first().unwrap_or(&p);
            for i in 0..tail2.len() {
                nu[tail2[i]] = if i + 1 < tail2.len() { tail2[i + 1] } else { p };
            }
            let k = count_for(&nu, &mut seen);
            *faces.entry(k).or_default() += 1;
        });
    });

    let two = BigUint::from(2u8);
    let mut group = factorial(s as u64)
        * factorial(l1 as u64)
        * two.pow(l1 as u32)
        * factorial(l2 as u64)
        * two.pow(l2 as u32);
    if p == q {
        group *= &two;
    }
    let roots = BigUint::from(2 * n);
    faces
        .into_iter()
        .map(|(k, tally)| {
            debug_assert!(k <= n && (n - k) % 2 == 0, "two-vertex face parity");
            let genus = (n - k) / 2;
            let (count, rem) = (BigUint::from(tally) * &roots).div_rem(&group);
            assert!(rem == BigUint::from(0u8), "root orbits divide evenly");
            (genus, count)
        })
        .collect()
}

fn for_each_permutation(items: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    fn rec(items: &mut Vec<usize>, at: usize, f: &mut impl FnMut(&[usize])) {
        if at == items.len() {
            f(items);
            return;
        }
        for t in at..items.len() {
            items.swap(at, t);
            rec(items, at + 1, f);
            items.swap(at, t);
        }
    }
    rec(items, 0, f);
}
