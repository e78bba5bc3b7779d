//! The ground set [p] ∪ [q]′, permutations and pairings on it, and exact
//! cycle-count distributions.
//!
//! Points are encoded as indices 0..p+q: unprimed i ↦ i−1 and primed
//! j′ ↦ p+j−1. The encoding is private to this crate; every external surface
//! (display, parsing of fixtures) speaks in `Point` values rendered as `7`
//! or `3'`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Sizes of the two rows of the ground set [p] ∪ [q]′.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroundSet {
    p: usize,
    q: usize,
}

impl GroundSet {
    pub fn new(p: usize, q: usize) -> GroundSet {
        GroundSet { p, q }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn size(&self) -> usize {
        self.p + self.q
    }

    /// Encoded index of a point, or None when the point is out of range.
    pub fn encode(&self, point: Point) -> Option<usize> {
        match point {
            Point::Unprimed(i) if 1 <= i && i <= self.p => Some(i - 1),
            Point::Primed(j) if 1 <= j && j <= self.q => Some(self.p + j - 1),
            _ => None,
        }
    }

    /// Point for an encoded index. Panics when idx ≥ p + q.
    pub fn decode(&self, idx: usize) -> Point {
        assert!(idx < self.size(), "index {idx} outside ground set");
        if idx < self.p {
            Point::Unprimed(idx + 1)
        } else {
            Point::Primed(idx - self.p + 1)
        }
    }

    /// True when the encoded index lies in the primed row.
    pub fn is_primed(&self, idx: usize) -> bool {
        idx >= self.p
    }

    /// True when the two encoded indices lie in different rows.
    pub fn is_mixed(&self, a: usize, b: usize) -> bool {
        self.is_primed(a) != self.is_primed(b)
    }
}

/// A point of the ground set: `Unprimed(i)` is i, `Primed(j)` is j′. Both
/// components are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Point {
    Unprimed(usize),
    Primed(usize),
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Unprimed(i) => write!(f, "{i}"),
            Point::Primed(j) => write!(f, "{j}'"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroundError {
    /// γ needs a nonempty first cycle.
    EmptyFirstRow,
    /// Image vector is not a bijection on the ground set.
    NotABijection,
    /// Operands live on different ground sets.
    GroundMismatch,
    /// Pairings need an even number of points.
    OddGroundSet,
    /// Requested mixed-pair count s violates s ≤ min(p,q) or s ≡ p ≡ q (mod 2).
    InfeasibleMixed { p: usize, q: usize, s: usize },
    /// A point fell outside the ground set.
    PointOutOfRange,
    /// Partner map is not a fixed-point-free involution.
    NotAPairing,
}

impl fmt::Display for GroundError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroundError::EmptyFirstRow => write!(f, "rotation needs p >= 1"),
            GroundError::NotABijection => write!(f, "images do not form a bijection"),
            GroundError::GroundMismatch => write!(f, "ground sets differ"),
            GroundError::OddGroundSet => write!(f, "p + q must be even"),
            GroundError::InfeasibleMixed { p, q, s } => write!(
                f,
                "no pairing of [{p}] u [{q}]' has exactly {s} mixed pairs"
            ),
            GroundError::PointOutOfRange => write!(f, "point outside ground set"),
            GroundError::NotAPairing => {
                write!(f, "partner map is not a fixed-point-free involution")
            }
        }
    }
}

/// A permutation of the ground set, stored as its image vector on encoded
/// indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    ground: GroundSet,
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(ground: GroundSet) -> Permutation {
        Permutation {
            ground,
            images: (0..ground.size()).collect(),
        }
    }

    /// Builds from an image vector on encoded indices, checking bijectivity.
    pub fn from_images(ground: GroundSet, images: Vec<usize>) -> Result<Permutation, GroundError> {
        if images.len() != ground.size() {
            return Err(GroundError::NotABijection);
        }
        let mut seen = vec![false; images.len()];
        for &img in &images {
            if img >= images.len() || seen[img] {
                return Err(GroundError::NotABijection);
            }
            seen[img] = true;
        }
        Ok(Permutation { ground, images })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn apply(&self, idx: usize) -> usize {
        self.images[idx]
    }

    pub fn apply_point(&self, point: Point) -> Option<Point> {
        let idx = self.ground.encode(point)?;
        Some(self.ground.decode(self.images[idx]))
    }

    /// Composition acting as self-after-other: (self ∘ other)(i) =
    /// self(other(i)). This is the composition order used everywhere in the
    /// crate, in particular in μγ⁻¹.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, GroundError> {
        if self.ground != other.ground {
            return Err(GroundError::GroundMismatch);
        }
        let images = (0..self.images.len())
            .map(|i| self.images[other.images[i]])
            .collect();
        Ok(Permutation {
            ground: self.ground,
            images,
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation {
            ground: self.ground,
            images,
        }
    }

    /// Cycles as encoded indices; each cycle starts at its smallest element
    /// and cycles are sorted by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                cycle.push(at);
                at = self.images[at];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                at = self.images[at];
            }
        }
        count
    }

    pub fn is_fixed_point_free_involution(&self) -> bool {
        (0..self.images.len())
            .all(|i| self.images[i] != i && self.images[self.images[i]] == i)
    }
}

/// The rotation γ = (1 2 … p)(1′ 2′ … q′). The second cycle is dropped when
/// q = 0; p must be positive.
pub fn standard_rotation(ground: GroundSet) -> Result<Permutation, GroundError> {
    if ground.p() == 0 {
        return Err(GroundError::EmptyFirstRow);
    }
    let (p, q) = (ground.p(), ground.q());
    let mut images = vec![0; p + q];
    for i in 0..p {
        images[i] = (i + 1) % p;
    }
    for j in 0..q {
        images[p + j] = p + (j + 1) % q;
    }
    Ok(Permutation { ground, images })
}

/// A pairing: fixed-point-free involution of the ground set, stored as the
/// partner of every encoded index.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pairing {
    ground: GroundSet,
    partner: Vec<usize>,
}

impl Pairing {
    /// Builds from a list of point pairs which must tile the ground set.
    pub fn from_pairs(ground: GroundSet, pairs: &[(Point, Point)]) -> Result<Pairing, GroundError> {
        let n = ground.size();
        if n % 2 != 0 {
            return Err(GroundError::OddGroundSet);
        }
        if pairs.len() * 2 != n {
            return Err(GroundError::NotAPairing);
        }
        let mut partner = vec![usize::MAX; n];
        for &(a, b) in pairs {
            let ai = ground.encode(a).ok_or(GroundError::PointOutOfRange)?;
            let bi = ground.encode(b).ok_or(GroundError::PointOutOfRange)?;
            if ai == bi || partner[ai] != usize::MAX || partner[bi] != usize::MAX {
                return Err(GroundError::NotAPairing);
            }
            partner[ai] = bi;
            partner[bi] = ai;
        }
        Ok(Pairing { ground, partner })
    }

    /// Builds from a partner vector on encoded indices.
    pub fn from_partner_vec(ground: GroundSet, partner: Vec<usize>) -> Result<Pairing, GroundError> {
        if ground.size() % 2 != 0 {
            return Err(GroundError::OddGroundSet);
        }
        if partner.len() != ground.size() {
            return Err(GroundError::NotAPairing);
        }
        for (i, &j) in partner.iter().enumerate() {
            if j >= partner.len() || j == i || partner[j] != i {
                return Err(GroundError::NotAPairing);
            }
        }
        Ok(Pairing { ground, partner })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn partner(&self, idx: usize) -> usize {
        self.partner[idx]
    }

    /// Pairs as encoded (min, max) tuples, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len())
            .filter(|&i| i < self.partner[i])
            .map(|i| (i, self.partner[i]))
            .collect()
    }

    /// Pairs as points, each pair with its smaller encoded index first.
    pub fn point_pairs(&self) -> Vec<(Point, Point)> {
        self.pairs()
            .into_iter()
            .map(|(a, b)| (self.ground.decode(a), self.ground.decode(b)))
            .collect()
    }

    /// Number of mixed pairs (one point in each row).
    pub fn mixed_count(&self) -> usize {
        self.pairs()
            .iter()
            .filter(|&&(a, b)| self.ground.is_mixed(a, b))
            .count()
    }

    pub fn as_permutation(&self) -> Permutation {
        Permutation {
            ground: self.ground,
            images: self.partner.clone(),
        }
    }

    /// Cycle count of μγ⁻¹ where μ is this pairing, the face count of the
    /// associated rooted map.
    pub fn face_count(&self) -> Result<usize, GroundError> {
        let gamma = standard_rotation(self.ground)?;
        Ok(self
            .as_permutation()
            .compose(&gamma.inverse())?
            .cycle_count())
    }
}

/// Restriction on the number of mixed pairs during enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MixedFilter {
    Any,
    Exactly(usize),
}

const UNPAIRED: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum CursorState {
    Fresh,
    Mid,
    Done,
}

/// Deterministic backtracking enumerator over pairings: repeatedly pair the
/// smallest unpaired point with each larger unpaired point in increasing
/// order, pruning branches that cannot reach the requested mixed-pair count.
///
/// The cursor exposes its state in place (`partners`, `mixed_count`) so the
/// brute-force oracle can tally without allocating one `Pairing` per leaf;
/// `PairingIter` wraps it into an ordinary iterator.
pub struct PairingCursor {
    ground: GroundSet,
    filter: MixedFilter,
    partner: Vec<usize>,
    stack: Vec<(usize, usize)>,
    locked: usize,
    mixed: usize,
    free_row1: usize,
    free_row2: usize,
    state: CursorState,
}

impl PairingCursor {
    pub fn new(ground: GroundSet, filter: MixedFilter) -> Result<PairingCursor, GroundError> {
        Self::check_params(ground, filter)?;
        Ok(PairingCursor {
            ground,
            filter,
            partner: vec![UNPAIRED; ground.size()],
            stack: Vec::new(),
            locked: 0,
            mixed: 0,
            free_row1: ground.p(),
            free_row2: ground.q(),
            state: CursorState::Fresh,
        })
    }

    /// Cursor restricted to pairings whose first pair is (0, first_partner)
    /// in encoded indices. The p+q−1 branches partition the full run, which
    /// is what the oracle parallelizes over.
    pub fn branch(
        ground: GroundSet,
        filter: MixedFilter,
        first_partner: usize,
    ) -> Result<PairingCursor, GroundError> {
        Self::check_params(ground, filter)?;
        if first_partner == 0 || first_partner >= ground.size() {
            return Err(GroundError::PointOutOfRange);
        }
        let mut cursor = PairingCursor {
            ground,
            filter,
            partner: vec![UNPAIRED; ground.size()],
            stack: Vec::new(),
            locked: 1,
            mixed: 0,
            free_row1: ground.p(),
            free_row2: ground.q(),
            state: CursorState::Fresh,
        };
        cursor.pair(0, first_partner);
        cursor.stack.push((0, first_partner));
        Ok(cursor)
    }

    fn check_params(ground: GroundSet, filter: MixedFilter) -> Result<(), GroundError> {
        if ground.size() % 2 != 0 {
            return Err(GroundError::OddGroundSet);
        }
        if let MixedFilter::Exactly(s) = filter {
            let (p, q) = (ground.p(), ground.q());
            if s > p.min(q) || s % 2 != p % 2 || s % 2 != q % 2 {
                return Err(GroundError::InfeasibleMixed { p, q, s });
            }
        }
        Ok(())
    }

    fn pair(&mut self, i: usize, j: usize) {
        self.partner[i] = j;
        self.partner[j] = i;
        if self.ground.is_primed(i) {
            self.free_row2 -= 1;
        } else {
            self.free_row1 -= 1;
        }
        if self.ground.is_primed(j) {
            self.free_row2 -= 1;
        } else {
            self.free_row1 -= 1;
        }
        if self.ground.is_mixed(i, j) {
            self.mixed += 1;
        }
    }

    fn unpair(&mut self, i: usize, j: usize) {
        self.partner[i] = UNPAIRED;
        self.partner[j] = UNPAIRED;
        if self.ground.is_primed(i) {
            self.free_row2 += 1;
        } else {
            self.free_row1 += 1;
        }
        if self.ground.is_primed(j) {
            self.free_row2 += 1;
        } else {
            self.free_row1 += 1;
        }
        if self.ground.is_mixed(i, j) {
            self.mixed -= 1;
        }
    }

    /// Whether the remaining free points can still hit the filter after
    /// pairing (i, j). Needs t = s − mixed more mixed pairs from r1 and r2
    /// free points per row: 0 ≤ t ≤ min(r1, r2) with r1 − t even.
    fn feasible_after(&self, i: usize, j: usize) -> bool {
        let MixedFilter::Exactly(s) = self.filter else {
            return true;
        };
        let mut r1 = self.free_row1;
        let mut r2 = self.free_row2;
        let mut mixed = self.mixed;
        for idx in [i, j] {
            if self.ground.is_primed(idx) {
                r2 -= 1;
            } else {
                r1 -= 1;
            }
        }
        if self.ground.is_mixed(i, j) {
            mixed += 1;
        }
        if mixed > s {
            return false;
        }
        let t = s - mixed;
        t <= r1.min(r2) && (r1 - t) % 2 == 0
    }

    fn smallest_unpaired(&self) -> Option<usize> {
        self.partner.iter().position(|&x| x == UNPAIRED)
    }

    fn next_candidate(&self, i: usize, from: usize) -> Option<usize> {
        (from.max(i + 1)..self.partner.len())
            .find(|&j| self.partner[j] == UNPAIRED && self.feasible_after(i, j))
    }

    /// Moves to the next complete pairing; false once exhausted.
    pub fn advance(&mut self) -> bool {
        let mut backtracking = match self.state {
            CursorState::Done => return false,
            CursorState::Fresh => {
                self.state = CursorState::Mid;
                false
            }
            CursorState::Mid => true,
        };
        loop {
            if backtracking {
                if self.stack.len() <= self.locked {
                    self.state = CursorState::Done;
                    return false;
                }
                let (i, j) = self.stack.pop().expect("nonempty stack");
                self.unpair(i, j);
                match self.next_candidate(i, j + 1) {
                    Some(j2) => {
                        self.pair(i, j2);
                        self.stack.push((i, j2));
                        backtracking = false;
                    }
                    None => continue,
                }
            } else {
                match self.smallest_unpaired() {
                    None => return true,
                    Some(i) => match self.next_candidate(i, i + 1) {
                        Some(j) => {
                            self.pair(i, j);
                            self.stack.push((i, j));
                        }
                        None => backtracking = true,
                    },
                }
            }
        }
    }

    /// Partner vector of the current pairing; valid only after `advance`
    /// returned true.
    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    pub fn mixed_count(&self) -> usize {
        self.mixed
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn to_pairing(&self) -> Pairing {
        debug_assert!(self.partner.iter().all(|&x| x != UNPAIRED));
        Pairing {
            ground: self.ground,
            partner: self.partner.clone(),
        }
    }
}

/// Iterator over all pairings of a ground set in the cursor's canonical
/// order, optionally filtered by mixed-pair count.
pub struct PairingIter {
    cursor: PairingCursor,
}

impl Iterator for PairingIter {
    type Item = Pairing;

    fn next(&mut self) -> Option<Pairing> {
        if self.cursor.advance() {
            Some(self.cursor.to_pairing())
        } else {
            None
        }
    }
}

pub fn enumerate_pairings(
    ground: GroundSet,
    filter: MixedFilter,
) -> Result<PairingIter, GroundError> {
    Ok(PairingIter {
        cursor: PairingCursor::new(ground, filter)?,
    })
}

/// Exact distribution of a statistic k over a finite enumeration: counts how
/// many objects attained each k. Zero counts are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CycleDistribution {
    counts: BTreeMap<usize, BigUint>,
}

impl CycleDistribution {
    pub fn new() -> CycleDistribution {
        CycleDistribution::default()
    }

    pub fn from_counts<I>(counts: I) -> CycleDistribution
    where
        I: IntoIterator<Item = (usize, BigUint)>,
    {
        let mut dist = CycleDistribution::new();
        for (k, n) in counts {
            dist.add(k, n);
        }
        dist
    }

    /// Adds one object with statistic k.
    pub fn record(&mut self, k: usize) {
        self.add(k, BigUint::one());
    }

    pub fn add(&mut self, k: usize, n: BigUint) {
        if !n.is_zero() {
            *self.counts.entry(k).or_insert_with(BigUint::zero) += n;
        }
    }

    pub fn merge(&mut self, other: &CycleDistribution) {
        for (&k, n) in &other.counts {
            self.add(k, n.clone());
        }
    }

    pub fn count(&self, k: usize) -> BigUint {
        self.counts.get(&k).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.counts.iter().map(|(&k, n)| (k, n))
    }

    pub fn support(&self) -> Vec<usize> {
        self.counts.keys().copied().collect()
    }

    /// Σ_k count(k) · x^k.
    pub fn evaluate(&self, x: u64) -> BigUint {
        let x = BigUint::from(x);
        self.counts
            .iter()
            .map(|(&k, n)| n * x.pow(k as u32))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::double_factorial;

    fn ground(p: usize, q: usize) -> GroundSet {
        GroundSet::new(p, q)
    }

    #[test]
    fn encoding_roundtrip() {
        let g = ground(3, 2);
        assert_eq!(g.encode(Point::Unprimed(1)), Some(0));
        assert_eq!(g.encode(Point::Unprimed(3)), Some(2));
        assert_eq!(g.encode(Point::Primed(1)), Some(3));
        assert_eq!(g.encode(Point::Primed(2)), Some(4));
        assert_eq!(g.encode(Point::Primed(3)), None);
        assert_eq!(g.encode(Point::Unprimed(0)), None);
        for idx in 0..g.size() {
            assert_eq!(g.encode(g.decode(idx)), Some(idx));
        }
    }

    #[test]
    fn rotation_cycles() {
        let g = ground(3, 2);
        let gamma = standard_rotation(g).unwrap();
        assert_eq!(gamma.cycles(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert_eq!(gamma.cycle_count(), 2);

        let g1 = ground(4, 0);
        let gamma1 = standard_rotation(g1).unwrap();
        assert_eq!(gamma1.cycle_count(), 1);

        assert_eq!(
            standard_rotation(ground(0, 2)),
            Err(GroundError::EmptyFirstRow)
        );
    }

    #[test]
    fn compose_is_self_after_other() {
        let g = ground(3, 0);
        let a = Permutation::from_images(g, vec![1, 0, 2]).unwrap();
        let b = Permutation::from_images(g, vec![0, 2, 1]).unwrap();
        // (a ∘ b)(1): b sends 0 to 0, a sends 0 to 1.
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab.apply(0), 1);
        assert_eq!(ab.apply(1), 2);
        assert_eq!(ab.apply(2), 0);
        let inv = ab.inverse();
        assert_eq!(ab.compose(&inv).unwrap(), Permutation::identity(g));
    }

    #[test]
    fn face_count_smallest_annular_case() {
        // p = q = 1: the single pairing {1, 1'} against γ = (1)(1') has
        // μγ⁻¹ = (1 1'), one cycle.
        let g = ground(1, 1);
        let mu = Pairing::from_pairs(g, &[(Point::Unprimed(1), Point::Primed(1))]).unwrap();
        assert_eq!(mu.face_count().unwrap(), 1);
        assert_eq!(mu.mixed_count(), 1);
    }

    #[test]
    fn enumeration_counts_match_double_factorials() {
        for (p, q) in [(2, 0), (4, 0), (3, 1), (2, 2), (3, 3), (4, 2)] {
            let total: usize = enumerate_pairings(ground(p, q), MixedFilter::Any)
                .unwrap()
                .count();
            let expected = double_factorial((p + q) as i64 - 1).unwrap();
            assert_eq!(BigUint::from(total), expected, "p={p} q={q}");
        }
    }

    #[test]
    fn filtered_enumeration_counts() {
        // C(p,s) C(q,s) s! (p−s−1)!! (q−s−1)!! with s mixed pairs.
        use crate::exact::{binomial, factorial};
        for (p, q) in [(3, 1), (2, 2), (4, 2), (3, 3), (5, 3)] {
            for s in 0..=p.min(q) {
                if s % 2 != p % 2 {
                    continue;
                }
                let got = enumerate_pairings(ground(p, q), MixedFilter::Exactly(s))
                    .unwrap()
                    .inspect(|mu| assert_eq!(mu.mixed_count(), s))
                    .count();
                let expected = binomial(p as u64, s as i64)
                    * binomial(q as u64, s as i64)
                    * factorial(s as u64)
                    * double_factorial(p as i64 - s as i64 - 1).unwrap()
                    * double_factorial(q as i64 - s as i64 - 1).unwrap();
                assert_eq!(BigUint::from(got), expected, "p={p} q={q} s={s}");
            }
        }
    }

    #[test]
    fn infeasible_filters_rejected() {
        assert!(matches!(
            enumerate_pairings(ground(3, 1), MixedFilter::Exactly(2)),
            Err(GroundError::InfeasibleMixed { .. })
        ));
        assert!(matches!(
            enumerate_pairings(ground(2, 2), MixedFilter::Exactly(3)),
            Err(GroundError::InfeasibleMixed { .. })
        ));
        assert!(matches!(
            enumerate_pairings(ground(3, 2), MixedFilter::Any),
            Err(GroundError::OddGroundSet)
        ));
    }

    #[test]
    fn branches_partition_enumeration() {
        let g = ground(4, 2);
        let full: Vec<Pairing> =
            enumerate_pairings(g, MixedFilter::Any).unwrap().collect();
        let mut stitched = Vec::new();
        for first in 1..g.size() {
            let mut cursor = PairingCursor::branch(g, MixedFilter::Any, first).unwrap();
            while cursor.advance() {
                stitched.push(cursor.to_pairing());
            }
        }
        assert_eq!(full, stitched);
    }

    #[test]
    fn enumeration_is_deterministic_and_duplicate_free() {
        let g = ground(3, 3);
        let a: Vec<Pairing> = enumerate_pairings(g, MixedFilter::Any).unwrap().collect();
        let b: Vec<Pairing> = enumerate_pairings(g, MixedFilter::Any).unwrap().collect();
        assert_eq!(a, b);
        let mut sorted = a.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), a.len());
    }

    #[test]
    fn distribution_basics() {
        let mut dist = CycleDistribution::new();
        dist.record(2);
        dist.record(2);
        dist.record(4);
        assert_eq!(dist.count(2), BigUint::from(2u32));
        assert_eq!(dist.count(3), BigUint::zero());
        assert_eq!(dist.total(), BigUint::from(3u32));
        assert_eq!(dist.support(), vec![2, 4]);
        // 2·x² + x⁴ at x = 3: 18 + 81.
        assert_eq!(dist.evaluate(3), BigUint::from(99u32));

        let mut other = CycleDistribution::new();
        other.record(4);
        dist.merge(&other);
        assert_eq!(dist.count(4), BigUint::from(2u32));
    }
}
