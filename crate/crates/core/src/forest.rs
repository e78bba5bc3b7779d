//! Rooted forests on [k] and the forest-completion bijection.
//!
//! A forest completion takes a base forest G with roots r_1 < … < r_m
//! (eliminated) and s_1 < … < s_n (surviving) plus a tuple
//! (a_1, …, a_m) ∈ [k]^{m−1} × S, where S is the set of vertices safe for G
//! (in a component rooted at some s_j), and produces a forest H ⊇ G whose
//! roots are exactly the surviving ones, together with a permutation of the
//! stages (the FCP). The map is a bijection, which is what turns tuple
//! counting k^{m−1}·|S| into superforest counting.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForestError {
    /// Vertices live in 1..=k.
    VertexOutOfRange(usize),
    /// Parent pointers contain a cycle.
    CyclicParents,
    /// Expected a root of the base forest.
    NotARoot(usize),
    /// Expected an arc of the forest.
    NotAnArc { from: usize, to: usize },
    /// The vertex already has a parent.
    HasParent(usize),
    /// Adding this arc would close a cycle.
    WouldCycle { from: usize, to: usize },
    /// Eliminated roots must be distinct and leave a survivor.
    BadElimination,
    /// Tuple length must match the eliminated-root count.
    TupleLength { expected: usize, got: usize },
    /// The final tuple entry must be safe (rooted at a survivor).
    UnsafeFinalEntry(usize),
    /// Arc removals must be distinct.
    DuplicateRemoval,
}

impl fmt::Display for ForestError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForestError::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            ForestError::CyclicParents => write!(f, "parent pointers contain a cycle"),
            ForestError::NotARoot(v) => write!(f, "vertex {v} is not a root"),
            ForestError::NotAnArc { from, to } => write!(f, "no arc {from} -> {to}"),
            ForestError::HasParent(v) => write!(f, "vertex {v} already has a parent"),
            ForestError::WouldCycle { from, to } => {
                write!(f, "arc {from} -> {to} would close a cycle")
            }
            ForestError::BadElimination => {
                write!(f, "eliminated roots must be distinct roots leaving a survivor")
            }
            ForestError::TupleLength { expected, got } => {
                write!(f, "tuple length {got}, expected {expected}")
            }
            ForestError::UnsafeFinalEntry(v) => {
                write!(f, "final tuple entry {v} is not safe")
            }
            ForestError::DuplicateRemoval => write!(f, "arc removals must be distinct"),
        }
    }
}

/// Forest of rooted trees on the vertex set [k] = {1, …, k}, stored as
/// parent pointers. Arcs are directed from child to parent; roots have no
/// parent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RootedForest {
    parent: Vec<Option<usize>>,
}

impl RootedForest {
    pub fn edgeless(k: usize) -> RootedForest {
        RootedForest {
            parent: vec![None; k],
        }
    }

    /// Builds from parent pointers indexed by vertex − 1, checking range and
    /// acyclicity.
    pub fn from_parents(parent: Vec<Option<usize>>) -> Result<RootedForest, ForestError> {
        let k = parent.len();
        for &p in &parent {
            if let Some(p) = p {
                if p < 1 || p > k {
                    return Err(ForestError::VertexOutOfRange(p));
                }
            }
        }
        let forest = RootedForest { parent };
        for v in 1..=k {
            forest.component_root(v).ok_or(ForestError::CyclicParents)?;
        }
        Ok(forest)
    }

    pub fn k(&self) -> usize {
        self.parent.len()
    }

    /// Parent of v, or None when v is a root.
    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v - 1]
    }

    pub fn is_root(&self, v: usize) -> bool {
        self.parent[v - 1].is_none()
    }

    /// Roots in increasing order.
    pub fn roots(&self) -> Vec<usize> {
        (1..=self.k()).filter(|&v| self.is_root(v)).collect()
    }

    /// Root of the component containing v; None if parent pointers cycle
    /// (only possible on unvalidated intermediate states).
    fn component_root(&self, v: usize) -> Option<usize> {
        let mut at = v;
        for _ in 0..=self.k() {
            match self.parent[at - 1] {
                None => return Some(at),
                Some(p) => at = p,
            }
        }
        None
    }

    /// Root of the component containing v. Panics on cyclic state, which
    /// validated forests never reach.
    pub fn root_of(&self, v: usize) -> usize {
        self.component_root(v).expect("validated forest is acyclic")
    }

    /// Arcs as (child, parent), sorted by child.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (1..=self.k())
            .filter_map(|v| self.parent[v - 1].map(|p| (v, p)))
            .collect()
    }

    /// True when every arc of `sub` is an arc of self.
    pub fn contains(&self, sub: &RootedForest) -> bool {
        sub.k() == self.k()
            && sub
                .arcs()
                .into_iter()
                .all(|(v, p)| self.parent[v - 1] == Some(p))
    }

    /// Adds the arc v → w; v must be a root and the arc must not close a
    /// cycle.
    pub fn with_arc(&self, v: usize, w: usize) -> Result<RootedForest, ForestError> {
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        if !self.is_root(v) {
            return Err(ForestError::HasParent(v));
        }
        if self.root_of(w) == v {
            return Err(ForestError::WouldCycle { from: v, to: w });
        }
        let mut next = self.clone();
        next.parent[v - 1] = Some(w);
        Ok(next)
    }

    /// Removes the arc v → w, which must be present.
    pub fn without_arc(&self, v: usize, w: usize) -> Result<RootedForest, ForestError> {
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        if self.parent[v - 1] != Some(w) {
            return Err(ForestError::NotAnArc { from: v, to: w });
        }
        let mut next = self.clone();
        next.parent[v - 1] = None;
        Ok(next)
    }

    fn check_vertex(&self, v: usize) -> Result<(), ForestError> {
        if v < 1 || v > self.k() {
            return Err(ForestError::VertexOutOfRange(v));
        }
        Ok(())
    }
}

/// Vertices safe for the base forest given the surviving roots: those in
/// components rooted at a survivor. Survivors must be roots.
pub fn safe_vertices(
    base: &RootedForest,
    survivors: &[usize],
) -> Result<Vec<usize>, ForestError> {
    let set: BTreeSet<usize> = survivors.iter().copied().collect();
    for &s in &set {
        base.check_vertex(s)?;
        if !base.is_root(s) {
            return Err(ForestError::NotARoot(s));
        }
    }
    Ok((1..=base.k())
        .filter(|&v| set.contains(&base.root_of(v)))
        .collect())
}

/// Result of a forward completion: the completed forest and the stage
/// permutation π (the FCP), with fcp[t] = π(t+1) on 1-based stages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completion {
    pub forest: RootedForest,
    pub fcp: Vec<usize>,
}

/// Result of an inverse completion: the tuple that generates the forest and
/// the stage permutation σ; the FCP of the corresponding forward run is
/// σ⁻¹.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inversion {
    pub tuple: Vec<usize>,
    pub sigma: Vec<usize>,
}

fn validate_elimination(
    base: &RootedForest,
    eliminated: &[usize],
) -> Result<Vec<usize>, ForestError> {
    let roots: BTreeSet<usize> = base.roots().into_iter().collect();
    let elim: BTreeSet<usize> = eliminated.iter().copied().collect();
    if elim.len() != eliminated.len() || eliminated.is_empty() {
        return Err(ForestError::BadElimination);
    }
    for &r in &elim {
        if !roots.contains(&r) {
            return Err(ForestError::NotARoot(r));
        }
    }
    let survivors: Vec<usize> = roots.difference(&elim).copied().collect();
    if survivors.is_empty() {
        return Err(ForestError::BadElimination);
    }
    Ok(survivors)
}

/// Forward forest-completion: eliminates the given roots of `base` in
/// increasing order, consuming `tuple` = (a_1, …, a_m) whose last entry must
/// be safe. Stage i pairs the i-th eliminated root with the current b_i: if
/// they sit in different components the arc goes to b_i, otherwise the arc
/// goes to b_m and the stage is swapped with the final one in both π and b.
pub fn fca_forward(
    base: &RootedForest,
    eliminated: &[usize],
    tuple: &[usize],
) -> Result<Completion, ForestError> {
    let survivors = validate_elimination(base, eliminated)?;
    let mut elim: Vec<usize> = eliminated.to_vec();
    elim.sort_unstable();
    let m = elim.len();
    if tuple.len() != m {
        return Err(ForestError::TupleLength {
            expected: m,
            got: tuple.len(),
        });
    }
    for &a in tuple {
        base.check_vertex(a)?;
    }
    let safe: BTreeSet<usize> = safe_vertices(base, &survivors)?.into_iter().collect();
    if !safe.contains(&tuple[m - 1]) {
        return Err(ForestError::UnsafeFinalEntry(tuple[m - 1]));
    }

    let mut forest = base.clone();
    let mut b = tuple.to_vec();
    let mut fcp: Vec<usize> = (1..=m).collect();
    for (t, &r) in elim.iter().enumerate() {
        // r is still a root here, so its component root is r itself.
        if forest.root_of(b[t]) != r {
            forest = forest.with_arc(r, b[t])?;
        } else {
            // At t = m−1 the two branches coincide, so the swap is a no-op.
            forest = forest.with_arc(r, b[m - 1])?;
            b.swap(t, m - 1);
            fcp.swap(t, m - 1);
        }
        // Invariant: b_m stays safe for the intermediate forest.
        debug_assert!(
            t + 1 == m || survivors.contains(&forest.root_of(b[m - 1])),
            "b_m must remain safe"
        );
    }
    debug_assert_eq!(
        forest.roots(),
        survivors,
        "completion roots must be the survivors"
    );
    Ok(Completion { forest, fcp })
}

/// Inverse forest-completion: given a completed forest and the arcs to
/// remove (one per eliminated root, as (root, target) pairs), reconstructs
/// the tuple and the stage permutation σ with π = σ⁻¹. Stages run backwards;
/// a stage whose removal leaves b_m unsafe swaps with the final stage.
pub fn fca_inverse(
    forest: &RootedForest,
    removals: &[(usize, usize)],
) -> Result<Inversion, ForestError> {
    let m = removals.len();
    if m == 0 {
        return Err(ForestError::BadElimination);
    }
    let sources: BTreeSet<usize> = removals.iter().map(|&(r, _)| r).collect();
    if sources.len() != m {
        return Err(ForestError::DuplicateRemoval);
    }
    for &(r, c) in removals {
        forest.check_vertex(r)?;
        forest.check_vertex(c)?;
        if forest.parent(r) != Some(c) {
            return Err(ForestError::NotAnArc { from: r, to: c });
        }
    }
    let survivors: BTreeSet<usize> = forest.roots().into_iter().collect();
    if survivors.is_empty() {
        return Err(ForestError::BadElimination);
    }

    let mut sorted = removals.to_vec();
    sorted.sort_unstable();
    let mut current = forest.clone();
    let mut b: Vec<usize> = sorted.iter().map(|&(_, c)| c).collect();
    let mut sigma: Vec<usize> = (1..=m).collect();
    for t in (0..m).rev() {
        let (r, c) = sorted[t];
        current = current.without_arc(r, c)?;
        if !survivors.contains(&current.root_of(b[m - 1])) {
            b.swap(t, m - 1);
            sigma.swap(t, m - 1);
        }
    }
    debug_assert!(
        survivors.contains(&current.root_of(b[m - 1])),
        "terminating tuple must end safe"
    );
    Ok(Inversion { tuple: b, sigma })
}

/// Number of completions of `base` after eliminating the given roots:
/// k^{m−1} · |S| with S the safe vertex set.
pub fn count_completions(
    base: &RootedForest,
    eliminated: &[usize],
) -> Result<BigUint, ForestError> {
    let survivors = validate_elimination(base, eliminated)?;
    let safe = safe_vertices(base, &survivors)?;
    let k = BigUint::from(base.k());
    Ok(k.pow(eliminated.len() as u32 - 1) * BigUint::from(safe.len()))
}

/// All forests H ⊇ base whose root set is exactly `target_roots`, by giving
/// every other base root a parent and keeping only the acyclic choices.
/// Intended for small k; the candidate space is k^m.
pub fn enumerate_superforests(
    base: &RootedForest,
    target_roots: &[usize],
) -> Result<Vec<RootedForest>, ForestError> {
    let target: BTreeSet<usize> = target_roots.iter().copied().collect();
    let roots: BTreeSet<usize> = base.roots().into_iter().collect();
    for &s in &target {
        if !roots.contains(&s) {
            return Err(ForestError::NotARoot(s));
        }
    }
    let eliminated: Vec<usize> = roots.difference(&target).copied().collect();
    if eliminated.is_empty() || target.is_empty() {
        return Err(ForestError::BadElimination);
    }
    let k = base.k();
    let mut out = Vec::new();
    let mut choice = vec![1usize; eliminated.len()];
    'outer: loop {
        let mut parent: Vec<Option<usize>> = (1..=k).map(|v| base.parent(v)).collect();
        for (t, &r) in eliminated.iter().enumerate() {
            parent[r - 1] = Some(choice[t]);
        }
        if let Ok(forest) = RootedForest::from_parents(parent) {
            out.push(forest);
        }
        // Mixed-radix increment over [1, k]^m.
        for t in 0..choice.len() {
            if choice[t] < k {
                choice[t] += 1;
                continue 'outer;
            }
            choice[t] = 1;
        }
        break;
    }
    Ok(out)
}

/// All rooted forests on [k], enumerated as acyclic parent vectors. Oracle
/// helper for small k.
pub fn enumerate_forests(k: usize) -> Vec<RootedForest> {
    let mut out = Vec::new();
    // Parent choice per vertex: 0 = none, else the parent vertex.
    let mut choice = vec![0usize; k];
    'outer: loop {
        if !choice.iter().enumerate().any(|(i, &c)| c == i + 1) {
            let parent: Vec<Option<usize>> = choice
                .iter()
                .map(|&c| if c == 0 { None } else { Some(c) })
                .collect();
            if let Ok(forest) = RootedForest::from_parents(parent) {
                out.push(forest);
            }
        }
        for t in 0..k {
            if choice[t] < k {
                choice[t] += 1;
                continue 'outer;
            }
            choice[t] = 0;
        }
        break;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn forest(parents: &[usize]) -> RootedForest {
        // 0 encodes a root.
        RootedForest::from_parents(
            parents
                .iter()
                .map(|&p| if p == 0 { None } else { Some(p) })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn construction_and_roots() {
        let f = forest(&[0, 1, 1, 0, 4]);
        assert_eq!(f.roots(), vec![1, 4]);
        assert_eq!(f.root_of(3), 1);
        assert_eq!(f.root_of(5), 4);
        assert_eq!(f.arcs(), vec![(2, 1), (3, 1), (5, 4)]);
        assert!(RootedForest::from_parents(vec![Some(2), Some(1)]).is_err());
        assert!(RootedForest::from_parents(vec![Some(1)]).is_err());
        assert!(RootedForest::from_parents(vec![Some(3)]).is_err());
    }

    #[test]
    fn arc_edits() {
        let f = forest(&[0, 1, 0]);
        let g = f.with_arc(3, 2).unwrap();
        assert_eq!(g.parent(3), Some(2));
        assert_eq!(g.roots(), vec![1]);
        assert!(f.with_arc(2, 3).is_err()); // 2 has a parent
        assert!(f.with_arc(1, 2).is_err()); // would cycle
        assert_eq!(g.without_arc(3, 2).unwrap(), f);
        assert!(f.without_arc(3, 2).is_err());
    }

    #[test]
    fn safe_vertex_sets() {
        let f = forest(&[0, 1, 0, 3, 0]);
        assert_eq!(safe_vertices(&f, &[1]).unwrap(), vec![1, 2]);
        assert_eq!(safe_vertices(&f, &[1, 5]).unwrap(), vec![1, 2, 5]);
        assert!(safe_vertices(&f, &[2]).is_err());
    }

    #[test]
    fn forward_trace() {
        // k = 3, base edgeless, eliminate 1 and 2, survive 3.
        // Tuple (1, 3): stage 1 has b_1 = 1 in the component of r_1 = 1, so
        // the arc goes to b_2 = 3 and the stages swap; stage 2 adds 2 → 1.
        let base = RootedForest::edgeless(3);
        let done = fca_forward(&base, &[1, 2], &[1, 3]).unwrap();
        assert_eq!(done.forest, forest(&[3, 1, 0]));
        assert_eq!(done.fcp, vec![2, 1]);

        // Tuple (3, 3): both stages take the plain branch.
        let done = fca_forward(&base, &[1, 2], &[3, 3]).unwrap();
        assert_eq!(done.forest, forest(&[3, 3, 0]));
        assert_eq!(done.fcp, vec![1, 2]);
    }

    #[test]
    fn forward_validation() {
        let base = RootedForest::edgeless(3);
        assert!(matches!(
            fca_forward(&base, &[1, 2], &[3, 1]),
            Err(ForestError::UnsafeFinalEntry(1))
        ));
        assert!(matches!(
            fca_forward(&base, &[1, 2], &[3]),
            Err(ForestError::TupleLength { .. })
        ));
        assert!(matches!(
            fca_forward(&base, &[1, 2, 3], &[1, 2, 3]),
            Err(ForestError::BadElimination)
        ));
        let based = forest(&[0, 1, 0]);
        assert!(matches!(
            fca_forward(&based, &[2], &[1]),
            Err(ForestError::NotARoot(2))
        ));
    }

    #[test]
    fn inverse_reverses_forward() {
        // Last entry must be safe: only 3 qualifies on an edgeless base with
        // survivor 3.
        let base = RootedForest::edgeless(3);
        for tuple in [[1, 3], [2, 3], [3, 3]] {
            let done = fca_forward(&base, &[1, 2], &tuple).unwrap();
            let removals: Vec<(usize, usize)> = [1, 2]
                .iter()
                .map(|&r| (r, done.forest.parent(r).unwrap()))
                .collect();
            let back = fca_inverse(&done.forest, &removals).unwrap();
            assert_eq!(back.tuple, tuple.to_vec(), "tuple {tuple:?}");
            // σ⁻¹ = π.
            let mut pi = vec![0; 2];
            for (t, &s) in back.sigma.iter().enumerate() {
                pi[s - 1] = t + 1;
            }
            assert_eq!(pi, done.fcp, "tuple {tuple:?}");
        }
    }

    #[test]
    fn completion_count_matches_enumeration() {
        // Base edgeless on [4], eliminate {1, 2}, survive {3, 4}: the safe
        // set is {3, 4}, so count = 4^1 · 2 = 8, matching the superforests
        // with roots {3, 4} (3 × 3 parent choices minus the 2-cycle).
        let base = RootedForest::edgeless(4);
        let count = count_completions(&base, &[1, 2]).unwrap();
        assert_eq!(count, BigUint::from(8u32));
        let supers = enumerate_superforests(&base, &[3, 4]).unwrap();
        assert_eq!(supers.len(), 8);
    }

    #[test]
    fn edgeless_complete_elimination_counts_trees() {
        // Eliminating all but one root of the edgeless base on [k]: m = k−1
        // stages with |S| = 1 gives k^{k−2} completions per survivor, and
        // summing over the k survivors yields Cayley's k^{k−1} rooted trees.
        for k in 2..=5usize {
            let base = RootedForest::edgeless(k);
            let mut total = BigUint::from(0u32);
            for survivor in 1..=k {
                let eliminated: Vec<usize> =
                    (1..=k).filter(|&v| v != survivor).collect();
                total += count_completions(&base, &eliminated).unwrap();
            }
            let cayley = BigUint::from(k).pow(k as u32 - 1);
            assert_eq!(total, cayley, "k={k}");
        }
    }

    #[test]
    fn forest_enumeration_sizes() {
        // Rooted forests on [k] number (k+1)^{k−1}.
        let sizes: Vec<usize> = (0..=5).map(|k| enumerate_forests(k).len()).collect();
        assert_eq!(sizes, vec![1, 1, 3, 16, 125, 1296]);
    }
}
