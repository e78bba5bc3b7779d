//! Paired arrays and the reductions between them.
//!
//! A paired array is a 2×k grid of cells holding vertices, a perfect
//! matching on the vertices, and a nonempty set of marked columns per row.
//! Valid arrays satisfy three conditions: balance (each column meets the
//! same number of mixed pairs in both rows), nonemptiness (columns outside
//! the marked sets hold a vertex), and the forest condition (the rightmost
//! digraph of each row is a forest rooted at marked columns).
//!
//! Canonical arrays (one mark per row) are exactly the images of paired
//! surjections, and the labels are recoverable from the geometry alone.
//! Removing redundant pairs (ξ) reduces canonical arrays to minimal ones;
//! removing the remaining non-mixed pairs (ζ) reduces minimal arrays to
//! vertical ones, with forest completions keeping the bookkeeping
//! bijective. Vertical arrays are counted by closed forms, which is where
//! the two-vertex series comes from.
//!
//! Columns are 1-based everywhere; rows are named 1 and 2. Vertices carry
//! opaque ids internally and are exposed positionally: the r-th vertex of a
//! row in reading order, or the r-th object once boxes (marked-cell
//! sentinels, always rightmost) join the numbering.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::forest::{fca_forward, fca_inverse, ForestError, RootedForest};
use crate::ground::{standard_rotation, GroundError, GroundSet, Pairing, Point};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArrayError {
    /// Cell shapes must list exactly k cells per row.
    ShapeMismatch,
    /// Marked columns must be distinct values in 1..=k, at least one per row.
    BadMarks,
    /// The pair list is not a perfect matching on the vertex positions.
    BadMatching,
    /// A referenced position does not exist.
    PositionOutOfRange,
    /// The array violates the balance, nonemptiness, or forest condition.
    Invalid(ConditionViolation),
    /// Expected a canonical array (exactly one mark per row).
    NotCanonical,
    /// Expected a minimal array (canonical without redundant pairs).
    NotMinimal,
    /// Expected a vertical array (every pair mixed).
    NotVertical,
    /// Expected a full vertical array (every column inhabited).
    NotFull,
    /// Label recovery found no unlabelled vertex in the required column.
    RecoveryStuck { row: usize },
    /// Label recovery closed the row on the wrong column.
    RecoveryWrap { row: usize },
    /// The surjection condition phi(mu(x)) = phi(gamma(x)) failed.
    ConditionOne,
    /// phi must cover every column.
    NotSurjective,
    /// Numbers passed to an inverse are out of range or collide.
    BadNumbers,
    /// The last kappa entry must sit in a component rooted at a marked
    /// column.
    KeyDependency,
    /// Underlying permutation error.
    Ground(GroundError),
    /// Underlying forest error.
    Forest(ForestError),
}

impl From<GroundError> for ArrayError {
    fn from(e: GroundError) -> ArrayError {
        ArrayError::Ground(e)
    }
}

impl From<ForestError> for ArrayError {
    fn from(e: ForestError) -> ArrayError {
        ArrayError::Forest(e)
    }
}

impl fmt::Display for ArrayError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrayError::ShapeMismatch => write!(f, "cell shape does not match k"),
            ArrayError::BadMarks => write!(f, "marks must be distinct columns, one or more per row"),
            ArrayError::BadMatching => write!(f, "pairs do not form a perfect matching"),
            ArrayError::PositionOutOfRange => write!(f, "position out of range"),
            ArrayError::Invalid(v) => write!(f, "array condition violated: {v}"),
            ArrayError::NotCanonical => write!(f, "expected a canonical array"),
            ArrayError::NotMinimal => write!(f, "expected a minimal array"),
            ArrayError::NotVertical => write!(f, "expected a vertical array"),
            ArrayError::NotFull => write!(f, "expected a full vertical array"),
            ArrayError::RecoveryStuck { row } => {
                write!(f, "label recovery stuck in row {row}")
            }
            ArrayError::RecoveryWrap { row } => {
                write!(f, "label recovery wrapped to the wrong column in row {row}")
            }
            ArrayError::ConditionOne => write!(f, "phi(mu(x)) = phi(gamma(x)) fails"),
            ArrayError::NotSurjective => write!(f, "phi misses a column"),
            ArrayError::BadNumbers => write!(f, "numbers out of range or colliding"),
            ArrayError::KeyDependency => {
                write!(f, "final kappa entry not rooted at a marked column")
            }
            ArrayError::Ground(e) => write!(f, "{e}"),
            ArrayError::Forest(e) => write!(f, "{e}"),
        }
    }
}

/// A single violation of the paired-array conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConditionViolation {
    /// Column meets a different number of mixed pairs in each row.
    Balance { col: usize, row1: usize, row2: usize },
    /// Unmarked column with no vertex in either row.
    Empty { col: usize },
    /// The rightmost digraph of this row walks a cycle.
    ForestCycle { row: usize },
    /// A rightmost walk of this row dies at an unmarked column.
    ForestSink { row: usize, col: usize },
}

impl fmt::Display for ConditionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConditionViolation::Balance { col, row1, row2 } => write!(
                f,
                "column {col} meets {row1} mixed pairs in row 1 but {row2} in row 2"
            ),
            ConditionViolation::Empty { col } => {
                write!(f, "unmarked column {col} is empty")
            }
            ConditionViolation::ForestCycle { row } => {
                write!(f, "row {row} rightmost digraph has a cycle")
            }
            ConditionViolation::ForestSink { row, col } => {
                write!(f, "row {row} rightmost walk dies at unmarked column {col}")
            }
        }
    }
}

/// Report of every condition violation found by `PairedArray::validate`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConditionReport {
    pub violations: Vec<ConditionViolation>,
}

impl ConditionReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A 2×k paired array. Structural identity is positional: two arrays are
/// equal when they have the same cell shapes, marks, and matching on
/// reading-order positions.
#[derive(Clone, Debug)]
pub struct PairedArray {
    cells: [Vec<Vec<u32>>; 2],
    partner: BTreeMap<u32, u32>,
    marks: [BTreeSet<usize>; 2],
    next_id: u32,
}

/// Objects of a row once boxes join the vertices: a box stands rightmost in
/// each marked cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum RowObj {
    Vertex(u32),
    Boxed,
}

impl PairedArray {
    /// Builds an array from cell shapes, a matching on positional points
    /// (`Unprimed(i)` = i-th row-1 vertex in reading order, `Primed(j)` =
    /// j-th row-2 vertex), and marked columns.
    pub fn from_layout(
        k: usize,
        row1_shape: &[usize],
        row2_shape: &[usize],
        pairs: &[(Point, Point)],
        row1_marks: &[usize],
        row2_marks: &[usize],
    ) -> Result<PairedArray, ArrayError> {
        if row1_shape.len() != k || row2_shape.len() != k || k == 0 {
            return Err(ArrayError::ShapeMismatch);
        }
        let p: usize = row1_shape.iter().sum();
        let q: usize = row2_shape.iter().sum();
        let mut marks = [BTreeSet::new(), BTreeSet::new()];
        for (slot, given) in marks.iter_mut().zip([row1_marks, row2_marks]) {
            for &c in given {
                if c < 1 || c > k || !slot.insert(c) {
                    return Err(ArrayError::BadMarks);
                }
            }
            if slot.is_empty() {
                return Err(ArrayError::BadMarks);
            }
        }
        // Ids: row-1 positions 0..p, row-2 positions p..p+q.
        let ground = GroundSet::new(p, q);
        let pairing = Pairing::from_pairs(ground, pairs).map_err(|e| match e {
            GroundError::PointOutOfRange => ArrayError::PositionOutOfRange,
            _ => ArrayError::BadMatching,
        })?;
        let mut partner = BTreeMap::new();
        for idx in 0..ground.size() {
            partner.insert(idx as u32, pairing.partner(idx) as u32);
        }
        let mut cells = [Vec::new(), Vec::new()];
        let mut next = 0u32;
        for (r, shape) in [row1_shape, row2_shape].into_iter().enumerate() {
            for &size in shape {
                let cell: Vec<u32> = (0..size)
                    .map(|_| {
                        let id = next;
                        next += 1;
                        id
                    })
                    .collect();
                cells[r].push(cell);
            }
        }
        Ok(PairedArray {
            cells,
            partner,
            marks,
            next_id: next,
        })
    }

    fn assemble(
        cells: [Vec<Vec<u32>>; 2],
        partner: BTreeMap<u32, u32>,
        marks: [BTreeSet<usize>; 2],
    ) -> PairedArray {
        let next_id = cells
            .iter()
            .flatten()
            .flatten()
            .max()
            .map_or(0, |&m| m + 1);
        PairedArray {
            cells,
            partner,
            marks,
            next_id,
        }
    }

    pub fn k(&self) -> usize {
        self.cells[0].len()
    }

    /// Vertex count of a row (1 or 2).
    pub fn row_len(&self, row: usize) -> usize {
        self.row_cells(row).iter().map(Vec::len).sum()
    }

    fn row_cells(&self, row: usize) -> &[Vec<u32>] {
        &self.cells[row - 1]
    }

    /// Marked columns of a row, 1-based.
    pub fn marks(&self, row: usize) -> &BTreeSet<usize> {
        &self.marks[row - 1]
    }

    /// Cell sizes of a row in column order.
    pub fn shape(&self, row: usize) -> Vec<usize> {
        self.row_cells(row).iter().map(Vec::len).collect()
    }

    fn positions(&self) -> BTreeMap<u32, (usize, usize)> {
        // id -> (row, col)
        let mut map = BTreeMap::new();
        for row in [1, 2] {
            for (c0, cell) in self.row_cells(row).iter().enumerate() {
                for &id in cell {
                    map.insert(id, (row, c0 + 1));
                }
            }
        }
        map
    }

    /// Reading-order vertex numbering of a row, without boxes: id -> 1-based
    /// position.
    fn vertex_positions(&self, row: usize) -> BTreeMap<u32, usize> {
        let mut map = BTreeMap::new();
        let mut next = 1;
        for cell in self.row_cells(row) {
            for &id in cell {
                map.insert(id, next);
                next += 1;
            }
        }
        map
    }

    /// Reading-order object numbering of a row, with a box at the end of
    /// every marked cell: id -> number. Boxes consume numbers but are not
    /// keyed.
    fn object_numbers(&self, row: usize) -> BTreeMap<u32, usize> {
        let mut map = BTreeMap::new();
        let mut next = 1;
        for (c0, cell) in self.row_cells(row).iter().enumerate() {
            for &id in cell {
                map.insert(id, next);
                next += 1;
            }
            if self.marks(row).contains(&(c0 + 1)) {
                next += 1;
            }
        }
        map
    }

    /// The matching on positional points, each pair least point first,
    /// sorted.
    pub fn position_pairs(&self) -> Vec<(Point, Point)> {
        let pos1 = self.vertex_positions(1);
        let pos2 = self.vertex_positions(2);
        let point = |id: &u32| {
            pos1.get(id)
                .map(|&i| Point::Unprimed(i))
                .unwrap_or_else(|| Point::Primed(pos2[id]))
        };
        let mut out: Vec<(Point, Point)> = self
            .partner
            .iter()
            .filter(|&(a, b)| a < b)
            .map(|(a, b)| {
                let (x, y) = (point(a), point(b));
                if x <= y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect();
        out.sort();
        out
    }

    fn key(&self) -> (usize, Vec<usize>, Vec<usize>, Vec<usize>, Vec<usize>, Vec<(Point, Point)>) {
        (
            self.k(),
            self.shape(1),
            self.shape(2),
            self.marks(1).iter().copied().collect(),
            self.marks(2).iter().copied().collect(),
            self.position_pairs(),
        )
    }

    /// True when the pair containing this vertex crosses rows.
    fn is_mixed(&self, positions: &BTreeMap<u32, (usize, usize)>, id: u32) -> bool {
        positions[&id].0 != positions[&self.partner[&id]].0
    }

    /// Checks balance, nonemptiness, and both forest conditions, reporting
    /// every violation.
    pub fn validate(&self) -> ConditionReport {
        let mut report = ConditionReport::default();
        let positions = self.positions();
        let k = self.k();
        for col in 1..=k {
            let count = |row: usize| {
                self.row_cells(row)[col - 1]
                    .iter()
                    .filter(|&&id| self.is_mixed(&positions, id))
                    .count()
            };
            let (r1, r2) = (count(1), count(2));
            if r1 != r2 {
                report.violations.push(ConditionViolation::Balance {
                    col,
                    row1: r1,
                    row2: r2,
                });
            }
            if !self.marks(1).contains(&col)
                && !self.marks(2).contains(&col)
                && self.row_cells(1)[col - 1].is_empty()
                && self.row_cells(2)[col - 1].is_empty()
            {
                report.violations.push(ConditionViolation::Empty { col });
            }
        }
        for row in [1, 2] {
            self.check_forest(row, &positions, &mut report);
        }
        report
    }

    /// The rightmost map of a row: unmarked inhabited column -> column of
    /// the partner of its rightmost vertex.
    fn rightmost_map(
        &self,
        row: usize,
        positions: &BTreeMap<u32, (usize, usize)>,
    ) -> BTreeMap<usize, usize> {
        let mut psi = BTreeMap::new();
        for (c0, cell) in self.row_cells(row).iter().enumerate() {
            let col = c0 + 1;
            if self.marks(row).contains(&col) {
                continue;
            }
            if let Some(&last) = cell.last() {
                psi.insert(col, positions[&self.partner[&last]].1);
            }
        }
        psi
    }

    fn check_forest(
        &self,
        row: usize,
        positions: &BTreeMap<u32, (usize, usize)>,
        report: &mut ConditionReport,
    ) {
        let psi = self.rightmost_map(row, positions);
        for &start in psi.keys() {
            let mut seen = BTreeSet::new();
            let mut at = start;
            loop {
                if !seen.insert(at) {
                    report
                        .violations
                        .push(ConditionViolation::ForestCycle { row });
                    return;
                }
                match psi.get(&at) {
                    Some(&next) => at = next,
                    None => {
                        if !self.marks(row).contains(&at) {
                            report
                                .violations
                                .push(ConditionViolation::ForestSink { row, col: at });
                        }
                        break;
                    }
                }
            }
        }
    }

    /// The rightmost forest of a row as a rooted forest on the column set
    /// [k]: every unmarked inhabited column points at the column of the
    /// partner of its rightmost vertex. Errors when the walks cycle.
    pub fn rightmost_forest(&self, row: usize) -> Result<RootedForest, ArrayError> {
        let positions = self.positions();
        let psi = self.rightmost_map(row, &positions);
        let parent: Vec<Option<usize>> = (1..=self.k())
            .map(|col| psi.get(&col).copied())
            .collect();
        RootedForest::from_parents(parent)
            .map_err(|_| ArrayError::Invalid(ConditionViolation::ForestCycle { row }))
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Canonical: valid with exactly one mark per row.
    pub fn is_canonical(&self) -> bool {
        self.marks(1).len() == 1 && self.marks(2).len() == 1 && self.is_valid()
    }

    /// Redundant pairs of a row: non-mixed pairs with neither vertex
    /// rightmost in an unmarked cell, as (id, id).
    fn redundant_pairs(&self, row: usize) -> Vec<(u32, u32)> {
        let positions = self.positions();
        let rightmost: BTreeSet<u32> = self
            .row_cells(row)
            .iter()
            .enumerate()
            .filter(|(c0, cell)| !self.marks(row).contains(&(c0 + 1)) && !cell.is_empty())
            .map(|(_, cell)| *cell.last().expect("nonempty"))
            .collect();
        let mut out = Vec::new();
        for (&a, &b) in &self.partner {
            if a >= b {
                continue;
            }
            if positions[&a].0 == row && positions[&b].0 == row
                && !rightmost.contains(&a)
                && !rightmost.contains(&b)
            {
                out.push((a, b));
            }
        }
        out
    }

    /// Minimal: canonical with no redundant pair in either row.
    pub fn is_minimal(&self) -> bool {
        self.is_canonical()
            && self.redundant_pairs(1).is_empty()
            && self.redundant_pairs(2).is_empty()
    }

    /// Vertical: valid with every pair mixed.
    pub fn is_vertical(&self) -> bool {
        if !self.is_valid() {
            return false;
        }
        let positions = self.positions();
        self.partner.keys().all(|&id| self.is_mixed(&positions, id))
    }

    /// Full: vertical with every column inhabited in both rows.
    pub fn is_full(&self) -> bool {
        self.is_vertical()
            && self
                .row_cells(1)
                .iter()
                .chain(self.row_cells(2))
                .all(|cell| !cell.is_empty())
    }

    /// Removes the given vertices and their partner entries.
    fn without_vertices(&self, remove: &BTreeSet<u32>) -> PairedArray {
        let cells = [1, 2].map(|row| {
            self.row_cells(row)
                .iter()
                .map(|cell| {
                    cell.iter()
                        .copied()
                        .filter(|id| !remove.contains(id))
                        .collect()
                })
                .collect()
        });
        let partner = self
            .partner
            .iter()
            .filter(|&(a, _)| !remove.contains(a))
            .map(|(&a, &b)| (a, b))
            .collect();
        PairedArray {
            cells,
            partner,
            marks: self.marks.clone(),
            next_id: self.next_id,
        }
    }
}

impl PartialEq for PairedArray {
    fn eq(&self, other: &PairedArray) -> bool {
        self.key() == other.key()
    }
}

impl Eq for PairedArray {}

impl PartialOrd for PairedArray {
    fn partial_cmp(&self, other: &PairedArray) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PairedArray {
    fn cmp(&self, other: &PairedArray) -> core::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for PairedArray {
    /// Dump format: one line per row; each cell lists the partner of each of
    /// its vertices in reading order (primed = row 2), marked cells carry a
    /// trailing `*`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pos1 = self.vertex_positions(1);
        let pos2 = self.vertex_positions(2);
        for row in [1, 2] {
            for (c0, cell) in self.row_cells(row).iter().enumerate() {
                if c0 > 0 {
                    write!(f, " ")?;
                }
                write!(f, "[")?;
                for (t, id) in cell.iter().enumerate() {
                    if t > 0 {
                        write!(f, " ")?;
                    }
                    let mate = self.partner[id];
                    match pos1.get(&mate) {
                        Some(&i) => write!(f, "{i}")?,
                        None => write!(f, "{}'", pos2[&mate])?,
                    }
                }
                write!(f, "]")?;
                if self.marks(row).contains(&(c0 + 1)) {
                    write!(f, "*")?;
                }
            }
            if row == 1 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// A pairing of the ground set together with a surjection φ onto [k]
/// constant along the cycles of μγ⁻¹, i.e. satisfying
/// φ(μ(x)) = φ(γ(x)) for every point x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairedSurjection {
    pairing: Pairing,
    phi: Vec<usize>,
    k: usize,
}

impl PairedSurjection {
    pub fn new(pairing: Pairing, phi: Vec<usize>, k: usize) -> Result<PairedSurjection, ArrayError> {
        let ground = pairing.ground();
        if ground.p() == 0 || ground.q() == 0 || k == 0 {
            return Err(ArrayError::NotSurjective);
        }
        if phi.len() != ground.size() {
            return Err(ArrayError::BadNumbers);
        }
        let mut hit = vec![false; k];
        for &c in &phi {
            if c < 1 || c > k {
                return Err(ArrayError::BadNumbers);
            }
            hit[c - 1] = true;
        }
        if !hit.iter().all(|&h| h) {
            return Err(ArrayError::NotSurjective);
        }
        let gamma = standard_rotation(ground)?;
        for x in 0..ground.size() {
            if phi[pairing.partner(x)] != phi[gamma.apply(x)] {
                return Err(ArrayError::ConditionOne);
            }
        }
        Ok(PairedSurjection { pairing, phi, k })
    }

    pub fn pairing(&self) -> &Pairing {
        &self.pairing
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ground(&self) -> GroundSet {
        self.pairing.ground()
    }
}

/// All paired surjections on the ground set onto [k]: for each pairing, the
/// surjections are exactly the maps constant on the cycles of μγ⁻¹ and onto
/// [k]. Oracle-grade enumeration for small sizes.
pub fn enumerate_paired_surjections(
    ground: GroundSet,
    k: usize,
) -> Result<Vec<PairedSurjection>, ArrayError> {
    use crate::ground::{enumerate_pairings, MixedFilter};
    if ground.p() == 0 || ground.q() == 0 || k == 0 {
        return Err(ArrayError::NotSurjective);
    }
    let gamma = standard_rotation(ground)?;
    let gamma_inv = gamma.inverse();
    let mut out = Vec::new();
    for pairing in enumerate_pairings(ground, MixedFilter::Any)? {
        let cycles = pairing
            .as_permutation()
            .compose(&gamma_inv)
            .expect("same ground")
            .cycles();
        let c = cycles.len();
        if c < k {
            continue;
        }
        // Sweep all k^c colorings, keep the surjective ones.
        let mut choice = vec![1usize; c];
        'sweep: loop {
            let mut hit = vec![false; k];
            for &v in &choice {
                hit[v - 1] = true;
            }
            if hit.iter().all(|&h| h) {
                let mut phi = vec![0usize; ground.size()];
                for (cycle, &color) in cycles.iter().zip(&choice) {
                    for &x in cycle {
                        phi[x] = color;
                    }
                }
                out.push(
                    PairedSurjection::new(pairing.clone(), phi, k)
                        .expect("constant on cycles and onto"),
                );
            }
            for t in 0..c {
                if choice[t] < k {
                    choice[t] += 1;
                    continue 'sweep;
                }
                choice[t] = 1;
            }
            break;
        }
    }
    Ok(out)
}

/// Builds the canonical array of a paired surjection: cell (r, t) holds the
/// row-r labels mapped to t by φ in increasing order, the marked columns are
/// φ(1) and φ(1′), and the matching is transported from μ.
pub fn from_paired_surjection(ps: &PairedSurjection) -> PairedArray {
    let ground = ps.ground();
    let (p, k) = (ground.p(), ps.k());
    let mut cells = [vec![Vec::new(); k], vec![Vec::new(); k]];
    for x in 0..ground.size() {
        let row = usize::from(ground.is_primed(x));
        cells[row][ps.phi[x] - 1].push(x as u32);
    }
    let partner = (0..ground.size())
        .map(|x| (x as u32, ps.pairing.partner(x) as u32))
        .collect();
    let marks = [
        BTreeSet::from([ps.phi[0]]),
        BTreeSet::from([ps.phi[p]]),
    ];
    let array = PairedArray::assemble(cells, partner, marks);
    debug_assert!(array.is_canonical(), "surjection images are canonical");
    array
}

/// Recovers the unique labelling of a canonical array that exhibits it as
/// the image of a paired surjection: label 1 goes to the leftmost vertex of
/// the marked cell, and label i to the leftmost unlabelled vertex in the
/// column of the partner of label i−1; likewise for row 2. Errors when the
/// walk sticks, wraps to the wrong column, or the recovered pair violates
/// the surjection condition.
pub fn label_recovery(array: &PairedArray) -> Result<PairedSurjection, ArrayError> {
    if array.marks(1).len() != 1 || array.marks(2).len() != 1 {
        return Err(ArrayError::NotCanonical);
    }
    let report = array.validate();
    if !report.is_ok() {
        return Err(ArrayError::Invalid(report.violations[0].clone()));
    }
    let positions = array.positions();
    let (p, q) = (array.row_len(1), array.row_len(2));
    if p == 0 || q == 0 {
        return Err(ArrayError::RecoveryStuck { row: usize::from(p > 0) + 1 });
    }
    let ground = GroundSet::new(p, q);

    // labels[id] = encoded ground index.
    let mut labels: BTreeMap<u32, usize> = BTreeMap::new();
    for row in [1, 2] {
        let m = *array.marks(row).iter().next().expect("one mark");
        let count = array.row_len(row);
        let leftmost_unlabelled = |labels: &BTreeMap<u32, usize>, col: usize| {
            array.row_cells(row)[col - 1]
                .iter()
                .copied()
                .find(|id| !labels.contains_key(id))
        };
        let offset = if row == 1 { 0 } else { p };
        let mut at =
            leftmost_unlabelled(&labels, m).ok_or(ArrayError::RecoveryStuck { row })?;
        labels.insert(at, offset);
        for step in 1..count {
            let col = positions[&array.partner[&at]].1;
            at = leftmost_unlabelled(&labels, col).ok_or(ArrayError::RecoveryStuck { row })?;
            labels.insert(at, offset + step);
        }
        // γ wraps the row: the partner of the last label must close on the
        // marked column.
        if positions[&array.partner[&at]].1 != m {
            return Err(ArrayError::RecoveryWrap { row });
        }
    }

    let mut partner_vec = vec![0usize; ground.size()];
    let mut phi = vec![0usize; ground.size()];
    for (&id, &x) in &labels {
        partner_vec[x] = labels[&array.partner[&id]];
        phi[x] = positions[&id].1;
    }
    let pairing = Pairing::from_partner_vec(ground, partner_vec)?;
    PairedSurjection::new(pairing, phi, array.k())
}

/// A partial pairing on object numbers: disjoint unordered pairs, kept
/// normalized (least element first, sorted by first element).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartialPairing {
    pairs: Vec<(usize, usize)>,
}

impl PartialPairing {
    pub fn new(pairs: &[(usize, usize)]) -> Result<PartialPairing, ArrayError> {
        let mut seen = BTreeSet::new();
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a == b || a == 0 || b == 0 || !seen.insert(a) || !seen.insert(b) {
                return Err(ArrayError::BadNumbers);
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        Ok(PartialPairing { pairs: norm })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect()
    }
}

/// Image of the redundant-pair reduction ξ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiImage {
    pub minimal: PairedArray,
    pub mu1: PartialPairing,
    pub mu2: PartialPairing,
}

/// Removes every redundant pair from a canonical array, recording the pairs
/// as object numbers (boxes included in the numbering). The result is the
/// minimal array of the input.
pub fn xi(array: &PairedArray) -> Result<XiImage, ArrayError> {
    if !array.is_canonical() {
        return Err(ArrayError::NotCanonical);
    }
    let mut remove = BTreeSet::new();
    let mut mus = Vec::new();
    for row in [1, 2] {
        let numbers = array.object_numbers(row);
        let pairs = array.redundant_pairs(row);
        let numbered: Vec<(usize, usize)> = pairs
            .iter()
            .map(|&(a, b)| (numbers[&a], numbers[&b]))
            .collect();
        mus.push(PartialPairing::new(&numbered).expect("disjoint by construction"));
        for (a, b) in pairs {
            remove.insert(a);
            remove.insert(b);
        }
    }
    let minimal = array.without_vertices(&remove);
    debug_assert!(minimal.is_minimal(), "xi lands on minimal arrays");
    let mu2 = mus.pop().expect("two rows");
    let mu1 = mus.pop().expect("two rows");
    Ok(XiImage {
        minimal,
        mu1,
        mu2,
    })
}

/// One row of objects under reconstruction: cells of (number, object),
/// kept sorted by number within each cell.
struct NumberedRow {
    cells: Vec<Vec<(usize, RowObj)>>,
    surviving: Vec<usize>,
}

impl NumberedRow {
    /// Numbers the objects of a row with the given ascending values, one per
    /// object in reading order.
    fn new(array: &PairedArray, row: usize, numbers: &[usize]) -> Result<NumberedRow, ArrayError> {
        let mut feed = numbers.iter().copied();
        let mut cells = Vec::with_capacity(array.k());
        for (c0, cell) in array.row_cells(row).iter().enumerate() {
            let mut out = Vec::with_capacity(cell.len() + 1);
            for &id in cell {
                let n = feed.next().ok_or(ArrayError::BadNumbers)?;
                out.push((n, RowObj::Vertex(id)));
            }
            if array.marks(row).contains(&(c0 + 1)) {
                let n = feed.next().ok_or(ArrayError::BadNumbers)?;
                out.push((n, RowObj::Boxed));
            }
            cells.push(out);
        }
        if feed.next().is_some() {
            return Err(ArrayError::BadNumbers);
        }
        Ok(NumberedRow {
            cells,
            surviving: numbers.to_vec(),
        })
    }

    /// Inserts a vertex for each number: it goes in the cell of the object
    /// numbered min{t surviving : t > l}, placed by number order. Returns
    /// number -> id.
    fn insert(
        &mut self,
        inserts: &[usize],
        next_id: &mut u32,
    ) -> Result<BTreeMap<usize, u32>, ArrayError> {
        let mut map = BTreeMap::new();
        for &l in inserts {
            let target = match self.surviving.iter().find(|&&t| t > l) {
                Some(&t) => t,
                None => return Err(ArrayError::BadNumbers),
            };
            let cell = self
                .cells
                .iter_mut()
                .find(|cell| cell.iter().any(|&(n, _)| n == target))
                .expect("surviving number is placed");
            let id = *next_id;
            *next_id += 1;
            cell.push((l, RowObj::Vertex(id)));
            cell.sort_unstable_by_key(|&(n, _)| n);
            map.insert(l, id);
        }
        Ok(map)
    }

    /// Column (1-based) of the object with this number.
    fn column_of(&self, number: usize) -> Option<usize> {
        self.cells
            .iter()
            .position(|cell| cell.iter().any(|&(n, _)| n == number))
            .map(|c0| c0 + 1)
    }

    /// Replaces the box in the given column with a fresh vertex at its
    /// position (the cell end).
    fn box_to_vertex(&mut self, col: usize, next_id: &mut u32) -> u32 {
        let id = *next_id;
        *next_id += 1;
        let slot = self.cells[col - 1]
            .iter_mut()
            .find(|(_, obj)| *obj == RowObj::Boxed)
            .expect("column holds a box");
        slot.1 = RowObj::Vertex(id);
        id
    }

    /// Strips numbers; remaining boxes become the row's marks.
    fn into_cells(self) -> (Vec<Vec<u32>>, BTreeSet<usize>) {
        let mut marks = BTreeSet::new();
        let cells = self
            .cells
            .into_iter()
            .enumerate()
            .map(|(c0, cell)| {
                cell.into_iter()
                    .filter_map(|(_, obj)| match obj {
                        RowObj::Vertex(id) => Some(id),
                        RowObj::Boxed => {
                            marks.insert(c0 + 1);
                            None
                        }
                    })
                    .collect()
            })
            .collect();
        (cells, marks)
    }
}

/// Inverse of ξ: re-inserts the paired numbers into a minimal array. Each
/// number l becomes a vertex in the cell of the surviving object numbered
/// min{t : t > l}; the new vertices are paired according to μ1 and μ2.
pub fn xi_inverse(
    minimal: &PairedArray,
    mu1: &PartialPairing,
    mu2: &PartialPairing,
) -> Result<PairedArray, ArrayError> {
    if !minimal.is_minimal() {
        return Err(ArrayError::NotMinimal);
    }
    let mut partner = minimal.partner.clone();
    let mut next_id = minimal.next_id;
    let mut rows = Vec::new();
    for (row, mu) in [(1, mu1), (2, mu2)] {
        let support = mu.support();
        let objects = minimal.row_len(row) + minimal.marks(row).len();
        let total = objects + support.len();
        if support.iter().any(|&l| l >= total) {
            return Err(ArrayError::BadNumbers);
        }
        let surviving: Vec<usize> = (1..=total).filter(|t| !support.contains(t)).collect();
        let mut numbered = NumberedRow::new(minimal, row, &surviving)?;
        let inserts: Vec<usize> = support.iter().copied().collect();
        let ids = numbered.insert(&inserts, &mut next_id)?;
        for (a, b) in mu.iter() {
            partner.insert(ids[&a], ids[&b]);
            partner.insert(ids[&b], ids[&a]);
        }
        rows.push(numbered);
    }
    let (cells2, marks2) = rows.pop().expect("two rows").into_cells();
    let (cells1, marks1) = rows.pop().expect("two rows").into_cells();
    let array = PairedArray::assemble([cells1, cells2], partner, [marks1, marks2]);
    let report = array.validate();
    if !report.is_ok() {
        return Err(ArrayError::Invalid(report.violations[0].clone()));
    }
    if !array.is_canonical() {
        return Err(ArrayError::NotCanonical);
    }
    Ok(array)
}

/// Image of the non-mixed-pair reduction ζ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaImage {
    pub vertical: PairedArray,
    pub kappa1: Vec<usize>,
    pub kappa2: Vec<usize>,
}

/// Removes every non-mixed pair from a minimal array, producing a vertical
/// array with i+1 marks in row 1 and j+1 in row 2 (i, j the non-mixed pair
/// counts), and the two sequences κ recording the removed partners in
/// forest-completion order.
///
/// Per non-mixed pair exactly one vertex is rightmost in an unmarked cell
/// (the u of the pair); those cells become marked. The inverse
/// forest-completion on the rightmost tree, removing the arcs c(u) → c(v),
/// yields the permutation that orders the partners v into κ.
pub fn zeta(array: &PairedArray) -> Result<ZetaImage, ArrayError> {
    if !array.is_minimal() {
        return Err(ArrayError::NotMinimal);
    }
    let positions = array.positions();
    let mut remove = BTreeSet::new();
    let mut kappas = Vec::new();
    let mut marks = Vec::new();
    for row in [1, 2] {
        let numbers = array.object_numbers(row);
        let rightmost: BTreeMap<u32, usize> = array
            .row_cells(row)
            .iter()
            .enumerate()
            .filter(|(c0, cell)| !array.marks(row).contains(&(c0 + 1)) && !cell.is_empty())
            .map(|(c0, cell)| (*cell.last().expect("nonempty"), c0 + 1))
            .collect();
        // Non-mixed pairs of this row as (u, v): u the rightmost one.
        let mut splits: Vec<(u32, u32)> = Vec::new();
        for (&a, &b) in &array.partner {
            if a >= b || positions[&a].0 != row || positions[&b].0 != row {
                continue;
            }
            let (u, v) = match (rightmost.contains_key(&a), rightmost.contains_key(&b)) {
                (true, false) => (a, b),
                (false, true) => (b, a),
                _ => return Err(ArrayError::NotMinimal),
            };
            splits.push((u, v));
            remove.insert(u);
            remove.insert(v);
        }
        splits.sort_unstable_by_key(|&(u, _)| numbers[&u]);
        let m = *array.marks(row).iter().next().expect("one mark");
        let mut row_marks: BTreeSet<usize> = BTreeSet::from([m]);
        for &(u, _) in &splits {
            row_marks.insert(rightmost[&u]);
        }
        marks.push(row_marks);
        if splits.is_empty() {
            kappas.push(Vec::new());
            continue;
        }
        let tree = array.rightmost_forest(row)?;
        let removals: Vec<(usize, usize)> = splits
            .iter()
            .map(|&(u, v)| (rightmost[&u], positions[&v].1))
            .collect();
        let inv = fca_inverse(&tree, &removals)?;
        // κ_t = v_{σ(t)}: σ is the inverse of the forward FCP.
        let kappa: Vec<usize> = inv
            .sigma
            .iter()
            .map(|&l| numbers[&splits[l - 1].1])
            .collect();
        debug_assert!(
            inv.tuple
                .iter()
                .zip(&inv.sigma)
                .all(|(&t, &l)| t == positions[&splits[l - 1].1].1),
            "tuple entries are the columns of the kappa vertices"
        );
        kappas.push(kappa);
    }
    let stripped = array.without_vertices(&remove);
    let marks2 = marks.pop().expect("two rows");
    let marks1 = marks.pop().expect("two rows");
    let vertical = PairedArray {
        cells: stripped.cells,
        partner: stripped.partner,
        marks: [marks1, marks2],
        next_id: stripped.next_id,
    };
    debug_assert!(vertical.is_vertical(), "zeta lands on vertical arrays");
    let kappa2 = kappas.pop().expect("two rows");
    let kappa1 = kappas.pop().expect("two rows");
    Ok(ZetaImage {
        vertical,
        kappa1,
        kappa2,
    })
}

/// Inverse of ζ: re-inserts the κ vertices into a vertical array and runs
/// the forward forest completion to reconstruct the non-mixed pairs. The
/// surviving mark of each row is the root of the component holding the
/// column of the last κ entry (the key dependency); the other marked
/// columns trade their boxes for the u vertices, paired with the κ vertices
/// in completion order.
pub fn zeta_inverse(
    vertical: &PairedArray,
    kappa1: &[usize],
    kappa2: &[usize],
) -> Result<PairedArray, ArrayError> {
    if !vertical.is_vertical() {
        return Err(ArrayError::NotVertical);
    }
    if vertical.marks(1).len() != kappa1.len() + 1
        || vertical.marks(2).len() != kappa2.len() + 1
    {
        return Err(ArrayError::BadNumbers);
    }
    let mut partner = vertical.partner.clone();
    let mut next_id = vertical.next_id;
    let mut rows = Vec::new();
    for (row, kappa) in [(1, kappa1), (2, kappa2)] {
        let i = kappa.len();
        let s_r = vertical.row_len(row);
        let total = s_r + 2 * i + 1;
        let kset: BTreeSet<usize> = kappa.iter().copied().collect();
        if kset.len() != i || kappa.iter().any(|&l| l == 0 || l >= total) {
            return Err(ArrayError::BadNumbers);
        }
        let surviving: Vec<usize> = (1..=total).filter(|t| !kset.contains(t)).collect();
        // The rightmost forest of the vertical array, before any insertion:
        // inserted vertices are never rightmost, so it is unchanged by them.
        let forest = vertical.rightmost_forest(row)?;
        let mut numbered = NumberedRow::new(vertical, row, &surviving)?;
        let ids = numbered.insert(kappa, &mut next_id)?;
        if i == 0 {
            rows.push(numbered);
            continue;
        }
        let last_col = numbered
            .column_of(kappa[i - 1])
            .expect("inserted number is placed");
        let m = forest.root_of(last_col);
        if !vertical.marks(row).contains(&m) {
            return Err(ArrayError::KeyDependency);
        }
        let eliminated: Vec<usize> = vertical
            .marks(row)
            .iter()
            .copied()
            .filter(|&c| c != m)
            .collect();
        let tuple: Vec<usize> = kappa
            .iter()
            .map(|&l| numbered.column_of(l).expect("placed"))
            .collect();
        let done = fca_forward(&forest, &eliminated, &tuple)?;
        for (t, &col) in eliminated.iter().enumerate() {
            let u = numbered.box_to_vertex(col, &mut next_id);
            let v = ids[&kappa[done.fcp[t] - 1]];
            partner.insert(u, v);
            partner.insert(v, u);
        }
        rows.push(numbered);
    }
    let (cells2, marks2) = rows.pop().expect("two rows").into_cells();
    let (cells1, marks1) = rows.pop().expect("two rows").into_cells();
    let array = PairedArray::assemble([cells1, cells2], partner, [marks1, marks2]);
    let report = array.validate();
    if !report.is_ok() {
        return Err(ArrayError::Invalid(report.violations[0].clone()));
    }
    if !array.is_minimal() {
        return Err(ArrayError::NotMinimal);
    }
    Ok(array)
}

/// All vertical arrays with s mixed pairs spread over k columns and mark
/// counts i+1 (row 1) and j+1 (row 2). Balance forces both rows to share
/// one shape; the matching is a bijection between the rows. When `full`,
/// only shapes with every part positive are kept.
pub fn enumerate_vertical_arrays(
    s: usize,
    k: usize,
    i: usize,
    j: usize,
    full: bool,
) -> Vec<PairedArray> {
    let mut out = Vec::new();
    if s == 0 || k == 0 {
        return out;
    }
    let mut shape = vec![0usize; k];
    compositions(s, k, 0, &mut shape, &mut |shape| {
        if full && shape.contains(&0) {
            return;
        }
        let mut perm: Vec<usize> = (0..s).collect();
        permutations(&mut perm, 0, &mut |perm| {
            let pairs: Vec<(Point, Point)> = perm
                .iter()
                .enumerate()
                .map(|(a, &b)| (Point::Unprimed(a + 1), Point::Primed(b + 1)))
                .collect();
            for marks1 in subsets(k, i + 1) {
                for marks2 in subsets(k, j + 1) {
                    let array = PairedArray::from_layout(
                        k, shape, shape, &pairs, &marks1, &marks2,
                    )
                    .expect("well-formed layout");
                    if array.is_valid() {
                        out.push(array);
                    }
                }
            }
        });
    });
    out
}

fn compositions(left: usize, k: usize, at: usize, shape: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if at == k - 1 {
        shape[at] = left;
        f(shape);
        return;
    }
    for part in 0..=left {
        shape[at] = part;
        compositions(left - part, k, at + 1, shape, f);
    }
}

fn permutations(perm: &mut Vec<usize>, at: usize, f: &mut impl FnMut(&[usize])) {
    if at == perm.len() {
        f(perm);
        return;
    }
    for t in at..perm.len() {
        perm.swap(at, t);
        permutations(perm, at + 1, f);
        perm.swap(at, t);
    }
}

fn subsets(k: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << k) {
        if mask.count_ones() as usize == size {
            out.push((1..=k).filter(|&c| mask & (1 << (c - 1)) != 0).collect());
        }
    }
    out
}

/// Type of a full vertical array: the anchor tail and the two anchor
/// vertices, together with the shape. Arrays sharing a shape and a tail
/// length form classes of uniform size, which is what proves the count f.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerticalArrayProfile {
    /// Common cell shape of both rows.
    pub shape: Vec<usize>,
    /// Columns ρ_0, …, ρ_l of the anchor tail, walking shared arcs from the
    /// column of the row-2 anchor to its root.
    pub tail: Vec<usize>,
    /// Row-2 anchor a′ as a reading-order vertex position.
    pub anchor_row2: usize,
    /// Row-1 anchor b as a reading-order vertex position.
    pub anchor_row1: usize,
}

impl VerticalArrayProfile {
    /// Tail length l (the tail lists l+1 columns).
    pub fn tail_len(&self) -> usize {
        self.tail.len() - 1
    }
}

impl fmt::Display for VerticalArrayProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, (", self.tail_len())?;
        for (t, col) in self.tail.iter().enumerate() {
            if t > 0 {
                write!(f, " ")?;
            }
            write!(f, "{col}")?;
        }
        write!(f, "), {}', {})", self.anchor_row2, self.anchor_row1)
    }
}

/// Profile of a full vertical array.
///
/// A pair is shared when both of its vertices are rightmost in unmarked
/// cells of their rows; shared pairs are arcs of both rightmost forests (in
/// mirrored directions). The row-2 anchor a′ comes from the inverse forest
/// completion of F over the non-shared arcs (or, when every arc is shared,
/// as the partner of the rightmost row-1 vertex whose partner is not
/// rightmost in an unmarked row-2 cell). The tail follows shared arcs from
/// c(a′) to a root, and the row-1 anchor b repeats the construction on F′
/// with the tail's mirror arcs exempt from removal.
pub fn profile(array: &PairedArray) -> Result<VerticalArrayProfile, ArrayError> {
    if !array.is_full() {
        return Err(ArrayError::NotFull);
    }
    let positions = array.positions();
    let rightmost_unmarked = |row: usize| -> BTreeMap<u32, usize> {
        array
            .row_cells(row)
            .iter()
            .enumerate()
            .filter(|(c0, cell)| !array.marks(row).contains(&(c0 + 1)) && !cell.is_empty())
            .map(|(c0, cell)| (*cell.last().expect("nonempty"), c0 + 1))
            .collect()
    };
    let right1 = rightmost_unmarked(1);
    let right2 = rightmost_unmarked(2);
    let pos_in_row = |row: usize| array.vertex_positions(row);
    let (pos1, pos2) = (pos_in_row(1), pos_in_row(2));

    // Row-2 anchor from F = rightmost forest of row 1.
    let forest1 = array.rightmost_forest(1)?;
    let shared = |x: &u32| right2.contains_key(&array.partner[x]);
    let mut nonshared1: Vec<(u32, u32)> = right1
        .keys()
        .filter(|x| !shared(x))
        .map(|&x| (x, array.partner[&x]))
        .collect();
    nonshared1.sort_unstable_by_key(|&(x, _)| pos1[&x]);
    let anchor2_id = if nonshared1.is_empty() {
        // All arcs shared: the rightmost row-1 vertex that is not dependent
        // (its partner not rightmost in an unmarked row-2 cell) anchors.
        let x = array
            .row_cells(1)
            .iter()
            .flatten()
            .rev()
            .find(|x| !right2.contains_key(&array.partner[x]))
            .copied()
            .ok_or(ArrayError::NotFull)?;
        array.partner[&x]
    } else {
        let removals: Vec<(usize, usize)> = nonshared1
            .iter()
            .map(|&(x, y)| (right1[&x], positions[&y].1))
            .collect();
        let inv = fca_inverse(&forest1, &removals)?;
        nonshared1[inv.sigma[nonshared1.len() - 1] - 1].1
    };

    // Tail: walk shared arcs from the anchor column to a root.
    let shared_parent: BTreeMap<usize, usize> = right1
        .iter()
        .filter(|(x, _)| shared(x))
        .map(|(x, &col)| (col, positions[&array.partner[x]].1))
        .collect();
    let mut tail = vec![positions[&anchor2_id].1];
    while let Some(&next) = shared_parent.get(tail.last().expect("nonempty")) {
        tail.push(next);
    }

    // Row-1 anchor from F' with the tail's mirror arcs kept.
    let forest2 = array.rightmost_forest(2)?;
    let mirror: BTreeSet<(usize, usize)> = tail
        .windows(2)
        .map(|w| (w[1], w[0]))
        .collect();
    let mut nonmirror2: Vec<(u32, u32)> = right2
        .iter()
        .filter(|(y, &col)| {
            let target = positions[&array.partner[*y]].1;
            !mirror.contains(&(col, target))
        })
        .map(|(&y, _)| (y, array.partner[&y]))
        .collect();
    nonmirror2.sort_unstable_by_key(|&(y, _)| pos2[&y]);
    let anchor1_id = if nonmirror2.is_empty() {
        let y = array
            .row_cells(2)
            .iter()
            .flatten()
            .rev()
            .find(|y| !right1.contains_key(&array.partner[y]))
            .copied()
            .ok_or(ArrayError::NotFull)?;
        array.partner[&y]
    } else {
        let removals: Vec<(usize, usize)> = nonmirror2
            .iter()
            .map(|&(y, z)| (right2[&y], positions[&z].1))
            .collect();
        let inv = fca_inverse(&forest2, &removals)?;
        nonmirror2[inv.sigma[nonmirror2.len() - 1] - 1].1
    };

    Ok(VerticalArrayProfile {
        shape: array.shape(1),
        tail,
        anchor_row2: pos2[&anchor2_id],
        anchor_row1: pos1[&anchor1_id],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::factorial;
    use crate::series::{f_full_vertical, v_vertical};
    use alloc::format;
    use alloc::string::ToString;
    use num_bigint::BigUint;

    fn up(i: usize) -> Point {
        Point::Unprimed(i)
    }

    fn pr(j: usize) -> Point {
        Point::Primed(j)
    }

    #[test]
    fn layout_and_validation() {
        // One column, one mixed pair: the smallest valid array.
        let a = PairedArray::from_layout(1, &[1], &[1], &[(up(1), pr(1))], &[1], &[1]).unwrap();
        assert!(a.is_valid());
        assert!(a.is_canonical());
        assert!(a.is_minimal());
        assert!(a.is_vertical());
        assert!(a.is_full());

        // Two columns, pair crossing them: balance fails in both columns.
        let b = PairedArray::from_layout(2, &[1, 0], &[0, 1], &[(up(1), pr(1))], &[1], &[2])
            .unwrap();
        let report = b.validate();
        assert_eq!(report.violations.len(), 2);
        assert!(matches!(
            report.violations[0],
            ConditionViolation::Balance { col: 1, row1: 1, row2: 0 }
        ));

        // Unmarked empty column.
        let c = PairedArray::from_layout(2, &[1, 0], &[1, 0], &[(up(1), pr(1))], &[1], &[1])
            .unwrap();
        assert!(matches!(
            c.validate().violations[..],
            [ConditionViolation::Empty { col: 2 }]
        ));

        // Non-mixed pair pointing the rightmost walk at an unmarked, empty
        // column in row 2's digraph... row 1 here: cell 1 holds two vertices
        // pairing each other, mark sits on column 2.
        let d = PairedArray::from_layout(
            2,
            &[2, 0],
            &[1, 1],
            &[(up(1), up(2)), (pr(1), pr(2))],
            &[2],
            &[2],
        )
        .unwrap();
        let report = d.validate();
        assert!(
            report
                .violations
                .iter()
                .any(|v| matches!(v, ConditionViolation::ForestCycle { row: 1 }
                    | ConditionViolation::ForestSink { row: 1, .. })),
            "row 1 walk must fail: {report:?}"
        );
    }

    #[test]
    fn display_dump() {
        let a = PairedArray::from_layout(
            2,
            &[2, 1],
            &[1, 2],
            &[(up(1), up(2)), (up(3), pr(2)), (pr(1), pr(3))],
            &[1],
            &[2],
        )
        .unwrap();
        let dump = a.to_string();
        assert_eq!(dump, "[2 1]* [2']\n[3'] [3 1']*");
    }

    #[test]
    fn surjection_roundtrip() {
        let ground = GroundSet::new(2, 2);
        for k in 1..=4 {
            let all = enumerate_paired_surjections(ground, k).unwrap();
            for ps in &all {
                let array = from_paired_surjection(ps);
                assert!(array.is_canonical());
                let back = label_recovery(&array).unwrap();
                assert_eq!(&back, ps);
            }
        }
    }

    #[test]
    fn surjection_counts_match_series() {
        // The number of paired surjections onto [k] with s mixed pairs is
        // the C(x,k)-coefficient of the two-vertex series.
        use crate::series::{main_series, SeriesSpec};
        for (p, q) in [(2, 2), (3, 1), (3, 3)] {
            let ground = GroundSet::new(p, q);
            for k in 1..=(p + q) / 2 + 1 {
                let all = enumerate_paired_surjections(ground, k).unwrap();
                let mut by_s: BTreeMap<usize, usize> = BTreeMap::new();
                for ps in &all {
                    *by_s.entry(ps.pairing().mixed_count()).or_default() += 1;
                }
                let mut s = if p % 2 == 0 { 2 } else { 1 };
                while s <= p.min(q) {
                    let spec = SeriesSpec::new(p, q, s).unwrap();
                    let expected = main_series(&spec).coeff(k);
                    let got = by_s.get(&s).copied().unwrap_or(0);
                    assert_eq!(
                        num_bigint::BigInt::from(got),
                        expected,
                        "p={p} q={q} s={s} k={k}"
                    );
                    s += 2;
                }
            }
        }
    }

    #[test]
    fn xi_roundtrip_small() {
        let ground = GroundSet::new(3, 1);
        for k in 1..=2 {
            for ps in enumerate_paired_surjections(ground, k).unwrap() {
                let array = from_paired_surjection(&ps);
                let image = xi(&array).unwrap();
                assert!(image.minimal.is_minimal());
                let back = xi_inverse(&image.minimal, &image.mu1, &image.mu2).unwrap();
                assert_eq!(back, array);
            }
        }
    }

    #[test]
    fn zeta_roundtrip_small() {
        let ground = GroundSet::new(3, 3);
        for k in 1..=3 {
            for ps in enumerate_paired_surjections(ground, k).unwrap() {
                let array = from_paired_surjection(&ps);
                let image = xi(&array).unwrap();
                let zim = zeta(&image.minimal).unwrap();
                assert!(zim.vertical.is_vertical());
                let back =
                    zeta_inverse(&zim.vertical, &zim.kappa1, &zim.kappa2).unwrap();
                assert_eq!(back, image.minimal);
            }
        }
    }

    #[test]
    fn vertical_enumeration_matches_counts() {
        for s in 1..=3usize {
            for k in 1..=3usize {
                for i in 0..k.min(2) {
                    for j in 0..k.min(2) {
                        let all = enumerate_vertical_arrays(s, k, i, j, false);
                        assert_eq!(
                            BigUint::from(all.len()),
                            v_vertical(s, k, i, j),
                            "v s={s} k={k} i={i} j={j}"
                        );
                        let full = enumerate_vertical_arrays(s, k, i, j, true);
                        assert_eq!(
                            BigUint::from(full.len()),
                            f_full_vertical(s, k, i, j),
                            "f s={s} k={k} i={i} j={j}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn one_column_profile() {
        let a = PairedArray::from_layout(1, &[1], &[1], &[(up(1), pr(1))], &[1], &[1]).unwrap();
        let prof = profile(&a).unwrap();
        assert_eq!(prof.tail, vec![1]);
        assert_eq!(prof.tail_len(), 0);
        assert_eq!(prof.anchor_row2, 1);
        assert_eq!(prof.anchor_row1, 1);
        assert_eq!(format!("{prof}"), "(0, (1), 1', 1)");
    }

    #[test]
    fn profile_classes_are_uniform() {
        // Full vertical arrays with a common shape and tail length form
        // classes of size s (k−1)_l (s−l−1)! C(k−l−1, i) C(k−l−1, j).
        for (s, k, i, j) in [(2, 2, 0, 0), (3, 2, 0, 1), (3, 3, 1, 0), (4, 2, 1, 1)] {
            let mut classes: BTreeMap<(Vec<usize>, usize), usize> = BTreeMap::new();
            for array in enumerate_vertical_arrays(s, k, i, j, true) {
                let prof = profile(&array).unwrap();
                *classes
                    .entry((prof.shape.clone(), prof.tail_len()))
                    .or_default() += 1;
            }
            for ((shape, l), size) in classes {
                let expected = BigUint::from(s)
                    * crate::exact::falling_factorial(k as i64 - 1, l as i64)
                        .magnitude()
                        .clone()
                    * factorial((s - l - 1) as u64)
                    * crate::exact::binomial((k - l - 1) as u64, i as i64)
                    * crate::exact::binomial((k - l - 1) as u64, j as i64);
                assert_eq!(
                    BigUint::from(size),
                    expected,
                    "s={s} k={k} i={i} j={j} shape={shape:?} l={l}"
                );
            }
        }
    }

    #[test]
    fn partial_pairing_validation() {
        assert!(PartialPairing::new(&[(1, 2), (3, 4)]).is_ok());
        assert!(PartialPairing::new(&[(1, 2), (2, 3)]).is_err());
        assert!(PartialPairing::new(&[(1, 1)]).is_err());
        let pp = PartialPairing::new(&[(4, 7), (11, 2)]).unwrap();
        assert_eq!(pp.iter().collect::<Vec<_>>(), vec![(2, 11), (4, 7)]);
        assert_eq!(pp.support(), BTreeSet::from([2, 4, 7, 11]));
    }
}
