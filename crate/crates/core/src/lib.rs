//! Exact enumeration of cycle-count distributions for pairings multiplied
//! against one- and two-cycle permutations, equivalently the genus
//! distributions of rooted maps with one or two vertices.
//!
//! The crate is organized around one product: take the ground set
//! [p] ∪ [q]′, fix the rotation γ = (1 2 … p)(1′ 2′ … q′), and for every
//! pairing μ (fixed-point-free involution) count the cycles of μγ⁻¹. The
//! modules provide:
//!
//! - [`ground`]: the ground set, permutations, pairings, and exact cycle
//!   distributions, with a deterministic pairing enumerator.
//! - [`exact`]: factorials, binomials, double and falling factorials over
//!   unbounded integers.
//! - [`poly`]: polynomials in the binomial-coefficient basis C(x,k) and the
//!   monomial basis, with exact conversions both ways.
//! - [`series`]: every closed form: the one-vertex (Harer–Zagier) series,
//!   the two-vertex series with a fixed number of joining edges, the two
//!   summed-over-joining-edges series, planar coefficients, vertical-array
//!   counts, the reduction-chain coefficient, and rooted-map counts.
//! - [`forest`]: rooted forests on [k] and the forest-completion bijection
//!   (tuple ↔ superforest) with its permutation bookkeeping.
//! - [`array`]: paired arrays, the array conditions, unique label recovery,
//!   and the two reductions (redundant-pair removal and non-mixed-pair
//!   removal) that drive the counting argument.
//! - [`oracle`]: brute-force enumeration used to cross-check all of the
//!   above, including an independent rotation-system enumerator for rooted
//!   maps.
//!
//! Everything is exact: counts are `BigUint`, intermediate series arithmetic
//! uses `BigRational` and asserts integrality of final coefficients. The
//! crate is `no_std` (alloc required); IO and parallelism live in the
//! companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod array;
pub mod exact;
pub mod forest;
pub mod ground;
pub mod oracle;
pub mod poly;
pub mod series;

pub use array::{
    enumerate_paired_surjections, enumerate_vertical_arrays, from_paired_surjection,
    label_recovery, xi, xi_inverse, zeta, zeta_inverse, PairedArray, PairedSurjection,
    PartialPairing, XiImage, ZetaImage,
};
pub use forest::RootedForest;
pub use ground::{CycleDistribution, GroundSet, MixedFilter, Pairing, Permutation, Point};
pub use poly::{BinomialPoly, MonomialPoly};
pub use series::SeriesSpec;
