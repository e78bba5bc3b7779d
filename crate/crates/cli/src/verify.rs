//! Named verification checks. Every check sweeps a budgeted range, compares
//! closed forms against independent enumeration (or bijections against
//! roundtrips), and reports one pass/fail line. The `verify` subcommand and
//! the acceptance suite call the same functions, only with different budgets.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use annular_core::exact::{binomial, double_factorial, falling_factorial};
use annular_core::forest::{
    count_completions, enumerate_forests, enumerate_superforests, fca_forward, fca_inverse,
    safe_vertices,
};
use annular_core::ground::{standard_rotation, Pairing, Point};
use annular_core::oracle::{brute_rooted_maps, brute_series_values};
use annular_core::poly::forward_differences;
use annular_core::series::{
    c_via_reduction, f_full_vertical, gs_series, hz_series, jackson_series, main_series,
    main_series_monomial, planar_coefficient, rooted_map_distribution, summed_series, v_vertical,
};
use annular_core::{
    enumerate_paired_surjections, enumerate_vertical_arrays, from_paired_surjection,
    label_recovery, xi, xi_inverse, zeta, zeta_inverse, GroundSet, MixedFilter, PairedSurjection,
    PartialPairing, SeriesSpec,
};

use crate::{parallel_by_mixed, parallel_distribution};

#[derive(Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub params: String,
    pub pass: bool,
    pub detail: String,
}

fn outcome(name: &str, params: String, result: Result<String, String>) -> CheckResult {
    let (pass, detail) = match result {
        Ok(detail) => (true, detail),
        Err(detail) => (false, detail),
    };
    CheckResult {
        name: name.to_string(),
        params,
        pass,
        detail,
    }
}

/// One-vertex distributions: the full pairing walk must reproduce the
/// monomial coefficients of the one-vertex series, and the walk total must
/// be (p-1)!!.
pub fn check_hz(max_p: usize) -> CheckResult {
    let body = || -> Result<String, String> {
        let mut coefficients = 0usize;
        for p in (2..=max_p).step_by(2) {
            let brute = parallel_distribution(GroundSet::new(p, 0), MixedFilter::Any)
                .map_err(|e| format!("p={p}: walk failed: {e:?}"))?;
            let formula = hz_series(p)
                .map_err(|e| format!("p={p}: series failed: {e:?}"))?
                .to_monomial()
                .map_err(|e| format!("p={p}: basis change failed: {e:?}"))?
                .to_distribution()
                .map_err(|e| format!("p={p}: negative coefficient: {e:?}"))?;
            if brute != formula {
                return Err(format!("p={p}: distribution mismatch"));
            }
            let expected = double_factorial(p as i64 - 1).map_err(|e| format!("{e:?}"))?;
            if brute.total() != expected {
                return Err(format!("p={p}: total {} != (p-1)!!", brute.total()));
            }
            coefficients += brute.support().len();
        }
        Ok(format!(
            "{} even sizes, {} coefficients",
            max_p / 2,
            coefficients
        ))
    };
    outcome("harer-zagier", format!("p <= {max_p}"), body())
}

/// Two-vertex distributions: one bucketed walk per (p, q), each nonzero
/// bucket must equal the monomial coefficients of the two-vertex series for
/// its s, bucket keys must be feasible, and totals must add up to (p+q-1)!!.
pub fn check_main(max_total: usize) -> CheckResult {
    let body = || -> Result<String, String> {
        let mut buckets_checked = 0usize;
        for total in (2..=max_total).step_by(2) {
            for p in 1..total {
                let q = total - p;
                let buckets = parallel_by_mixed(GroundSet::new(p, q))
                    .map_err(|e| format!("p={p} q={q}: walk failed: {e:?}"))?;
                let mut sum = BigUint::from(0u8);
                for (&s, dist) in &buckets {
                    sum += dist.total();
                    if s == 0 {
                        if p % 2 != 0 || q % 2 != 0 {
                            return Err(format!("p={p} q={q}: s=0 bucket with odd side"));
                        }
                        let within = double_factorial(p as i64 - 1)
                            .and_then(|a| Ok(a * double_factorial(q as i64 - 1)?))
                            .map_err(|e| format!("{e:?}"))?;
                        if dist.total() != within {
                            return Err(format!("p={p} q={q}: s=0 bucket total off"));
                        }
                        continue;
                    }
                    let spec = SeriesSpec::new(p, q, s)
                        .map_err(|e| format!("p={p} q={q}: infeasible bucket s={s}: {e:?}"))?;
                    if dist.total() != spec.pairing_count() {
                        return Err(format!("p={p} q={q} s={s}: bucket total off"));
                    }
                    let formula = main_series_monomial(&spec)
                        .to_distribution()
                        .map_err(|e| format!("p={p} q={q} s={s}: {e:?}"))?;
                    if *dist != formula {
                        return Err(format!("p={p} q={q} s={s}: distribution mismatch"));
                    }
                    buckets_checked += 1;
                }
                let all = double_factorial(total as i64 - 1).map_err(|e| format!("{e:?}"))?;
                if sum != all {
                    return Err(format!("p={p} q={q}: buckets do not sum to (2n-1)!!"));
                }
            }
        }
        Ok(format!("{buckets_checked} (p, q, s) distributions"))
    };
    outcome("two-vertex-distributions", format!("p+q <= {max_total}"), body())
}

/// Summed series: the sum over s of the two-vertex series must equal the
/// Goupil-Schaeffer form, and on the diagonal the Jackson form.
pub fn check_summed(max_total: usize, max_square: usize) -> CheckResult {
    let body = || -> Result<String, String> {
        let mut compared = 0usize;
        for total in (2..=max_total).step_by(2) {
            for p in 1..total {
                let q = total - p;
                let summed =
                    summed_series(p, q).map_err(|e| format!("p={p} q={q}: {e:?}"))?;
                let gs = gs_series(p, q).map_err(|e| format!("p={p} q={q}: {e:?}"))?;
                if summed != gs {
                    return Err(format!("p={p} q={q}: sum over s differs from closed form"));
                }
                compared += 1;
            }
        }
        for n in 1..=max_square {
            let jackson = jackson_series(n).map_err(|e| format!("n={n}: {e:?}"))?;
            let gs = gs_series(n, n).map_err(|e| format!("n={n}: {e:?}"))?;
            if jackson != gs {
                return Err(format!("n={n}: square case differs"));
            }
        }
        Ok(format!(
            "{compared} (p, q) pairs, diagonal up to {max_square}"
        ))
    };
    outcome(
        "summed-series",
        format!("p+q <= {max_total}, diagonal n <= {max_square}"),
        body(),
    )
}

/// Structural zeros of the two-vertex series: no k = n+1 term in the
/// binomial basis, no monomial term above n or of the wrong parity, and the
/// top coefficient must equal the planar count.
pub fn check_structure(max_total: usize) -> CheckResult {
    let body = || -> Result<String, String> {
        let zero = BigInt::from(0u8);
        let mut specs = 0usize;
        for total in (2..=max_total).step_by(2) {
            for p in 1..total {
                let q = total - p;
                let n = total / 2;
                for s in 1..=p.min(q) {
                    let spec = match SeriesSpec::new(p, q, s) {
                        Ok(spec) => spec,
                        Err(_) => continue,
                    };
                    let binomial_form = main_series(&spec);
                    if binomial_form.coeff(n + 1) != zero {
                        return Err(format!("p={p} q={q} s={s}: k=n+1 coefficient nonzero"));
                    }
                    let mono = main_series_monomial(&spec);
                    for (k, c) in mono.iter() {
                        if k > n {
                            return Err(format!("p={p} q={q} s={s}: degree above n"));
                        }
                        if (n - k) % 2 != 0 && *c != zero {
                            return Err(format!("p={p} q={q} s={s} k={k}: parity violation"));
                        }
                    }
                    if mono.coeff(n) != BigInt::from(planar_coefficient(&spec)) {
                        return Err(format!("p={p} q={q} s={s}: planar coefficient off"));
                    }
                    specs += 1;
                }
            }
        }
        Ok(format!("{specs} series"))
    };
    outcome("structural-zeros", format!("p+q <= {max_total}"), body())
}

/// Forest-completion bijection, exhaustively: for every forest on [k] and
/// every admissible root split, the completions enumerated by forward runs
/// over all tuples are exactly the superforests with the surviving roots,
/// their number is k^(m-1) |S|, and the inverse recovers every tuple.
pub fn check_forest_completion(max_k: usize) -> CheckResult {
    let body = || -> Result<String, String> {
        let mut splits = 0usize;
        let mut completions = 0usize;
        for k in 1..=max_k {
            let forests = enumerate_forests(k);
            let outcomes: Vec<Result<(usize, usize), String>> = crate::pool().install(|| {
                forests
                    .par_iter()
                    .map(|base| check_forest_splits(base, k))
                    .collect()
            });
            for result in outcomes {
                let (s, c) = result?;
                splits += s;
                completions += c;
            }
        }
        Ok(format!(
            "{splits} root splits, {completions} completions"
        ))
    };
    outcome("forest-completion", format!("k <= {max_k}"), body())
}

fn check_forest_splits(
    base: &annular_core::RootedForest,
    k: usize,
) -> Result<(usize, usize), String> {
    let roots = base.roots();
    let mut splits = 0usize;
    let mut completions = 0usize;
    // Proper nonempty subsets of the root set: at least one root eliminated,
    // at least one surviving.
    for mask in 1..(1u32 << roots.len()) - 1 {
        let eliminated: Vec<usize> = roots
            .iter()
            .enumerate()
            .filter(|&(b, _)| mask >> b & 1 == 1)
            .map(|(_, &r)| r)
            .collect();
        let survivors: Vec<usize> = roots
            .iter()
            .enumerate()
            .filter(|&(b, _)| mask >> b & 1 == 0)
            .map(|(_, &r)| r)
            .collect();
        let m = eliminated.len();
        let safe = safe_vertices(base, &survivors).map_err(|e| format!("{e:?}"))?;
        let expected = BigUint::from(k).pow(m as u32 - 1) * BigUint::from(safe.len());
        if count_completions(base, &eliminated).map_err(|e| format!("{e:?}"))? != expected {
            return Err(format!("k={k}: count formula disagrees with itself"));
        }

        // Forward over the whole tuple space: free entries range over [k],
        // the last entry over the safe vertices.
        let mut reached = BTreeSet::new();
        let mut tuple = vec![1usize; m];
        let mut done = false;
        while !done {
            for &last in &safe {
                tuple[m - 1] = last;
                let comp = fca_forward(base, &eliminated, &tuple)
                    .map_err(|e| format!("k={k}: forward failed: {e:?}"))?;
                if comp.forest.roots() != survivors {
                    return Err(format!("k={k}: completion has wrong roots"));
                }
                if !reached.insert(comp.forest) {
                    return Err(format!("k={k}: two tuples reach one forest"));
                }
            }
            done = true;
            for slot in tuple.iter_mut().take(m - 1) {
                *slot += 1;
                if *slot <= k {
                    done = false;
                    break;
                }
                *slot = 1;
            }
        }
        if BigUint::from(reached.len()) != expected {
            return Err(format!("k={k}: {} completions, expected {expected}", reached.len()));
        }

        // The image is exactly the superforest family, and the inverse
        // recovers a distinct tuple for each member.
        let supers =
            enumerate_superforests(base, &survivors).map_err(|e| format!("{e:?}"))?;
        if supers.len() != reached.len()
            || supers.iter().any(|forest| !reached.contains(forest))
        {
            return Err(format!("k={k}: completions differ from superforests"));
        }
        let mut tuples = BTreeSet::new();
        for forest in &supers {
            let removals: Vec<(usize, usize)> = eliminated
                .iter()
                .map(|&r| {
                    forest
                        .parent(r)
                        .map(|w| (r, w))
                        .ok_or_else(|| format!("k={k}: eliminated root stayed a root"))
                })
                .collect::<Result<_, _>>()?;
            let inversion =
                fca_inverse(forest, &removals).map_err(|e| format!("{e:?}"))?;
            let comp = fca_forward(base, &eliminated, &inversion.tuple)
                .map_err(|e| format!("k={k}: replay failed: {e:?}"))?;
            if &comp.forest != forest {
                return Err(format!("k={k}: inverse tuple replays a different forest"));
            }
            for (t, &stage) in inversion.sigma.iter().enumerate() {
                if comp.fcp[stage - 1] != t + 1 {
                    return Err(format!("k={k}: stage permutation is not the FCP inverse"));
                }
            }
            if !tuples.insert(inversion.tuple) {
                return Err(format!("k={k}: two forests invert to one tuple"));
            }
        }
        splits += 1;
        completions += supers.len();
    }
    Ok((splits, completions))
}

/// Coefficient reduction: forward differences of brute series values must
/// equal the c_k computed through the array reduction, and on a smaller
/// range the unsimplified product chain must give the same c_k.
pub fn check_reduction(max_total: usize, chain_total: usize) -> CheckResult {
    let body = || -> Result<String, String> {
        let mut coefficients = 0usize;
        for (spec, n) in feasible_specs(max_total) {
            let values = brute_series_values(&spec, n as u64 + 1)
                .map_err(|e| format!("{}: {e:?}", spec_label(&spec)))?;
            let values: Vec<BigInt> = values.into_iter().map(BigInt::from).collect();
            let coeffs = forward_differences(&values);
            if coeffs[0] != BigInt::from(0u8) {
                return Err(format!("{}: nonzero constant term", spec_label(&spec)));
            }
            for (k, coeff) in coeffs.iter().enumerate().skip(1) {
                if *coeff != BigInt::from(c_via_reduction(&spec, k)) {
                    return Err(format!(
                        "{} k={k}: reduction disagrees with the oracle",
                        spec_label(&spec)
                    ));
                }
                coefficients += 1;
            }
        }
        let mut chain = 0usize;
        for (spec, n) in feasible_specs(chain_total) {
            for k in 1..=n + 1 {
                if chain_coefficient(&spec, k) != BigInt::from(c_via_reduction(&spec, k)) {
                    return Err(format!(
                        "{} k={k}: unsimplified chain disagrees",
                        spec_label(&spec)
                    ));
                }
                chain += 1;
            }
        }
        Ok(format!(
            "{coefficients} coefficients against the oracle, {chain} against the chain"
        ))
    };
    outcome(
        "coefficient-reduction",
        format!("p+q <= {max_total}, chain p+q <= {chain_total}"),
        body(),
    )
}

/// c_k assembled from first principles: partial pairings on each row counted
/// by binomials and double factorials, label choices by falling factorials,
/// minimal-array cores by v. Exercises every reduction factor separately.
fn chain_coefficient(spec: &SeriesSpec, k: usize) -> BigInt {
    let (p, q, s) = (spec.p(), spec.q(), spec.s());
    let mut sum = BigInt::from(0u8);
    for i in 0..=(p - s) / 2 {
        for j in 0..=(q - s) / 2 {
            let i2 = (p - 2 * i - s) / 2;
            let j2 = (q - 2 * j - s) / 2;
            let row1 = BigInt::from(
                binomial(p as u64, 2 * i as i64)
                    * double_factorial(2 * i as i64 - 1).expect("odd argument"),
            );
            let row2 = BigInt::from(
                binomial(q as u64, 2 * j as i64)
                    * double_factorial(2 * j as i64 - 1).expect("odd argument"),
            );
            let labels = falling_factorial((p - 2 * i) as i64, i2 as i64)
                * falling_factorial((q - 2 * j) as i64, j2 as i64);
            sum += row1 * row2 * labels * BigInt::from(v_vertical(s, k, i2, j2));
        }
    }
    sum
}

/// Rooted-map distributions: rotation-system enumeration must match the
/// coefficient formula divided by (2n-1)!.
pub fn check_rooted_maps(max_total: usize) -> CheckResult {
    let body = || -> Result<String, String> {
        let mut specs = 0usize;
        for (spec, _) in feasible_specs(max_total) {
            let brute = brute_rooted_maps(&spec);
            if brute != rooted_map_distribution(&spec) {
                return Err(format!("{}: map counts differ", spec_label(&spec)));
            }
            specs += 1;
        }
        Ok(format!("{specs} genus distributions"))
    };
    outcome("rooted-maps", format!("p+q <= {max_total}"), body())
}

/// Vertical-array counting formulas against direct enumeration.
pub fn check_vertical_counts(max_s: usize, max_k: usize, max_ij: usize) -> CheckResult {
    let body = || -> Result<String, String> {
        let mut cases = 0usize;
        for s in 1..=max_s {
            for k in 1..=max_k {
                for i in 0..=max_ij {
                    for j in 0..=max_ij {
                        let all = enumerate_vertical_arrays(s, k, i, j, false);
                        if !all.iter().all(|a| a.is_vertical()) {
                            return Err(format!("s={s} k={k} i={i} j={j}: non-vertical output"));
                        }
                        if BigUint::from(all.len()) != v_vertical(s, k, i, j) {
                            return Err(format!("s={s} k={k} i={i} j={j}: v disagrees"));
                        }
                        let full = enumerate_vertical_arrays(s, k, i, j, true);
                        if !full.iter().all(|a| a.is_full()) {
                            return Err(format!("s={s} k={k} i={i} j={j}: non-full output"));
                        }
                        if BigUint::from(full.len()) != f_full_vertical(s, k, i, j) {
                            return Err(format!("s={s} k={k} i={i} j={j}: f disagrees"));
                        }
                        cases += 1;
                    }
                }
            }
        }
        Ok(format!("{cases} (s, k, i, j) cells"))
    };
    outcome(
        "vertical-array-counts",
        format!("s <= {max_s}, k <= {max_k}, i,j <= {max_ij}"),
        body(),
    )
}

/// Array reduction bijections: exhaustive roundtrips through labelling, xi,
/// and zeta on small ground sets, then randomized roundtrips on larger ones.
pub fn check_bijections(
    exhaustive_total: usize,
    max_k: usize,
    random_total: usize,
    random_cases: usize,
) -> CheckResult {
    let body = || -> Result<String, String> {
        let mut jobs = Vec::new();
        for total in (2..=exhaustive_total).step_by(2) {
            for p in 1..total {
                for k in 1..=max_k {
                    jobs.push((p, total - p, k));
                }
            }
        }
        let counts: Vec<Result<usize, String>> = crate::pool().install(|| {
            jobs.par_iter()
                .map(|&(p, q, k)| {
                    let mut cases = 0usize;
                    let all = enumerate_paired_surjections(GroundSet::new(p, q), k)
                        .map_err(|e| format!("p={p} q={q} k={k}: {e:?}"))?;
                    for ps in &all {
                        roundtrip(ps).map_err(|e| format!("p={p} q={q} k={k}: {e}"))?;
                        cases += 1;
                    }
                    Ok(cases)
                })
                .collect()
        });
        let mut exhaustive = 0usize;
        for c in counts {
            exhaustive += c?;
        }

        let mut rng = StdRng::seed_from_u64(0x5EED_A881);
        for case in 0..random_cases {
            let ps = random_surjection(&mut rng, random_total);
            roundtrip(&ps).map_err(|e| {
                format!(
                    "random case {case} (p={} q={} k={}): {e}",
                    ps.ground().p(),
                    ps.ground().q(),
                    ps.k()
                )
            })?;
        }
        Ok(format!(
            "{exhaustive} exhaustive and {random_cases} random roundtrips"
        ))
    };
    outcome(
        "reduction-bijections",
        format!(
            "exhaustive p+q <= {exhaustive_total}, k <= {max_k}; random p+q <= {random_total}"
        ),
        body(),
    )
}

/// Label recovery alone, exhaustively on the smallest ground sets.
pub fn check_label_recovery(max_total: usize, max_k: usize) -> CheckResult {
    let body = || -> Result<String, String> {
        let mut cases = 0usize;
        for total in (2..=max_total).step_by(2) {
            for p in 1..total {
                let q = total - p;
                for k in 1..=max_k {
                    let all = enumerate_paired_surjections(GroundSet::new(p, q), k)
                        .map_err(|e| format!("p={p} q={q} k={k}: {e:?}"))?;
                    for ps in &all {
                        let array = from_paired_surjection(ps);
                        if !array.is_canonical() {
                            return Err(format!("p={p} q={q} k={k}: image not canonical"));
                        }
                        let recovered = label_recovery(&array)
                            .map_err(|e| format!("p={p} q={q} k={k}: {e:?}"))?;
                        if &recovered != ps {
                            return Err(format!("p={p} q={q} k={k}: labels not recovered"));
                        }
                        cases += 1;
                    }
                }
            }
        }
        Ok(format!("{cases} arrays relabelled"))
    };
    outcome(
        "label-recovery",
        format!("p+q <= {max_total}, k <= {max_k}"),
        body(),
    )
}

fn roundtrip(ps: &PairedSurjection) -> Result<(), String> {
    let array = from_paired_surjection(ps);
    if !array.is_canonical() {
        return Err("image not canonical".to_string());
    }
    let recovered = label_recovery(&array).map_err(|e| format!("recovery: {e:?}"))?;
    if &recovered != ps {
        return Err("labels not recovered".to_string());
    }
    let image = xi(&array).map_err(|e| format!("xi: {e:?}"))?;
    if !image.minimal.is_minimal() {
        return Err("xi image not minimal".to_string());
    }
    let back = xi_inverse(&image.minimal, &image.mu1, &image.mu2)
        .map_err(|e| format!("xi inverse: {e:?}"))?;
    if back != array {
        return Err("xi roundtrip moved the array".to_string());
    }
    let zim = zeta(&image.minimal).map_err(|e| format!("zeta: {e:?}"))?;
    if !zim.vertical.is_vertical() {
        return Err("zeta image not vertical".to_string());
    }
    if zim.vertical.marks(1).len() != zim.kappa1.len() + 1
        || zim.vertical.marks(2).len() != zim.kappa2.len() + 1
    {
        return Err("mark counts disagree with kappa".to_string());
    }
    let minimal = zeta_inverse(&zim.vertical, &zim.kappa1, &zim.kappa2)
        .map_err(|e| format!("zeta inverse: {e:?}"))?;
    if minimal != image.minimal {
        return Err("zeta roundtrip moved the array".to_string());
    }
    Ok(())
}

fn random_surjection(rng: &mut StdRng, max_total: usize) -> PairedSurjection {
    let total = 2 * rng.gen_range(1..=max_total / 2);
    let p = rng.gen_range(1..total);
    let q = total - p;
    let ground = GroundSet::new(p, q);

    let mut points: Vec<usize> = (0..total).collect();
    for x in (1..total).rev() {
        points.swap(x, rng.gen_range(0..=x));
    }
    let mut partner = vec![0usize; total];
    for pair in points.chunks(2) {
        partner[pair[0]] = pair[1];
        partner[pair[1]] = pair[0];
    }
    let pairing = Pairing::from_partner_vec(ground, partner).expect("involution by construction");

    let gamma = standard_rotation(ground).expect("p >= 1");
    let cycles = pairing
        .as_permutation()
        .compose(&gamma.inverse())
        .expect("same ground")
        .cycles();
    // Random colors, compacted so phi is onto [k].
    let mut image: Vec<usize> = cycles.iter().map(|_| rng.gen_range(1..=4)).collect();
    let mut sorted = image.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let k = sorted.len();
    for c in image.iter_mut() {
        *c = sorted.binary_search(c).expect("present") + 1;
    }
    let mut phi = vec![0usize; total];
    for (cycle, &color) in cycles.iter().zip(&image) {
        for &x in cycle {
            phi[x] = color;
        }
    }
    PairedSurjection::new(pairing, phi, k).expect("constant on cycles")
}

/// The worked example: a fixed p=11, q=9, s=5, k=4 instance whose layout
/// and reduction data are known by hand. Checks the built array, the
/// recorded pairs of the xi image, and both reduction roundtrips.
pub fn check_fixture() -> CheckResult {
    let body = || -> Result<String, String> {
        let ground = GroundSet::new(11, 9);
        let u = Point::Unprimed;
        let pr = Point::Primed;
        let pairing = Pairing::from_pairs(
            ground,
            &[
                (u(1), u(9)),
                (u(5), u(8)),
                (u(6), u(7)),
                (pr(2), pr(3)),
                (pr(7), pr(8)),
                (u(2), pr(4)),
                (u(3), pr(1)),
                (u(4), pr(9)),
                (u(10), pr(6)),
                (u(11), pr(5)),
            ],
        )
        .map_err(|e| format!("pairing: {e:?}"))?;
        let classes: [(&[Point], usize); 4] = [
            (&[u(3), u(6), u(8), pr(2), pr(4)], 1),
            (&[pr(3), pr(8)], 2),
            (
                &[u(1), u(2), u(5), u(9), u(10), pr(5), pr(7), pr(9)],
                3,
            ),
            (&[u(4), u(7), u(11), pr(1), pr(6)], 4),
        ];
        let mut phi = vec![0usize; ground.size()];
        for (points, color) in classes {
            for &point in points {
                phi[ground.encode(point).expect("in range")] = color;
            }
        }
        let ps = PairedSurjection::new(pairing, phi, 4).map_err(|e| format!("{e:?}"))?;

        let array = from_paired_surjection(&ps);
        if !array.validate().is_ok() {
            return Err("array fails validation".to_string());
        }
        if array.shape(1) != [3, 0, 5, 3] || array.shape(2) != [2, 2, 3, 2] {
            return Err(format!(
                "shapes {:?} / {:?} differ from the known layout",
                array.shape(1),
                array.shape(2)
            ));
        }
        let marks1: Vec<usize> = array.marks(1).iter().copied().collect();
        let marks2: Vec<usize> = array.marks(2).iter().copied().collect();
        if marks1 != [3] || marks2 != [4] {
            return Err("marked columns differ from the known layout".to_string());
        }
        if label_recovery(&array).map_err(|e| format!("{e:?}"))? != ps {
            return Err("labels not recovered".to_string());
        }

        let image = xi(&array).map_err(|e| format!("xi: {e:?}"))?;
        let mu1 = PartialPairing::new(&[(2, 11), (4, 7)]).map_err(|e| format!("{e:?}"))?;
        let mu2 = PartialPairing::new(&[(1, 3)]).map_err(|e| format!("{e:?}"))?;
        if image.mu1 != mu1 || image.mu2 != mu2 {
            return Err("recorded pairs differ from the known values".to_string());
        }
        if xi_inverse(&image.minimal, &image.mu1, &image.mu2)
            .map_err(|e| format!("xi inverse: {e:?}"))?
            != array
        {
            return Err("xi roundtrip moved the array".to_string());
        }

        let zim = zeta(&image.minimal).map_err(|e| format!("zeta: {e:?}"))?;
        if zim.vertical.row_len(1) != 5 || zim.vertical.row_len(2) != 5 {
            return Err("vertical rows are not the 5 mixed pairs".to_string());
        }
        if zim.vertical.marks(1).len() != 2 || zim.vertical.marks(2).len() != 2 {
            return Err("vertical marks disagree with i=j=1".to_string());
        }
        if zeta_inverse(&zim.vertical, &zim.kappa1, &zim.kappa2)
            .map_err(|e| format!("zeta inverse: {e:?}"))?
            != image.minimal
        {
            return Err("zeta roundtrip moved the array".to_string());
        }
        Ok("layout, recorded pairs, and both roundtrips".to_string())
    };
    outcome("worked-example", "p=11 q=9 s=5 k=4".to_string(), body())
}

fn feasible_specs(max_total: usize) -> Vec<(SeriesSpec, usize)> {
    let mut specs = Vec::new();
    for total in (2..=max_total).step_by(2) {
        for p in 1..total {
            let q = total - p;
            for s in 1..=p.min(q) {
                if let Ok(spec) = SeriesSpec::new(p, q, s) {
                    specs.push((spec, total / 2));
                }
            }
        }
    }
    specs
}

fn spec_label(spec: &SeriesSpec) -> String {
    format!("p={} q={} s={}", spec.p(), spec.q(), spec.s())
}

pub fn suite(name: &str, max_n: usize) -> Vec<CheckResult> {
    let n = max_n.max(1);
    let mut checks = Vec::new();
    if name == "formulas" || name == "all" {
        checks.push(check_hz((2 * n).min(16)));
        checks.push(check_main((2 * n).min(16)));
        checks.push(check_summed(2 * n, n));
        checks.push(check_structure(2 * n));
        checks.push(check_reduction((2 * n).min(12), (2 * n).min(8)));
        checks.push(check_rooted_maps((2 * n).min(10)));
    }
    if name == "forests" || name == "all" {
        checks.push(check_forest_completion(n.min(6)));
    }
    if name == "bijections" || name == "all" {
        checks.push(check_vertical_counts(n.min(4), n.min(4), 2));
        checks.push(check_bijections((2 * n).min(8), 3, (2 * n).min(14), 300));
        checks.push(check_label_recovery((2 * n).min(6), 3));
        checks.push(check_fixture());
    }
    checks
}
