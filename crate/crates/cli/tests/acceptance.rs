//! Acceptance criteria, one test per criterion. Each test prints a single
//! pass/fail line and asserts it. Budgets are sized for the stated time
//! bounds; the heavy sweeps parallelize over the pairing-walk branches.

use annular_cli::verify::{
    check_bijections, check_fixture, check_forest_completion, check_hz, check_label_recovery,
    check_main, check_reduction, check_structure, check_summed, check_vertical_counts,
    CheckResult,
};

fn report(criterion: usize, checks: &[CheckResult]) {
    let pass = checks.iter().all(|c| c.pass);
    let detail: Vec<String> = checks
        .iter()
        .map(|c| format!("{}: {}", c.name, c.detail))
        .collect();
    let detail = detail.join("; ");
    println!(
        "criterion {criterion}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {detail}");
}

#[test]
fn criterion_1_one_vertex_distributions() {
    report(1, &[check_hz(16)]);
}

#[test]
fn criterion_2_two_vertex_distributions() {
    report(2, &[check_main(16)]);
}

#[test]
fn criterion_3_summed_series() {
    report(3, &[check_summed(24, 12)]);
}

#[test]
fn criterion_4_structural_zeros() {
    report(4, &[check_structure(24)]);
}

#[test]
fn criterion_5_forest_completion() {
    report(5, &[check_forest_completion(6)]);
}

#[test]
fn criterion_6_coefficient_reduction() {
    report(6, &[check_reduction(12, 8)]);
}

#[test]
fn criterion_7_array_bijections() {
    report(
        7,
        &[
            check_vertical_counts(4, 4, 2),
            check_bijections(8, 3, 14, 300),
            check_label_recovery(6, 3),
        ],
    );
}

#[test]
fn criterion_8_worked_example() {
    report(8, &[check_fixture()]);
}
