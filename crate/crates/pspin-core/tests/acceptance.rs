//! The acceptance suite: one test per criterion, each printing a pass/fail
//! line. Criterion 12's genus-2 sub-assertions are implemented as published
//! and are expected to fail against exact arithmetic (two independent exact
//! computations agree with each other and not with the published genus-2
//! values); the analysis lives in the project notes. Run with
//! `cargo test --test acceptance -- --nocapture` for the full report.

use pspin_core::verify;

fn run(check: verify::Check) {
    println!("{}", check.line());
    assert!(check.passed, "{}", check.line());
}

#[test]
fn criterion_01_genus_one_general_p() {
    run(verify::criterion_01());
}

#[test]
fn criterion_02_higher_genus_closed_forms() {
    run(verify::criterion_02());
}

#[test]
fn criterion_03_kontsevich_tower_both_pipelines() {
    run(verify::criterion_03());
}

#[test]
fn criterion_04_euler_characteristics() {
    run(verify::criterion_04());
}

#[test]
fn criterion_05_unitary_model_series() {
    run(verify::criterion_05());
}

#[test]
fn criterion_06_p_minus_three_values() {
    run(verify::criterion_06());
}

#[test]
fn criterion_07_p_half_closed_form() {
    run(verify::criterion_07());
}

#[test]
fn criterion_08_p_minus_half_rigidity() {
    run(verify::criterion_08());
}

#[test]
fn criterion_09_p_three_halves() {
    run(verify::criterion_09());
}

#[test]
fn criterion_10_p_minus_three_halves() {
    run(verify::criterion_10());
}

#[test]
fn criterion_11_two_point_p2() {
    run(verify::criterion_11());
}

#[test]
fn criterion_12_two_point_p_half_published_values() {
    // The genus-1 family matches the published data exactly; the genus-2
    // sub-assertions are kept as published and fail against the exact
    // residue computation (see notes/decisions ledger). An honest red.
    run(verify::criterion_12());
}

#[test]
fn criterion_13_two_point_p_minus_half_zero() {
    run(verify::criterion_13());
}

#[test]
fn criterion_14_open_intersection_numbers() {
    run(verify::criterion_14());
}

#[test]
fn criterion_15_numeric_oracle() {
    run(verify::criterion_15());
}

#[test]
fn criterion_16_property_suites() {
    run(verify::criterion_16());
}
