//! One test per acceptance criterion; each prints a single PASS/FAIL line.

use polygap::verify;

fn criterion(id: usize) {
    let outcome = verify::run(id);
    println!("{outcome}");
    assert!(outcome.passed, "{outcome}");
}

#[test]
fn ac01_identity_sweep() {
    criterion(1);
}

#[test]
fn ac02_triplex_f_vectors() {
    criterion(2);
}

#[test]
fn ac03_pentasm() {
    criterion(3);
}

#[test]
fn ac04_oracle_equivalence() {
    criterion(4);
}

#[test]
fn ac05_gap_reproduction() {
    criterion(5);
}

#[test]
fn ac06_square_gap_sweep() {
    criterion(6);
}

#[test]
fn ac07_euler_relation() {
    criterion(7);
}

#[test]
fn ac08_uniqueness_catalogue() {
    criterion(8);
}

#[test]
fn ac09_facet_and_ridge_minima() {
    criterion(9);
}

#[test]
fn ac10_margin_positivity() {
    criterion(10);
}
