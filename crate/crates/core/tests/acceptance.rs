//! Acceptance suite: every registered verification check must pass within
//! its time budget. Run with `--nocapture` to see one line per criterion.

use sgwb_core::suite;

fn run(name: &str) {
    let report = suite::run_check(name).expect("check is registered");
    println!("{}", report.line());
    assert!(report.passed, "{name} failed: {}", report.details);
    assert!(
        report.millis <= report.budget_millis,
        "{name} exceeded its budget: {} ms > {} ms",
        report.millis,
        report.budget_millis
    );
}

#[test]
fn criterion_01_closure_oracle_equivalence() {
    run("closure-oracle-equivalence");
}

#[test]
fn criterion_02_group_congruence_correspondence() {
    run("group-congruence-correspondence");
}

#[test]
fn criterion_03_right_zero_bell_counts() {
    run("right-zero-bell-counts");
}

#[test]
fn criterion_04_schutzenberger_groups() {
    run("schutzenberger-groups");
}

#[test]
fn criterion_05_subgroup_lattice_embedding() {
    run("subgroup-lattice-embedding");
}

#[test]
fn criterion_06_transfer_soundness() {
    run("transfer-soundness");
}

#[test]
fn criterion_07_right_zero_product_minimal_generators() {
    run("right-zero-product-minimal-generators");
}

#[test]
fn criterion_08_normal_form_witnesses() {
    run("normal-form-witnesses");
}

#[test]
fn criterion_09_certificate_audit() {
    run("certificate-audit");
}

#[test]
fn criterion_10_construction_conformance() {
    run("construction-conformance");
}
