//! Acceptance suite: one test per criterion, each driving the corresponding
//! verification sweep at its full bounds and demanding zero failures
//! (everything is exact rational arithmetic, so the tolerance is zero
//! throughout). Each test prints a single PASS/FAIL line; `cargo test`
//! additionally reports one ok/FAILED line per criterion.

use fschur::verify::{run_suite, SuiteConfig, VerificationReport};

fn run(criterion: &str, suite: &str, cfg: SuiteConfig) -> VerificationReport {
    let report = run_suite(suite, &cfg).expect("suite exists");
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    println!(
        "{verdict} [{criterion}] {suite}: {} cases, {} failures, {} ms",
        report.cases_run,
        report.failures.len(),
        report.elapsed_ms
    );
    for f in report.failures.iter().take(5) {
        println!("  failing case: {} expected {} got {}", f.inputs, f.expected, f.actual);
    }
    report
}

#[test]
fn criterion_01_dimension_ratio() {
    let report = run(
        "1",
        "dim-ratio",
        SuiteConfig { max_mu: Some(4), max_lambda: Some(8), ..Default::default() },
    );
    assert!(report.passed(), "{:?}", report.failures.first());
}

#[test]
fn criterion_02_phi_correspondence() {
    let report = run(
        "2",
        "phi",
        SuiteConfig { max_mu: Some(5), max_lambda: Some(8), ..Default::default() },
    );
    assert!(report.passed(), "{:?}", report.failures.first());
}

#[test]
fn criterion_03_combinatorial_equals_determinantal() {
    let report = run(
        "3",
        "jacobi-trudi-vs-combinatorial",
        SuiteConfig { n: Some(3), ..Default::default() },
    );
    assert!(report.passed(), "{:?}", report.failures.first());
}

#[test]
fn criterion_04_sergeev_pragacz() {
    let report = run(
        "4",
        "sergeev-pragacz",
        SuiteConfig { max_size: Some(8), n: Some(4), ..Default::default() },
    );
    assert!(report.passed(), "{:?}", report.failures.first());
}

#[test]
fn criterion_05_route_agreement() {
    let report = run(
        "5",
        "giambelli",
        SuiteConfig { max_size: Some(8), ..Default::default() },
    );
    assert!(report.passed(), "{:?}", report.failures.first());
}

#[test]
fn criterion_06_transition_coefficients() {
    let report = run(
        "6",
        "transition",
        SuiteConfig { max_size: Some(7), ..Default::default() },
    );
    assert!(report.passed(), "{:?}", report.failures.first());
}

#[test]
fn criterion_07_vanishing_and_special_values() {
    let report = run(
        "7",
        "vanishing",
        SuiteConfig { max_size: Some(6), ..Default::default() },
    );
    assert!(report.passed(), "{:?}", report.failures.first());
}

#[test]
fn criterion_08_duality() {
    let report = run(
        "8",
        "duality",
        SuiteConfig { max_size: Some(7), ..Default::default() },
    );
    assert!(report.passed(), "{:?}", report.failures.first());
}

#[test]
fn criterion_09_hook_identities() {
    let report = run(
        "9",
        "hook-identity",
        SuiteConfig { max_size: Some(4), ..Default::default() },
    );
    assert!(report.passed(), "{:?}", report.failures.first());
}

#[test]
fn criterion_10_series_identities() {
    let report = run("10", "series", SuiteConfig::default());
    assert!(report.passed(), "{:?}", report.failures.first());
}

#[test]
fn criterion_11_interpolation_characterization() {
    let report = run(
        "11",
        "interpolation",
        SuiteConfig { max_size: Some(5), ..Default::default() },
    );
    assert!(report.passed(), "{:?}", report.failures.first());
}

#[test]
fn criterion_12_paths_bijection() {
    let report = run(
        "12",
        "paths-bijection",
        SuiteConfig { max_size: Some(6), n: Some(3), ..Default::default() },
    );
    assert!(report.passed(), "{:?}", report.failures.first());
}
