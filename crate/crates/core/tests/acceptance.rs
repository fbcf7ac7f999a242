//! Acceptance criteria 1 through 10, one status line each.
//!
//! Run with `cargo test -p chowkit --test acceptance`. Failing checks are
//! listed under their criterion and the process exits nonzero.

use std::process::ExitCode;
use std::time::Instant;

use chowkit::suites::{self, Report, SuiteOptions};

type Criterion<'a> = (u32, &'static str, Box<dyn Fn() -> Vec<Report> + 'a>);

fn criteria(opts: &SuiteOptions) -> Vec<Criterion<'_>> {
    vec![
        (1, "B*A = 0 hyperelliptic, 1 <= g+1 <= k <= 12", Box::new(|| vec![suites::ba_zero_hyper(None, 12)])),
        (2, "B*A = 0 binary, d <= 12", Box::new(|| vec![suites::ba_zero_binary(12)])),
        (3, "binary Sylvester / Bezout / gcd oracle, d <= 8", Box::new(move || vec![suites::binary_crosscheck(8, opts)])),
        (4, "ternary quadrics Pfaffian and determinant", Box::new(move || vec![suites::ternary_quadrics(opts)])),
        (5, "Eagon-Northcott, g <= 3, f <= 6, n <= 6", Box::new(move || vec![suites::eagon_northcott_suite(3, 6, 6, opts)])),
        (6, "Psi reproduction, rational normal curves and S(2,1)", Box::new(move || vec![suites::psi_reproduction(opts)])),
        (7, "hyperelliptic semantics, g <= 2, k <= 5", Box::new(move || vec![suites::hyper_semantics(2, 5, opts)])),
        (8, "elliptic fixture", Box::new(move || vec![suites::elliptic_suite(opts)])),
        (9, "Veronese tables", Box::new(|| vec![suites::tables_suite()])),
        (10, "property suites", Box::new(move || vec![suites::properties_suite(opts)])),
    ]
}

fn main() -> ExitCode {
    let opts = SuiteOptions::default();
    let mut failed = Vec::new();
    for (n, title, run) in criteria(&opts) {
        let start = Instant::now();
        let reports = run();
        let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
        let passed = reports.iter().all(Report::passed);
        let status = if passed { "PASS" } else { "FAIL" };
        println!("criterion {n}: {status} {title} ({checks} checks, {:.1}s)", start.elapsed().as_secs_f64());
        for c in reports.iter().flat_map(|r| r.failures()) {
            println!("    FAIL {}: {}", c.name, c.detail);
        }
        if !passed {
            failed.push(n);
        }
    }
    let extra = suites::scroll_sign_corrected(&opts);
    println!(
        "note: S(2,1) printed matrix with entry (1,2) negated: {} ({})",
        if extra.passed() { "PASS" } else { "FAIL" },
        extra.checks.iter().map(|c| c.detail.as_str()).collect::<Vec<_>>().join("; ")
    );
    if failed.is_empty() {
        println!("all 10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("failed criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
