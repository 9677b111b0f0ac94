//! The six acceptance checks, one test each, each printing a single
//! pass/fail line with its runtime. Budgets are generous multiples of the
//! observed runtimes; blowing one usually means an algorithmic regression,
//! not a slow machine.

use quasisocle::verify::criteria::run_criterion;
use std::time::{Duration, Instant};

fn run(index: u8, budget: Duration) {
    let start = Instant::now();
    let report = run_criterion(index).expect("known criterion");
    let elapsed = start.elapsed();
    let verdict = if report.passed { "PASS" } else { "FAIL" };
    println!(
        "criterion {} ({}): {verdict} in {:.2}s — {}",
        report.index,
        report.name,
        elapsed.as_secs_f64(),
        report.detail
    );
    assert!(report.passed, "criterion {index}: {}", report.detail);
    assert!(
        elapsed <= budget,
        "criterion {index} took {elapsed:?}, budget {budget:?}"
    );
}

#[test]
fn criterion_1_showcase_table_1() {
    run(1, Duration::from_secs(1));
}

#[test]
fn criterion_2_showcase_tables_2_and_3() {
    run(2, Duration::from_secs(5));
}

#[test]
fn criterion_3_main_statement_sweep() {
    run(3, Duration::from_secs(60));
}

#[test]
fn criterion_4_supporting_statement_sweeps() {
    run(4, Duration::from_secs(60));
}

#[test]
fn criterion_5_dense_oracle_agreement() {
    run(5, Duration::from_secs(30));
}

#[test]
fn criterion_6_conductor_formulas() {
    run(6, Duration::from_secs(1));
}
