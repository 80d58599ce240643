//! Acceptance suite: prints one PASS/FAIL line per criterion.
//!
//! The process exits non-zero when any outcome differs from the recorded expectation.
//! Criterion 9 is a known failure: `dJ = −ωJ` read literally is false for `J = μ(I^E)`,
//! while the twisted and gauge-transformed forms hold. Its expected outcome is therefore
//! FAIL, with every other part of the criterion required to hold.

use eisenworks::acceptance::{run_criterion, AcceptanceConfig, CRITERIA};
use eisenworks::CriterionResult;
use rayon::prelude::*;
use std::process::ExitCode;

const EXPECTED_FAIL: &[u32] = &[9];

const CRITERION_9_PARTS: &[&str] = &[
    "shuffle true",
    "log-degree bound true",
    "base point true",
    "dI = -Omega I true",
    "dJ = -mu(Omega) J true",
    "gauge form true",
    "literal dJ = -omega J false",
];

fn as_expected(r: &CriterionResult) -> bool {
    if EXPECTED_FAIL.contains(&r.id) {
        !r.passed && CRITERION_9_PARTS.iter().all(|p| r.detail.contains(p))
    } else {
        r.passed
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.iter().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let selected: Vec<u32> = args.iter().filter_map(|a| a.parse().ok()).collect();
    let ids: Vec<u32> = (1..=CRITERIA)
        .filter(|id| selected.is_empty() || selected.contains(id))
        .collect();
    let config = AcceptanceConfig::default();
    let results: Vec<CriterionResult> = ids
        .par_iter()
        .map(|&id| run_criterion(id, &config))
        .collect();

    let mut unexpected = Vec::new();
    for r in &results {
        println!("{} [{:.1}s]", r.line(), r.seconds);
        if !as_expected(r) {
            unexpected.push(r.id);
        }
    }
    let passed = results.iter().filter(|r| r.passed).count();
    println!(
        "acceptance: {passed} passed, {} failed; expected failures {:?}",
        results.len() - passed,
        EXPECTED_FAIL
    );
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
