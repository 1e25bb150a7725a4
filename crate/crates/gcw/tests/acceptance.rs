//! Runs the reproduction battery and prints one PASS/FAIL line per
//! acceptance criterion. Exits nonzero on any failure other than the known
//! one below.

use std::process::ExitCode;

use gcw::battery::{checks, criterion_lines, run, select, CRITERIA};
use gcw::Budget;

/// The one comparison known to disagree with a quoted value: the (12,24,6)
/// Hadamard code has covering radius 4, not the quoted 3.
const KNOWN_FAILURE: (&str, &str) = ("hadamard12-parameters", "(n=12, |C|=24, δ=6, ρ=4)");

fn main() -> ExitCode {
    let mut problems = Vec::new();
    if select(Some("golay")).len() != 4 || select(Some("twisted")).len() != 3 || !select(Some("no-such-check")).is_empty() {
        problems.push("filter selection sizes changed".to_string());
    }
    if let Some(k) = (1..=CRITERIA.len()).find(|&k| !checks().iter().any(|c| c.criterion == k)) {
        problems.push(format!("criterion {k} has no check"));
    }

    let results = run(None, &Budget::default());
    for r in &results {
        let mark = if r.pass { "ok  " } else { "FAIL" };
        println!("  {mark} [{:>2}] {} ({} ms): {}", r.criterion, r.id, r.millis, r.computed);
    }
    for (k, pass, detail) in criterion_lines(&results) {
        let verdict = if pass { "PASS" } else { "FAIL" };
        let title = CRITERIA[k - 1];
        if detail.is_empty() {
            println!("criterion {k:>2} {verdict}: {title}");
        } else {
            println!("criterion {k:>2} {verdict}: {title}: {detail}");
        }
    }
    let failures: Vec<_> = results.iter().filter(|r| !r.pass).map(|r| (r.id, r.computed.as_str())).collect();
    if failures != [KNOWN_FAILURE] {
        problems.push(format!("unexpected battery failures: {failures:?}"));
    }

    if problems.is_empty() {
        println!("acceptance: only the known hadamard12 covering-radius discrepancy fails");
        ExitCode::SUCCESS
    } else {
        for p in &problems {
            eprintln!("acceptance: {p}");
        }
        ExitCode::FAILURE
    }
}
