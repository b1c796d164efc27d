//! Runs every acceptance sweep and prints one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use ordfor::checks::acceptance_suite;

fn main() -> ExitCode {
    let suite = acceptance_suite();
    let total = suite.len();
    let mut failed = 0;
    for (i, (name, run)) in suite.into_iter().enumerate() {
        let start = Instant::now();
        let report = run();
        let secs = start.elapsed().as_secs_f64();
        let verdict = if report.pass { "PASS" } else { "FAIL" };
        println!("{verdict} [{:>2}/{total}] {name} ({secs:.1}s)", i + 1);
        if !report.pass {
            failed += 1;
            for c in report.counterexamples.iter().take(3) {
                println!("    counterexample: {c}");
            }
        }
    }
    println!("{} of {total} criteria passed", total - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
