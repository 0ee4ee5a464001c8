//! One PASS/FAIL line per acceptance criterion. All comparisons are exact;
//! the time limits printed with each line are the only tolerances.

use std::process::ExitCode;

fn main() -> ExitCode {
    let results = logfano::checks::run_checks(&[]).expect("no filter");
    let mut failed = 0;
    for r in &results {
        println!("{}", r.line());
        failed += usize::from(!r.passed);
    }
    println!("{} of {} checks passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
