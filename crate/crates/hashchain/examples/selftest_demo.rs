//! Differential testing as a library call: run randomized trials of both
//! searchers against the naive oracle and inspect the verdict.
//!
//!     cargo run --example selftest_demo

use hashchain::selftest;

fn main() {
    let trials = 2000;
    let report = selftest::run(trials, 0xFEED);
    match report.failure {
        None => println!(
            "{} trials over alphabets {:?}: hc and shc always matched the oracle",
            report.trials_run,
            selftest::TRIAL_SIGMAS
        ),
        Some(failure) => {
            // run() shrinks the inputs before reporting
            println!(
                "mismatch after {} trials: {}",
                report.trials_run, failure.detail
            );
            println!(
                "  q={} alpha={} m={} n={}",
                failure.case.q,
                failure.case.alpha,
                failure.case.pattern.len(),
                failure.case.text.len()
            );
            println!("  expected {:?}", failure.expected);
            println!("  hc       {:?}", failure.hc);
            println!("  shc      {:?}", failure.shc);
            std::process::exit(1);
        }
    }
}
