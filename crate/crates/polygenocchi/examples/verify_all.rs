//! Run every verification suite and print the aggregate report: per-suite
//! case counts plus the deviation ledger. A deviation records a printed
//! identity whose stated form failed certification together with the
//! reconstruction that passes; the suites certify the reconstruction.
//!
//! Run with: cargo run --example verify_all

use polygenocchi::theorems::{run_suite, SUITES};

fn main() -> polygenocchi::Result<()> {
    let (n_max, trials, seed) = (8, 5, 42);
    println!("running all suites at n_max={n_max}, trials={trials}, seed={seed}\n");

    for name in SUITES.iter().filter(|s| **s != "all") {
        let report = run_suite(name, n_max, trials, seed)?;
        let status = if report.passed { "ok" } else { "FAILED" };
        println!(
            "  {name:<14} {status:<8} {} cases, {} deviations",
            report.cases.len(),
            report.deviations.len()
        );
    }

    let all = run_suite("all", n_max, trials, seed)?;
    println!(
        "\naggregate: {} cases, passed = {}",
        all.cases.len(),
        all.passed
    );

    println!("\ndeviation ledger ({} entries):", all.deviations.len());
    for d in &all.deviations {
        println!("\n[{}] {}", d.theorem, d.note);
        println!("  printed:       {}", d.printed);
        println!("  reconstructed: {}", d.reconstructed);
    }
    Ok(())
}
