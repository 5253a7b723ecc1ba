//! Seeded randomised verification of every identity, with the printed-formula
//! deviations it finds.
//!
//!     cargo run --release --example verify -- [trials] [seed]

use signed_corona::verify::{run_verify, VerifyConfig};

fn main() -> signed_corona::Result<()> {
    let mut args = std::env::args().skip(1);
    let trials = args.next().and_then(|a| a.parse().ok()).unwrap_or(50);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(7);
    let report = run_verify(VerifyConfig { trials, seed, max_n: 5 })?;
    println!("{} checks, {} failures", report.checks, report.failures.len());
    for (check, n) in &report.errata_summary {
        println!("  printed-formula deviation {check:<34} {n:>4} trials");
    }
    if let Some(e) = report.errata.first() {
        println!("first deviation (trial {}, {}): {}", e.trial, e.check, e.detail);
    }
    for f in &report.failures {
        println!("FAIL trial {} {}: {}", f.trial, f.check, f.detail);
    }
    Ok(())
}
