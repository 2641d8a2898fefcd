//! Runs a check suite over the builtin catalog and prints a summary.
//!
//!     cargo run --release --example verify_catalog -- lemmas

use omega_norm::catalog::default_catalog;
use omega_norm::harness::{run_suite, HarnessConfig, Status, Suite};

fn main() -> omega_norm::Result<()> {
    let suite = Suite::parse(&std::env::args().nth(1).unwrap_or_else(|| "all".into()))?;
    let report = run_suite(suite, &default_catalog(), &HarnessConfig::default());
    for c in &report.checks {
        let mark = match c.status {
            Status::Pass => "ok  ",
            Status::Fail => "FAIL",
            Status::Skipped => "skip",
        };
        println!("{mark} {:<8} {}", c.group, c.check_id);
    }
    let s = report.summary;
    println!("pass {} fail {} skipped {}", s.pass, s.fail, s.skipped);
    Ok(())
}
