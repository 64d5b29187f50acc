//! Runs every verification suite and prints a summary line for each.
use ver4::verify::{run_suite, Status, SuiteOptions, SUITES};

fn main() -> ver4::Result<()> {
    for name in SUITES {
        let r = run_suite(name, SuiteOptions::default())?;
        println!("{name}: {}/{} match ({})", r.count(Status::Match), r.checks.len(), r.status());
    }
    Ok(())
}
