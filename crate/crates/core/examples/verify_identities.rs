// Running the full symbolic verification suite as a library call.

use std::time::Duration;

use hecke_centre::cli::verification_report;
use hecke_centre::cyclotomic::Quotient;
use hecke_centre::Result;

pub fn run_example() -> Result<()> {
    let quot = Quotient::new(3)?;
    for k in 0..3 {
        println!("X1^{} z = {}", k - 1, quot.x1_power_times_z(k - 1)?);
    }

    let report = verification_report(4, 6, Duration::from_secs(60))?;
    for c in report.checks.iter().filter(|c| c.id.starts_with("theorem")) {
        println!("{} {}", if c.pass { "PASS" } else { "FAIL" }, c.id);
    }
    println!("{} checks, status {}", report.checks.len(), report.status);
    assert!(report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
