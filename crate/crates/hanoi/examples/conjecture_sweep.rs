//! Sweep the whole conjecture domain up to (20,50) and compare the
//! recurrence against the linear formula, reproducing the zero-mismatch
//! result.

use hanoi::validation::{run_validation, LowerBoundMode, ValidationConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = ValidationConfig::default(); // p in 4..=20, n up to 50, rows from n = p
    let report = run_validation(&config)?;
    println!(
        "cases = {}, matches = {}, mismatches = {}, skipped beyond n_max = {}",
        report.summary.cases,
        report.summary.matches,
        report.summary.mismatches,
        report.summary.skipped
    );

    let widest = ValidationConfig {
        lower_bound_mode: LowerBoundMode::FromPMinus1,
        ..Default::default()
    };
    let widest_report = run_validation(&widest)?;
    println!(
        "widest domain (rows from n = p-1): cases = {}, mismatches = {}",
        widest_report.summary.cases, widest_report.summary.mismatches
    );

    let path = std::env::temp_dir().join("conjecture_sweep.json");
    std::fs::write(&path, report.to_json())?;
    println!("full JSON report written to {}", path.display());
    Ok(())
}
