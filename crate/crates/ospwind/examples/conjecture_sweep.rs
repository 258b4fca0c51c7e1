//! Runs the verification harness over desk-scale parameter ranges of all
//! three families and summarizes the reports: winding histogram versus
//! Ehrhart h*-vector, expected cardinalities, and the structural checks.
//!
//! Run with: cargo run --example conjecture_sweep

use ospwind::verify::{hypersimplex_sweep, simplex_sweep, slice_sweep, sweep};

fn main() {
    let mut instances = hypersimplex_sweep(6);
    instances.extend(simplex_sweep(4, 4));
    instances.extend(slice_sweep(2, 4));

    let jobs = std::thread::available_parallelism()
        .map(|cores| cores.get())
        .unwrap_or(1);
    let reports = sweep(&instances, jobs).unwrap();

    for report in &reports {
        let expected = report
            .expected_count
            .as_ref()
            .map(|c| c.to_string())
            .unwrap_or_else(|| "-".into());
        println!(
            "{:<28} histogram={:<18} hstar={:<18} count={:<6} expected={:<6} {}",
            report.family.to_string(),
            report.histogram.to_string(),
            report.hstar.to_string(),
            report.total_count,
            expected,
            if report.passed() { "ok" } else { "MISMATCH" },
        );
    }

    let matched = reports.iter().filter(|r| r.passed()).count();
    println!("\n{matched}/{} instances verified", reports.len());
}
