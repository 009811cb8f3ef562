//! The full theorem battery over the default seeded corpus — the same
//! run as `taumod verify-theorems --corpus default --seed 7`.
//!
//! Run with: cargo run --release --example verify_theorems

use std::time::Instant;

fn main() {
    let start = Instant::now();
    let reports = taumod::verify::suites::run_all(7);
    let mut failed = 0;
    for r in &reports {
        println!("{} {}", if r.verdict { "PASS" } else { "FAIL" }, r.check);
        if let Some(w) = &r.witness {
            println!("     witness: {}", serde_json::to_string(w).unwrap());
            failed += 1;
        }
    }
    println!(
        "\n{} checks, {} failed, {:?} total",
        reports.len(),
        failed,
        start.elapsed()
    );
    std::process::exit(if failed == 0 { 0 } else { 1 });
}
