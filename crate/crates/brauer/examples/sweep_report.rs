//! A small parameter sweep: every valid tuple in range is cross-validated
//! on all available routes and the disagreement count is the headline.
//!
//! ```bash
//! cargo run -p brauer --example sweep_report
//! ```

use brauer::sweep::{run_sweep, SweepConfig, TupleRecord};

fn main() {
    let mut config = SweepConfig::new(vec![2], 7, 2, 2);
    config.oracle_max_order = 400;
    let report = run_sweep(&config);

    let s = &report.summary;
    println!(
        "{} tuples: {} analyzed, {} skipped, {} oracle skips",
        s.tuples, s.analyzed, s.skipped, s.oracle_skips
    );
    println!(
        "agreements: {}, disagreements: {}",
        s.agreements, s.disagreements
    );
    println!("top skip reasons:");
    let mut reasons: Vec<(&String, &usize)> = s.skip_reasons.iter().collect();
    reasons.sort_by(|a, b| b.1.cmp(a.1));
    for (reason, count) in reasons.iter().take(5) {
        println!("  {count:4} x {reason}");
    }

    println!("\ntuples with a non-trivial primitive quotient:");
    for record in &report.records {
        if let TupleRecord::Analyzed(r) = record {
            if let Some(inv) = &r.oracle.invariants {
                if !inv.factors.is_empty() {
                    println!(
                        "  {}  |G| = {:4}  ->  {}",
                        r.params.label(),
                        r.group_order,
                        inv
                    );
                }
            }
        }
    }

    println!("\nCSV head:");
    for line in report.to_csv().lines().take(4) {
        println!("  {line}");
    }
}
