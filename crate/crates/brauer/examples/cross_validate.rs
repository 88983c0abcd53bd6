//! All three routes on a single tuple: the closed-form classifier, the
//! component-graph criterion, and the exact oracle, with the agreement
//! verdict and timings.
//!
//! ```bash
//! cargo run -p brauer --example cross_validate
//! ```

use brauer::analysis::{analyze, AnalysisOptions};
use brauer::qe::{KType, QeParams};

fn main() {
    let params = QeParams {
        p: 2,
        q: 5,
        k_type: KType::Cyclic,
        n: 3,
        m: 2,
        j: 3,
        k: None,
        r: None,
    };
    let opts = AnalysisOptions {
        with_witnesses: true,
        ..Default::default()
    };
    let report = analyze(&params, &opts).expect("valid parameters");

    println!("{} (|G| = {})", params.label(), report.group_order);
    println!(
        "hypotheses: faithful = {}, action kernel non-trivial = {}",
        report.hypothesis.a_faithful_on_c, report.hypothesis.action_kernel_nontrivial
    );
    println!(
        "classifier: {:?} case {:?} -> {:?}   [{} ms]",
        report.verdict.status,
        report.verdict.matched_case,
        report.verdict.invariants.factors,
        report.timings.classify_ms
    );
    println!(
        "graph route: {:?}, d = {:?} -> {:?}   [{} ms]",
        report.gamma.applicability,
        report.gamma.component_count,
        report.gamma.predicted,
        report.timings.gamma_ms
    );
    match &report.oracle.invariants {
        Some(inv) => println!(
            "oracle: kernel rank {} -> {:?}   [{} ms]",
            report.oracle.kernel_rank.unwrap(),
            inv.factors,
            report.timings.oracle_ms
        ),
        None => println!(
            "oracle skipped: {}",
            report.oracle.skip_reason.as_deref().unwrap_or("-")
        ),
    }
    println!("routes agree: {}", report.routes_agree);
    if !report.oracle.theta_witnesses.is_empty() {
        println!(
            "witness relations across components: {}",
            report.oracle.theta_witnesses.len()
        );
    }
}
