//! Parameter sweeps: enumerate tuples over the requested ranges, analyze
//! each one on every applicable route, and assemble a machine-readable
//! report. Tuples are independent work items; the report is a deterministic
//! ordered merge, so re-runs are bit-identical apart from timings.

use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

use crate::analysis::{analyze, AnalysisOptions, AnalysisReport};
use crate::numtheory::is_prime;
use crate::qe::{validate, KType, QeParams};

#[derive(Debug, Clone, Serialize)]
pub struct SweepConfig {
    pub ps: Vec<u64>,
    pub q_max: u64,
    pub n_max: u32,
    pub m_max: u32,
    pub oracle_max_order: usize,
    pub gamma_dihedral_includes_klein: bool,
}

impl SweepConfig {
    pub fn new(ps: Vec<u64>, q_max: u64, n_max: u32, m_max: u32) -> Self {
        SweepConfig {
            ps,
            q_max,
            n_max,
            m_max,
            oracle_max_order: crate::analysis::oracle_max_order_from_env(),
            gamma_dihedral_includes_klein: false,
        }
    }
}

/// One enumerated tuple: either analyzed or skipped with the validation
/// reasons.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum TupleRecord {
    Analyzed(Box<AnalysisReport>),
    Skipped {
        params: QeParams,
        reasons: Vec<String>,
    },
}

impl TupleRecord {
    pub fn params(&self) -> &QeParams {
        match self {
            TupleRecord::Analyzed(report) => &report.params,
            TupleRecord::Skipped { params, .. } => params,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SweepSummary {
    pub tuples: usize,
    pub analyzed: usize,
    pub skipped: usize,
    pub agreements: usize,
    pub disagreements: usize,
    /// Histogram of skip reasons (first violation per skipped tuple).
    pub skip_reasons: BTreeMap<String, usize>,
    /// Histogram of oracle skips among analyzed tuples.
    pub oracle_skips: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub summary: SweepSummary,
    pub records: Vec<TupleRecord>,
}

/// The tuples a sweep visits, in deterministic order: for each p (sorted),
/// prime q != p up to the bound, each K family legal for p, sizes n and m in
/// range, j over the units and k over all residues. Data-dependent
/// conditions (p^m | q-1, action orders, the even-k constraint) are left to
/// validation so that skips are recorded, not silently dropped.
pub fn enumerate_tuples(config: &SweepConfig) -> Vec<QeParams> {
    let mut ps = config.ps.clone();
    ps.sort_unstable();
    ps.dedup();
    let mut out = Vec::new();
    for &p in &ps {
        for q in 2..=config.q_max {
            if !is_prime(q) || q == p {
                continue;
            }
            let k_types: &[KType] = if p == 2 {
                &[
                    KType::Cyclic,
                    KType::Dihedral,
                    KType::Quaternion,
                    KType::Semidihedral,
                ]
            } else {
                &[KType::Cyclic]
            };
            for &k_type in k_types {
                let n_range: Vec<u32> = match k_type {
                    KType::Cyclic => (0..=config.n_max).collect(),
                    KType::Semidihedral => (3..=config.n_max).collect(),
                    _ => (2..=config.n_max).collect(),
                };
                for m in 1..=config.m_max {
                    for &n in &n_range {
                        let pn = p.pow(n);
                        let js: Vec<i64> = if n == 0 {
                            vec![1]
                        } else {
                            (1..pn)
                                .filter(|&j| num_integer::gcd(j, pn) == 1)
                                .map(|j| j as i64)
                                .collect()
                        };
                        for &j in &js {
                            let ks: Vec<Option<i64>> = if k_type.has_x() {
                                (0..pn as i64).map(Some).collect()
                            } else {
                                vec![None]
                            };
                            for k in ks {
                                out.push(QeParams {
                                    p,
                                    q,
                                    k_type,
                                    n,
                                    m,
                                    j,
                                    k,
                                    r: None,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Runs the sweep. Partial failures (unexpected analysis errors) surface as
/// skips with the error text; they never abort the run.
pub fn run_sweep(config: &SweepConfig) -> SweepReport {
    let tuples = enumerate_tuples(config);
    let opts = AnalysisOptions {
        oracle_max_order: config.oracle_max_order,
        gamma_dihedral_includes_klein: config.gamma_dihedral_includes_klein,
        ..Default::default()
    };
    let records: Vec<TupleRecord> = tuples
        .par_iter()
        .map(|params| {
            let violations = validate(params);
            if !violations.is_empty() {
                return TupleRecord::Skipped {
                    params: params.clone(),
                    reasons: violations.iter().map(|v| v.to_string()).collect(),
                };
            }
            match analyze(params, &opts) {
                Ok(report) => TupleRecord::Analyzed(Box::new(report)),
                Err(err) => TupleRecord::Skipped {
                    params: params.clone(),
                    reasons: vec![err.to_string()],
                },
            }
        })
        .collect();

    let mut summary = SweepSummary {
        tuples: records.len(),
        analyzed: 0,
        skipped: 0,
        agreements: 0,
        disagreements: 0,
        skip_reasons: BTreeMap::new(),
        oracle_skips: 0,
    };
    for record in &records {
        match record {
            TupleRecord::Analyzed(report) => {
                summary.analyzed += 1;
                if report.routes_agree {
                    summary.agreements += 1;
                } else {
                    summary.disagreements += 1;
                }
                if !report.oracle.ran {
                    summary.oracle_skips += 1;
                }
            }
            TupleRecord::Skipped { reasons, .. } => {
                summary.skipped += 1;
                let key = reasons.first().cloned().unwrap_or_default();
                *summary.skip_reasons.entry(key).or_insert(0) += 1;
            }
        }
    }
    SweepReport {
        config: config.clone(),
        summary,
        records,
    }
}

impl SweepReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Flat CSV with one row per tuple; invariant-factor lists are joined
    /// with `|`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "p,q,k_type,n,m,j,k,order,status,skip_reason,verdict,case,\
             classifier_invariants,gamma_applicability,gamma_components,gamma_invariants,\
             oracle_ran,oracle_invariants,kernel_rank,routes_agree\n",
        );
        for record in &self.records {
            let p = record.params();
            let base = format!(
                "{},{},{},{},{},{},{}",
                p.p,
                p.q,
                p.k_type,
                p.n,
                p.m,
                p.j,
                p.k.map_or(String::new(), |k| k.to_string()),
            );
            match record {
                TupleRecord::Skipped { params, reasons } => {
                    let reason = reasons.first().cloned().unwrap_or_default();
                    out.push_str(&format!(
                        "{base},{},skipped,\"{}\",,,,,,,,,,\n",
                        params.group_order().unwrap_or(0),
                        reason.replace('"', "'"),
                    ));
                }
                TupleRecord::Analyzed(report) => {
                    let join =
                        |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join("|");
                    let verdict_case = report
                        .verdict
                        .matched_case
                        .map(|c| match c {
                            crate::classifier::MatchedCase::Case(n) => n.to_string(),
                            crate::classifier::MatchedCase::KOrderP => "k_order_p".into(),
                            crate::classifier::MatchedCase::PrerequisiteFailure => {
                                "prerequisite_failure".into()
                            }
                        })
                        .unwrap_or_default();
                    out.push_str(&format!(
                        "{base},{},analyzed,,{:?},{},{},{},{},{},{},{},{},{}\n",
                        report.group_order,
                        report.verdict.status,
                        verdict_case,
                        join(&report.verdict.invariants.factors),
                        serde_json::to_value(report.gamma.applicability)
                            .map(|v| v.as_str().unwrap_or_default().to_string())
                            .unwrap_or_default(),
                        report
                            .gamma
                            .component_count
                            .map_or(String::new(), |d| d.to_string()),
                        report
                            .gamma
                            .predicted
                            .as_ref()
                            .map_or(String::new(), |f| join(f)),
                        report.oracle.ran,
                        report
                            .oracle
                            .invariants
                            .as_ref()
                            .map_or(String::new(), |i| join(&i.factors)),
                        report
                            .oracle
                            .kernel_rank
                            .map_or(String::new(), |r| r.to_string()),
                        report.routes_agree,
                    ));
                }
            }
        }
        out
    }
}
