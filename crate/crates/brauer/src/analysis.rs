//! Single-tuple orchestration: run the classifier, the component-graph
//! route and the exact oracle on one parameter tuple, compare whatever
//! routes produced a prediction, and package the outcome for reports.

use std::time::Instant;

use serde::Serialize;

use crate::burnside::{theta, BurnsideEntry};
use crate::classifier::{classify, Verdict};
use crate::gamma::{enumerate_hm, gamma_outcome, Applicability, EdgePolicy};
use crate::groups::{subgroup_classes_with_bound, GroupError};
use crate::intlattice::AbelianInvariants;
use crate::qe::{realize, HypothesisFlags, QeError, QeParams};
use crate::relations::prim;

/// Default cap on the group order for the full oracle; the graph route and
/// the classifier run regardless.
pub const DEFAULT_ORACLE_MAX_ORDER: usize = 600;

#[derive(Debug, Clone, Copy)]
pub struct AnalysisOptions {
    pub oracle_max_order: usize,
    pub subgroup_bound: usize,
    pub gamma_dihedral_includes_klein: bool,
    /// Produce pair-relation witnesses for the primitive quotient when the
    /// graph route applies and the oracle ran.
    pub with_witnesses: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            oracle_max_order: oracle_max_order_from_env(),
            subgroup_bound: crate::groups::DEFAULT_ORDER_BOUND,
            gamma_dihedral_includes_klein: false,
            with_witnesses: false,
        }
    }
}

/// `BRAUER_ORACLE_MAX` overrides the default oracle bound.
pub fn oracle_max_order_from_env() -> usize {
    std::env::var("BRAUER_ORACLE_MAX")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ORACLE_MAX_ORDER)
}

#[derive(Debug, Clone, Serialize)]
pub struct GammaSummary {
    pub applicability: Applicability,
    /// Vertex and edge counts of the mechanical graph, when `K` is
    /// non-trivial.
    pub vertices: Option<usize>,
    pub edges: Option<usize>,
    pub component_count: Option<usize>,
    /// Invariant factors predicted by this route, when entitled.
    pub predicted: Option<Vec<u64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleSummary {
    pub ran: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skip_reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub imprimitive_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<AbelianInvariants>,
    /// Pair relations witnessing distinct graph components, nonzero in the
    /// primitive quotient.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub theta_witnesses: Vec<Vec<BurnsideEntry>>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Timings {
    pub classify_ms: u128,
    pub gamma_ms: u128,
    pub oracle_ms: u128,
}

/// The three routes on one tuple, with the agreement verdict.
#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub params: QeParams,
    pub group_order: u64,
    pub hypothesis: HypothesisFlags,
    pub verdict: Verdict,
    pub gamma: GammaSummary,
    pub oracle: OracleSummary,
    /// True when all routes that produced invariants agree exactly.
    pub routes_agree: bool,
    pub timings: Timings,
}

impl AnalysisReport {
    /// The predictions available for pairwise comparison.
    pub fn available_predictions(&self) -> Vec<(&'static str, AbelianInvariants)> {
        let mut out = Vec::new();
        if let Some(inv) = self.verdict.predicted_invariants() {
            out.push(("classifier", inv.clone()));
        }
        if let Some(factors) = &self.gamma.predicted {
            out.push((
                "gamma",
                AbelianInvariants {
                    factors: factors.clone(),
                    free_rank: 0,
                },
            ));
        }
        if let Some(inv) = &self.oracle.invariants {
            out.push(("oracle", inv.clone()));
        }
        out
    }
}

/// Runs every route that applies to the tuple.
pub fn analyze(params: &QeParams, opts: &AnalysisOptions) -> Result<AnalysisReport, QeError> {
    let start = Instant::now();
    let verdict = classify(params)?;
    let classify_ms = start.elapsed().as_millis();

    let real = realize(params)?;
    let group_order = real.group.order() as u64;
    let hypothesis = real.hypothesis_flags();

    let start = Instant::now();
    let policy = EdgePolicy {
        dihedral_includes_klein: opts.gamma_dihedral_includes_klein,
    };
    let outcome = gamma_outcome(&real, policy).map_err(QeError::Group)?;
    let gamma = GammaSummary {
        applicability: outcome.applicability,
        vertices: outcome.graph.as_ref().map(|g| g.vertices.len()),
        edges: outcome.graph.as_ref().map(|g| g.edges.len()),
        component_count: outcome.graph.as_ref().map(|g| g.component_count),
        predicted: outcome.predicted.as_ref().map(|i| i.factors.clone()),
    };
    let gamma_ms = start.elapsed().as_millis();

    let start = Instant::now();
    let oracle = if real.group.order() <= opts.oracle_max_order {
        let classes = subgroup_classes_with_bound(&real.group, opts.subgroup_bound)
            .map_err(QeError::Group)?;
        let structure = prim(&real.group, &classes).map_err(QeError::Group)?;
        let theta_witnesses = if opts.with_witnesses {
            witnesses(&real, &classes, &outcome)
        } else {
            Vec::new()
        };
        OracleSummary {
            ran: true,
            skip_reason: None,
            kernel_rank: Some(structure.kernel_rank),
            imprimitive_rank: Some(structure.imprimitive_rank),
            invariants: Some(structure.invariants),
            theta_witnesses,
        }
    } else {
        OracleSummary {
            ran: false,
            skip_reason: Some(format!(
                "group order {} exceeds oracle bound {}",
                real.group.order(),
                opts.oracle_max_order
            )),
            kernel_rank: None,
            imprimitive_rank: None,
            invariants: None,
            theta_witnesses: Vec::new(),
        }
    };
    let oracle_ms = start.elapsed().as_millis();

    let mut report = AnalysisReport {
        params: params.clone(),
        group_order,
        hypothesis,
        verdict,
        gamma,
        oracle,
        routes_agree: true,
        timings: Timings {
            classify_ms,
            gamma_ms,
            oracle_ms,
        },
    };
    let predictions = report.available_predictions();
    report.routes_agree = predictions.windows(2).all(|w| w[0].1 == w[1].1);
    Ok(report)
}

/// Pair relations joining the first component to each other component,
/// serialized sparsely. Only meaningful when the graph exists and the
/// class catalogue is at hand.
fn witnesses(
    real: &crate::qe::Realization,
    classes: &crate::groups::SubgroupClassTable,
    outcome: &crate::gamma::GammaOutcome,
) -> Vec<Vec<BurnsideEntry>> {
    let Some(graph) = &outcome.graph else {
        return Vec::new();
    };
    if graph.component_count < 2 {
        return Vec::new();
    }
    let Some(z) = &real.z else { return Vec::new() };
    let Ok((_, vertices)) = enumerate_hm(&real.group, &real.p_subgroup, z) else {
        return Vec::new();
    };
    let reps = graph.component_representatives();
    let base = &graph.vertices[reps[0]];
    reps[1..]
        .iter()
        .filter_map(|&v| {
            theta(real, classes, &vertices, base, &graph.vertices[v])
                .ok()
                .map(|elt| elt.entries(classes))
        })
        .collect()
}

/// Resource-limit classification for process exit codes.
pub fn is_resource_limit(err: &QeError) -> bool {
    matches!(
        err,
        QeError::ResourceLimit { .. } | QeError::Group(GroupError::OrderBoundExceeded { .. })
    )
}
