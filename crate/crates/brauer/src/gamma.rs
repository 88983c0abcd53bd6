//! The component-graph criterion: vertices are the subgroups of the Sylow
//! p-subgroup `P` that avoid the distinguished central subgroup `Z` and have
//! maximal order among those; edges join pairs that either generate a proper
//! subgroup of `P` or intersect at index p with a dihedral (or, for odd p,
//! Heisenberg) quotient. When the criterion applies, the number `d` of
//! connected components determines the primitive quotient as `(C_p)^(d-1)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::groups::{
    closure_with_limit, family_test, is_normal_in, quotient_in, subgroup_classes_within,
    FiniteGroup, GroupError, GroupFamily, Subgroup,
};
use crate::intlattice::AbelianInvariants;
use crate::qe::Realization;

/// Why a pair of vertices is joined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeReason {
    /// The two subgroups generate a proper subgroup of `P`.
    ProperGeneration,
    /// Index-p intersection with a dihedral or Heisenberg quotient.
    QuotientFamily,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub reason: EdgeReason,
}

/// Policy knobs for the edge conditions.
#[derive(Debug, Clone, Copy, Default)]
pub struct EdgePolicy {
    /// Whether the order-4 degenerate case counts as dihedral in the
    /// quotient-family condition. Off by default; the sweep exercises both
    /// settings against the oracle.
    pub dihedral_includes_klein: bool,
}

/// The graph on the maximal-avoiding subgroups, with its components.
#[derive(Debug, Clone)]
pub struct GammaGraph {
    pub vertices: Vec<Subgroup>,
    pub edges: Vec<Edge>,
    /// Component id per vertex, numbered by first appearance.
    pub component_of: Vec<usize>,
    pub component_count: usize,
}

impl GammaGraph {
    /// One representative vertex index per component, in component order.
    pub fn component_representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.component_count];
        for (v, &c) in self.component_of.iter().enumerate() {
            if reps[c] == usize::MAX {
                reps[c] = v;
            }
        }
        reps
    }

    /// Graphviz rendering for offline inspection.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph gamma {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!(
                "  v{i} [label=\"#{i} |H|={} comp={}\"];\n",
                v.order(),
                self.component_of[i]
            ));
        }
        for e in &self.edges {
            let label = match e.reason {
                EdgeReason::ProperGeneration => "proper",
                EdgeReason::QuotientFamily => "quotient",
            };
            out.push_str(&format!("  v{} -- v{} [label=\"{label}\"];\n", e.a, e.b));
        }
        out.push_str("}\n");
        out
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// All subgroups of `P` avoiding `Z`, and the subset of maximal order.
/// `Z` must have prime order. Vertices are actual subgroups, not class
/// representatives; both lists are sorted for deterministic indices.
pub fn enumerate_hm(
    g: &FiniteGroup,
    p_subgroup: &Subgroup,
    z: &Subgroup,
) -> Result<(Vec<Subgroup>, Vec<Subgroup>), GroupError> {
    assert!(
        crate::numtheory::is_prime(z.order() as u64),
        "the avoided subgroup must have prime order"
    );
    assert!(z.is_subset_of(p_subgroup));
    let table = subgroup_classes_within(g, p_subgroup, crate::groups::DEFAULT_ORDER_BOUND)?;
    let mut avoiding: Vec<Subgroup> = table
        .all_subgroups()
        .filter(|s| !z.is_subset_of(s))
        .cloned()
        .collect();
    avoiding.sort_by(|a, b| {
        a.order().cmp(&b.order()).then_with(|| {
            if a.members().lex_precedes(b.members()) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        })
    });
    let max_order = avoiding.last().map_or(1, Subgroup::order);
    let maximal: Vec<Subgroup> = avoiding
        .iter()
        .filter(|s| s.order() == max_order)
        .cloned()
        .collect();
    Ok((avoiding, maximal))
}

/// Evaluates the two edge conditions on every vertex pair and takes
/// connected components.
pub fn build_gamma(
    g: &FiniteGroup,
    p_subgroup: &Subgroup,
    vertices: Vec<Subgroup>,
    p: u64,
    policy: EdgePolicy,
) -> GammaGraph {
    let half = p_subgroup.order() / 2;
    let pairs: Vec<(usize, usize)> = (0..vertices.len())
        .flat_map(|i| (i + 1..vertices.len()).map(move |j| (i, j)))
        .collect();
    let edges: Vec<Edge> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            edge_between(g, p_subgroup, &vertices[i], &vertices[j], p, policy, half)
                .map(|reason| Edge { a: i, b: j, reason })
        })
        .collect();

    let mut uf = UnionFind::new(vertices.len());
    for e in &edges {
        uf.union(e.a, e.b);
    }
    let mut component_of = vec![usize::MAX; vertices.len()];
    let mut component_count = 0;
    for v in 0..vertices.len() {
        let root = uf.find(v);
        if component_of[root] == usize::MAX {
            component_of[root] = component_count;
            component_count += 1;
        }
        component_of[v] = component_of[root];
    }
    GammaGraph {
        vertices,
        edges,
        component_of,
        component_count,
    }
}

fn edge_between(
    g: &FiniteGroup,
    p_subgroup: &Subgroup,
    h: &Subgroup,
    h2: &Subgroup,
    p: u64,
    policy: EdgePolicy,
    half: usize,
) -> Option<EdgeReason> {
    // join of the pair; anything larger than half the carrier is the carrier
    let mut gens: Vec<usize> = h.elems().iter().map(|&e| e as usize).collect();
    gens.extend(h2.elems().iter().map(|&e| e as usize));
    let join = closure_with_limit(g, &gens, half);
    if let Some(join) = &join {
        debug_assert!(join.order() < p_subgroup.order());
        let _ = join;
        return Some(EdgeReason::ProperGeneration);
    }

    // index-p intersection with a dihedral or Heisenberg quotient; the join
    // here is all of P
    let intersection = h.intersection(g, h2);
    if intersection.order() * p as usize != h.order()
        || intersection.order() * p as usize != h2.order()
    {
        return None;
    }
    if !is_normal_in(g, &intersection, p_subgroup) {
        return None;
    }
    let quotient = quotient_in(g, p_subgroup, &intersection)
        .expect("normality was checked")
        .group;
    let family_ok = family_test(&quotient, GroupFamily::Dihedral2Group)
        || (policy.dihedral_includes_klein && family_test(&quotient, GroupFamily::KleinFour))
        || (p % 2 == 1 && family_test(&quotient, GroupFamily::HeisenbergP));
    family_ok.then_some(EdgeReason::QuotientFamily)
}

/// `(C_p)^(d-1)` for a graph with `d` components.
pub fn predict_prim_from_gamma(component_count: usize, p: u64) -> AbelianInvariants {
    assert!(component_count >= 1, "a nonempty graph has a component");
    AbelianInvariants::elementary_abelian(p, component_count - 1)
}

/// Whether the component-graph criterion is available for a realization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Applicability {
    /// `|K| > p` with faithful action and non-trivial action kernel: the
    /// component count decides.
    Applies,
    /// `|K| = p`: the closed form gives an elementary abelian group of rank
    /// `p - 2` directly.
    KTooSmall,
    /// Trivial `K`: no prediction from this route.
    KTrivial,
    /// Faithfulness or the action-kernel hypothesis fails.
    PrerequisitesFail,
}

pub fn applicability(real: &Realization) -> Applicability {
    let flags = real.hypothesis_flags();
    if flags.k_trivial {
        Applicability::KTrivial
    } else if !flags.a_faithful_on_c || !flags.action_kernel_nontrivial {
        Applicability::PrerequisitesFail
    } else if flags.k_order_p {
        Applicability::KTooSmall
    } else {
        Applicability::Applies
    }
}

/// Everything the graph route produces on one realization: the gate, the
/// mechanical graph whenever `Z` exists, and the predicted invariants when
/// the route is entitled to predict.
#[derive(Debug, Clone)]
pub struct GammaOutcome {
    pub applicability: Applicability,
    pub graph: Option<GammaGraph>,
    pub predicted: Option<AbelianInvariants>,
}

pub fn gamma_outcome(real: &Realization, policy: EdgePolicy) -> Result<GammaOutcome, GroupError> {
    let applicability = applicability(real);
    let graph = match &real.z {
        Some(z) => {
            let (_, maximal) = enumerate_hm(&real.group, &real.p_subgroup, z)?;
            Some(build_gamma(
                &real.group,
                &real.p_subgroup,
                maximal,
                real.params.p,
                policy,
            ))
        }
        None => None,
    };
    let predicted = match applicability {
        Applicability::Applies => Some(predict_prim_from_gamma(
            graph
                .as_ref()
                .expect("Z exists when K is non-trivial")
                .component_count,
            real.params.p,
        )),
        Applicability::KTooSmall => Some(AbelianInvariants::elementary_abelian(
            real.params.p,
            real.params.p as usize - 2,
        )),
        _ => None,
    };
    Ok(GammaOutcome {
        applicability,
        graph,
        predicted,
    })
}
