//! Brauer relations in quasi-elementary groups.
//!
//! A Brauer relation of a finite group `G` is an integer combination of
//! transitive `G`-sets whose permutation representation vanishes, i.e. an
//! element of the kernel of the map from the Burnside ring to the rational
//! representation ring. Relations induced from proper subgroups or lifted
//! from proper quotients are *imprimitive*; the quotient of the relation
//! lattice by them is the abelian group `Prim(G)` this crate computes.
//!
//! For groups `G = C_q x| (K x| A)`, with `C_q` cyclic of prime order, `K` a
//! p-group of normal p-rank one and `A` cyclic acting faithfully on `C_q`,
//! three independent routes to `Prim(G)` are implemented and
//! cross-validated:
//!
//! - the **oracle** ([`relations`]): exact subgroup enumeration, the table of
//!   marks on cyclic subgroups, integer kernel and quotient lattices;
//! - the **component-graph criterion** ([`gamma`]): a graph on the maximal
//!   subgroups of the Sylow p-subgroup avoiding a distinguished central
//!   subgroup, whose component count determines `Prim(G)`;
//! - the **closed-form classifier** ([`classifier`]): divisibility conditions
//!   on the action parameters `(j, k)` evaluated directly.
//!
//! See the `examples/` directory for a runnable tour; the `brauer` binary
//! exposes the same analyses as CLI subcommands emitting JSON.

pub mod analysis;
pub mod burnside;
pub mod classifier;
pub mod gamma;
pub mod groups;
pub mod intlattice;
pub mod numtheory;
pub mod qe;
pub mod relations;
pub mod sweep;

pub use analysis::{analyze, AnalysisOptions, AnalysisReport};
pub use qe::{realize, validate, KType, QeParams, Realization};
