//! Exact integer linear algebra: Hermite and Smith normal forms, kernel
//! lattices, lattice sums and quotient invariants. Entries are
//! arbitrary-precision throughout; the matrices arising here are at most a
//! few hundred rows, so determinism and exactness beat micro-optimization.

mod lattice;
mod matrix;
mod normal_form;

pub use lattice::{kernel_lattice, AbelianInvariants, IntegerLattice};
pub use matrix::{IntMatrix, LatticeError};
pub use normal_form::{hnf, snf, SmithNormalForm};
