//! The exact integer linear algebra layer on its own: Hermite and Smith
//! normal forms, kernel lattices, and invariant factors of quotients.
//!
//! ```bash
//! cargo run -p brauer --example lattice_toolkit
//! ```

use brauer::intlattice::{hnf, kernel_lattice, snf, AbelianInvariants, IntMatrix, IntegerLattice};

fn main() {
    let m = IntMatrix::from_i64(3, 3, &[2, 4, 4, -6, 6, 12, 10, 4, 16]);
    println!("input matrix:\n{m}");

    let h = hnf(&m);
    println!("row Hermite normal form:\n{h}");

    let s = snf(&m);
    println!("Smith diagonal: {:?} (rank {})", s.diagonal, s.rank);
    println!(
        "cokernel of the row space: {}",
        AbelianInvariants::cokernel(&m)
    );

    let rectangular = IntMatrix::from_i64(3, 2, &[1, 2, 2, 4, 3, 6]);
    let kernel = kernel_lattice(&rectangular);
    println!(
        "kernel of a rank-1 3x2 matrix: rank {} with basis\n{}",
        kernel.rank(),
        kernel.basis()
    );

    // a finite-index sublattice of Z^2 and the quotient invariants
    let ambient = IntegerLattice::full(2);
    let sub = IntegerLattice::from_matrix(2, &IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]));
    let invariants = ambient.quotient_invariants(&sub).expect("contained");
    println!("Z^2 modulo the (2, 3)-diagonal sublattice: {invariants}");

    // fixture round trip
    let text = m.to_text();
    let back = IntMatrix::from_text(&text).expect("parses");
    println!("fixture round trip preserves the matrix: {}", back == m);
}
