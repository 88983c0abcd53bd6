//! Closed-form classification of the primitive quotient from the parameter
//! tuple alone, with the full audit trail of evaluated conditions.
//!
//! ```bash
//! cargo run -p brauer --example classify_group
//! ```

use brauer::classifier::classify;
use brauer::qe::{KType, QeParams};

fn main() {
    let tuples = [
        QeParams {
            p: 3,
            q: 7,
            k_type: KType::Cyclic,
            n: 1,
            m: 1,
            j: 1,
            k: None,
            r: None,
        },
        QeParams {
            p: 2,
            q: 5,
            k_type: KType::Cyclic,
            n: 2,
            m: 2,
            j: 1,
            k: None,
            r: None,
        },
        QeParams {
            p: 2,
            q: 5,
            k_type: KType::Cyclic,
            n: 2,
            m: 2,
            j: 3,
            k: None,
            r: None,
        },
        QeParams {
            p: 2,
            q: 17,
            k_type: KType::Quaternion,
            n: 2,
            m: 3,
            j: 1,
            k: Some(1),
            r: None,
        },
        QeParams {
            p: 2,
            q: 17,
            k_type: KType::Dihedral,
            n: 3,
            m: 4,
            j: 3,
            k: Some(1),
            r: None,
        },
        QeParams {
            p: 2,
            q: 5,
            k_type: KType::Semidihedral,
            n: 3,
            m: 2,
            j: 1,
            k: Some(0),
            r: None,
        },
    ];

    for params in tuples {
        match classify(&params) {
            Ok(verdict) => {
                println!("{}", params.label());
                println!(
                    "  -> {:?} (case {:?}), primitive quotient {}",
                    verdict.status, verdict.matched_case, verdict.invariants
                );
                for reason in &verdict.reasons {
                    let mark = if reason.holds { "+" } else { "-" };
                    println!("  {mark} {} [{}]", reason.condition, reason.detail);
                }
            }
            Err(err) => println!("{} -> invalid: {err}", params.label()),
        }
        println!();
    }
}
