//! Closed-form evaluation of the classification: maps a parameter tuple
//! directly to the predicted primitive quotient, or declares the input out
//! of the classification's scope. Every divisibility condition is evaluated
//! by modular exponentiation and geometric sums; nothing is raised to
//! `2^(m-1)` in full.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::intlattice::AbelianInvariants;
use crate::numtheory::{geometric_sum_mod, mult_order, pow_mod};
use crate::qe::{validate, KType, QeError, QeParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictStatus {
    Classified,
    NoPrimitiveRelations,
    OutOfScope,
}

/// Which branch of the classification decided the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchedCase {
    Case(u8),
    KOrderP,
    PrerequisiteFailure,
}

impl Serialize for MatchedCase {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            MatchedCase::Case(n) => serializer.serialize_u8(*n),
            MatchedCase::KOrderP => serializer.serialize_str("k_order_p"),
            MatchedCase::PrerequisiteFailure => serializer.serialize_str("prerequisite_failure"),
        }
    }
}

/// One evaluated condition with its substituted values, for auditability.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionEval {
    pub condition: String,
    pub holds: bool,
    pub detail: String,
}

/// The classifier's answer for one parameter tuple.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub matched_case: Option<MatchedCase>,
    pub invariants: AbelianInvariants,
    pub reasons: Vec<ConditionEval>,
}

impl Verdict {
    /// The invariants this verdict predicts for the primitive quotient, or
    /// none when the input is outside the classification's scope.
    pub fn predicted_invariants(&self) -> Option<&AbelianInvariants> {
        match self.status {
            VerdictStatus::OutOfScope => None,
            _ => Some(&self.invariants),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Verdict", 4)?;
        s.serialize_field("status", &self.status)?;
        s.serialize_field("case", &self.matched_case)?;
        s.serialize_field("invariants", &self.invariants.factors)?;
        s.serialize_field("reasons", &self.reasons)?;
        s.end()
    }
}

struct Reasons(Vec<ConditionEval>);

impl Reasons {
    fn push(&mut self, condition: &str, holds: bool, detail: String) -> bool {
        self.0.push(ConditionEval {
            condition: condition.to_string(),
            holds,
            detail,
        });
        holds
    }
}

/// Evaluates the classification on a validated parameter tuple.
pub fn classify(params: &QeParams) -> Result<Verdict, QeError> {
    let violations = validate(params);
    if !violations.is_empty() {
        return Err(QeError::Invalid(violations));
    }
    let p = params.p;
    let (n, m) = (params.n, params.m);
    let pn = params.p_pow_n().expect("validated");
    let pm = params.p_pow_m().expect("validated");
    let j = params.j_residue();
    let k = params.k_residue();
    let mut reasons = Reasons(Vec::new());

    // The action of A on C must be faithful; with an overridden r the
    // declared K need not be the true action kernel, so no claim is made.
    let r = params.resolved_r();
    let r_order = mult_order(r as i64, params.q).expect("validated unit");
    let faithful = reasons.push(
        "A acts faithfully on C (r has order p^m mod q)",
        r_order == pm,
        format!("ord({r} mod {}) = {r_order}, p^m = {pm}", params.q),
    );
    if !faithful {
        return Ok(Verdict {
            status: VerdictStatus::OutOfScope,
            matched_case: Some(MatchedCase::PrerequisiteFailure),
            invariants: AbelianInvariants::trivial(),
            reasons: reasons.0,
        });
    }

    if n == 0 {
        reasons.push("K is non-trivial", false, "n = 0".to_string());
        return Ok(Verdict {
            status: VerdictStatus::OutOfScope,
            matched_case: None,
            invariants: AbelianInvariants::trivial(),
            reasons: reasons.0,
        });
    }

    // Non-trivial kernel of A acting on K: h^(p^(m-1)) must centralize K.
    let pm1 = pm / p;
    let j_pm1 = pow_mod(j, pm1, pn);
    let mut kernel_ok = j_pm1 == 1;
    let mut detail = format!("{j}^{pm1} = {j_pm1} mod {pn}");
    if params.k_type.has_x() {
        let geo_pm1 = geometric_sum_mod(j, pm1, pn);
        let k_action = k * geo_pm1 % pn;
        detail.push_str(&format!(", k(1+j+..+j^({pm1}-1)) = {k_action} mod {pn}"));
        kernel_ok = kernel_ok && k_action == 0;
    }
    let kernel_ok = reasons.push(
        "the action of A on K has non-trivial kernel",
        kernel_ok,
        detail,
    );
    if !kernel_ok {
        // every classified case forces this hypothesis, so its failure
        // settles the verdict
        return Ok(Verdict {
            status: VerdictStatus::NoPrimitiveRelations,
            matched_case: Some(MatchedCase::PrerequisiteFailure),
            invariants: AbelianInvariants::trivial(),
            reasons: reasons.0,
        });
    }

    let classified = |case: u8, invariants: AbelianInvariants, reasons: Reasons| {
        Ok(Verdict {
            status: VerdictStatus::Classified,
            matched_case: Some(MatchedCase::Case(case)),
            invariants,
            reasons: reasons.0,
        })
    };

    match params.k_type {
        KType::Cyclic if p != 2 => {
            // case 1: odd p with n <= m
            let fires = reasons.push(
                "case 1: K cyclic, p odd, n <= m",
                n <= m,
                format!("n={n} m={m}"),
            );
            if fires {
                let rank = if n == 1 { p - 2 } else { p - 1 } as usize;
                return classified(1, AbelianInvariants::elementary_abelian(p, rank), reasons);
            }
        }
        KType::Cyclic => {
            // case 2: p = 2, j != -1, and either 1 < n <= m or
            // j = 3 (mod 4) with ord(j) dividing 2^(m-1)
            let j_not_minus_one = reasons.push(
                "case 2: j != -1 (mod 2^n)",
                j != pn - 1,
                format!("j = {j}, -1 = {}", pn - 1),
            );
            let branch_a = reasons.push(
                "case 2 first branch: 1 < n <= m",
                1 < n && n <= m,
                format!("n={n} m={m}"),
            );
            let j_is_3_mod_4 = n >= 2 && j % 4 == 3;
            let ord_j = if j == 1 {
                1
            } else {
                mult_order(j as i64, pn).expect("unit")
            };
            let branch_b = reasons.push(
                "case 2 second branch: j = 3 (mod 4) and ord(j) | 2^(m-1)",
                j_is_3_mod_4 && pm1.is_multiple_of(ord_j),
                format!(
                    "j mod 4 = {}, ord(j mod {pn}) = {ord_j}, 2^(m-1) = {pm1}",
                    j % 4
                ),
            );
            if j_not_minus_one && (branch_a || branch_b) {
                return classified(2, AbelianInvariants::elementary_abelian(2, 1), reasons);
            }
        }
        KType::Quaternion => {
            // case 3: k odd and n < m
            let fires = reasons.push(
                "case 3: K quaternion, k odd, n < m",
                k % 2 == 1 && n < m,
                format!("k={k} n={n} m={m}"),
            );
            if fires {
                return classified(3, AbelianInvariants::elementary_abelian(2, 1), reasons);
            }
        }
        KType::Dihedral => {
            let j_not_pm_one = j != 1 && j != pn - 1;
            let j_pow = pow_mod(j, pm1, pn);
            let geo = geometric_sum_mod(j, pm1, pn);
            if k.is_multiple_of(2) {
                // case 4: j != +-1 and 2^n | j^(2^(m-1)) - 1 and
                // 2^n | k (j^(2^(m-1)) - 1)/(j - 1)
                let cond_j = reasons.push(
                    "case 4: j != +-1 (mod 2^n)",
                    j_not_pm_one,
                    format!("j = {j} mod {pn}"),
                );
                let cond_pow = reasons.push(
                    "case 4: 2^n | j^(2^(m-1)) - 1",
                    j_pow == 1,
                    format!("j^(2^(m-1)) = {j_pow} mod {pn}"),
                );
                let k_geo = k * geo % pn;
                let cond_geo = reasons.push(
                    "case 4: 2^n | k (j^(2^(m-1)) - 1)/(j - 1)",
                    k_geo == 0,
                    format!("k(1+j+..+j^(2^(m-1)-1)) = {k_geo} mod {pn}"),
                );
                if cond_j && cond_pow && cond_geo {
                    return classified(4, AbelianInvariants::elementary_abelian(2, 1), reasons);
                }
            } else {
                // case 5: m > n, or j != +-1 with 2^n | (j^(2^(m-1))-1)/(j-1)
                let branch_a =
                    reasons.push("case 5 first branch: m > n", m > n, format!("m={m} n={n}"));
                let branch_b = reasons.push(
                    "case 5 second branch: j != +-1 and 2^n | (j^(2^(m-1))-1)/(j-1)",
                    j_not_pm_one && geo == 0,
                    format!("j = {j}, 1+j+..+j^(2^(m-1)-1) = {geo} mod {pn}"),
                );
                if branch_a || branch_b {
                    let rank = if m > n && j_not_pm_one { 2 } else { 1 };
                    reasons.push(
                        "case 5 rank: two copies iff m > n and j != +-1",
                        rank == 2,
                        format!("m={m} n={n} j={j}"),
                    );
                    return classified(5, AbelianInvariants::elementary_abelian(2, rank), reasons);
                }
            }
        }
        KType::Semidihedral => {
            reasons.push(
                "semidihedral K admits no primitive relations",
                true,
                String::new(),
            );
            return Ok(Verdict {
                status: VerdictStatus::NoPrimitiveRelations,
                matched_case: None,
                invariants: AbelianInvariants::trivial(),
                reasons: reasons.0,
            });
        }
    }

    if pn == p {
        // |K| = p: elementary abelian of rank p - 2 by the closed form; for
        // p = 2 that rank is zero
        let rank = (p - 2) as usize;
        let invariants = AbelianInvariants::elementary_abelian(p, rank);
        reasons.push(
            "|K| = p: elementary abelian of rank p - 2",
            true,
            format!("p = {p}"),
        );
        let status = if invariants.is_trivial() {
            VerdictStatus::NoPrimitiveRelations
        } else {
            VerdictStatus::Classified
        };
        return Ok(Verdict {
            status,
            matched_case: Some(MatchedCase::KOrderP),
            invariants,
            reasons: reasons.0,
        });
    }

    Ok(Verdict {
        status: VerdictStatus::NoPrimitiveRelations,
        matched_case: None,
        invariants: AbelianInvariants::trivial(),
        reasons: reasons.0,
    })
}
