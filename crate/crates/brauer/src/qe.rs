//! Parameter validation and concrete realization of the groups
//! `G = C_q x| (K x| A)`: a cyclic group of prime order `q` extended by a
//! 2-group or odd p-group `K` of normal p-rank one (or trivial), extended in
//! turn by a cyclic `A = <h>` of order `p^m` acting on both.
//!
//! Elements are kept in the normal form `t^a c^b x^e h^i` and multiplied by
//! rewriting: `h` acts on `t` by `t -> t^r`, on `c` by `c -> c^j` and on `x`
//! by `x -> c^k x`; `x` acts on `c` according to the declared family of `K`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groups::{closure, FiniteGroup, GroupError, Subgroup};
use crate::numtheory::{element_of_order, geometric_sum_mod, is_prime, mult_order, pow_mod};

/// Isomorphism type of `K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KType {
    Cyclic,
    Dihedral,
    Quaternion,
    Semidihedral,
}

impl KType {
    pub fn as_str(self) -> &'static str {
        match self {
            KType::Cyclic => "cyclic",
            KType::Dihedral => "dihedral",
            KType::Quaternion => "quaternion",
            KType::Semidihedral => "semidihedral",
        }
    }

    pub fn parse(s: &str) -> Option<KType> {
        match s {
            "cyclic" => Some(KType::Cyclic),
            "dihedral" => Some(KType::Dihedral),
            "quaternion" => Some(KType::Quaternion),
            "semidihedral" => Some(KType::Semidihedral),
            _ => None,
        }
    }

    pub fn has_x(self) -> bool {
        !matches!(self, KType::Cyclic)
    }
}

impl std::fmt::Display for KType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The parameter tuple `(p, q, K-type, n, m, j, k, r)` describing
/// `G = C_q x| (K x| A)`. `j` and `k` are taken exactly as supplied (reduced
/// into canonical residues, but never re-normalized the way presentations
/// are massaged in proofs).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QeParams {
    pub p: u64,
    pub q: u64,
    pub k_type: KType,
    /// `|<c>| = p^n`; `n = 0` (trivial K) is allowed only for cyclic type.
    pub n: u32,
    /// `|A| = p^m`.
    pub m: u32,
    /// Action of `h` on `c`: `h c h^-1 = c^j`.
    pub j: i64,
    /// Action of `h` on `x`: `h x h^-1 = c^k x`; only for non-cyclic types.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<i64>,
    /// Action of `h` on `t`: `h t h^-1 = t^r`. Defaults to the smallest
    /// element of order `p^m` modulo `q`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<u64>,
}

/// A single violated precondition; validation returns all of them as data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("p = {0} is not prime")]
    PNotPrime(u64),
    #[error("q = {0} is not prime")]
    QNotPrime(u64),
    #[error("p and q must be distinct")]
    PEqualsQ,
    #[error("m must be positive")]
    MNotPositive,
    #[error("p^m does not divide q - 1 ({p}^{m} does not divide {qm1})")]
    ANotFaithfulPossible { p: u64, m: u32, qm1: u64 },
    #[error("n = 0 requires cyclic K")]
    TrivialKNeedsCyclic,
    #[error("non-cyclic K requires p = 2, got p = {0}")]
    NonCyclicNeedsP2(u64),
    #[error("{k_type} K requires n >= {min}, got n = {n}")]
    NTooSmall { k_type: KType, min: u32, n: u32 },
    #[error("j = {j} is not a unit modulo {modulus}")]
    JNotUnit { j: i64, modulus: u64 },
    #[error("k is only meaningful for non-cyclic K")]
    KGivenForCyclic,
    #[error("k is required for non-cyclic K")]
    KMissing,
    #[error("k must be even for semidihedral K, got k = {0}")]
    SemidihedralOddK(i64),
    #[error(
        "the action c -> c^j does not have order dividing p^m: {j}^({p}^{m}) != 1 mod {modulus}"
    )]
    JOrderTooLarge {
        j: u64,
        p: u64,
        m: u32,
        modulus: u64,
    },
    #[error("the action x -> c^k x does not have order dividing p^m: k(1+j+...+j^(p^m-1)) != 0 mod {modulus}")]
    KActionOrderTooLarge { modulus: u64 },
    #[error("r = {r} is not a unit modulo q = {q}")]
    RNotUnit { r: u64, q: u64 },
    #[error("the order of r = {r} modulo q = {q} does not divide p^m = {pm}")]
    ROrderInvalid { r: u64, q: u64, pm: u64 },
    #[error("parameters overflow the supported range")]
    TooLarge,
}

#[derive(Debug, Error)]
pub enum QeError {
    #[error("invalid parameters: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    #[error("group order {order} exceeds the resource bound {bound}")]
    ResourceLimit { order: usize, bound: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Cap on realized group orders; the multiplication table is materialized.
pub const REALIZATION_ORDER_BOUND: usize = 5000;

impl QeParams {
    pub fn p_pow_n(&self) -> Option<u64> {
        self.p.checked_pow(self.n)
    }

    pub fn p_pow_m(&self) -> Option<u64> {
        self.p.checked_pow(self.m)
    }

    /// `j` reduced into `[0, p^n)`.
    pub fn j_residue(&self) -> u64 {
        let pn = self.p_pow_n().expect("validated");
        self.j.rem_euclid(pn as i64) as u64
    }

    /// `k` reduced into `[0, p^n)`; zero for cyclic type.
    pub fn k_residue(&self) -> u64 {
        let pn = self.p_pow_n().expect("validated");
        self.k.map_or(0, |k| k.rem_euclid(pn as i64) as u64)
    }

    /// The resolved action of `h` on `t`.
    pub fn resolved_r(&self) -> u64 {
        match self.r {
            Some(r) => r % self.q,
            None => element_of_order(self.q, self.p_pow_m().expect("validated"))
                .expect("p^m | q - 1 was validated"),
        }
    }

    /// Group order `q * p^n * [x] * p^m` of the realization.
    pub fn group_order(&self) -> Option<u64> {
        let pn = self.p_pow_n()?;
        let pm = self.p_pow_m()?;
        let span = if self.k_type.has_x() { 2 } else { 1 };
        self.q.checked_mul(pn)?.checked_mul(span)?.checked_mul(pm)
    }

    /// Short human-readable form for logs and reports.
    pub fn label(&self) -> String {
        let mut s = format!(
            "p={} q={} K={} n={} m={} j={}",
            self.p, self.q, self.k_type, self.n, self.m, self.j
        );
        if let Some(k) = self.k {
            s.push_str(&format!(" k={k}"));
        }
        if let Some(r) = self.r {
            s.push_str(&format!(" r={r}"));
        }
        s
    }
}

/// Checks every precondition on a parameter tuple; an empty list means the
/// tuple is realizable.
pub fn validate(params: &QeParams) -> Vec<Violation> {
    let mut out = Vec::new();
    if !is_prime(params.p) {
        out.push(Violation::PNotPrime(params.p));
    }
    if !is_prime(params.q) {
        out.push(Violation::QNotPrime(params.q));
    }
    if params.p == params.q {
        out.push(Violation::PEqualsQ);
    }
    if params.m == 0 {
        out.push(Violation::MNotPositive);
    }
    if !out.is_empty() {
        return out;
    }
    let (Some(pn), Some(pm)) = (params.p_pow_n(), params.p_pow_m()) else {
        out.push(Violation::TooLarge);
        return out;
    };
    if params.group_order().is_none() {
        out.push(Violation::TooLarge);
        return out;
    }
    if !(params.q - 1).is_multiple_of(pm) {
        out.push(Violation::ANotFaithfulPossible {
            p: params.p,
            m: params.m,
            qm1: params.q - 1,
        });
    }
    match params.k_type {
        KType::Cyclic => {
            if params.k.is_some() {
                out.push(Violation::KGivenForCyclic);
            }
        }
        kt => {
            if params.p != 2 {
                out.push(Violation::NonCyclicNeedsP2(params.p));
            }
            let min = if kt == KType::Semidihedral { 3 } else { 2 };
            if params.n < min {
                out.push(Violation::NTooSmall {
                    k_type: kt,
                    min,
                    n: params.n,
                });
            }
            match params.k {
                None => out.push(Violation::KMissing),
                Some(k) => {
                    if kt == KType::Semidihedral && k.rem_euclid(2) != 0 {
                        out.push(Violation::SemidihedralOddK(k));
                    }
                }
            }
        }
    }
    if params.n == 0 && params.k_type != KType::Cyclic {
        out.push(Violation::TrivialKNeedsCyclic);
    }
    if !out.is_empty() {
        return out;
    }

    if params.n >= 1 {
        let j = params.j_residue();
        if num_integer::gcd(j, pn) != 1 {
            out.push(Violation::JNotUnit {
                j: params.j,
                modulus: pn,
            });
            return out;
        }
        // the candidate action composed p^m times must be the identity on
        // the generators of K (square-and-multiply composition)
        if pow_mod(j, pm, pn) != 1 {
            out.push(Violation::JOrderTooLarge {
                j,
                p: params.p,
                m: params.m,
                modulus: pn,
            });
        }
        if params.k_type.has_x() {
            let k = params.k_residue();
            let geo = geometric_sum_mod(j, pm, pn);
            if !k.wrapping_mul(geo).is_multiple_of(pn) {
                out.push(Violation::KActionOrderTooLarge { modulus: pn });
            }
        }
    }
    if let Some(r) = params.r {
        let r = r % params.q;
        if r == 0 || num_integer::gcd(r, params.q) != 1 {
            out.push(Violation::RNotUnit { r, q: params.q });
        } else {
            let ord = mult_order(r as i64, params.q).expect("unit");
            if pm % ord != 0 {
                out.push(Violation::ROrderInvalid { r, q: params.q, pm });
            }
        }
    }
    out
}

/// Structural status of the classification hypotheses for a realized group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HypothesisFlags {
    /// `A` acts faithfully on `C`, i.e. `r` has order exactly `p^m`.
    pub a_faithful_on_c: bool,
    /// The conjugation action of `A` on `K` has non-trivial kernel, i.e.
    /// `h^(p^(m-1))` centralizes `K`. Vacuously true for trivial `K`.
    pub action_kernel_nontrivial: bool,
    pub k_order_p: bool,
    pub k_trivial: bool,
}

/// A concretely realized group with its distinguished subgroups and
/// generators located.
#[derive(Debug, Clone)]
pub struct Realization {
    pub params: QeParams,
    pub group: FiniteGroup,
    /// Resolved action of `h` on `t`.
    pub r: u64,
    /// Generator indices.
    pub t: usize,
    pub c: usize,
    pub x: Option<usize>,
    pub h: usize,
    /// `C = <t>`, the normal cyclic group of order q.
    pub c_subgroup: Subgroup,
    /// `K = <c, x>`, the declared kernel of the action on C.
    pub k_subgroup: Subgroup,
    /// `P = <c, x, h>`, a Sylow p-subgroup.
    pub p_subgroup: Subgroup,
    /// `A = <h>`.
    pub a_subgroup: Subgroup,
    /// `C_K`: `K` itself when cyclic, else the cyclic `<c>` of index 2.
    pub c_k: Subgroup,
    /// The product `C * C_K`, cyclic of order `q * p^n`.
    pub cbar: Subgroup,
    /// The unique order-p subgroup of `K` normal in `G`; absent for trivial K.
    pub z: Option<Subgroup>,
}

impl Realization {
    /// A generator of the cyclic group `cbar`.
    pub fn cbar_generator(&self) -> usize {
        self.group.mul(self.t, self.c)
    }

    pub fn hypothesis_flags(&self) -> HypothesisFlags {
        let g = &self.group;
        let pm = self.params.p_pow_m().expect("validated") as usize;
        let pm1 = pm / self.params.p as usize;
        let hk = g.pow(self.h, pm1);
        let fixes_c = g.conj(hk, self.c) == self.c;
        let fixes_x = self.x.is_none_or(|x| g.conj(hk, x) == x);
        HypothesisFlags {
            a_faithful_on_c: mult_order(self.r as i64, self.params.q) == Ok(pm as u64),
            action_kernel_nontrivial: fixes_c && fixes_x,
            k_order_p: self.k_subgroup.order() as u64 == self.params.p,
            k_trivial: self.k_subgroup.order() == 1,
        }
    }
}

/// Realizes a validated parameter tuple as a concrete group. Normal forms
/// are `t^a c^b x^e h^i`, indexed as `((a * p^n + b) * span + e) * p^m + i`.
pub fn realize(params: &QeParams) -> Result<Realization, QeError> {
    let violations = validate(params);
    if !violations.is_empty() {
        return Err(QeError::Invalid(violations));
    }
    let order = params.group_order().expect("validated") as usize;
    if order > REALIZATION_ORDER_BOUND {
        return Err(QeError::ResourceLimit {
            order,
            bound: REALIZATION_ORDER_BOUND,
        });
    }

    let q = params.q as usize;
    let pn = params.p_pow_n().expect("validated") as usize;
    let pm = params.p_pow_m().expect("validated") as usize;
    let span = if params.k_type.has_x() { 2 } else { 1 };
    let j = params.j_residue();
    let k = params.k_residue();
    let r = params.resolved_r();

    // per-exponent action tables for h^i
    let mut jpow = vec![1u64; pm];
    let mut kgeo = vec![0u64; pm];
    let mut rpow = vec![1u64; pm];
    for i in 1..pm {
        jpow[i] = jpow[i - 1] * j % pn as u64;
        kgeo[i] = (k + j * kgeo[i - 1]) % pn as u64;
        rpow[i] = rpow[i - 1] * r % q as u64;
    }
    // action of x on c, and the value of x^2, per family
    let (sigma, x_square) = match params.k_type {
        KType::Cyclic => (1usize, 0usize),
        KType::Dihedral => (pn - 1, 0),
        KType::Quaternion => (pn - 1, pn / 2),
        KType::Semidihedral => (pn / 2 - 1, 0),
    };

    let encode = |a: usize, b: usize, e: usize, i: usize| ((a * pn + b) * span + e) * pm + i;
    let mul = |u: usize, v: usize| {
        let (u1, i1) = (u / pm, u % pm);
        let (u2, e1) = (u1 / span, u1 % span);
        let (a1, b1) = (u2 / pn, u2 % pn);
        let (v1, i2) = (v / pm, v % pm);
        let (v2, e2) = (v1 / span, v1 % span);
        let (a2, b2) = (v2 / pn, v2 % pn);

        let a = (a1 + a2 * rpow[i1] as usize) % q;
        // move h^i1 past c^b2 x^e2, then x^e1 past the accumulated c power
        let mut mid = (b2 * jpow[i1] as usize + e2 * kgeo[i1] as usize) % pn;
        if e1 == 1 {
            mid = mid * sigma % pn;
        }
        let b = (b1 + mid + e1 * e2 * x_square) % pn;
        encode(a, b, e1 ^ e2, (i1 + i2) % pm)
    };

    let group = FiniteGroup::from_fn(order, mul)?;

    let sub_from_ranges = |pred: &dyn Fn(usize, usize, usize, usize) -> bool| {
        let mut members = crate::groups::BitSet::new(order);
        for a in 0..q {
            for b in 0..pn {
                for e in 0..span {
                    for i in 0..pm {
                        if pred(a, b, e, i) {
                            members.insert(encode(a, b, e, i));
                        }
                    }
                }
            }
        }
        Subgroup::from_bitset(&group, members)
    };

    let c_subgroup = sub_from_ranges(&|_, b, e, i| b == 0 && e == 0 && i == 0);
    let k_subgroup = sub_from_ranges(&|a, _, _, i| a == 0 && i == 0);
    let p_subgroup = sub_from_ranges(&|a, _, _, _| a == 0);
    let a_subgroup = sub_from_ranges(&|a, b, e, _| a == 0 && b == 0 && e == 0);
    let c_k = sub_from_ranges(&|a, _, e, i| a == 0 && e == 0 && i == 0);
    let cbar = sub_from_ranges(&|_, _, e, i| e == 0 && i == 0);

    let t = encode(1 % q, 0, 0, 0);
    let c = encode(0, 1 % pn, 0, 0);
    let x = (span == 2).then(|| encode(0, 0, 1, 0));
    let h = encode(0, 0, 0, 1 % pm);
    let z = (params.n >= 1).then(|| {
        let z_elt = encode(0, pn / params.p as usize, 0, 0);
        closure(&group, &[z_elt])
    });

    Ok(Realization {
        params: params.clone(),
        group,
        r,
        t,
        c,
        x,
        h,
        c_subgroup,
        k_subgroup,
        p_subgroup,
        a_subgroup,
        c_k,
        cbar,
        z,
    })
}

/// Parses `key = value` blocks (blank-line separated, `#` comments) into
/// parameter tuples.
pub fn params_from_config(text: &str) -> Result<Vec<QeParams>, String> {
    let mut out = Vec::new();
    let mut current: Vec<(String, String)> = Vec::new();
    let mut flush = |current: &mut Vec<(String, String)>| -> Result<(), String> {
        if current.is_empty() {
            return Ok(());
        }
        out.push(block_to_params(current)?);
        current.clear();
        Ok(())
    };
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            flush(&mut current)?;
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("expected `key = value`, got {raw:?}"))?;
        current.push((key.trim().to_string(), value.trim().to_string()));
    }
    flush(&mut current)?;
    Ok(out)
}

fn block_to_params(pairs: &[(String, String)]) -> Result<QeParams, String> {
    let mut p = None;
    let mut q = None;
    let mut k_type = None;
    let mut n = None;
    let mut m = None;
    let mut j = None;
    let mut k = None;
    let mut r = None;
    for (key, value) in pairs {
        let parse_u64 = || value.parse::<u64>().map_err(|e| format!("{key}: {e}"));
        let parse_i64 = || value.parse::<i64>().map_err(|e| format!("{key}: {e}"));
        match key.as_str() {
            "p" => p = Some(parse_u64()?),
            "q" => q = Some(parse_u64()?),
            "k_type" | "k-type" => {
                k_type =
                    Some(KType::parse(value).ok_or_else(|| format!("unknown k_type {value:?}"))?)
            }
            "n" => n = Some(parse_u64()? as u32),
            "m" => m = Some(parse_u64()? as u32),
            "j" => j = Some(parse_i64()?),
            "k" => k = Some(parse_i64()?),
            "r" => r = Some(parse_u64()?),
            other => return Err(format!("unknown key {other:?}")),
        }
    }
    Ok(QeParams {
        p: p.ok_or("missing p")?,
        q: q.ok_or("missing q")?,
        k_type: k_type.ok_or("missing k_type")?,
        n: n.ok_or("missing n")?,
        m: m.ok_or("missing m")?,
        j: j.unwrap_or(1),
        k,
        r,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{family_test, is_normal, is_normal_in, GroupFamily};

    fn cyclic_params(p: u64, q: u64, n: u32, m: u32, j: i64) -> QeParams {
        QeParams {
            p,
            q,
            k_type: KType::Cyclic,
            n,
            m,
            j,
            k: None,
            r: None,
        }
    }

    fn non_cyclic(k_type: KType, q: u64, n: u32, m: u32, j: i64, k: i64) -> QeParams {
        QeParams {
            p: 2,
            q,
            k_type,
            n,
            m,
            j,
            k: Some(k),
            r: None,
        }
    }

    #[test]
    fn validate_accepts_and_rejects_spec_cases() {
        assert!(validate(&cyclic_params(2, 7, 2, 1, 3)).is_empty());
        let bad = validate(&cyclic_params(3, 7, 1, 2, 1));
        assert!(bad.contains(&Violation::ANotFaithfulPossible { p: 3, m: 2, qm1: 6 }));
        let bad = validate(&non_cyclic(KType::Semidihedral, 5, 3, 2, 1, 1));
        assert!(bad.contains(&Violation::SemidihedralOddK(1)));
    }

    #[test]
    fn validate_rejects_structural_mistakes() {
        let mut p = non_cyclic(KType::Dihedral, 7, 2, 1, 1, 0);
        p.p = 3;
        assert!(validate(&p).contains(&Violation::NonCyclicNeedsP2(3)));
        let p = non_cyclic(KType::Semidihedral, 5, 2, 1, 1, 0);
        assert!(validate(&p)
            .iter()
            .any(|v| matches!(v, Violation::NTooSmall { .. })));
        let mut p = cyclic_params(2, 5, 2, 2, 3);
        p.k = Some(1);
        assert!(validate(&p).contains(&Violation::KGivenForCyclic));
        let p = cyclic_params(2, 5, 2, 2, 2);
        assert!(validate(&p).contains(&Violation::JNotUnit { j: 2, modulus: 4 }));
        // ord(3) = 4 modulo 16 does not divide 2^1
        let p = cyclic_params(2, 5, 4, 1, 3);
        assert!(validate(&p)
            .iter()
            .any(|v| matches!(v, Violation::JOrderTooLarge { .. })));
    }

    #[test]
    fn realize_orders_match() {
        let real = realize(&cyclic_params(3, 7, 1, 1, 1)).unwrap();
        assert_eq!(real.group.order(), 63);
        let real = realize(&non_cyclic(KType::Dihedral, 3, 2, 1, 1, 0)).unwrap();
        assert_eq!(real.group.order(), 48);
    }

    #[test]
    fn h_always_has_order_p_to_m() {
        for params in [
            cyclic_params(3, 7, 1, 1, 1),
            cyclic_params(2, 5, 2, 2, 3),
            non_cyclic(KType::Quaternion, 3, 2, 1, 1, 0),
            non_cyclic(KType::Semidihedral, 5, 3, 2, 1, 0),
        ] {
            let real = realize(&params).unwrap();
            let pm = params.p_pow_m().unwrap() as usize;
            assert_eq!(real.group.element_order(real.h), pm);
        }
    }

    #[test]
    fn distinguished_subgroups_are_consistent() {
        for params in [
            cyclic_params(3, 7, 2, 1, 4),
            cyclic_params(2, 5, 3, 2, 3),
            non_cyclic(KType::Dihedral, 5, 2, 2, 3, 1),
            non_cyclic(KType::Quaternion, 5, 2, 2, 1, 1),
            non_cyclic(KType::Semidihedral, 5, 3, 2, 3, 2),
        ] {
            let real = realize(&params).unwrap();
            let g = &real.group;
            let pn = params.p_pow_n().unwrap() as usize;
            let span = if params.k_type.has_x() { 2 } else { 1 };
            assert_eq!(real.c_subgroup.order(), params.q as usize);
            assert_eq!(real.k_subgroup.order(), pn * span);
            assert_eq!(
                real.p_subgroup.order(),
                pn * span * params.p_pow_m().unwrap() as usize
            );
            assert!(is_normal(g, &real.c_subgroup));
            assert!(is_normal(g, &real.k_subgroup));
            assert!(is_normal(g, &real.c_k));
            assert!(is_normal(g, &real.cbar));
            // cbar is cyclic of order q * p^n
            assert_eq!(real.cbar.order(), params.q as usize * pn);
            assert_eq!(g.element_order(real.cbar_generator()), real.cbar.order());

            // the declared K is exactly the kernel of the conjugation action
            // of P on C (brute force), given the default faithful r
            let flags = real.hypothesis_flags();
            assert!(flags.a_faithful_on_c);
            let kernel: Vec<usize> = real
                .p_subgroup
                .elems()
                .iter()
                .map(|&u| u as usize)
                .filter(|&u| g.conj(u, real.t) == real.t)
                .collect();
            assert_eq!(kernel.len(), real.k_subgroup.order());
            assert!(kernel.iter().all(|&u| real.k_subgroup.contains(u)));

            // z is the unique order-p subgroup of K normal in G
            let z = real.z.as_ref().unwrap();
            assert_eq!(z.order(), params.p as usize);
            assert!(is_normal(g, z));
            let mut count = 0;
            for &u in real.k_subgroup.elems() {
                if g.element_order(u as usize) == params.p as usize {
                    let s = closure(g, &[u as usize]);
                    if is_normal(g, &s) {
                        assert_eq!(&s, z);
                        count += 1;
                    }
                }
            }
            assert_eq!(
                count,
                params.p as usize - 1,
                "one normal subgroup of order p"
            );

            // the realized K belongs to its declared family
            let k_group = crate::groups::quotient_in(g, &real.k_subgroup, &Subgroup::trivial(g))
                .unwrap()
                .group;
            let family = match params.k_type {
                KType::Cyclic => GroupFamily::Cyclic,
                KType::Dihedral => GroupFamily::Dihedral2Group,
                KType::Quaternion => GroupFamily::GeneralizedQuaternion,
                KType::Semidihedral => GroupFamily::Semidihedral,
            };
            assert!(family_test(&k_group, family), "{}", params.label());
            assert!(is_normal_in(g, &real.c_k, &real.k_subgroup));
        }
    }

    #[test]
    fn quaternion_x_generates_order_four() {
        let real = realize(&non_cyclic(KType::Quaternion, 3, 2, 1, 1, 0)).unwrap();
        let x = real.x.unwrap();
        let s = closure(&real.group, &[x]);
        assert_eq!(s.order(), 4);
    }

    #[test]
    fn trivial_k_gives_semidirect_of_cyclics() {
        // C_3 x| C_2 is the symmetric group on three letters
        let params = cyclic_params(2, 3, 0, 1, 1);
        let real = realize(&params).unwrap();
        assert_eq!(real.group.order(), 6);
        assert!(!real.group.is_abelian());
        let flags = real.hypothesis_flags();
        assert!(flags.k_trivial);
        assert!(flags.a_faithful_on_c);
        assert!(real.z.is_none());
        assert_eq!(real.cbar.order(), 3);
    }

    #[test]
    fn hypothesis_flag_examples() {
        let real = realize(&cyclic_params(3, 7, 1, 1, 1)).unwrap();
        assert!(real.hypothesis_flags().action_kernel_nontrivial);

        let real = realize(&cyclic_params(2, 5, 2, 2, 3)).unwrap();
        let flags = real.hypothesis_flags();
        // 3^2 = 9 = 1 mod 4
        assert!(flags.action_kernel_nontrivial);
        assert!(flags.a_faithful_on_c);

        let real = realize(&cyclic_params(2, 5, 2, 1, 3)).unwrap();
        let flags = real.hypothesis_flags();
        assert!(flags.a_faithful_on_c);
        // h itself acts as c -> c^3, so the kernel of A on K is trivial
        assert!(!flags.action_kernel_nontrivial);

        // overriding r to 1 makes A act trivially on C
        let mut params = cyclic_params(3, 7, 1, 1, 1);
        params.r = Some(1);
        let real = realize(&params).unwrap();
        assert!(!real.hypothesis_flags().a_faithful_on_c);
    }

    #[test]
    fn realization_bound_is_enforced() {
        let params = cyclic_params(2, 257, 5, 8, 1);
        match realize(&params) {
            Err(QeError::ResourceLimit { bound, .. }) => {
                assert_eq!(bound, REALIZATION_ORDER_BOUND)
            }
            other => panic!("expected resource limit, got {other:?}"),
        }
    }

    #[test]
    fn config_blocks_parse() {
        let text = "\
# two groups
p = 3
q = 7
k_type = cyclic
n = 1
m = 1
j = 1

p = 2
q = 5
k_type = semidihedral
n = 3
m = 2
j = 1
k = 0
r = 2
";
        let parsed = params_from_config(text).unwrap();
        assert_eq!(parsed.len(), 2);
        assert_eq!(parsed[0].p, 3);
        assert_eq!(parsed[1].k_type, KType::Semidihedral);
        assert_eq!(parsed[1].r, Some(2));
        assert!(params_from_config("p: 3").is_err());
        assert!(params_from_config("weird = 1").is_err());
    }
}
