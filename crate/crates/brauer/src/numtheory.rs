//! Exact elementary number theory: l-adic valuations, the Möbius function,
//! multiplicative orders and deterministic elements of prescribed order.
//!
//! Everything here works on arbitrary-precision integers where overflow is
//! conceivable (powers such as `j^(2^(m-1))` overflow machine words already at
//! modest exponents), and divisibility conditions are evaluated by modular
//! exponentiation rather than by forming the full power.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumTheoryError {
    /// `mult_order` requires the base to be a unit modulo the modulus.
    #[error("{a} is not a unit modulo {modulus}")]
    NotAUnit { a: i64, modulus: u64 },
    /// `element_of_order` requires the target order to divide `q - 1`.
    #[error("no element of order {d} modulo {q}: {d} does not divide {q} - 1")]
    NoSuchOrder { q: u64, d: u64 },
}

/// l-adic valuation of an integer; `Infinite` is the valuation of 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

/// Deterministic primality test by trial division. Inputs in this crate are
/// small primes and prime powers supplied by callers, so no sieving or
/// probabilistic testing is warranted.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Largest `e` with `l^e | x`, or `Valuation::Infinite` for `x = 0`.
pub fn valuation(l: u64, x: &BigInt) -> Valuation {
    assert!(is_prime(l), "valuation requires a prime l, got {l}");
    if x.is_zero() {
        return Valuation::Infinite;
    }
    let l = BigInt::from(l);
    let mut v = 0u64;
    let mut rest = x.abs();
    loop {
        let (q, r) = rest.div_rem(&l);
        if !r.is_zero() {
            return Valuation::Finite(v);
        }
        rest = q;
        v += 1;
    }
}

/// Convenience wrapper for machine-word arguments.
pub fn valuation_u64(l: u64, x: u64) -> Valuation {
    valuation(l, &BigInt::from(x))
}

/// Classical Möbius function on positive integers.
pub fn moebius(d: u64) -> i64 {
    assert!(d >= 1, "moebius requires d >= 1");
    let mut rest = d;
    let mut factors = 0;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if rest.is_multiple_of(p) {
            rest /= p;
            if rest.is_multiple_of(p) {
                return 0;
            }
            factors += 1;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors += 1;
    }
    if factors % 2 == 0 {
        1
    } else {
        -1
    }
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler totient of `m`, via trial-division factorization.
pub fn euler_phi(m: u64) -> u64 {
    let mut phi = 1u64;
    for (p, e) in factorize(m) {
        phi *= p.pow(e - 1) * (p - 1);
    }
    phi
}

/// `a^e mod m` for machine words, with `m >= 1`.
pub fn pow_mod(a: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut base = (a % m) as u128;
    let mut acc = 1u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m128;
        }
        base = base * base % m128;
        e >>= 1;
    }
    acc as u64
}

/// Least `s >= 1` with `a^s = 1 (mod m)`; errors unless `gcd(a, m) = 1`.
pub fn mult_order(a: i64, m: u64) -> Result<u64, NumTheoryError> {
    assert!(m >= 2, "mult_order requires a modulus >= 2");
    let a_red = a.rem_euclid(m as i64) as u64;
    if a_red.gcd(&m) != 1 {
        return Err(NumTheoryError::NotAUnit { a, modulus: m });
    }
    // The order divides phi(m); strip prime factors from phi while the power
    // stays trivial.
    let mut order = euler_phi(m);
    for (p, _) in factorize(order) {
        while order.is_multiple_of(p) && pow_mod(a_red, order / p, m) == 1 {
            order /= p;
        }
    }
    debug_assert_eq!(pow_mod(a_red, order, m), 1);
    Ok(order)
}

/// Smallest `r` in `[1, q-1]` of multiplicative order exactly `d` modulo the
/// prime `q`. The minimal choice keeps group realizations reproducible.
pub fn element_of_order(q: u64, d: u64) -> Result<u64, NumTheoryError> {
    assert!(is_prime(q), "element_of_order requires a prime modulus");
    if d == 0 || !(q - 1).is_multiple_of(d) {
        return Err(NumTheoryError::NoSuchOrder { q, d });
    }
    for r in 1..q {
        if mult_order(r as i64, q) == Ok(d) {
            return Ok(r);
        }
    }
    unreachable!("(Z/qZ)^x is cyclic, so an element of each dividing order exists")
}

/// `1 + j + ... + j^(s-1) mod m`, the geometric sum evaluated without ever
/// dividing by `j - 1`. Fast-doubling recurrence, O(log s) multiplications.
pub fn geometric_sum_mod(j: u64, s: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    // geo(2t) = geo(t) * (1 + j^t),  geo(2t+1) = geo(2t) + j^(2t)
    let m128 = m as u128;
    let mut geo = 0u128;
    let mut jpow = 1u128; // j^t for the t accumulated so far
    let j = (j % m) as u128;
    for bit in (0..64 - s.leading_zeros()).rev() {
        geo = geo * (1 + jpow) % m128;
        jpow = jpow * jpow % m128;
        if (s >> bit) & 1 == 1 {
            geo = (geo + jpow) % m128;
            jpow = jpow * j % m128;
        }
    }
    geo as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Pow;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    /// Brute-force multiplicative order by direct powering; the independent
    /// oracle for `mult_order`.
    fn order_by_powering(a: u64, m: u64) -> u64 {
        let mut acc = a % m;
        let mut s = 1;
        while acc != 1 {
            acc = acc * a % m;
            s += 1;
        }
        s
    }

    #[test]
    fn valuation_of_prime_powers() {
        assert_eq!(valuation_u64(2, 16), Valuation::Finite(4));
        assert_eq!(valuation_u64(3, 18), Valuation::Finite(2));
        assert_eq!(valuation_u64(5, 7), Valuation::Finite(0));
    }

    #[test]
    fn valuation_of_zero_is_infinite() {
        assert_eq!(valuation(2, &BigInt::zero()), Valuation::Infinite);
        assert_eq!(Valuation::Infinite.finite(), None);
    }

    #[test]
    fn valuation_lifting_identity_instance() {
        // v_2(5^4 - 1) = v_2(5 - 1) + v_2(4) = 2 + 2
        let x = BigInt::from(5).pow(4u32) - 1;
        assert_eq!(valuation(2, &x), Valuation::Finite(4));
    }

    #[test]
    fn moebius_small_values() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(4), 0);
        assert_eq!(moebius(2), -1);
        assert_eq!(moebius(30), -1);
    }

    #[test]
    fn moebius_is_multiplicative_and_sums_to_zero() {
        let mut rng = StdRng::seed_from_u64(1);
        for _ in 0..200 {
            let a = rng.gen_range(1..200u64);
            let b = rng.gen_range(1..200u64);
            if a.gcd(&b) == 1 {
                assert_eq!(moebius(a * b), moebius(a) * moebius(b));
            }
        }
        for n in 2..500u64 {
            let total: i64 = (1..=n).filter(|d| n % d == 0).map(moebius).sum();
            assert_eq!(total, 0, "divisor sum of moebius at {n}");
        }
    }

    #[test]
    fn mult_order_matches_direct_powering() {
        // Frozen from the powering oracle: 3, 9, 27 = 11, 33 = 1 (mod 16).
        assert_eq!(order_by_powering(3, 16), 4);
        assert_eq!(mult_order(3, 16), Ok(4));
        assert_eq!(order_by_powering(2, 7), 3);
        assert_eq!(mult_order(2, 7), Ok(3));
        assert_eq!(mult_order(1, 8), Ok(1));
    }

    #[test]
    fn mult_order_rejects_non_units() {
        assert_eq!(
            mult_order(6, 8),
            Err(NumTheoryError::NotAUnit { a: 6, modulus: 8 })
        );
    }

    #[test]
    fn mult_order_divides_unit_group_order() {
        let mut rng = StdRng::seed_from_u64(2);
        for _ in 0..300 {
            let m = rng.gen_range(2..400u64);
            let a = rng.gen_range(1..m) as i64;
            if let Ok(ord) = mult_order(a, m) {
                let units = (1..m).filter(|x| x.gcd(&m) == 1).count() as u64;
                assert_eq!(units % ord, 0, "ord({a}) mod {m} must divide {units}");
                assert_eq!(order_by_powering(a as u64, m), ord);
            }
        }
    }

    #[test]
    fn element_of_order_picks_smallest() {
        // Frozen from scanning orders of 2..6 mod 7 and 2..4 mod 5 by powering.
        let orders_mod_7: Vec<u64> = (1..7).map(|r| order_by_powering(r, 7)).collect();
        assert_eq!(orders_mod_7, vec![1, 3, 6, 3, 6, 2]);
        assert_eq!(element_of_order(7, 3), Ok(2));
        assert_eq!(element_of_order(5, 4), Ok(2));
        assert_eq!(element_of_order(13, 1), Ok(1));
        assert_eq!(
            element_of_order(7, 4),
            Err(NumTheoryError::NoSuchOrder { q: 7, d: 4 })
        );
    }

    #[test]
    fn geometric_sum_agrees_with_naive_and_division() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..500 {
            let j = rng.gen_range(0..50u64);
            let s = rng.gen_range(0..40u64);
            let m = rng.gen_range(2..100u64);
            let naive = (0..s).fold(0u64, |acc, i| (acc + pow_mod(j, i, m)) % m);
            assert_eq!(geometric_sum_mod(j, s, m), naive, "j={j} s={s} m={m}");
            if j > 1 {
                // (j^s - 1)/(j - 1) by exact big-integer division.
                let js: BigInt = BigInt::from(j).pow(s);
                let q: BigInt = (js - 1) / (BigInt::from(j) - 1);
                let q_mod: BigInt = q % BigInt::from(m);
                let q_mod = q_mod.to_string().parse::<u64>().unwrap();
                assert_eq!(geometric_sum_mod(j, s, m), q_mod);
            }
        }
    }

    proptest! {
        /// v_l(a^s - 1) = v_l(a - 1) + v_l(s) whenever a = 1 (mod l), and
        /// a = 1 (mod 4) when l = 2.
        #[test]
        fn valuation_lifting_identity(
            l_idx in 0usize..6,
            a_raw in 1u64..1_000_000,
            s in 1u64..4096,
        ) {
            let l = [2u64, 3, 5, 7, 11, 13][l_idx];
            let unit = if l == 2 { 4 } else { l };
            let a = a_raw - (a_raw % unit) + 1;
            let lhs = valuation(l, &(BigInt::from(a).pow(s) - 1));
            let rhs = valuation_u64(l, a - 1).finite().unwrap()
                + valuation_u64(l, s).finite().unwrap();
            prop_assert_eq!(lhs, Valuation::Finite(rhs));
        }
    }
}
