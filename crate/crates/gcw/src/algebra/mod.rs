//! Finite fields, permutations and permutation groups.

mod action;
mod field;
mod group;
pub mod linalg;
mod perm;

pub use action::{orbit, orbit_with_transversal, Action, OnPoints, OnSets, OnTuples};
pub use field::{FieldReduction, FiniteField};
pub use group::{
    normalizer_in_sym, stabilizer_under, two_transitive_type, PermGroup, StabChain,
    TwoTransitiveType,
};
pub use perm::Perm;

/// Greatest common divisor.
pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `(p, d)` with `n = p^d`, or `None` when `n` is not a prime power.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while n % p != 0 {
        p += 1;
    }
    let mut m = n;
    let mut d = 0;
    while m % p == 0 {
        m /= p;
        d += 1;
    }
    (m == 1).then_some((p, d))
}

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
        if r > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    r as u64
}
