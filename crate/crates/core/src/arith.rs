//! Small integer helpers shared by the other modules.

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// gcd of a slice; 0 for the empty slice.
pub fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0, |acc, &v| gcd(acc, v))
}

pub fn checked_mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// Membership of `target` in the submonoid of (N, +) generated by `gens`.
///
/// The generators need not have gcd 1. Runs a reachability table up to
/// `target`.
pub fn monoid_contains(gens: &[u64], target: u64) -> bool {
    if target == 0 {
        return true;
    }
    let g = gcd_all(gens);
    if g == 0 || !target.is_multiple_of(g) {
        return false;
    }
    let gens: Vec<usize> = gens.iter().map(|&x| (x / g) as usize).collect();
    let target = (target / g) as usize;
    let mut reach = vec![false; target + 1];
    reach[0] = true;
    for n in 1..=target {
        reach[n] = gens.iter().any(|&x| x <= n && reach[n - x]);
    }
    reach[target]
}
