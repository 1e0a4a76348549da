//! Naive reference computations shared by the integration tests.

#![allow(dead_code)]

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Membership of `⟨gens⟩` on `[0, limit]` by plain reachability.
pub fn reach(gens: &[u64], limit: usize) -> Vec<bool> {
    let mut member = vec![false; limit + 1];
    member[0] = true;
    for n in 1..=limit {
        member[n] = gens
            .iter()
            .any(|&g| g as usize <= n && member[n - g as usize]);
    }
    member
}

/// Reference semigroup data derived from a membership table that is long
/// enough to contain the conductor plus the largest generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Naive {
    pub gaps: Vec<u64>,
    pub frobenius: i64,
    pub minimal: Vec<u64>,
}

pub fn naive(gens: &[u64]) -> Naive {
    let top = *gens.iter().max().unwrap() as usize;
    let limit = top * top + 2 * top + 2;
    let member = reach(gens, limit);
    let gaps: Vec<u64> = (1..=limit)
        .filter(|&n| !member[n])
        .map(|n| n as u64)
        .collect();
    let frobenius = gaps.last().map_or(-1, |&g| g as i64);
    let minimal = (1..=top)
        .filter(|&x| member[x] && !(1..x).any(|a| member[a] && member[x - a]))
        .map(|x| x as u64)
        .collect();
    Naive {
        gaps,
        frobenius,
        minimal,
    }
}

/// Every numerical semigroup with Frobenius number `k ≥ 1`, as the sorted
/// list of its small elements below `k`, by testing all subsets.
pub fn brute_force_small_sets(k: u64) -> Vec<Vec<u64>> {
    let width = (k - 1) as u32;
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << width) {
        let has = |x: u64| x > k || (x >= 1 && x < k && mask >> (x - 1) & 1 == 1);
        let elems: Vec<u64> = (1..k).filter(|&x| has(x)).collect();
        let closed = elems.iter().all(|&a| elems.iter().all(|&b| has(a + b)));
        let k_gap = !elems.iter().any(|&a| elems.iter().any(|&b| a + b == k));
        if closed && k_gap {
            out.push(elems);
        }
    }
    out
}

/// Minimal generators of `{0} ∪ small ∪ (k, ∞)`.
pub fn generators_from_small(small: &[u64], k: u64) -> Vec<u64> {
    let has = |x: u64| x == 0 || x > k || small.contains(&x);
    (1..=2 * k + 2)
        .filter(|&x| has(x) && !(1..x).any(|a| has(a) && has(x - a)))
        .collect()
}
