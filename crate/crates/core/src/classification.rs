//! Membership tests for the semigroup families built from gluings:
//! strongly increasing (SI), generalized strongly increasing (GSI),
//! telescopic, free and complete intersection.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, gcd_all, monoid_contains};
use crate::error::{Error, Result};
use crate::gluing::GluingSpec;
use crate::semigroup::NumericalSemigroup;

/// Evaluation of the characteristic-sequence conditions on a generator
/// sequence `(v_0, …, v_h)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacteristicSequenceReport {
    pub sequence: Vec<u64>,
    /// `e[k] = gcd(v_0, …, v_k)`.
    pub e: Vec<u64>,
    /// `n[k - 1] = e[k - 1] / e[k]` for `k = 1..h`.
    pub n: Vec<u64>,
    pub cs1_ok: bool,
    pub cs2_ok: bool,
    /// `Σ (n_i - 1)·v_i - v_0 + 1`, set only when both conditions hold.
    pub conductor_formula: Option<i64>,
}

impl CharacteristicSequenceReport {
    pub fn new(sequence: &[u64]) -> Self {
        let mut e = Vec::with_capacity(sequence.len());
        let mut acc = 0;
        for &v in sequence {
            acc = gcd(acc, v);
            e.push(acc);
        }
        let n: Vec<u64> = e.windows(2).map(|w| w[0] / w[1]).collect();
        let cs1_ok =
            !sequence.is_empty() && e.windows(2).all(|w| w[1] < w[0]) && e.last() == Some(&1);
        // e_{k-1} v_k < e_k v_{k+1} for 1 <= k <= h - 1
        let cs2_ok = (1..sequence.len().saturating_sub(1)).all(|k| {
            (e[k - 1] as u128) * (sequence[k] as u128) < (e[k] as u128) * (sequence[k + 1] as u128)
        });
        let conductor_formula = (cs1_ok && cs2_ok).then(|| {
            let sum: i128 = (1..sequence.len())
                .map(|i| (n[i - 1] as i128 - 1) * sequence[i] as i128)
                .sum();
            (sum - sequence[0] as i128 + 1) as i64
        });
        CharacteristicSequenceReport {
            sequence: sequence.to_vec(),
            e,
            n,
            cs1_ok,
            cs2_ok,
            conductor_formula,
        }
    }

    pub fn is_characteristic(&self) -> bool {
        self.cs1_ok && self.cs2_ok
    }
}

/// SI test on the ascending minimal generators.
pub fn is_strongly_increasing(s: &NumericalSemigroup) -> (bool, CharacteristicSequenceReport) {
    let report = CharacteristicSequenceReport::new(s.minimal_generators());
    (report.is_characteristic(), report)
}

/// Swaps or drops the first term of a characteristic sequence whose
/// second term is smaller than its first.
pub fn reorder_characteristic(seq: &[u64]) -> Result<Vec<u64>> {
    if seq.len() < 3 {
        return Err(Error::NotCharacteristic(format!(
            "need at least three terms, got {}",
            seq.len()
        )));
    }
    if !CharacteristicSequenceReport::new(seq).is_characteristic() {
        return Err(Error::NotCharacteristic(format!(
            "{seq:?} fails CS1 or CS2"
        )));
    }
    let (v0, v1) = (seq[0], seq[1]);
    if v1 >= v0 {
        return Err(Error::NotCharacteristic(format!(
            "v_1 = {v1} is not below v_0 = {v0}"
        )));
    }
    let mut out = Vec::with_capacity(seq.len());
    out.push(v1);
    if v0 % v1 != 0 {
        out.push(v0);
    }
    out.extend_from_slice(&seq[2..]);
    Ok(out)
}

/// Decomposes `S` as `S' ⊕_{d,γ} ℕ` with `γ` the largest minimal generator
/// and `d` the gcd of the others, and checks the GSI inequality.
///
/// Returns `(false, None)` for embedding dimension 1 and whenever `d = 1`.
pub fn is_gsi(s: &NumericalSemigroup) -> (bool, Option<GluingSpec>) {
    let gens = s.minimal_generators();
    if gens.len() < 2 {
        return (false, None);
    }
    let (rest, gamma) = (&gens[..gens.len() - 1], gens[gens.len() - 1]);
    let d = gcd_all(rest);
    if d < 2 {
        return (false, None);
    }
    let reduced: Vec<u64> = rest.iter().map(|&g| g / d).collect();
    let Ok(base) = NumericalSemigroup::from_generators(&reduced) else {
        return (false, None);
    };
    match GluingSpec::new(base, d, gamma) {
        Ok(spec) if spec.is_gsi() => (true, Some(spec)),
        _ => (false, None),
    }
}

/// SI test through the recursive gluing construction: `S` is SI iff it is
/// ℕ, has two generators, or is `S' ⊕_{d,γ} ℕ` with `S'` SI and
/// `γ > d·gcd(v_0, …, v_{h-2})·v_{h-1}` for the generators `v` of `S'`.
pub fn is_si_by_gluing(s: &NumericalSemigroup) -> bool {
    si_by_gluing(s.minimal_generators())
}

fn si_by_gluing(gens: &[u64]) -> bool {
    let h = gens.len() - 1;
    if h <= 1 {
        return true;
    }
    let (rest, gamma) = (&gens[..h], gens[h]);
    let d = gcd_all(rest);
    if d < 2 {
        return false;
    }
    let v: Vec<u64> = rest.iter().map(|&g| g / d).collect();
    let bound = d as u128 * gcd_all(&v[..h - 1]) as u128 * v[h - 1] as u128;
    gamma as u128 > bound && si_by_gluing(&v)
}

/// Checks that `seq` is a free arrangement: each `n_k·v_k` lies in the
/// monoid generated by the earlier terms, with gcd prefixes strictly
/// decreasing down to 1.
pub fn is_free_arrangement(seq: &[u64]) -> bool {
    let mut prefix_gcd = seq[0];
    for k in 1..seq.len() {
        let next = gcd(prefix_gcd, seq[k]);
        if next >= prefix_gcd || !free_step(&seq[..k], prefix_gcd, seq[k], next) {
            return false;
        }
        prefix_gcd = next;
    }
    prefix_gcd == 1
}

// (e_{k-1}/e_k)·v_k ∈ ⟨prefix⟩, scaled down by e_{k-1}.
fn free_step(prefix: &[u64], prefix_gcd: u64, v: u64, next_gcd: u64) -> bool {
    let scaled: Vec<u64> = prefix.iter().map(|&p| p / prefix_gcd).collect();
    monoid_contains(&scaled, v / next_gcd)
}

/// Free for the ascending order of the minimal generators.
pub fn is_telescopic(s: &NumericalSemigroup) -> bool {
    is_free_arrangement(s.minimal_generators())
}

pub fn is_free(s: &NumericalSemigroup) -> bool {
    free_arrangement(s.minimal_generators()).is_some()
}

/// Some ordering of `gens` that is a free arrangement, found by
/// depth-first search over prefixes.
pub fn free_arrangement(gens: &[u64]) -> Option<Vec<u64>> {
    if gens == [1] {
        return Some(vec![1]);
    }
    let mut used = vec![false; gens.len()];
    let mut order = Vec::with_capacity(gens.len());
    for i in 0..gens.len() {
        // Each later term at least halves the prefix gcd.
        if (gens.len() as u32 - 1) > gens[i].ilog2() {
            continue;
        }
        used[i] = true;
        order.push(gens[i]);
        if extend_free(gens, &mut used, &mut order, gens[i]) {
            return Some(order);
        }
        order.pop();
        used[i] = false;
    }
    None
}

fn extend_free(gens: &[u64], used: &mut [bool], order: &mut Vec<u64>, prefix_gcd: u64) -> bool {
    if order.len() == gens.len() {
        return prefix_gcd == 1;
    }
    let remaining_after = (gens.len() - order.len() - 1) as u32;
    for i in 0..gens.len() {
        if used[i] {
            continue;
        }
        let next = gcd(prefix_gcd, gens[i]);
        if next >= prefix_gcd || (next > 0 && remaining_after > next.ilog2()) {
            continue;
        }
        if !free_step(order, prefix_gcd, gens[i], next) {
            continue;
        }
        used[i] = true;
        order.push(gens[i]);
        if extend_free(gens, used, order, next) {
            return true;
        }
        order.pop();
        used[i] = false;
    }
    false
}

pub fn is_complete_intersection(s: &NumericalSemigroup) -> bool {
    let mut memo = HashMap::new();
    ci_generators(s.minimal_generators(), &mut memo)
}

/// Complete-intersection test on a minimal generating system with gcd 1.
///
/// Searches the bipartitions `(A, B)` that can split the system as a
/// gluing: `A` holds the multiplicity, `d₁ = gcd(A)` divides it, every
/// generator outside `A` is a multiple of `d₂ = gcd(B)`, and generators
/// divisible by `d₁` but also by `d₂` may fall on either side.
pub fn ci_generators(gens: &[u64], memo: &mut HashMap<Vec<u64>, bool>) -> bool {
    if gens.len() == 1 {
        return gens[0] == 1;
    }
    if gens.len() == 2 {
        return true;
    }
    if let Some(&known) = memo.get(gens) {
        return known;
    }
    let result = ci_search(gens, memo);
    memo.insert(gens.to_vec(), result);
    result
}

fn ci_search(gens: &[u64], memo: &mut HashMap<Vec<u64>, bool>) -> bool {
    let first = gens[0];
    for d1 in divisors(first).into_iter().filter(|&d| d >= 2) {
        let (multiples, others): (Vec<u64>, Vec<u64>) = gens.iter().partition(|&&g| g % d1 == 0);
        if others.is_empty() {
            continue;
        }
        let others_gcd = gcd_all(&others);
        for d2 in divisors(others_gcd)
            .into_iter()
            .filter(|&d| d >= 2 && gcd(d, d1) == 1)
        {
            // The multiplicity stays in A; the rest of the flexible set may move.
            let (flexible, fixed): (Vec<u64>, Vec<u64>) =
                multiples.iter().partition(|&&g| g != first && g % d2 == 0);
            for mask in 0u64..(1 << flexible.len()) {
                let mut a = fixed.clone();
                let mut b = others.clone();
                for (j, &g) in flexible.iter().enumerate() {
                    if mask >> j & 1 == 1 {
                        b.push(g);
                    } else {
                        a.push(g);
                    }
                }
                a.sort_unstable();
                b.sort_unstable();
                if is_ci_split(&a, &b, memo) {
                    return true;
                }
            }
        }
    }
    false
}

/// Whether `(a, b)` glues into a complete intersection, both parts being
/// recursively complete intersections.
pub fn is_ci_split(a: &[u64], b: &[u64], memo: &mut HashMap<Vec<u64>, bool>) -> bool {
    if a.is_empty() || b.is_empty() {
        return false;
    }
    let (d1, d2) = (gcd_all(a), gcd_all(b));
    if gcd(d1, d2) != 1 {
        return false;
    }
    let qa: Vec<u64> = a.iter().map(|&x| x / d1).collect();
    let qb: Vec<u64> = b.iter().map(|&x| x / d2).collect();
    monoid_contains(&qb, d1)
        && monoid_contains(&qa, d2)
        && ci_generators(&qa, memo)
        && ci_generators(&qb, memo)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The five family verdicts for one semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub si: bool,
    pub gsi: bool,
    pub telescopic: bool,
    pub free: bool,
    pub complete_intersection: bool,
    pub si_witness: Option<CharacteristicSequenceReport>,
    pub gsi_witness: Option<GluingSpec>,
}

pub fn classify(s: &NumericalSemigroup) -> ClassificationReport {
    let (si, report) = is_strongly_increasing(s);
    let (gsi, spec) = is_gsi(s);
    ClassificationReport {
        si,
        gsi,
        telescopic: is_telescopic(s),
        free: is_free(s),
        complete_intersection: is_complete_intersection(s),
        si_witness: si.then_some(report),
        gsi_witness: spec,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn si_examples() {
        assert!(!is_strongly_increasing(&sg(&[6, 14, 22, 23])).0);
        assert!(is_strongly_increasing(&sg(&[2, 3])).0);
        let (si, report) = is_strongly_increasing(&sg(&[4, 6, 13]));
        assert!(si);
        assert_eq!(report.e, vec![4, 2, 1]);
        assert_eq!(report.n, vec![2, 2]);
        // (2-1)·6 + (2-1)·13 - 4 + 1
        assert_eq!(report.conductor_formula, Some(16));
        assert_eq!(sg(&[4, 6, 13]).conductor(), 16);
    }

    #[test]
    fn cs2_is_strict() {
        // e0·v1 = 24 is not below e1·v2 = 22
        let r = CharacteristicSequenceReport::new(&[4, 6, 11]);
        assert!(r.cs1_ok);
        assert!(!r.cs2_ok);
        assert_eq!(r.conductor_formula, None);
    }

    #[test]
    fn reorder() {
        assert_eq!(reorder_characteristic(&[4, 2, 7]), Ok(vec![2, 7]));
        assert_eq!(reorder_characteristic(&[9, 6, 22]), Ok(vec![6, 9, 22]));
        assert!(matches!(
            reorder_characteristic(&[2, 3]),
            Err(Error::NotCharacteristic(_))
        ));
        assert!(matches!(
            reorder_characteristic(&[4, 6, 13]),
            Err(Error::NotCharacteristic(_))
        ));
        assert!(matches!(
            reorder_characteristic(&[6, 4, 5]),
            Err(Error::NotCharacteristic(_))
        ));
    }

    #[test]
    fn gsi_examples() {
        let (ok, spec) = is_gsi(&sg(&[6, 14, 22, 23]));
        assert!(ok);
        let spec = spec.unwrap();
        assert_eq!(spec.base().minimal_generators(), &[3, 7, 11]);
        assert_eq!((spec.d(), spec.gamma()), (2, 23));

        assert_eq!(is_gsi(&sg(&[3, 5, 7])), (false, None));
        assert_eq!(is_gsi(&sg(&[1])), (false, None));

        let (ok, spec) = is_gsi(&sg(&[5, 12]));
        assert!(ok);
        let spec = spec.unwrap();
        assert!(spec.base().is_naturals());
        assert_eq!((spec.d(), spec.gamma()), (5, 12));
    }

    #[test]
    fn si_by_gluing_examples() {
        assert!(is_si_by_gluing(&sg(&[2, 3])));
        assert!(!is_si_by_gluing(&sg(&[6, 14, 22, 23])));
        assert!(is_si_by_gluing(&sg(&[4, 6, 13])));
        assert!(!is_si_by_gluing(&sg(&[4, 6, 11])));
    }

    #[test]
    fn quintet_for_6_14_22_23() {
        let r = classify(&sg(&[6, 14, 22, 23]));
        assert!(!r.free && !r.telescopic && !r.complete_intersection && !r.si);
        assert!(r.gsi);
    }

    #[test]
    fn two_generators_are_everything() {
        let r = classify(&sg(&[2, 3]));
        assert!(r.si && r.gsi && r.telescopic && r.free && r.complete_intersection);
    }

    #[test]
    fn telescopic_4_6_13() {
        assert!(is_telescopic(&sg(&[4, 6, 13])));
    }

    #[test]
    fn free_but_not_telescopic() {
        // (10, 4, 7) has e = 10, 2, 1
        let s = sg(&[4, 7, 10]);
        assert!(!is_telescopic(&s));
        let order = free_arrangement(s.minimal_generators()).unwrap();
        assert!(is_free_arrangement(&order));
        assert!(is_free(&s));
    }

    #[test]
    fn ci_not_free() {
        // 2·⟨5,7⟩ glued with 3·⟨5,7⟩
        let s = sg(&[10, 14, 15, 21]);
        assert!(is_complete_intersection(&s));
        assert!(!is_free(&s));
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(9), vec![1, 3, 9]);
    }
}
