//! Even Frobenius numbers of GSI semigroups.
//!
//! `F(S ⊕_{d,γ} ℕ) = d·F(S) + (d - 1)·γ` is even only when `d` is odd and
//! `F(S)` is even. With `γ > d·F(S)` and `d ≥ 3` this gives
//! `F(S) ≤ (f - 2)/9`, so a search for a given even `f` only needs seeds
//! with small even Frobenius number. Seeds with `F(S) ∈ {2, 4, 6, 8}` are
//! enumerated outright; for even `t ≥ 10` the single semigroup
//! [`s_family`]`(t)` suffices, since its largest generator `t - 1` makes the
//! γ condition as weak as it can be (`γ > d·t`).

use std::collections::BTreeSet;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::enumeration::semigroups_with_frobenius;
use crate::error::{Error, Result};
use crate::gluing::GluingSpec;
use crate::semigroup::NumericalSemigroup;

/// Smallest even Frobenius number of a GSI semigroup.
pub const FIRST_EVEN: u64 = 38;

/// Frobenius numbers whose seeds are enumerated exhaustively.
pub const SMALL_SEED_FROBENIUS: [u64; 4] = [2, 4, 6, 8];

/// Seeds for the even search.
#[derive(Debug)]
pub struct SeedBank {
    small: [Vec<NumericalSemigroup>; 4],
}

impl SeedBank {
    fn build() -> Result<Self> {
        let class = |t: u64| semigroups_with_frobenius(t as i64);
        Ok(SeedBank {
            small: [class(2)?, class(4)?, class(6)?, class(8)?],
        })
    }

    /// Shared instance; the small classes are enumerated once.
    pub fn get() -> &'static SeedBank {
        static BANK: OnceLock<SeedBank> = OnceLock::new();
        BANK.get_or_init(|| SeedBank::build().expect("small Frobenius classes enumerate"))
    }

    /// All semigroups with Frobenius number `t ∈ {2, 4, 6, 8}`, sorted.
    pub fn small(&self, t: u64) -> Option<&[NumericalSemigroup]> {
        SMALL_SEED_FROBENIUS
            .iter()
            .position(|&x| x == t)
            .map(|i| self.small[i].as_slice())
    }

    /// Seeds for Frobenius number `t`: the small class for `t ≤ 8`,
    /// `[S_t]` for even `t ≥ 10`.
    pub fn seeds(&self, t: u64) -> Result<Vec<NumericalSemigroup>> {
        match self.small(t) {
            Some(list) => Ok(list.to_vec()),
            None => Ok(vec![s_family(t)?]),
        }
    }

    /// The smallest largest-generator within the seeds of `t`.
    pub fn least_max_generator(&self, t: u64) -> Result<u64> {
        match self.small(t) {
            Some(list) => Ok(list.iter().map(|s| s.max_generator()).min().unwrap()),
            None => Ok(s_family(t)?.max_generator()),
        }
    }
}

/// The semigroup minimally generated by
/// `{f/2 - 1, f/2 + 2, f/2 + 3, …, f - 3, f - 1}`; its Frobenius number is `f`.
pub fn s_family(f: u64) -> Result<NumericalSemigroup> {
    if !f.is_multiple_of(2) || f < 10 {
        return Err(Error::BadInput(format!(
            "S_f needs an even f >= 10, got {f}"
        )));
    }
    let h = f / 2;
    let mut gens = vec![h - 1];
    gens.extend(h + 2..=2 * (h - 1) - 1);
    gens.push(2 * (h - 1) + 1);
    NumericalSemigroup::from_generators(&gens)
}

/// Search ranges for seeds of an even Frobenius target `f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvenBounds {
    pub f: u64,
    /// Largest admissible seed Frobenius number, `⌊(f - 2)/9⌋`.
    pub t_max: u64,
}

impl EvenBounds {
    /// Largest `d` with `d²·t + d - 1 ≤ f`, i.e.
    /// `⌊(-1 + √(4ft + 4t + 1)) / 2t⌋`.
    pub fn d_max(&self, t: u64) -> u64 {
        let t = t as u128;
        let disc = 4 * self.f as u128 * t + 4 * t + 1;
        ((disc.isqrt() - 1) / (2 * t)) as u64
    }

    /// `γ = (f - d·t)/(d - 1)` when it is a positive integer.
    pub fn gamma(&self, t: u64, d: u64) -> Option<u64> {
        let dt = d.checked_mul(t)?;
        let rest = self.f.checked_sub(dt)?;
        (d >= 2 && rest % (d - 1) == 0 && rest > 0).then(|| rest / (d - 1))
    }
}

pub fn even_bounds(f: u64) -> Result<EvenBounds> {
    if !f.is_multiple_of(2) || f < 2 {
        return Err(Error::BadInput(format!(
            "expected an even number >= 2, got {f}"
        )));
    }
    Ok(EvenBounds {
        f,
        t_max: (f - 2) / 9,
    })
}

/// A GSI gluing realizing an even Frobenius number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenWitness {
    /// Frobenius number of the seed.
    pub t: u64,
    pub d: u64,
    pub gamma: u64,
    pub spec: GluingSpec,
}

/// First GSI gluing with Frobenius number `f`, or `None`.
///
/// Searches seeds with `F(S) ∈ {2, 4, 6, 8}` first, then `S_t` for even
/// `t ≥ 10`; within each phase in ascending `t`, then ascending odd `d`,
/// then seed order.
pub fn find_gsi_with_even_frobenius(f: u64) -> Result<Option<GluingSpec>> {
    Ok(search(f, true)?.into_iter().next().map(|w| w.spec))
}

/// Every witness the search visits for `f`, in search order.
pub fn all_even_witnesses(f: u64) -> Result<Vec<EvenWitness>> {
    search(f, false)
}

fn search(f: u64, first_only: bool) -> Result<Vec<EvenWitness>> {
    let bounds = even_bounds(f)?;
    let mut found = Vec::new();
    if f < FIRST_EVEN {
        return Ok(found);
    }
    let bank = SeedBank::get();
    for t in (2..=bounds.t_max).step_by(2) {
        // S_t is built only once a (d, γ) pair survives, since M(S_t) = t - 1
        let seeds = bank.small(t);
        let mut family: Option<NumericalSemigroup> = None;
        for d in (3..=bounds.d_max(t)).step_by(2) {
            let Some(gamma) = bounds.gamma(t, d) else {
                continue;
            };
            if gcd(d, gamma) != 1 {
                continue;
            }
            match seeds {
                Some(seeds) => {
                    for seed in seeds {
                        if gamma <= (d * t).max(d * seed.max_generator()) {
                            continue;
                        }
                        found.push(witness(seed.clone(), t, d, gamma)?);
                        if first_only {
                            return Ok(found);
                        }
                    }
                }
                None => {
                    if gamma <= d * t {
                        continue;
                    }
                    let seed = match &family {
                        Some(seed) => seed.clone(),
                        None => family.insert(s_family(t)?).clone(),
                    };
                    found.push(witness(seed, t, d, gamma)?);
                    if first_only {
                        return Ok(found);
                    }
                }
            }
        }
    }
    Ok(found)
}

fn witness(seed: NumericalSemigroup, t: u64, d: u64, gamma: u64) -> Result<EvenWitness> {
    let spec = GluingSpec::new(seed, d, gamma)?;
    debug_assert!(spec.is_gsi());
    Ok(EvenWitness { t, d, gamma, spec })
}

/// Even Frobenius numbers `≤ bound` of GSI gluings `S ⊕_{d,γ} ℕ` with
/// `F(S) = t` and `d` odd, over the seeds of `t`.
pub fn reachable_from_class(t: u64, bound: u64) -> Result<BTreeSet<u64>> {
    let m = SeedBank::get().least_max_generator(t)?;
    let mut out = BTreeSet::new();
    let mut d = 3;
    // smallest value for this d uses γ = d·max(t, m) + 1
    while d * t + (d - 1) * (d * t.max(m) + 1) <= bound {
        out.extend(frobenius_values(t, m, d, bound));
        d += 2;
    }
    Ok(out)
}

/// `d·t + (d - 1)·γ ≤ bound` over `γ > max{d·t, d·m}` coprime to `d`.
fn frobenius_values(t: u64, m: u64, d: u64, bound: u64) -> impl Iterator<Item = u64> {
    let start = d * t.max(m) + 1;
    (start..)
        .map(move |gamma| (gamma, d * t + (d - 1) * gamma))
        .take_while(move |&(_, f)| f <= bound)
        .filter(move |&(gamma, _)| gcd(gamma, d) == 1)
        .map(|(_, f)| f)
}

/// Frobenius numbers of `seed ⊕_{d,γ} ℕ` for `bound ≥ F ≥` its minimum,
/// with `d` fixed.
pub fn seed_scan(seed: &NumericalSemigroup, d: u64, bound: u64) -> Result<Vec<u64>> {
    if d < 2 {
        return Err(Error::BadFactor(d));
    }
    let t = u64::try_from(seed.frobenius())
        .map_err(|_| Error::BadInput("seed must not be ℕ".into()))?;
    Ok(frobenius_values(t, seed.max_generator(), d, bound).collect())
}

/// Row of a γ table: `None` when `gcd(d, γ) ≠ 1`, otherwise the Frobenius
/// number of the gluing.
pub fn gamma_row(
    seed: &NumericalSemigroup,
    d: u64,
    gammas: impl IntoIterator<Item = u64>,
) -> Vec<(u64, Option<i64>)> {
    gammas
        .into_iter()
        .map(|gamma| {
            let f = (gcd(d, gamma) == 1)
                .then(|| d as i64 * seed.frobenius() + (d as i64 - 1) * gamma as i64);
            (gamma, f)
        })
        .collect()
}

/// Every even `f ≤ bound` for which [`find_gsi_with_even_frobenius`]
/// succeeds, generated forward from the seeds rather than by searching each
/// `f`.
pub fn realizable_even_scan(bound: u64) -> Result<Vec<u64>> {
    realizable_even_scan_with_jobs(bound, 1)
}

pub fn realizable_even_scan_with_jobs(bound: u64, jobs: usize) -> Result<Vec<u64>> {
    if bound < FIRST_EVEN {
        return Ok(Vec::new());
    }
    let classes: Vec<u64> = (2..=(bound - 2) / 9).step_by(2).collect();
    let run = |t: &u64| reachable_from_class(*t, bound);
    let sets: Vec<BTreeSet<u64>> = if jobs <= 1 {
        classes.iter().map(run).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::BadInput(e.to_string()))?;
        pool.install(|| classes.par_iter().map(run).collect::<Result<_>>())?
    };
    let all: BTreeSet<u64> = sets.into_iter().flatten().collect();
    Ok(all.into_iter().collect())
}

/// Search outcome for every even `f` in `[2, bound]`, in increasing `f`.
/// Parallel over `f` when `jobs > 1`; the output does not depend on `jobs`.
pub fn scan_witnesses(bound: u64, jobs: usize) -> Result<Vec<(u64, Option<GluingSpec>)>> {
    let evens: Vec<u64> = (2..=bound).step_by(2).collect();
    let run = |f: &u64| find_gsi_with_even_frobenius(*f).map(|w| (*f, w));
    if jobs <= 1 {
        return evens.iter().map(run).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::BadInput(e.to_string()))?;
    pool.install(|| evens.par_iter().map(run).collect())
}

/// Evens `≤ bound` reachable from class `target` but from none of the
/// classes in `excluded`.
pub fn exclusive_to_class(target: u64, excluded: &[u64], bound: u64) -> Result<Vec<u64>> {
    let mut covered = BTreeSet::new();
    for &t in excluded {
        covered.extend(reachable_from_class(t, bound)?);
    }
    Ok(reachable_from_class(target, bound)?
        .difference(&covered)
        .copied()
        .collect())
}

/// γ floor used by [`constant_floor_listing`]: a per-class constant for
/// `t ∈ {2, 4, 6, 8}` (`5t`, `7t`, `7t`, `9t`), `d·t` otherwise.
pub fn constant_floor(t: u64, d: u64) -> u64 {
    match t {
        2 => 10,
        4 => 28,
        6 => 42,
        8 => 72,
        _ => d * t,
    }
}

/// Values `d·t + (d - 1)·γ < bound` for odd `d` in `[3, d_limit]` and
/// `γ > constant_floor(t, d)` coprime to `d`.
///
/// Unlike [`reachable_from_class`], the γ floor here does not grow with `d`
/// for the small classes, so for large `d` it lists values of gluings that
/// fail the GSI inequality. It reproduces the output of the scan script
/// that uses those constants.
pub fn constant_floor_listing(t: u64, d_limit: u64, bound: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for d in (3..=d_limit).step_by(2) {
        let start = constant_floor(t, d) + 1;
        for gamma in start..bound {
            let f = d * t + (d - 1) * gamma;
            if f >= bound {
                break;
            }
            if gcd(gamma, d) == 1 {
                out.insert(f);
            }
        }
    }
    out
}

/// Evens in `[2, bound - 2]` listed for class `target` by
/// [`constant_floor_listing`] and by none of `excluded`, with odd `d` up to
/// `bound / 2`.
pub fn constant_floor_exclusive(target: u64, excluded: &[u64], bound: u64) -> Vec<u64> {
    let d_limit = 2 * ((bound / 2 - 1) / 2) + 1;
    let mut covered = BTreeSet::new();
    for &t in excluded {
        covered.extend(constant_floor_listing(t, d_limit, bound));
    }
    constant_floor_listing(target, d_limit, bound)
        .into_iter()
        .filter(|f| (2..=bound - 2).contains(f) && !covered.contains(f))
        .collect()
}
