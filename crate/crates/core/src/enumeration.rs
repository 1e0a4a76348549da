//! Enumeration of numerical semigroups by Frobenius number, and the
//! catalog of all GSI semigroups up to a Frobenius bound.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::gluing::{glue_spec, gsi_frobenius, GluingSpec};
use crate::semigroup::NumericalSemigroup;

/// Largest Frobenius number the exhaustive enumeration accepts.
pub const MAX_ENUMERATED_FROBENIUS: i64 = 126;

/// Calls `visit` once for every numerical semigroup with Frobenius number
/// `k`, in depth-first order.
///
/// Membership of `1..k` is decided in ascending order. `sums` tracks every
/// sum of two chosen elements up to `k`: such a sum must itself be chosen,
/// and no sum may equal `k`.
pub fn for_each_with_frobenius(k: i64, mut visit: impl FnMut(NumericalSemigroup)) -> Result<()> {
    match k {
        -1 => {
            visit(NumericalSemigroup::naturals());
            Ok(())
        }
        k if k == 0 || k < -1 => Err(Error::BadFrobenius(k)),
        k if k > MAX_ENUMERATED_FROBENIUS => Err(Error::BadInput(format!(
            "Frobenius number {k} is beyond exhaustive enumeration (max {MAX_ENUMERATED_FROBENIUS})"
        ))),
        k => {
            let k = k as u32;
            let mask = (1u128 << (k + 1)) - 1;
            dfs(k, 1, 0, 0, mask, &mut visit);
            Ok(())
        }
    }
}

fn dfs(
    k: u32,
    x: u32,
    members: u128,
    sums: u128,
    mask: u128,
    visit: &mut impl FnMut(NumericalSemigroup),
) {
    if x == k {
        let table: Vec<bool> = (0..=k + 1)
            .map(|n| n == 0 || n == k + 1 || (n < k && members >> n & 1 == 1))
            .collect();
        visit(NumericalSemigroup::from_table(table));
        return;
    }
    let forced = sums >> x & 1 == 1;
    let mut with_x = sums | (members << x);
    if 2 * x <= k {
        with_x |= 1 << (2 * x);
    }
    with_x &= mask;
    if with_x >> k & 1 == 0 {
        dfs(k, x + 1, members | 1 << x, with_x, mask, visit);
    }
    if !forced {
        dfs(k, x + 1, members, sums, mask, visit);
    }
}

/// Every numerical semigroup with Frobenius number `k`, sorted
/// lexicographically by minimal generators. `k = -1` gives `[ℕ]`.
pub fn semigroups_with_frobenius(k: i64) -> Result<Vec<NumericalSemigroup>> {
    let mut out = Vec::new();
    for_each_with_frobenius(k, |s| out.push(s))?;
    out.sort();
    Ok(out)
}

/// One GSI semigroup together with the gluing that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub semigroup: NumericalSemigroup,
    pub provenance: GluingSpec,
}

/// Flat record used for JSON-lines and CSV output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub frobenius: i64,
    pub gens: Vec<u64>,
    pub base_gens: Vec<u64>,
    pub d: u64,
    pub gamma: u64,
}

impl From<&CatalogEntry> for CatalogRecord {
    fn from(e: &CatalogEntry) -> Self {
        CatalogRecord {
            frobenius: e.semigroup.frobenius(),
            gens: e.semigroup.minimal_generators().to_vec(),
            base_gens: e.provenance.base().minimal_generators().to_vec(),
            d: e.provenance.d(),
            gamma: e.provenance.gamma(),
        }
    }
}

/// All GSI semigroups with Frobenius number at most `bound`, keyed by
/// Frobenius number. Every key in `1..=bound` is present; most even keys
/// map to an empty list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GsiCatalog {
    pub bound: i64,
    pub entries: BTreeMap<i64, Vec<CatalogEntry>>,
}

impl GsiCatalog {
    pub fn len(&self) -> usize {
        self.entries.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, frobenius: i64) -> &[CatalogEntry] {
        self.entries
            .get(&frobenius)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Entries in (Frobenius, generators) order.
    pub fn iter(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.values().flatten()
    }

    pub fn records(&self) -> Vec<CatalogRecord> {
        self.iter().map(CatalogRecord::from).collect()
    }

    pub fn contains_generators(&self, gens: &[u64]) -> bool {
        self.iter()
            .any(|e| e.semigroup.minimal_generators() == gens)
    }
}

/// Catalog of GSI semigroups with Frobenius number at most `f`,
/// single-threaded.
pub fn enumerate_gsi_up_to(f: i64) -> Result<GsiCatalog> {
    enumerate_gsi_up_to_with_jobs(f, 1)
}

/// Same catalog, with the `(k, S)` work items spread over `jobs` threads.
/// The result does not depend on `jobs`.
pub fn enumerate_gsi_up_to_with_jobs(f: i64, jobs: usize) -> Result<GsiCatalog> {
    if f < 1 {
        return Err(Error::BadInput(format!(
            "Frobenius bound must be positive, got {f}"
        )));
    }
    let mut bases = vec![NumericalSemigroup::naturals()];
    // d ≥ 2 and d²·F(S) ≤ f force 4·F(S) ≤ f.
    for k in 1..=f / 4 {
        bases.extend(semigroups_with_frobenius(k)?);
    }

    let found: Vec<Vec<CatalogEntry>> = if jobs <= 1 {
        bases
            .iter()
            .map(|s| gluings_of(s, f))
            .collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::BadInput(e.to_string()))?;
        pool.install(|| {
            bases
                .par_iter()
                .map(|s| gluings_of(s, f))
                .collect::<Result<_>>()
        })?
    };

    let mut entries: BTreeMap<i64, Vec<CatalogEntry>> = (1..=f).map(|k| (k, Vec::new())).collect();
    for entry in found.into_iter().flatten() {
        entries
            .entry(entry.semigroup.frobenius())
            .or_default()
            .push(entry);
    }
    for list in entries.values_mut() {
        list.sort_by(|a, b| a.semigroup.cmp(&b.semigroup));
        list.dedup_by(|a, b| a.semigroup == b.semigroup);
    }
    Ok(GsiCatalog { bound: f, entries })
}

/// GSI gluings `base ⊕_{d,γ} ℕ` with Frobenius number at most `f`, in
/// increasing `(d, γ)` order.
fn gluings_of(base: &NumericalSemigroup, f: i64) -> Result<Vec<CatalogEntry>> {
    let fs = base.frobenius();
    let m = base.max_generator() as i64;
    let mut out = Vec::new();
    let mut d: i64 = 2;
    loop {
        let feasible = if fs == -1 {
            // smallest gluing of ℕ along d is ⟨d, d+1⟩ with F = d² - d - 1
            d * d - d - 1 <= f
        } else {
            d * d * fs <= f
        };
        if !feasible {
            break;
        }
        let mut gamma = (d * fs).max(d * m) + 1;
        while d * fs + (d - 1) * gamma <= f {
            if gcd(gamma as u64, d as u64) == 1 {
                let spec = GluingSpec::new(base.clone(), d as u64, gamma as u64)?;
                let semigroup = glue_spec(&spec)?;
                debug_assert_eq!(Ok(semigroup.frobenius()), gsi_frobenius(&spec));
                out.push(CatalogEntry {
                    semigroup,
                    provenance: spec,
                });
            }
            gamma += 1;
        }
        d += 1;
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogStats {
    pub total: usize,
    pub even_total: usize,
    pub per_frobenius: BTreeMap<i64, usize>,
    pub per_embedding_dimension: BTreeMap<usize, usize>,
}

pub fn catalog_stats(c: &GsiCatalog) -> CatalogStats {
    let mut stats = CatalogStats::default();
    for (&k, list) in &c.entries {
        stats.per_frobenius.insert(k, list.len());
        stats.total += list.len();
        if k % 2 == 0 {
            stats.even_total += list.len();
        }
        for e in list {
            *stats
                .per_embedding_dimension
                .entry(e.semigroup.embedding_dimension())
                .or_default() += 1;
        }
    }
    stats
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens_of(list: &[NumericalSemigroup]) -> Vec<Vec<u64>> {
        list.iter()
            .map(|s| s.minimal_generators().to_vec())
            .collect()
    }

    #[test]
    fn small_frobenius_classes() {
        assert_eq!(
            gens_of(&semigroups_with_frobenius(2).unwrap()),
            vec![vec![3, 4, 5]]
        );
        assert_eq!(
            gens_of(&semigroups_with_frobenius(4).unwrap()),
            vec![vec![3, 5, 7], vec![5, 6, 7, 8, 9]]
        );
        assert_eq!(semigroups_with_frobenius(6).unwrap().len(), 4);
        assert_eq!(semigroups_with_frobenius(8).unwrap().len(), 10);
        assert_eq!(
            gens_of(&semigroups_with_frobenius(1).unwrap()),
            vec![vec![2, 3]]
        );
        assert_eq!(
            gens_of(&semigroups_with_frobenius(-1).unwrap()),
            vec![vec![1]]
        );
    }

    #[test]
    fn frobenius_class_errors() {
        assert_eq!(semigroups_with_frobenius(0), Err(Error::BadFrobenius(0)));
        assert_eq!(semigroups_with_frobenius(-2), Err(Error::BadFrobenius(-2)));
        assert!(matches!(
            semigroups_with_frobenius(500),
            Err(Error::BadInput(_))
        ));
    }

    #[test]
    fn members_have_the_requested_frobenius() {
        for k in 1..=16 {
            let list = semigroups_with_frobenius(k).unwrap();
            assert!(!list.is_empty());
            assert!(list.iter().all(|s| s.frobenius() == k));
            assert!(list.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn catalog_up_to_one() {
        let c = enumerate_gsi_up_to(1).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.get(1)[0].semigroup.minimal_generators(), &[2, 3]);
        assert_eq!(catalog_stats(&c).total, 1);
    }

    #[test]
    fn catalog_rejects_nonpositive_bound() {
        assert!(matches!(enumerate_gsi_up_to(0), Err(Error::BadInput(_))));
    }

    #[test]
    fn stats_for_fifteen() {
        let c = enumerate_gsi_up_to(15).unwrap();
        let stats = catalog_stats(&c);
        // 1 + 1 + 2 + 2 + 2 + 4 + 3 + 3 over the odd keys
        assert_eq!(stats.total, 18);
        assert_eq!(stats.even_total, 0);
        assert_eq!(stats.per_embedding_dimension[&2], 13);
        assert_eq!(stats.per_embedding_dimension[&3], 4);
        assert_eq!(stats.per_embedding_dimension[&4], 1);
    }

    #[test]
    fn jobs_do_not_change_the_catalog() {
        assert_eq!(
            enumerate_gsi_up_to_with_jobs(30, 1).unwrap(),
            enumerate_gsi_up_to_with_jobs(30, 4).unwrap()
        );
    }
}
