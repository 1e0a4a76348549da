mod common;

use common::{brute_force_small_sets, generators_from_small};
use gsi_core::{
    catalog_stats, enumerate_gsi_up_to, enumerate_gsi_up_to_with_jobs, for_each_with_frobenius,
    glue_spec, is_gsi, semigroups_with_frobenius, Error, GsiCatalog,
};

#[test]
fn counts_match_subset_search() {
    for k in 1..=18 {
        let mut expected: Vec<Vec<u64>> = brute_force_small_sets(k as u64)
            .iter()
            .map(|small| generators_from_small(small, k as u64))
            .collect();
        expected.sort();
        let found: Vec<Vec<u64>> = semigroups_with_frobenius(k)
            .unwrap()
            .iter()
            .map(|s| s.minimal_generators().to_vec())
            .collect();
        assert_eq!(found, expected, "F = {k}");
        assert!(semigroups_with_frobenius(k)
            .unwrap()
            .iter()
            .all(|s| s.frobenius() == k));
    }
}

#[test]
fn visitor_and_list_agree() {
    let mut seen = 0;
    for_each_with_frobenius(21, |s| {
        assert_eq!(s.frobenius(), 21);
        seen += 1;
    })
    .unwrap();
    assert_eq!(seen, semigroups_with_frobenius(21).unwrap().len());
}

#[test]
fn seed_sets() {
    let lists = |k| -> Vec<Vec<u64>> {
        semigroups_with_frobenius(k)
            .unwrap()
            .iter()
            .map(|s| s.minimal_generators().to_vec())
            .collect()
    };
    assert_eq!(lists(2), vec![vec![3, 4, 5]]);
    assert_eq!(lists(4), vec![vec![3, 5, 7], vec![5, 6, 7, 8, 9]]);
    assert_eq!(
        lists(6),
        vec![
            vec![4, 5, 7],
            vec![4, 7, 9, 10],
            vec![5, 7, 8, 9, 11],
            (7..=13).collect()
        ]
    );
    assert_eq!(
        lists(8),
        vec![
            vec![3, 7, 11],
            vec![3, 10, 11],
            vec![5, 6, 7, 9],
            vec![5, 6, 9, 13],
            vec![5, 7, 9, 11, 13],
            vec![5, 9, 11, 12, 13],
            vec![6, 7, 9, 10, 11],
            vec![6, 9, 10, 11, 13, 14],
            vec![7, 9, 10, 11, 12, 13, 15],
            (9..=17).collect(),
        ]
    );
}

#[test]
fn bad_frobenius_arguments() {
    assert_eq!(semigroups_with_frobenius(-1).unwrap().len(), 1);
    assert_eq!(semigroups_with_frobenius(0), Err(Error::BadFrobenius(0)));
    assert!(semigroups_with_frobenius(-4).is_err());
    assert!(enumerate_gsi_up_to(0).is_err());
}

fn exhaustive_gsi(f: i64) -> Vec<(i64, Vec<u64>)> {
    let mut out = Vec::new();
    for k in 1..=f {
        for s in semigroups_with_frobenius(k).unwrap() {
            if is_gsi(&s).0 {
                out.push((k, s.minimal_generators().to_vec()));
            }
        }
    }
    out
}

fn flat(c: &GsiCatalog) -> Vec<(i64, Vec<u64>)> {
    c.iter()
        .map(|e| {
            (
                e.semigroup.frobenius(),
                e.semigroup.minimal_generators().to_vec(),
            )
        })
        .collect()
}

#[test]
fn catalog_is_exhaustive() {
    let catalog = enumerate_gsi_up_to(24).unwrap();
    assert_eq!(flat(&catalog), exhaustive_gsi(24));
    assert_eq!(
        catalog.entries.keys().copied().collect::<Vec<_>>(),
        (1..=24).collect::<Vec<_>>()
    );
}

#[test]
fn catalog_provenance() {
    let catalog = enumerate_gsi_up_to(40).unwrap();
    for (&k, list) in &catalog.entries {
        for e in list {
            assert_eq!(e.semigroup.frobenius(), k);
            assert!(e.provenance.is_gsi());
            assert_eq!(glue_spec(&e.provenance).unwrap(), e.semigroup);
            assert!(catalog.contains_generators(e.semigroup.minimal_generators()));
        }
        if k % 2 == 0 && k < 38 {
            assert!(list.is_empty(), "F = {k}");
        }
    }
    assert!(catalog.contains_generators(&[9, 12, 15, 16]));
    assert_eq!(catalog.get(38).len(), 1);
    let stats = catalog_stats(&catalog);
    assert_eq!(stats.total, catalog.len());
    assert_eq!(stats.even_total, 2);
    assert_eq!(stats.per_frobenius.values().sum::<usize>(), stats.total);
}

#[test]
fn catalog_records_round_trip() {
    let catalog = enumerate_gsi_up_to(15).unwrap();
    let text = serde_json::to_string(&catalog.records()).unwrap();
    let back: Vec<gsi_core::CatalogRecord> = serde_json::from_str(&text).unwrap();
    assert_eq!(back, catalog.records());
    assert_eq!(back.len(), 18);
}

#[test]
fn parallel_enumeration_is_deterministic() {
    let serial = enumerate_gsi_up_to_with_jobs(45, 1).unwrap();
    for jobs in [2, 3, 8] {
        assert_eq!(
            flat(&enumerate_gsi_up_to_with_jobs(45, jobs).unwrap()),
            flat(&serial)
        );
    }
}
