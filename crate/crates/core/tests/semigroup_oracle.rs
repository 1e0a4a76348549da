mod common;

use common::{gcd, naive, reach};
use gsi_core::{frobenius_two_generators, Error, NumericalSemigroup};
use proptest::prelude::*;

#[test]
fn two_generator_closed_forms_match_sieve() {
    for a in 2..=30u64 {
        for b in a + 1..=30 {
            if gcd(a, b) != 1 {
                continue;
            }
            let s = NumericalSemigroup::from_generators(&[a, b]).unwrap();
            let reference = naive(&[a, b]);
            assert_eq!(s.frobenius(), reference.frobenius, "⟨{a},{b}⟩");
            assert_eq!(s.frobenius(), (a * b - a - b) as i64);
            assert_eq!(frobenius_two_generators(a, b).unwrap(), a * b - a - b);
            assert_eq!(s.genus(), (a - 1) * (b - 1) / 2);
            assert_eq!(s.genus() as usize, reference.gaps.len());
        }
    }
}

#[test]
fn non_numerical_inputs_are_rejected() {
    assert_eq!(
        NumericalSemigroup::from_generators(&[4, 6, 10]),
        Err(Error::NotNumerical(2))
    );
    assert!(NumericalSemigroup::from_generators(&[]).is_err());
    assert!(NumericalSemigroup::from_generators(&[0, 3]).is_err());
    assert!(frobenius_two_generators(6, 9).is_err());
}

#[test]
fn apery_sets_of_small_semigroups() {
    // every semigroup with generators drawn from [2, 9] with gcd 1
    for mask in 1u32..(1 << 8) {
        let gens: Vec<u64> = (0..8)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| i + 2)
            .collect();
        if gens.iter().fold(0, |g, &x| gcd(g, x)) != 1 {
            continue;
        }
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        check_apery(&s);
    }
}

fn check_apery(s: &NumericalSemigroup) {
    let m = s.multiplicity();
    let member = reach(s.minimal_generators(), (s.conductor() + 4 * m * m) as usize);
    for n in s
        .minimal_generators()
        .iter()
        .copied()
        .chain([m + s.conductor()])
    {
        if !s.contains(n as i64) {
            continue;
        }
        let ap = s.apery_set(n).unwrap();
        assert_eq!(ap.len() as u64, n);
        // each element is the least member of its residue class
        for (i, &w) in ap.iter().enumerate() {
            assert_eq!(w % n, i as u64);
            assert!(member[w as usize]);
            assert!(w < n || !member[(w - n) as usize]);
        }
        let max = *ap.iter().max().unwrap() as i64;
        assert_eq!(s.frobenius(), max - n as i64, "{s} n={n}");
        let sum: u64 = ap.iter().sum();
        // Selmer: genus = (Σ w)/n - (n - 1)/2
        assert_eq!(2 * sum, n * (2 * s.genus() + n - 1), "{s} n={n}");
    }
}

#[test]
fn membership_outside_the_table() {
    let s = NumericalSemigroup::from_generators(&[5, 7]).unwrap();
    assert!(s.contains(0));
    assert!(!s.contains(-3));
    assert!(s.contains(1_000_000));
    assert!(!s.contains(23));
    assert!(s.contains(24));
    assert_eq!(s.apery_set(3), Err(Error::NotMember(3)));
}

#[test]
fn naturals_corner_case() {
    let n = NumericalSemigroup::from_generators(&[1, 5]).unwrap();
    assert!(n.is_naturals());
    assert_eq!(n, NumericalSemigroup::naturals());
    assert_eq!(n.frobenius(), -1);
    assert_eq!(n.genus(), 0);
    assert_eq!(n.conductor(), 0);
    assert_eq!(n.minimal_generators(), &[1]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn invariants_match_naive(mut gens in prop::collection::vec(2u64..40, 1..6)) {
        let g = gens.iter().fold(0, |g, &x| gcd(g, x));
        if g != 1 {
            gens.push(gens[0] + 1);
        }
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let reference = naive(&gens);
        prop_assert_eq!(s.frobenius(), reference.frobenius);
        prop_assert_eq!(s.gaps(), reference.gaps.clone());
        prop_assert_eq!(s.genus() as usize, reference.gaps.len());
        prop_assert_eq!(s.minimal_generators(), &reference.minimal[..]);
        prop_assert_eq!(s.conductor() as i64, s.frobenius() + 1);
        prop_assert_eq!(s.multiplicity(), reference.minimal[0]);
        prop_assert!(2 * s.genus() >= s.conductor());
    }

    #[test]
    fn minimal_generators_are_canonical(gens in prop::collection::vec(2u64..30, 2..6), extra in 0usize..4) {
        prop_assume!(gens.iter().fold(0, |g, &x| gcd(g, x)) == 1);
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let mut noisy = gens.clone();
        // add redundant elements: sums of pairs and multiples
        for i in 0..extra {
            noisy.push(gens[i % gens.len()] + gens[(i + 1) % gens.len()]);
            noisy.push(gens[i % gens.len()] * 3);
        }
        noisy.reverse();
        let t = NumericalSemigroup::from_generators(&noisy).unwrap();
        prop_assert_eq!(&s, &t);
        let again = NumericalSemigroup::from_generators(s.minimal_generators()).unwrap();
        prop_assert_eq!(&s, &again);
    }

    #[test]
    fn serde_round_trip(gens in prop::collection::vec(2u64..25, 2..5)) {
        prop_assume!(gens.iter().fold(0, |g, &x| gcd(g, x)) == 1);
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        let back: NumericalSemigroup = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(s, back);
    }
}
