//! Numerical semigroups given by generators.
//!
//! A [`NumericalSemigroup`] is stored in canonical form: its minimal
//! generating system together with a membership table covering `[0, c]`
//! where `c` is the conductor. Everything past the conductor is a member,
//! so the table answers every membership query.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, gcd_all};
use crate::error::{Error, Result};

/// Largest sieve length the constructors will allocate.
pub const MAX_SIEVE: u128 = 1 << 28;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "SemigroupRecord", try_from = "SemigroupRecord")]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    frobenius: i64,
    genus: u64,
    membership: Vec<bool>,
}

/// JSON shape of a semigroup. Only `gens` is read back; the invariants are
/// recomputed on ingestion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupRecord {
    pub gens: Vec<u64>,
    #[serde(default)]
    pub frobenius: i64,
    #[serde(default)]
    pub genus: u64,
    #[serde(default)]
    pub multiplicity: u64,
}

impl From<NumericalSemigroup> for SemigroupRecord {
    fn from(s: NumericalSemigroup) -> Self {
        SemigroupRecord {
            multiplicity: s.multiplicity(),
            frobenius: s.frobenius,
            genus: s.genus,
            gens: s.generators,
        }
    }
}

impl TryFrom<SemigroupRecord> for NumericalSemigroup {
    type Error = Error;

    fn try_from(r: SemigroupRecord) -> Result<Self> {
        NumericalSemigroup::from_generators(&r.gens)
    }
}

impl NumericalSemigroup {
    /// The semigroup of all nonnegative integers.
    pub fn naturals() -> Self {
        NumericalSemigroup {
            generators: vec![1],
            frobenius: -1,
            genus: 0,
            membership: vec![true],
        }
    }

    /// Canonical semigroup generated by `gens`, which may be unsorted,
    /// repeated or redundant.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() || gens.contains(&0) {
            return Err(Error::EmptyOrZero);
        }
        let g = gcd_all(gens);
        if g != 1 {
            return Err(Error::NotNumerical(g));
        }
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        if gens[0] == 1 {
            return Ok(Self::naturals());
        }

        let m = gens[0] as usize;
        let len = frobenius_upper_bound(&gens) + m as u128 + 1;
        let cap = len.min(MAX_SIEVE) as usize;
        // Sieve until the first run of m consecutive members, which starts
        // at the conductor.
        let mut table = Vec::with_capacity(cap.min(1 << 16));
        table.push(true);
        let mut run = 1;
        let mut conductor = None;
        while conductor.is_none() {
            let n = table.len();
            if n >= cap {
                return Err(Error::TooLarge(len));
            }
            let member = gens
                .iter()
                .take_while(|&&x| x as usize <= n)
                .any(|&x| table[n - x as usize]);
            table.push(member);
            run = if member { run + 1 } else { 0 };
            if run == m {
                conductor = Some(n + 1 - m);
            }
        }
        let conductor = conductor.expect("loop exits with a conductor");
        table.truncate(conductor + 1);
        Ok(Self::from_table(table))
    }

    /// Builds the canonical value from a membership table whose last entry
    /// is the conductor (`table[c]` true, `table[c - 1]` false unless
    /// `c = 0`).
    pub(crate) fn from_table(table: Vec<bool>) -> Self {
        debug_assert!(table[0] && *table.last().unwrap());
        let conductor = table.len() - 1;
        let frobenius = conductor as i64 - 1;
        let genus = table.iter().filter(|&&b| !b).count() as u64;
        let member = |n: usize| n >= conductor || table[n];

        let multiplicity = (1..).find(|&n| member(n)).unwrap();
        let top = (frobenius + multiplicity as i64).max(1) as usize;
        let mut generators: Vec<u64> = Vec::new();
        for s in 1..=top {
            if member(s) && !generators.iter().any(|&g| member(s - g as usize)) {
                generators.push(s as u64);
            }
        }
        NumericalSemigroup {
            generators,
            frobenius,
            genus,
            membership: table,
        }
    }

    pub fn minimal_generators(&self) -> &[u64] {
        &self.generators
    }

    /// F(S); -1 for the naturals.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> u64 {
        (self.frobenius + 1) as u64
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// M(S), the largest minimal generator.
    pub fn max_generator(&self) -> u64 {
        *self.generators.last().unwrap()
    }

    /// Membership table over `[0, conductor]`.
    pub fn membership(&self) -> &[bool] {
        &self.membership
    }

    pub fn is_naturals(&self) -> bool {
        self.frobenius == -1
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        if n > self.frobenius {
            return true;
        }
        self.membership[n as usize]
    }

    pub fn gaps(&self) -> Vec<u64> {
        self.membership
            .iter()
            .enumerate()
            .filter(|(_, &b)| !b)
            .map(|(n, _)| n as u64)
            .collect()
    }

    /// Elements of S below the conductor, in increasing order (0 included).
    pub fn small_elements(&self) -> Vec<u64> {
        self.membership
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(n, _)| n as u64)
            .collect()
    }

    /// Apéry set with respect to `n`: entry `i` is the least element of S
    /// congruent to `i` modulo `n`.
    pub fn apery_set(&self, n: u64) -> Result<Vec<u64>> {
        if n == 0 || n > i64::MAX as u64 || !self.contains(n as i64) {
            return Err(Error::NotMember(n.min(i64::MAX as u64) as i64));
        }
        Ok((0..n)
            .map(|i| {
                let mut s = i;
                while !self.contains(s as i64) {
                    s += n;
                }
                s
            })
            .collect())
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic by minimal generators.
impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.generators.cmp(&other.generators)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", angle_list(&self.generators))
    }
}

/// Renders `[a, b, c]` as `⟨a,b,c⟩`.
pub fn angle_list(values: &[u64]) -> String {
    let inner: Vec<String> = values.iter().map(u64::to_string).collect();
    format!("⟨{}⟩", inner.join(","))
}

/// Parses generators separated by commas and/or whitespace.
pub fn parse_generators(text: &str) -> Result<Vec<u64>> {
    let gens = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if gens.is_empty() {
        return Err(Error::EmptyOrZero);
    }
    Ok(gens)
}

/// Frobenius number of ⟨a, b⟩, i.e. ab - a - b.
pub fn frobenius_two_generators(a: u64, b: u64) -> Result<u64> {
    if a < 2 || b <= a {
        return Err(Error::BadInput(format!(
            "need 2 <= a < b, got a = {a}, b = {b}"
        )));
    }
    if gcd(a, b) != 1 {
        return Err(Error::NotCoprime(a, b));
    }
    let value = a as u128 * b as u128 - a as u128 - b as u128;
    u64::try_from(value).map_err(|_| Error::Overflow)
}

/// An upper bound for F(⟨gens⟩). `gens` is sorted, gcd 1, without 1.
///
/// Uses ab - a - b for the first coprime pair among the generators, and
/// (m - 1)(M - 1) - 1 when no pair is coprime.
fn frobenius_upper_bound(gens: &[u64]) -> u128 {
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            if gcd(a, b) == 1 {
                return a as u128 * b as u128 - a as u128 - b as u128;
            }
        }
    }
    let m = gens[0] as u128;
    let big = *gens.last().unwrap() as u128;
    (m - 1) * (big - 1) - 1
}
