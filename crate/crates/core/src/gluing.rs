//! Gluings `S ⊕_{d,γ} ℕ` and the gap structure of GSI semigroups.
//!
//! The gluing of `S = ⟨v_0, …, v_h⟩` with ℕ along `d` and `γ`
//! (`gcd(d, γ) = 1`) is `⟨d·v_0, …, d·v_h, γ⟩`. It is a GSI semigroup when
//! `d ≥ 2` and `γ > max{d·F(S), d·M(S)}`. For those, the gaps split into
//! four disjoint families that can be written down without a sieve; see
//! [`gsi_gaps`].

use serde::{Deserialize, Serialize};

use crate::arith::{checked_mul, gcd};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// A gluing triple `(S, d, γ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GluingSpec {
    base: NumericalSemigroup,
    d: u64,
    gamma: u64,
    is_gsi: bool,
}

impl GluingSpec {
    /// Checks the gluing requirements (`d ≥ 2`, `γ ≥ 2`, `gcd(d, γ) = 1`)
    /// and records whether the GSI inequality holds.
    pub fn new(base: NumericalSemigroup, d: u64, gamma: u64) -> Result<Self> {
        if d < 2 {
            return Err(Error::BadFactor(d));
        }
        if gamma < 2 {
            return Err(Error::BadInput(format!("γ = {gamma} must be at least 2")));
        }
        if gcd(d, gamma) != 1 {
            return Err(Error::NotCoprime(d, gamma));
        }
        let is_gsi = gsi_inequality(&base, d, gamma);
        Ok(GluingSpec {
            base,
            d,
            gamma,
            is_gsi,
        })
    }

    pub fn base(&self) -> &NumericalSemigroup {
        &self.base
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn gamma(&self) -> u64 {
        self.gamma
    }

    pub fn is_gsi(&self) -> bool {
        self.is_gsi
    }

    /// `max{d·F(S), d·M(S)}`, the value γ has to exceed.
    pub fn gamma_floor(&self) -> i128 {
        gamma_floor(&self.base, self.d)
    }

    /// Generators `d·gens(S) ∪ {γ}` of the glued semigroup, in increasing
    /// order when the spec is GSI.
    pub fn glued_generators(&self) -> Result<Vec<u64>> {
        let mut gens = self
            .base
            .minimal_generators()
            .iter()
            .map(|&v| checked_mul(self.d, v))
            .collect::<Result<Vec<_>>>()?;
        gens.push(self.gamma);
        Ok(gens)
    }

    /// Names the violated inequality, or `None` when the spec is GSI.
    pub fn violation(&self) -> Option<String> {
        if self.is_gsi {
            return None;
        }
        let b = &self.base;
        let (df, dm) = (
            self.d as i128 * b.frobenius() as i128,
            self.d as i128 * b.max_generator() as i128,
        );
        Some(format!(
            "γ = {} must exceed max{{d·F(S), d·M(S)}} = max{{{df}, {dm}}} = {}",
            self.gamma,
            df.max(dm)
        ))
    }

    fn require_gsi(&self) -> Result<()> {
        match self.violation() {
            None => Ok(()),
            Some(msg) => Err(Error::NotGsi(msg)),
        }
    }
}

fn gamma_floor(base: &NumericalSemigroup, d: u64) -> i128 {
    let d = d as i128;
    (d * base.frobenius() as i128).max(d * base.max_generator() as i128)
}

fn gsi_inequality(base: &NumericalSemigroup, d: u64, gamma: u64) -> bool {
    d >= 2 && gamma as i128 > gamma_floor(base, d)
}

/// `S ⊕_{d,γ} ℕ = ⟨d·gens(S) ∪ {γ}⟩`.
pub fn glue(base: &NumericalSemigroup, d: u64, gamma: u64) -> Result<NumericalSemigroup> {
    let spec = GluingSpec::new(base.clone(), d, gamma)?;
    glue_spec(&spec)
}

pub fn glue_spec(spec: &GluingSpec) -> Result<NumericalSemigroup> {
    NumericalSemigroup::from_generators(&spec.glued_generators()?)
}

/// True iff `d ≥ 2` and `γ > max{d·F(S), d·M(S)}`.
pub fn validate_gsi(spec: &GluingSpec) -> bool {
    gsi_inequality(&spec.base, spec.d, spec.gamma)
}

/// The gap partition of a GSI semigroup `S ⊕_{d,γ} ℕ`.
///
/// `initial` is the interval `[1, d·m(S) - 1]`, `middle` the gaps strictly
/// between `d·m(S)` and `γ`, `a_blocks[k - 1] = d·gaps(S) + kγ` for
/// `k = 1..d-1`, and `b_blocks[ℓ - 1]` holds the `⌊ℓγ/d⌋` gaps
/// `γ + (ℓγ mod d) + jd` for `ℓ = 1..d-2`. Absent families are empty
/// vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GsiGapPartition {
    pub initial: [u64; 2],
    pub middle: Vec<u64>,
    #[serde(rename = "A")]
    pub a_blocks: Vec<Vec<u64>>,
    #[serde(rename = "B")]
    pub b_blocks: Vec<Vec<u64>>,
}

impl GsiGapPartition {
    pub fn initial_len(&self) -> u64 {
        self.initial[1] + 1 - self.initial[0]
    }

    pub fn len(&self) -> usize {
        self.initial_len() as usize
            + self.middle.len()
            + self.a_blocks.iter().map(Vec::len).sum::<usize>()
            + self.b_blocks.iter().map(Vec::len).sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All gaps, sorted.
    pub fn flatten(&self) -> Vec<u64> {
        let mut all: Vec<u64> = (self.initial[0]..=self.initial[1]).collect();
        all.extend_from_slice(&self.middle);
        all.extend(self.a_blocks.iter().flatten());
        all.extend(self.b_blocks.iter().flatten());
        all.sort_unstable();
        all
    }
}

pub fn gsi_gaps(spec: &GluingSpec) -> Result<GsiGapPartition> {
    spec.require_gsi()?;
    let (base, d, gamma) = (&spec.base, spec.d, spec.gamma);
    let low = checked_mul(d, base.multiplicity())?;

    let middle = (low + 1..gamma)
        .filter(|&x| x % d != 0 || !base.contains((x / d) as i64))
        .collect();

    let a_blocks = if base.is_naturals() {
        Vec::new()
    } else {
        let gaps = base.gaps();
        (1..d)
            .map(|k| {
                gaps.iter()
                    .map(|&g| {
                        let shift = checked_mul(k, gamma)?;
                        checked_mul(d, g)?.checked_add(shift).ok_or(Error::Overflow)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?
    };

    let b_blocks = (1..d.saturating_sub(1))
        .map(|l| {
            let lg = checked_mul(l, gamma)?;
            let start = gamma + lg % d;
            Ok((0..lg / d).map(|j| start + j * d).collect())
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(GsiGapPartition {
        initial: [1, low - 1],
        middle,
        a_blocks,
        b_blocks,
    })
}

/// `F(S ⊕_{d,γ} ℕ) = d·F(S) + (d - 1)·γ`.
pub fn gsi_frobenius(spec: &GluingSpec) -> Result<i64> {
    spec.require_gsi()?;
    let value =
        spec.d as i128 * spec.base.frobenius() as i128 + (spec.d as i128 - 1) * spec.gamma as i128;
    i64::try_from(value).map_err(|_| Error::Overflow)
}

/// Genus of `S ⊕_{d,γ} ℕ`, counted part by part from the gap partition
/// without materializing the `A` and `B` families.
pub fn gsi_genus(spec: &GluingSpec) -> Result<u64> {
    spec.require_gsi()?;
    let (base, d, gamma) = (&spec.base, spec.d as u128, spec.gamma as u128);
    let low = d * base.multiplicity() as u128;
    let initial = low - 1;
    // Multiples d·s in (low, γ) with s ∈ S.
    let members_between = (base.multiplicity() as u128 + 1..)
        .take_while(|s| d * s < gamma)
        .filter(|&s| base.contains(s as i64))
        .count() as u128;
    let middle = gamma.saturating_sub(low + 1) - members_between;
    let a = (d - 1) * base.genus() as u128;
    let b: u128 = (1..d.saturating_sub(1)).map(|l| l * gamma / d).sum();
    u64::try_from(initial + middle + a + b).map_err(|_| Error::Overflow)
}
