//! Numerical semigroups built by gluing with ℕ.
//!
//! The crate covers generalized strongly increasing (GSI) semigroups
//! `S ⊕_{d,γ} ℕ`: their recognition next to the SI, telescopic, free and
//! complete-intersection families, the explicit description of their gaps,
//! the catalog of all GSI semigroups up to a Frobenius bound, and the
//! search for GSI semigroups with a prescribed even Frobenius number.

pub mod arith;
pub mod classification;
pub mod enumeration;
pub mod error;
pub mod even;
pub mod gluing;
pub mod semigroup;

pub use classification::{
    classify, is_complete_intersection, is_free, is_gsi, is_si_by_gluing, is_strongly_increasing,
    is_telescopic, reorder_characteristic, CharacteristicSequenceReport, ClassificationReport,
};
pub use enumeration::{
    catalog_stats, enumerate_gsi_up_to, enumerate_gsi_up_to_with_jobs, for_each_with_frobenius,
    semigroups_with_frobenius, CatalogEntry, CatalogRecord, CatalogStats, GsiCatalog,
};
pub use error::{Error, Result};
pub use even::{
    all_even_witnesses, constant_floor_exclusive, even_bounds, exclusive_to_class,
    find_gsi_with_even_frobenius, realizable_even_scan, realizable_even_scan_with_jobs, s_family,
    scan_witnesses, EvenBounds, EvenWitness, SeedBank,
};
pub use gluing::{
    glue, glue_spec, gsi_frobenius, gsi_gaps, gsi_genus, validate_gsi, GluingSpec, GsiGapPartition,
};
pub use semigroup::{frobenius_two_generators, parse_generators, NumericalSemigroup};
