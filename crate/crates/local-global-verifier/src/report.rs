//! Bulk cross-referencing of the admissibility class against the packing.
//!
//! Presence knowledge comes from two sources with different reach:
//!
//! * **exact**: orbit enumeration up to `exact_bound` decides presence *and
//!   absence* for every integer in range — the orbit tree holding all
//!   curvatures ≤ N grows like N^2.4, so this range is kept modest;
//! * **certified**: above `exact_bound`, admissible integers are settled by
//!   representation witnesses, which prove presence only.  An admissible
//!   value with no witness lands in `missing` as a *candidate* exception
//!   (exact absences below `exact_bound` are true exceptions).
//!
//! The unconditional direction — no inadmissible integer coprime to the
//! modulus is ever present — is checked on the exact range and any
//! violation is a hard error, never a report line.

use std::io::Write;

use octuple_algebra::SeedVector;
use orbit_enumeration::{enumerate_curvatures, OrbitOptions};
use quadratic_form::{build_form, factorize, DEFAULT_SEARCH_BUDGET};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::admissibility::{is_admissible, Admissibility, AdmissibilityClass};
use crate::certificate::{certificate_search, CertificateOutcome};
use crate::{Result, VerifierError};

/// Default ceiling for the exact enumeration stage.  Measured on the
/// reference packing: the pruned orbit walk costs ~N^2.4 node visits
/// (≈25 s single-threaded at N = 4000), so this keeps the exact stage
/// within an interactive budget while certificates cover the rest.
pub const DEFAULT_EXACT_BOUND: i64 = 4000;

/// Tuning for [`verify_local_global`].
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Exact enumeration ceiling; the effective exact range is
    /// `min(bound, exact_bound)`.
    pub exact_bound: i64,
    /// Worker threads for enumeration and certificate search; `0` uses the
    /// process default.
    pub threads: usize,
    /// Per-target budget for witness searches.
    pub certificate_budget: i64,
    /// Forwarded to the enumeration stage.
    pub mem_budget_mib: Option<u64>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            exact_bound: DEFAULT_EXACT_BOUND,
            threads: 0,
            certificate_budget: DEFAULT_SEARCH_BUDGET,
            mem_budget_mib: None,
        }
    }
}

/// Statistics over present curvatures sharing a factor with the modulus —
/// the theorem says nothing about them, so they are described, not judged.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnclassifiedSummary {
    /// Distinct present values with `gcd(m, a₀) > 1` in the exact range.
    pub total: u64,
    /// Their counts by residue mod 4.
    pub residues_mod_4: [u64; 4],
    /// Their counts by residue mod the modulus (residues with zero count
    /// omitted).
    pub residues_mod_modulus: Vec<(i64, u64)>,
    /// The range the statistics cover (presence is only known exactly up to
    /// the exact stage's ceiling).
    pub scanned_to: i64,
}

/// Outcome of a [`verify_local_global`] run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExceptionReport {
    /// Inclusive verification bound N.
    pub bound: i64,
    /// Ceiling of the exact enumeration stage actually used.
    pub exact_bound: i64,
    /// Admissibility residue `b₀ mod 4`.
    pub residue: i64,
    /// Coprimality modulus `|a₀|`.
    pub modulus: i64,
    /// Number of admissible integers in `[1, N]`.
    pub admissible_total: u64,
    /// Admissible integers with presence evidence (exact or certified).
    pub found: u64,
    /// ... of which settled by the exact table.
    pub found_exact: u64,
    /// ... of which settled by representation witnesses.
    pub found_certified: u64,
    /// Admissible integers without presence evidence, ascending.  True
    /// absences up to `exact_bound`; candidate exceptions above it.
    pub missing: Vec<i64>,
    /// Largest entry of `missing`.
    pub largest_missing: Option<i64>,
    /// Description of present values the theorem does not classify.
    pub unclassified: UnclassifiedSummary,
    /// Asymptotic curvature-density floor `(1/4)·Π_{p | a₀, p ≠ 2} (1 − 1/p)`.
    pub density_floor: f64,
    /// Observed `found / N`.
    pub density_observed: f64,
    /// Whether the observation clears the floor (up to the finite-size
    /// wobble of one residue class per modulus divisor).
    pub density_ok: bool,
}

impl ExceptionReport {
    /// Pretty-printed JSON rendering.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Writes the missing values as one-column CSV.
    pub fn write_missing_csv<W: Write>(&self, sink: W) -> csv::Result<()> {
        let mut writer = csv::Writer::from_writer(sink);
        writer.write_record(["missing"])?;
        for m in &self.missing {
            writer.write_record([m.to_string()])?;
        }
        writer.flush()?;
        Ok(())
    }
}

/// Cross-references every integer in `[1, bound]` against the seed's
/// admissibility class and the packing's curvature set.
///
/// # Errors
///
/// [`VerifierError::ConverseViolation`] if an inadmissible integer coprime
/// to the modulus is present (unconditional theorem direction — this is a
/// fault, not a finding); [`VerifierError::InvalidBound`] for `bound < 1`;
/// enumeration, form, and thread-pool failures propagate.
pub fn verify_local_global(
    seed: &SeedVector,
    bound: i64,
    opts: &VerifyOptions,
) -> Result<ExceptionReport> {
    if bound < 1 {
        return Err(VerifierError::InvalidBound { bound });
    }
    let cls = AdmissibilityClass::new(seed);
    let exact_to = bound.min(opts.exact_bound.max(1));

    let table = enumerate_curvatures(
        &seed.octuple(),
        exact_to,
        &OrbitOptions {
            threads: opts.threads,
            mem_budget_mib: opts.mem_budget_mib,
            track_multiplicity: false,
            dedup_depth: None,
        },
    )?;

    let mut admissible_total = 0u64;
    let mut found_exact = 0u64;
    let mut missing = Vec::new();
    let mut unclassified = UnclassifiedSummary {
        scanned_to: exact_to,
        ..UnclassifiedSummary::default()
    };
    let mut mod_counts = std::collections::BTreeMap::new();

    for m in 1..=exact_to {
        match is_admissible(m, &cls) {
            Admissibility::Admissible => {
                admissible_total += 1;
                if table.contains(m) {
                    found_exact += 1;
                } else {
                    missing.push(m);
                }
            }
            Admissibility::Inadmissible => {
                if table.contains(m) {
                    return Err(VerifierError::ConverseViolation { m });
                }
            }
            Admissibility::Unclassified => {
                if table.contains(m) {
                    unclassified.total += 1;
                    unclassified.residues_mod_4[m.rem_euclid(4) as usize] += 1;
                    *mod_counts.entry(m.rem_euclid(cls.modulus)).or_insert(0u64) += 1;
                }
            }
        }
    }
    unclassified.residues_mod_modulus = mod_counts.into_iter().collect();

    // Certificate stage: admissible integers above the exact range.
    let mut found_certified = 0u64;
    if bound > exact_to {
        let form = build_form(seed)?;
        let candidates: Vec<i64> = (exact_to + 1..=bound)
            .filter(|&m| is_admissible(m, &cls) == Admissibility::Admissible)
            .collect();
        admissible_total += candidates.len() as u64;

        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| VerifierError::ThreadPool {
                reason: e.to_string(),
            })?;
        let budget = opts.certificate_budget;
        let outcomes: Vec<(i64, Result<bool>)> = pool.install(|| {
            candidates
                .par_iter()
                .map(|&m| {
                    let witnessed = certificate_search(&form, m, budget)
                        .map(|o| matches!(o, CertificateOutcome::Witness(_)));
                    (m, witnessed)
                })
                .collect()
        });
        for (m, witnessed) in outcomes {
            if witnessed? {
                found_certified += 1;
            } else {
                missing.push(m);
            }
        }
    }

    let found = found_exact + found_certified;
    let largest_missing = missing.last().copied();

    let mut density_floor = 0.25f64;
    for (p, _) in factorize(cls.modulus) {
        if p != 2 {
            density_floor *= 1.0 - 1.0 / p as f64;
        }
    }
    let density_observed = found as f64 / bound as f64;
    // One residue class per divisor of 4·modulus can be short by one
    // member at a finite bound; everything beyond that slack is a real
    // density deficit.
    let slack = (4 * cls.modulus) as f64 / bound as f64;
    let density_ok = density_observed + slack >= density_floor;

    Ok(ExceptionReport {
        bound,
        exact_bound: exact_to,
        residue: cls.residue,
        modulus: cls.modulus,
        admissible_total,
        found,
        found_exact,
        found_certified,
        missing,
        largest_missing,
        unclassified,
        density_floor,
        density_observed,
        density_ok,
    })
}
