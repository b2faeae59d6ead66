//! Representation witnesses: an admissible `m` is proven to be a curvature
//! by exhibiting `f(x, y, z, t) = m + a₀` with `(x + iy, z + it)` coprime in
//! ℤ[i] and `x ≢ y (mod 2)` — the explicit sufficient condition of the
//! form-subset theorem.  The witness is independently checkable by
//! re-evaluating the form.

use octuple_algebra::SeedVector;
use quadratic_form::{
    build_form, find_representation, gaussian_gcd, GaussianInt, QuadForm, DEFAULT_SEARCH_BUDGET,
};
use serde::{Deserialize, Serialize};

use crate::admissibility::{is_admissible, Admissibility, AdmissibilityClass};
use crate::{Result, VerifierError};

/// A checked witness that `m` is a packing curvature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepCertificate {
    /// The admissible curvature being certified.
    pub m: i64,
    /// The form target `m + a₀`.
    pub form_value: i64,
    /// The lattice witness `(x, y, z, t)`.
    pub vector: [i64; 4],
}

impl RepCertificate {
    /// Re-derives every claim from scratch: form value, Gaussian
    /// coprimality, and the mixed-parity condition.
    pub fn check(&self, form: &QuadForm) -> bool {
        let [x, y, z, t] = self.vector;
        form.eval(x, y, z, t) == self.form_value
            && self.form_value == self.m + form.a0
            && is_certificate_vector(&self.vector)
    }
}

/// No witness within the search budget: a *candidate* exception at `m`.
/// Not a proof of absence — the packing may contain `m` through octuples
/// the form subset does not reach.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbsenceNote {
    pub m: i64,
    pub form_value: i64,
    /// The budget the search ran under (for reproducibility).
    pub budget: i64,
}

/// Outcome of a certificate search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "outcome")]
pub enum CertificateOutcome {
    Witness(RepCertificate),
    Absence(AbsenceNote),
}

/// The witness conditions on a representation: mixed parity of `(x, y)` and
/// Gaussian-coprime `(x + iy, z + it)`.
pub(crate) fn is_certificate_vector(v: &[i64; 4]) -> bool {
    let alpha = GaussianInt::new(v[0], v[1]);
    let beta = GaussianInt::new(v[2], v[3]);
    (v[0] - v[1]).rem_euclid(2) == 1
        && gaussian_gcd(alpha, beta).is_ok_and(|g| g.is_unit())
}

/// Witness search over an already-built form; shared with the bulk
/// verifier so per-target calls do not rebuild the form.
pub(crate) fn certificate_search(
    form: &QuadForm,
    m: i64,
    budget: i64,
) -> Result<CertificateOutcome> {
    let target = m + form.a0;
    let found = find_representation(form, target, budget, is_certificate_vector)?;
    Ok(match found {
        Some(vector) => CertificateOutcome::Witness(RepCertificate {
            m,
            form_value: target,
            vector,
        }),
        None => CertificateOutcome::Absence(AbsenceNote {
            m,
            form_value: target,
            budget,
        }),
    })
}

/// Searches for a representability witness for an admissible `m` under the
/// default budget.
///
/// # Errors
///
/// [`VerifierError::NotAdmissible`] unless `m` is admissible for the seed;
/// [`VerifierError::DiscriminantObstruction`] when `gcd(m + a₀, disc) > 1`
/// (the witness theorem does not apply there); form/search errors
/// propagate.
pub fn representability_certificate(seed: &SeedVector, m: i64) -> Result<CertificateOutcome> {
    representability_certificate_with_budget(seed, m, DEFAULT_SEARCH_BUDGET)
}

/// [`representability_certificate`] with an explicit search budget.
pub fn representability_certificate_with_budget(
    seed: &SeedVector,
    m: i64,
    budget: i64,
) -> Result<CertificateOutcome> {
    let cls = AdmissibilityClass::new(seed);
    if m < 1 || is_admissible(m, &cls) != Admissibility::Admissible {
        return Err(VerifierError::NotAdmissible { m });
    }
    let form = build_form(seed)?;
    let disc = form.disc();
    if num_integer::gcd(m + form.a0, disc) > 1 {
        return Err(VerifierError::DiscriminantObstruction { m, disc });
    }
    certificate_search(&form, m, budget)
}
