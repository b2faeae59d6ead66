//! Empirical confirmation of the curvature local-global principle.
//!
//! A normalized seed pins an admissibility class: the positive integers
//! `m ≡ b₀ (mod 4)` with `gcd(m, a₀) = 1`.  The theorem being exercised
//! says membership in the packing's curvature set is governed by that
//! congruence for all large enough `m`, with the congruence's necessity
//! exact at every size.  This crate classifies integers, cross-references
//! the enumerated curvature table, hunts representation witnesses through
//! the seed's quaternary form, and reports the exceptions it can and
//! cannot rule out — measuring the empirical threshold rather than
//! assuming one.

mod admissibility;
mod certificate;
mod report;

pub use admissibility::{is_admissible, Admissibility, AdmissibilityClass};
pub use certificate::{
    representability_certificate, representability_certificate_with_budget, AbsenceNote,
    CertificateOutcome, RepCertificate,
};
pub use report::{
    verify_local_global, ExceptionReport, UnclassifiedSummary, VerifyOptions,
    DEFAULT_EXACT_BOUND,
};

/// Errors raised by the verifier.
#[derive(Debug, thiserror::Error, PartialEq)]
pub enum VerifierError {
    /// An inadmissible integer coprime to `a₀` showed up in the enumerated
    /// curvature set.  The congruence obstruction is unconditional, so this
    /// is a hard fault in the data or the code, never a reportable finding.
    #[error("inadmissible curvature {m} (coprime to the modulus) is present in the packing")]
    ConverseViolation { m: i64 },

    /// Certificates only exist for admissible targets.
    #[error("certificate requested for {m}, which is not admissible for this seed")]
    NotAdmissible { m: i64 },

    /// The witness theorem requires `gcd(m + a₀, disc) = 1`.
    #[error("target {m}: m + a₀ shares a factor with the form discriminant {disc}")]
    DiscriminantObstruction { m: i64, disc: i64 },

    /// Verification bounds must be positive.
    #[error("bound {bound} must be at least 1")]
    InvalidBound { bound: i64 },

    /// Curvature enumeration failed (budget, thread pool, bad seed …).
    #[error(transparent)]
    Enumeration(#[from] orbit_enumeration::EnumerationError),

    /// Form construction or representation search failed.
    #[error(transparent)]
    Form(#[from] quadratic_form::FormError),

    /// Worker pool construction failed.
    #[error("thread pool: {reason}")]
    ThreadPool { reason: String },
}

/// Crate-local result alias.
pub type Result<T> = std::result::Result<T, VerifierError>;
