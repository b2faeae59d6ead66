//! Quaternary quadratic form attached to a packing seed.
//!
//! A normalized seed `(a0, b0, c0, d0, omega0)` determines an integral form
//!
//! ```text
//! f(x, y, z, t) = A·x² + A·y² + 4D·z² + 4D·t² + 4B·xt − 4B·yz + 4C·xz + 4C·yt
//! ```
//!
//! whose values on primitive Gaussian-integer pairs are exactly `a0` plus the
//! curvatures appearing in the seed's orbit.  This crate provides:
//!
//! * exact construction and validation of the form ([`build_form`]),
//! * exact lattice-point counts `N(m)` and primitive counts `N_P(m)` by two
//!   independent routes — direct gcd filtering and Möbius inversion over
//!   squarefree Gaussian ideals ([`count_primitive`]),
//! * local representation densities, the singular series, and the
//!   asymptotic main term, all as exact rationals with float shadows
//!   ([`local_density`], [`singular_series`], [`main_term`]),
//! * a serializable [`DensityReport`] bundling the above for one target `m`.
//!
//! Everything is exact integer / rational arithmetic; floats appear only as
//! derived shadows next to their exact certificates.

mod count;
mod density;
mod form;
mod gaussian;
mod ideals;

pub use count::{
    count_primitive, count_representations, count_representations_with_budget,
    find_representation, representations, PrimitiveMethod, DEFAULT_SEARCH_BUDGET,
};
pub use density::{
    density_report, local_density, main_term, singular_series, DensityReport, PrimeDensity,
};
pub use form::{build_form, QuadForm};
pub use gaussian::{gaussian_gcd, GaussianInt};
pub use ideals::{factorize, ideal_norm_counts, moebius_ideals, IdealClass};

/// Errors for form construction, counting, and density evaluation.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FormError {
    /// A coefficient formula produced a half-integer.  Unreachable for seeds
    /// produced by octuple normalization (their parity split makes every
    /// numerator even); kept as a guard on the arithmetic itself.
    #[error("coefficient {name} = {numerator}/2 is not an integer")]
    NonIntegerCoefficient {
        name: &'static str,
        numerator: i64,
    },

    /// The invariant B² + C² − A·D = −a0² failed.
    #[error("discriminant identity violated: B²+C²−AD = {found}, expected {expected}")]
    DiscriminantIdentity { found: i64, expected: i64 },

    /// The form must be positive definite (A > 0 and A·D > B² + C²).
    #[error("form is not positive definite (A = {a}, AD − B² − C² = {excess})")]
    NotPositiveDefinite { a: i64, excess: i64 },

    /// The coefficients share an odd prime factor, so the form is imprimitive
    /// away from 2 and its counts would be those of a rescaled form.
    #[error("coefficients share the odd factor {gcd}")]
    OddCommonDivisor { gcd: i64 },

    /// The Gram determinant must equal 16·a0⁴.
    #[error("Gram determinant is {found}, expected {expected}")]
    GramDeterminant { found: i128, expected: i128 },

    /// Counting requested for a non-positive target.
    #[error("representation count requires m ≥ 1, got {m}")]
    NonPositiveTarget { m: i64 },

    /// The exhaustive counter refuses targets beyond its configured budget:
    /// its cost grows like m^{3/2} and silent multi-minute sweeps would look
    /// like hangs.  Callers may raise the budget explicitly.
    #[error("m = {m} exceeds the search budget {budget}; raise it with count_representations_with_budget")]
    SearchBudget { m: i64, budget: i64 },

    /// The main term is only defined for targets coprime to the discriminant.
    #[error("m = {m} shares a factor with the form discriminant {disc}")]
    NotCoprimeToDiscriminant { m: i64, disc: i64 },

    /// gcd(0, 0) is not a Gaussian integer.
    #[error("gaussian gcd of two zeroes is undefined")]
    GcdOfZeroes,
}

/// Crate-local result alias.
pub type Result<T> = std::result::Result<T, FormError>;
