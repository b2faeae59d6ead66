//! Exact verification of the algebraic bridge between the packing group and
//! a congruence subgroup of the Picard group PSL₂(ℤ[i]).
//!
//! The chain being verified, all in integer arithmetic:
//!
//! 1. the five 5×5 packing generators, restricted to words fixing the first
//!    curvature, conjugate (by `U`) into 4×4 matrices `T₂…T₅` preserving a
//!    quaternary form `Q`;
//! 2. a second conjugation (by `V`) carries `T₂…T₅` to `g₂…g₅` preserving
//!    the discriminant form `Δ(A,B,C,D) = B² + C² − AD`;
//! 3. the morphism [`rho`] maps 2×2 matrices over ℤ[ζ₈] into SO_Δ(ℤ), and
//!    the six matrices `M₁…M₆` hit exactly the pair products `gᵢgⱼ`;
//! 4. explicit words in `M₁…M₆` evaluate to eight Gaussian matrices
//!    generating the congruence subgroup Ξ, whose ρ-orbit of the seed's
//!    coefficient vector certifies curvatures in the packing
//!    ([`explicit_subset`]).
//!
//! ℤ[ζ₈] arithmetic is exact (4-vectors with ζ⁴ = −1), so every check is a
//! literal integer identity — no floats anywhere.

mod matrix;
mod rho;
mod words;
mod xi;
mod zeta;

pub use matrix::CyclotomicMatrix;
pub use rho::{
    conjugate_by_v, mat4_det, mat4_identity, mat4_mul, mat4_transpose, preserves_delta, rho,
    Mat4, G2, G3, G4, G5, GRAM_DELTA_X2, GRAM_Q, T2, T3, T4, T5, TWO_V_INV, U, U_INV, V,
};
pub use words::{
    identity_words, verify_word_identities, xi_generators, IdentityCheck, M1, M2, M3, M4, M5, M6,
};
pub use xi::{explicit_subset, xi_membership, MAX_SUBSET_WORD_LEN};
pub use zeta::Zeta8;

/// Errors raised by the cyclotomic verification layer.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PicardError {
    /// A ρ-image entry failed to be a rational integer: the input matrix is
    /// outside the subgroup the morphism is defined on.
    #[error("rho output entry at row {row}, column {col} is not a rational integer")]
    NonIntegralEntry { row: usize, col: usize },

    /// Matrix inversion is only implemented for determinant 1 (all group
    /// elements in scope have it).
    #[error("matrix determinant is not 1; cannot invert in the group")]
    NonUnitDeterminant,

    /// A verified-by-construction identity failed — transcription fault.
    #[error("word identity {label:?} failed verification")]
    IdentityFailed { label: &'static str },

    /// Conjugation by V left half-integer entries, so the input was not in
    /// the ρ-image lattice.
    #[error("conjugation by V produced a non-integral matrix")]
    ConjugationNotIntegral,

    /// Subset enumeration grows ~15^L; lengths beyond the cap are refused.
    #[error("word length {len} exceeds the supported maximum {max}")]
    WordLengthTooLarge { len: u8, max: u8 },

    /// Seed-derived form construction failed.
    #[error(transparent)]
    Form(#[from] quadratic_form::FormError),
}

/// Crate-local result alias.
pub type Result<T> = std::result::Result<T, PicardError>;
