//! Exact inversive geometry of spheres and planes in augmented-bend
//! coordinates.
//!
//! A sphere with curvature `b` and center `(x, y, z)` is the 5-vector
//! `(b̄, b, bx, by, bz)` where `b̄ = b(x²+y²+z²) − 1/b` is the augmented
//! bend; a plane with unit normal `n` and signed offset `h` is
//! `(2h, 0, n₁, n₂, n₃)`. The bilinear form given by [`w_matrix`] makes
//! every such vector self-inverse (`a·W·aᵗ = 1`), tangent pairs satisfy
//! `a·W·bᵗ = −1`, and the two non-tangent partner spheres of an octuple
//! satisfy `a·W·bᵗ = −3`.
//!
//! [`fill_gap`] completes four mutually tangent spheres into the two
//! octuples inscribing them, returning the full [`FMatrix`] data whose
//! rows satisfy `F·W·Fᵗ = K` ([`k_matrix`]).
//!
//! All arithmetic is exact rational; floating point appears only in the
//! flagged fallback payload of [`InversiveError::IrrationalGap`], which is
//! usable for geometry export but never for curvature arithmetic.

mod fill_gap;
mod fmatrix;
mod json;
mod matrices;
mod rational;
mod sphere;

pub use fill_gap::fill_gap;
pub use fmatrix::FMatrix;
pub use json::GeometryObject;
pub use matrices::{
    inversive_product, k_matrix, mobius_invert, mobius_rotate, mobius_scale, mobius_translate,
    w_matrix, Mat5, MobiusMatrix, RotationPlane,
};
pub use rational::{format_rational, parse_rational, Rat, Vec5};
pub use sphere::{plane_from_geometry, sphere_from_geometry, Sphere};

use thiserror::Error;

/// Errors for sphere construction, transform validation, and gap filling.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum InversiveError {
    /// Spheres need nonzero curvature; use the plane constructor instead.
    #[error("curvature must be nonzero; planes use the plane constructor")]
    ZeroCurvature,

    /// Plane normals must have exactly unit length.
    #[error("plane normal has squared length {len_sq}, expected 1")]
    NonUnitNormal {
        /// The exact squared length that was supplied.
        len_sq: Rat,
    },

    /// Rotation parameters must satisfy cos² + sin² = 1 exactly.
    #[error("rotation pair has cos² + sin² = {len_sq}, expected 1")]
    NonUnitRotation {
        /// The exact value of cos² + sin².
        len_sq: Rat,
    },

    /// Scaling by zero is not a Moebius transform.
    #[error("scale factor must be nonzero")]
    ZeroScale,

    /// A 5-vector claiming to be a sphere fails the self-product invariant.
    #[error("coordinate vector has self inversive product {product}, expected 1")]
    SelfProduct {
        /// The exact self product found.
        product: Rat,
    },

    /// Gap filling requires the four input spheres to be mutually tangent.
    #[error("spheres {i} and {j} are not tangent: inversive product {product}, expected -1")]
    NotMutuallyTangent {
        /// Index of the first sphere (0-based).
        i: usize,
        /// Index of the second sphere (0-based).
        j: usize,
        /// Their exact inversive product.
        product: Rat,
    },

    /// The tangency system degenerated (coincident or dependent spheres).
    #[error("linear system for the gap has rank {rank}, expected 4")]
    SingularSystem {
        /// Rank found during elimination.
        rank: usize,
    },

    /// No real sphere completes the configuration (cannot happen for
    /// genuinely tangent inputs; guards corrupted data).
    #[error("gap quadratic has negative discriminant {discriminant}")]
    NoRealCompletion {
        /// The exact negative discriminant.
        discriminant: Rat,
    },

    /// The gap closes only at irrational coordinates: exact output is
    /// impossible. The payload carries floating-point approximations of the
    /// two completing rows — usable for geometry export, never for
    /// curvature arithmetic.
    #[error("gap completion is irrational (discriminant {discriminant} is not a rational square)")]
    IrrationalGap {
        /// The exact, non-square discriminant of the branch quadratic.
        discriminant: Rat,
        /// Numeric approximation of the first completing row.
        w_approx: [f64; 5],
        /// Numeric approximation of the second completing row.
        w_alt_approx: [f64; 5],
    },

    /// A supplied completing row fails its defining equations.
    #[error("supplied gap row fails {which}: value {value}, expected -1")]
    KnownRowInvalid {
        /// Which equation failed (description).
        which: String,
        /// The exact value found.
        value: Rat,
    },

    /// Malformed geometry JSON.
    #[error("geometry JSON invalid: {reason}")]
    JsonInvalid {
        /// What was wrong.
        reason: String,
    },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, InversiveError>;
