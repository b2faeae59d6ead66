//! Integer curvature-vector algebra for generalized Apollonian sphere
//! packings.
//!
//! The central object is the [`Octuple`] `(a, b, c, d, ω)`: four mutually
//! tangent spheres with curvatures `a..d` together with the value `ω` that
//! determines their four pair partners `2ω − a, …, 2ω − d`. A quintuple is
//! valid exactly when it satisfies the quadratic curvature identity
//!
//! ```text
//! 2ω² − 2ω(a+b+c+d) + a² + b² + c² + d² = 0.
//! ```
//!
//! Five involutions act on valid quintuples: [`Generator::A1`]–
//! [`Generator::A4`] replace one curvature by its pair partner
//! (`bᵢ ← 2ω − bᵢ`), and [`Generator::A5`] swaps `ω` for the second root
//! `ω′ = a+b+c+d − ω`. Orbits of this action are the integral packings; each
//! orbit contains a unique descent-free representative, the *root octuple*,
//! computed by [`reduce_to_root`], and a canonical [`SeedVector`] relabeling
//! produced by [`normalize_seed`] that downstream quadratic-form machinery
//! consumes.

mod generators;
mod octuple;
mod parity;
mod reduce;
mod seed;

pub use generators::{apply_generator, generator_matrix, Generator};
pub use octuple::{solve_omega, Octuple, OmegaRoots};
pub use parity::{check_parity, ParityReport};
pub use reduce::{reduce_to_root, REDUCTION_STEP_CAP};
pub use seed::{normalize_seed, SeedVector};

use thiserror::Error;

/// Errors for octuple construction, validation, and normalization.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OctupleError {
    /// The quintuple fails the quadratic curvature identity
    /// `2ω² − 2ω(a+b+c+d) + a²+b²+c²+d² = 0`.
    #[error("quintuple ({0}, {1}, {2}, {3}; omega={4}) violates the quadratic curvature identity (residual {5})", .entries[0], .entries[1], .entries[2], .entries[3], .entries[4], .residual)]
    QuadraticIdentity {
        /// The offending `(a, b, c, d, ω)`.
        entries: [i64; 5],
        /// Value of `2ω² − 2ωs + q`, which must be zero.
        residual: i64,
    },

    /// `(Σbᵢ)² − 2Σbᵢ²` is negative: no real sphere closes the configuration.
    #[error("curvature quadruple ({:?}) has negative omega discriminant {discriminant}", .quadruple)]
    NegativeDiscriminant {
        /// The curvature quadruple.
        quadruple: [i64; 4],
        /// The (negative) discriminant `s² − 2q`.
        discriminant: i64,
    },

    /// Entries share a common factor; primitive-only operations reject this.
    #[error("octuple is imprimitive: gcd of entries is {gcd}")]
    NotPrimitive {
        /// The common divisor found.
        gcd: i64,
    },

    /// A primitive octuple must have exactly two even and two odd curvatures.
    #[error("curvature quadruple has {even_count} even entries; a primitive octuple has exactly two")]
    CurvatureParitySplit {
        /// Number of even entries among `(a, b, c, d)`.
        even_count: usize,
    },

    /// The two odd curvatures of a primitive octuple agree mod 4.
    #[error("odd curvatures {first} and {second} differ mod 4")]
    OddPairResidue {
        /// First odd curvature.
        first: i64,
        /// Second odd curvature.
        second: i64,
    },

    /// `ω` of a primitive octuple is odd.
    #[error("omega {omega} is even; a primitive octuple has odd omega")]
    OmegaParity {
        /// The offending `ω`.
        omega: i64,
    },

    /// Root reduction did not converge within [`REDUCTION_STEP_CAP`] steps —
    /// the input is corrupt (reduction strictly decreases the entry sum, so
    /// valid octuples converge quickly).
    #[error("root reduction exceeded {steps} steps; input is not packing data")]
    ReductionCap {
        /// The step cap that was hit.
        steps: u64,
    },

    /// The quintuple satisfies the quadratic identity but lies on the
    /// mirrored solution cone (`ω ≤ 0`, the negation of packing data), where
    /// reduction diverges. Sphere packings always have `ω > 0`.
    #[error("omega {omega} is not positive; the quintuple is mirror-cone data, not a packing")]
    MirrorCone {
        /// The non-positive `ω`.
        omega: i64,
    },

    /// No relabeling of the root satisfies the seed-vector sign constraint
    /// `a₀ + b₀ > 0`.
    #[error("no relabeling of ({0}, {1}, {2}, {3}; omega={4}) yields a positive a0 + b0", .entries[0], .entries[1], .entries[2], .entries[3], .entries[4])]
    NoValidLabeling {
        /// The root octuple that could not be relabeled.
        entries: [i64; 5],
    },

    /// Arithmetic overflow while validating externally supplied entries.
    #[error("octuple entries overflow 64-bit intermediate arithmetic")]
    Overflow,
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, OctupleError>;
