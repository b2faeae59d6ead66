use num_integer::Integer;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::{OctupleError, Result};

/// A curvature quintuple `(a, b, c, d, ω)` describing eight pairwise data:
/// the four sphere curvatures and, implicitly, their pair partners
/// `2ω − a, 2ω − b, 2ω − c, 2ω − d`.
///
/// Constructors enforce the quadratic curvature identity
/// `2ω² − 2ω(a+b+c+d) + a²+b²+c²+d² = 0`; every valid value of this type
/// satisfies it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Octuple {
    /// First curvature.
    pub a: i64,
    /// Second curvature.
    pub b: i64,
    /// Third curvature.
    pub c: i64,
    /// Fourth curvature.
    pub d: i64,
    /// Pair-average root: each partner curvature is `2ω − entry`.
    pub omega: i64,
}

impl Octuple {
    /// Validates the quadratic curvature identity and constructs.
    pub fn new(a: i64, b: i64, c: i64, d: i64, omega: i64) -> Result<Self> {
        let v = Octuple { a, b, c, d, omega };
        match v.identity_residual() {
            Some(0) => Ok(v),
            Some(r) => Err(OctupleError::QuadraticIdentity {
                entries: v.entries(),
                residual: r,
            }),
            None => Err(OctupleError::Overflow),
        }
    }

    /// Constructs without validation. Only for values already known valid
    /// (e.g. produced by a generator application, which preserves the
    /// identity exactly).
    #[inline]
    pub(crate) fn new_unchecked(a: i64, b: i64, c: i64, d: i64, omega: i64) -> Self {
        debug_assert_eq!(
            Octuple { a, b, c, d, omega }.identity_residual(),
            Some(0),
            "internal octuple violates the curvature identity"
        );
        Octuple { a, b, c, d, omega }
    }

    /// `2ω² − 2ω(a+b+c+d) + a²+b²+c²+d²`, or `None` on 64-bit overflow.
    pub fn identity_residual(&self) -> Option<i64> {
        let s = self.curvature_sum_checked()?;
        let q = self
            .a
            .checked_mul(self.a)?
            .checked_add(self.b.checked_mul(self.b)?)?
            .checked_add(self.c.checked_mul(self.c)?)?
            .checked_add(self.d.checked_mul(self.d)?)?;
        let w2 = 2i64
            .checked_mul(self.omega)?
            .checked_mul(self.omega)?;
        let ws = 2i64
            .checked_mul(self.omega)?
            .checked_mul(s)?;
        w2.checked_sub(ws)?.checked_add(q)
    }

    /// `a + b + c + d`.
    #[inline]
    pub fn curvature_sum(&self) -> i64 {
        self.a + self.b + self.c + self.d
    }

    fn curvature_sum_checked(&self) -> Option<i64> {
        self.a
            .checked_add(self.b)?
            .checked_add(self.c)?
            .checked_add(self.d)
    }

    /// The entries as an array `(a, b, c, d, ω)`.
    #[inline]
    pub fn entries(&self) -> [i64; 5] {
        [self.a, self.b, self.c, self.d, self.omega]
    }

    /// The curvature quadruple `(a, b, c, d)`.
    #[inline]
    pub fn quadruple(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// All eight curvatures: the quadruple and its pair partners `2ω − bᵢ`.
    pub fn eight_curvatures(&self) -> [i64; 8] {
        let w2 = 2 * self.omega;
        [
            self.a,
            self.b,
            self.c,
            self.d,
            w2 - self.a,
            w2 - self.b,
            w2 - self.c,
            w2 - self.d,
        ]
    }

    /// `gcd(a, b, c, d, ω) = 1`. By the invariance of the gcd under the
    /// generator action this equals the gcd over all eight curvatures.
    pub fn is_primitive(&self) -> bool {
        self.entry_gcd() == 1
    }

    /// The gcd of the five entries (0 for the zero vector).
    pub fn entry_gcd(&self) -> i64 {
        self.entries()
            .iter()
            .fold(0i64, |g, &x| g.gcd(&x))
    }
}

/// The two roots of `2ω² − 2ωs + q = 0` for a curvature quadruple, where
/// `s = Σbᵢ` and `q = Σbᵢ²`.
#[derive(Debug, Clone, PartialEq)]
pub enum OmegaRoots {
    /// Discriminant `s² − 2q` is a perfect square: exact roots
    /// `(s ± √(s²−2q)) / 2`, smaller first.
    Exact(Rational64, Rational64),
    /// Discriminant positive but not a perfect square: floating-point
    /// approximations, smaller first. Not usable for integer packing
    /// arithmetic.
    Approx(f64, f64),
}

/// Solves the quadratic curvature identity for `ω` given a curvature
/// quadruple. Roots are returned smaller-first and always sum to
/// `b₁+b₂+b₃+b₄`.
///
/// # Errors
///
/// [`OctupleError::NegativeDiscriminant`] when `(Σbᵢ)² − 2Σbᵢ² < 0`: the
/// quadruple is not the curvature data of four mutually tangent real
/// spheres.
pub fn solve_omega(b1: i64, b2: i64, b3: i64, b4: i64) -> Result<OmegaRoots> {
    let s = b1
        .checked_add(b2)
        .and_then(|x| x.checked_add(b3))
        .and_then(|x| x.checked_add(b4))
        .ok_or(OctupleError::Overflow)?;
    let q = [b1, b2, b3, b4]
        .iter()
        .try_fold(0i64, |acc, &x| {
            x.checked_mul(x).and_then(|x2| acc.checked_add(x2))
        })
        .ok_or(OctupleError::Overflow)?;
    let disc = s
        .checked_mul(s)
        .and_then(|s2| s2.checked_sub(2 * q))
        .ok_or(OctupleError::Overflow)?;
    if disc < 0 {
        return Err(OctupleError::NegativeDiscriminant {
            quadruple: [b1, b2, b3, b4],
            discriminant: disc,
        });
    }
    let root = disc.isqrt();
    if root * root == disc {
        let lo = Rational64::new(s - root, 2);
        let hi = Rational64::new(s + root, 2);
        Ok(OmegaRoots::Exact(lo, hi))
    } else {
        let sq = (disc as f64).sqrt();
        Ok(OmegaRoots::Approx(
            (s as f64 - sq) / 2.0,
            (s as f64 + sq) / 2.0,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_plane_quadruple_has_double_root_one() {
        // (0, 0, 1, 1): 2ω² − 4ω + 2 = 0 → ω = 1 twice.
        let roots = solve_omega(0, 0, 1, 1).unwrap();
        assert_eq!(
            roots,
            OmegaRoots::Exact(Rational64::from(1), Rational64::from(1))
        );
    }

    #[test]
    fn flipped_quadruple_has_roots_one_and_three() {
        // (2, 0, 1, 1): 2ω² − 8ω + 6 = 0 → ω ∈ {1, 3}.
        let roots = solve_omega(2, 0, 1, 1).unwrap();
        assert_eq!(
            roots,
            OmegaRoots::Exact(Rational64::from(1), Rational64::from(3))
        );
    }

    #[test]
    fn roots_sum_to_curvature_sum() {
        for (q, s) in [([0, 0, 1, 1], 2), ([2, 0, 1, 1], 4), ([2, 0, 1, 5], 8)] {
            match solve_omega(q[0], q[1], q[2], q[3]).unwrap() {
                OmegaRoots::Exact(lo, hi) => assert_eq!(lo + hi, Rational64::from(s)),
                OmegaRoots::Approx(lo, hi) => {
                    assert!((lo + hi - s as f64).abs() < 1e-9)
                }
            }
        }
    }

    #[test]
    fn negative_discriminant_is_rejected() {
        // (1, 1, 1, 10): s = 13, q = 103, disc = 169 − 206 < 0.
        let err = solve_omega(1, 1, 1, 10).unwrap_err();
        assert!(matches!(
            err,
            OctupleError::NegativeDiscriminant {
                discriminant: -37,
                ..
            }
        ));
    }

    #[test]
    fn irrational_roots_are_flagged_approximate() {
        // (0, 0, 1, 2): s = 3, q = 5, disc = 9 − 10 < 0 — pick another.
        // (0, 1, 1, 1): s = 3, q = 3, disc = 3: not a perfect square.
        match solve_omega(0, 1, 1, 1).unwrap() {
            OmegaRoots::Approx(lo, hi) => {
                assert!(lo < hi);
                assert!((lo + hi - 3.0).abs() < 1e-12);
            }
            other => panic!("expected approximate roots, got {other:?}"),
        }
    }

    #[test]
    fn constructor_rejects_identity_violation() {
        let err = Octuple::new(0, 0, 1, 1, 2).unwrap_err();
        assert_eq!(
            err,
            OctupleError::QuadraticIdentity {
                entries: [0, 0, 1, 1, 2],
                residual: 2 * 4 - 2 * 2 * 2 + 2,
            }
        );
    }

    #[test]
    fn eight_curvatures_of_reference_root() {
        let v = Octuple::new(0, 0, 1, 1, 1).unwrap();
        assert_eq!(v.eight_curvatures(), [0, 0, 1, 1, 2, 2, 1, 1]);
        assert!(v.is_primitive());
    }

    #[test]
    fn scaled_octuple_is_imprimitive() {
        let v = Octuple::new(0, 0, 2, 2, 2).unwrap();
        assert!(!v.is_primitive());
        assert_eq!(v.entry_gcd(), 2);
    }

    #[test]
    fn octuple_json_round_trip_uses_named_fields() {
        let v = Octuple::new(2, 0, 1, 1, 3).unwrap();
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"{"a":2,"b":0,"c":1,"d":1,"omega":3}"#);
        let back: Octuple = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }
}
