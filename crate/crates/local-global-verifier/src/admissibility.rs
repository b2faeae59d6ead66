//! The congruence class the local-global theorem speaks about.

use num_integer::Integer;
use octuple_algebra::SeedVector;
use serde::{Deserialize, Serialize};

/// Three-way classification of a positive integer against a seed's class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Admissibility {
    /// `gcd(m, a₀) = 1` and `m ≡ b₀ (mod 4)`: the theorem says `m` is a
    /// curvature once large enough.
    Admissible,
    /// `gcd(m, a₀) = 1` and `m ≢ b₀ (mod 4)`: the parity obstruction says
    /// `m` is never a curvature.
    Inadmissible,
    /// `gcd(m, a₀) > 1`: the theorem is silent; no claim either way.
    Unclassified,
}

/// A seed's admissibility data: the odd residue `b₀ mod 4` and the
/// coprimality modulus `a₀`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityClass {
    seed: SeedVector,
    /// `b₀ mod 4`; odd because seed normalization makes `b₀` odd.
    pub residue: i64,
    /// `|a₀|`; integers sharing a factor with it are unclassified.
    pub modulus: i64,
}

impl AdmissibilityClass {
    pub fn new(seed: &SeedVector) -> Self {
        let residue = seed.b0.rem_euclid(4);
        debug_assert_eq!(residue % 2, 1, "normalized seeds have odd b₀");
        Self {
            seed: *seed,
            residue,
            modulus: seed.a0.abs(),
        }
    }

    pub fn seed(&self) -> &SeedVector {
        &self.seed
    }
}

/// Classifies a positive integer.
///
/// # Panics
///
/// Panics if `m < 1`; the class only describes positive curvatures.
pub fn is_admissible(m: i64, cls: &AdmissibilityClass) -> Admissibility {
    assert!(m >= 1, "admissibility is defined for positive integers");
    if m.gcd(&cls.modulus) > 1 {
        Admissibility::Unclassified
    } else if m.rem_euclid(4) == cls.residue {
        Admissibility::Admissible
    } else {
        Admissibility::Inadmissible
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reference_class() -> AdmissibilityClass {
        AdmissibilityClass::new(&SeedVector::new(2, 1, 0, 1, 1).unwrap())
    }

    #[test]
    fn reference_class_has_residue_one_modulus_two() {
        let cls = reference_class();
        assert_eq!(cls.residue, 1);
        assert_eq!(cls.modulus, 2);
    }

    #[test]
    fn classification_matches_the_congruence() {
        let cls = reference_class();
        assert_eq!(is_admissible(5, &cls), Admissibility::Admissible);
        assert_eq!(is_admissible(1, &cls), Admissibility::Admissible);
        assert_eq!(is_admissible(3, &cls), Admissibility::Inadmissible);
        assert_eq!(is_admissible(7, &cls), Admissibility::Inadmissible);
        assert_eq!(is_admissible(6, &cls), Admissibility::Unclassified);
        assert_eq!(is_admissible(2, &cls), Admissibility::Unclassified);
    }

    #[test]
    fn negative_odd_seed_curvature_reduces_to_a_positive_residue() {
        // Root (−1, 2, 2, 3, 3) relabels with b₀ = −1, so the class residue
        // is 3 and admissibility means m ≡ 3 (mod 4).
        let seed = octuple_algebra::normalize_seed(
            &octuple_algebra::Octuple::new(-1, 2, 2, 3, 3).unwrap(),
        )
        .unwrap();
        let cls = AdmissibilityClass::new(&seed);
        assert_eq!(cls.residue, 3);
        assert_eq!(is_admissible(3, &cls), Admissibility::Admissible);
        assert_eq!(is_admissible(5, &cls), Admissibility::Inadmissible);
    }

    #[test]
    #[should_panic(expected = "positive integers")]
    fn zero_is_outside_the_classification() {
        is_admissible(0, &reference_class());
    }
}
