use serde::{Deserialize, Serialize};

use crate::{Octuple, OctupleError, Result};

/// A root octuple relabeled into the canonical order the quadratic-form
/// machinery consumes: `a₀` even and nonzero, `b₀` odd, `a₀ + b₀` odd and
/// positive, still satisfying the quadratic curvature identity and
/// primitive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeedVector {
    /// The distinguished even curvature (nonzero; a zero slot is replaced by
    /// its pair partner `2ω − 0`).
    pub a0: i64,
    /// The distinguished odd curvature.
    pub b0: i64,
    /// Third curvature.
    pub c0: i64,
    /// Fourth curvature.
    pub d0: i64,
    /// Pair-average root ω₀.
    pub omega0: i64,
}

impl SeedVector {
    /// Validates all seed invariants and constructs.
    pub fn new(a0: i64, b0: i64, c0: i64, d0: i64, omega0: i64) -> Result<Self> {
        let v = Octuple::new(a0, b0, c0, d0, omega0)?;
        if !v.is_primitive() {
            return Err(OctupleError::NotPrimitive { gcd: v.entry_gcd() });
        }
        if a0 == 0 || a0 % 2 != 0 || b0 % 2 == 0 || a0 + b0 <= 0 {
            return Err(OctupleError::NoValidLabeling {
                entries: v.entries(),
            });
        }
        Ok(SeedVector {
            a0,
            b0,
            c0,
            d0,
            omega0,
        })
    }

    /// The seed as an octuple (labels dropped).
    pub fn octuple(&self) -> Octuple {
        Octuple::new_unchecked(self.a0, self.b0, self.c0, self.d0, self.omega0)
    }

    /// The entries `(a₀, b₀, c₀, d₀, ω₀)`.
    pub fn entries(&self) -> [i64; 5] {
        [self.a0, self.b0, self.c0, self.d0, self.omega0]
    }
}

/// Relabels a primitive root octuple into a [`SeedVector`].
///
/// Valid labelings pick an even entry for `a₀` (replacing a zero by its pair
/// partner `2ω − 0`, which stays in the orbit) and an odd entry for `b₀`,
/// keeping `a₀ + b₀` positive (evenness/oddness make it odd automatically);
/// the remaining two entries fill `c₀, d₀` in either order. Among valid
/// labelings the lexicographically smallest `(a₀, b₀, c₀, d₀)` is returned,
/// so equal inputs always produce the same seed.
///
/// # Errors
///
/// [`OctupleError::NotPrimitive`] for imprimitive input,
/// [`OctupleError::CurvatureParitySplit`] when the even/odd split is absent
/// (cannot happen for genuine primitive data), and
/// [`OctupleError::NoValidLabeling`] if no labeling makes `a₀ + b₀` positive.
pub fn normalize_seed(root: &Octuple) -> Result<SeedVector> {
    if !root.is_primitive() {
        return Err(OctupleError::NotPrimitive {
            gcd: root.entry_gcd(),
        });
    }
    let q = root.quadruple();
    let even_slots: Vec<usize> = (0..4).filter(|&i| q[i] % 2 == 0).collect();
    if even_slots.len() != 2 {
        return Err(OctupleError::CurvatureParitySplit {
            even_count: even_slots.len(),
        });
    }

    let mut best: Option<[i64; 4]> = None;
    for &ai in &even_slots {
        // A zero curvature is replaced by its pair partner so a₀ ≠ 0.
        let a0 = if q[ai] == 0 { 2 * root.omega } else { q[ai] };
        for bi in 0..4 {
            if bi == ai || q[bi] % 2 == 0 {
                continue;
            }
            if a0 + q[bi] <= 0 {
                continue;
            }
            let rest: Vec<i64> = (0..4).filter(|&i| i != ai && i != bi).map(|i| q[i]).collect();
            for (c0, d0) in [(rest[0], rest[1]), (rest[1], rest[0])] {
                let candidate = [a0, q[bi], c0, d0];
                if best.is_none_or(|b| candidate < b) {
                    best = Some(candidate);
                }
            }
        }
    }

    let [a0, b0, c0, d0] = best.ok_or(OctupleError::NoValidLabeling {
        entries: root.entries(),
    })?;
    SeedVector::new(a0, b0, c0, d0, root.omega)
}
