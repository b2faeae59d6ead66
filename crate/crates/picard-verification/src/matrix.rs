//! 2×2 matrices over ℤ[ζ₈], with the projective (±1) identifications the
//! group theory works modulo.

use crate::zeta::Zeta8;
use crate::{PicardError, Result};

/// A 2×2 matrix over ℤ[ζ₈].  Group elements in scope all have determinant 1;
/// Gaussian-entry matrices double as elements of (a subgroup of)
/// PSL₂(ℤ[i]), where equality is up to the global sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclotomicMatrix {
    /// Row-major entries [[α, β], [γ, δ]].
    pub rows: [[Zeta8; 2]; 2],
}

impl CyclotomicMatrix {
    pub fn new(rows: [[Zeta8; 2]; 2]) -> Self {
        Self { rows }
    }

    /// Matrix with Gaussian-integer entries given as (re, im) pairs.
    pub fn gaussian(entries: [[(i64, i64); 2]; 2]) -> Self {
        Self::new(entries.map(|row| row.map(|(re, im)| Zeta8::gaussian(re, im))))
    }

    pub fn identity() -> Self {
        Self::new([
            [Zeta8::ONE, Zeta8::ZERO],
            [Zeta8::ZERO, Zeta8::ONE],
        ])
    }

    pub fn alpha(&self) -> Zeta8 {
        self.rows[0][0]
    }
    pub fn beta(&self) -> Zeta8 {
        self.rows[0][1]
    }
    pub fn gamma(&self) -> Zeta8 {
        self.rows[1][0]
    }
    pub fn delta(&self) -> Zeta8 {
        self.rows[1][1]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let a = &self.rows;
        let b = &rhs.rows;
        Self::new([
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ])
    }

    pub fn det(&self) -> Zeta8 {
        self.alpha() * self.delta() - self.beta() * self.gamma()
    }

    /// Inverse via the adjugate; requires determinant exactly 1, which every
    /// group element handled by this crate has.
    pub fn inverse(&self) -> Result<Self> {
        if self.det() != Zeta8::ONE {
            return Err(PicardError::NonUnitDeterminant);
        }
        Ok(Self::new([
            [self.delta(), -self.beta()],
            [-self.gamma(), self.alpha()],
        ]))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.rows.map(|row| row.map(|e| -e)))
    }

    /// True when every entry lies in ℤ[i].
    pub fn is_gaussian(&self) -> bool {
        self.rows
            .iter()
            .all(|row| row.iter().all(|e| e.as_gaussian().is_some()))
    }

    /// The sign-normalized representative of {M, −M}: the first nonzero
    /// coefficient in row-major, power-basis scan order is positive.  Two
    /// matrices are projectively equal iff their canonical forms coincide.
    pub fn canonical_sign(&self) -> Self {
        for row in &self.rows {
            for e in row {
                for &c in &e.0 {
                    if c != 0 {
                        return if c < 0 { self.neg() } else { *self };
                    }
                }
            }
        }
        *self
    }

    /// Equality in the projective group (up to the global sign ±1 — the only
    /// determinant-preserving scalars).
    pub fn projectively_equal(&self, rhs: &Self) -> bool {
        self.canonical_sign() == rhs.canonical_sign()
    }

    /// Flat coefficient array, usable as a hash key for dedup.
    pub fn key(&self) -> [i64; 16] {
        let mut out = [0i64; 16];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                out[(i * 2 + j) * 4..(i * 2 + j) * 4 + 4].copy_from_slice(&e.0);
            }
        }
        out
    }
}
