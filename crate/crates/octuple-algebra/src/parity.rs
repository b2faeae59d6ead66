use serde::{Deserialize, Serialize};

use crate::{Octuple, OctupleError, Result};

/// Parity facts of a primitive octuple: the even/odd split of the curvature
/// quadruple, the common residue of the odd curvatures mod 4, and the
/// (always odd) parity of ω.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityReport {
    /// The two even curvatures, in input order.
    pub evens: [i64; 2],
    /// The two odd curvatures, in input order.
    pub odds: [i64; 2],
    /// The common residue mod 4 of the odd curvatures (1 or 3).
    pub odd_residue_mod_4: u8,
    /// `ω mod 4` (ω is odd for primitive octuples, so this is 1 or 3).
    pub omega_residue_mod_4: u8,
}

#[inline]
fn residue_mod_4(x: i64) -> u8 {
    x.rem_euclid(4) as u8
}

/// Checks the parity laws of a primitive integral octuple and reports the
/// split. Used as a data-integrity tripwire: the laws hold for every member
/// of a primitive orbit, so a violation means the input was corrupted or
/// fabricated.
///
/// Laws checked, in order:
/// 1. exactly two of `(a, b, c, d)` are even ([`OctupleError::CurvatureParitySplit`]);
/// 2. the two odd curvatures are congruent mod 4 ([`OctupleError::OddPairResidue`]);
/// 3. `ω` is odd ([`OctupleError::OmegaParity`]).
///
/// # Errors
///
/// [`OctupleError::NotPrimitive`] when the entries share a factor, then the
/// three law violations above.
pub fn check_parity(v: &Octuple) -> Result<ParityReport> {
    let g = v.entry_gcd();
    if g != 1 {
        return Err(OctupleError::NotPrimitive { gcd: g });
    }

    let mut evens = Vec::with_capacity(2);
    let mut odds = Vec::with_capacity(2);
    for x in v.quadruple() {
        if x % 2 == 0 {
            evens.push(x);
        } else {
            odds.push(x);
        }
    }
    if evens.len() != 2 {
        return Err(OctupleError::CurvatureParitySplit {
            even_count: evens.len(),
        });
    }
    if residue_mod_4(odds[0]) != residue_mod_4(odds[1]) {
        return Err(OctupleError::OddPairResidue {
            first: odds[0],
            second: odds[1],
        });
    }
    if v.omega % 2 == 0 {
        return Err(OctupleError::OmegaParity { omega: v.omega });
    }

    Ok(ParityReport {
        evens: [evens[0], evens[1]],
        odds: [odds[0], odds[1]],
        odd_residue_mod_4: residue_mod_4(odds[0]),
        omega_residue_mod_4: residue_mod_4(v.omega),
    })
}
