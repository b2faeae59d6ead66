//! Membership testing for the congruence subgroup Ξ ⊂ SL₂(ℤ[i]) and the
//! explicit curvature subset its orbit certifies.
//!
//! Ξ consists of the determinant-one Gaussian matrices congruent to the
//! identity mod 2, possibly after twisting by the diagonal unit
//! diag(−i, i).  Acting through [`rho`] on a seed's form-coefficient vector
//! (A₀, B₀, C₀, D₀)ᵗ, each group element emits the curvature
//! `ρ(ξ)₀·(A₀,B₀,C₀,D₀) − a₀`; the set of emissions over all words up to a
//! given length is a certified subset of the packing's curvature set.

use std::collections::{BTreeSet, HashSet};

use octuple_algebra::SeedVector;
use quadratic_form::build_form;

use crate::matrix::CyclotomicMatrix;
use crate::words::xi_generators;
use crate::zeta::Zeta8;
use crate::{PicardError, Result};

/// Cap on [`explicit_subset`] word lengths.  The reachable set grows like
/// 15ᴸ (sixteen moves, one cancelling), so lengths past this are refused
/// rather than silently thrashing; length 4 (~6·10⁴ cosets) already covers
/// every acceptance check.
pub const MAX_SUBSET_WORD_LEN: u8 = 10;

fn parity(e: Zeta8) -> Option<(i64, i64)> {
    e.as_gaussian()
        .map(|(re, im)| (re.rem_euclid(2), im.rem_euclid(2)))
}

/// Entrywise congruence with the identity mod 2 (sign-insensitive, since
/// −1 ≡ 1 mod 2).
fn congruent_to_identity_mod_2(m: &CyclotomicMatrix) -> bool {
    parity(m.alpha()) == Some((1, 0))
        && parity(m.beta()) == Some((0, 0))
        && parity(m.gamma()) == Some((0, 0))
        && parity(m.delta()) == Some((1, 0))
}

/// Tests membership in Ξ: Gaussian entries, determinant one, and congruent
/// to the identity mod 2 either directly or after the diag(−i, i) twist
/// (which absorbs the unit ambiguity of projective representatives).
pub fn xi_membership(m: &CyclotomicMatrix) -> bool {
    if !m.is_gaussian() || m.det() != Zeta8::ONE {
        return false;
    }
    if congruent_to_identity_mod_2(m) {
        return true;
    }
    let minus_i = Zeta8::gaussian(0, -1);
    let twisted = CyclotomicMatrix::new([
        [minus_i * m.rows[0][0], minus_i * m.rows[0][1]],
        [Zeta8::I * m.rows[1][0], Zeta8::I * m.rows[1][1]],
    ]);
    congruent_to_identity_mod_2(&twisted)
}

/// The curvature emitted by a group element acting on the seed's form
/// coefficients: the first row of its ρ-image applied to (A₀,B₀,C₀,D₀)ᵗ,
/// shifted by −a₀.  Only the top row is needed, and it is integral for any
/// Gaussian matrix: [|α|², 2ℑ(βᾱ), 2ℜ(βᾱ), |β|²].
fn emission(m: &CyclotomicMatrix, coeffs: [i64; 4], a0: i64) -> Result<i64> {
    let bad = |col| PicardError::NonIntegralEntry { row: 0, col };
    let a = m.alpha();
    let b = m.beta();
    let ba = b * a.conj();
    let row = [
        a.norm().ok_or(bad(0))?,
        ba.twice_im().ok_or(bad(1))?,
        ba.twice_re().ok_or(bad(2))?,
        b.norm().ok_or(bad(3))?,
    ];
    Ok(row.iter().zip(coeffs).map(|(r, c)| r * c).sum::<i64>() - a0)
}

/// Enumerates every curvature emitted by Ξ-words of length at most
/// `word_len` acting on the seed.  Breadth-first over the eight generators
/// and their inverses, deduplicating projectively (emissions are blind to
/// the global sign).  The identity word emits `b₀` itself.
///
/// The result is a *certified subset* of the packing's curvature set: each
/// value comes with an implicit witness word, so every member must also be
/// produced by exhaustive orbit enumeration — the containment the test
/// suites check.
pub fn explicit_subset(seed: &SeedVector, word_len: u8) -> Result<BTreeSet<i64>> {
    if word_len > MAX_SUBSET_WORD_LEN {
        return Err(PicardError::WordLengthTooLarge {
            len: word_len,
            max: MAX_SUBSET_WORD_LEN,
        });
    }
    let form = build_form(seed)?;
    let coeffs = [form.a_coeff, form.b_coeff, form.c_coeff, form.d_coeff];

    let mut moves = Vec::with_capacity(16);
    for g in xi_generators() {
        moves.push(g);
        moves.push(g.inverse()?);
    }

    let identity = CyclotomicMatrix::identity();
    let mut seen = HashSet::new();
    seen.insert(identity.key());
    let mut out = BTreeSet::new();
    out.insert(emission(&identity, coeffs, form.a0)?);

    let mut frontier = vec![identity];
    for _ in 0..word_len {
        let mut next = Vec::new();
        for m in &frontier {
            for mv in &moves {
                let child = m.mul(mv).canonical_sign();
                if seen.insert(child.key()) {
                    out.insert(emission(&child, coeffs, form.a0)?);
                    next.push(child);
                }
            }
        }
        frontier = next;
    }
    Ok(out)
}
