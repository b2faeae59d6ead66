//! The six determinant-one matrices M₁…M₆ over ℤ[ζ₈] whose ρ-images realize
//! the pair products of the four Δ-reflections, together with explicit words
//! in them evaluating to the eight Gaussian generators of the congruence
//! subgroup Ξ.  Every identity is re-verified by literal multiplication, on
//! both sides of ρ.

use crate::matrix::CyclotomicMatrix;
use crate::rho::{mat4_identity, mat4_mul, rho, Mat4};
use crate::zeta::Zeta8;
use crate::{PicardError, Result};

const Z: Zeta8 = Zeta8([0, 1, 0, 0]);
const Z3: Zeta8 = Zeta8([0, 0, 0, 1]);

/// M₁ = [[1, 1+i], [−1+i, −1]].
pub const M1: CyclotomicMatrix = CyclotomicMatrix {
    rows: [
        [Zeta8([1, 0, 0, 0]), Zeta8([1, 0, 1, 0])],
        [Zeta8([-1, 0, 1, 0]), Zeta8([-1, 0, 0, 0])],
    ],
};

/// M₂ = [[i, −1+i], [0, −i]].
pub const M2: CyclotomicMatrix = CyclotomicMatrix {
    rows: [
        [Zeta8([0, 0, 1, 0]), Zeta8([-1, 0, 1, 0])],
        [Zeta8([0, 0, 0, 0]), Zeta8([0, 0, -1, 0])],
    ],
};

/// M₃ = [[ζ³, ζ+ζ³], [0, −ζ]].
pub const M3: CyclotomicMatrix = CyclotomicMatrix {
    rows: [
        [Z3, Zeta8([0, 1, 0, 1])],
        [Zeta8([0, 0, 0, 0]), Zeta8([0, -1, 0, 0])],
    ],
};

/// M₄ = [[i, 0], [−1−i, −i]].
pub const M4: CyclotomicMatrix = CyclotomicMatrix {
    rows: [
        [Zeta8([0, 0, 1, 0]), Zeta8([0, 0, 0, 0])],
        [Zeta8([-1, 0, -1, 0]), Zeta8([0, 0, -1, 0])],
    ],
};

/// M₅ = [[ζ³, 0], [−ζ−ζ³, −ζ]].
pub const M5: CyclotomicMatrix = CyclotomicMatrix {
    rows: [
        [Z3, Zeta8([0, 0, 0, 0])],
        [Zeta8([0, -1, 0, -1]), Zeta8([0, -1, 0, 0])],
    ],
};

/// M₆ = [[ζ, 0], [0, −ζ³]].
pub const M6: CyclotomicMatrix = CyclotomicMatrix {
    rows: [
        [Z, Zeta8([0, 0, 0, 0])],
        [Zeta8([0, 0, 0, 0]), Zeta8([0, 0, 0, -1])],
    ],
};

const GENERATORS: [CyclotomicMatrix; 6] = [M1, M2, M3, M4, M5, M6];

/// One verified word identity: the letters (±j encodes Mⱼ^{±1}), the label
/// used in reports, and the outcome of each exactness check.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub label: &'static str,
    pub word: &'static [i8],
    /// Literal equality in the matrix group (not merely up to sign).
    pub exact: bool,
    /// Equality up to the global sign ±1.
    pub projective: bool,
    /// ρ(word product) equals both ρ(rhs) and the product of the ρ-images
    /// of the letters — multiplicativity witnessed on this instance.
    pub rho_consistent: bool,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.exact && self.projective && self.rho_consistent
    }
}

/// The word table: each entry maps a word in M₁…M₆ to the Gaussian matrix
/// it must multiply out to.  Labels name the right-hand side.
pub fn identity_words() -> Vec<(&'static str, &'static [i8], CyclotomicMatrix)> {
    vec![
        (
            "upper-shear-2",
            &[6, 4, 2, 4, -6, -2][..],
            CyclotomicMatrix::gaussian([[(1, 0), (2, 0)], [(0, 0), (1, 0)]]),
        ),
        (
            "lower-shear-2",
            &[-5, -4, -6, -5, -6, 4][..],
            CyclotomicMatrix::gaussian([[(1, 0), (0, 0)], [(2, 0), (1, 0)]]),
        ),
        (
            "lower-shear-2i",
            &[-4, -6, 5][..],
            CyclotomicMatrix::gaussian([[(1, 0), (0, 0)], [(0, 2), (1, 0)]]),
        ),
        (
            "diagonal-unit-i",
            &[2, 1, 5, -4, 5][..],
            CyclotomicMatrix::gaussian([[(0, 1), (0, 0)], [(0, 0), (0, -1)]]),
        ),
        (
            "level2-symmetric",
            &[-3, 2, -6, -4, -3, -5, -1, -6, 5][..],
            CyclotomicMatrix::gaussian([[(1, 2), (2, 0)], [(2, 0), (1, -2)]]),
        ),
        (
            "level2-skew-a",
            &[-4, 5, 6, -1, -3, -4, -6, -1, -2, 4][..],
            CyclotomicMatrix::gaussian([[(1, -2), (0, 2)], [(0, -2), (1, 2)]]),
        ),
        (
            "level2-skew-b",
            &[-6, -2, -6, -4, -5, -6, -2][..],
            CyclotomicMatrix::gaussian([[(1, 2), (0, 2)], [(0, -2), (1, -2)]]),
        ),
    ]
}

/// The eight Gaussian matrices generating Ξ.  Seven are the right-hand
/// sides of [`identity_words`]; the eighth (the upper shear by 2i) is the
/// transpose partner of the lower one and carries no independent word.
pub fn xi_generators() -> [CyclotomicMatrix; 8] {
    [
        CyclotomicMatrix::gaussian([[(1, 0), (2, 0)], [(0, 0), (1, 0)]]),
        CyclotomicMatrix::gaussian([[(1, 0), (0, 0)], [(2, 0), (1, 0)]]),
        CyclotomicMatrix::gaussian([[(1, 0), (0, 0)], [(0, 2), (1, 0)]]),
        CyclotomicMatrix::gaussian([[(1, 0), (0, 2)], [(0, 0), (1, 0)]]),
        CyclotomicMatrix::gaussian([[(0, 1), (0, 0)], [(0, 0), (0, -1)]]),
        CyclotomicMatrix::gaussian([[(1, 2), (2, 0)], [(2, 0), (1, -2)]]),
        CyclotomicMatrix::gaussian([[(1, -2), (0, 2)], [(0, -2), (1, 2)]]),
        CyclotomicMatrix::gaussian([[(1, 2), (0, 2)], [(0, -2), (1, -2)]]),
    ]
}

fn letter(step: i8) -> Result<CyclotomicMatrix> {
    let j = usize::from(step.unsigned_abs());
    assert!((1..=6).contains(&j), "word letters must be ±1..=±6");
    let m = GENERATORS[j - 1];
    if step < 0 {
        m.inverse()
    } else {
        Ok(m)
    }
}

fn evaluate_word(word: &[i8]) -> Result<CyclotomicMatrix> {
    let mut acc = CyclotomicMatrix::identity();
    for &step in word {
        acc = acc.mul(&letter(step)?);
    }
    Ok(acc)
}

/// Multiplies out every word in [`identity_words`] and checks it against
/// its right-hand side, both as ζ₈-matrices and through ρ.  Returns the
/// per-identity report; any failed check aborts with the identity's label,
/// since a failure here means the transcribed group data is wrong.
pub fn verify_word_identities() -> Result<Vec<IdentityCheck>> {
    let mut checks = Vec::new();
    for (label, word, rhs) in identity_words() {
        let lhs = evaluate_word(word)?;
        let exact = lhs == rhs;
        let projective = lhs.projectively_equal(&rhs);

        let mut rho_product: Mat4 = mat4_identity();
        for &step in word {
            rho_product = mat4_mul(&rho_product, &rho(&letter(step)?)?);
        }
        let rho_rhs = rho(&rhs)?;
        let rho_consistent = rho(&lhs)? == rho_rhs && rho_product == rho_rhs;

        let check = IdentityCheck {
            label,
            word,
            exact,
            projective,
            rho_consistent,
        };
        if !check.passed() {
            return Err(PicardError::IdentityFailed { label });
        }
        checks.push(check);
    }
    Ok(checks)
}
