//! The 4×4 integral representation of 2×2 matrices over ℤ[ζ₈], acting on
//! coefficient vectors (A, B, C, D) of the quaternary curvature forms, plus
//! the change-of-basis constants tying that action back to the octuple
//! generators.
//!
//! For M = [[α, β], [γ, δ]] the image ρ(M) is assembled from Hermitian-pair
//! data of the entries.  Rows 0 and 3 carry norms and doubled real/imaginary
//! parts (always rational integers for ζ₈ entries of group elements); rows 1
//! and 2 carry *halved* combinations, whose integrality is exactly the
//! congruence condition singling out matrices acting integrally on forms.
//! Non-integral candidates are reported, not rounded.

use crate::matrix::CyclotomicMatrix;
use crate::zeta::Zeta8;
use crate::{PicardError, Result};

/// Plain 4×4 integer matrix, row-major.
pub type Mat4 = [[i64; 4]; 4];

pub fn mat4_identity() -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| i64::from(i == j)))
}

pub fn mat4_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..4).map(|k| a[i][k] * b[k][j]).sum())
    })
}

pub fn mat4_transpose(m: &Mat4) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| m[j][i]))
}

/// Determinant by cofactor expansion in i128 (entries stay tiny here, but
/// products of four entries overflow i64 sooner than one expects).
pub fn mat4_det(m: &Mat4) -> i128 {
    fn det3(m: [[i128; 3]; 3]) -> i128 {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }
    let mut det = 0i128;
    for col in 0..4 {
        let minor: [[i128; 3]; 3] = std::array::from_fn(|i| {
            let mut row = [0i128; 3];
            let mut jj = 0;
            for j in 0..4 {
                if j != col {
                    row[jj] = i128::from(m[i + 1][j]);
                    jj += 1;
                }
            }
            row
        });
        let sign = if col % 2 == 0 { 1 } else { -1 };
        det += sign * i128::from(m[0][col]) * det3(minor);
    }
    det
}

/// Curvature-coordinate images of the four octuple reflections that fix the
/// first slot, conjugated into (A, B, C, D) coordinates.
pub const G2: Mat4 = [
    [1, 2, 2, 2],
    [0, 0, -1, -1],
    [0, -1, 0, -1],
    [0, 0, 0, 1],
];
pub const G3: Mat4 = [
    [1, 0, 0, 0],
    [-1, 0, -1, 0],
    [-1, -1, 0, 0],
    [2, 2, 2, 1],
];
pub const G4: Mat4 = [
    [1, 0, 0, 0],
    [0, 0, 1, 0],
    [0, 1, 0, 0],
    [0, 0, 0, 1],
];
pub const G5: Mat4 = [
    [1, 0, 0, 0],
    [0, -1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
];

/// The same four reflections written on (b, c, d, ω) after dropping the
/// fixed first curvature: three sign-flip-and-shift moves and the ω flip.
pub const T2: Mat4 = [
    [-1, 0, 0, 2],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
];
pub const T3: Mat4 = [
    [1, 0, 0, 0],
    [0, -1, 0, 2],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
];
pub const T4: Mat4 = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, -1, 2],
    [0, 0, 0, 1],
];
pub const T5: Mat4 = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [1, 1, 1, -1],
];

/// Change of basis from (b, c, d, ω) coordinates to form coefficients
/// (A, B, C, D): A = a+b, B = ω−(a+b+c+d)/2·... — concretely, with the first
/// curvature a pinned by the seed, V sends the residual coordinates to the
/// coefficient vector.  V is integral; its inverse is half-integral, so the
/// constant below stores 2·V⁻¹ and callers divide after checking parity.
pub const V: Mat4 = [
    [1, 0, 0, 0],
    [0, 0, 0, 1],
    [1, 0, 2, 1],
    [1, 1, 1, 1],
];
pub const TWO_V_INV: Mat4 = [
    [2, 0, 0, 0],
    [-1, -1, -1, 2],
    [-1, -1, 1, 0],
    [0, 2, 0, 0],
];

/// Gram matrix of Q(b, c, d, ω) = b²+c²+d²+2ω²−2ω(b+c+d), the curvature
/// identity with the first slot eliminated.
pub const GRAM_Q: Mat4 = [
    [1, 0, 0, -1],
    [0, 1, 0, -1],
    [0, 0, 1, -1],
    [-1, -1, -1, 2],
];

/// Twice the Gram matrix of Δ(A, B, C, D) = B²+C²−AD (doubled so it is
/// integral).  ρ-images preserve Δ; `preserves_delta` tests against this.
pub const GRAM_DELTA_X2: Mat4 = [
    [0, 0, 0, -1],
    [0, 2, 0, 0],
    [0, 0, 2, 0],
    [-1, 0, 0, 0],
];

/// Shear splitting off the first curvature slot: U⁻¹·(5×5 reflection)·U is
/// block-diagonal diag(1, Tⱼ) for the four reflections fixing slot one.
pub const U: [[i64; 5]; 5] = [
    [1, 0, 0, 0, 0],
    [-1, 1, 0, 0, 0],
    [-1, 0, 1, 0, 0],
    [-1, 0, 0, 1, 0],
    [-1, 0, 0, 0, 1],
];
pub const U_INV: [[i64; 5]; 5] = [
    [1, 0, 0, 0, 0],
    [1, 1, 0, 0, 0],
    [1, 0, 1, 0, 0],
    [1, 0, 0, 1, 0],
    [1, 0, 0, 0, 1],
];

fn entry(v: Option<i64>, row: usize, col: usize) -> Result<i64> {
    v.ok_or(PicardError::NonIntegralEntry { row, col })
}

fn halved(v: Option<i64>, row: usize, col: usize) -> Result<i64> {
    match v {
        Some(t) if t % 2 == 0 => Ok(t / 2),
        _ => Err(PicardError::NonIntegralEntry { row, col }),
    }
}

/// The 4×4 integral image of a 2×2 matrix over ℤ[ζ₈], acting on form
/// coefficient vectors (A, B, C, D)ᵗ.  Fails with the offending position if
/// any entry is not a rational integer.
pub fn rho(m: &CyclotomicMatrix) -> Result<Mat4> {
    let (a, b) = (m.alpha(), m.beta());
    let (c, d) = (m.gamma(), m.delta());
    let ba: Zeta8 = b * a.conj();
    let ac: Zeta8 = a * c.conj();
    let dc: Zeta8 = d * c.conj();
    let bd: Zeta8 = b * d.conj();
    let mid: Zeta8 = a.conj() * d - b.conj() * c;
    let cross: Zeta8 = a * d.conj() + b * c.conj();

    Ok([
        [
            entry(a.norm(), 0, 0)?,
            entry(ba.twice_im(), 0, 1)?,
            entry(ba.twice_re(), 0, 2)?,
            entry(b.norm(), 0, 3)?,
        ],
        [
            halved(ac.twice_im(), 1, 0)?,
            halved(mid.twice_re(), 1, 1)?,
            halved(cross.twice_im(), 1, 2)?,
            halved(bd.twice_im(), 1, 3)?,
        ],
        [
            halved(ac.twice_re(), 2, 0)?,
            halved(mid.twice_im(), 2, 1)?,
            halved(cross.twice_re(), 2, 2)?,
            halved(bd.twice_re(), 2, 3)?,
        ],
        [
            entry(c.norm(), 3, 0)?,
            entry(dc.twice_im(), 3, 1)?,
            entry(dc.twice_re(), 3, 2)?,
            entry(d.norm(), 3, 3)?,
        ],
    ])
}

/// True when m preserves the discriminant form Δ and has determinant one,
/// i.e. mᵀ·(2GΔ)·m = 2GΔ and det m = 1.
pub fn preserves_delta(m: &Mat4) -> bool {
    mat4_mul(&mat4_transpose(m), &mat4_mul(&GRAM_DELTA_X2, m)) == GRAM_DELTA_X2
        && mat4_det(m) == 1
}

/// Conjugate a matrix acting on (A, B, C, D) back to (b, c, d, ω)
/// coordinates: V·m·V⁻¹, computed as V·m·(2V⁻¹) with an exact parity check
/// before halving.
pub fn conjugate_by_v(m: &Mat4) -> Result<Mat4> {
    let doubled = mat4_mul(&mat4_mul(&V, m), &TWO_V_INV);
    let mut out = [[0i64; 4]; 4];
    for (out_row, row) in out.iter_mut().zip(&doubled) {
        for (entry, &value) in out_row.iter_mut().zip(row) {
            if value % 2 != 0 {
                return Err(PicardError::ConjugationNotIntegral);
            }
            *entry = value / 2;
        }
    }
    Ok(out)
}
