use num_traits::{One, Zero};

use crate::rational::{rat, Rat, Vec5};
use crate::sphere::Sphere;
use crate::{InversiveError, Result};

/// A 5×5 exact-rational matrix.
pub type Mat5 = [[Rat; 5]; 5];

pub(crate) fn zero_mat() -> Mat5 {
    std::array::from_fn(|_| std::array::from_fn(|_| Rat::zero()))
}

pub(crate) fn identity_mat() -> Mat5 {
    let mut m = zero_mat();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rat::one();
    }
    m
}

pub(crate) fn mat_mul(a: &Mat5, b: &Mat5) -> Mat5 {
    let mut out = zero_mat();
    for i in 0..5 {
        for k in 0..5 {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..5 {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

pub(crate) fn mat_transpose(a: &Mat5) -> Mat5 {
    let mut out = zero_mat();
    for i in 0..5 {
        for j in 0..5 {
            out[j][i] = a[i][j].clone();
        }
    }
    out
}

/// `row · m` for a coordinate row vector (spheres transform on the right).
pub(crate) fn row_times_mat(row: &Vec5, m: &Mat5) -> Vec5 {
    std::array::from_fn(|j| {
        let mut acc = Rat::zero();
        for i in 0..5 {
            if !row[i].is_zero() {
                acc += &row[i] * &m[i][j];
            }
        }
        acc
    })
}

/// The fixed symmetric bilinear form: `W₁₂ = W₂₁ = −1/2`,
/// `W₃₃ = W₄₄ = W₅₅ = 1`, zeros elsewhere. `det W = −1/4`.
pub fn w_matrix() -> Mat5 {
    let mut w = zero_mat();
    let minus_half = Rat::new((-1).into(), 2.into());
    w[0][1] = minus_half.clone();
    w[1][0] = minus_half;
    w[2][2] = Rat::one();
    w[3][3] = Rat::one();
    w[4][4] = Rat::one();
    w
}

/// The fixed octuple Gram matrix: diagonal `(1, 1, 1, 1, −1)`, every
/// off-diagonal entry `−1`. `F·W·Fᵗ = K` for every octuple matrix `F`.
pub fn k_matrix() -> Mat5 {
    let mut k = std::array::from_fn(|_| std::array::from_fn(|_| rat(-1)));
    for (i, row) in k.iter_mut().enumerate().take(4) {
        row[i] = Rat::one();
    }
    k
}

/// `a(S₁) · W · a(S₂)ᵗ`: 1 for equal spheres, −1 for tangent pairs, −3 for
/// the non-tangent partner pairs inside an octuple.
pub fn inversive_product(s1: &Sphere, s2: &Sphere) -> Rat {
    product_of_rows(s1.coords(), s2.coords())
}

/// The bilinear form evaluated on raw rows; `inversive_product` for
/// arbitrary 5-vectors (gap rows are not spheres).
pub(crate) fn product_of_rows(a: &Vec5, b: &Vec5) -> Rat {
    // Expanded form of a·W·bᵗ: −(a₁b₂ + a₂b₁)/2 + a₃b₃ + a₄b₄ + a₅b₅.
    let half = Rat::new(1.into(), 2.into());
    let mut acc = -(&a[0] * &b[1] + &a[1] * &b[0]) * &half;
    for i in 2..5 {
        acc += &a[i] * &b[i];
    }
    acc
}

/// Which pair of center coordinates a rotation block acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RotationPlane {
    /// Rotate `(bx, by)`.
    Xy,
    /// Rotate `(bx, bz)`.
    Xz,
    /// Rotate `(by, bz)`.
    Yz,
}

/// Tag for the four Moebius transform families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MobiusKind {
    /// Homothety about the origin.
    Scale,
    /// Rotation about a coordinate axis through the origin.
    Rotate,
    /// Translation.
    Translate,
    /// Inversion in the unit sphere.
    Invert,
}

/// An exact 5×5 matrix acting on coordinate rows from the right
/// (`a ↦ a·m`) and preserving the bilinear form: `m·W·mᵗ = W`.
#[derive(Debug, Clone, PartialEq)]
pub struct MobiusMatrix {
    matrix: Mat5,
    kind: MobiusKind,
}

impl MobiusMatrix {
    /// The underlying matrix.
    pub fn matrix(&self) -> &Mat5 {
        &self.matrix
    }

    /// Which transform family built this matrix.
    pub fn kind(&self) -> MobiusKind {
        self.kind
    }

    /// Applies the transform to a sphere. The result is again a valid
    /// sphere or plane (the form is preserved, so the self product stays 1).
    pub fn apply(&self, s: &Sphere) -> Sphere {
        Sphere::from_row_unchecked(row_times_mat(s.coords(), &self.matrix))
    }

    /// Matrix product `self · other` (apply `self` first on rows:
    /// `a·(self·other)` = `(a·self)·other`).
    pub fn compose(&self, other: &MobiusMatrix) -> Mat5 {
        mat_mul(&self.matrix, &other.matrix)
    }

    /// Exact check of the defining invariant `m·W·mᵗ = W`.
    pub fn preserves_form(&self) -> bool {
        let w = w_matrix();
        mat_mul(&mat_mul(&self.matrix, &w), &mat_transpose(&self.matrix)) == w
    }
}

/// Homothety by `λ ≠ 0`: `diag(1/λ, λ, 1, 1, 1)`.
pub fn mobius_scale(lambda: &Rat) -> Result<MobiusMatrix> {
    if lambda.is_zero() {
        return Err(InversiveError::ZeroScale);
    }
    let mut m = identity_mat();
    m[0][0] = lambda.recip();
    m[1][1] = lambda.clone();
    Ok(MobiusMatrix {
        matrix: m,
        kind: MobiusKind::Scale,
    })
}

/// Rotation by an exact-rational angle pair `(cos, sin)` with
/// `cos² + sin² = 1`, acting on the chosen pair of center coordinates.
pub fn mobius_rotate(plane: RotationPlane, cos: &Rat, sin: &Rat) -> Result<MobiusMatrix> {
    let len_sq = cos * cos + sin * sin;
    if !len_sq.is_one() {
        return Err(InversiveError::NonUnitRotation { len_sq });
    }
    let (i, j) = match plane {
        RotationPlane::Xy => (2, 3),
        RotationPlane::Xz => (2, 4),
        RotationPlane::Yz => (3, 4),
    };
    let mut m = identity_mat();
    m[i][i] = cos.clone();
    m[i][j] = sin.clone();
    m[j][i] = -sin.clone();
    m[j][j] = cos.clone();
    Ok(MobiusMatrix {
        matrix: m,
        kind: MobiusKind::Rotate,
    })
}

/// Translation by a rational vector `(x, y, z)`.
pub fn mobius_translate(t: &[Rat; 3]) -> MobiusMatrix {
    let [x, y, z] = t;
    let mut m = identity_mat();
    m[1][0] = x * x + y * y + z * z;
    m[1][2] = x.clone();
    m[1][3] = y.clone();
    m[1][4] = z.clone();
    m[2][0] = rat(2) * x;
    m[3][0] = rat(2) * y;
    m[4][0] = rat(2) * z;
    MobiusMatrix {
        matrix: m,
        kind: MobiusKind::Translate,
    }
}

/// Inversion in the unit sphere: swaps augmented bend and bend.
pub fn mobius_invert() -> MobiusMatrix {
    let mut m = identity_mat();
    m[0][0] = Rat::zero();
    m[1][1] = Rat::zero();
    m[0][1] = Rat::one();
    m[1][0] = Rat::one();
    MobiusMatrix {
        matrix: m,
        kind: MobiusKind::Invert,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::sphere_from_geometry;

    fn assert_preserves_form(m: &MobiusMatrix) {
        assert!(m.preserves_form(), "{:?} fails m·W·mᵗ = W", m.kind());
    }

    #[test]
    fn w_is_symmetric_with_determinant_minus_quarter() {
        let w = w_matrix();
        assert_eq!(w, mat_transpose(&w));
        // det via cofactor on the sparse structure: the (0,1)/(1,0) block
        // contributes −1/4, the identity block 1.
        let det = Rat::new((-1).into(), 4.into());
        // Direct 5×5 determinant by Laplace would be noise here; verify the
        // defining block structure instead and the known det by elimination.
        assert_eq!(gaussian_det(&w), det);
    }

    fn gaussian_det(m: &Mat5) -> Rat {
        let mut a: Vec<Vec<Rat>> = m.iter().map(|r| r.to_vec()).collect();
        let mut det = Rat::one();
        for col in 0..5 {
            let Some(p) = (col..5).find(|&r| !a[r][col].is_zero()) else {
                return Rat::zero();
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            det *= a[col][col].clone();
            let pivot = a[col][col].clone();
            for r in col + 1..5 {
                let factor = &a[r][col] / &pivot;
                for c in col..5 {
                    let sub = &factor * &a[col][c];
                    a[r][c] -= sub;
                }
            }
        }
        det
    }

    #[test]
    fn k_matches_its_defining_pattern() {
        let k = k_matrix();
        for i in 0..5 {
            for j in 0..5 {
                let expected = if i == j && i < 4 { rat(1) } else { rat(-1) };
                assert_eq!(k[i][j], expected);
            }
        }
    }

    #[test]
    fn scale_identity_is_identity() {
        let m = mobius_scale(&rat(1)).unwrap();
        assert_eq!(*m.matrix(), identity_mat());
        assert_preserves_form(&m);
    }

    #[test]
    fn all_four_families_preserve_the_form() {
        assert_preserves_form(&mobius_scale(&Rat::new(3.into(), 7.into())).unwrap());
        assert_preserves_form(
            &mobius_rotate(
                RotationPlane::Xy,
                &Rat::new(3.into(), 5.into()),
                &Rat::new(4.into(), 5.into()),
            )
            .unwrap(),
        );
        assert_preserves_form(&mobius_translate(&[
            rat(2),
            Rat::new((-1).into(), 3.into()),
            rat(5),
        ]));
        assert_preserves_form(&mobius_invert());
    }

    #[test]
    fn translate_zero_is_identity() {
        let m = mobius_translate(&[rat(0), rat(0), rat(0)]);
        assert_eq!(*m.matrix(), identity_mat());
    }

    #[test]
    fn inversion_is_an_involution() {
        let inv = mobius_invert();
        assert_eq!(inv.compose(&inv), identity_mat());
    }

    #[test]
    fn non_unit_rotation_is_rejected() {
        let err = mobius_rotate(RotationPlane::Yz, &rat(1), &rat(1)).unwrap_err();
        assert_eq!(err, InversiveError::NonUnitRotation { len_sq: rat(2) });
    }

    #[test]
    fn translation_moves_a_sphere_center() {
        let s = sphere_from_geometry(&[rat(0), rat(0), rat(0)], &rat(1)).unwrap();
        let t = mobius_translate(&[rat(3), rat(0), rat(0)]);
        let moved = t.apply(&s);
        let expected = sphere_from_geometry(&[rat(3), rat(0), rat(0)], &rat(1)).unwrap();
        assert_eq!(moved, expected);
    }

    #[test]
    fn product_distinguishes_tangent_from_partner() {
        // Unit spheres at origin and (2,0,0): externally tangent.
        let s1 = sphere_from_geometry(&[rat(0), rat(0), rat(0)], &rat(1)).unwrap();
        let s2 = sphere_from_geometry(&[rat(2), rat(0), rat(0)], &rat(1)).unwrap();
        assert_eq!(inversive_product(&s1, &s2), rat(-1));
        assert_eq!(inversive_product(&s1, &s1), rat(1));
    }
}
