use num_traits::ToPrimitive;

use crate::matrices::{k_matrix, product_of_rows, row_times_mat, Mat5, MobiusMatrix};
use crate::rational::{rat, Vec5};
use crate::sphere::Sphere;

/// An octuple in matrix form: rows 1–4 are the coordinates of one sphere
/// from each of the four tangent pairs, row 5 is the pair-average row
/// `w = (a(S) + a(S′))/2`, the same for every pair.
///
/// Defining invariant: `F·W·Fᵗ = K` (see [`k_matrix`]). The four spheres
/// *not* listed are recovered as `2w − rowⱼ`.
#[derive(Debug, Clone, PartialEq)]
pub struct FMatrix {
    rows: [Vec5; 5],
}

impl FMatrix {
    /// Assembles from four sphere rows and the completing row. Callers are
    /// expected to have solved or verified the tangency equations; the
    /// invariant can be re-checked with [`FMatrix::satisfies_gram_identity`].
    pub fn new(spheres: [Vec5; 4], w: Vec5) -> Self {
        FMatrix {
            rows: [
                spheres[0].clone(),
                spheres[1].clone(),
                spheres[2].clone(),
                spheres[3].clone(),
                w,
            ],
        }
    }

    /// The raw 5×5 row data.
    pub fn rows(&self) -> &[Vec5; 5] {
        &self.rows
    }

    /// The four listed sphere rows.
    pub fn sphere_rows(&self) -> &[Vec5] {
        &self.rows[..4]
    }

    /// The pair-average row `w`.
    pub fn w_row(&self) -> &Vec5 {
        &self.rows[4]
    }

    /// The j-th partner sphere `2w − rowⱼ` (`j` in `0..4`).
    pub fn partner_row(&self, j: usize) -> Vec5 {
        std::array::from_fn(|i| rat(2) * &self.rows[4][i] - &self.rows[j][i])
    }

    /// All eight spheres of the octuple: the four listed rows followed by
    /// their partners.
    pub fn eight_spheres(&self) -> Vec<Sphere> {
        let mut out = Vec::with_capacity(8);
        for j in 0..4 {
            out.push(Sphere::from_row_unchecked(self.rows[j].clone()));
        }
        for j in 0..4 {
            out.push(Sphere::from_row_unchecked(self.partner_row(j)));
        }
        out
    }

    /// Exact check of `F·W·Fᵗ = K`.
    pub fn satisfies_gram_identity(&self) -> bool {
        let k = k_matrix();
        for i in 0..5 {
            for j in 0..5 {
                if product_of_rows(&self.rows[i], &self.rows[j]) != k[i][j] {
                    return false;
                }
            }
        }
        true
    }

    /// The integer curvature quintuple `(a, b, c, d, ω)` — the bend column
    /// of the rows — when all five bends are integers.
    pub fn curvature_quintuple(&self) -> Option<[i64; 5]> {
        let mut out = [0i64; 5];
        for (i, row) in self.rows.iter().enumerate() {
            let bend = &row[1];
            if !bend.is_integer() {
                return None;
            }
            out[i] = bend.to_integer().to_i64()?;
        }
        Some(out)
    }

    /// Applies a form-preserving transform to every row (the octuple of the
    /// transformed spheres).
    pub fn transform(&self, m: &MobiusMatrix) -> FMatrix {
        let rows = std::array::from_fn(|i| row_times_mat(&self.rows[i], m.matrix()));
        FMatrix { rows }
    }

    /// Applies a raw 5×5 matrix on the right of every row. Used for the
    /// integer generator matrices acting on octuples; the caller guarantees
    /// form preservation.
    pub fn transform_raw(&self, m: &Mat5) -> FMatrix {
        let rows = std::array::from_fn(|i| row_times_mat(&self.rows[i], m));
        FMatrix { rows }
    }
}
