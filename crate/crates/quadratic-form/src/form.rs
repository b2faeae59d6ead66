//! Construction and evaluation of the quaternary form attached to a seed.

use num_integer::Integer;
use octuple_algebra::SeedVector;

use crate::{FormError, Result};

/// The integral quaternary form
///
/// ```text
/// f(x, y, z, t) = A(x² + y²) + 4D(z² + t²) + 4B(xt − yz) + 4C(xz + yt)
/// ```
///
/// determined by a normalized seed.  On pairs of Gaussian integers
/// `(x + iy, z + it)` it is the Hermitian-style pairing whose values exceed
/// the orbit's curvatures by exactly `a0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadForm {
    /// Coefficient of x² and y²: `a0 + b0`.
    pub a_coeff: i64,
    /// Mixed coefficient: `−(a0 + b0 + c0 + d0 − 2ω0)/2`.
    pub b_coeff: i64,
    /// Mixed coefficient: `−(a0 + b0 + c0 − d0)/2`.
    pub c_coeff: i64,
    /// Coefficient of 4z² and 4t²: `a0 + c0`.
    pub d_coeff: i64,
    /// The seed's even curvature; `f ≡ a0 + (curvature)` on primitive pairs.
    pub a0: i64,
}

impl QuadForm {
    /// `B² + C² − A·D`, always `−a0²`.
    pub fn delta(&self) -> i64 {
        self.b_coeff * self.b_coeff + self.c_coeff * self.c_coeff
            - self.a_coeff * self.d_coeff
    }

    /// Discriminant of the quaternary form, `16·a0⁴`.
    pub fn disc(&self) -> i64 {
        16 * self.a0.pow(4)
    }

    /// Exact value `f(x, y, z, t)`.
    pub fn eval(&self, x: i64, y: i64, z: i64, t: i64) -> i64 {
        let (a, b, c, d) = (self.a_coeff, self.b_coeff, self.c_coeff, self.d_coeff);
        a * (x * x + y * y)
            + 4 * d * (z * z + t * t)
            + 4 * b * (x * t - y * z)
            + 4 * c * (x * z + y * t)
    }

    /// The symmetric Gram matrix G with `f(v) = vᵀGv` in the (x, y, z, t)
    /// basis.
    pub fn gram(&self) -> [[i64; 4]; 4] {
        let (a, b, c, d) = (self.a_coeff, self.b_coeff, self.c_coeff, self.d_coeff);
        [
            [a, 0, 2 * c, 2 * b],
            [0, a, -2 * b, 2 * c],
            [2 * c, -2 * b, 2 * d * 2, 0],
            [2 * b, 2 * c, 0, 2 * d * 2],
        ]
    }
}

/// Exact determinant of a 4×4 integer matrix by cofactor expansion.
fn det4(m: &[[i64; 4]; 4]) -> i128 {
    fn det3(m: [[i128; 3]; 3]) -> i128 {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }
    let mut det = 0i128;
    for col in 0..4 {
        let mut minor = [[0i128; 3]; 3];
        for (mi, row) in m.iter().skip(1).enumerate() {
            let mut mj = 0;
            for (j, &v) in row.iter().enumerate() {
                if j != col {
                    minor[mi][mj] = v as i128;
                    mj += 1;
                }
            }
        }
        let sign = if col % 2 == 0 { 1 } else { -1 };
        det += sign * (m[0][col] as i128) * det3(minor);
    }
    det
}

/// Builds the quaternary form of a normalized seed and validates every
/// structural invariant: integral coefficients, the identity
/// `B² + C² − A·D = −a0²`, positive definiteness, primitivity away from 2,
/// and Gram determinant `16·a0⁴`.
pub fn build_form(seed: &SeedVector) -> Result<QuadForm> {
    let (a0, b0, c0, d0, w0) = (seed.a0, seed.b0, seed.c0, seed.d0, seed.omega0);

    let half = |name: &'static str, numerator: i64| -> Result<i64> {
        if numerator % 2 != 0 {
            // The seed parity split (two even, two odd curvatures) makes both
            // numerators even; this guards the formulas, not the input.
            return Err(FormError::NonIntegerCoefficient { name, numerator });
        }
        Ok(numerator / 2)
    };

    let form = QuadForm {
        a_coeff: a0 + b0,
        b_coeff: half("B", -(a0 + b0 + c0 + d0 - 2 * w0))?,
        c_coeff: half("C", -(a0 + b0 + c0 - d0))?,
        d_coeff: a0 + c0,
        a0,
    };

    let expected = -a0 * a0;
    if form.delta() != expected {
        return Err(FormError::DiscriminantIdentity {
            found: form.delta(),
            expected,
        });
    }

    let excess = form.a_coeff * form.d_coeff
        - form.b_coeff * form.b_coeff
        - form.c_coeff * form.c_coeff;
    if form.a_coeff <= 0 || excess <= 0 {
        return Err(FormError::NotPositiveDefinite {
            a: form.a_coeff,
            excess,
        });
    }

    let mut g = form
        .a_coeff
        .gcd(&form.b_coeff)
        .gcd(&form.c_coeff)
        .gcd(&form.d_coeff);
    while g % 2 == 0 {
        g /= 2;
    }
    if g != 1 {
        return Err(FormError::OddCommonDivisor { gcd: g });
    }

    let det = det4(&form.gram());
    let expected_det = 16 * (a0 as i128).pow(4);
    if det != expected_det {
        return Err(FormError::GramDeterminant {
            found: det,
            expected: expected_det,
        });
    }

    Ok(form)
}

/// The form of the seed (2, 1, 0, 1, 1): coefficients (3, −1, −1, 2).
#[cfg(test)]
pub(crate) fn reference_form() -> QuadForm {
    let seed = octuple_algebra::SeedVector::new(2, 1, 0, 1, 1).unwrap();
    build_form(&seed).unwrap()
}
