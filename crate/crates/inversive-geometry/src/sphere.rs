use num_traits::{One, Zero};

use crate::matrices::product_of_rows;
use crate::rational::{rat, Rat, Vec5};
use crate::{InversiveError, Result};

/// A sphere or plane in augmented-bend coordinates
/// `(b̄, b, b·x, b·y, b·z)`.
///
/// Every value of this type satisfies the self-product invariant
/// `coords·W·coordsᵗ = 1`. For spheres (`b ≠ 0`) the augmented bend is
/// `b̄ = b(x²+y²+z²) − 1/b`; for planes (`b = 0`) the last three entries
/// are an exact unit normal and the first entry is twice the signed offset.
#[derive(Debug, Clone, PartialEq)]
pub struct Sphere {
    coords: Vec5,
}

impl Sphere {
    /// The raw coordinate row.
    pub fn coords(&self) -> &Vec5 {
        &self.coords
    }

    /// Validates the self-product invariant and wraps a raw row.
    pub fn from_coords(coords: Vec5) -> Result<Self> {
        let product = product_of_rows(&coords, &coords);
        if !product.is_one() {
            return Err(InversiveError::SelfProduct { product });
        }
        Ok(Sphere { coords })
    }

    /// Wraps a row already known to satisfy the invariant (e.g. the image
    /// of a sphere under a form-preserving matrix).
    pub(crate) fn from_row_unchecked(coords: Vec5) -> Self {
        debug_assert!(
            product_of_rows(&coords, &coords).is_one(),
            "internal sphere row violates the self-product invariant"
        );
        Sphere { coords }
    }

    /// Curvature (bend) `b`; zero exactly for planes.
    pub fn curvature(&self) -> &Rat {
        &self.coords[1]
    }

    /// True when this is a plane (zero curvature).
    pub fn is_plane(&self) -> bool {
        self.coords[1].is_zero()
    }

    /// Center `(x, y, z)` for spheres; `None` for planes.
    pub fn center(&self) -> Option<[Rat; 3]> {
        if self.is_plane() {
            return None;
        }
        let b = &self.coords[1];
        Some([
            &self.coords[2] / b,
            &self.coords[3] / b,
            &self.coords[4] / b,
        ])
    }

    /// For planes: the unit normal. `None` for spheres.
    pub fn normal(&self) -> Option<[Rat; 3]> {
        if !self.is_plane() {
            return None;
        }
        Some([
            self.coords[2].clone(),
            self.coords[3].clone(),
            self.coords[4].clone(),
        ])
    }

    /// For planes: the signed offset `h` (the plane is `n·x = h`). `None`
    /// for spheres.
    pub fn offset(&self) -> Option<Rat> {
        if !self.is_plane() {
            return None;
        }
        Some(&self.coords[0] / rat(2))
    }
}

/// Builds a sphere from center and nonzero curvature (negative curvature
/// describes an enclosing sphere).
pub fn sphere_from_geometry(center: &[Rat; 3], curvature: &Rat) -> Result<Sphere> {
    if curvature.is_zero() {
        return Err(InversiveError::ZeroCurvature);
    }
    let [x, y, z] = center;
    let r_sq = x * x + y * y + z * z;
    let augmented = curvature * r_sq - curvature.recip();
    Ok(Sphere {
        coords: [
            augmented,
            curvature.clone(),
            curvature * x,
            curvature * y,
            curvature * z,
        ],
    })
}

/// Builds a plane (sphere of infinite radius) from an exact unit normal and
/// a signed offset: coordinates `(2·offset, 0, n₁, n₂, n₃)`.
pub fn plane_from_geometry(normal: &[Rat; 3], offset: &Rat) -> Result<Sphere> {
    let [n1, n2, n3] = normal;
    let len_sq = n1 * n1 + n2 * n2 + n3 * n3;
    if !len_sq.is_one() {
        return Err(InversiveError::NonUnitNormal { len_sq });
    }
    Ok(Sphere {
        coords: [
            rat(2) * offset,
            Rat::zero(),
            n1.clone(),
            n2.clone(),
            n3.clone(),
        ],
    })
}
