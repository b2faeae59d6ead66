//! Gaussian integers: just enough ring arithmetic for gcd-based primitivity
//! tests and the unit-orbit bookkeeping behind primitive counts.

use crate::{FormError, Result};

/// A Gaussian integer `re + im·i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

impl GaussianInt {
    pub const ZERO: Self = Self { re: 0, im: 0 };
    pub const ONE: Self = Self { re: 1, im: 0 };

    pub fn new(re: i64, im: i64) -> Self {
        Self { re, im }
    }

    /// Field norm `re² + im²`.
    pub fn norm(self) -> i64 {
        self.re * self.re + self.im * self.im
    }

    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }

    pub fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }

    pub fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    /// True for the four units ±1, ±i.
    pub fn is_unit(self) -> bool {
        self.norm() == 1
    }

    /// The unique associate in the first quadrant: `re > 0, im ≥ 0`
    /// (zero maps to zero).  Each nonzero element has exactly one such
    /// associate among its four unit multiples.
    pub fn canonical_associate(self) -> Self {
        if self.is_zero() {
            return self;
        }
        let mut g = self;
        // Multiplying by i rotates a quarter turn; at most three rotations
        // land in {re > 0, im ≥ 0}.
        for _ in 0..3 {
            if g.re > 0 && g.im >= 0 {
                return g;
            }
            g = g.mul(Self::new(0, 1));
        }
        g
    }

    /// Quotient of `self / rhs` rounded to the nearest Gaussian integer
    /// (componentwise nearest; ties are harmless for the Euclidean descent
    /// because any rounding within distance ≤ √2/2 works).
    fn div_round(self, rhs: Self) -> Self {
        let n = rhs.norm();
        debug_assert!(n > 0);
        let num = self.mul(rhs.conj());
        Self::new(round_div(num.re, n), round_div(num.im, n))
    }
}

/// `num / den` rounded to the nearest integer, for `den > 0`.
fn round_div(num: i64, den: i64) -> i64 {
    debug_assert!(den > 0);
    (2 * num + den).div_euclid(2 * den)
}

/// Greatest common divisor in ℤ[i] by Euclidean descent with rounded
/// division, returned as the canonical first-quadrant associate.
///
/// # Errors
///
/// `gcd(0, 0)` is rejected: every Gaussian integer divides both zeroes, so
/// there is no greatest one.
pub fn gaussian_gcd(a: GaussianInt, b: GaussianInt) -> Result<GaussianInt> {
    if a.is_zero() && b.is_zero() {
        return Err(FormError::GcdOfZeroes);
    }
    let (mut a, mut b) = (a, b);
    while !b.is_zero() {
        let q = a.div_round(b);
        let r = a.sub(q.mul(b));
        debug_assert!(r.norm() < b.norm(), "rounded division must shrink the norm");
        a = b;
        b = r;
    }
    Ok(a.canonical_associate())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gcd_of_two_and_one_plus_i_is_one_plus_i() {
        let g = gaussian_gcd(GaussianInt::new(2, 0), GaussianInt::new(1, 1)).unwrap();
        assert_eq!(g, GaussianInt::new(1, 1));
    }

    #[test]
    fn gcd_with_zero_returns_canonical_associate_of_the_other() {
        let g = gaussian_gcd(GaussianInt::ZERO, GaussianInt::new(3, 0)).unwrap();
        assert_eq!(g, GaussianInt::new(3, 0));
        let g = gaussian_gcd(GaussianInt::new(0, -5), GaussianInt::ZERO).unwrap();
        assert_eq!(g, GaussianInt::new(5, 0));
    }

    #[test]
    fn gcd_of_zeroes_is_rejected() {
        assert_eq!(
            gaussian_gcd(GaussianInt::ZERO, GaussianInt::ZERO),
            Err(FormError::GcdOfZeroes)
        );
    }

    #[test]
    fn canonical_associate_lands_in_first_quadrant() {
        for (re, im) in [(0, 3), (-2, 1), (0, -4), (5, -5), (-1, -1)] {
            let g = GaussianInt::new(re, im).canonical_associate();
            assert!(g.re > 0 && g.im >= 0, "({re},{im}) mapped to {g:?}");
            assert_eq!(g.norm(), GaussianInt::new(re, im).norm());
        }
    }

    #[test]
    fn coprime_pair_has_unit_gcd() {
        // 2+i and 2-i generate the two conjugate primes above 5.
        let g = gaussian_gcd(GaussianInt::new(2, 1), GaussianInt::new(2, -1)).unwrap();
        assert!(g.is_unit());
    }

    proptest! {
        #[test]
        fn gcd_divides_both_arguments(
            ar in -40i64..=40, ai in -40i64..=40,
            br in -40i64..=40, bi in -40i64..=40,
        ) {
            let a = GaussianInt::new(ar, ai);
            let b = GaussianInt::new(br, bi);
            prop_assume!(!a.is_zero() || !b.is_zero());
            let g = gaussian_gcd(a, b).unwrap();
            prop_assert!(g.re > 0 && g.im >= 0);
            for v in [a, b] {
                // v = q·g exactly: the rounded quotient must leave no remainder.
                let q = v.div_round(g);
                prop_assert_eq!(v.sub(q.mul(g)), GaussianInt::ZERO);
            }
        }

        #[test]
        fn gcd_is_invariant_under_unit_multiples(
            ar in -20i64..=20, ai in -20i64..=20,
            br in -20i64..=20, bi in -20i64..=20,
        ) {
            let a = GaussianInt::new(ar, ai);
            let b = GaussianInt::new(br, bi);
            prop_assume!(!a.is_zero() || !b.is_zero());
            let g = gaussian_gcd(a, b).unwrap();
            let i = GaussianInt::new(0, 1);
            prop_assert_eq!(gaussian_gcd(a.mul(i), b).unwrap(), g);
            prop_assert_eq!(gaussian_gcd(a, b.mul(i).mul(i)).unwrap(), g);
        }
    }
}
