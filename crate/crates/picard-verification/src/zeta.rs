//! Exact arithmetic in ℤ[ζ₈], the ring of integers of the eighth
//! cyclotomic field, as integer 4-vectors in the power basis 1, ζ, ζ², ζ³
//! with the reduction ζ⁴ = −1.  Since ζ = (1 + i)/√2, this ring contains
//! ℤ[i] (i = ζ²) and √2 = ζ − ζ³ exactly — no floating point is needed for
//! any matrix entry in this crate.

use std::ops::{Add, Mul, Neg, Sub};

/// An element `c₀ + c₁ζ + c₂ζ² + c₃ζ³` of ℤ[ζ₈].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Zeta8(pub [i64; 4]);

impl Zeta8 {
    pub const ZERO: Self = Self([0, 0, 0, 0]);
    pub const ONE: Self = Self([1, 0, 0, 0]);
    /// The imaginary unit i = ζ².
    pub const I: Self = Self([0, 0, 1, 0]);
    /// The primitive eighth root ζ.
    pub const ZETA: Self = Self([0, 1, 0, 0]);

    /// The Gaussian integer `re + im·i` embedded via i = ζ².
    pub fn gaussian(re: i64, im: i64) -> Self {
        Self([re, 0, im, 0])
    }

    /// Integer scalar.
    pub fn integer(n: i64) -> Self {
        Self([n, 0, 0, 0])
    }

    pub fn is_zero(self) -> bool {
        self.0 == [0, 0, 0, 0]
    }

    /// Complex conjugation: ζ ↦ ζ⁻¹ = −ζ³, fixing the coordinate lattice.
    pub fn conj(self) -> Self {
        let [c0, c1, c2, c3] = self.0;
        Self([c0, -c3, -c2, -c1])
    }

    /// `Some(n)` iff the element is the rational integer n.
    pub fn as_integer(self) -> Option<i64> {
        let [c0, c1, c2, c3] = self.0;
        (c1 == 0 && c2 == 0 && c3 == 0).then_some(c0)
    }

    /// `Some((re, im))` iff the element lies in ℤ[i].
    pub fn as_gaussian(self) -> Option<(i64, i64)> {
        let [c0, c1, c2, c3] = self.0;
        (c1 == 0 && c3 == 0).then_some((c0, c2))
    }

    /// |x|² = x·x̄, which is a rational integer for Gaussian x (and lands in
    /// ℤ[√2] in general — `None` in that case).
    pub fn norm(self) -> Option<i64> {
        (self * self.conj()).as_integer()
    }

    /// 2·ℜ(x) = x + x̄ when that is a rational integer.
    pub fn twice_re(self) -> Option<i64> {
        (self + self.conj()).as_integer()
    }

    /// 2·ℑ(x) = −i(x − x̄) when that is a rational integer.
    pub fn twice_im(self) -> Option<i64> {
        (-Self::I * (self - self.conj())).as_integer()
    }
}

impl Add for Zeta8 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|k| self.0[k] + rhs.0[k]))
    }
}

impl Sub for Zeta8 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|k| self.0[k] - rhs.0[k]))
    }
}

impl Neg for Zeta8 {
    type Output = Self;
    fn neg(self) -> Self {
        Self(std::array::from_fn(|k| -self.0[k]))
    }
}

impl Mul for Zeta8 {
    type Output = Self;
    /// Negacyclic convolution: ζ^k wraps to −ζ^{k−4} past degree 3.
    fn mul(self, rhs: Self) -> Self {
        let mut out = [0i64; 4];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.0.iter().enumerate() {
                let k = i + j;
                if k < 4 {
                    out[k] += a * b;
                } else {
                    out[k - 4] -= a * b;
                }
            }
        }
        Self(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zeta_powers_wrap_with_a_sign() {
        let z = Zeta8::ZETA;
        assert_eq!(z * z, Zeta8::I);
        assert_eq!(z * z * z * z, -Zeta8::ONE);
        // ζ·ζ³ = ζ⁴ = −1.
        assert_eq!(z * Zeta8([0, 0, 0, 1]), -Zeta8::ONE);
    }

    #[test]
    fn sqrt_two_squares_to_two() {
        // √2 = ζ − ζ³.
        let sqrt2 = Zeta8([0, 1, 0, -1]);
        assert_eq!(sqrt2 * sqrt2, Zeta8::integer(2));
        assert_eq!(sqrt2.conj(), sqrt2);
    }

    #[test]
    fn gaussian_embedding_round_trips() {
        let x = Zeta8::gaussian(3, -4);
        assert_eq!(x.as_gaussian(), Some((3, -4)));
        assert_eq!(x.norm(), Some(25));
        assert_eq!(x.conj(), Zeta8::gaussian(3, 4));
        assert_eq!(Zeta8::ZETA.as_gaussian(), None);
    }

    #[test]
    fn real_and_imaginary_doubles_are_exact() {
        let x = Zeta8::gaussian(2, -5);
        assert_eq!(x.twice_re(), Some(4));
        assert_eq!(x.twice_im(), Some(-10));
        // ζ has 2ℜ(ζ) = √2 ∉ ℤ.
        assert_eq!(Zeta8::ZETA.twice_re(), None);
    }

    proptest! {
        #[test]
        fn conjugation_is_a_ring_involution(
            a in proptest::array::uniform4(-9i64..=9),
            b in proptest::array::uniform4(-9i64..=9),
        ) {
            let (x, y) = (Zeta8(a), Zeta8(b));
            prop_assert_eq!(x.conj().conj(), x);
            prop_assert_eq!((x * y).conj(), x.conj() * y.conj());
            prop_assert_eq!((x + y).conj(), x.conj() + y.conj());
        }

        #[test]
        fn multiplication_is_commutative_and_associative(
            a in proptest::array::uniform4(-9i64..=9),
            b in proptest::array::uniform4(-9i64..=9),
            c in proptest::array::uniform4(-9i64..=9),
        ) {
            let (x, y, z) = (Zeta8(a), Zeta8(b), Zeta8(c));
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!((x * y) * z, x * (y * z));
            prop_assert_eq!(x * (y + z), x * y + x * z);
        }
    }
}
