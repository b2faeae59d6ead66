use serde::{Deserialize, Serialize};

use crate::Octuple;

/// The five involutions generating the packing group.
///
/// `A1`–`A4` replace one curvature by its pair partner (`bᵢ ← 2ω − bᵢ`);
/// `A5` replaces `ω` by the second root `ω′ = a+b+c+d − ω` of the quadratic
/// curvature identity. Each is an involution, and each preserves both the
/// identity and the gcd of the entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    /// Flip `a ← 2ω − a`.
    A1,
    /// Flip `b ← 2ω − b`.
    A2,
    /// Flip `c ← 2ω − c`.
    A3,
    /// Flip `d ← 2ω − d`.
    A4,
    /// Swap the omega root: `ω ← a+b+c+d − ω`.
    A5,
}

impl Generator {
    /// All five generators in index order.
    pub const ALL: [Generator; 5] = [
        Generator::A1,
        Generator::A2,
        Generator::A3,
        Generator::A4,
        Generator::A5,
    ];

    /// 1-based index (`A1 → 1`, …, `A5 → 5`).
    #[inline]
    pub fn index(self) -> usize {
        match self {
            Generator::A1 => 1,
            Generator::A2 => 2,
            Generator::A3 => 3,
            Generator::A4 => 4,
            Generator::A5 => 5,
        }
    }
}

/// The 5×5 integer matrix of a generator, acting on column vectors
/// `(a, b, c, d, ω)ᵗ` by left multiplication.
///
/// The closed-form flips in [`apply_generator`] are the hot path; the
/// matrices exist so tests can verify the two agree and that each matrix
/// squares to the identity.
pub fn generator_matrix(g: Generator) -> [[i64; 5]; 5] {
    let mut m = [[0i64; 5]; 5];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    match g {
        Generator::A1 | Generator::A2 | Generator::A3 | Generator::A4 => {
            let i = g.index() - 1;
            m[i][i] = -1;
            m[i][4] = 2;
        }
        Generator::A5 => {
            m[4] = [1, 1, 1, 1, -1];
        }
    }
    m
}

/// Applies a generator to an octuple. The result satisfies the quadratic
/// curvature identity whenever the input does, and applying the same
/// generator twice returns the input.
#[inline]
pub fn apply_generator(g: Generator, v: Octuple) -> Octuple {
    let w2 = 2 * v.omega;
    match g {
        Generator::A1 => Octuple::new_unchecked(w2 - v.a, v.b, v.c, v.d, v.omega),
        Generator::A2 => Octuple::new_unchecked(v.a, w2 - v.b, v.c, v.d, v.omega),
        Generator::A3 => Octuple::new_unchecked(v.a, v.b, w2 - v.c, v.d, v.omega),
        Generator::A4 => Octuple::new_unchecked(v.a, v.b, v.c, w2 - v.d, v.omega),
        Generator::A5 => {
            Octuple::new_unchecked(v.a, v.b, v.c, v.d, v.curvature_sum() - v.omega)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat_mul(x: &[[i64; 5]; 5], y: &[[i64; 5]; 5]) -> [[i64; 5]; 5] {
        let mut out = [[0i64; 5]; 5];
        for i in 0..5 {
            for k in 0..5 {
                for j in 0..5 {
                    out[i][j] += x[i][k] * y[k][j];
                }
            }
        }
        out
    }

    fn identity() -> [[i64; 5]; 5] {
        let mut m = [[0i64; 5]; 5];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        m
    }

    #[test]
    fn each_generator_matrix_is_an_involution() {
        for g in Generator::ALL {
            let m = generator_matrix(g);
            assert_eq!(mat_mul(&m, &m), identity(), "{g:?}² ≠ I");
        }
    }

    #[test]
    fn apply_matches_matrix_action() {
        let v = Octuple::new(2, 0, 1, 1, 3).unwrap();
        let col = v.entries();
        for g in Generator::ALL {
            let m = generator_matrix(g);
            let mut out = [0i64; 5];
            for i in 0..5 {
                for j in 0..5 {
                    out[i] += m[i][j] * col[j];
                }
            }
            assert_eq!(apply_generator(g, v).entries(), out, "{g:?}");
        }
    }

    #[test]
    fn omega_swap_fixes_double_root() {
        // (0,0,1,1,1) has ω = ω′ = 1, so A5 fixes it.
        let v = Octuple::new(0, 0, 1, 1, 1).unwrap();
        assert_eq!(apply_generator(Generator::A5, v), v);
    }

    #[test]
    fn omega_swap_moves_between_roots() {
        let v = Octuple::new(2, 0, 1, 1, 3).unwrap();
        let w = apply_generator(Generator::A5, v);
        assert_eq!(w, Octuple::new(2, 0, 1, 1, 1).unwrap());
        assert_eq!(apply_generator(Generator::A5, w), v);
    }

    #[test]
    fn flip_replaces_single_curvature() {
        let v = Octuple::new(0, 0, 1, 1, 1).unwrap();
        assert_eq!(
            apply_generator(Generator::A1, v),
            Octuple::new(2, 0, 1, 1, 1).unwrap()
        );
    }

    #[test]
    fn hidden_relation_omega_flip_pairs_have_order_four() {
        // (A5·Ai)⁴ = I: the action is NOT a free product of involutions.
        // This is why naive non-backtracking orbit walks revisit octuples.
        let v = Octuple::new(2, 0, 1, 1, 3).unwrap();
        for g in [Generator::A1, Generator::A2, Generator::A3, Generator::A4] {
            let mut w = v;
            for _ in 0..4 {
                w = apply_generator(Generator::A5, apply_generator(g, w));
            }
            assert_eq!(w, v, "(A5·{g:?})⁴ should fix every octuple");
        }
    }
}
