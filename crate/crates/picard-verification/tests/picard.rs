//! End-to-end checks of the verification chain: packing reflections →
//! block-diagonal Q-isometries → Δ-isometries → ρ-preimages over ℤ[ζ₈] →
//! congruence-subgroup words → certified curvature subsets.

use octuple_algebra::{generator_matrix, Generator, SeedVector};
use orbit_enumeration::{enumerate_curvatures, OrbitOptions};
use picard_verification::{
    conjugate_by_v, explicit_subset, mat4_det, mat4_identity, mat4_mul, mat4_transpose,
    preserves_delta, rho, verify_word_identities, xi_generators, xi_membership,
    CyclotomicMatrix, Mat4, Zeta8, G2, G3, G4, G5, GRAM_DELTA_X2, GRAM_Q, M1, M2, M3, M4, M5,
    M6, T2, T3, T4, T5, U, U_INV, V,
};
use proptest::prelude::*;

const MS: [CyclotomicMatrix; 6] = [M1, M2, M3, M4, M5, M6];

fn eval_word(word: &[i8]) -> CyclotomicMatrix {
    let mut acc = CyclotomicMatrix::identity();
    for &s in word {
        let m = MS[usize::from(s.unsigned_abs()) - 1];
        acc = acc.mul(&if s < 0 { m.inverse().unwrap() } else { m });
    }
    acc
}

#[test]
fn every_word_identity_verifies_exactly() {
    let checks = verify_word_identities().expect("identity suite must pass");
    assert_eq!(checks.len(), 7);
    for c in &checks {
        assert!(c.exact && c.projective && c.rho_consistent, "{}", c.label);
    }
}

#[test]
fn rho_images_of_the_six_generators_are_the_reflection_pairs() {
    let pairs: [(CyclotomicMatrix, Mat4, Mat4); 6] = [
        (M1, G2, G3),
        (M2, G2, G4),
        (M3, G2, G5),
        (M4, G3, G4),
        (M5, G3, G5),
        (M6, G4, G5),
    ];
    for (m, ga, gb) in pairs {
        assert_eq!(rho(&m).unwrap(), mat4_mul(&ga, &gb));
    }
}

#[test]
fn rho_images_lie_in_the_special_delta_orthogonal_group() {
    for m in MS {
        let r = rho(&m).unwrap();
        assert!(preserves_delta(&r));
        assert_eq!(mat4_det(&r), 1);
        let inv = rho(&m.inverse().unwrap()).unwrap();
        assert_eq!(mat4_mul(&r, &inv), mat4_identity());
    }
}

#[test]
fn v_transports_between_the_q_and_delta_worlds() {
    // Q in (b, c, d, ω) coordinates pulls back through V to twice the
    // Δ Gram matrix in (A, B, C, D) coordinates...
    let pulled = mat4_mul(&mat4_transpose(&V), &mat4_mul(&GRAM_Q, &V));
    assert_eq!(pulled, GRAM_DELTA_X2);
    // ...and V intertwines the reflection actions on the two sides.
    for (g, t) in [(G2, T2), (G3, T3), (G4, T4), (G5, T5)] {
        assert_eq!(mat4_mul(&V, &g), mat4_mul(&t, &V));
        let fixed = mat4_mul(&mat4_transpose(&t), &mat4_mul(&GRAM_Q, &t));
        assert_eq!(fixed, GRAM_Q);
    }
}

#[test]
fn packing_reflections_block_diagonalize_over_the_shear_basis() {
    fn mat5_mul(a: &[[i64; 5]; 5], b: &[[i64; 5]; 5]) -> [[i64; 5]; 5] {
        std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..5).map(|k| a[i][k] * b[k][j]).sum())
        })
    }
    fn block(t: &Mat4) -> [[i64; 5]; 5] {
        let mut m = [[0i64; 5]; 5];
        m[0][0] = 1;
        for i in 0..4 {
            for j in 0..4 {
                m[i + 1][j + 1] = t[i][j];
            }
        }
        m
    }
    // The four reflections fixing the first curvature slot become
    // diag(1, Tⱼ) after the shear change of basis; the remaining one (A1)
    // moves the first slot and has no block form.
    let cases = [
        (Generator::A2, T2),
        (Generator::A3, T3),
        (Generator::A4, T4),
        (Generator::A5, T5),
    ];
    for (g, t) in cases {
        let conj = mat5_mul(&U_INV, &mat5_mul(&generator_matrix(g), &U));
        assert_eq!(conj, block(&t));
    }
    let a1 = mat5_mul(&U_INV, &mat5_mul(&generator_matrix(Generator::A1), &U));
    assert_ne!(a1[0], [1, 0, 0, 0, 0], "A1 must not fix the first slot");
}

#[test]
fn xi_generators_conjugate_to_integral_q_isometries() {
    for xi in xi_generators() {
        let r = rho(&xi).unwrap();
        assert!(preserves_delta(&r));
        let q_side = conjugate_by_v(&r).expect("V-conjugate must be integral");
        let fixed = mat4_mul(&mat4_transpose(&q_side), &mat4_mul(&GRAM_Q, &q_side));
        assert_eq!(fixed, GRAM_Q);
        assert_eq!(mat4_det(&q_side), 1);
    }
}

#[test]
fn membership_test_agrees_on_known_points() {
    assert!(xi_membership(&CyclotomicMatrix::gaussian([
        [(1, 0), (2, 0)],
        [(0, 0), (1, 0)]
    ])));
    assert!(xi_membership(&CyclotomicMatrix::gaussian([
        [(0, 1), (0, 0)],
        [(0, 0), (0, -1)]
    ])));
    assert!(!xi_membership(&CyclotomicMatrix::gaussian([
        [(0, 0), (-1, 0)],
        [(1, 0), (0, 0)]
    ])));
    // The ρ-preimages themselves are *not* all in Ξ: M₁ is the standard
    // counterexample, so membership is strictly finer than ρ-integrality.
    assert!(!xi_membership(&M1));
}

#[test]
fn explicit_subset_is_contained_in_the_enumerated_orbit() {
    let seed = SeedVector::new(2, 1, 0, 1, 1).unwrap();
    let bound = 300;
    let table = enumerate_curvatures(&seed.octuple(), bound, &OrbitOptions::default())
        .expect("orbit enumeration");
    let emitted = explicit_subset(&seed, 3).expect("subset enumeration");

    assert!(emitted.contains(&seed.b0), "identity word present");
    let in_range: Vec<i64> = emitted
        .iter()
        .copied()
        .filter(|&m| (0..=bound).contains(&m))
        .collect();
    assert!(in_range.len() > 40, "expected a rich certified subset");
    for m in in_range {
        assert!(table.contains(m), "certified curvature {m} missing from orbit");
    }
}

#[test]
fn subset_emissions_respect_the_odd_residue_class() {
    let seed = SeedVector::new(2, 1, 0, 1, 1).unwrap();
    let emitted = explicit_subset(&seed, 3).unwrap();
    for m in emitted {
        if m.rem_euclid(2) == 1 {
            assert_eq!(m.rem_euclid(4), seed.b0.rem_euclid(4));
        }
    }
}

fn word_strategy() -> impl Strategy<Value = Vec<i8>> {
    prop::collection::vec((1i8..=6, prop::bool::ANY), 0..6).prop_map(|steps| {
        steps
            .into_iter()
            .map(|(j, inv)| if inv { -j } else { j })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// ρ is multiplicative and lands in SO_Δ on random words in M₁…M₆.
    #[test]
    fn rho_is_multiplicative_on_random_words(w1 in word_strategy(), w2 in word_strategy()) {
        let m1 = eval_word(&w1);
        let m2 = eval_word(&w2);
        let product = m1.mul(&m2);
        prop_assert_eq!(m1.det() * m2.det(), product.det());
        prop_assert_eq!(product.det(), Zeta8::ONE);
        let r1 = rho(&m1).unwrap();
        let r2 = rho(&m2).unwrap();
        let rp = rho(&product).unwrap();
        prop_assert_eq!(rp, mat4_mul(&r1, &r2));
        prop_assert!(preserves_delta(&rp));
    }

    /// ρ collapses the sign: M and −M have the same image, so the morphism
    /// is honestly defined on the projective group.
    #[test]
    fn rho_is_sign_blind(w in word_strategy()) {
        let m = eval_word(&w);
        prop_assert_eq!(rho(&m).unwrap(), rho(&m.neg()).unwrap());
    }

    /// Ξ membership is invariant under products with the generator set.
    #[test]
    fn xi_membership_closed_under_generator_action(
        picks in prop::collection::vec((0usize..8, prop::bool::ANY), 1..8)
    ) {
        let gens = xi_generators();
        let mut acc = CyclotomicMatrix::identity();
        for (idx, inv) in picks {
            let g = if inv { gens[idx].inverse().unwrap() } else { gens[idx] };
            acc = acc.mul(&g);
            prop_assert!(xi_membership(&acc));
        }
    }
}
