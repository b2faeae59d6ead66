//! Orbit-level invariants of the generator action, exercised on random
//! words over several distinct packing orbits. These are falsification
//! tests: each property is attacked with randomized words and fails loudly
//! on the first counterexample.

use octuple_algebra::{
    apply_generator, check_parity, normalize_seed, reduce_to_root, solve_omega, Generator,
    Octuple, OmegaRoots,
};
use proptest::prelude::*;

/// Scans small curvature quadruples, keeps those whose omega discriminant is
/// a perfect square, and reduces each to its orbit representative. Returns
/// the distinct primitive roots found — a pool of genuinely different orbits
/// for randomized testing.
fn derived_roots(limit: usize) -> Vec<Octuple> {
    let mut roots = Vec::new();
    'scan: for a in -6i64..=0 {
        for b in a..=24 {
            for c in b..=24 {
                for d in c..=24 {
                    let Ok(OmegaRoots::Exact(lo, _)) = solve_omega(a, b, c, d) else {
                        continue;
                    };
                    // Integer roots on the packing cone only (ω > 0; the
                    // mirrored all-negative cone is rejected by reduction).
                    if !lo.is_integer() || lo.to_integer() <= 0 {
                        continue;
                    }
                    let Ok(v) = Octuple::new(a, b, c, d, lo.to_integer()) else {
                        continue;
                    };
                    if !v.is_primitive() {
                        continue;
                    }
                    let root = reduce_to_root(&v).unwrap();
                    if !roots.contains(&root) {
                        roots.push(root);
                        if roots.len() == limit {
                            break 'scan;
                        }
                    }
                }
            }
        }
    }
    roots
}

fn apply_word(start: Octuple, word: &[usize]) -> Octuple {
    word.iter()
        .fold(start, |v, &g| apply_generator(Generator::ALL[g], v))
}

fn root_pool() -> &'static [Octuple] {
    use std::sync::OnceLock;
    static POOL: OnceLock<Vec<Octuple>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut pool = vec![Octuple::new(0, 0, 1, 1, 1).unwrap()];
        for r in derived_roots(10) {
            if !pool.contains(&r) {
                pool.push(r);
            }
        }
        pool
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// The quadratic curvature identity survives arbitrary words.
    #[test]
    fn word_action_preserves_identity(
        root_idx in 0usize..11,
        word in prop::collection::vec(0usize..5, 0..12),
    ) {
        let pool = root_pool();
        let start = pool[root_idx % pool.len()];
        let v = apply_word(start, &word);
        prop_assert_eq!(v.identity_residual(), Some(0));
    }

    /// Every generator is an involution at the octuple level.
    #[test]
    fn generators_are_involutions(
        root_idx in 0usize..11,
        word in prop::collection::vec(0usize..5, 0..8),
        g in 0usize..5,
    ) {
        let pool = root_pool();
        let v = apply_word(pool[root_idx % pool.len()], &word);
        let g = Generator::ALL[g];
        prop_assert_eq!(apply_generator(g, apply_generator(g, v)), v);
    }

    /// The entry gcd is constant along any orbit.
    #[test]
    fn gcd_is_orbit_invariant(
        root_idx in 0usize..11,
        word in prop::collection::vec(0usize..5, 0..12),
    ) {
        let pool = root_pool();
        let start = pool[root_idx % pool.len()];
        let v = apply_word(start, &word);
        prop_assert_eq!(v.entry_gcd(), start.entry_gcd());
    }

    /// The common mod-4 residue of the odd curvatures is constant along any
    /// primitive orbit, and the parity laws never trip.
    #[test]
    fn odd_residue_is_orbit_invariant(
        root_idx in 0usize..11,
        word in prop::collection::vec(0usize..5, 0..12),
    ) {
        let pool = root_pool();
        let start = pool[root_idx % pool.len()];
        let expected = check_parity(&start).unwrap().odd_residue_mod_4;
        let v = apply_word(start, &word);
        let report = check_parity(&v).unwrap();
        prop_assert_eq!(report.odd_residue_mod_4, expected);
    }

    /// Reduction undoes any word: reduce(word·root) = root.
    #[test]
    fn reduction_inverts_words(
        root_idx in 0usize..11,
        word in prop::collection::vec(0usize..5, 0..12),
    ) {
        let pool = root_pool();
        let start = pool[root_idx % pool.len()];
        let v = apply_word(start, &word);
        prop_assert_eq!(reduce_to_root(&v).unwrap(), start);
    }

    /// Seed normalization always yields a valid seed from any primitive
    /// orbit member's root, and renormalizing is stable.
    #[test]
    fn normalized_seeds_satisfy_seed_invariants(
        root_idx in 0usize..11,
        word in prop::collection::vec(0usize..5, 0..10),
    ) {
        let pool = root_pool();
        let start = pool[root_idx % pool.len()];
        let root = reduce_to_root(&apply_word(start, &word)).unwrap();
        let seed = normalize_seed(&root).unwrap();
        prop_assert_eq!(seed.octuple().identity_residual(), Some(0));
        prop_assert!(seed.a0 != 0 && seed.a0 % 2 == 0);
        prop_assert!(seed.b0 % 2 != 0);
        prop_assert!(seed.a0 + seed.b0 > 0);
        prop_assert!(seed.octuple().is_primitive());
    }
}

#[test]
fn at_least_ten_distinct_orbits_exist_in_the_small_scan() {
    let roots = derived_roots(10);
    assert_eq!(roots.len(), 10, "found only {:?}", roots);
    for r in &roots {
        assert_eq!(reduce_to_root(r).unwrap(), *r, "pool member not a root: {r:?}");
        assert!(r.is_primitive());
    }
}

#[test]
fn eight_curvature_multiset_never_has_two_negatives() {
    // At most one sphere of an octuple can have negative curvature.
    for &root in root_pool() {
        let mut stack = vec![root];
        let mut seen = std::collections::HashSet::new();
        while let Some(v) = stack.pop() {
            if seen.len() > 2000 || !seen.insert(v) {
                continue;
            }
            let negatives = v
                .eight_curvatures()
                .iter()
                .filter(|&&x| x < 0)
                .count();
            // The eight curvatures list both spheres of each of four pairs;
            // a negative (enclosing) sphere appears once.
            assert!(negatives <= 1, "octuple {v:?} has {negatives} negatives");
            for g in Generator::ALL {
                stack.push(apply_generator(g, v));
            }
        }
    }
}
