//! Exhaustive breadth-first oracle for validating the pruned traversal.

use std::collections::{BTreeSet, HashSet};

use octuple_algebra::{apply_generator, reduce_to_root, Generator, Octuple};

use crate::{EnumerationError, Result};

/// Depth guard for [`enumerate_exhaustive`].
///
/// Cost grows roughly 2.4× per level; 14 levels from the reference root is
/// ~50k distinct octuples. The guard sits where it does because curvature
/// sets below 200 keep acquiring members through depth 11 and need two
/// silent passes (depth 13) to certify stabilization.
pub const MAX_ORACLE_DEPTH: u8 = 14;

/// Every distinct octuple reachable from the root of `seed` by generator
/// words of length at most `depth`, by plain breadth-first search.
///
/// Octuples are identified up to quadruple order — the visited key is the
/// sorted quadruple plus ω, and the returned representatives carry sorted
/// quadruples (generator images of a permuted octuple are the same
/// permutation of the images, so the quotient walk preserves curvature
/// data). The result is sorted and deduplicated.
///
/// This is the *oracle*: deliberately simple, memory-hungry, and
/// independent of the canonical-tree acceptance and pruning rules it
/// validates.
///
/// # Errors
///
/// [`EnumerationError::DepthTooLarge`] past [`MAX_ORACLE_DEPTH`];
/// propagates seed reduction failures.
pub fn enumerate_exhaustive(seed: &Octuple, depth: u8) -> Result<Vec<Octuple>> {
    if depth > MAX_ORACLE_DEPTH {
        return Err(EnumerationError::DepthTooLarge {
            depth,
            max: MAX_ORACLE_DEPTH,
        });
    }
    let root = sorted_representative(&reduce_to_root(seed)?);
    let mut visited: HashSet<[i64; 5]> = HashSet::from([root.entries()]);
    let mut layer = vec![root];
    let mut all = vec![root];
    for _ in 0..depth {
        let mut next = Vec::new();
        for v in &layer {
            for g in Generator::ALL {
                let image = sorted_representative(&apply_generator(g, *v));
                if visited.insert(image.entries()) {
                    next.push(image);
                    all.push(image);
                }
            }
        }
        layer = next;
    }
    all.sort();
    all
        .windows(2)
        .for_each(|w| debug_assert_ne!(w[0], w[1], "visited set must deduplicate"));
    Ok(all)
}

/// The curvature set of the packing of `seed` at or below `bound`, computed
/// purely by the exhaustive oracle.
///
/// Runs breadth-first passes of increasing depth, extracting all eight
/// curvatures of every octuple, until two consecutive passes contribute no
/// new value at or below the bound (a single silent pass is not enough: the
/// reference root's first pass adds nothing while deeper passes do). Depths
/// are capped by [`MAX_ORACLE_DEPTH`], which certifies bounds up to 200
/// from small roots.
pub fn oracle_curvature_set(seed: &Octuple, bound: i64) -> Result<BTreeSet<i64>> {
    let mut set = BTreeSet::new();
    let mut silent_passes = 0u8;
    for depth in 0..=MAX_ORACLE_DEPTH {
        let mut grew = false;
        for octuple in enumerate_exhaustive(seed, depth)? {
            for value in octuple.eight_curvatures() {
                if value <= bound && set.insert(value) {
                    grew = true;
                }
            }
        }
        silent_passes = if grew { 0 } else { silent_passes + 1 };
        if silent_passes >= 2 && depth >= 2 {
            break;
        }
    }
    Ok(set)
}

/// Reorders the quadruple ascending (the identity is symmetric in the four
/// curvatures, so this stays a valid octuple).
fn sorted_representative(v: &Octuple) -> Octuple {
    let mut q = v.quadruple();
    q.sort_unstable();
    Octuple::new(q[0], q[1], q[2], q[3], v.omega)
        .expect("sorting the quadruple preserves the identity")
}
