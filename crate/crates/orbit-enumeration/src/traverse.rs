//! Canonical spanning tree of an octuple orbit.
//!
//! Naive non-backtracking word enumeration revisits orbit elements: the
//! generators satisfy hidden relations such as `(A₅Aᵢ)⁴ = 1`, so distinct
//! words reach equal octuples and a traversal without deduplication loops
//! forever. Instead of a memory-bound visited set, the walk uses a
//! canonical-parent rule that makes the orbit a tree:
//!
//! * A slot `j ≤ 4` of octuple `c` is a *descent* when `c_j > ω`; slot 5 is
//!   a descent when `2ω > c₁+c₂+c₃+c₄`. Applying the generator of a descent
//!   strictly lowers the height `h = c₁+c₂+c₃+c₄+ω`.
//! * The canonical parent of a non-root octuple is its least-index descent.
//!   Every octuple therefore has exactly one parent, heights strictly
//!   decrease toward the root, and the orbit is a tree rooted at the unique
//!   descent-free octuple.
//!
//! [`child_accepted`] inverts that rule in O(1): `Aⱼ(v)` is a child of `v`
//! exactly when slot `j` becomes the least-index descent of the image.
//!
//! Pruning: [`expansion_floor`]`(v) = 2ω − max(v₁..v₄)` bounds every
//! curvature value introduced anywhere below `v`. Proof sketch: an accepted
//! flip at a node with average `ω̃ ≥ ω` introduces `2ω̃ − x` for a slot
//! `x < ω̃`. If `x` is one of `v`'s entries, `2ω̃ − x ≥ 2ω − x ≥` the floor;
//! if `x` was introduced deeper, then by induction `x` exceeds the floor,
//! and `2ω̃ − x > ω̃ > x` exceeds it too. So once the floor passes the
//! bound, the whole subtree is silent and may be dropped. Termination: at
//! most four slot flips can occur between consecutive `ω`-steps (each flip
//! retires a slot below `ω`), and each `ω`-step raises the floor by at
//! least 2, so every unpruned path is finite. An exhaustive breadth-first
//! oracle re-validates all of this at small bounds in the release tests.

use octuple_algebra::{apply_generator, Generator, Octuple};

/// Whether `g` applied to `v` yields a canonical child of `v`.
pub fn child_accepted(v: &Octuple, g: Generator) -> bool {
    let q = v.quadruple();
    let j = g.index(); // 1-based: A1 → 1, …, A5 → 5
    if j <= 4 {
        // The slot must become a descent (q < ω ⟹ flipped value > ω) and
        // no earlier slot may already be one.
        let slot = j - 1;
        q[slot] < v.omega && q[..slot].iter().all(|&x| x <= v.omega)
    } else {
        // The ω-step must ascend (2ω < Σ) and, in the image, no quadruple
        // slot may beat slot 5 to the descent: all entries ≤ Σ − ω.
        let s = v.curvature_sum();
        2 * v.omega < s && q.iter().all(|&x| x <= s - v.omega)
    }
}

/// The canonical children of `v`, in generator order.
pub fn children(v: &Octuple) -> Vec<Octuple> {
    Generator::ALL
        .iter()
        .filter(|&&g| child_accepted(v, g))
        .map(|&g| apply_generator(g, *v))
        .collect()
}

/// Smallest curvature value any descendant of `v` can introduce.
pub fn expansion_floor(v: &Octuple) -> i64 {
    let max = v.quadruple().into_iter().max().expect("four entries");
    2 * v.omega - max
}

/// Pushes the canonical children of `v` onto `stack` without allocating.
pub(crate) fn push_children(v: &Octuple, stack: &mut Vec<Octuple>) {
    for g in Generator::ALL {
        if child_accepted(v, g) {
            stack.push(apply_generator(g, *v));
        }
    }
}
