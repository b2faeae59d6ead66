use crate::{apply_generator, Generator, Octuple, OctupleError, Result};

/// Step cap for [`reduce_to_root`]. Every reduction step strictly decreases
/// the entry sum `a+b+c+d+ω`, so genuine packing data converges in a handful
/// of steps; hitting the cap means the input is corrupt.
pub const REDUCTION_STEP_CAP: u64 = 1_000_000;

/// Reduces an octuple to the canonical representative of its orbit: the
/// unique member with no descending generator move, i.e. `2ω ≤ a+b+c+d` and
/// every curvature `≤ ω`, returned with the quadruple sorted ascending.
///
/// For packing data the result also satisfies the classical root shape
/// `a ≤ 0 ≤ b ≤ c ≤ d ≤ ω ≤ a+b+c+d`. The descent-free condition is the
/// stronger one: e.g. `(0, 1, 1, 2; ω=3)` is sorted with `ω ≤ Σ` yet still
/// descends (via the omega swap, then a flip) to `(0, 0, 1, 1; ω=1)`.
///
/// Loop, mirroring classical Apollonian reduction:
/// 1. if `2ω > a+b+c+d`, swap omega (`A5`);
/// 2. else if some curvature exceeds `ω`, flip the largest offender
///    (smallest index on ties);
/// 3. else sort and stop.
///
/// Each step strictly decreases `a+b+c+d+ω`, which stays positive on
/// packing data (`ω > 0` forces `Σ > 0` through the identity), guaranteeing
/// termination.
///
/// # Errors
///
/// [`OctupleError::MirrorCone`] when `ω ≤ 0`: the identity is homogeneous,
/// so the negation of any packing octuple satisfies it too, but on that
/// mirrored cone descent diverges — such data is not a packing.
/// [`OctupleError::ReductionCap`] if the loop somehow runs
/// [`REDUCTION_STEP_CAP`] steps without reaching a descent-free octuple.
pub fn reduce_to_root(v: &Octuple) -> Result<Octuple> {
    if v.omega <= 0 && v.entries() != [0, 0, 0, 0, 0] {
        return Err(OctupleError::MirrorCone { omega: v.omega });
    }
    let mut cur = *v;
    for _ in 0..REDUCTION_STEP_CAP {
        if 2 * cur.omega > cur.curvature_sum() {
            cur = apply_generator(Generator::A5, cur);
            continue;
        }
        let offender = cur
            .quadruple()
            .into_iter()
            .enumerate()
            .filter(|&(_, x)| x > cur.omega)
            .max_by_key(|&(i, x)| (x, std::cmp::Reverse(i)));
        match offender {
            Some((i, _)) => {
                let flips = [
                    Generator::A1,
                    Generator::A2,
                    Generator::A3,
                    Generator::A4,
                ];
                cur = apply_generator(flips[i], cur);
            }
            None => {
                let mut q = cur.quadruple();
                q.sort_unstable();
                return Ok(Octuple::new_unchecked(q[0], q[1], q[2], q[3], cur.omega));
            }
        }
    }
    Err(OctupleError::ReductionCap {
        steps: REDUCTION_STEP_CAP,
    })
}
