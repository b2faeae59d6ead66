//! Exact representation counting.
//!
//! Writing a solution as a pair of Gaussian integers `α = x + iy`,
//! `β = z + it` and `γ = C − Bi`, the form factors through two completion
//! identities (both follow from `A·D − B² − C² = a0²`):
//!
//! ```text
//! A·f = |A·α + 2γ̄·β|² + 4·a0²·|β|²      ⟹  4·a0²·(z² + t²) ≤ m·A
//! D·f = |2D·β + γ·α|²  +    a0²·|α|²     ⟹      a0²·(x² + y²) ≤ m·D
//! ```
//!
//! so every representation of `m` lies in an exact integer cage.  The sweep
//! walks the `(x, y, z)` cage and solves the residual quadratic
//! `4D·t² + 4v·t + c = 0` for `t`, accepting only perfect-square
//! discriminants with divisible roots.  Everything is integer arithmetic;
//! no float bound can silently clip a lattice point.

use std::ops::ControlFlow;

use crate::gaussian::{gaussian_gcd, GaussianInt};
use crate::ideals::moebius_ideals;
use crate::{FormError, QuadForm, Result};

/// Largest target the exhaustive counter accepts by default.  The sweep
/// visits O(m^{3/2} / a0³) lattice points, so this keeps a single count well
/// under a second; sweeps that genuinely need more raise it explicitly.
pub const DEFAULT_SEARCH_BUDGET: i64 = 2_000_000;

/// Route used by [`count_primitive`]; both must agree everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimitiveMethod {
    /// Filter each representation through a Gaussian-integer gcd test.
    Direct,
    /// Möbius inversion over squarefree Gaussian ideals of norm dividing m.
    Moebius,
}

/// Floor of `√n` for `n ≥ 0`.
fn isqrt(n: i64) -> i64 {
    n.isqrt()
}

/// Visits every `(x, y, z, t)` with `f(x, y, z, t) = m`, in lexicographic
/// order of `(x, y, z, t)`; the visitor can break out early.
fn sweep(
    f: &QuadForm,
    m: i64,
    mut visit: impl FnMut(i64, i64, i64, i64) -> ControlFlow<()>,
) {
    let (a, b, c, d) = (f.a_coeff, f.b_coeff, f.c_coeff, f.d_coeff);
    let a0sq = f.a0 * f.a0;

    // Cage from D·f = |2Dβ + γα|² + a0²|α|².
    let x_max = isqrt(m * d / a0sq);
    'cage: for x in -x_max..=x_max {
        let y_budget = m * d - a0sq * x * x;
        let y_max = isqrt(y_budget / a0sq);
        for y in -y_max..=y_max {
            let u = c * x - b * y;
            let v = b * x + c * y;
            let xy = x * x + y * y;
            // Cage from A·f = |Aα + 2γ̄β|² + 4a0²|β|².
            let z_max = isqrt(m * a / (4 * a0sq));
            for z in -z_max..=z_max {
                let rem = a * xy + 4 * d * z * z + 4 * u * z - m;
                let disc = v * v - d * rem;
                if disc < 0 {
                    continue;
                }
                let s = isqrt(disc);
                if s * s != disc {
                    continue;
                }
                let roots: &[i64] = if s == 0 { &[-v] } else { &[-v - s, -v + s] };
                for &num in roots {
                    if num.rem_euclid(2 * d) == 0 {
                        let t = num / (2 * d);
                        debug_assert_eq!(f.eval(x, y, z, t), m);
                        debug_assert_eq!(
                            (2 * d * z + u).pow(2) + (2 * d * t + v).pow(2),
                            d * m - a0sq * xy,
                        );
                        if visit(x, y, z, t).is_break() {
                            break 'cage;
                        }
                    }
                }
            }
        }
    }
}

fn check_target(f: &QuadForm, m: i64, budget: i64) -> Result<()> {
    if m < 1 {
        return Err(FormError::NonPositiveTarget { m });
    }
    if m > budget {
        return Err(FormError::SearchBudget { m, budget });
    }
    debug_assert!(f.a_coeff > 0 && f.d_coeff > 0);
    Ok(())
}

/// Number of integer solutions of `f(x, y, z, t) = m` (all solutions,
/// primitive or not).
///
/// # Errors
///
/// Rejects `m < 1` and targets beyond [`DEFAULT_SEARCH_BUDGET`]; see
/// [`count_representations_with_budget`] for the latter.
pub fn count_representations(f: &QuadForm, m: i64) -> Result<u64> {
    count_representations_with_budget(f, m, DEFAULT_SEARCH_BUDGET)
}

/// [`count_representations`] with an explicit search budget.
pub fn count_representations_with_budget(f: &QuadForm, m: i64, budget: i64) -> Result<u64> {
    check_target(f, m, budget)?;
    let mut n = 0u64;
    sweep(f, m, |_, _, _, _| {
        n += 1;
        ControlFlow::Continue(())
    });
    Ok(n)
}

/// All integer solutions of `f(x, y, z, t) = m`, in lexicographic order.
pub fn representations(f: &QuadForm, m: i64) -> Result<Vec<[i64; 4]>> {
    check_target(f, m, DEFAULT_SEARCH_BUDGET)?;
    let mut out = Vec::new();
    sweep(f, m, |x, y, z, t| {
        out.push([x, y, z, t]);
        ControlFlow::Continue(())
    });
    Ok(out)
}

/// First representation of `m` (in the sweep's lexicographic order)
/// accepted by `accept`, or `None` when no accepted solution exists.
///
/// The walk stops at the first hit, so witness searches over targets with
/// plentiful representations touch only a small prefix of the cage; a
/// `None` still costs the full sweep.
pub fn find_representation(
    f: &QuadForm,
    m: i64,
    budget: i64,
    mut accept: impl FnMut(&[i64; 4]) -> bool,
) -> Result<Option<[i64; 4]>> {
    check_target(f, m, budget)?;
    let mut found = None;
    sweep(f, m, |x, y, z, t| {
        let candidate = [x, y, z, t];
        if accept(&candidate) {
            found = Some(candidate);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(found)
}

/// Number of primitive representations of `m`, counted up to the four-unit
/// action `(α, β) ↦ (εα, εβ)`, ε ∈ {±1, ±i} — i.e. the raw primitive lattice
/// count divided by 4.  A pair is primitive when `gcd(x + iy, z + it)` is a
/// unit in ℤ[i].
///
/// Both methods compute the same quantity by unrelated routes; their
/// agreement is a standing cross-check of the counter and of the ideal
/// enumeration.
pub fn count_primitive(f: &QuadForm, m: i64, method: PrimitiveMethod) -> Result<u64> {
    check_target(f, m, DEFAULT_SEARCH_BUDGET)?;
    let raw: i64 = match method {
        PrimitiveMethod::Direct => {
            let mut n = 0i64;
            sweep(f, m, |x, y, z, t| {
                let g = gaussian_gcd(GaussianInt::new(x, y), GaussianInt::new(z, t))
                    .expect("m ≥ 1 excludes the zero pair");
                if g.is_unit() {
                    n += 1;
                }
                ControlFlow::Continue(())
            });
            n
        }
        PrimitiveMethod::Moebius => {
            let mut n = 0i64;
            for class in moebius_ideals(m) {
                let inner = count_representations(f, m / class.norm)? as i64;
                n += i64::from(class.mu) * i64::from(class.count) * inner;
            }
            n
        }
    };
    // The unit action is free away from the zero pair, so 4 | raw.
    assert!(raw >= 0 && raw % 4 == 0, "unit orbits must have size 4 (raw = {raw})");
    Ok((raw / 4) as u64)
}
