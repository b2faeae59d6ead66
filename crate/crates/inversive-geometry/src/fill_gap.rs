use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::fmatrix::FMatrix;
use crate::matrices::product_of_rows;
use crate::rational::{rat, rat_to_f64, Rat, Vec5};
use crate::sphere::Sphere;
use crate::{InversiveError, Result};

/// Completes four mutually tangent spheres into the two octuples that
/// inscribe them.
///
/// The completing row `w` satisfies the four tangency equations
/// `w·W·a(Sⱼ)ᵗ = −1` (rank-4 linear system) together with the quadratic
/// normalization `w·W·wᵗ = −1`; the two solutions are the pair-average rows
/// of the two octuples and satisfy `w + w′ = Σⱼ a(Sⱼ)`. The eight inscribed
/// spheres of each octuple are `2w − a(Sⱼ)`.
///
/// Branch order is deterministic: the solution with the smaller bend entry
/// `w₂` first, ties broken lexicographically over the whole row.
///
/// With `known_w` supplied, the linear solve is skipped: the row is
/// verified against all five equations and paired with `Σⱼ a(Sⱼ) − w`.
///
/// # Errors
///
/// [`InversiveError::NotMutuallyTangent`] when any pairwise inversive
/// product differs from −1; [`InversiveError::KnownRowInvalid`] when a
/// supplied `known_w` fails its defining equations.
///
/// The remaining variants are defensive. For rows that pass the exact
/// tangency check the completion is `w = Σⱼa(Sⱼ)/2 ± n/√(n·W·nᵗ)` where `n`
/// spans the W-orthogonal complement of the four rows, and the Gram
/// determinants (−16 for the span, −1/4 for the ambient form) force
/// `n·W·nᵗ` to be a positive rational square — so the branch discriminant
/// is always a square and both completions exist exactly.
/// [`InversiveError::IrrationalGap`] (carrying flagged numeric rows usable
/// only for export) and [`InversiveError::NoRealCompletion`] therefore guard
/// the solver itself against degenerate or corrupted row data rather than
/// any reachable geometric configuration, and
/// [`InversiveError::SingularSystem`] fires only when the four rows fail to
/// span a 4-dimensional space.
pub fn fill_gap(spheres: &[Sphere; 4], known_w: Option<&Vec5>) -> Result<(FMatrix, FMatrix)> {
    for i in 0..4 {
        for j in i + 1..4 {
            let product = product_of_rows(spheres[i].coords(), spheres[j].coords());
            if product != rat(-1) {
                return Err(InversiveError::NotMutuallyTangent { i, j, product });
            }
        }
    }

    let rows: [Vec5; 4] = std::array::from_fn(|i| spheres[i].coords().clone());
    let row_sum: Vec5 = std::array::from_fn(|k| {
        rows.iter().fold(Rat::zero(), |acc, r| acc + &r[k])
    });

    let (w_first, w_second) = match known_w {
        Some(w) => {
            verify_completing_row(&rows, w)?;
            let partner: Vec5 = std::array::from_fn(|k| &row_sum[k] - &w[k]);
            verify_completing_row(&rows, &partner)?;
            (w.clone(), partner)
        }
        None => {
            let (particular, null_dir) = solve_tangency_system(&rows)?;
            solve_branch_quadratic(&particular, &null_dir)?
        }
    };

    debug_assert_eq!(
        std::array::from_fn::<Rat, 5, _>(|k| &w_first[k] + &w_second[k]),
        row_sum,
        "the two completing rows must sum to the sphere-row sum"
    );

    let (lo, hi) = order_branches(w_first, w_second);
    let f_lo = FMatrix::new(rows.clone(), lo);
    let f_hi = FMatrix::new(rows, hi);
    debug_assert!(f_lo.satisfies_gram_identity());
    debug_assert!(f_hi.satisfies_gram_identity());
    Ok((f_lo, f_hi))
}

/// Checks `w·W·a(Sⱼ)ᵗ = −1` for all rows and `w·W·wᵗ = −1`.
fn verify_completing_row(rows: &[Vec5; 4], w: &Vec5) -> Result<()> {
    for (j, row) in rows.iter().enumerate() {
        let value = product_of_rows(w, row);
        if value != rat(-1) {
            return Err(InversiveError::KnownRowInvalid {
                which: format!("tangency equation against sphere row {j}"),
                value,
            });
        }
    }
    let value = product_of_rows(w, w);
    if value != rat(-1) {
        return Err(InversiveError::KnownRowInvalid {
            which: "self normalization".to_string(),
            value,
        });
    }
    Ok(())
}

/// Solves the rank-4 linear system `w·W·a(Sⱼ)ᵗ = −1` by exact Gauss–Jordan
/// elimination, returning a particular solution and the 1-dimensional
/// nullspace direction.
fn solve_tangency_system(rows: &[Vec5; 4]) -> Result<(Vec5, Vec5)> {
    // Equation j has coefficient row (−a₁/2, −a₀/2, a₂, a₃, a₄) from
    // expanding the bilinear form.
    let half = Rat::new(BigInt::from(1), BigInt::from(2));
    let mut aug: Vec<Vec<Rat>> = rows
        .iter()
        .map(|a| {
            vec![
                -(&a[1] * &half),
                -(&a[0] * &half),
                a[2].clone(),
                a[3].clone(),
                a[4].clone(),
                rat(-1), // right-hand side
            ]
        })
        .collect();

    let mut pivot_cols: Vec<usize> = Vec::with_capacity(4);
    let mut pivot_row = 0usize;
    for col in 0..5 {
        let Some(src) = (pivot_row..4).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(pivot_row, src);
        let inv = aug[pivot_row][col].recip();
        for c in col..6 {
            aug[pivot_row][c] = &aug[pivot_row][c] * &inv;
        }
        for r in 0..4 {
            if r != pivot_row && !aug[r][col].is_zero() {
                let factor = aug[r][col].clone();
                for c in col..6 {
                    let sub = &factor * &aug[pivot_row][c];
                    aug[r][c] -= sub;
                }
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
        if pivot_row == 4 {
            break;
        }
    }
    if pivot_cols.len() != 4 {
        return Err(InversiveError::SingularSystem {
            rank: pivot_cols.len(),
        });
    }

    let free_col = (0..5)
        .find(|c| !pivot_cols.contains(c))
        .expect("five columns, four pivots");

    let mut particular: Vec5 = std::array::from_fn(|_| Rat::zero());
    let mut null_dir: Vec5 = std::array::from_fn(|_| Rat::zero());
    null_dir[free_col] = rat(1);
    for (r, &pc) in pivot_cols.iter().enumerate() {
        particular[pc] = aug[r][5].clone();
        null_dir[pc] = -aug[r][free_col].clone();
    }
    Ok((particular, null_dir))
}

/// Solves `(p + t·n)·W·(p + t·n)ᵗ = −1` for `t`, returning the two exact
/// completing rows.
fn solve_branch_quadratic(p: &Vec5, n: &Vec5) -> Result<(Vec5, Vec5)> {
    let alpha = product_of_rows(n, n);
    let beta = product_of_rows(p, n);
    let gamma = product_of_rows(p, p) + rat(1);
    if alpha.is_zero() {
        // The line of solutions meets the quadric once; tangent data always
        // yields two completions, so this is degenerate input.
        return Err(InversiveError::SingularSystem { rank: 4 });
    }
    let disc = &beta * &beta - &alpha * &gamma;
    if disc.is_negative() {
        return Err(InversiveError::NoRealCompletion { discriminant: disc });
    }
    match rational_sqrt(&disc) {
        Some(root) => {
            let t1 = (-&beta + &root) / &alpha;
            let t2 = (-&beta - &root) / &alpha;
            let w1: Vec5 = std::array::from_fn(|k| &p[k] + &t1 * &n[k]);
            let w2: Vec5 = std::array::from_fn(|k| &p[k] + &t2 * &n[k]);
            Ok((w1, w2))
        }
        None => {
            let alpha_f = rat_to_f64(&alpha);
            let beta_f = rat_to_f64(&beta);
            let disc_f = rat_to_f64(&disc).sqrt();
            let t1 = (-beta_f + disc_f) / alpha_f;
            let t2 = (-beta_f - disc_f) / alpha_f;
            let approx = |t: f64| -> [f64; 5] {
                std::array::from_fn(|k| rat_to_f64(&p[k]) + t * rat_to_f64(&n[k]))
            };
            Err(InversiveError::IrrationalGap {
                discriminant: disc,
                w_approx: approx(t1),
                w_alt_approx: approx(t2),
            })
        }
    }
}

/// Exact square root of a nonnegative rational, if it is a rational square.
fn rational_sqrt(x: &Rat) -> Option<Rat> {
    let num_root = x.numer().sqrt();
    let den_root = x.denom().sqrt();
    if &(&num_root * &num_root) == x.numer() && &(&den_root * &den_root) == x.denom() {
        Some(Rat::new(num_root, den_root))
    } else {
        None
    }
}

/// Smaller bend entry first, full-row lexicographic tiebreak.
fn order_branches(a: Vec5, b: Vec5) -> (Vec5, Vec5) {
    let key = |v: &Vec5| (v[1].clone(), v.clone());
    if key(&a) <= key(&b) {
        (a, b)
    } else {
        (b, a)
    }
}
