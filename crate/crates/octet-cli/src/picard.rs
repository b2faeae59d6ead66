//! The `picard-check` command: a pass/fail table over the cyclotomic word
//! identities and the matrix invariants tying the 2×2 Gaussian picture to
//! the 4×4 orthogonal one. Every row re-derives its fact from compiled-in
//! constants, so a FAIL always means transcribed group data (or the ρ map)
//! is wrong — the command then exits 4.

use picard_verification::{
    identity_words, mat4_det, mat4_identity, mat4_mul, mat4_transpose, preserves_delta, rho,
    verify_word_identities, xi_generators, xi_membership, CyclotomicMatrix, Mat4, PicardError,
    G2, G3, G4, G5, GRAM_DELTA_X2, GRAM_Q, M1, M2, M3, M4, M5, M6, T2, T3, T4, T5, V,
};
use serde::Serialize;

use crate::error::{CliError, CliResult};

/// One table row.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub passed: bool,
}

fn row(name: &str, passed: bool) -> CheckRow {
    CheckRow {
        name: name.to_string(),
        passed,
    }
}

fn sandwich(m: &Mat4, gram: &Mat4) -> Mat4 {
    mat4_mul(&mat4_mul(&mat4_transpose(m), gram), m)
}

/// Runs every check and returns the table rows in fixed order.
pub fn run_checks() -> Vec<CheckRow> {
    let mut rows = Vec::new();

    // One row per word identity. The library verifier aborts on the first
    // failure; in that case report the failing row and claim nothing about
    // the identities it never reached.
    match verify_word_identities() {
        Ok(checks) => {
            for check in checks {
                rows.push(row(&format!("identity {}", check.label), check.passed()));
            }
        }
        Err(PicardError::IdentityFailed { label }) => {
            rows.push(row(&format!("identity {label}"), false));
        }
        Err(other) => {
            rows.push(row(&format!("identity table aborted: {other}"), false));
        }
    }

    // ρ sends each generator to its documented reflection pair.
    let pairs: [(&str, CyclotomicMatrix, Mat4, Mat4); 6] = [
        ("M1", M1, G2, G3),
        ("M2", M2, G2, G4),
        ("M3", M3, G2, G5),
        ("M4", M4, G3, G4),
        ("M5", M5, G3, G5),
        ("M6", M6, G4, G5),
    ];
    let pairs_ok = pairs
        .iter()
        .all(|(_, m, a, b)| rho(m).is_ok_and(|img| img == mat4_mul(a, b)));
    rows.push(row("rho maps each generator to its g-pair", pairs_ok));

    let gens = [M1, M2, M3, M4, M5, M6];
    let multiplicative = gens.iter().all(|a| {
        gens.iter().all(|b| match (rho(a), rho(b), rho(&a.mul(b))) {
            (Ok(ra), Ok(rb), Ok(rab)) => rab == mat4_mul(&ra, &rb),
            _ => false,
        })
    });
    rows.push(row(
        "rho is multiplicative on generator pairs",
        multiplicative,
    ));

    let gs = [G2, G3, G4, G5];
    let reflections = gs.iter().all(|g| {
        mat4_mul(g, g) == mat4_identity()
            && mat4_det(g) == -1
            && sandwich(g, &GRAM_DELTA_X2) == GRAM_DELTA_X2
    });
    rows.push(row(
        "g generators are reflections fixing the Delta form",
        reflections,
    ));

    let products_special = gs
        .iter()
        .enumerate()
        .all(|(i, a)| {
            gs.iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .all(|(_, b)| preserves_delta(&mat4_mul(a, b)))
        });
    rows.push(row(
        "g-pair products land in the special Delta group",
        products_special,
    ));

    let ts = [T2, T3, T4, T5];
    let transported = gs
        .iter()
        .zip(&ts)
        .all(|(g, t)| mat4_mul(&V, g) == mat4_mul(t, &V));
    rows.push(row("V transports the g action to the T action", transported));

    let t_isometries = ts.iter().all(|t| sandwich(t, &GRAM_Q) == GRAM_Q);
    rows.push(row("T matrices preserve the quaternary form", t_isometries));

    let xi = xi_generators();
    rows.push(row(
        "twist generators pass the congruence membership test",
        xi.iter().all(xi_membership),
    ));

    let conjugates_integral = xi.iter().all(|m| {
        rho(m).is_ok_and(|img| {
            picard_verification::conjugate_by_v(&img)
                .is_ok_and(|c| mat4_det(&c) == 1 && sandwich(&c, &GRAM_Q) == GRAM_Q)
        })
    });
    rows.push(row(
        "rho images conjugate to integral form isometries",
        conjugates_integral,
    ));

    rows
}

/// Renders the table as aligned text with a summary line.
pub fn render_text(rows: &[CheckRow]) -> String {
    let mut out = String::new();
    for r in rows {
        let status = if r.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status}  {}\n", r.name));
    }
    let passed = rows.iter().filter(|r| r.passed).count();
    out.push_str(&format!(
        "{} checks: {} passed, {} failed\n",
        rows.len(),
        passed,
        rows.len() - passed
    ));
    out
}

/// Renders the table as a JSON object.
pub fn render_json(rows: &[CheckRow]) -> String {
    #[derive(Serialize)]
    struct Table<'a> {
        checks: &'a [CheckRow],
        passed: usize,
        failed: usize,
    }
    let passed = rows.iter().filter(|r| r.passed).count();
    let mut text = serde_json::to_string(&Table {
        checks: rows,
        passed,
        failed: rows.len() - passed,
    })
    .expect("check table always serializes");
    text.push('\n');
    text
}

/// Renders the table as two-column CSV.
pub fn render_csv(rows: &[CheckRow]) -> String {
    let mut out = String::from("check,passed\n");
    for r in rows {
        // Names are fixed strings without commas or quotes.
        out.push_str(&format!("{},{}\n", r.name, r.passed));
    }
    out
}

/// Error for the command dispatcher when any row failed.
pub fn all_passed(rows: &[CheckRow]) -> CliResult<()> {
    match rows.iter().find(|r| !r.passed) {
        None => Ok(()),
        Some(r) => Err(CliError::Invariant(format!("check failed: {}", r.name))),
    }
}
