//! The `geometry` command: fill the gap of four mutually tangent spheres,
//! then expand the configuration by generator words and emit every distinct
//! sphere encountered.
//!
//! The walk acts on octuple matrices by *row mixing*: a generator's integer
//! 5×5 matrix multiplies the row stack on the left, so each new row is an
//! integer combination of the old sphere rows and the pair-average row.
//! (This is the octuple action; right multiplication would instead be a
//! Moebius transform of space.)

use std::collections::BTreeSet;

use inversive_geometry::{fill_gap, format_rational, FMatrix, GeometryObject, Rat, Sphere, Vec5};
use num_bigint::BigInt;
use num_traits::Zero;
use octuple_algebra::{generator_matrix, Generator};

use crate::error::{CliError, CliResult};

/// Depth cap: each level multiplies work by four, and the emitted sphere
/// list (not the walk) is the point of this command — deep expansions
/// belong to `enumerate`, which tracks curvatures only.
pub const MAX_GEOMETRY_DEPTH: u8 = 6;

/// Applies an integer generator matrix to the row stack from the left.
fn left_apply(g: &[[i64; 5]; 5], f: &FMatrix) -> FMatrix {
    let rows = f.rows();
    let mixed: [Vec5; 5] = std::array::from_fn(|i| {
        std::array::from_fn(|k| {
            let mut acc = Rat::zero();
            for (coeff, row) in g[i].iter().zip(rows.iter()) {
                if *coeff != 0 {
                    acc += Rat::from_integer(BigInt::from(*coeff)) * &row[k];
                }
            }
            acc
        })
    });
    let [r0, r1, r2, r3, w] = mixed;
    FMatrix::new([r0, r1, r2, r3], w)
}

/// Canonical text key of a coordinate row (`BigRational` is always reduced
/// with a positive denominator, so equal rows stringify identically).
fn row_key(row: &Vec5) -> String {
    let parts: Vec<String> = row.iter().map(format_rational).collect();
    parts.join(",")
}

fn octuple_key(f: &FMatrix) -> String {
    let parts: Vec<String> = f.rows().iter().map(row_key).collect();
    parts.join(";")
}

/// Fills the gap of `spheres` and walks the packing octuples breadth-first,
/// returning every distinct sphere in discovery order (deterministic:
/// generators in index order, rows before partners).
///
/// Depth 1 is the filled seed octuple itself — its eight spheres; each
/// further level applies one more generator to the frontier. The second
/// completion returned by the gap filler is not a separate starting point:
/// the completion quadratic's two roots sum to the four sphere rows, which
/// is exactly the pair-swap generator's row mixing, so it shows up at
/// depth 2.
pub fn expand_geometry(spheres: &[Sphere], depth: u8) -> CliResult<Vec<Sphere>> {
    if depth == 0 || depth > MAX_GEOMETRY_DEPTH {
        return Err(CliError::Invalid(format!(
            "depth must be between 1 and {MAX_GEOMETRY_DEPTH}, got {depth}"
        )));
    }
    let quad: &[Sphere; 4] = spheres.try_into().map_err(|_| {
        CliError::Invalid(format!(
            "geometry input needs exactly 4 tangent spheres, got {}",
            spheres.len()
        ))
    })?;
    let (start, _partner_completion) = fill_gap(quad, None)?;

    let mut seen_octuples = BTreeSet::new();
    let mut seen_spheres = BTreeSet::new();
    let mut out = Vec::new();
    let mut collect = |f: &FMatrix, out: &mut Vec<Sphere>| {
        for s in f.eight_spheres() {
            if seen_spheres.insert(row_key(s.coords())) {
                out.push(s);
            }
        }
    };

    seen_octuples.insert(octuple_key(&start));
    collect(&start, &mut out);
    let mut frontier = vec![start];
    for _ in 1..depth {
        let mut next = Vec::new();
        for f in &frontier {
            for g in Generator::ALL {
                let image = left_apply(&generator_matrix(g), f);
                if !image.satisfies_gram_identity() {
                    // The generators preserve the Gram identity exactly;
                    // tripping here means the row mixing is wrong.
                    return Err(CliError::Invariant(format!(
                        "generator {g:?} image broke the octuple Gram identity"
                    )));
                }
                if seen_octuples.insert(octuple_key(&image)) {
                    collect(&image, &mut out);
                    next.push(image);
                }
            }
        }
        frontier = next;
    }
    Ok(out)
}

/// Parses the sphere-list JSON, expands, and renders the result.
pub fn run(json: &str, depth: u8) -> CliResult<String> {
    let spheres = GeometryObject::parse_list(json)?;
    let expanded = expand_geometry(&spheres, depth)?;
    Ok(GeometryObject::render_list(&expanded))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    /// Planes z = ±1 and unit spheres at (−1, ∓1, 0): the reference
    /// tangent quadruple.
    fn reference_quadruple() -> String {
        r#"[
            {"type":"plane","normal":["0","0","1"],"offset":"1"},
            {"type":"plane","normal":["0","0","-1"],"offset":"1"},
            {"type":"sphere","curvature":"1","center":["-1","-1","0"]},
            {"type":"sphere","curvature":"1","center":["-1","1","0"]}
        ]"#
        .to_string()
    }

    fn curvatures(spheres: &[Sphere]) -> Vec<Rat> {
        spheres.iter().map(|s| s.curvature().clone()).collect()
    }

    #[test]
    fn depth_one_on_the_reference_quadruple_yields_its_eight_spheres() {
        let json = reference_quadruple();
        let spheres = GeometryObject::parse_list(&json).unwrap();
        let out = expand_geometry(&spheres, 1).unwrap();
        assert_eq!(out.len(), 8);

        let mut bends: Vec<String> = curvatures(&out).iter().map(format_rational).collect();
        bends.sort();
        assert_eq!(bends, ["0", "0", "1", "1", "1", "1", "2", "2"]);

        // The two gap-filling spheres: radius 1/2 at (0, 0, ±1/2).
        let halves: Vec<[Rat; 3]> = out
            .iter()
            .filter(|s| *s.curvature() == Rat::from_integer(2.into()))
            .map(|s| s.center().unwrap())
            .collect();
        let z: Vec<String> = halves.iter().map(|c| format_rational(&c[2])).collect();
        assert_eq!(halves.len(), 2);
        assert!(z.contains(&"1/2".to_string()) && z.contains(&"-1/2".to_string()));
        for c in &halves {
            assert!(c[0].is_zero() && c[1].is_zero());
        }
    }

    #[test]
    fn depth_two_adds_the_mirror_completion() {
        let json = reference_quadruple();
        let spheres = GeometryObject::parse_list(&json).unwrap();
        let out = expand_geometry(&spheres, 2).unwrap();
        // The pair swap reveals the other gap completion: four partner
        // spheres mirrored across x = −1, e.g. radius 1/2 at (−2, 0, ∓1/2).
        assert_eq!(out.len(), 12);
        let mirror: Vec<String> = out
            .iter()
            .filter(|s| *s.curvature() == Rat::from_integer(2.into()))
            .map(|s| {
                let c = s.center().unwrap();
                format!(
                    "{},{},{}",
                    format_rational(&c[0]),
                    format_rational(&c[1]),
                    format_rational(&c[2])
                )
            })
            .collect();
        assert!(mirror.contains(&"-2,0,1/2".to_string()), "{mirror:?}");
        assert!(mirror.contains(&"-2,0,-1/2".to_string()), "{mirror:?}");
    }

    #[test]
    fn deeper_walks_add_spheres_and_keep_them_distinct() {
        let json = reference_quadruple();
        let spheres = GeometryObject::parse_list(&json).unwrap();
        let d1 = expand_geometry(&spheres, 1).unwrap();
        let d3 = expand_geometry(&spheres, 3).unwrap();
        assert!(d3.len() > d1.len());
        let keys: BTreeSet<String> = d3.iter().map(|s| row_key(s.coords())).collect();
        assert_eq!(keys.len(), d3.len(), "emitted spheres must be distinct");
        // Walking deeper only ever appends: the first spheres are stable.
        assert_eq!(&d3[..d1.len()], &d1[..]);
    }

    #[test]
    fn every_emitted_sphere_satisfies_the_self_product_invariant() {
        let json = reference_quadruple();
        let spheres = GeometryObject::parse_list(&json).unwrap();
        for s in expand_geometry(&spheres, 2).unwrap() {
            let p = inversive_geometry::inversive_product(&s, &s);
            assert!(p.is_one());
        }
    }

    #[test]
    fn depth_cap_and_arity_are_enforced() {
        let json = reference_quadruple();
        let spheres = GeometryObject::parse_list(&json).unwrap();
        assert_eq!(expand_geometry(&spheres, 0).unwrap_err().exit_code(), 2);
        assert_eq!(expand_geometry(&spheres, 7).unwrap_err().exit_code(), 2);
        assert_eq!(expand_geometry(&spheres[..3], 1).unwrap_err().exit_code(), 2);
    }
}
