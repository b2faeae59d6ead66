//! End-to-end checks of the `octet` binary: documented output shapes,
//! configuration precedence, and the exit-code contract.

use std::path::Path;
use std::process::{Command, Output};

use octuple_algebra::Octuple;
use orbit_enumeration::{enumerate_curvatures, oracle_curvature_set, OrbitOptions};

fn octet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octet"))
        .args(args)
        .output()
        .expect("binary spawns")
}

fn octet_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octet"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary spawns")
}

fn stdout_of(out: &Output) -> String {
    assert!(
        out.status.success(),
        "expected success, got {:?}; stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn root_reduces_the_documented_octuple() {
    let out = octet(&["root", "--octuple", "2,0,1,1,3"]);
    assert_eq!(
        stdout_of(&out).trim(),
        r#"{"root":[0,0,1,1,1],"seed":[2,1,0,1,1]}"#
    );
}

#[test]
fn root_leaves_the_reference_root_unchanged() {
    let out = octet(&["root", "--octuple", "0,0,1,1,1"]);
    let payload: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(payload["root"], serde_json::json!([0, 0, 1, 1, 1]));
}

#[test]
fn root_rejects_identity_violations_with_exit_2() {
    let out = octet(&["root", "--octuple", "1,1,1,1,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn missing_octuple_is_exit_2() {
    let out = octet(&["root"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_bitmap_matches_the_library_and_the_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.bin");
    let out = octet(&[
        "enumerate",
        "--octuple",
        "2,1,0,1,1",
        "--bound",
        "10",
        "--format",
        "bitmap",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let seed = Octuple::new(2, 1, 0, 1, 1).unwrap();
    let table = enumerate_curvatures(&seed, 10, &OrbitOptions::default()).unwrap();
    let mut expected = Vec::new();
    table.write_bitmap(&mut expected).unwrap();
    assert_eq!(std::fs::read(&path).unwrap(), expected);

    // Independent route: the quotient-BFS oracle sees the same values.
    let oracle = oracle_curvature_set(&seed, 10).unwrap();
    let bits = decode_bitmap(&expected, 10);
    let from_oracle: Vec<i64> = oracle.into_iter().filter(|&v| v >= 0).collect();
    assert_eq!(bits, from_oracle);
}

fn decode_bitmap(bytes: &[u8], bound: i64) -> Vec<i64> {
    assert_eq!(&bytes[..8], b"OCT8PACK");
    assert_eq!(u64::from_le_bytes(bytes[8..16].try_into().unwrap()), bound as u64);
    let mut present = Vec::new();
    for v in 0..=bound {
        let byte = bytes[16 + (v / 8) as usize];
        if byte >> (v % 8) & 1 == 1 {
            present.push(v);
        }
    }
    present
}

#[test]
fn bound_one_bitmap_has_both_the_plane_and_the_unit_sphere() {
    // The reference root contains two parallel planes, so curvature 0 is
    // genuinely present alongside 1 even at the smallest bound.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tiny.bin");
    let out = octet(&[
        "enumerate",
        "--octuple",
        "0,0,1,1,1",
        "--bound",
        "1",
        "--format",
        "bitmap",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let bytes = std::fs::read(&path).unwrap();
    assert_eq!(decode_bitmap(&bytes, 1), vec![0, 1]);
}

#[test]
fn enumerate_json_lists_present_curvatures() {
    let out = octet(&["enumerate", "--octuple", "0,0,1,1,1", "--bound", "20"]);
    let payload: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(payload["bound"], 20);
    let listed: Vec<i64> = payload["curvatures"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_i64().unwrap())
        .collect();
    let seed = Octuple::new(0, 0, 1, 1, 1).unwrap();
    let oracle = oracle_curvature_set(&seed, 20).unwrap();
    assert_eq!(listed, oracle.into_iter().collect::<Vec<i64>>());
}

#[test]
fn seed_file_supplies_defaults_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "octuple = 2,1,0,1,1\nbound = 30\nformat = csv\n").unwrap();

    let from_file = octet(&["enumerate", "--seed-file", cfg.to_str().unwrap()]);
    let from_flags = octet(&[
        "enumerate",
        "--octuple",
        "2,1,0,1,1",
        "--bound",
        "30",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout_of(&from_file), stdout_of(&from_flags));
    assert!(stdout_of(&from_file).starts_with("curvature,present,multiplicity"));

    // A flag beats the file's bound: the header stays, the rows shrink.
    let overridden = octet(&[
        "enumerate",
        "--seed-file",
        cfg.to_str().unwrap(),
        "--bound",
        "5",
    ]);
    let text = stdout_of(&overridden);
    assert_ne!(text, stdout_of(&from_file));
    assert_eq!(text.lines().count(), 1 + 6, "header plus rows 0..=5");
}

#[test]
fn config_file_typos_are_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    std::fs::write(&cfg, "octuple = 2,1,0,1,1\nbonud = 30\n").unwrap();
    let out = octet(&["enumerate", "--seed-file", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bonud"));
}

#[test]
fn zero_memory_budget_is_exit_3() {
    let out = octet_env(
        &["enumerate", "--octuple", "0,0,1,1,1", "--bound", "100"],
        "OCTET_MEM_BUDGET_MB",
        "0",
    );
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn form_prints_the_documented_coefficients() {
    let out = octet(&["form", "--octuple", "2,0,1,1,3"]);
    assert_eq!(
        stdout_of(&out).trim(),
        r#"{"A0":3,"B0":-1,"C0":-1,"D0":2,"a0":2}"#
    );
}

#[test]
fn reps_reports_the_exact_primitive_count() {
    let out = octet(&["reps", "--octuple", "2,1,0,1,1", "--target", "3"]);
    let payload: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(payload["m"], 3);
    // σ(3) = 4 total representations, all primitive (3 is squarefree),
    // collapsing to one orbit under the four units.
    assert_eq!(payload["primitive_count"], 1);
    assert!(payload["singular_series_rational"].is_string());
}

#[test]
fn verify_json_covers_every_admissible_value_in_an_exact_run() {
    let out = octet(&[
        "verify",
        "--octuple",
        "2,1,0,1,1",
        "--bound",
        "400",
        "--exact-bound",
        "400",
    ]);
    let payload: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(payload["bound"], 400);
    assert_eq!(payload["modulus"], 2);
    assert_eq!(payload["residue"], 1);
    assert_eq!(payload["admissible_total"], 100);
    assert_eq!(payload["found"], 100);
    assert_eq!(payload["missing"].as_array().unwrap().len(), 0);
    assert_eq!(payload["largest_missing"], serde_json::Value::Null);
}

#[test]
fn verify_csv_is_the_missing_list() {
    let out = octet(&[
        "verify",
        "--octuple",
        "2,1,0,1,1",
        "--bound",
        "200",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout_of(&out), "missing\n");
}

#[test]
fn verify_has_no_bitmap_form() {
    let out = octet(&[
        "verify",
        "--octuple",
        "2,1,0,1,1",
        "--bound",
        "200",
        "--format",
        "bitmap",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

fn reference_quadruple_json(dir: &Path) -> std::path::PathBuf {
    let path = dir.join("spheres.json");
    std::fs::write(
        &path,
        r#"[
            {"type":"plane","normal":["0","0","1"],"offset":"1"},
            {"type":"plane","normal":["0","0","-1"],"offset":"1"},
            {"type":"sphere","curvature":"1","center":["-1","-1","0"]},
            {"type":"sphere","curvature":"1","center":["-1","1","0"]}
        ]"#,
    )
    .unwrap();
    path
}

#[test]
fn geometry_depth_one_emits_the_eight_reference_spheres() {
    let dir = tempfile::tempdir().unwrap();
    let path = reference_quadruple_json(dir.path());
    let out = octet(&["geometry", "--seed-file", path.to_str().unwrap()]);
    let payload: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let objects = payload.as_array().unwrap();
    assert_eq!(objects.len(), 8);

    let has = |wanted: serde_json::Value| objects.iter().any(|o| *o == wanted);
    assert!(has(serde_json::json!(
        {"type":"sphere","curvature":"2","center":["0","0","1/2"]}
    )));
    assert!(has(serde_json::json!(
        {"type":"sphere","curvature":"2","center":["0","0","-1/2"]}
    )));
    assert!(has(serde_json::json!(
        {"type":"sphere","curvature":"1","center":["1","1","0"]}
    )));
    assert!(has(serde_json::json!(
        {"type":"sphere","curvature":"1","center":["1","-1","0"]}
    )));
}

#[test]
fn geometry_depth_above_the_cap_is_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = reference_quadruple_json(dir.path());
    let out = octet(&[
        "geometry",
        "--seed-file",
        path.to_str().unwrap(),
        "--depth",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn picard_check_prints_an_all_pass_table() {
    let out = octet(&["picard-check"]);
    let text = stdout_of(&out);
    assert!(text.contains("PASS  identity upper-shear-2"), "{text}");
    assert!(text.ends_with("15 checks: 15 passed, 0 failed\n"), "{text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn picard_check_json_mirrors_the_table() {
    let out = octet(&["picard-check", "--format", "json"]);
    let payload: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(payload["passed"], 15);
    assert_eq!(payload["failed"], 0);
    assert_eq!(payload["checks"].as_array().unwrap().len(), 15);
}
