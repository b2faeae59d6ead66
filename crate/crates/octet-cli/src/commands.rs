//! The thin subcommands: each resolves its configuration, delegates to one
//! library entry point, and serializes the result. Anything with real logic
//! lives in the library crates; failures map to exit codes in
//! [`crate::error`].

use std::io::Write;
use std::path::{Path, PathBuf};

use local_global_verifier::{verify_local_global, VerifyOptions};
use octuple_algebra::{normalize_seed, reduce_to_root, Octuple, SeedVector};
use orbit_enumeration::{enumerate_curvatures, CurvatureTable, OrbitOptions};
use quadratic_form::{build_form, density_report};
use serde::{Deserialize, Serialize};

use crate::config::{self, FileConfig, OutputFormat};
use crate::error::{CliError, CliResult};

/// Writes `bytes` to `--out` or stdout.
pub fn emit(out: Option<&Path>, bytes: &[u8]) -> CliResult<()> {
    match out {
        Some(path) => {
            std::fs::write(path, bytes)
                .map_err(|e| CliError::Invalid(format!("cannot write {}: {e}", path.display())))?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(bytes)?;
            lock.flush()?;
        }
    }
    Ok(())
}

fn emit_line(out: Option<&Path>, mut text: String) -> CliResult<()> {
    text.push('\n');
    emit(out, text.as_bytes())
}

/// `root` command output; field order is the external contract.
#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootOutput {
    pub root: [i64; 5],
    pub seed: [i64; 5],
}

/// Reduces to the orbit root and the normalized seed vector.
pub fn cmd_root(octuple: &Octuple, out: Option<&Path>) -> CliResult<()> {
    let payload = root_payload(octuple)?;
    emit_line(
        out,
        serde_json::to_string(&payload).expect("integer arrays always serialize"),
    )
}

fn root_payload(octuple: &Octuple) -> CliResult<RootOutput> {
    let root = reduce_to_root(octuple)?;
    let seed = normalize_seed(&root)?;
    Ok(RootOutput {
        root: root.entries(),
        seed: seed.entries(),
    })
}

/// Everything `enumerate` and `verify` need beyond the octuple.
pub struct RunSettings {
    pub bound: Option<i64>,
    pub threads: usize,
    pub dedup_depth: Option<u32>,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
    pub mem_budget_mib: Option<u64>,
}

impl RunSettings {
    /// Merges flags over file values; the memory budget reads the
    /// environment first since there is no flag for it.
    pub fn merge(
        file: &FileConfig,
        bound: Option<i64>,
        threads: Option<usize>,
        dedup_depth: Option<u32>,
        out: Option<PathBuf>,
        format: Option<OutputFormat>,
    ) -> CliResult<Self> {
        Ok(RunSettings {
            bound: bound.or(file.bound),
            threads: threads.or(file.threads).unwrap_or(0),
            dedup_depth: dedup_depth.or(file.dedup_depth),
            out: out.or_else(|| file.out.clone()),
            format: format.or(file.format).unwrap_or(OutputFormat::Json),
            mem_budget_mib: config::mem_budget_from_env()?.or(file.mem_budget_mb),
        })
    }

    pub fn required_bound(&self) -> CliResult<i64> {
        self.bound
            .ok_or_else(|| CliError::Invalid("no bound given (use --bound or a seed file)".into()))
    }
}

/// JSON shape of the curvature table (the csv and bitmap shapes are owned
/// by the table itself).
#[derive(Serialize)]
struct TableOutput {
    bound: i64,
    count_present: usize,
    curvatures: Vec<i64>,
}

/// Enumerates the orbit and writes the curvature table.
pub fn cmd_enumerate(octuple: &Octuple, settings: &RunSettings) -> CliResult<()> {
    let bound = settings.required_bound()?;
    let opts = OrbitOptions {
        threads: settings.threads,
        mem_budget_mib: settings.mem_budget_mib,
        track_multiplicity: settings.format == OutputFormat::Csv,
        dedup_depth: settings.dedup_depth,
    };
    let table = enumerate_curvatures(octuple, bound, &opts)?;
    let bytes = render_table(&table, settings.format)?;
    emit(settings.out.as_deref(), &bytes)
}

fn render_table(table: &CurvatureTable, format: OutputFormat) -> CliResult<Vec<u8>> {
    match format {
        OutputFormat::Json => {
            let payload = TableOutput {
                bound: table.bound(),
                count_present: table.count_present(),
                curvatures: table.present_curvatures(),
            };
            let mut text =
                serde_json::to_string(&payload).expect("integer table always serializes");
            text.push('\n');
            Ok(text.into_bytes())
        }
        OutputFormat::Csv => {
            let mut bytes = Vec::new();
            table
                .write_csv(&mut bytes)
                .map_err(|e| CliError::Invalid(format!("csv serialization failed: {e}")))?;
            Ok(bytes)
        }
        OutputFormat::Bitmap => {
            let mut bytes = Vec::new();
            table.write_bitmap(&mut bytes)?;
            Ok(bytes)
        }
    }
}

/// Runs the local-global verifier; JSON emits the full report, csv the
/// missing-value list. There is no bitmap shape for a report.
pub fn cmd_verify(
    octuple: &Octuple,
    settings: &RunSettings,
    exact_bound: Option<i64>,
    certificate_budget: Option<i64>,
) -> CliResult<()> {
    let bound = settings.required_bound()?;
    let seed = seed_of(octuple)?;
    let mut opts = VerifyOptions {
        threads: settings.threads,
        mem_budget_mib: settings.mem_budget_mib,
        ..VerifyOptions::default()
    };
    if let Some(e) = exact_bound {
        opts.exact_bound = e;
    }
    if let Some(b) = certificate_budget {
        opts.certificate_budget = b;
    }
    let report = verify_local_global(&seed, bound, &opts)?;
    match settings.format {
        OutputFormat::Json => emit_line(settings.out.as_deref(), report.to_json()),
        OutputFormat::Csv => {
            let mut bytes = Vec::new();
            report
                .write_missing_csv(&mut bytes)
                .map_err(|e| CliError::Invalid(format!("csv serialization failed: {e}")))?;
            emit(settings.out.as_deref(), &bytes)
        }
        OutputFormat::Bitmap => Err(CliError::Invalid(
            "verify reports have no bitmap form (use json or csv)".into(),
        )),
    }
}

/// `form` command output; upper-case keys follow the coefficient names.
#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct FormOutput {
    pub A0: i64,
    pub B0: i64,
    pub C0: i64,
    pub D0: i64,
    pub a0: i64,
}

/// Prints the quaternary form attached to the octuple's seed vector.
pub fn cmd_form(octuple: &Octuple, out: Option<&Path>) -> CliResult<()> {
    let payload = form_payload(octuple)?;
    emit_line(
        out,
        serde_json::to_string(&payload).expect("integer struct always serializes"),
    )
}

fn form_payload(octuple: &Octuple) -> CliResult<FormOutput> {
    let form = build_form(&seed_of(octuple)?)?;
    Ok(FormOutput {
        A0: form.a_coeff,
        B0: form.b_coeff,
        C0: form.c_coeff,
        D0: form.d_coeff,
        a0: form.a0,
    })
}

/// Local densities, singular series, main term, and the exact primitive
/// count for one target.
pub fn cmd_reps(octuple: &Octuple, target: i64, out: Option<&Path>) -> CliResult<()> {
    let form = build_form(&seed_of(octuple)?)?;
    let report = density_report(&form, target)?;
    emit_line(
        out,
        serde_json::to_string(&report).expect("density report always serializes"),
    )
}

fn seed_of(octuple: &Octuple) -> CliResult<SeedVector> {
    let root = reduce_to_root(octuple)?;
    Ok(normalize_seed(&root)?)
}
