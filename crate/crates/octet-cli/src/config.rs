//! Run configuration: flat `key=value` files, flag parsing helpers, and the
//! merge rule (command line beats file; the memory budget additionally
//! reads the `OCTET_MEM_BUDGET_MB` environment variable, which beats the
//! file key because it is set per invocation).

use std::path::PathBuf;

use clap::ValueEnum;
use octuple_algebra::Octuple;

use crate::error::{CliError, CliResult};

/// Environment variable naming the table memory budget in MiB.
pub const MEM_BUDGET_ENV: &str = "OCTET_MEM_BUDGET_MB";

/// Output serialization picked with `--format`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Structured JSON (exact rationals travel as `"num/den"` strings).
    Json,
    /// Comma-separated rows.
    Csv,
    /// The fixed-layout curvature bitmap (`OCT8PACK` header).
    Bitmap,
}

impl OutputFormat {
    fn from_key(value: &str) -> Result<Self, String> {
        match value {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "bitmap" => Ok(OutputFormat::Bitmap),
            other => Err(format!("unknown format {other:?} (json, csv, bitmap)")),
        }
    }
}

/// Values read from a `--seed-file`. Every field is optional; the command
/// line fills the gaps and wins on conflicts.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct FileConfig {
    pub octuple: Option<[i64; 5]>,
    pub bound: Option<i64>,
    pub threads: Option<usize>,
    pub dedup_depth: Option<u32>,
    pub out: Option<PathBuf>,
    pub format: Option<OutputFormat>,
    pub mem_budget_mb: Option<u64>,
}

/// Parses `"a,b,c,d,omega"` into the five octuple entries.
pub fn parse_octuple_entries(s: &str) -> Result<[i64; 5], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 5 {
        return Err(format!(
            "octuple needs exactly 5 comma-separated integers, got {}",
            parts.len()
        ));
    }
    let mut out = [0i64; 5];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part
            .parse()
            .map_err(|_| format!("octuple entry {part:?} is not an integer"))?;
    }
    Ok(out)
}

/// Parses the flat `key=value` format: one pair per line, `#` comments and
/// blank lines skipped, unknown keys rejected (they are always typos).
pub fn parse_file_config(text: &str) -> Result<FileConfig, String> {
    let mut cfg = FileConfig::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let lineno = idx + 1;
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {lineno}: expected key=value, got {line:?}"))?;
        let (key, value) = (key.trim(), value.trim());
        let int = |name: &str| -> Result<i64, String> {
            value
                .parse()
                .map_err(|_| format!("line {lineno}: {name} value {value:?} is not an integer"))
        };
        match key {
            "octuple" => {
                cfg.octuple =
                    Some(parse_octuple_entries(value).map_err(|e| format!("line {lineno}: {e}"))?)
            }
            "bound" => cfg.bound = Some(int("bound")?),
            "threads" => cfg.threads = Some(int("threads")? as usize),
            "dedup-depth" => cfg.dedup_depth = Some(int("dedup-depth")? as u32),
            "out" => cfg.out = Some(PathBuf::from(value)),
            "format" => {
                cfg.format =
                    Some(OutputFormat::from_key(value).map_err(|e| format!("line {lineno}: {e}"))?)
            }
            "mem-budget-mb" => cfg.mem_budget_mb = Some(int("mem-budget-mb")? as u64),
            other => return Err(format!("line {lineno}: unknown key {other:?}")),
        }
    }
    Ok(cfg)
}

/// Loads and parses a `--seed-file`, mapping every failure to exit 2.
pub fn load_file_config(path: &std::path::Path) -> CliResult<FileConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", path.display())))?;
    parse_file_config(&text).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

/// The memory budget from the environment, if set.
pub fn mem_budget_from_env() -> CliResult<Option<u64>> {
    match std::env::var(MEM_BUDGET_ENV) {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| {
            CliError::Invalid(format!("{MEM_BUDGET_ENV} value {v:?} is not an integer"))
        }),
        Err(_) => Ok(None),
    }
}

/// Resolves the working octuple: the `--octuple` flag wins, then the file
/// key; having neither is an error. The entries are validated here, so
/// every command sees only octuples satisfying the curvature identity.
pub fn resolve_octuple(flag: Option<&str>, file: &FileConfig) -> CliResult<Octuple> {
    let entries = match flag {
        Some(s) => parse_octuple_entries(s).map_err(CliError::Invalid)?,
        None => file.octuple.ok_or_else(|| {
            CliError::Invalid("no octuple given (use --octuple or a seed file)".into())
        })?,
    };
    let [a, b, c, d, omega] = entries;
    Ok(Octuple::new(a, b, c, d, omega)?)
}
