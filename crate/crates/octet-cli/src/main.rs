//! `octet` — command line surface over the packing library stack.
//!
//! Subcommands: `root` (orbit root + seed vector), `enumerate` (curvature
//! table), `verify` (local-global exception report), `reps` (density report
//! for one target), `form` (the attached quaternary form), `geometry`
//! (tangent-gap filling and generator-word expansion), and `picard-check`
//! (cyclotomic identity table).
//!
//! Configuration precedence: command-line flags beat `--seed-file` keys;
//! the memory budget has no flag and reads `OCTET_MEM_BUDGET_MB` before
//! the file. Exit codes: 0 success, 2 invalid input, 3 budget exceeded,
//! 4 internal invariant violation.

mod commands;
mod config;
mod error;
mod geometry;
mod picard;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::RunSettings;
use config::{load_file_config, resolve_octuple, FileConfig, OutputFormat};
use error::{CliError, CliResult};

#[derive(Parser)]
#[command(name = "octet", version, about = "Integer sphere-packing toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce an octuple to its orbit root and normalized seed vector.
    Root(SeedOnlyArgs),
    /// Enumerate packing curvatures up to a bound.
    Enumerate(RunArgs),
    /// Check the enumerated curvatures against the admissibility classes.
    Verify(VerifyArgs),
    /// Report local densities, the singular series, the main term, and the
    /// exact primitive representation count for one target.
    Reps(RepsArgs),
    /// Print the quaternary form attached to the octuple's seed vector.
    Form(SeedOnlyArgs),
    /// Fill the tangent gap of four spheres and expand by generator words.
    Geometry(GeometryArgs),
    /// Verify the cyclotomic identity table and its matrix invariants.
    PicardCheck(PicardArgs),
}

#[derive(Args)]
struct SeedArgs {
    /// Curvature quintuple "a,b,c,d,omega"; beats any octuple in the file.
    #[arg(long, value_name = "A,B,C,D,OMEGA", allow_hyphen_values = true)]
    octuple: Option<String>,
    /// Flat key=value config file (keys: octuple, bound, threads,
    /// dedup-depth, out, format, mem-budget-mb).
    #[arg(long, value_name = "PATH")]
    seed_file: Option<PathBuf>,
}

impl SeedArgs {
    fn load(&self) -> CliResult<(octuple_algebra::Octuple, FileConfig)> {
        let file = match &self.seed_file {
            Some(path) => load_file_config(path)?,
            None => FileConfig::default(),
        };
        let octuple = resolve_octuple(self.octuple.as_deref(), &file)?;
        Ok((octuple, file))
    }
}

#[derive(Args)]
struct SeedOnlyArgs {
    #[command(flatten)]
    seed: SeedArgs,
    /// Output path (stdout when omitted).
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    seed: SeedArgs,
    /// Largest curvature tracked.
    #[arg(long, value_name = "N")]
    bound: Option<i64>,
    /// Worker thread count (0 or omitted: library default).
    #[arg(long, value_name = "K")]
    threads: Option<usize>,
    /// Near-root deduplication depth.
    #[arg(long, value_name = "D")]
    dedup_depth: Option<u32>,
    /// Output path (stdout when omitted).
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum, value_name = "FMT")]
    format: Option<OutputFormat>,
}

impl RunArgs {
    fn load(&self) -> CliResult<(octuple_algebra::Octuple, RunSettings)> {
        let (octuple, file) = self.seed.load()?;
        let settings = RunSettings::merge(
            &file,
            self.bound,
            self.threads,
            self.dedup_depth,
            self.out.clone(),
            self.format,
        )?;
        Ok((octuple, settings))
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    run: RunArgs,
    /// Ceiling for the exact enumeration stage; presence above it is
    /// settled by representation certificates.
    #[arg(long, value_name = "N")]
    exact_bound: Option<i64>,
    /// Per-target budget for the certificate search.
    #[arg(long, value_name = "B")]
    certificate_budget: Option<i64>,
}

#[derive(Args)]
struct RepsArgs {
    #[command(flatten)]
    seed: SeedArgs,
    /// The represented value to analyze.
    #[arg(long, value_name = "M", allow_hyphen_values = true)]
    target: i64,
    /// Output path (stdout when omitted).
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GeometryArgs {
    /// JSON file holding the four tangent spheres.
    #[arg(long, value_name = "PATH")]
    seed_file: PathBuf,
    /// Generator-word expansion depth (max 6).
    #[arg(long, value_name = "D", default_value_t = 1)]
    depth: u8,
    /// Output path (stdout when omitted).
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PicardArgs {
    /// Output format (default: aligned text table).
    #[arg(long, value_enum, value_name = "FMT")]
    format: Option<OutputFormat>,
    /// Output path (stdout when omitted).
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Root(args) => {
            let (octuple, _) = args.seed.load()?;
            commands::cmd_root(&octuple, args.out.as_deref())
        }
        Command::Enumerate(args) => {
            let (octuple, settings) = args.load()?;
            commands::cmd_enumerate(&octuple, &settings)
        }
        Command::Verify(args) => {
            let (octuple, settings) = args.run.load()?;
            commands::cmd_verify(
                &octuple,
                &settings,
                args.exact_bound,
                args.certificate_budget,
            )
        }
        Command::Reps(args) => {
            let (octuple, _) = args.seed.load()?;
            commands::cmd_reps(&octuple, args.target, args.out.as_deref())
        }
        Command::Form(args) => {
            let (octuple, _) = args.seed.load()?;
            commands::cmd_form(&octuple, args.out.as_deref())
        }
        Command::Geometry(args) => {
            let json = std::fs::read_to_string(&args.seed_file).map_err(|e| {
                CliError::Invalid(format!("cannot read {}: {e}", args.seed_file.display()))
            })?;
            let rendered = geometry::run(&json, args.depth)?;
            commands::emit(args.out.as_deref(), format!("{rendered}\n").as_bytes())
        }
        Command::PicardCheck(args) => {
            let rows = picard::run_checks();
            let rendered = match args.format {
                None => picard::render_text(&rows),
                Some(OutputFormat::Json) => picard::render_json(&rows),
                Some(OutputFormat::Csv) => picard::render_csv(&rows),
                Some(OutputFormat::Bitmap) => {
                    return Err(CliError::Invalid(
                        "the check table has no bitmap form (use json or csv)".into(),
                    ))
                }
            };
            commands::emit(args.out.as_deref(), rendered.as_bytes())?;
            picard::all_passed(&rows)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
