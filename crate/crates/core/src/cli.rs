//! The `az` command line: `seq`, `verify` and `scan`.
//!
//! Exit codes: 0 when everything passed, 1 when any check failed or could
//! not be written out, 2 for usage and parameter errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::cache::{self, DEFAULT_CACHE_PATH};
use crate::checks::{self, CheckCase, CheckId, CheckOutcome};
use crate::exact::parse_rational;
use crate::grid::{parse_override, parse_primes, GridSpec, IntRange};
use crate::report::{render_outcome, render_sequence, Format, Metadata, Report};
use crate::sequences::{self, Family, SequenceValue};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "az",
    version,
    about = "Exact verification of Almkvist–Zudilin congruences"
)]
pub struct Cli {
    /// Output encoding.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Sequence value store (JSON lines).
    #[arg(long, global = true, env = "AZ_CACHE", default_value = DEFAULT_CACHE_PATH)]
    pub cache: PathBuf,
    /// Worker threads for scans.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print sequence terms, one row per n.
    Seq {
        /// AZ_A, APERY, B or B_KERNEL.
        family: String,
        /// The family's index (i for AZ_A, j for B); `-` for APERY.
        index: String,
        /// Range of n, e.g. `1..5`.
        n: String,
    },
    /// Evaluate one check, e.g. `verify MAIN_SUPERCONGRUENCE p=5 n=1`.
    Verify {
        check: String,
        /// `name=value` pairs; `y=1/2` sets both y_num and y_den.
        params: Vec<String>,
    },
    /// Evaluate a grid of checks. With no arguments, the full default sweep.
    Scan {
        /// Check ids, space or comma separated. Default: all.
        checks: Vec<String>,
        /// Primes as `5,7,11` or `5..31`.
        #[arg(long)]
        primes: Option<String>,
        /// Range of n, e.g. `1..8`.
        #[arg(long)]
        n: Option<String>,
        /// Any other parameter range, e.g. `--range m=0..3`. Repeatable.
        #[arg(long = "range")]
        ranges: Vec<String>,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io(_) => EXIT_FAIL,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Io(m) => m,
        }
    }
}

fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

/// Runs the CLI on `args` (program name first), returning the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_PASS
            };
        }
    };
    match execute(&cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "az: {}", e.message());
            e.code()
        }
    }
}

/// Entry point for the `az` binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Seq { family, index, n } => {
            warn_all(stderr, &cache::preload(&cli.cache));
            let values = seq_values(family, index, n)?;
            emit(cli, stdout, &render_sequence(&values, cli.format))?;
            persist_cache(&cli.cache, stderr);
            Ok(EXIT_PASS)
        }
        Command::Verify { check, params } => {
            let case = verify_case(check, params)?;
            let outcome = checks::evaluate(&case).map_err(usage)?;
            emit(cli, stdout, &render_outcome(&outcome, cli.format))?;
            Ok(if outcome.passed { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Scan {
            checks,
            primes,
            n,
            ranges,
        } => {
            let spec = scan_spec(checks, primes.as_deref(), n.as_deref(), ranges)?;
            let cases = spec.cases().map_err(usage)?;
            let warnings = cache::preload(&cli.cache);
            warn_all(stderr, &warnings);
            let outcomes = checks::run_suite(&cases, cli.jobs as usize);
            persist_cache(&cli.cache, stderr);
            let report = Report::new(Metadata::now(spec, cli.jobs as usize, warnings), outcomes);
            emit(cli, stdout, &report.render(cli.format))?;
            if cli.format == Format::Csv || cli.out.is_some() {
                let _ = write!(stderr, "{}", report.summary_text());
            }
            Ok(report.exit_code())
        }
    }
}

fn emit(cli: &Cli, stdout: &mut dyn Write, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

fn warn_all(stderr: &mut dyn Write, warnings: &[String]) {
    for w in warnings {
        let _ = writeln!(stderr, "az: warning: {w}");
    }
}

fn persist_cache(path: &Path, stderr: &mut dyn Write) {
    if let Err(e) = cache::persist(path) {
        let _ = writeln!(
            stderr,
            "az: warning: cannot write cache {}: {e}",
            path.display()
        );
    }
}

fn seq_values(family: &str, index: &str, n: &str) -> Result<Vec<SequenceValue>, CliError> {
    let family: Family = family.parse().map_err(usage)?;
    let index: u64 = match index {
        "-" | "—" | "_" if family == Family::Apery => 0,
        s => s
            .parse()
            .map_err(|_| usage(format!("index must be a non-negative integer, got {s:?}")))?,
    };
    let range: IntRange = n.parse().map_err(usage)?;
    if range.lo < 0 || range.lo > range.hi {
        return Err(usage(format!(
            "n range {range} must be non-empty and non-negative"
        )));
    }
    range
        .iter()
        .map(|n| sequences::evaluate(family, index, n as u64).map_err(usage))
        .collect()
}

/// Builds a case from `name=value` words.
fn verify_case(check: &str, params: &[String]) -> Result<CheckCase, CliError> {
    let id: CheckId = check.parse().map_err(usage)?;
    let mut case = CheckCase::new(id, []);
    for word in params {
        let (name, value) = word
            .split_once('=')
            .ok_or_else(|| usage(format!("expected name=value, got {word:?}")))?;
        if name == "y" && id == CheckId::PartialFraction {
            let y = parse_rational(value).map_err(usage)?;
            let to_i64 = |x: &num_bigint::BigInt| {
                i64::try_from(x).map_err(|_| usage(format!("y = {value} is out of range")))
            };
            case.params.insert("y_num".into(), to_i64(y.numer())?);
            case.params.insert("y_den".into(), to_i64(y.denom())?);
            continue;
        }
        let v: i64 = value
            .parse()
            .map_err(|_| usage(format!("{name} must be an integer, got {value:?}")))?;
        if case.params.insert(name.to_string(), v).is_some() {
            return Err(usage(format!("{name} given twice")));
        }
    }
    case.validate().map_err(usage)?;
    Ok(case)
}

fn scan_spec(
    checks: &[String],
    primes: Option<&str>,
    n: Option<&str>,
    ranges: &[String],
) -> Result<GridSpec, CliError> {
    let mut spec = GridSpec::default();
    let ids: Vec<CheckId> = checks
        .iter()
        .flat_map(|w| w.split(','))
        .filter(|w| !w.is_empty())
        .map(|w| w.parse().map_err(usage))
        .collect::<Result<_, _>>()?;
    if !ids.is_empty() {
        spec = spec.checks(ids);
    }
    if let Some(p) = primes {
        spec = spec.primes(parse_primes(p).map_err(usage)?);
    }
    if let Some(n) = n {
        spec = spec.range("n", n.parse().map_err(usage)?);
    }
    for r in ranges {
        let (name, range) = parse_override(r).map_err(usage)?;
        spec = spec.range(&name, range);
    }
    Ok(spec)
}

/// Outcome of a `verify`-style run without going through argument parsing.
pub fn verify(check: &str, params: &[&str]) -> Result<CheckOutcome, String> {
    let params: Vec<String> = params.iter().map(|s| s.to_string()).collect();
    let case = verify_case(check, &params).map_err(|e| e.message().to_string())?;
    checks::evaluate(&case).map_err(|e| e.to_string())
}
