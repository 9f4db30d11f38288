//! Command-line front end.
//!
//! One binary, eight subcommands: `value`, `table`, `split`, `regime`,
//! `moves`, `oracle`, `validate`, `map`. Exit codes form a stable contract
//! for CI use:
//!
//! - `0` — success (and, for checks, everything agreed)
//! - `1` — a comparison failed: sweep mismatch, oracle disagreement, or a
//!   sequence that did not verify (also used for I/O failures)
//! - `2` — the request itself was invalid: bad flags, out-of-domain
//!   instance, over-budget search, or an over-limit materialization
//!
//! Every command is deterministic; there are no randomized knobs. The
//! environment variable `HANOI_MAX_STATES` overrides the default exhaustive
//! search budget where `--max-states` is not given.

use std::ffi::OsString;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::closed_form::{classify, menon_value};
use crate::domain::{MoveCount, PuzzleInstance};
use crate::error::Error;
use crate::frame_stewart::FsTable;
use crate::oracle::{oracle_path, oracle_value, report_line, SearchBudget, REPORT_HEADER};
use crate::strategy::{generate_moves_limited, simulate, DEFAULT_MOVE_LIMIT};
use crate::validation::{run_validation, LowerBoundMode, ReportFormat, ValidationConfig};

pub const ENV_MAX_STATES: &str = "HANOI_MAX_STATES";

#[derive(Parser)]
#[command(
    name = "hanoi",
    version,
    about = "Multi-peg Tower of Hanoi: exact move counts, regimes, move sequences, and exhaustive cross-checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the recurrence value for one instance, with the linear formula
    /// and regime tags where they apply
    Value {
        #[arg(long, allow_negative_numbers = true)]
        pegs: i64,
        #[arg(long, allow_negative_numbers = true)]
        disks: i64,
        /// Emit a JSON object instead of the human-readable line
        #[arg(long)]
        json: bool,
    },
    /// Export the dynamic-programming table as CSV (p,n,value,best_split)
    Table {
        #[arg(long, default_value_t = 20)]
        p_max: u32,
        #[arg(long, default_value_t = 50)]
        n_max: u32,
        /// Write to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the smallest optimal split k for an instance (p >= 4, n >= 2)
    Split {
        #[arg(long, allow_negative_numbers = true)]
        pegs: i64,
        #[arg(long, allow_negative_numbers = true)]
        disks: i64,
    },
    /// Classify an instance into its piecewise regimes
    Regime {
        #[arg(long, allow_negative_numbers = true)]
        pegs: i64,
        #[arg(long, allow_negative_numbers = true)]
        disks: i64,
        #[arg(long)]
        json: bool,
    },
    /// Generate an optimal-length move sequence as CSV (step,disk,from,to)
    Moves {
        #[arg(long, allow_negative_numbers = true)]
        pegs: i64,
        #[arg(long, allow_negative_numbers = true)]
        disks: i64,
        #[arg(long, default_value_t = 0)]
        source: u32,
        /// Target peg; defaults to the last peg
        #[arg(long)]
        target: Option<u32>,
        /// Replay the sequence and report the verification result
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Refuse to materialize sequences longer than this
        #[arg(long, default_value_t = DEFAULT_MOVE_LIMIT)]
        limit: u64,
    },
    /// Exhaustive-search cross-check: true distance vs the recurrence value
    Oracle {
        #[arg(long, allow_negative_numbers = true)]
        pegs: i64,
        #[arg(long, allow_negative_numbers = true)]
        disks: i64,
        /// State cap; overrides HANOI_MAX_STATES and the built-in default
        #[arg(long)]
        max_states: Option<u64>,
        /// Emit one shortest move sequence as CSV instead of the report line
        #[arg(long)]
        path: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep the conjecture domain, comparing the recurrence against the
    /// linear formula; exit 1 on any mismatch
    Validate {
        #[arg(long, default_value_t = 4)]
        p_min: u32,
        #[arg(long, default_value_t = 20)]
        p_max: u32,
        #[arg(long, default_value_t = 50)]
        n_max: u32,
        /// Lower bound of each peg row: n = p, or n = p-1 for the widest domain
        #[arg(long, value_enum, default_value_t = LowerBoundArg::P)]
        from: LowerBoundArg,
        /// Also run the exhaustive search on every cell within budget
        #[arg(long)]
        with_oracle: bool,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        max_states: Option<u64>,
    },
    /// Export the regime-map grid dataset as CSV
    Map {
        #[arg(long, default_value_t = 20)]
        p_max: u32,
        #[arg(long, default_value_t = 50)]
        n_max: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LowerBoundArg {
    #[value(name = "p")]
    P,
    #[value(name = "p-1")]
    PMinus1,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

enum CliError {
    Domain(Error),
    Io(std::io::Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Domain(e) => e.fmt(f),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            // A failed replay is a discovered disagreement, not a bad request.
            CliError::Domain(Error::IllegalMove { .. }) => 1,
            CliError::Domain(_) | CliError::Usage(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}

/// Parses `args` and runs the selected command. Returns the process exit
/// code instead of exiting, so it stays testable in-process.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes())?;
        }
    }
    Ok(())
}

fn instance(pegs: i64, disks: i64) -> Result<PuzzleInstance, CliError> {
    Ok(PuzzleInstance::new(pegs, disks)?)
}

fn budget_from(flag: Option<u64>) -> Result<SearchBudget, CliError> {
    if let Some(max_states) = flag {
        return Ok(SearchBudget::new(max_states));
    }
    match std::env::var(ENV_MAX_STATES) {
        Ok(raw) => raw.parse::<u64>().map(SearchBudget::new).map_err(|_| {
            CliError::Usage(format!(
                "{ENV_MAX_STATES} must be a nonnegative integer, got {raw:?}"
            ))
        }),
        Err(_) => Ok(SearchBudget::default()),
    }
}

#[derive(Serialize)]
struct ValueReport {
    p: u32,
    n: u32,
    fs: MoveCount,
    menon: Option<MoveCount>,
    tags: std::collections::BTreeSet<crate::closed_form::Regime>,
    consistent: bool,
}

fn execute(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Value { pegs, disks, json } => {
            let inst = instance(pegs, disks)?;
            let table = FsTable::build(inst.pegs(), inst.disks())?;
            let fs = table.value(&inst)?;
            let report = classify(&inst);
            let menon = menon_value(&inst).ok();
            if json {
                let payload = ValueReport {
                    p: inst.pegs(),
                    n: inst.disks(),
                    fs,
                    menon,
                    tags: report.tags.clone(),
                    consistent: report.consistent,
                };
                println!("{}", serde_json::to_string(&payload).expect("serializes"));
            } else {
                let menon_text = menon.map(|m| m.to_string()).unwrap_or_else(|| "n/a".into());
                println!(
                    "fs{} = {}  menon = {}  regimes = {}",
                    inst,
                    fs,
                    menon_text,
                    report.tag_list()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { p_max, n_max, out } => {
            let table = FsTable::build(p_max, n_max)?;
            write_output(&out, &table.to_csv())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Split { pegs, disks } => {
            let inst = instance(pegs, disks)?;
            let table = FsTable::build(inst.pegs(), inst.disks())?;
            println!("{}", table.best_split(&inst)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Regime { pegs, disks, json } => {
            let inst = instance(pegs, disks)?;
            let report = classify(&inst);
            if json {
                println!("{}", report.to_json());
            } else {
                let values: Vec<String> = report
                    .values
                    .iter()
                    .map(|(r, v)| format!("{r} = {v}"))
                    .collect();
                println!(
                    "{}: tags = {}; consistent = {}{}{}",
                    inst,
                    report.tag_list(),
                    report.consistent,
                    if values.is_empty() { "" } else { "; " },
                    values.join(", ")
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Moves {
            pegs,
            disks,
            source,
            target,
            verify,
            out,
            limit,
        } => {
            let inst = instance(pegs, disks)?;
            let target = target.unwrap_or(inst.pegs() - 1);
            let table = FsTable::build(inst.pegs(), inst.disks())?;
            let seq = generate_moves_limited(&table, &inst, source, target, limit)?;
            write_output(&out, &seq.to_csv())?;
            if verify {
                let end = simulate(&seq, source, target)?;
                let expected = table.value(&inst)?;
                let solved = end.is_all_on(target);
                let length_ok = seq.len() as u128 == expected.get();
                if solved && length_ok {
                    println!(
                        "verified: {} moves, length matches fs{} = {}, all disks on peg {}",
                        seq.len(),
                        inst,
                        expected,
                        target
                    );
                } else {
                    eprintln!(
                        "verification failed: {} moves, expected {}, solved = {}",
                        seq.len(),
                        expected,
                        solved
                    );
                    return Ok(ExitCode::from(1));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle {
            pegs,
            disks,
            max_states,
            path,
            out,
        } => {
            let inst = instance(pegs, disks)?;
            let budget = budget_from(max_states)?;
            let table = FsTable::build(inst.pegs(), inst.disks())?;
            let fs = table.value(&inst)?;
            let menon = menon_value(&inst).ok();
            if path {
                let seq = oracle_path(&inst, &budget)?;
                let end = simulate(&seq, 0, inst.pegs() - 1)?;
                let agree = seq.len() as u128 == fs.get() && end.is_all_on(inst.pegs() - 1);
                write_output(&out, &seq.to_csv())?;
                if !agree {
                    eprintln!(
                        "disagreement: shortest path has {} moves, recurrence gives {}",
                        seq.len(),
                        fs
                    );
                    return Ok(ExitCode::from(1));
                }
            } else {
                let oracle = oracle_value(&inst, &budget)?;
                let line = report_line(&inst, oracle, fs, menon);
                write_output(&out, &format!("{REPORT_HEADER}\n{line}\n"))?;
                let agree = oracle == fs && menon.is_none_or(|m| m == oracle);
                if !agree {
                    eprintln!("disagreement at {inst}: oracle = {oracle}, fs = {fs}");
                    return Ok(ExitCode::from(1));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Validate {
            p_min,
            p_max,
            n_max,
            from,
            with_oracle,
            format,
            out,
            max_states,
        } => {
            let config = ValidationConfig {
                p_min,
                p_max,
                n_max,
                lower_bound_mode: match from {
                    LowerBoundArg::P => LowerBoundMode::FromP,
                    LowerBoundArg::PMinus1 => LowerBoundMode::FromPMinus1,
                },
                include_oracle: with_oracle,
                format: match format {
                    FormatArg::Csv => ReportFormat::Csv,
                    FormatArg::Json => ReportFormat::Json,
                },
                max_states: budget_from(max_states)?.max_states,
            };
            let report = run_validation(&config)?;
            write_output(&out, &report.render())?;
            if report.has_mismatches() || report.oracle_disagreements() > 0 {
                eprintln!(
                    "mismatches: {} formula, {} oracle",
                    report.summary.mismatches,
                    report.oracle_disagreements()
                );
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Map { p_max, n_max, out } => {
            let table = FsTable::build(p_max, n_max)?;
            let map = crate::validation::export_regime_map(&table, p_max, n_max)?;
            write_output(&out, &map)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
