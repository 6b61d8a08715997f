//! Command-line front end: `point`, `sweep` and `figure`.
//!
//! Exit codes are 0 on success, 1 on runtime or I/O failure and 2 on usage or
//! validation errors.

mod format;
mod sweep;

pub use format::{format_sig, round_sig, write_csv, write_json, write_report, Row, CSV_HEADER};
pub use sweep::{
    run_sweep, AxisSpec, Figure, OutputFormat, SweepConfig, DEFAULT_CUT_GRID,
    DEFAULT_SURFACE_GRID, DEFAULT_SWEEP_GRID,
};

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::measures::{evaluate_point_with, QuantityReport};
use crate::protocol::{Message, ProtocolPoint};
use crate::rindler::{BellIndex, ModeSplit, R_MAX};

#[derive(Debug, Parser)]
#[command(
    name = "rindler-sdc",
    version,
    about = "Superdense coding with a uniformly accelerated qubit"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every quantity at one (r, q_l) point.
    Point(PointArgs),
    /// Evaluate a grid over r and q_l.
    Sweep(SweepArgs),
    /// Emit one of the preset figure datasets.
    Figure(FigureArgs),
}

#[derive(Debug, Args)]
pub struct ProtocolArgs {
    /// Two-bit message ij, encoded as Z^j X^i.
    #[arg(long, default_value = "00")]
    pub message: Message,
    /// Initial EPR state label αβ.
    #[arg(long, default_value = "00")]
    pub bell: BellIndex,
    /// Skip the quantum discord search.
    #[arg(long)]
    pub no_discord: bool,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PointArgs {
    /// Acceleration parameter in radians, within [0, π/4].
    #[arg(long)]
    pub r: f64,
    /// Left-mode weight within [0, 1].
    #[arg(long)]
    pub ql: f64,
    #[command(flatten)]
    pub protocol: ProtocolArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// VALUE or START:STOP:COUNT; defaults to the full range.
    #[arg(long)]
    pub r: Option<AxisSpec>,
    /// VALUE or START:STOP:COUNT; defaults to the full range.
    #[arg(long)]
    pub ql: Option<AxisSpec>,
    /// Samples for an axis left at its default range.
    #[arg(long, default_value_t = DEFAULT_SWEEP_GRID)]
    pub grid: usize,
    #[command(flatten)]
    pub protocol: ProtocolArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    #[arg(value_enum)]
    pub name: Figure,
    /// Samples per swept axis (61 for surfaces, 101 for cuts by default).
    #[arg(long)]
    pub grid: Option<usize>,
    #[command(flatten)]
    pub protocol: ProtocolArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(Error),
    #[error("{0}")]
    Runtime(Error),
    #[error("cannot write output: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Runtime(_) | CliError::Io(_) => 1,
        }
    }
}

fn classify(e: Error) -> CliError {
    match e {
        Error::OutOfDomain { .. } | Error::Dimension(_) => CliError::Validation(e),
        other => CliError::Runtime(other),
    }
}

impl ProtocolArgs {
    fn apply(&self, cfg: &mut SweepConfig) {
        cfg.msg = self.message;
        cfg.idx = self.bell;
        cfg.include_discord = !self.no_discord;
    }
}

impl OutputArgs {
    fn apply(&self, cfg: &mut SweepConfig) {
        cfg.output_format = self.format.unwrap_or_default();
        cfg.output_path = self.out.clone();
    }
}

fn open_output<'a>(
    path: Option<&PathBuf>,
    stdout: &'a mut dyn Write,
) -> io::Result<Box<dyn Write + 'a>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(stdout),
    })
}

fn emit(cfg: &SweepConfig, reports: &[QuantityReport], stdout: &mut dyn Write) -> Result<(), CliError> {
    let mut out = open_output(cfg.output_path.as_ref(), stdout)?;
    match cfg.output_format {
        OutputFormat::Csv => write_csv(&mut out, reports).map_err(|e| match e.into_kind() {
            csv::ErrorKind::Io(io) => CliError::Io(io),
            other => CliError::Io(io::Error::other(format!("{other:?}"))),
        })?,
        OutputFormat::Json => write_json(&mut out, reports)?,
    }
    out.flush()?;
    Ok(())
}

fn run_point(args: &PointArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let split = ModeSplit::new(args.r, args.ql).map_err(classify)?;
    let pt = ProtocolPoint::new(split, args.protocol.bell, args.protocol.message);
    let report = evaluate_point_with(&pt, !args.protocol.no_discord).map_err(classify)?;
    match args.output.format {
        None => {
            let mut out = open_output(args.output.out.as_ref(), stdout)?;
            write_report(&mut out, &report)?;
            out.flush()?;
            Ok(())
        }
        Some(_) => {
            let mut cfg = SweepConfig::new(AxisSpec::single(args.r), AxisSpec::single(args.ql));
            args.output.apply(&mut cfg);
            emit(&cfg, &[report], stdout)
        }
    }
}

pub fn sweep_config(args: &SweepArgs) -> SweepConfig {
    let r = args.r.clone().unwrap_or_else(|| AxisSpec::new(0.0, R_MAX, args.grid));
    let ql = args.ql.clone().unwrap_or_else(|| AxisSpec::new(0.0, 1.0, args.grid));
    let mut cfg = SweepConfig::new(r, ql);
    args.protocol.apply(&mut cfg);
    args.output.apply(&mut cfg);
    cfg
}

pub fn figure_config(args: &FigureArgs) -> SweepConfig {
    let mut cfg = args.name.config(args.grid);
    args.protocol.apply(&mut cfg);
    args.output.apply(&mut cfg);
    cfg
}

fn run_table(cfg: &SweepConfig, stdout: &mut dyn Write) -> Result<(), CliError> {
    cfg.validate().map_err(classify)?;
    let reports = run_sweep(cfg).map_err(classify)?;
    emit(cfg, &reports, stdout)
}

/// Executes a parsed command, writing tables to `stdout` unless `--out` is given.
pub fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Point(args) => run_point(args, stdout),
        Command::Sweep(args) => run_table(&sweep_config(args), stdout),
        Command::Figure(args) => run_table(&figure_config(args), stdout),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match execute(&cli, &mut lock) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = lock.flush();
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
