//! `seec`: threshold tables, criterion sweeps, diagonalization reports and
//! oracle verification for the Shannon entropic entanglement criterion.

mod commands;
mod format;
mod svg;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "seec", version, about = "Shannon entropic entanglement criterion for coupled oscillators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpaceArg {
    Position,
    Momentum,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// f(eta) over an eta grid for a list of modes.
    Sweep(SweepArgs),
    /// eta0(n, m) for every n <= n-max, m <= m-max.
    Threshold(ThresholdArgs),
    /// Full entropy report for one (n, m, eta) as JSON.
    Criterion(CriterionArgs),
    /// Normal-mode parameters of a coupled Hamiltonian as JSON.
    Diagonalize(DiagonalizeArgs),
    /// Cross-check closed forms against quadrature.
    Verify(VerifyArgs),
    /// Sample the eigenfunction on a (u+, u-) grid as CSV.
    Wavefunction(WavefunctionArgs),
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Comma-separated n:m pairs.
    #[arg(long, default_value = "0:0,1:1,2:2,3:3")]
    pub modes: String,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub eta_min: f64,
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub eta_max: f64,
    #[arg(long, default_value_t = 201)]
    pub steps: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Also write an SVG line plot here.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Output file (default: standard output).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ThresholdArgs {
    #[arg(long, default_value_t = 5)]
    pub n_max: u32,
    #[arg(long, default_value_t = 5)]
    pub m_max: u32,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CriterionArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub m: u32,
    #[arg(long, allow_negative_numbers = true)]
    pub eta: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DiagonalizeArgs {
    #[arg(long, default_value_t = 1.0)]
    pub m1: f64,
    #[arg(long, default_value_t = 1.0)]
    pub m2: f64,
    #[arg(long = "A", allow_negative_numbers = true)]
    pub a: f64,
    #[arg(long = "B", allow_negative_numbers = true)]
    pub b: f64,
    #[arg(long = "C", allow_negative_numbers = true)]
    pub c: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 8)]
    pub n_max: u32,
    /// `text` prints the table, `json` prints the machine report.
    #[arg(long, value_enum, default_value_t = VerifyFormat::Text)]
    pub format: VerifyFormat,
    /// Write the JSON report here (the table still goes to standard output).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct WavefunctionArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub m: u32,
    #[arg(long, allow_negative_numbers = true)]
    pub eta: f64,
    #[arg(long, value_enum, default_value_t = SpaceArg::Position)]
    pub space: SpaceArg,
    #[arg(long, default_value_t = -4.0, allow_negative_numbers = true)]
    pub u_min: f64,
    #[arg(long, default_value_t = 4.0, allow_negative_numbers = true)]
    pub u_max: f64,
    #[arg(long, default_value_t = 41)]
    pub steps: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Sweep(args) => commands::sweep(&args),
        Command::Threshold(args) => commands::threshold(&args),
        Command::Criterion(args) => commands::criterion(&args),
        Command::Diagonalize(args) => commands::diagonalize(&args),
        Command::Verify(args) => verify::run(&args),
        Command::Wavefunction(args) => commands::wavefunction(&args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
