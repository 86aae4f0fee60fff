//! `cyclemix` — walk snapshots, time averages, temporal fluctuations and
//! mixing diagnostics on cycle graphs, as CSV or JSON tables.
//!
//! Exit codes: 0 success, 2 configuration error, 3 violated numerical
//! invariant.

mod output;
mod run;
mod timeparse;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use timeparse::GridSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    CtQuantum,
    CtClassical,
    #[value(alias = "dt-coined")]
    DtQuantum,
    DtClassical,
}

impl ModelArg {
    pub fn name(self) -> &'static str {
        match self {
            ModelArg::CtQuantum => "ct-quantum",
            ModelArg::CtClassical => "ct-classical",
            ModelArg::DtQuantum => "dt-quantum",
            ModelArg::DtClassical => "dt-classical",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Closed,
    Resonance,
    Quadrature,
    All,
}

impl RouteArg {
    pub fn name(self) -> &'static str {
        match self {
            RouteArg::Closed => "closed",
            RouteArg::Resonance => "resonance",
            RouteArg::Quadrature => "quadrature",
            RouteArg::All => "all",
        }
    }

    pub fn to_core(self) -> Option<cyclemix::mixing::Route> {
        match self {
            RouteArg::Closed => Some(cyclemix::mixing::Route::Closed),
            RouteArg::Resonance => Some(cyclemix::mixing::Route::Resonance),
            RouteArg::Quadrature => Some(cyclemix::mixing::Route::Quadrature),
            RouteArg::All => None,
        }
    }
}

fn time_value(s: &str) -> Result<f64, String> {
    timeparse::parse_time(s)
}

fn grid_value(s: &str) -> Result<GridSpec, String> {
    timeparse::parse_grid(s)
}

/// Distribution snapshots over a time grid.
#[derive(Debug, Args)]
pub struct EvolveArgs {
    #[arg(long, value_enum)]
    pub model: ModelArg,
    /// Cycle size N >= 3.
    #[arg(long)]
    pub n: u64,
    /// Single time (continuous models); accepts `pi` literals like `4pi/9`.
    #[arg(long, value_parser = time_value)]
    pub t: Option<f64>,
    /// Time grid start:stop:step (continuous models).
    #[arg(long, value_parser = grid_value)]
    pub tgrid: Option<GridSpec>,
    /// Step count (discrete models); emits every step 0..=K.
    #[arg(long)]
    pub steps: Option<u64>,
}

/// Time-averaged distribution by one or all routes.
#[derive(Debug, Args)]
pub struct AverageArgs {
    #[arg(long, value_enum)]
    pub model: ModelArg,
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_enum)]
    pub route: RouteArg,
    /// Quadrature horizon T.
    #[arg(long, default_value_t = 1e4, value_parser = time_value)]
    pub horizon: f64,
}

/// Temporal standard deviation by one or all routes.
#[derive(Debug, Args)]
pub struct SigmaArgs {
    #[arg(long, value_enum)]
    pub model: ModelArg,
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_enum)]
    pub route: RouteArg,
    /// Quadrature horizon T.
    #[arg(long, default_value_t = 1e4, value_parser = time_value)]
    pub horizon: f64,
}

/// Scan for instantaneous uniform mixing times.
#[derive(Debug, Args)]
pub struct IumpArgs {
    #[arg(long)]
    pub n: u64,
    /// Scan horizon.
    #[arg(long, value_parser = time_value)]
    pub tmax: f64,
    /// A refined minimum below this threshold counts as a mixing time.
    #[arg(long, default_value_t = 1e-8)]
    pub eps: f64,
}

/// Distance-to-uniform curve over a time grid.
#[derive(Debug, Args)]
pub struct CurveArgs {
    #[arg(long, value_enum)]
    pub model: ModelArg,
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_parser = grid_value)]
    pub tgrid: GridSpec,
}

/// Diffusive-scaling pair (d_N(t N^2), d_inf(t)) for the classical walk.
#[derive(Debug, Args)]
pub struct LimitArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_parser = time_value)]
    pub t: f64,
}

/// Bessel identity checks at one (N, t).
#[derive(Debug, Args)]
pub struct BesselCheckArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_parser = time_value)]
    pub t: f64,
    /// Table order (defaults to the truncation order for t).
    #[arg(long)]
    pub order: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum MixingCommand {
    Iump(IumpArgs),
    Curve(CurveArgs),
    Limit(LimitArgs),
}

#[derive(Debug, Subcommand)]
enum BesselCommand {
    Check(BesselCheckArgs),
}

#[derive(Debug, Subcommand)]
enum Command {
    Evolve(EvolveArgs),
    Average(AverageArgs),
    Sigma(SigmaArgs),
    #[command(subcommand)]
    Mixing(MixingCommand),
    #[command(subcommand)]
    Bessel(BesselCommand),
}

#[derive(Debug, Parser)]
#[command(
    name = "cyclemix",
    version,
    about = "Quantum and classical random walks on cycle graphs: snapshots, time averages, temporal fluctuations, mixing"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Reserved; every computation is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Rayon thread count (output is identical for any value).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

fn dispatch(cli: &Cli) -> run::CliResult {
    match &cli.command {
        Command::Evolve(args) => run::evolve(args),
        Command::Average(args) => run::average(args),
        Command::Sigma(args) => run::sigma(args),
        Command::Mixing(MixingCommand::Iump(args)) => run::mixing_iump(args),
        Command::Mixing(MixingCommand::Curve(args)) => run::mixing_curve(args),
        Command::Mixing(MixingCommand::Limit(args)) => run::mixing_limit(args),
        Command::Bessel(BesselCommand::Check(args)) => run::bessel_check(args),
    }
}

#[cfg(feature = "parallel")]
fn configure_threads(threads: Option<usize>) {
    if let Some(k) = threads {
        // ignore failure: the global pool may already exist in tests
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    }
}

#[cfg(not(feature = "parallel"))]
fn configure_threads(_threads: Option<usize>) {}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    configure_threads(cli.threads);
    match dispatch(&cli) {
        Ok(output) => {
            if let Err(e) = output.write(cli.format, cli.out.as_deref()) {
                eprintln!("cyclemix: cannot write output: {e}");
                return std::process::ExitCode::from(2);
            }
            std::process::ExitCode::from(output.status)
        }
        Err(err) => {
            eprintln!("cyclemix: {err}");
            std::process::ExitCode::from(err.exit_code())
        }
    }
}
