//! `quadcusp`: seeded, reproducible experiments on curves on quadric
//! surfaces, printed as JSON run reports.

mod cmd;
mod report;
mod scheme;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use quadcusp::exactalg::FieldSpec;

use report::{CliError, RunReport};

#[derive(Parser, Debug)]
#[command(name = "quadcusp", version, about = "Curves on the smooth quadric and the quadric cone")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// `q` or `p:<prime>`.
    #[arg(long, global = true, default_value = "p:101")]
    pub field: String,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = quadcusp::linsys::DEFAULT_RETRIES)]
    pub retries: usize,
    /// Add wall-clock timing to the report (breaks byte-identical output).
    #[arg(long, global = true)]
    pub timing: bool,
    /// JSON output; this is the default.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Smooth, cone or cuspidal curve from a seeded member of a linear system.
    Construct(cmd::construct::ConstructArgs),
    /// Injectivity of the projection from a point.
    ProjectCheck(cmd::project::ProjectArgs),
    /// Inner sets of a curve over a small finite field.
    Census(cmd::census::CensusArgs),
    /// Riemann-Roch data, series classification and the plane-model pipeline.
    Hyperelliptic(cmd::hyper::HyperArgs),
    /// Closed-form genus formulas and bounds.
    Formulas(cmd::formulas::FormulaArgs),
    /// h0 and h1 of a linear system through zero-dimensional schemes.
    System(cmd::system::SystemArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Construct(_) => "construct",
            Command::ProjectCheck(_) => "project-check",
            Command::Census(_) => "census",
            Command::Hyperelliptic(_) => "hyperelliptic",
            Command::Formulas(_) => "formulas",
            Command::System(_) => "system",
        }
    }
}

fn dispatch(cmd: &Command, g: &Global, field: FieldSpec) -> Result<RunReport, CliError> {
    match cmd {
        Command::Construct(a) => cmd::construct::run(a, g, field),
        Command::ProjectCheck(a) => cmd::project::run(a, g, field),
        Command::Census(a) => cmd::census::run(a, g, field),
        Command::Hyperelliptic(a) => cmd::hyper::run(a, g, field),
        Command::Formulas(a) => cmd::formulas::run(a),
        Command::System(a) => cmd::system::run(a, g, field),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = cli.command.name();
    let start = Instant::now();
    let outcome = cli
        .global
        .field
        .parse::<FieldSpec>()
        .map_err(CliError::from)
        .and_then(|field| dispatch(&cli.command, &cli.global, field));
    match outcome {
        Ok(mut r) => {
            r.command = name.into();
            r.field = cli.global.field.clone();
            r.seed = cli.global.seed;
            if cli.global.timing {
                r.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            match &r.csv {
                Some(csv) => print!("{csv}"),
                None => println!("{}", serde_json::to_string_pretty(&r).expect("report serializes")),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", serde_json::to_string_pretty(&e.report(name)).expect("error serializes"));
            ExitCode::from(e.exit_code())
        }
    }
}
