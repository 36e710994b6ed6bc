//! `tiered`: reproduce tables, run bijections and verify identities for
//! tiered trees and weighted permutations.

mod bijection;
mod table;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tiered::verify::{self, Profile, VerifyOptions};
use tiered::Error;

#[derive(Parser, Debug)]
#[command(name = "tiered", version, about = "Tiered trees, weights and q-Eulerian polynomials")]
struct Cli {
    /// Worker threads; defaults to the machine's parallelism.
    #[arg(long, global = true, env = "TIERED_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print one of the reference tables.
    Table(table::TableArgs),
    /// Apply one of the bijections to an input and print the image as JSON.
    Bijection(bijection::BijectionArgs),
    /// Run the check suites.
    Verify(VerifyArgs),
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    /// `all` or a comma-separated list of modules.
    #[arg(long, default_value = "all", env = "TIERED_SCOPE")]
    scope: String,

    #[arg(long, value_enum, default_value_t = ProfileArg::Quick, env = "TIERED_PROFILE")]
    profile: ProfileArg,

    /// Seed for sampled checks; exhaustive checks ignore it.
    #[arg(long, default_value_t = 0, env = "TIERED_SEED")]
    seed: u64,

    #[arg(long, value_enum, default_value_t = ReportFormat::Text, env = "TIERED_FORMAT")]
    format: ReportFormat,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

/// Failure of a command, mapped onto the exit-code contract.
#[derive(Debug)]
pub(crate) enum Failure {
    Usage(String),
    Capacity(String),
    Verification(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Capacity { .. } => Failure::Capacity(e.to_string()),
            Error::Verification(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

pub(crate) type CliResult<T> = Result<T, Failure>;

fn run_verify(args: &VerifyArgs) -> CliResult<bool> {
    let modules = verify::parse_scope(&args.scope)?;
    let opts = VerifyOptions {
        profile: match args.profile {
            ProfileArg::Quick => Profile::Quick,
            ProfileArg::Full => Profile::Full,
        },
        seed: args.seed,
    };
    let report = verify::run(&modules, &opts);
    match args.format {
        ReportFormat::Text => emit(&format!("{report}\n"))?,
        ReportFormat::Json => emit(&format!("{}\n", report.to_json()))?,
    }
    Ok(report.all_passed())
}

/// Writes to stdout; a reader that hangs up early (`| head`) is not an error.
pub(crate) fn emit(text: &str) -> CliResult<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn dispatch(cli: &Cli) -> CliResult<bool> {
    match &cli.command {
        Command::Table(args) => table::run(args).map(|()| true),
        Command::Bijection(args) => bijection::run(args).map(|()| true),
        Command::Verify(args) => run_verify(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match dispatch(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (2, m),
                Failure::Capacity(m) => (3, m),
                Failure::Verification(m) => (1, m),
                Failure::Io(m) => (2, m),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
