mod commands;
mod io;

use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fallcolor::coloring::{SolveError, SolverConfig, ENGINE_MAX_VERTICES};
use thiserror::Error;

#[derive(Parser)]
#[command(name = "fallcolor", version, about = "Fall colorings: search, constructions and verification")]
struct Cli {
    #[command(flatten)]
    run: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct RunConfig {
    /// Time limit per solve, in seconds.
    #[arg(long, global = true, value_parser = positive_seconds)]
    timeout: Option<Duration>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Largest graph the exact solvers accept.
    #[arg(long, global = true, default_value_t = fallcolor::coloring::DEFAULT_CAPACITY, value_parser = capacity)]
    capacity: usize,
    /// Seed for random corpus extensions.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Read and print colors and map ids starting from 1.
    #[arg(long, global = true)]
    one_based: bool,
}

impl RunConfig {
    pub fn solver(&self) -> SolverConfig {
        let cfg = SolverConfig::default().with_capacity(self.capacity);
        match self.timeout {
            Some(t) => cfg.with_timeout(t),
            None => cfg,
        }
    }
}

fn positive_seconds(s: &str) -> Result<Duration, String> {
    let secs: f64 = s.parse().map_err(|_| format!("`{s}` is not a number of seconds"))?;
    if secs.is_finite() && secs > 0.0 {
        Ok(Duration::from_secs_f64(secs))
    } else {
        Err("timeout must be positive".into())
    }
}

fn capacity(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(c) if (1..=ENGINE_MAX_VERTICES).contains(&c) => Ok(c),
        _ => Err(format!("capacity must be between 1 and {ENGINE_MAX_VERTICES}")),
    }
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Print a graph as graph6 (or DOT).
    Build {
        #[arg(long)]
        dot: bool,
        #[command(subcommand)]
        spec: commands::BuildSpec,
    },
    /// Compute Fall(G) with one witness per member.
    Fall {
        graph: String,
        /// Only decide this k.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Check a coloring file (one line of colors, `-` for stdin) against a graph.
    Verify { graph: String, coloring: String },
    /// Type-II homomorphism checks.
    Hom {
        #[command(subcommand)]
        cmd: commands::HomCmd,
    },
    /// Emit a constructed graph, its coloring, and a verdict.
    Construct {
        #[command(subcommand)]
        name: commands::ConstructCmd,
    },
    /// Decide t ∈ Fall(G) through the chromatic numbers of the Ĝ_t family.
    Ghat {
        graph: String,
        #[arg(long)]
        t: usize,
        /// Maximum number of choice tuples to visit.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Fall set of the complement of a bipartite graph, via maximum matching.
    Bipc { graph: String },
    /// Compare chi_f(G x H) with min(chi_f(G), chi_f(H)) over a corpus.
    Hunt {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Extra seeded random connected graphs on max_n + 1 vertices.
        #[arg(long, default_value_t = 0)]
        random: usize,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Limit(String),
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::ZeroColors | SolveError::NoFallColoring => CliError::Usage(e.to_string()),
            _ => CliError::Limit(e.to_string()),
        }
    }
}

/// What a command concluded; maps onto the exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Holds,
    Fails,
    Undecided,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = cli.run;
    let result = match cli.command {
        Command::Build { dot, spec } => commands::build(&run, spec, dot),
        Command::Fall { graph, k } => commands::fall(&run, &graph, k),
        Command::Verify { graph, coloring } => commands::verify(&run, &graph, &coloring),
        Command::Hom { cmd } => commands::hom(&run, cmd),
        Command::Construct { name } => commands::construct(&run, name),
        Command::Ghat { graph, t, budget } => commands::ghat(&run, &graph, t, budget),
        Command::Bipc { graph } => commands::bipc(&run, &graph),
        Command::Hunt { max_n, random } => commands::hunt(&run, max_n, random),
    };
    match result {
        Ok(Status::Holds) => ExitCode::SUCCESS,
        Ok(Status::Fails) => ExitCode::from(1),
        Ok(Status::Undecided) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                CliError::Usage(_) => 2,
                CliError::Limit(_) => 3,
            })
        }
    }
}
