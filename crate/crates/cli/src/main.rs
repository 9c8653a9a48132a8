use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Debug, Parser)]
#[command(name = "chromsym", version, about = "Schur expansions of chromatic symmetric functions")]
pub struct Cli {
    /// Largest graph accepted by any command.
    #[arg(long, global = true, env = "CHROMSYM_MAX_VERTICES", default_value_t = 14,
          value_parser = clap::value_parser!(u64).range(1..=64))]
    pub max_vertices: u64,

    /// Largest number of tabloids the `tabloids` command will list.
    #[arg(long, global = true, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_tabloids: u64,

    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphArgs {
    /// Complete multipartite graph K_lambda, e.g. 3,2.
    #[arg(long)]
    pub multipartite: Option<String>,

    /// JSON file {"n": .., "covers": [[low, high], ..], "labels": [..]}.
    #[arg(long)]
    pub poset: Option<PathBuf>,

    /// JSON file {"n": .., "edges": [[u, v], ..]}.
    #[arg(long)]
    pub graph: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = false, multiple = false)]
pub struct OptionalGraphArgs {
    #[arg(long)]
    pub multipartite: Option<String>,
    #[arg(long)]
    pub poset: Option<PathBuf>,
    #[arg(long)]
    pub graph: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Ascii,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Auto,
    Ww,
    Tabloid,
    Tail,
    Closed,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyArg {
    Witness,
    Full,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full Schur expansion of X_G.
    Expand {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value = "auto")]
        route: RouteArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// One Schur coefficient of X_G.
    Coeff {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value = "auto")]
        route: RouteArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Schur-positivity verdict for K_lambda.
    Classify {
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum)]
        verify: Option<VerifyArg>,
    },
    /// Cross-checks every applicable route against the oracle and scans
    /// for negative coefficients.
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Lists SRH tabloids of a shape, filled with a graph's vertices when a
    /// graph is given.
    Tabloids {
        #[arg(long)]
        shape: String,
        #[command(flatten)]
        graph: OptionalGraphArgs,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Number of spanning non-increasing sequences.
    Nsp {
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, conflicts_with = "lambda")]
        poset: Option<PathBuf>,
    },
    /// Runs the oracle cross-validation suite and prints a table.
    OracleCheck {
        /// Largest degree checked.
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..=10))]
        max_n: u64,
    },
}

/// Command outcome: the text to emit and whether a check failed.
pub struct Outcome {
    pub text: String,
    pub failed: bool,
}

pub enum Failure {
    /// Bad input or a cap exceeded; exit code 2.
    Usage(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(outcome) => {
            let mut text = outcome.text;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            let written = match &cli.output {
                Some(path) => fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
                None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if outcome.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
