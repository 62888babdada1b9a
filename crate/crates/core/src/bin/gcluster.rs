use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gencluster::cli::{
    cmd_explore, cmd_mutate, cmd_verify, parse_path, Config, Format, Limits, Selector, VerifyOptions, DEFAULT_RNG_SEED,
};
use gencluster::Result;

/// Exact computation in generalized cluster algebras.
#[derive(Parser)]
#[command(name = "gcluster", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the seed at a path with its D-matrix (and C, G, F for principal coefficients).
    Mutate {
        #[arg(long)]
        config: String,
        /// Comma-separated 1-based directions, e.g. 1,2,1.
        #[arg(long, default_value = "")]
        path: String,
    },
    /// Enumerate the exchange graph.
    Explore {
        #[arg(long)]
        config: String,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        max_vertices: Option<usize>,
        /// dot or json
        #[arg(long, default_value = "dot")]
        format: String,
        /// Write the graph here instead of stdout.
        #[arg(long)]
        output: Option<String>,
    },
    /// Run a check and print a JSON report; exit status 0 iff no violations.
    Verify {
        /// connected-subgraph, d-trichotomy, compatible-sets, d-equality,
        /// bijection, cluster-formula, cg-duality or separation
        check: String,
        #[arg(long)]
        config: String,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        max_vertices: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_RNG_SEED)]
        rng_seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
}

/// Writes a line to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Mutate { config, path } => {
            let pattern = Config::load(&config)?.pattern()?;
            let path = parse_path(&path, pattern.rank())?;
            let dump = cmd_mutate(&pattern, &path)?;
            emit(&serde_json::to_string_pretty(&dump).expect("dump serializes"));
            Ok(true)
        }
        Command::Explore { config, depth, max_vertices, format, output } => {
            let format: Format = format.parse()?;
            let pattern = Config::load(&config)?.pattern()?;
            let (text, summary) = cmd_explore(&pattern, Limits { depth, max_vertices }, format)?;
            match output {
                Some(file) => {
                    std::fs::write(&file, text)
                        .map_err(|e| gencluster::Error::Argument(format!("cannot write {file}: {e}")))?;
                    emit(&summary);
                }
                None => {
                    emit(text.trim_end());
                    eprintln!("{summary}");
                }
            }
            Ok(true)
        }
        Command::Verify { check, config, depth, max_vertices, rng_seed, trials } => {
            let selector: Selector = check.parse()?;
            let config = Config::load(&config)?;
            let opts = VerifyOptions { limits: Limits { depth, max_vertices }, rng_seed, trials };
            let outcome = cmd_verify(&config, selector, &opts)?;
            emit(&serde_json::to_string_pretty(&outcome.report).expect("report serializes"));
            Ok(outcome.passed)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
