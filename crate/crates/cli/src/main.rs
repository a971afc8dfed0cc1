use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod render;

use commands::Failure;

/// Conflict-free connection colorings: analysis, construction, exact search,
/// extremal families and theorem checks.
#[derive(Parser, Debug)]
#[command(name = "cfc", version)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; `gen` defaults to text (an edge list), everything else
    /// to json.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,

    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Degrees, connectivity, blocks and the cut-edge subgraph.
    Analyze(InputArgs),
    /// Build and verify the explicit two-coloring.
    Color2 {
        #[command(flatten)]
        input: InputArgs,
        /// Verify this coloring file instead of constructing one.
        #[arg(long, value_name = "COLORING")]
        check: Option<PathBuf>,
    },
    /// Exact conflict-free connection number by exhaustive search.
    Cfc {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 6)]
        max_colors: usize,
        /// Cap on verification steps.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Emit a family member as an edge list, e.g. `gen H 3 4`.
    Gen { family: String, params: Vec<usize> },
    /// Randomized theorem check (`verify 3.1`) or sharpness certificate
    /// (`verify sharpness:S --t 3`).
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Edge-list file, or `-` for stdin.
    #[arg(conflicts_with = "family", required_unless_present = "family")]
    pub path: Option<PathBuf>,
    /// Generate the input instead, e.g. `--family "S 3"`.
    #[arg(long)]
    pub family: Option<String>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Result id (2.2, 2.3, 2.4, 2.6, 3.1, 3.4, 4.1 to 4.5) or `sharpness:FAMILY`.
    pub target: String,
    #[arg(long, default_value_t = 200)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    /// Order parameter for families indexed by `n`.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub n_min: Option<usize>,
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Random graph model: gnp, glued-blocks, clique-tree or mixed.
    #[arg(long)]
    pub model: Option<String>,
    #[arg(long)]
    pub budget: Option<u64>,
    /// Directory for the first counterexample found.
    #[arg(long)]
    pub counterexample_dir: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze(input) => commands::analyze(input, cli.format),
        Command::Color2 { input, check } => {
            commands::color2(input, check.as_deref(), cli.format, cli.out.as_deref())
        }
        Command::Cfc {
            input,
            max_colors,
            budget,
        } => commands::cfc(input, *max_colors, *budget, cli.format),
        Command::Gen { family, params } => commands::gen(family, params, cli.format),
        Command::Verify(args) => commands::verify(args, cli.format),
    };
    let (output, code) = match result {
        Ok(done) => (done.output, done.code),
        Err(Failure { message, code }) => {
            eprintln!("error: {message}");
            return ExitCode::from(code);
        }
    };
    // color2 writes the coloring file itself; everything else goes to --out
    let target = match &cli.command {
        Command::Color2 { .. } => None,
        _ => cli.out.as_deref(),
    };
    match target {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &output) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{output}"),
    }
    ExitCode::from(code)
}
