use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mpp_coloring::cli::{
    self, AnalyzeOptions, CliError, GenKind, SweepOptions, EXIT_FAIL, EXIT_OK,
};
use mpp_coloring::oracle::OracleBudget;

#[derive(Parser)]
#[command(name = "mppc", version, about = "Maximum proper partial 0-1 colorings")]
struct Args {
    /// Input edge list; standard input when omitted.
    #[arg(short, long, global = true)]
    input: Option<PathBuf>,
    /// Pretty-print JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Seed for random generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest edge count handed to the exhaustive oracle.
    #[arg(long, global = true, default_value_t = 14)]
    budget_edges: usize,
    /// Output file or directory.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report λ, α, β and tree facts for a graph.
    Analyze {
        /// Fail with exit code 3 when the oracle would exceed its budget.
        #[arg(long)]
        exact: bool,
    },
    /// Build a maximum coloring whose 0-class is a maximum matching.
    Construct {
        /// Re-check the certificate before reporting.
        #[arg(long)]
        verify: bool,
        /// Also write the coloring as `u v c` lines to this file.
        #[arg(long)]
        coloring_out: Option<PathBuf>,
    },
    /// Check a coloring (as `u v c` lines) against the input forest.
    Verify {
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Emit generated trees as `---`-separated edge lists.
    Gen {
        #[arg(value_enum)]
        kind: GenKindArg,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        cherries: Option<usize>,
        #[arg(long)]
        count: Option<usize>,
    },
    /// Exhaustively check every even-leaf tree up to `--max-n` vertices.
    Sweep {
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKindArg {
    PruferAll,
    RandomEvenLeaf,
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, format!("{text}\n"))
            .map_err(|e| CliError::Input(format!("{}: {e}", p.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(args: Args) -> Result<i32, CliError> {
    let budget = OracleBudget::with_max_edges(args.budget_edges);
    let input = args.input.as_deref();
    match args.command {
        Command::Analyze { exact } => {
            let g = cli::read_graph(input)?;
            let report = cli::analyze(&g, &AnalyzeOptions { budget, exact })?;
            emit(&cli::to_json(&report, args.pretty), args.out.as_ref())?;
            Ok(EXIT_OK)
        }
        Command::Construct {
            verify,
            coloring_out,
        } => {
            let g = cli::read_graph(input)?;
            let (report, f) = cli::construct_command(&g, verify)?;
            if let Some(p) = coloring_out {
                std::fs::write(&p, f.to_text())
                    .map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?;
            }
            emit(&cli::to_json(&report, args.pretty), args.out.as_ref())?;
            Ok(EXIT_OK)
        }
        Command::Verify { coloring } => {
            let g = cli::read_graph(input)?;
            let text = cli::read_input(Some(&coloring))?;
            let report = cli::verify_command(&g, &text)?;
            emit(&cli::to_json(&report, args.pretty), args.out.as_ref())?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Gen {
            kind,
            n,
            cherries,
            count,
        } => {
            let kind = match kind {
                GenKindArg::PruferAll => GenKind::PruferAll {
                    n: n.ok_or_else(|| CliError::Input("prufer-all needs --n".into()))?,
                    count,
                },
                GenKindArg::RandomEvenLeaf => GenKind::RandomEvenLeaf {
                    cherries: cherries.ok_or_else(|| {
                        CliError::Input("random-even-leaf needs --cherries".into())
                    })?,
                    seed: args.seed,
                    count: count.unwrap_or(1),
                },
            };
            let text = cli::gen_command(&kind)?;
            emit(text.trim_end(), args.out.as_ref())?;
            Ok(EXIT_OK)
        }
        Command::Sweep { max_n } => {
            let opts = SweepOptions {
                budget,
                out: args.out.clone(),
            };
            let summary = cli::sweep_command(max_n, &opts)?;
            println!("{}", cli::to_json(&summary, args.pretty));
            Ok(if summary.passed() { EXIT_OK } else { EXIT_FAIL })
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() {
                cli::EXIT_INPUT
            } else {
                EXIT_OK
            };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(args) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("mppc: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
