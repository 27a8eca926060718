use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tdv_cli::verify::{cmd_verify, parse_range, VerifyPlan, DEFAULT_RANDOM, DEFAULT_SEED};
use tdv_cli::{cmd_gen, cmd_solve, CliError, SolveOptions, EXIT_OK, EXIT_VERIFY_FAILED};
use tdv_core::io::IndexBase;
use tdv_core::solver::with_threads;

/// Exact total domination number, γ_t-set count and total domination
/// values for small graphs.
#[derive(Parser)]
#[command(name = "tdv", version)]
struct Cli {
    /// Worker threads for the solver (default: all cores).
    #[arg(long, global = true, env = "TDV_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one graph given as an edge-list file, a family spec, or `-` for stdin.
    Solve(SolveArgs),
    /// Compare closed forms with the solver and run the property suite.
    Verify(VerifyArgs),
    /// Write the edge list of a family spec to a file, or `-` for stdout.
    Gen { spec: String, out: String },
}

#[derive(Args)]
struct SolveArgs {
    input: String,
    #[arg(long)]
    json: bool,
    /// Include every γ_t-set.
    #[arg(long)]
    tdm: bool,
    /// Run the property checks as well.
    #[arg(long)]
    checks: bool,
    /// Input files number vertices from 0.
    #[arg(long)]
    zero_based: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_name = "A..B", value_parser = parse_range)]
    paths: Option<std::ops::RangeInclusive<usize>>,
    #[arg(long, value_name = "A..B", value_parser = parse_range)]
    cycles: Option<std::ops::RangeInclusive<usize>>,
    /// Every composition of every n up to this bound into at least two parts.
    #[arg(long, value_name = "N")]
    multipartite_max: Option<usize>,
    #[arg(long)]
    figures: bool,
    #[arg(long)]
    queens: bool,
    /// Run every check on the fixed corpus plus the random graphs.
    #[arg(long)]
    properties: bool,
    /// Random connected graphs added to the property corpus.
    #[arg(long, value_name = "N")]
    random: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

impl VerifyArgs {
    fn plan(self) -> VerifyPlan {
        let plan = VerifyPlan {
            paths: self.paths,
            cycles: self.cycles,
            multipartite_max: self.multipartite_max,
            figures: self.figures,
            queens: self.queens,
            properties: self.properties || self.random.is_some(),
            random: self.random.unwrap_or(DEFAULT_RANDOM),
            seed: self.seed,
        };
        if plan.is_empty() {
            VerifyPlan {
                seed: self.seed,
                ..VerifyPlan::everything()
            }
        } else {
            plan
        }
    }
}

fn run(command: Command) -> Result<i32, CliError> {
    let mut stdout = std::io::stdout().lock();
    let text = match command {
        Command::Solve(a) => {
            let opts = SolveOptions {
                tdm: a.tdm,
                checks: a.checks,
                base: if a.zero_based {
                    IndexBase::Zero
                } else {
                    IndexBase::One
                },
            };
            cmd_solve(&a.input, opts, a.json)?
        }
        Command::Verify(a) => {
            let summary = cmd_verify(&a.plan())?;
            let _ = stdout.write_all(summary.render().as_bytes());
            return Ok(if summary.ok() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            });
        }
        Command::Gen { spec, out } => cmd_gen(&spec, &out)?.unwrap_or_default(),
    };
    let _ = stdout.write_all(text.as_bytes());
    Ok(EXIT_OK)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.threads {
        Some(t) => with_threads(t, || run(cli.command))
            .map_err(CliError::from)
            .and_then(|r| r),
        None => run(cli.command),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("tdv: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
