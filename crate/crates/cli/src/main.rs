use std::io::Write;
use std::process::ExitCode;

use binocont::{
    cmd_bench, cmd_subsets, cmd_sum, cmd_table, cmd_verify, Limits, Outcome, OutputFormat,
    SuiteArg, UsageError, EXIT_USAGE,
};
use binocont_core::verify::Bounds;
use binocont_core::ContinuantStrategy;
use clap::{Parser, Subcommand, ValueEnum};

/// Exact evaluation and verification of a binomial-sum identity built on
/// continuant polynomials.
#[derive(Parser)]
#[command(name = "binocont", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate both sums at one (n, l).
    Sum {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Grid of common values, rows l = 1..l-max, columns n = 1..n-max.
    Table {
        #[arg(long, default_value_t = 8)]
        n_max: u32,
        #[arg(long, default_value_t = 8)]
        l_max: u32,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Run an exhaustive verification sweep.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long)]
        l_max: Option<u32>,
        #[arg(long)]
        k_max: Option<u32>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Sub-sums of both sides over every nonempty index subset.
    Subsets {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Time the continuant strategies after checking they agree.
    Bench {
        #[arg(long, value_enum)]
        strategy: Option<StrategyArg>,
        #[arg(long)]
        n: i64,
        #[arg(long, default_value_t = 5)]
        reps: u32,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum StrategyArg {
    Recurrence,
    MatrixPower,
    ClosedForm,
    DeterminantOracle,
}

impl From<StrategyArg> for ContinuantStrategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Recurrence => ContinuantStrategy::Recurrence,
            StrategyArg::MatrixPower => ContinuantStrategy::MatrixPower,
            StrategyArg::ClosedForm => ContinuantStrategy::ClosedForm,
            StrategyArg::DeterminantOracle => ContinuantStrategy::DeterminantOracle,
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, UsageError> {
    let limits = Limits::from_env()?;
    match cli.command {
        Command::Sum { n, l, format } => cmd_sum(n, l, format, limits),
        Command::Table {
            n_max,
            l_max,
            format,
            jobs,
        } => cmd_table(n_max, l_max, format, jobs, limits),
        Command::Verify {
            suite,
            n_max,
            l_max,
            k_max,
            format,
            jobs,
        } => {
            let bounds = Bounds {
                n_max,
                l_max,
                k_max,
            };
            cmd_verify(suite.into(), bounds, format, jobs, limits)
        }
        Command::Subsets { n, l, format } => cmd_subsets(n, l, format),
        Command::Bench {
            strategy,
            n,
            reps,
            format,
        } => cmd_bench(strategy.map(Into::into), n, reps, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stdout.flush();
            eprint!("{}", out.stderr);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
