//! `diceways`: exact dice-sum counts, tables and representability checks.
//!
//! Exit codes: 0 success, 2 usage error, 3 verification or consistency
//! failure.

mod commands;
mod spec;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

pub const EXIT_USAGE: u8 = 2;
pub const EXIT_FAILED_CHECK: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "diceways",
    version,
    about = "Exact counting of dice sums and related compositions"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineChoice {
    Poly,
    AddDie,
    Lambda,
    Closed,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Ways n dice with faces 1..m can sum to N.
    Count {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        dice: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        faces: u32,
        #[arg(long)]
        sum: u64,
        #[arg(long, value_enum, default_value = "poly")]
        engine: EngineChoice,
        /// Cross-check against exhaustive enumeration.
        #[arg(long)]
        oracle: bool,
        /// Largest number of outcomes the oracle may enumerate.
        #[arg(long, default_value_t = diceways_core::oracle::DEFAULT_BUDGET)]
        oracle_budget: u128,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Full table of counts for 1..=max-dice dice and sums 1..=max-sum.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        faces: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_dice: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_sum: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// Distribution (or one count) for a pool of unlike dice.
    Hetero {
        /// Face marks of one die: `lo..hi` or a comma list such as `2,4,4`.
        #[arg(long = "die", required = true, value_parser = spec::parse_die)]
        dice: Vec<diceways_core::MarkedDie>,
        #[arg(long)]
        sum: Option<u64>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Check that every number up to a bound is a sum of k polygonal numbers.
    PolygonalCheck {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
        sides: u64,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        power: u32,
        #[arg(long)]
        upto: usize,
        /// Count multisets of exactly k parts (0 allowed) instead of ordered tuples.
        #[arg(long)]
        unordered: bool,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Solutions of two simultaneous linear equations in nonnegative integers.
    Virgins {
        /// Coefficients `a:alpha` of one unknown.
        #[arg(long = "gen", required = true, value_parser = spec::parse_pair)]
        generators: Vec<(u64, u64)>,
        /// Right-hand sides `n:nu`.
        #[arg(long, value_parser = spec::parse_pair)]
        targets: (u64, u64),
        /// Require every unknown to be at least 1.
        #[arg(long)]
        positive: bool,
        /// Also list up to this many solutions.
        #[arg(long)]
        list: Option<usize>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Recompute the historical golden tables and report mismatches.
    VerifyPaper {
        /// table1, s22 or all.
        #[arg(long, default_value = "all")]
        table: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = commands::run(cli.command);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(outcome.stdout.as_bytes());
    let _ = stdout.flush();
    if !outcome.stderr.is_empty() {
        eprint!("{}", outcome.stderr);
    }
    ExitCode::from(outcome.code)
}
