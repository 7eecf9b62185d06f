//! `zs2x2`: exact command-line solver for 2x2 zero-sum games.
//!
//! Exit codes: 0 on success, 1 on any input error (including usage errors),
//! 2 when `--verify` finds a mismatch between the solver and its
//! cross-checks. Output is byte-deterministic for identical input bytes.

mod input;
mod report;

use std::collections::BTreeMap;
use std::process::ExitCode;

use anyhow::{anyhow, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use zs2x2_core::{MixedStrategy, Rational};

use input::{parse_batch, parse_game, read_source, GameInput};
use report::{
    br_machine, br_text, leader_machine, leader_text, solve_machine, solve_text, BrAnswer,
    LeaderAnswer, Solved, Style,
};

#[derive(Parser)]
#[command(
    name = "zs2x2",
    version,
    about = "Exact solver for 2x2 zero-sum games: equilibrium sets, values, \
             best responses, and commitment analysis"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify the game and report its full equilibrium set and value.
    Solve(SolveArgs),
    /// Best response of one player to a fixed opponent mixture.
    Br(BrArgs),
    /// Follower-exposure curve and optimal commitment for the leader.
    Leader(LeaderArgs),
    /// Shorthand for `solve --verify`.
    Verify(VerifyArgs),
    /// Solve every game in a JSON list, reporting in input order.
    Batch(BatchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Line-oriented human-readable report.
    Text,
    /// One JSON document per report, stable key order.
    Machine,
}

#[derive(Args)]
struct SolveArgs {
    /// Input file (JSON document or bare CSV); `-` reads stdin.
    input: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cross-check against the independent oracle, support enumeration,
    /// and an exact grid scan.
    #[arg(long)]
    verify: bool,
    /// Resolution of the verification grid scan.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    grid: u32,
}

#[derive(Args)]
struct BrArgs {
    /// Input file (JSON document or bare CSV); `-` reads stdin.
    input: String,
    /// Responding player: 1 (row) or 2 (column).
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    player: u8,
    /// Opponent's probability of their first action, as a rational.
    #[arg(long)]
    prob: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct LeaderArgs {
    /// Input file (JSON document or bare CSV); `-` reads stdin.
    input: String,
    /// Emit N+1 evenly spaced (beta, value) samples as CSV.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    samples: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Input file (JSON document or bare CSV); `-` reads stdin.
    input: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Resolution of the verification grid scan.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    grid: u32,
}

#[derive(Args)]
struct BatchArgs {
    /// JSON file holding an array of game documents.
    input: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cross-check every game; any mismatch makes the exit code 2.
    #[arg(long)]
    verify: bool,
    /// Resolution of the verification grid scan.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    grid: u32,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version are successes; every other parse problem is
            // an input error, reported with exit code 1 rather than clap's
            // default 2 (which this tool reserves for verification failures).
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let style = Style::from_env();
    match cli.cmd {
        Cmd::Solve(args) => {
            let verify_grid = args.verify.then_some(args.grid);
            run_solve(&args.input, args.format, verify_grid, &style)
        }
        Cmd::Verify(args) => run_solve(&args.input, args.format, Some(args.grid), &style),
        Cmd::Br(args) => {
            let game = load_game(&args.input)?;
            let prob: Rational = args
                .prob
                .parse()
                .map_err(|err| anyhow!("probability: {err}"))?;
            let opponent = MixedStrategy::new(prob)?;
            let answer = BrAnswer::compute(&game.matrix, args.player, &opponent);
            match args.format {
                Format::Text => print!("{}", br_text(&answer)),
                Format::Machine => println!("{}", br_machine(&answer)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Leader(args) => {
            let game = load_game(&args.input)?;
            let answer = LeaderAnswer::compute(&game, args.samples);
            match args.format {
                Format::Text => print!("{}", leader_text(&answer, &style)),
                Format::Machine => println!("{}", leader_machine(&answer)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Batch(args) => {
            let verify_grid = args.verify.then_some(args.grid);
            run_batch(&args.input, args.format, verify_grid, &style)
        }
    }
}

fn load_game(path: &str) -> Result<GameInput> {
    parse_game(&read_source(path)?)
}

fn run_solve(
    path: &str,
    format: Format,
    verify_grid: Option<u32>,
    style: &Style,
) -> Result<ExitCode> {
    let game = load_game(path)?;
    let solved = Solved::new(&game, verify_grid, None);
    match format {
        Format::Text => print!("{}", solve_text(&solved, style)),
        Format::Machine => println!("{}", solve_machine(&solved)),
    }
    Ok(exit_for(&solved))
}

fn run_batch(
    path: &str,
    format: Format,
    verify_grid: Option<u32>,
    style: &Style,
) -> Result<ExitCode> {
    let games = parse_batch(&read_source(path)?)?;
    let mut counts: BTreeMap<&'static str, usize> = BTreeMap::new();
    let mut mismatch = false;
    let mut out = String::new();
    for (index, game) in games.iter().enumerate() {
        let solved = Solved::new(game, verify_grid, Some(index));
        *counts.entry(solved.eq.label().tag()).or_insert(0) += 1;
        if let Some(v) = &solved.verification {
            mismatch |= !v.verified();
        }
        match format {
            Format::Text => {
                match &solved.id {
                    Some(id) => out.push_str(&format!("--- game {index} ({id}) ---\n")),
                    None => out.push_str(&format!("--- game {index} ---\n")),
                }
                out.push_str(&solve_text(&solved, style));
                out.push('\n');
            }
            Format::Machine => {
                out.push_str(&solve_machine(&solved));
                out.push('\n');
            }
        }
    }
    match format {
        Format::Text => {
            out.push_str(&format!("summary: {} games\n", games.len()));
            for (label, count) in &counts {
                out.push_str(&format!("  {label}: {count}\n"));
            }
        }
        Format::Machine => {
            let summary = serde_json::json!({ "games": games.len(), "counts": counts });
            out.push_str(&summary.to_string());
            out.push('\n');
        }
    }
    print!("{out}");
    if mismatch {
        Ok(ExitCode::from(2))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn exit_for(solved: &Solved) -> ExitCode {
    match &solved.verification {
        Some(v) if !v.verified() => ExitCode::from(2),
        _ => ExitCode::SUCCESS,
    }
}
