//! `berge`: construct extremal colorings, check them against Berge targets,
//! search small Berge Ramsey numbers exhaustively, and classify good graphs.
//!
//! Exit codes: 0 pass, 1 witness found, 2 input error, 3 resource cap,
//! 4 internal error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "berge", version, about = "Berge copies and Berge Ramsey numbers in uniform hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write one of the explicit lower-bound colorings with its property report.
    Construct(ConstructArgs),
    /// Check every color class of an HRG file against its target.
    Check(CheckArgs),
    /// Exhaustively search colorings of a complete hypergraph.
    Search(SearchArgs),
    /// Decide the good-graph criterion for an edge-list graph.
    Good(GoodArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    Thm2,
    Thm3i,
    Prop4,
    Prop5,
    Prop7,
    S5cyclic,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Switch {
    On,
    Off,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    pub name: Construction,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub c: Option<u8>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Coloring in HRG format.
    pub file: PathBuf,
    /// Per-color targets: `K<n>`, `P<n>`, `S<n>`, `tree<n>` or `file:<path>`, comma-separated.
    #[arg(long)]
    pub targets: String,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    #[arg(long, default_value_t = 2)]
    pub c: u8,
    #[arg(long)]
    pub targets: String,
    /// Inclusive vertex-count range `a..b` scanned for the least forcing N.
    #[arg(long, conflicts_with = "n", required_unless_present = "n")]
    pub range: Option<String>,
    /// Search a single vertex count.
    #[arg(long)]
    pub n: Option<usize>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long, value_enum, default_value_t = Switch::On)]
    pub symmetry: Switch,
    /// Recorded in output headers; the search itself is deterministic.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Args, Debug)]
pub struct GoodArgs {
    /// Graph in edge-list format.
    pub file: PathBuf,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(i64).range(1..=2))]
    pub goodness_offset: i64,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Construct(a) => commands::construct(&a),
        Command::Check(a) => commands::check(&a),
        Command::Search(a) => commands::search(&a),
        Command::Good(a) => commands::good(&a),
    };
    match result {
        Ok(status) => ExitCode::from(status.code()),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
