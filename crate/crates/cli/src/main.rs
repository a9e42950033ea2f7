mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Median decompositions and exact width parameters of small graphs.
#[derive(Parser, Debug)]
#[command(name = "mwkit", version)]
pub struct Cli {
    /// Worker threads for the oracles; results do not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute graph parameters, one line each.
    Analyze(AnalyzeArgs),
    /// Build a decomposition document.
    Build(BuildArgs),
    /// Validate a decomposition of a graph at a given level.
    Check(CheckArgs),
    /// Embed a median graph into a product of trees.
    Embed(EmbedArgs),
    /// Generate a graph from a named family.
    Gen(GenArgs),
    /// Render a graph, decomposition or embedding as DOT.
    ExportDot(ExportDotArgs),
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    pub graph: PathBuf,
    #[arg(long)]
    pub omega: bool,
    #[arg(long)]
    pub chi: bool,
    #[arg(long)]
    pub tw: bool,
    #[arg(long)]
    pub mw: bool,
    /// i-medianwidth for this i; repeatable.
    #[arg(long, value_name = "K")]
    pub mwi: Vec<usize>,
    #[arg(long)]
    pub dim: bool,
    #[arg(long)]
    pub median: bool,
    #[arg(long)]
    pub kw: bool,
    /// Write witness documents into this directory.
    #[arg(long, value_name = "DIR")]
    pub witness: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuildKind {
    Chromatic,
    CliqueBags,
    Product,
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    pub kind: BuildKind,
    pub graph: PathBuf,
    /// clique-bags: the decomposition to start from (default: one bag).
    /// product: the tree decompositions to multiply.
    pub inputs: Vec<PathBuf>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Step budget for clique-bag reduction.
    #[arg(long, default_value_t = mwkit::build::DEFAULT_REDUCTION_BUDGET)]
    pub budget: usize,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    pub graph: PathBuf,
    pub decomposition: PathBuf,
    /// m1m2, smooth, weak-smooth, gated, or `i K`.
    #[arg(default_value = "m1m2", num_args = 0..)]
    pub level: Vec<String>,
}

#[derive(Args, Debug)]
pub struct EmbedArgs {
    pub graph: PathBuf,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    /// path, cycle, complete, grid, hypercube, complete_multipartite,
    /// petersen, random_tree, random_median.
    pub family: String,
    pub params: Vec<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ExportDotArgs {
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Colour edges by Θ-class.
    #[arg(long)]
    pub theta: bool,
    /// Separator between names in bag labels.
    #[arg(long, default_value = "")]
    pub separator: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
