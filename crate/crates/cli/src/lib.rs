//! Command-line front end for the `mintri` enumerators.
//!
//! The binary is a thin wrapper over [`run`], which takes explicit reader and
//! writer handles so the whole pipeline can be driven from tests.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use mintri::Extender;
use thiserror::Error;

pub mod parse;
mod run;

pub use parse::{parse_graph, InputFormat, LabeledGraph, ParseError};
pub use run::run;

/// Environment variable overriding the node limit of `crossgraph`.
pub const CROSSGRAPH_LIMIT_VAR: &str = "MINTRI_CROSSGRAPH_MAX_NODES";
pub const DEFAULT_CROSSGRAPH_LIMIT: usize = 256;

#[derive(Parser, Debug)]
#[command(
    name = "mintri",
    version,
    about = "Enumerate minimal separators, minimal triangulations and proper tree decompositions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Subcommand, Debug)]
pub enum CliCommand {
    /// Stream the minimal separators.
    Minseps(CommonArgs),
    /// Stream the minimal triangulations as fill-edge sets.
    Triangulations(CommonArgs),
    /// Stream the proper tree decompositions.
    Treedecomps(CommonArgs),
    /// Print the separator graph (minimal separators, joined when they cross).
    Crossgraph(CommonArgs),
    /// Print counts, and with --delay-stats, delay percentiles.
    Stats(CommonArgs),
}

#[derive(clap::Args, Debug, Clone)]
pub struct CommonArgs {
    /// Input file, `-` for standard input.
    #[arg(default_value = "-")]
    pub input: PathBuf,
    /// Input format; guessed from the file extension when omitted.
    #[arg(long, value_enum)]
    pub format: Option<InputFormat>,
    /// Stop after this many answers.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub limit: Option<u64>,
    #[arg(long, value_enum, default_value_t = ExtenderArg::Blackbox)]
    pub extender: ExtenderArg,
    #[arg(long, short, value_enum, default_value_t = OutputFormat::Plain)]
    pub output: OutputFormat,
    /// Run every connected component separately instead of rejecting
    /// disconnected input.
    #[arg(long)]
    pub per_component: bool,
    /// Report per-answer delays and extender calls.
    #[arg(long)]
    pub delay_stats: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ExtenderArg {
    Blackbox,
    Separator,
}

impl From<ExtenderArg> for Extender {
    fn from(e: ExtenderArg) -> Self {
        match e {
            ExtenderArg::Blackbox => Extender::BlackBox,
            ExtenderArg::Separator => Extender::Separator,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Jsonl,
    Dot,
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Minseps,
    Triangulations,
    Treedecomps,
    Crossgraph,
    Stats,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Stdin,
    Path(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub input: Input,
    pub format: InputFormat,
    pub limit: Option<usize>,
    pub extender: Extender,
    pub output: OutputFormat,
    pub per_component: bool,
    pub delay_stats: bool,
    pub crossgraph_limit: usize,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            input: Input::Stdin,
            format: InputFormat::Dimacs,
            limit: None,
            extender: Extender::BlackBox,
            output: OutputFormat::Plain,
            per_component: false,
            delay_stats: false,
            crossgraph_limit: DEFAULT_CROSSGRAPH_LIMIT,
        }
    }

    /// Builds a config from parsed arguments. `crossgraph_limit` is read from
    /// the environment by the caller.
    pub fn from_cli(cli: Cli, crossgraph_limit: usize) -> Self {
        let (command, args) = match cli.command {
            CliCommand::Minseps(a) => (Command::Minseps, a),
            CliCommand::Triangulations(a) => (Command::Triangulations, a),
            CliCommand::Treedecomps(a) => (Command::Treedecomps, a),
            CliCommand::Crossgraph(a) => (Command::Crossgraph, a),
            CliCommand::Stats(a) => (Command::Stats, a),
        };
        let input = if args.input.as_os_str() == "-" { Input::Stdin } else { Input::Path(args.input.clone()) };
        let format = args.format.unwrap_or_else(|| match &input {
            Input::Path(p) => guess_format(p),
            Input::Stdin => InputFormat::Dimacs,
        });
        RunConfig {
            command,
            input,
            format,
            limit: args.limit.map(|l| l as usize),
            extender: args.extender.into(),
            output: args.output,
            per_component: args.per_component,
            delay_stats: args.delay_stats,
            crossgraph_limit,
        }
    }
}

fn guess_format(path: &Path) -> InputFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("json") => InputFormat::Json,
        Some("txt" | "edges" | "el" | "edgelist") => InputFormat::Edgelist,
        _ => InputFormat::Dimacs,
    }
}

/// Reads the crossgraph node limit from the environment.
pub fn crossgraph_limit_from_env() -> Result<usize, CliError> {
    match std::env::var(CROSSGRAPH_LIMIT_VAR) {
        Err(_) => Ok(DEFAULT_CROSSGRAPH_LIMIT),
        Ok(v) => {
            v.trim().parse().map_err(|_| CliError::Usage(format!("{CROSSGRAPH_LIMIT_VAR}={v:?} is not a node count")))
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{path}: {source}")]
    Open { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("graph is disconnected ({components} components); rerun with --per-component")]
    Disconnected { components: usize },
    #[error("{0}")]
    Guard(String),
    #[error("{0}")]
    Core(#[from] mintri::Error),
}

impl CliError {
    /// 1 for bad input or usage, 2 for guard violations.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Disconnected { .. } | CliError::Guard(_) => 2,
            CliError::Io(e) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
            _ => 1,
        }
    }
}
