//! `srg-chroma`: construction, packing certificates, lifting, spreads,
//! coloring and table reproduction from the command line.
//!
//! [`run`] is the whole program minus process I/O, so tests can drive it
//! in-process.
//!
//! Exit codes: 0 success, 1 usage or construction error, 2 verification
//! failure, 3 the `λ − μ` condition fails, 4 conference graph, 5 lift
//! precondition, 6 search budget exhausted.

pub mod commands;
pub mod config;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use commands::{ChromaMode, Context, GenKind};
use config::Config;
use report::{ExitCode, Failure, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "srg-chroma", version, about = "Strongly regular graphs as exactly verified ball packings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format of the report.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Omit the non-deterministic `meta` block (timing, version).
    #[arg(long, global = true)]
    pub no_meta: bool,
    /// Directory with table data overrides and graph6 inputs.
    #[arg(long, global = true)]
    pub data_dir: Option<PathBuf>,
    /// TOML settings file.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Node budget for the search this command runs.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Recompute the table of high-chromatic SRG parameters and compare.
    Table1,
    /// Construct a graph and write it as graph6.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and verify a ball-packing certificate for an SRG.
    Pack {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Use the complement of the input graph.
        #[arg(long)]
        complement: bool,
    },
    /// Add a dimension and two balls touching every ball.
    Lift {
        certificate: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find a spread of GQ(q, q²) and the coloring it induces.
    Spread {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Color the complement of the GQ(q, q²) point graph from a spread.
    Color {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a packing certificate, spread certificate or graph6 file.
    Verify { path: PathBuf },
    /// Chromatic number of a graph6 graph, exactly or as bounds.
    Chroma {
        graph: PathBuf,
        #[arg(long, conflicts_with = "bounds")]
        exact: bool,
        #[arg(long)]
        bounds: bool,
        #[arg(long)]
        complement: bool,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Table1 => "table1",
        Command::Gen { .. } => "gen",
        Command::Pack { .. } => "pack",
        Command::Lift { .. } => "lift",
        Command::Spread { .. } => "spread",
        Command::Color { .. } => "color",
        Command::Verify { .. } => "verify",
        Command::Chroma { .. } => "chroma",
    }
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: ExitCode::Usage.code(),
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let config = match &cli.config {
        Some(path) => match Config::load(path) {
            Ok(c) => c,
            Err(e) => {
                return Output {
                    code: ExitCode::Usage.code(),
                    stdout: String::new(),
                    stderr: format!("error: {e}\n"),
                }
            }
        },
        None => Config::default(),
    };
    let ctx = Context {
        data_dir: config.resolve_data_dir(cli.data_dir.as_deref()),
        config,
        budget: cli.budget,
    };
    let start = Instant::now();
    let mut report = Report::new(command_name(&cli.command));
    let outcome = dispatch(&ctx, &cli.command, &mut report);
    if let Err(f) = outcome {
        report.failure = Some(f);
    }
    let meta = (!cli.no_meta).then(|| {
        json!({
            "tool": "srg-chroma",
            "version": env!("CARGO_PKG_VERSION"),
            "elapsed_ms": start.elapsed().as_millis() as u64,
        })
    });
    let stdout = match cli.format {
        Format::Json => report.to_json(meta),
        Format::Text => report.to_text(),
    };
    let stderr = match (&report.failure, cli.format) {
        (Some(f), Format::Json) => format!("error: {}\n", f.message),
        _ => String::new(),
    };
    Output {
        code: report.exit_code().code(),
        stdout,
        stderr,
    }
}

fn dispatch(ctx: &Context, command: &Command, report: &mut Report) -> Result<(), Failure> {
    match command {
        Command::Table1 => commands::table1_cmd(ctx, report),
        Command::Gen { kind, q, n, out } => commands::gen_cmd(ctx, *kind, *q, *n, out.as_deref(), report),
        Command::Pack { graph, out, complement } => {
            commands::pack_cmd(ctx, graph, out.as_deref(), *complement, report)
        }
        Command::Lift { certificate, out } => commands::lift_cmd(ctx, certificate, out.as_deref(), report),
        Command::Spread { q, out } => commands::spread_cmd(ctx, *q, out.as_deref(), false, report),
        Command::Color { q, out } => commands::spread_cmd(ctx, *q, out.as_deref(), true, report),
        Command::Verify { path } => commands::verify_cmd(ctx, path, report),
        Command::Chroma {
            graph,
            exact,
            bounds,
            complement,
        } => {
            let mode = match (exact, bounds) {
                (true, _) => ChromaMode::Exact,
                (_, true) => ChromaMode::Bounds,
                _ => ChromaMode::Auto,
            };
            commands::chroma_cmd(ctx, graph, mode, *complement, report)
        }
    }
}
