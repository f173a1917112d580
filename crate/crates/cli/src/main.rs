use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod output;

use output::{Failure, EXIT_USAGE};

/// Exact accuracy assessment of inferred finite-state models.
#[derive(Debug, Parser)]
#[command(name = "langcard", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact single-length and cumulative precision and recall of INFERRED against REFERENCE.
    Assess(AssessArgs),
    /// Number of accepted traces of every length, and the generating function.
    Count(CountArgs),
    /// Statistical or test-based estimates of precision and recall.
    Baseline(BaselineArgs),
    /// k-tails inference from a trace file.
    Infer(InferArgs),
    /// Random-walk training set of positive traces.
    GenTraces(GenTracesArgs),
    /// SVG line chart of metric CSV files.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Single,
    Cumulative,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Oracle {
    /// Coefficients of the generating function.
    Ogf,
    /// Dynamic programming over the transition table.
    Dp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    TraceSim,
    TraceSimConditioned,
    Mbt,
    SigmaSample,
}

/// Inclusive length interval written `A..B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LengthRange {
    pub lo: usize,
    pub hi: usize,
}

fn parse_range(s: &str) -> Result<LengthRange, String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected A..B, found `{s}`"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad length `{t}`"));
    let (lo, hi) = (num(a)?, num(b.trim_start_matches('='))?);
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(LengthRange { lo, hi })
}

#[derive(Debug, Args)]
pub struct OutArg {
    /// Output file; a `<out>.manifest.json` is written beside it. Defaults to stdout.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AssessArgs {
    pub reference: PathBuf,
    pub inferred: PathBuf,
    #[arg(long, default_value_t = 200)]
    pub max_length: usize,
    /// Only report lengths in A..B (inclusive); B replaces --max-length.
    #[arg(long, value_parser = parse_range)]
    pub range: Option<LengthRange>,
    #[arg(long, value_enum, default_value_t = Mode::Both)]
    pub mode: Mode,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Decimal places in the CSV.
    #[arg(long, default_value_t = 6)]
    pub digits: usize,
    /// Also record the bounded Jaccard distance in the manifest.
    #[arg(long)]
    pub jaccard: bool,
    #[command(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    pub model: PathBuf,
    #[arg(long, default_value_t = 200)]
    pub max_length: usize,
    #[arg(long, value_enum, default_value_t = Oracle::Ogf)]
    pub oracle: Oracle,
    #[command(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Args)]
pub struct WalkArgs {
    /// Probability of stopping at each accepting state.
    #[arg(long, default_value_t = 0.1)]
    pub pa: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Traces (or, for sigma-sample, useful samples per length) to generate.
    #[arg(long)]
    pub target_traces: Option<usize>,
    /// Walks continue until every live transition was taken this often (default 0).
    #[arg(long)]
    pub min_coverage: Option<u64>,
    /// Seconds; 0 disables the limit.
    #[arg(long)]
    pub time_limit: Option<u64>,
    /// Let walks enter error states (they restart from the initial state).
    #[arg(long)]
    pub allow_error_transitions: bool,
}

#[derive(Debug, Args)]
pub struct BaselineArgs {
    #[arg(value_enum)]
    pub method: Method,
    pub reference: PathBuf,
    pub inferred: PathBuf,
    #[command(flatten)]
    pub walk: WalkArgs,
    /// State bound for the W-method; defaults to the larger minimal model.
    #[arg(long)]
    pub m_bound: Option<usize>,
    /// Lengths to report (sigma-sample and trace-sim-conditioned).
    #[arg(long, value_parser = parse_range)]
    pub range: Option<LengthRange>,
    /// Sigma-sample skips lengths whose expected number of draws exceeds this.
    #[arg(long, default_value_t = 10_000_000)]
    pub max_draws: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long, default_value_t = 6)]
    pub digits: usize,
    #[command(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Args)]
pub struct InferArgs {
    pub traces: PathBuf,
    /// Length bound of the compared tails.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Take the symbol order from this model instead of the trace file.
    #[arg(long)]
    pub alphabet_from: Option<PathBuf>,
    #[command(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Args)]
pub struct GenTracesArgs {
    pub model: PathBuf,
    #[command(flatten)]
    pub walk: WalkArgs,
    #[command(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    /// Plot only this metric column.
    #[arg(long)]
    pub column: Option<String>,
    #[arg(long, default_value = "accuracy by trace length")]
    pub title: String,
    #[command(flatten)]
    pub out: OutArg,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    let result: Result<(), Failure> = match cli.command {
        Command::Assess(a) => commands::assess(&a),
        Command::Count(a) => commands::count(&a),
        Command::Baseline(a) => commands::baseline(&a),
        Command::Infer(a) => commands::infer(&a),
        Command::GenTraces(a) => commands::gen_traces(&a),
        Command::Report(a) => commands::report(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("langcard: {f}");
            ExitCode::from(f.code as u8)
        }
    }
}
