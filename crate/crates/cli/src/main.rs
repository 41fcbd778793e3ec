//! `ricdft` command-line tool.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or configuration
//! error, 3 I/O or parse error.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ricdft::RicError;

#[derive(Debug, Parser)]
#[command(name = "ricdft", version, about = "Rectangular-index DFT coefficients by folding")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fold an N-point signal into C points (column sums).
    Compress(CompressArgs),
    /// Forward transform at indices 0, L, ..., (C-1)L.
    Dft(TransformArgs),
    /// Inverse transform at indices 0, L, ..., (C-1)L.
    Idft(TransformArgs),
    /// Choose (N, C) so target frequencies land on rectangular-index bins.
    Plan(PlanCmdArgs),
    /// Count operations and time the folded path against full transforms.
    Bench(BenchArgs),
    /// Compare the folded path with direct N-point evaluation.
    Verify(VerifyArgs),
    /// Write a sum of complex tones.
    Synthesize(SynthArgs),
}

/// Plan selection: `--c` (with optional `--n`) or `--q` and `--p`.
#[derive(Debug, Args)]
struct PlanArgs {
    /// Signal length N; defaults to the input length.
    #[arg(long)]
    n: Option<usize>,
    /// Compressed length C.
    #[arg(long)]
    c: Option<usize>,
    /// log2 N.
    #[arg(long)]
    q: Option<u32>,
    /// log2 C.
    #[arg(long)]
    p: Option<u32>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SignalFormat {
    Csv,
    Raw,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SpectrumFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    None,
    RecipN,
    Unitary,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Dir {
    Forward,
    Inverse,
}

#[derive(Debug, Args)]
struct CompressArgs {
    /// Input signal file.
    #[arg(short, long)]
    input: String,
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    output: Option<String>,
    #[command(flatten)]
    plan: PlanArgs,
    /// Input file format.
    #[arg(long, value_enum, default_value = "csv")]
    format: SignalFormat,
    /// Output file format; defaults to the input format.
    #[arg(long, value_enum)]
    output_format: Option<SignalFormat>,
}

#[derive(Debug, Args)]
struct TransformArgs {
    #[arg(short, long)]
    input: String,
    #[arg(short, long)]
    output: Option<String>,
    #[command(flatten)]
    plan: PlanArgs,
    #[arg(long, value_enum, default_value = "none")]
    mode: Mode,
    #[arg(long, value_enum, default_value = "csv")]
    format: SignalFormat,
    #[arg(long, value_enum, default_value = "csv")]
    output_format: SpectrumFormat,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PlanOutput {
    Json,
    Table,
}

#[derive(Debug, Args)]
struct PlanCmdArgs {
    /// Sample rate in Hz.
    #[arg(long)]
    sample_rate: f64,
    /// Target frequencies in Hz, comma separated.
    #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
    targets: Vec<f64>,
    #[arg(long, default_value_t = 4096)]
    max_n: usize,
    /// Also consider lengths that are not powers of two.
    #[arg(long)]
    any_n: bool,
    /// Largest acceptable relative frequency error.
    #[arg(long, default_value_t = 0.0)]
    tol: f64,
    /// Extra frequencies to report nearest bins for.
    #[arg(long, value_delimiter = ',')]
    coverage: Vec<f64>,
    #[arg(long, value_enum, default_value = "json")]
    format: PlanOutput,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CPolicyArg {
    All,
    Pow2,
    List,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormatArg {
    Csv,
    Json,
    Md,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Signal lengths, comma separated.
    #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
    n_list: Vec<usize>,
    #[arg(long, value_enum, default_value = "pow2")]
    c_policy: CPolicyArg,
    /// Compressed lengths for `--c-policy list`.
    #[arg(long, value_delimiter = ',')]
    c_list: Vec<usize>,
    #[arg(long, default_value_t = 9)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    warmup: usize,
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
    /// Largest N that gets a full direct-DFT row.
    #[arg(long, default_value_t = 1024)]
    direct_max_n: usize,
    /// Skip timing; report operation counts only.
    #[arg(long)]
    counts_only: bool,
    #[arg(short, long)]
    output: Option<String>,
    #[arg(long, value_enum, default_value = "csv")]
    format: ReportFormatArg,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Input file; mutually exclusive with --random.
    #[arg(short, long, conflicts_with = "random")]
    input: Option<String>,
    /// Generate a seeded random input of this length.
    #[arg(long)]
    random: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[command(flatten)]
    plan: PlanArgs,
    #[arg(long, value_enum, default_value = "none")]
    mode: Mode,
    #[arg(long, value_enum, default_value = "forward")]
    dir: Dir,
    #[arg(long, value_enum, default_value = "csv")]
    format: SignalFormat,
    /// Relative corruption injected into the folded result.
    #[arg(long, default_value_t = 0.0)]
    perturb: f64,
    #[arg(long, default_value_t = ricdft::DEFAULT_TOLERANCE)]
    tolerance: f64,
}

#[derive(Debug, Args)]
struct SynthArgs {
    #[arg(long)]
    n: usize,
    /// Tone as bin:amplitude[:phase], repeatable.
    #[arg(long = "tone", required = true)]
    tones: Vec<String>,
    #[arg(short, long)]
    output: Option<String>,
    #[arg(long, value_enum, default_value = "csv")]
    format: SignalFormat,
}

/// Process exit status carried alongside errors.
#[derive(Debug)]
enum Failure {
    Verification(String),
    Usage(String),
    Io(String),
}

impl From<RicError> for Failure {
    fn from(e: RicError) -> Self {
        match e {
            RicError::Io(_) | RicError::Parse { .. } | RicError::Empty | RicError::NonFinite(_) => {
                Failure::Io(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compress(a) => commands::compress(a),
        Command::Dft(a) => commands::transform(a, ricdft::Direction::Forward),
        Command::Idft(a) => commands::transform(a, ricdft::Direction::Inverse),
        Command::Plan(a) => commands::plan(a),
        Command::Bench(a) => commands::bench(a),
        Command::Verify(a) => commands::verify(a),
        Command::Synthesize(a) => commands::synthesize(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
