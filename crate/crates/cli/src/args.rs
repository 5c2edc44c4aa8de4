use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "bcb",
    version,
    about = "Bayesian two-sample classification: exact errors and error-exponent bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chernoff information and the constants behind the upper bound
    Chernoff(ChernoffArgs),
    /// Lower/upper error-exponent bounds over a range of test lengths
    Bounds(BoundsArgs),
    /// Exact conditional error for one training draw
    Exact(ExactArgs),
    /// Monte-Carlo error averaged over training draws
    Simulate(SimulateArgs),
    /// Bound curves of the two Bernoulli reference cases
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output format (default: csv for curves, json otherwise)
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Report information quantities in bits instead of nats
    #[arg(long)]
    pub bits: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SpecArgs {
    /// True parameter of hypothesis 1: comma-separated probabilities, or a
    /// single number for a Bernoulli P(1)
    #[arg(long = "theta-star", visible_alias = "p", allow_hyphen_values = true)]
    pub theta_star: String,
    /// True parameter of hypothesis 2 (same syntax)
    #[arg(long = "xi-star", visible_alias = "q", allow_hyphen_values = true)]
    pub xi_star: String,
    /// Dirichlet concentrations of the hypothesis-1 prior (default: Jeffreys)
    #[arg(long = "mu-alphas")]
    pub mu_alphas: Option<String>,
    /// Dirichlet concentrations of the hypothesis-2 prior (default: Jeffreys)
    #[arg(long = "nu-alphas")]
    pub nu_alphas: Option<String>,
    /// Prior probability of hypothesis 1
    #[arg(long, default_value_t = 0.5)]
    pub pi1: f64,
    /// Training ratio N / n, e.g. 2, 3/2 or 1.5
    #[arg(long, default_value = "2")]
    pub alpha: String,
}

#[derive(Debug, Clone, Args)]
pub struct ChernoffArgs {
    #[arg(long = "theta-star", visible_alias = "p", allow_hyphen_values = true)]
    pub theta_star: String,
    #[arg(long = "xi-star", visible_alias = "q", allow_hyphen_values = true)]
    pub xi_star: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// `from:to:step`, or `from:to` with step 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub from: u64,
    pub to: u64,
    pub step: u64,
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |x: &str| {
            x.trim()
                .parse::<u64>()
                .map_err(|e| format!("bad n-range component {x:?}: {e}"))
        };
        let (from, to, step) = match parts.as_slice() {
            [a, b] => (num(a)?, num(b)?, 1),
            [a, b, c] => (num(a)?, num(b)?, num(c)?),
            _ => return Err(format!("expected from:to[:step], got {s:?}")),
        };
        Ok(NRange { from, to, step })
    }
}

#[derive(Debug, Clone, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Single test length
    #[arg(long, conflicts_with = "n_range", required_unless_present = "n_range")]
    pub n: Option<u64>,
    /// Range of test lengths from:to[:step]
    #[arg(long = "n-range")]
    pub n_range: Option<NRange>,
    /// Override the hypothesis-1 model dimension (default K - 1)
    #[arg(long)]
    pub d1: Option<u32>,
    /// Override the hypothesis-2 model dimension (default K - 1)
    #[arg(long)]
    pub d2: Option<u32>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ExactArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long)]
    pub n: u64,
    /// Counts of the first training sequence (sampled when absent)
    #[arg(long, requires = "y2")]
    pub y1: Option<String>,
    /// Counts of the second training sequence
    #[arg(long, requires = "y1")]
    pub y2: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Conditional,
    Generative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Source {
    Predictive,
    True,
}

#[derive(Debug, Clone, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long)]
    pub n: u64,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Method::Conditional)]
    pub method: Method,
    /// Test-sequence source for the generative method
    #[arg(long, value_enum, default_value_t = Source::Predictive)]
    pub source: Source,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    Case1,
    Case2,
}

#[derive(Debug, Clone, Args)]
pub struct ReproduceArgs {
    #[arg(value_enum)]
    pub case: CaseArg,
    /// Step between consecutive test lengths
    #[arg(long, default_value_t = 1)]
    pub step: u64,
    /// Where to write the summary JSON (default: next to --out, else stderr)
    #[arg(long)]
    pub summary: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}
