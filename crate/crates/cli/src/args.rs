use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "rwdist",
    version,
    about = "Hitting, commute and cover time distributions of random walks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// CDF/PMF of the hitting time from a start node to a target (or any of several targets).
    Hitting(HittingArgs),
    /// CDF/PMF of the commute time between two nodes.
    Commute(CommuteArgs),
    /// CDF/PMF of the cover time from a start node.
    Cover(CoverArgs),
    /// Cover-time CDFs of several methods side by side, with pairwise sup errors.
    Compare(CompareArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Edge-list file: node count on the first line, then one `a b` pair per line.
    #[arg(long, value_name = "PATH")]
    pub graph: Option<PathBuf>,
    /// Inline generator `KIND:N[:P]` with KIND one of complete, cycle, path, erdos_renyi.
    #[arg(long, value_name = "KIND:N[:P]")]
    pub generate: Option<String>,
}

#[derive(Debug, Args)]
pub struct Common {
    #[command(flatten)]
    pub source: GraphSource,
    /// Seed for random graph generation and simulation [default: 0].
    #[arg(long)]
    pub seed: Option<u64>,
    /// Last time step T [default: ceil(100 n ln n)].
    #[arg(long)]
    pub horizon: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Replace the CDF by its running maximum clipped to [0, 1].
    #[arg(long)]
    pub clamp: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct HittingArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub start: usize,
    /// Target node; a comma-separated list gives the first time any of them is hit.
    #[arg(long, required = true, value_delimiter = ',')]
    pub target: Vec<usize>,
}

#[derive(Debug, Args)]
pub struct CommuteArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long = "i")]
    pub i: usize,
    #[arg(long = "j")]
    pub j: usize,
    #[arg(long, value_enum, default_value_t = CommuteMethod::Chain)]
    pub method: CommuteMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CommuteMethod {
    /// Absorption in the doubled chain.
    Chain,
    /// Convolution of the two hitting-time PMFs.
    Convolution,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoverMethodArg {
    Exact,
    Approx,
    ApproxAllPairs,
    /// Closed form chosen from the graph's shape.
    Closed,
    ClosedComplete,
    ClosedCycle,
    ClosedPath,
    /// Monte Carlo estimate.
    Mc,
}

#[derive(Debug, Args)]
pub struct CoverOptions {
    /// Largest graph the exact method accepts.
    #[arg(long, default_value_t = rwdist::cover::EXACT_CAP_DEFAULT)]
    pub cap: usize,
    /// Allow a cap above the hard ceiling.
    #[arg(long)]
    pub force_cap: bool,
    /// Monte Carlo trials.
    #[arg(long, default_value_t = 100_000)]
    pub trials: usize,
    /// Node order for the approximation: `dfs` or `explicit:<v1,v2,...>`.
    #[arg(long, default_value = "dfs")]
    pub order: String,
}

#[derive(Debug, Args)]
pub struct CoverArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = 0)]
    pub start: usize,
    #[arg(long, value_enum, default_value_t = CoverMethodArg::Exact)]
    pub method: CoverMethodArg,
    #[command(flatten)]
    pub options: CoverOptions,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = 0)]
    pub start: usize,
    /// Comma-separated methods, at least two.
    #[arg(long, value_enum, required = true, value_delimiter = ',')]
    pub method: Vec<CoverMethodArg>,
    #[command(flatten)]
    pub options: CoverOptions,
}
