use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "azumaya", version, about = "Exact Azumaya tests for cleft extensions and Hopf algebra structure constants")]
pub struct Cli {
    /// `rational` or `prime:p`.
    #[arg(long, global = true)]
    pub field: Option<String>,

    /// Machine-readable JSON report on stdout.
    #[arg(long, global = true)]
    pub json: bool,

    /// Record wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether the Clifford cleft extension of E(n) is Azumaya.
    EnCheck {
        #[command(flatten)]
        params: EnArgs,
        /// Routes to run and cross-check.
        #[arg(long, value_delimiter = ',', default_values = ["theta", "fg", "det"])]
        routes: Vec<Route>,
    },
    /// Run identity suites on a structure-constant document.
    Verify {
        /// Path to a JSON structure-constant document.
        document: String,
        #[arg(long, value_delimiter = ',', default_values = ["hopf", "cocycle", "dqt", "comodule", "integral", "s-maps"])]
        checks: Vec<Suite>,
    },
    /// Generator values of the twisted r-form beside their closed forms.
    Table {
        #[command(flatten)]
        params: EnArgs,
    },
    /// Cross-check all routes over a parameter sample.
    Sweep(SweepArgs),
    /// Write a structure-constant document for E(n).
    Export {
        /// Size of E(n) when no parameters are given.
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        params: OptionalEnArgs,
    },
}

#[derive(Debug, Clone, Args)]
pub struct EnArgs {
    /// The r-form matrix A (n×n), e.g. `1` or `1,0;0,1`.
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub alpha: String,
    /// Length-n vector; zero when omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<String>,
    /// Lower-triangular n×n matrix; zero when omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct OptionalEnArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
}

impl OptionalEnArgs {
    pub fn required(&self) -> Option<EnArgs> {
        self.a.as_ref().map(|a| EnArgs {
            a: a.clone(),
            alpha: self.alpha.clone(),
            gamma: self.gamma.clone(),
            lambda: self.lambda.clone(),
        })
    }
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// Size of E(n) for random points.
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    #[arg(long, default_value_t = 20)]
    pub points: usize,
    /// Required for random sampling.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Integer entries are drawn from `-range..=range`.
    #[arg(long, default_value_t = 2)]
    pub range: i64,
    /// Candidate values of alpha.
    #[arg(long, value_delimiter = ',', default_values = ["1", "2"], allow_hyphen_values = true)]
    pub alpha: Vec<String>,
    /// Use the fixed 81-point E(1) grid instead of random points.
    #[arg(long)]
    pub h4_grid: bool,
    #[arg(long, value_delimiter = ',', default_values = ["theta", "fg", "det"])]
    pub routes: Vec<Route>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, ValueEnum)]
pub enum Route {
    /// Invertibility of θ_σ.
    Theta,
    /// Bijectivity of F and G on A_σ.
    Fg,
    /// The closed-form determinant criterion.
    Det,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Hopf,
    Cocycle,
    Dqt,
    Comodule,
    Integral,
    SMaps,
}
