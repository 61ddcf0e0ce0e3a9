//! `hyperpd`: solve, generate, check and campaign over `.hgr` hypergraphs.
//!
//! Exit codes: 0 success (including findings such as a violated bound),
//! 2 input or parameter error, 3 infeasible or empty input, 4 internal
//! inconsistency.

mod commands;

use std::io::IsTerminal;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hyperpd::campaign::{Check, Family};
use hyperpd::solvers::SizeHypothesis;
use hyperpd::ForcingRule;

#[derive(Parser, Debug)]
#[command(name = "hyperpd", version, about = "Exact k-power domination on hypergraphs")]
struct Cli {
    /// JSON only: never print the human-readable table.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact γ_p^k with one witness, or every minimum set with --all.
    Solve(SolveArgs),
    /// Write a constructed hypergraph in hgr format.
    #[command(subcommand)]
    Generate(GenerateCmd),
    /// Solve and judge every applicable bound.
    Check(CheckArgs),
    /// Check the white-degree and private-neighbor inequalities.
    VerifyLemmas(LemmaArgs),
    /// Seeded batch run; writes a JSON report.
    Campaign(CampaignArgs),
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(short, default_value_t = 1)]
    k: usize,
    #[arg(long, default_value = "white-degree")]
    rule: ForcingRule,
    /// Report every minimum k-power dominating set.
    #[arg(long)]
    all: bool,
}

#[derive(Subcommand, Debug)]
pub(crate) enum GenerateCmd {
    /// Squid of an r-uniform base.
    Squid {
        #[arg(long)]
        base: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generalized squid with d = |x| spines.
    Gsquid {
        #[arg(short)]
        k: usize,
        #[arg(long = "r")]
        r: usize,
        /// Comma-separated spine widths, e.g. 1,2.
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<usize>,
        /// Extra strong edge as 1-based spine.index pairs, e.g. 1.1,1.2,2.1.
        #[arg(long = "strong-edge")]
        strong_edges: Vec<String>,
        /// Tie every later spine to spine 1 with one strong edge.
        #[arg(long)]
        chain: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The (5+2k+ell)-uniform family with γ_p^k = 2.
    Counterexample {
        #[arg(short)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        ell: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Three-edge construction for rank r.
    Bht {
        #[arg(long = "r")]
        r: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Random connected r-uniform hypergraph with m distinct edges.
    Random {
        #[arg(long = "n")]
        n: usize,
        #[arg(long = "r")]
        r: usize,
        #[arg(long = "m")]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(short, default_value_t = 1)]
    k: usize,
    #[arg(long, default_value = "white-degree")]
    rule: ForcingRule,
    /// Also compute γ and judge the dominating-set bounds.
    #[arg(long)]
    gamma: bool,
}

#[derive(Args, Debug)]
struct LemmaArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(short, default_value_t = 1)]
    k: usize,
    /// Minimum-order hypothesis: k+3 or k+r.
    #[arg(long, default_value = "k+3")]
    hypothesis: SizeHypothesis,
}

#[derive(Args, Debug)]
pub(crate) struct CampaignArgs {
    /// TOML file with campaign settings; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_parser = parse_family)]
    family: Option<Family>,
    /// Ranks to sample, e.g. 3,4.
    #[arg(long = "r", value_delimiter = ',')]
    ranks: Vec<usize>,
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    m_min: Option<usize>,
    #[arg(long)]
    m_max: Option<usize>,
    /// Budgets to sample, e.g. 1,2.
    #[arg(short, value_delimiter = ',')]
    k: Vec<usize>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long = "rule", value_delimiter = ',')]
    rules: Vec<ForcingRule>,
    /// bounds, lemma4, lemma5, rule-equivalence.
    #[arg(long, value_delimiter = ',')]
    checks: Vec<Check>,
    #[arg(long)]
    gamma: bool,
    #[arg(long)]
    hypothesis: Option<SizeHypothesis>,
    /// Per-instance wall-clock budget; 0 disables it.
    #[arg(long)]
    timeout_ms: Option<u64>,
    /// Record per-instance timings (the report is then no longer byte-stable).
    #[arg(long)]
    timings: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn parse_family(s: &str) -> Result<Family, String> {
    match s {
        "random" => Ok(Family::Random),
        "generators" | "all" => Ok(Family::Generators),
        other => Err(format!("unknown family {other:?} (expected random or generators)")),
    }
}

/// A failure carrying its process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    pub fn infeasible(message: impl Into<String>) -> Self {
        Self {
            code: 3,
            message: message.into(),
        }
    }

    pub fn inconsistent(message: impl Into<String>) -> Self {
        Self {
            code: 4,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let table = !cli.json && std::io::stderr().is_terminal();

    if let Some(threads) = std::env::var("HYPERPD_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // Ignore the error if a global pool already exists.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build_global();
    }

    let result = match cli.command {
        Command::Solve(a) => commands::solve(&a.input, a.k, a.rule, a.all, table),
        Command::Generate(g) => commands::generate(g),
        Command::Check(a) => commands::check(&a.input, a.k, a.rule, a.gamma, table),
        Command::VerifyLemmas(a) => commands::verify_lemmas(&a.input, a.k, a.hypothesis, table),
        Command::Campaign(a) => commands::campaign(a, table),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("hyperpd: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
