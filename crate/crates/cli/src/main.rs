//! `ample`: command-line front end for generating, verifying and
//! stress-testing r-ample and r-conic simplicial complexes.
//!
//! Output is one JSON object on stdout (compact unless `--pretty`), always
//! carrying the fully resolved configuration. Exit codes: 0 success, 1 a
//! check came out negative, 2 usage or input error, 3 resource limit.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ample_core::constructions::DEFAULT_TOWER_BUDGET;

#[derive(Parser, Debug)]
#[command(name = "ample", version, about = "Construct, verify and stress-test r-ample and r-conic simplicial complexes")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct Global {
    /// Seed for every random stream (default 0).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Format of complex files written with -o.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
    /// JSON config file for experiment commands; flags override it.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output path (complex file for `gen`, CSV table for experiments).
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads (default: all cores). Results do not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Lift safety caps (ampleness r > 4, tower budgets, Dedekind r > 5).
    #[arg(long, global = true)]
    pub force: bool,
    /// Indented JSON for humans.
    #[arg(long, global = true)]
    pub pretty: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum FormatArg {
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a complex.
    Gen {
        #[command(subcommand)]
        generator: Generator,
    },
    /// Exact r-ampleness and r-conicity verdicts.
    Verify(VerifyArgs),
    /// Betti numbers, torsion and connectivity.
    Homology(HomologyArgs),
    /// Fill a loop by a simplicial disc.
    FillLoop(FillLoopArgs),
    /// Ampleness after deleting removal families from searched complexes.
    Resilience(ResilienceArgs),
    /// Witness counts in medial samples (exploratory).
    Census(CensusArgs),
    /// Ampleness of the parts of random vertex partitions (exploratory).
    Partition(PartitionArgs),
    /// Dimension and Betti numbers of medial samples.
    MedialStats(MedialStatsArgs),
    /// Reduced Dedekind number M'(r).
    Dedekind(DedekindArgs),
    /// Topological complexity bound arithmetic.
    TcBound(TcArgs),
    /// Isomorphism test for two small complexes.
    Iso(IsoArgs),
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(tag = "generator", rename_all = "kebab-case")]
pub enum Generator {
    /// Iterated Paley complex over Z/q.
    Paley {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        p: u64,
        /// Primitive root (least one when omitted).
        #[arg(long)]
        g: Option<u64>,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
    },
    /// Medial-regime random complex on n ambient vertices.
    Medial {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// First r-ample medial sample among seeded trials.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
    },
    /// Rado tower; writes the last complete stage.
    Rado {
        #[arg(long, default_value_t = 2)]
        levels: usize,
        #[arg(long, default_value_t = DEFAULT_TOWER_BUDGET)]
        budget: u64,
    },
    /// Barmak tower over the n-sphere; writes the last complete stage.
    Barmak {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        iterations: usize,
        #[arg(long, default_value_t = DEFAULT_TOWER_BUDGET)]
        budget: u64,
        #[arg(long)]
        include_empty: bool,
    },
    /// Join of k copies of S⁰.
    SphereJoin {
        #[arg(long)]
        k: usize,
    },
    /// A bundled fixture (point, edge, triangle, hollow-triangle, cycle4,
    /// octahedron, example13, rp2).
    Builtin { name: String },
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct VerifyArgs {
    /// Complex file or builtin name.
    pub complex: String,
    #[arg(long)]
    pub ample: Option<usize>,
    #[arg(long)]
    pub conic: Option<usize>,
    /// Report the largest ample and conic r up to this cap.
    #[arg(long)]
    pub max: Option<usize>,
    /// Include the witness table with a positive ampleness verdict.
    #[arg(long)]
    pub witness_table: bool,
    /// Exit 1 unless the verdict matches.
    #[arg(long, value_enum)]
    pub expect: Option<Expect>,
}

#[derive(ValueEnum, Debug, Clone, Copy, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Expect {
    Ample,
    NotAmple,
    Conic,
    NotConic,
}

#[derive(ValueEnum, Debug, Clone, Copy, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum FieldArg {
    Gf2,
    Rational,
    Both,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct HomologyArgs {
    pub complex: String,
    #[arg(long, value_enum, default_value_t = FieldArg::Both)]
    pub field: FieldArg,
    /// Integral torsion via Smith normal form.
    #[arg(long)]
    pub torsion: bool,
    /// Connectivity report; with --ample r, verified r-ampleness (r ≥ 4)
    /// lets fundamental cycles be filled.
    #[arg(long)]
    pub connectivity: bool,
    #[arg(long)]
    pub ample: Option<usize>,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct FillLoopArgs {
    pub complex: String,
    /// Loop vertices in order, comma separated.
    #[arg(long = "loop", value_delimiter = ',', required = true)]
    pub lp: Vec<u32>,
    #[arg(long, default_value_t = 4)]
    pub r: usize,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct ResilienceArgs {
    #[arg(long, value_delimiter = ',')]
    pub ns: Option<Vec<usize>>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long)]
    pub control_trials: Option<usize>,
    #[arg(long)]
    pub search_trials: Option<u64>,
    #[arg(long)]
    pub complexes_per_n: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub member_dims: Option<Vec<usize>>,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct CensusArgs {
    #[arg(long, value_delimiter = ',')]
    pub ns: Option<Vec<usize>>,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long)]
    pub u_size: Option<usize>,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct PartitionArgs {
    pub complex: String,
    #[arg(long)]
    pub parts: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub repeats: Option<usize>,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct MedialStatsArgs {
    #[arg(long, value_delimiter = ',')]
    pub ns: Option<Vec<usize>>,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long)]
    pub epsilon0: Option<f64>,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct DedekindArgs {
    #[arg(long)]
    pub r: usize,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct TcArgs {
    /// Dimension, with --conn, for the direct bound.
    #[arg(long, requires = "conn", conflicts_with = "l")]
    pub dim: Option<u64>,
    #[arg(long)]
    pub conn: Option<u64>,
    /// L = log₂log₂ n for the medial-regime calculator.
    #[arg(long, required_unless_present = "dim")]
    pub l: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub epsilon0: f64,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct IsoArgs {
    pub a: String,
    pub b: String,
    #[arg(long, value_enum)]
    pub expect: Option<IsoExpect>,
}

#[derive(ValueEnum, Debug, Clone, Copy, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum IsoExpect {
    Isomorphic,
    NotIsomorphic,
}

/// Whether a check-style command got the verdict it was asked to expect.
pub enum Verdict {
    Ok,
    Negative,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let g = &cli.global;
    let result = match &cli.command {
        Command::Gen { generator } => commands::gen(g, generator),
        Command::Verify(a) => commands::verify(g, a),
        Command::Homology(a) => commands::homology(g, a),
        Command::FillLoop(a) => commands::fill_loop(g, a),
        Command::Resilience(a) => commands::resilience(g, a),
        Command::Census(a) => commands::census(g, a),
        Command::Partition(a) => commands::partition(g, a),
        Command::MedialStats(a) => commands::medial_stats(g, a),
        Command::Dedekind(a) => commands::dedekind(g, a),
        Command::TcBound(a) => commands::tc_bound(g, a),
        Command::Iso(a) => commands::iso(g, a),
    };
    match result {
        Ok(Verdict::Ok) => ExitCode::SUCCESS,
        Ok(Verdict::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            let limit = e.downcast_ref::<ample_core::Error>().is_some_and(ample_core::Error::is_resource_limit);
            ExitCode::from(if limit { 3 } else { 2 })
        }
    }
}
