mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "turan",
    version,
    about = "Generalized Turán numbers for graphs without long cycles and large matchings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate the closed-form extremal value as JSON.
    Compute(ComputeArgs),
    /// Build a witness graph.
    Construct(ConstructArgs),
    /// Check a graph file against a forbidden family.
    Verify(VerifyArgs),
    /// Exhaustive search for ex(n, K_r, F) on small n.
    Oracle(OracleArgs),
    /// Aligned table of formula values over a range of n.
    Table(TableArgs),
    /// Run the embedded invariant suite.
    Selfcheck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    /// Forbid cycles of length at least 2k+1.
    Odd,
    /// Forbid cycles of length at least 2k.
    Even,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[arg(long, value_enum)]
    pub parity: ParityArg,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub k: u64,
    #[arg(long)]
    pub s: u64,
    /// Counted clique order; required unless --edges-only.
    #[arg(long)]
    pub r: Option<u64>,
    /// Count edges (r = 2) using the edge-count theorem.
    #[arg(long)]
    pub edges_only: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WitnessArg {
    /// H_{n,k,a}: needs --n --k --a.
    #[value(name = "H", alias = "h")]
    H,
    /// Extremal graph for C_{>=2k+1}: needs --n --k --s --r.
    ExtremalOdd,
    /// Extremal graph for C_{>=2k}: needs --n --k --s --r.
    ExtremalEven,
    /// Needs --n --k --q.
    St1,
    /// Needs --n --k --q.
    St2,
    /// Woodall's graph with no cycle of length >= k: needs --n --k.
    G0,
    /// G(n,k,s): needs --n --k --s.
    Multipartite,
    /// Block star read from --spec FILE.
    BlockStarSpecFile,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Graph6,
    Edgelist,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub witness: WitnessArg,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub a: Option<u64>,
    #[arg(long)]
    pub s: Option<u64>,
    #[arg(long)]
    pub r: Option<u64>,
    #[arg(long)]
    pub q: Option<u64>,
    /// Spec file: "H n k a" or "K c", then one attached clique order per line.
    #[arg(long)]
    pub spec: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value = "graph6")]
    pub format: FormatArg,
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Graph file in graph6 or edge-list format.
    #[arg(long)]
    pub graph: std::path::PathBuf,
    /// Cycle threshold: forbid every cycle of length >= k.
    #[arg(long)]
    pub k: Option<usize>,
    /// Matching bound: require at most s disjoint edges.
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub r: usize,
    /// Also search for a certificate that the matching number is at most s.
    #[arg(long)]
    pub certificate: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(long)]
    pub n: usize,
    /// Cycle threshold: forbid every cycle of length >= k.
    #[arg(long)]
    pub k: Option<usize>,
    /// Matching bound.
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub r: usize,
    /// Worker threads (defaults to every core).
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Omit timing so that repeated runs print identical output.
    #[arg(long)]
    pub stable: bool,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub parity: ParityArg,
    #[arg(long)]
    pub k: u64,
    #[arg(long)]
    pub s: u64,
    #[arg(long, default_value_t = 2)]
    pub r: u64,
    #[arg(long)]
    pub n_from: u64,
    #[arg(long)]
    pub n_to: u64,
    /// Add an exhaustive-search column (small n only).
    #[arg(long)]
    pub with_oracle: bool,
    #[arg(long)]
    pub jobs: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(a) => commands::compute(&a),
        Command::Construct(a) => commands::construct(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Oracle(a) => commands::oracle(&a),
        Command::Table(a) => commands::table(&a),
        Command::Selfcheck => commands::selfcheck(),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
