use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::report::Format;

/// Finite monoid workbench.
#[derive(Debug, Parser)]
#[command(name = "mono", version, about)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "human", global = true)]
    pub format: Format,

    /// Worker threads; above 1 enables the parallel paths. Output is unchanged.
    #[arg(long, default_value_t = 1, global = true)]
    pub jobs: usize,

    /// Seed for randomized modes (falls back to MONO_SEED, then 0).
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, idempotents, aperiodicity, minimal ideal, regular and group elements.
    Info(FileArg),
    /// R, L, J and H classes and the J-order.
    Greens(FileArg),
    /// Ideal generated by elements; products, primality, idempotency.
    Ideal(IdealArgs),
    /// Cut profile of a word, optionally matched against target values.
    Cut(CutArgs),
    /// Builds the expansion M^(n) and checks η.
    Expand(ExpandArgs),
    /// Factor lemma witness for two factorizations of one word.
    Lemma(LemmaArgs),
    /// Replays the ideal-transfer argument on explicit or random words.
    Replay(ReplayArgs),
    /// Corollary sweep and, with --alphas/--ideals, the theorem shadow.
    Shadow(ShadowArgs),
    /// Transition monoid of a DFA.
    FromDfa(ConvertArgs),
    /// Monoid generated by transformations.
    FromTgen(ConvertArgs),
}

#[derive(Debug, Args)]
pub struct FileArg {
    /// A .mon, .dfa or .tgen file.
    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct IdealArgs {
    pub file: PathBuf,
    /// Generators of I, comma-separated element names.
    #[arg(long)]
    pub gen: String,
    /// Generators of a second ideal J; reports I·J.
    #[arg(long)]
    pub times: Option<String>,
    /// Exit 1 unless I has this property.
    #[arg(long, value_enum)]
    pub expect: Option<Expect>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Expect {
    Prime,
    NotPrime,
    Idempotent,
}

#[derive(Debug, Args)]
pub struct CutArgs {
    pub file: PathBuf,
    /// Letter map, e.g. a=x,b=y.
    #[arg(long)]
    pub map: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    #[arg(short = 'n', long = "arity")]
    pub arity: usize,
    /// Comma-separated target elements; exit 1 if no factorization matches.
    #[arg(long)]
    pub targets: Option<String>,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    pub file: PathBuf,
    #[arg(short = 'n', long = "arity")]
    pub arity: usize,
    #[arg(long, alias = "map")]
    pub gens: Option<String>,
    /// Include the multiplication table.
    #[arg(long)]
    pub table: bool,
    /// Write the expansion as .mon to this path plus a `.map` sidecar.
    #[arg(long)]
    pub emit: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LemmaArgs {
    /// u_1,…,u_m
    #[arg(long)]
    pub u: String,
    /// v_1,…,v_n
    #[arg(long)]
    pub v: String,
}

#[derive(Debug, Args)]
pub struct ReplayArgs {
    pub file: PathBuf,
    #[arg(short = 'n', long = "arity")]
    pub arity: usize,
    #[arg(long)]
    pub map: Option<String>,
    #[arg(long, required_unless_present = "random")]
    pub u: Option<String>,
    #[arg(long, required_unless_present = "random")]
    pub w: Option<String>,
    /// Replay this many random instances instead of --u/--w.
    #[arg(long, conflicts_with_all = ["u", "w"])]
    pub random: Option<usize>,
    /// Maximum word length for --random.
    #[arg(long, default_value_t = 6)]
    pub len: usize,
}

#[derive(Debug, Args)]
pub struct ShadowArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub map: Option<String>,
    /// α_1;…;α_m as ω-terms.
    #[arg(long, requires = "ideals")]
    pub alphas: Option<String>,
    /// Generator terms of I_1 | … | I_n.
    #[arg(long, requires = "alphas")]
    pub ideals: Option<String>,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    pub file: PathBuf,
    /// Write the resulting .mon here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
