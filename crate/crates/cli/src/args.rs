use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "bubblepat", version, about = "One-pass bubble sort and pattern classes")]
pub struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for exhaustive checks (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply a chain of passes such as `B^2` or `SB` to a permutation.
    Apply(ApplyArgs),
    /// Report the case of a pattern and whether its preimage is a class.
    Classify(ClassifyArgs),
    /// Basis of the preimage class of a pattern or a comma-separated set.
    Basis(BasisArgs),
    /// Count a class given by its basis and print the table as CSV.
    Enumerate(EnumerateArgs),
    /// Run one of the exhaustive check suites.
    Verify(VerifyArgs),
    /// Draw the permutation as a character grid.
    Diagram(DiagramArgs),
}

#[derive(Debug, Args)]
pub struct ApplyArgs {
    pub perm: String,
    /// Operators in written order; the rightmost is applied first.
    #[arg(long, default_value = "B")]
    pub chain: String,
    /// Apply the whole chain this many times.
    #[arg(short, long)]
    pub k: Option<usize>,
    /// Print every intermediate permutation.
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    pub perm: String,
}

#[derive(Debug, Args)]
pub struct BasisArgs {
    /// A permutation, or several separated by commas.
    pub input: String,
    /// Compare the result against exhaustive enumeration.
    #[arg(long)]
    pub verify: bool,
    /// Longest length compared by `--verify` (default: longest pattern + 3).
    #[arg(short = 'n', long)]
    pub horizon: Option<usize>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    /// Comma-separated basis of the class.
    pub basis: String,
    #[arg(short = 'n', long, default_value_t = 8)]
    pub horizon: usize,
    /// Also write the CSV table here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Directory holding cached count tables.
    #[arg(long, env = "BUBBLEPAT_CACHE")]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// operators, good-bases, witnesses, gamma, sb or counts.
    pub suite: String,
    /// Longest length checked; for good-bases, the longest pattern.
    #[arg(short = 'n', long)]
    pub horizon: Option<usize>,
}

#[derive(Debug, Args)]
pub struct DiagramArgs {
    pub perm: String,
    /// 1-based positions drawn as open dots.
    #[arg(long, value_delimiter = ',')]
    pub highlight: Vec<usize>,
}
