use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Enumerate purely real Hurwitz numbers, convert between transposition
/// words and matching sequences, and build their constellations.
///
/// Word enumeration visits (2n(n-1))^m words, so n and m are capped
/// (n <= 5, m <= 7) unless --force is given.
#[derive(Parser, Debug)]
#[command(name = "hurwitz", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Ground-set size (labels ±1..±n).
    #[arg(long, global = true)]
    pub n: Option<usize>,

    /// Number of transpositions.
    #[arg(long, global = true)]
    pub m: Option<usize>,

    /// Partition, as `2,1,1` or `2^1 1^2`.
    #[arg(long, global = true)]
    pub lambda: Option<String>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Worker threads for enumeration shards.
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,

    /// Lift the safety caps on n and m.
    #[arg(long, global = true)]
    pub force: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Kind {
    #[default]
    Factorizations,
    Matchings,
}

#[derive(Args, Debug, Clone)]
pub struct Bounds {
    #[arg(long)]
    pub n_max: usize,

    #[arg(long)]
    pub m_max: usize,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Read from this file instead of stdin.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Raw count, Hurwitz number and matching-sequence count for one (m, λ).
    /// Cost: (2n(n-1))^m words.
    Count,
    /// List the words (or matching sequences) counted for (m, λ).
    /// Cost: (2n(n-1))^m words.
    Enumerate {
        #[arg(long, value_enum, default_value_t)]
        kind: Kind,
    },
    /// Map each word, one per line like `(1 2);(-1 2)`, to its matching sequence.
    Pmap(Input),
    /// Recover the 2^m words behind each matching-sequence record.
    Preimages(Input),
    /// Build the constellation of each matching-sequence record.
    Build {
        #[command(flatten)]
        input: Input,

        /// Same as --format dot.
        #[arg(long)]
        dot: bool,
    },
    /// Read the matching sequence back out of each constellation record.
    Extract(Input),
    /// Run every cross-check suite up to the given bounds (n_max <= 4, m_max <= 5).
    Verify {
        #[command(flatten)]
        bounds: Bounds,

        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Counts for every partition up to the given bounds.
    Table {
        #[command(flatten)]
        bounds: Bounds,
    },
}
