use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::scan::{Format, DEFAULT_MAX_RANK};

#[derive(Debug, Parser)]
#[command(name = "schubloc", version, about = "Local invariants of Schubert varieties at torus-fixed points")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cartan matrix and positive roots.
    Roots(GroupArgs),
    /// Compare w and x in Bruhat order.
    Bruhat(PairArgs),
    /// Cominuscule certificate, or an obstruction.
    Comin(PairArgs),
    /// Tangent weights, T-curve roots and the Down/Up sets.
    Tangent(PairArgs),
    /// Restriction of the Schubert class to the fixed point.
    Restrict(RestrictArgs),
    /// Multiplicity at the fixed point.
    Mult(PairArgs),
    /// Hilbert series of the local ring.
    Hilbert(HilbertArgs),
    /// Sweep all valid pairs of a group, writing JSON lines.
    Scan(ScanArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    /// X^w, fixed points x >= w.
    Opposite,
    /// X_w, fixed points x <= w.
    Standard,
}

impl From<VariantArg> for schubloc::Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Opposite => schubloc::Variant::Opposite,
            VariantArg::Standard => schubloc::Variant::Standard,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Chow,
    K,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Cartan type such as A5, B3, D4, G2.
    #[arg(long = "type")]
    pub group: String,
    #[arg(long, value_enum, default_value = "json")]
    pub format: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[command(flatten)]
    pub common: GroupArgs,
    #[arg(long, value_enum, default_value = "opposite")]
    pub variant: VariantArg,
    /// One-line notation in type A ("3 4 1 6 2 5"), a word ("2 1 3"), or "e".
    #[arg(long)]
    pub w: String,
    #[arg(long)]
    pub x: String,
    /// Reduced word for x (for X^w) or for w0 x (for X_w).
    #[arg(long)]
    pub word: Option<String>,
}

#[derive(Debug, Args)]
pub struct RestrictArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    #[arg(long, value_enum, default_value = "chow")]
    pub kind: KindArg,
}

#[derive(Debug, Args)]
pub struct HilbertArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    /// Number of Taylor coefficients to print.
    #[arg(long, default_value_t = 12)]
    pub terms: usize,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub common: GroupArgs,
    #[arg(long, value_enum, default_value = "opposite")]
    pub variant: VariantArg,
    /// Largest rank accepted.
    #[arg(long, default_value_t = DEFAULT_MAX_RANK)]
    pub max_rank: usize,
    /// Keep only w whose maximal parabolic is generated by these simple reflections, e.g. "1,3,5".
    #[arg(long)]
    pub parabolic: Option<String>,
    /// Restrict w to these elements (repeatable).
    #[arg(long)]
    pub w: Vec<String>,
    /// Restrict x to these elements (repeatable).
    #[arg(long)]
    pub x: Vec<String>,
    /// Recheck each multiplicity with up to K reduced words.
    #[arg(long, value_name = "K")]
    pub verify_words: Option<usize>,
    /// Reduced-word cache file, reused between runs.
    #[arg(long)]
    pub cache: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Stop after this many records; rerun to continue.
    #[arg(long)]
    pub limit: Option<usize>,
}
