use std::path::PathBuf;

use anyhow::bail;
use clap::{Args, Parser, Subcommand, ValueEnum};
use signed_graceful::classify::Shape;
use signed_graceful::{Config, DoubleStarConfig, SearchBudget, Sign, StarConfig};

#[derive(Debug, Parser)]
#[command(
    name = "sgrace",
    version,
    about = "Additively graceful labelings of signed stars and double stars"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a labeling from the closed-form constructions.
    Construct(FamilyArgs),
    /// Check the labeling in a graph document.
    Verify {
        /// Document path, or `-` for standard input.
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    /// Decide existence from the theorem table, searching uncovered cases.
    Classify {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        search: SearchArgs,
        /// Report uncovered cases as unknown instead of searching.
        #[arg(long)]
        no_search: bool,
    },
    /// Exhaustive search for a labeling.
    Search {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Count labelings up to symmetry.
    Classes {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        search: SearchArgs,
        /// Symmetries to quotient by: `perm`, `comp`, or both.
        #[arg(long, value_delimiter = ',', default_value = "perm")]
        equiv: Vec<Symmetry>,
    },
    /// Classify a grid of double stars and print verdict matrices.
    Sweep(SweepArgs),
    /// Draw a graph document.
    Render {
        #[arg(default_value = "-")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = RenderFormat::Dot)]
        format: RenderFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Star,
    Ds,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Symmetry {
    Perm,
    Comp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RenderFormat {
    Dot,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    /// `star` or `ds` (double star).
    #[arg(value_enum)]
    pub kind: FamilyKind,
    /// Star: positive pendants.
    #[arg(long)]
    pub m: Option<usize>,
    /// Star: negative pendants.
    #[arg(long)]
    pub n: Option<usize>,
    /// Double star: positive pendants at z1.
    #[arg(long)]
    pub l: Option<usize>,
    /// Double star: positive pendants at z2.
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub neg_pendants_left: Option<usize>,
    #[arg(long)]
    pub neg_pendants_right: Option<usize>,
    /// Sign of the z1 z2 edge: `pos` or `neg`.
    #[arg(long, value_parser = parse_sign)]
    pub bridge: Option<Sign>,
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    s.parse()
}

impl FamilyArgs {
    pub fn config(&self) -> anyhow::Result<Config> {
        match self.kind {
            FamilyKind::Star => {
                if self.l.is_some()
                    || self.r.is_some()
                    || self.neg_pendants_left.is_some()
                    || self.neg_pendants_right.is_some()
                    || self.bridge.is_some()
                {
                    bail!("star takes only --m and --n");
                }
                Ok(StarConfig::new(self.m.unwrap_or(0), self.n.unwrap_or(0))?.into())
            }
            FamilyKind::Ds => {
                if self.m.is_some() || self.n.is_some() {
                    bail!(
                        "ds takes --l, --r, --neg-pendants-left, --neg-pendants-right and --bridge"
                    );
                }
                Ok(DoubleStarConfig::new(
                    self.l.unwrap_or(0),
                    self.r.unwrap_or(0),
                    self.neg_pendants_left.unwrap_or(0),
                    self.neg_pendants_right.unwrap_or(0),
                    self.bridge.unwrap_or(Sign::Positive),
                )
                .into())
            }
        }
    }
}

pub const DEFAULT_MAX_NODES: u64 = 200_000_000;
pub const DEFAULT_MAX_SECONDS: f64 = 60.0;

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
    pub max_nodes: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_SECONDS)]
    pub max_seconds: f64,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

impl SearchArgs {
    pub fn budget(&self) -> anyhow::Result<SearchBudget> {
        Ok(SearchBudget::new(self.max_nodes, self.max_seconds)?)
    }
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// Sign shapes to sweep (comma separated); all when omitted.
    #[arg(long, value_delimiter = ',', value_parser = parse_shape)]
    pub shape: Vec<Shape>,
    #[arg(long)]
    pub l_max: usize,
    #[arg(long)]
    pub r_max: usize,
    /// Append-only record cache; cached cells are not recomputed.
    #[arg(long)]
    pub cache: Option<PathBuf>,
    /// Recompute cached cells whose search ran out of budget.
    #[arg(long)]
    pub retry_aborted: bool,
    /// Also count labeling classes under pendant permutation.
    #[arg(long)]
    pub classes: bool,
    #[arg(long)]
    pub no_search: bool,
    #[command(flatten)]
    pub search: SearchArgs,
}

fn parse_shape(s: &str) -> Result<Shape, String> {
    s.parse()
}
