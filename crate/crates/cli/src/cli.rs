use clap::{Args, Parser, Subcommand, ValueEnum};

use affine_schubert::cores::Partition;
use affine_schubert::strips::HeadRule;
use affine_schubert::symfun::Basis;

/// Affine Schubert calculus: n-cores, strong strips, ABCs, weak
/// Kostka-Foulkes tables, k-Schur expansions and conjecture sweeps.
#[derive(Debug, Parser)]
#[command(name = "ask", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List n-cores by degree.
    Cores {
        #[arg(long)]
        n: usize,
        /// Only this degree.
        #[arg(long, conflicts_with = "max_deg")]
        deg: Option<usize>,
        /// Every degree up to this one.
        #[arg(long)]
        max_deg: Option<usize>,
    },
    /// Enumerate horizontal, strong or ribbon strong strips out of a core.
    Strips {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value_t = StripKind::Horizontal)]
        kind: StripKind,
        /// Strip length for horizontal and strong strips.
        #[arg(long, required_if_eq_any([("kind", "horizontal"), ("kind", "strong")]))]
        m: Option<usize>,
        /// Rectangle width for ribbon strips.
        #[arg(long, required_if_eq("kind", "ribbon"))]
        r: Option<usize>,
        /// Ribbon strip length.
        #[arg(long, required_if_eq("kind", "ribbon"))]
        b: Option<usize>,
        #[arg(long, value_enum, default_value_t = HeadRuleArg::AboveBase)]
        head_rule: HeadRuleArg,
    },
    /// Enumerate affine Bruhat countertableaux with their n-cocharge.
    Abc {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Weight as a comma-separated composition with parts below n.
        #[arg(long, value_delimiter = ',', required = true)]
        weight: Vec<usize>,
    },
    /// Kostka-Foulkes matrix, classical or weak (n-bounded).
    KfTable {
        #[arg(long)]
        deg: usize,
        /// Weak table K^n over n-bounded partitions; needs --n.
        #[arg(long, requires = "n")]
        weak: bool,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        at_t: Option<i64>,
    },
    /// Expand a basis element in another basis.
    Expand {
        /// Basis of the element.
        #[arg(long, value_parser = parse_basis)]
        basis: Basis,
        /// Target basis.
        #[arg(long, value_parser = parse_basis, default_value = "m")]
        into: Basis,
        #[arg(long)]
        n: Option<usize>,
        /// Index as an n-core (k-Schur bases only).
        #[arg(long, conflicts_with = "bounded")]
        core: Option<Partition>,
        /// Index as a partition; n-bounded for the k-Schur bases.
        #[arg(long, visible_alias = "partition")]
        bounded: Option<Partition>,
        #[arg(long)]
        at_t: Option<i64>,
    },
    /// Weak, horizontal and strong Pieri rules side by side.
    Pieri {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        m: usize,
    },
    /// Run a verification sweep; exits 2 on any mismatch.
    Verify {
        #[arg(value_enum)]
        mode: VerifyMode,
        /// Largest n in the sweep.
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Largest degree in the sweep.
        #[arg(long, default_value_t = 6)]
        max_deg: usize,
        #[arg(long, value_enum, default_value_t = HeadRuleArg::AboveBase)]
        head_rule: HeadRuleArg,
        /// Include every instance report, not just mismatches.
        #[arg(long)]
        all: bool,
    },
}

/// An n-core given directly or through its bounded partition.
#[derive(Debug, Args)]
pub struct ShapeArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, required_unless_present = "bounded", conflicts_with = "bounded")]
    pub core: Option<Partition>,
    #[arg(long)]
    pub bounded: Option<Partition>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StripKind {
    Horizontal,
    Strong,
    Ribbon,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HeadRuleArg {
    AboveBase,
    AbovePrevious,
}

impl From<HeadRuleArg> for HeadRule {
    fn from(h: HeadRuleArg) -> Self {
        match h {
            HeadRuleArg::AboveBase => HeadRule::AboveBase,
            HeadRuleArg::AbovePrevious => HeadRule::AbovePrevious,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyMode {
    AffineMonk,
    RectPieri,
    PropMain,
    ThetaBijection,
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    s.parse().map_err(|e: affine_schubert::error::Error| e.to_string())
}
