use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "t0enum", version, about = "Tables, sequences and oracle checks for hypergraph counts")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the (m, n) grid of a class.
    Table(TableArgs),
    /// Count a class by exhaustive enumeration.
    Oracle(OracleArgs),
    /// Compare formulas against the oracle.
    Verify(VerifyArgs),
    /// Print a class as a b-file.
    Sequence(SequenceArgs),
    /// Check `Omega = 1 + ln A` for the connected no-empty-edge classes.
    EgfCheck(EgfArgs),
    /// Print every registered class with its citation and spec.
    Manifest(ManifestArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Antidiagonal,
    Row,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct BudgetArgs {
    /// Largest `m * n` enumerated for ordered rows [default: 20, or T0ENUM_BUDGET_CELLS].
    #[arg(long)]
    pub max_cells: Option<u64>,
    /// Largest row universe `2^n` for unordered rows.
    #[arg(long)]
    pub max_universe: Option<u64>,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long)]
    pub class: String,
    /// Edge range, `a..b` (inclusive) or a single value.
    #[arg(long, value_parser = parse_range, default_value = "1..4")]
    pub m: RangeInclusive<usize>,
    /// Vertex range, `a..b` (inclusive) or a single value.
    #[arg(long, value_parser = parse_range, default_value = "1..4")]
    pub n: RangeInclusive<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    /// Use the oracle-consistent correction where one is registered.
    #[arg(long)]
    pub errata_corrected: bool,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(long)]
    pub class: String,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: Option<usize>,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, conflicts_with = "all", required_unless_present = "all")]
    pub class: Option<String>,
    /// Every registered class.
    #[arg(long)]
    pub all: bool,
    #[arg(long, default_value_t = 4)]
    pub m_max: usize,
    #[arg(long, default_value_t = 4)]
    pub n_max: usize,
    /// Single k for parameterized classes [default: 1, 2 and 3].
    #[arg(long)]
    pub k: Option<usize>,
    /// Extra rows checked for unordered conventions.
    #[arg(long, default_value_t = 1)]
    pub unordered_extra_rows: usize,
    #[arg(long)]
    pub errata_corrected: bool,
    /// Write one JSON errata record per line to this file.
    #[arg(long)]
    pub emit_errata: Option<std::path::PathBuf>,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Args, Debug)]
pub struct SequenceArgs {
    #[arg(long)]
    pub class: String,
    #[arg(long, value_enum, default_value_t = Order::Antidiagonal)]
    pub order: Order,
    #[arg(long, default_value_t = 100)]
    pub limit: usize,
    /// Row length for `--order row`.
    #[arg(long, default_value_t = 10)]
    pub width: usize,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub errata_corrected: bool,
}

#[derive(Args, Debug)]
pub struct EgfArgs {
    /// Row convention, 1 to 4.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    pub family: u8,
    #[arg(long, default_value_t = 5)]
    pub order_x: usize,
    #[arg(long, default_value_t = 5)]
    pub order_y: usize,
    #[arg(long, default_value_t = 6)]
    pub max_order: usize,
    /// Add one to the connected count at `m,n` before checking.
    #[arg(long, hide = true, value_parser = parse_cell)]
    pub corrupt: Option<(usize, usize)>,
}

#[derive(Args, Debug)]
pub struct ManifestArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bound = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (bound(a)?, bound(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = bound(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(lo..=hi)
}

fn parse_cell(s: &str) -> Result<(usize, usize), String> {
    let (m, n) = s.split_once(',').ok_or("expected m,n")?;
    let p = |t: &str| t.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((p(m)?, p(n)?))
}
