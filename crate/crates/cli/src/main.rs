//! `eisenworks` command-line front end.

mod commands;
mod properties;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

/// Version tag carried by every JSON document.
pub const SCHEMA: &str = "eisenworks/1";

#[derive(Debug, Parser)]
#[command(
    name = "eisenworks",
    version,
    about = "Real-analytic Eisenstein series toolkit"
)]
struct Cli {
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the artifact to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand a modular form in q, q̄ and 𝕃.
    Expand(ExpandArgs),
    /// Derivation algebra checks.
    Lie(LieArgs),
    /// Linearized double shuffle residues of ρ applied to a bracket.
    Pls(PlsArgs),
    /// Iterated Eisenstein integrals.
    Iterint(IterintArgs),
    /// Completed L-function values.
    Lfun(LfunArgs),
    /// Run the acceptance suite and seeded property checks.
    Selftest(SelftestArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Real-analytic Eisenstein series 𝓔_{r,s}.
    Eis,
    /// Holomorphic Eisenstein series G_k.
    Holo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    #[arg(long, value_enum, default_value = "eis")]
    pub family: Family,
    /// Total weight w = r + s (or k for the holomorphic family).
    #[arg(long)]
    pub weight: u32,
    /// Component (r, s); defaults to (w, 0).
    #[arg(long, num_args = 2, value_names = ["R", "S"])]
    pub component: Option<Vec<u32>>,
    /// Truncation order N in q and q̄.
    #[arg(long, default_value_t = 16)]
    pub order: u32,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LieCheck {
    Pollack,
}

#[derive(Debug, Args)]
pub struct LieArgs {
    /// Verify a printed relation.
    #[arg(long, value_enum, conflicts_with = "table")]
    pub verify: Option<LieCheck>,
    /// Which Pollack relation: 1 (weight 14) or 2 (weight 18).
    #[arg(long, default_value_t = 1)]
    pub relation: u32,
    /// Print the dimension table of iterated brackets.
    #[arg(long)]
    pub table: bool,
    /// Largest bracket length for the table.
    #[arg(long, default_value_t = 2)]
    pub maxlen: u32,
    /// Largest a-degree for the table.
    #[arg(long, default_value_t = 9)]
    pub window: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    Verbatim,
    LeadingB,
}

#[derive(Debug, Args)]
pub struct PlsArgs {
    /// Indices (i, j) of [ε^∨_i, ε^∨_j].
    #[arg(long, num_args = 2, value_names = ["I", "J"], required = true)]
    pub check_bracket: Vec<u32>,
    #[arg(long, value_enum, default_value = "verbatim")]
    pub convention: Convention,
}

#[derive(Debug, Args)]
pub struct IterintArgs {
    /// Largest word length.
    #[arg(long, default_value_t = 2)]
    pub maxlen: usize,
    /// Largest Eisenstein weight among the letters.
    #[arg(long, default_value_t = 10)]
    pub maxweight: u32,
    /// Truncation order in q.
    #[arg(long, default_value_t = 12)]
    pub order: u32,
    #[arg(long, value_enum, default_value = "json")]
    pub emit: Format,
    /// Build the length-one equivariant series instead.
    #[arg(long, requires = "weight")]
    pub jeqv1: bool,
    /// Weight for `--jeqv1`.
    #[arg(long)]
    pub weight: Option<u32>,
}

#[derive(Debug, Args)]
pub struct LfunArgs {
    #[arg(long, value_enum, default_value = "eis")]
    pub family: Family,
    /// Weights (r, s); for the holomorphic family (k, 0).
    #[arg(long, num_args = 2, value_names = ["R", "S"], required = true)]
    pub weights: Vec<u32>,
    /// Real point s.
    #[arg(long)]
    pub s: f64,
    /// Number of Dirichlet terms.
    #[arg(long, default_value_t = 100_000)]
    pub terms: usize,
    /// Relative tolerance against the closed form, when one exists.
    #[arg(long, default_value_t = 1e-6)]
    pub tolerance: f64,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    /// q-order for the expansion criteria.
    #[arg(long, default_value_t = 12)]
    pub order: u32,
    /// q-order for the product criteria.
    #[arg(long, default_value_t = 8)]
    pub product_order: u32,
    /// Dirichlet terms for the L-function criterion.
    #[arg(long, default_value_t = 100_000)]
    pub terms: usize,
    /// Run only these criteria.
    #[arg(long, value_delimiter = ',')]
    pub criteria: Vec<u32>,
    /// Seed for the randomized property checks.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random cases per property.
    #[arg(long, default_value_t = 200)]
    pub cases: usize,
}

/// Command result: the rendered artifact and whether every check in it held.
pub struct Outcome {
    pub artifact: String,
    pub ok: bool,
}

/// Invalid configuration, reported with exit status 2.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct ConfigError(pub String);

fn is_config_error(e: &anyhow::Error) -> bool {
    use eisenworks::Error as E;
    if e.downcast_ref::<ConfigError>().is_some() {
        return true;
    }
    matches!(
        e.downcast_ref::<E>(),
        Some(
            E::OddWeight(_)
                | E::InvalidArgument(_)
                | E::CostGuard(_)
                | E::OutOfRegime(_)
                | E::PrecisionTooHigh(_)
                | E::Parse(_)
        )
    )
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(ConfigError("--threads must be positive".into()).into());
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()?;
    }
    let outcome = match &cli.command {
        Command::Expand(a) => commands::expand(a)?,
        Command::Lie(a) => commands::lie(a)?,
        Command::Pls(a) => commands::pls(a)?,
        Command::Iterint(a) => commands::iterint(a)?,
        Command::Lfun(a) => commands::lfun(a)?,
        Command::Selftest(a) => commands::selftest(a)?,
    };
    match &cli.output {
        Some(path) => std::fs::write(path, &outcome.artifact)?,
        None => std::io::stdout().write_all(outcome.artifact.as_bytes())?,
    }
    Ok(outcome)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(o) if o.ok => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if is_config_error(&e) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
