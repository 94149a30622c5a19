use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Casimir forces between mirrors in Rindler, FLRW and de Sitter spacetimes.
///
/// All inputs and outputs are in natural units, hbar = c = 1.
#[derive(Debug, Parser)]
#[command(name = "casimir", version, args_override_self = true)]
pub struct Cli {
    /// Emit JSON.
    #[arg(long, global = true)]
    pub json: bool,

    /// Emit CSV.
    #[arg(long, global = true)]
    pub csv: bool,

    /// Suppress the units banner.
    #[arg(long, global = true)]
    pub quiet: bool,

    /// Read `key = value` defaults from a file; flags on the command line win.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Override every verification tolerance.
    #[arg(long, global = true, value_name = "FLOAT")]
    pub tol: Option<f64>,

    /// Write the result to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Casimir force on a Rindler mirror by the energy and pressure methods.
    RindlerForce(RindlerForceArgs),
    /// Regularized Casimir energy of a Rindler cavity.
    RindlerEnergy(CavityArgs),
    /// Casimir force between comoving plates in de Sitter.
    DesitterForce(DesitterForceArgs),
    /// FLRW curvature, anomaly tensors and the two-path check.
    FlrwCurvature(FamilyArgs),
    /// Trace anomaly in two or four dimensions.
    AnomalyTrace(AnomalyTraceArgs),
    /// Evaluate another subcommand over a grid of one input.
    Sweep(SweepArgs),
    /// Run the cross-method and oracle checks.
    Verify,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::RindlerForce(_) => "rindler-force",
            Command::RindlerEnergy(_) => "rindler-energy",
            Command::DesitterForce(_) => "desitter-force",
            Command::FlrwCurvature(_) => "flrw-curvature",
            Command::AnomalyTrace(_) => "anomaly-trace",
            Command::Sweep(_) => "sweep",
            Command::Verify => "verify",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct CavityArgs {
    /// Rindler parameter a (rescales Rindler time).
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,

    /// Position chi = A of the left mirror.
    #[arg(long = "A", value_name = "A")]
    pub left: f64,

    /// Position chi = B of the right mirror.
    #[arg(long = "B", value_name = "B", required_unless_present = "length", conflicts_with = "length")]
    pub right: Option<f64>,

    /// Proper length L, so that B = A + L.
    #[arg(long = "L", value_name = "L")]
    pub length: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ForceMethod {
    Energy,
    Pressure,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Outside {
    Rindler,
    Minkowski,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlateArg {
    A,
    B,
}

#[derive(Debug, Clone, Args)]
pub struct RindlerForceArgs {
    #[command(flatten)]
    pub cavity: CavityArgs,

    /// Rindler time at which the pressure is evaluated.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub tau: f64,

    #[arg(long, value_enum, default_value_t = ForceMethod::Both)]
    pub method: ForceMethod,

    /// Vacuum state beyond the mirrors.
    #[arg(long, value_enum, default_value_t = Outside::Rindler)]
    pub outside: Outside,

    #[arg(long, value_enum, default_value_t = PlateArg::B)]
    pub plate: PlateArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpeciesArg {
    Scalar,
    Maxwell,
}

#[derive(Debug, Clone, Args)]
pub struct DesitterForceArgs {
    /// Hubble rate H > 0.
    #[arg(long = "H", value_name = "H", required_unless_present = "flat_limit")]
    pub hubble: Option<f64>,

    /// Conformal time.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub eta: f64,

    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub z1: f64,

    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub z2: f64,

    #[arg(long, value_enum, default_value_t = SpeciesArg::Maxwell)]
    pub species: SpeciesArg,

    /// Report the H -> 0 limit taken along eta = 1/H.
    #[arg(long, conflicts_with = "hubble")]
    pub flat_limit: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    /// a = 1/(H|eta|)
    Desitter,
    /// a = amplitude * eta^exponent
    PowerLaw,
    /// a = 1 + (late - 1)(1 + tanh(eta/width))/2
    Tanh,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum, default_value_t = FamilyKind::Desitter)]
    pub family: FamilyKind,

    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub eta: f64,

    #[arg(long = "H", value_name = "H", default_value_t = 1.0)]
    pub hubble: f64,

    #[arg(long, default_value_t = 1.0)]
    pub amplitude: f64,

    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub exponent: f64,

    #[arg(long, default_value_t = 2.0)]
    pub late: f64,

    #[arg(long, default_value_t = 1.0)]
    pub width: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Dimension {
    #[value(name = "2")]
    Two,
    #[value(name = "4")]
    Four,
}

#[derive(Debug, Clone, Args)]
pub struct AnomalyTraceArgs {
    #[arg(long, value_enum, default_value_t = Dimension::Four)]
    pub dim: Dimension,

    /// Ricci scalar, for --dim 2.
    #[arg(long = "R", value_name = "R", required_if_eq("dim", "2"), allow_negative_numbers = true)]
    pub ricci_scalar: Option<f64>,

    #[arg(long, value_enum, default_value_t = SpeciesArg::Maxwell)]
    pub species: SpeciesArg,

    /// Background for --dim 4.
    #[command(flatten)]
    pub background: FamilyArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    Linear,
    Log,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// Long name of the swept input of the base command, e.g. `A` or `tau`.
    #[arg(long)]
    pub param: String,

    /// First grid value.
    #[arg(long, allow_negative_numbers = true)]
    pub start: f64,

    /// Last grid value, included.
    #[arg(long, allow_negative_numbers = true)]
    pub stop: f64,

    /// Number of grid points, at least 2.
    #[arg(long)]
    pub count: usize,

    /// Grid spacing; `log` spaces the base-10 exponent evenly.
    #[arg(long, value_enum, default_value_t = Scale::Linear)]
    pub scale: Scale,

    /// Base command and its fixed inputs, e.g. `rindler-force --L 1`.
    #[arg(required = true, trailing_var_arg = true, allow_hyphen_values = true, value_name = "BASE")]
    pub base: Vec<String>,
}
