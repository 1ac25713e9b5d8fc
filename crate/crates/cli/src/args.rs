use clap::{Args, Parser, Subcommand, ValueEnum};

use semisimple_core::diagalg::{DEFAULT_BASIS_CAP, DEFAULT_TENSOR_CAP};

/// Semisimplicity of tilting endomorphism algebras and diagram algebras.
#[derive(Debug, Parser)]
#[command(name = "semisimple", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Add wall-clock time to the output.
    #[arg(long, global = true)]
    pub timing: bool,

    /// Largest algebra basis the Gram engine will build.
    #[arg(long, global = true, default_value_t = DEFAULT_BASIS_CAP)]
    pub cap_basis: usize,

    /// Largest number of matrix entries for tensor space operators.
    #[arg(long, global = true, default_value_t = DEFAULT_TENSOR_CAP)]
    pub cap_tensor: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Positive roots, rho and vector representation weights.
    Rootdata(TypeArgs),
    /// Jantzen sum for one Weyl module, with all (alpha, k) terms.
    Jsf(WeightArgs),
    /// Whether one Weyl module is simple.
    Simple(WeightArgs),
    /// Weyl factors of V^d and semisimplicity of its endomorphism algebra.
    Tilting(TiltingArgs),
    /// Weyl factors of V^r (x) V*^s for gl_n.
    TiltingMixed(MixedArgs),
    /// Closed-form semisimplicity criterion.
    Criterion(AlgebraArgs),
    /// Gram determinant of the trace form.
    Gram(AlgebraArgs),
    /// Square and tensor action of a kernel element.
    IdempotentCheck(IdempotentArgs),
    /// Sweep a grid comparing the closed form with the Gram and JSF engines.
    CrossValidate(CrossArgs),
}

#[derive(Debug, Args)]
pub struct TypeArgs {
    /// Lie type: A, B, C or D.
    #[arg(long = "type")]
    pub kind: String,
    /// Number of epsilon coordinates (n for gl_n).
    #[arg(long)]
    pub rank: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QArg {
    One,
    Root,
    Nonroot,
}

#[derive(Debug, Args)]
pub struct RegimeArgs {
    /// Characteristic: 0 or a prime.
    #[arg(long = "char", default_value_t = 0)]
    pub characteristic: u64,
    /// Class of q.
    #[arg(long, value_enum, default_value_t = QArg::One)]
    pub q: QArg,
    /// ord(q^2) when q is a root of unity.
    #[arg(long)]
    pub ell: Option<u64>,
}

#[derive(Debug, Args)]
pub struct WeightArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    /// Comma-separated coordinates; k/2 is accepted.
    #[arg(long, allow_hyphen_values = true)]
    pub weight: String,
    #[command(flatten)]
    pub regime: RegimeArgs,
}

#[derive(Debug, Args)]
pub struct TiltingArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    #[arg(long)]
    pub d: usize,
    #[command(flatten)]
    pub regime: RegimeArgs,
}

#[derive(Debug, Args)]
pub struct MixedArgs {
    #[arg(long)]
    pub rank: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub s: usize,
    #[command(flatten)]
    pub regime: RegimeArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    HeckeA,
    HeckeB,
    Brauer,
    #[value(alias = "walled")]
    WalledBrauer,
}

#[derive(Debug, Args)]
pub struct AlgebraArgs {
    #[arg(value_enum)]
    pub family: Family,
    /// Degree for Hecke and Brauer algebras.
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    /// Loop parameter; an integer.
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<i64>,
    /// Explicit q, an element of the chosen field (a rational over Q).
    #[arg(long, allow_hyphen_values = true)]
    pub q_value: Option<String>,
    /// Field: q for the rationals, or a prime. Defaults to the characteristic.
    #[arg(long)]
    pub field: Option<String>,
    #[command(flatten)]
    pub regime: RegimeArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KernelFamily {
    Symmetric,
    #[value(alias = "walled")]
    WalledBrauer,
    Brauer,
}

#[derive(Debug, Args)]
pub struct IdempotentArgs {
    #[arg(value_enum)]
    pub family: KernelFamily,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    /// Field: q for the rationals, or a prime.
    #[arg(long, default_value = "q")]
    pub field: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Gram,
    Jsf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct CrossArgs {
    #[arg(value_enum)]
    pub family: Family,
    /// Degrees, comma-separated or a range a..b.
    #[arg(long)]
    pub d: Option<String>,
    /// Walled shapes as r:s pairs, comma-separated.
    #[arg(long)]
    pub rs: Option<String>,
    /// All walled shapes with 1 <= r + s <= this bound.
    #[arg(long)]
    pub max_total: Option<usize>,
    /// Values of delta, comma-separated or a range a..b.
    #[arg(long, allow_hyphen_values = true, default_value = "-4..5")]
    pub deltas: String,
    /// Primes for the finite fields; Q is always included.
    #[arg(long, default_value = "2,3,5,7")]
    pub primes: String,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "gram")]
    pub engines: Vec<EngineArg>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}
