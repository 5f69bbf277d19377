//! Command-line front end: exact family polynomials, oracle runs, zeros,
//! limiting curves, dominance maps, pressure, convergence sweeps, the
//! counterexample and Beraha checks, and SVG replotting.

pub mod commands;
pub mod error;
pub mod numbers;
pub mod plot;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tutte_atlas_core::families::FamilyId;
use tutte_atlas_core::limit_sets::Plane;

pub use error::CliError;
use numbers::{Grid, Point, QValue};

/// Environment variable that caps the worker threads.
pub const THREADS_VAR: &str = "TUTTE_ATLAS_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "tutte-atlas",
    version,
    about = "Tutte polynomials of self-dual families and the zeros of their Potts restrictions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact polynomial of a family member.
    Family(FamilyArgs),
    /// Tutte polynomial of a graph read from JSON.
    Oracle(OracleArgs),
    /// Complex zeros of a family member on the hyperbola.
    Zeros(ZerosArgs),
    /// Limiting zero set of a family.
    Limitset(LimitsetArgs),
    /// Dominant eigenvalue over a grid of points.
    Dominance(DominanceArgs),
    /// Finite-size pressure against its limit.
    Pressure(PressureArgs),
    /// Distance of the zeros to the limiting set as the size grows.
    Convergence(ConvergenceArgs),
    /// Refutes the unit-circle conjecture with the four-vertex graph.
    VerifyCounterexample(VerifyCounterexampleArgs),
    /// Checks the Beraha-number factorization of the strip characteristic polynomials.
    VerifyBeraha(VerifyBerahaArgs),
    /// Redraws the SVG from a CSV or JSON file written by zeros or limitset.
    Replot(ReplotArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PlaneArg {
    Z,
    V,
}

impl From<PlaneArg> for Plane {
    fn from(p: PlaneArg) -> Self {
        match p {
            PlaneArg::Z => Plane::Z,
            PlaneArg::V => Plane::V,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolyFormat {
    Xy,
    Z,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PlotFormat {
    Csv,
    Svg,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long)]
    pub id: FamilyId,
    /// Size parameter; not used by the counterexample.
    #[arg(long)]
    pub n: Option<usize>,
    /// Needed for the `z` format and for JSON in `z`.
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<QValue>,
    #[arg(long, value_enum, default_value_t = PolyFormat::Xy)]
    pub format: PolyFormat,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// `{"vertices": n, "edges": [[u, v, multiplicity], ...]}`.
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<QValue>,
    #[arg(long, value_enum, default_value_t = PolyFormat::Xy)]
    pub format: PolyFormat,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct ZerosArgs {
    #[arg(long)]
    pub family: FamilyId,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub q: QValue,
    #[arg(long, value_enum, default_value_t = PlaneArg::Z)]
    pub plane: PlaneArg,
    /// Keep only points with positive real part.
    #[arg(long)]
    pub positive_re: bool,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub out: TableFormat,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct LimitsetArgs {
    #[arg(long)]
    pub family: FamilyId,
    #[arg(long, allow_hyphen_values = true)]
    pub q: QValue,
    #[arg(long, value_enum, default_value_t = PlaneArg::V)]
    pub plane: PlaneArg,
    /// Points per piece.
    #[arg(long, default_value_t = 512)]
    pub samples: usize,
    /// Cut for unbounded pieces; defaults to 10 in `v` and 50 in `z`.
    #[arg(long, allow_hyphen_values = true)]
    pub extent: Option<f64>,
    #[arg(long, value_enum, default_value_t = PlotFormat::Svg)]
    pub out: PlotFormat,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct DominanceArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub q: QValue,
    /// Parameters `a`, each contributing both branches.
    #[arg(
        long,
        value_delimiter = ',',
        required_unless_present = "family",
        conflicts_with = "family",
        allow_hyphen_values = true
    )]
    pub pairs: Vec<f64>,
    /// Use a family's eigenvalues, skipping terms with zero coefficient.
    #[arg(long)]
    pub family: Option<FamilyId>,
    /// `re0:re1:steps,im0:im1:steps`.
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Grid,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub out: TableFormat,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct PressureArgs {
    #[arg(long)]
    pub family: FamilyId,
    #[arg(long, allow_hyphen_values = true)]
    pub q: QValue,
    /// Sample point `re,im`; repeatable.
    #[arg(long = "z", required = true, allow_hyphen_values = true)]
    pub z: Vec<Point>,
    #[arg(long, value_delimiter = ',', default_values_t = [100usize, 400])]
    pub n: Vec<usize>,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub out: TableFormat,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct ConvergenceArgs {
    #[arg(long)]
    pub family: FamilyId,
    #[arg(long, allow_hyphen_values = true)]
    pub q: QValue,
    #[arg(long, value_delimiter = ',', default_values_t = [25usize, 50, 100])]
    pub n: Vec<usize>,
    #[arg(long, value_enum, default_value_t = PlaneArg::V)]
    pub plane: PlaneArg,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub out: TableFormat,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyCounterexampleArgs {
    #[arg(long, default_value = "16")]
    pub q: QValue,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub out: ReportFormat,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyBerahaArgs {
    /// Strip width, 2 or 3.
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..=3))]
    pub ly: u32,
    #[arg(long, default_value = "2.5")]
    pub q: QValue,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// Defaults to a hash of the other options.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub out: ReportFormat,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct ReplotArgs {
    /// CSV or JSON from zeros or limitset; `-` reads standard input.
    #[arg(long)]
    pub input: PathBuf,
    #[command(flatten)]
    pub output: Output,
}

/// Caps the global worker pool from [`THREADS_VAR`].
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("{THREADS_VAR} must be a positive integer, got {raw:?}")))?;
    // A second call in the same process finds the pool already built.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Parses `args` (program name first), runs the command and returns the exit
/// status: 0 on success, 1 for invalid input, 2 for a failed computation.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = configure_threads().and_then(|()| commands::dispatch(&cli.command, stdout));
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "{e}");
            e.exit_code()
        }
    }
}
