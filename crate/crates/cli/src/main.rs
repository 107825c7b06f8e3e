//! `sasaki`: verification suites, curve synthesis and geometry export for
//! Sasakian space forms `M^3(c)`.

mod chart;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sasaki_core::classify::{OperatorTag, DEFAULT_C};
use sasaki_core::Profile;

use crate::chart::ChartKind;

#[derive(Debug, Parser)]
#[command(name = "sasaki", version, about = "Curves, Hopf cylinders and eigen-theorem checks in Sasakian space forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run verification suites; exit 1 if any expected verdict fails.
    Verify(VerifyArgs),
    /// Integrate a curve or cylinder and write its Frenet data.
    Synthesize(SynthesizeArgs),
    /// Write chart positions as a CSV polyline or an OBJ cylinder mesh.
    Export(ExportArgs),
    /// Measure one operator over a grid of constant curvatures.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Curves,
    Legendre,
    Hopf,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Frenet curve with prescribed curvature and torsion.
    Frenet,
    /// Legendre curve with prescribed curvature (torsion 1).
    Legendre,
    /// Hopf cylinder over a base curve with curvature `kappa_bar`.
    Cylinder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GeometryFormat {
    Csv,
    Obj,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OperatorArg {
    Laplacian,
    NormalLaplacian,
    Bitension,
    Jacobi,
}

impl From<OperatorArg> for OperatorTag {
    fn from(op: OperatorArg) -> Self {
        match op {
            OperatorArg::Laplacian => OperatorTag::Laplacian,
            OperatorArg::NormalLaplacian => OperatorTag::NormalLaplacian,
            OperatorArg::Bitension => OperatorTag::Bitension,
            OperatorArg::Jacobi => OperatorTag::Jacobi,
        }
    }
}

/// Arclength grid: `[0, length]` with step `h`, or `n` samples.
#[derive(Debug, Clone, Args)]
struct GridArgs {
    /// Arclength step.
    #[arg(long, default_value_t = 1e-3, value_parser = positive)]
    h: f64,
    /// Arclength interval length.
    #[arg(long, default_value_t = 2.0, value_parser = positive, conflicts_with = "n")]
    length: f64,
    /// Number of samples (overrides --length).
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Debug, Clone, Args)]
struct ShapeArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Space form parameter.
    #[arg(long, allow_negative_numbers = true, value_parser = finite)]
    c: f64,
    /// Curvature profile (`kappa_bar` for cylinders), e.g. `const:1`, `affine:1,0`.
    #[arg(long, default_value = "const:1")]
    kappa: Profile,
    /// Torsion profile (frenet family only).
    #[arg(long, default_value = "const:0")]
    tau: Profile,
    /// Initial tangent in frame components (frenet family only).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, default_value = "1,0,0")]
    direction: Vec<f64>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    /// Comma-separated space form parameters.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, value_parser = finite, default_values_t = DEFAULT_C)]
    c: Vec<f64>,
    #[command(flatten)]
    grid: GridArgs,
    /// Report path (stdout when absent).
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    format: TableFormat,
}

#[derive(Debug, Args)]
struct SynthesizeArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    format: TableFormat,
}

#[derive(Debug, Args)]
struct ExportArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, value_enum, default_value_t = ChartKind::Auto)]
    chart: ChartKind,
    /// Vertices per fibre in OBJ meshes.
    #[arg(long, default_value_t = 32, value_parser = clap::value_parser!(u32).range(3..))]
    fiber_samples: u32,
    /// Fibre length for charts whose fibres do not close.
    #[arg(long, default_value_t = 2.0, value_parser = positive)]
    fiber_length: f64,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = GeometryFormat::Csv)]
    format: GeometryFormat,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, value_enum)]
    operator: OperatorArg,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, value_parser = finite, default_values_t = DEFAULT_C)]
    c: Vec<f64>,
    /// Comma-separated constant curvatures (`kappa_bar` for cylinders).
    #[arg(long, value_delimiter = ',', required = true, value_parser = finite)]
    values: Vec<f64>,
    /// Constant torsion (frenet family only).
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true, value_parser = finite)]
    tau: f64,
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    format: TableFormat,
}

fn finite(text: &str) -> Result<f64, String> {
    let x: f64 = text.parse().map_err(|e| format!("{e}"))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err("must be finite".into())
    }
}

fn positive(text: &str) -> Result<f64, String> {
    let x = finite(text)?;
    if x > 0.0 {
        Ok(x)
    } else {
        Err("must be positive".into())
    }
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Clean,
    Mismatch,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(args) => commands::verify(args),
        Command::Synthesize(args) => commands::synthesize(args),
        Command::Export(args) => commands::export(args),
        Command::Sweep(args) => commands::sweep(args),
    };
    match result {
        Ok(Outcome::Clean) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
