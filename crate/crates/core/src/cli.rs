//! Argument definitions and dispatch for the `slice-lab` binary.

use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::arith::{parse_rational, Rational};
use crate::report::{self, ReportError};

#[derive(Debug, Parser)]
#[command(name = "slice-lab", version, about = "Central slices of the unit cube")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertices, faces, zonotope verdict and volumes of one slice.
    Slice(SliceArgs),
    /// Run the fixed example catalog; exits 1 on any mismatch.
    Catalog(FormatArgs),
    /// Sinc-power integral I_p or the quadrature slice volume.
    Integral(IntegralArgs),
    /// Facet classes of a three-dimensional slice.
    Census(NormalArgs),
    /// Orthogonal projection of the cube along a direction.
    Project(ProjectArgs),
}

#[derive(Debug, Args)]
pub struct FormatArgs {
    /// Emit JSON instead of a table.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct NormalArgs {
    /// Normal vector as comma-separated integers or rationals.
    #[arg(long, value_parser = parse_csv, allow_hyphen_values = true)]
    pub normal: Csv,
    #[command(flatten)]
    pub format: FormatArgs,
}

#[derive(Debug, Args)]
pub struct SliceArgs {
    /// Normal vector as comma-separated integers or rationals.
    #[arg(long, value_parser = parse_csv, allow_hyphen_values = true)]
    pub normal: Csv,
    /// Section levels (comma-separated rationals in [-1/2, 1/2]).
    #[arg(long, value_parser = parse_csv, allow_hyphen_values = true)]
    pub section: Option<Csv>,
    /// Coordinate cut by the sections (default: the last one).
    #[arg(long)]
    pub axis: Option<usize>,
    /// Quadrature tolerance for the numerical volume.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[command(flatten)]
    pub format: FormatArgs,
}

#[derive(Debug, Args)]
#[group(id = "target", required = true, multiple = false, args = ["p", "normal"])]
pub struct IntegralArgs {
    /// Power p of the sinc integral.
    #[arg(long)]
    pub p: Option<u32>,
    /// Normal vector of the slice whose volume is integrated.
    #[arg(long, value_parser = parse_csv, allow_hyphen_values = true)]
    pub normal: Option<Csv>,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[command(flatten)]
    pub format: FormatArgs,
}

#[derive(Debug, Args)]
pub struct ProjectArgs {
    /// Projection direction as comma-separated integers or rationals.
    #[arg(long, alias = "normal", value_parser = parse_csv, allow_hyphen_values = true)]
    pub direction: Csv,
    #[command(flatten)]
    pub format: FormatArgs,
}

/// A comma-separated list of rationals such as `3,1,1,1` or `1/2,-1/3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Csv(pub Vec<Rational>);

fn parse_csv(text: &str) -> Result<Csv, String> {
    text.split(',')
        .map(|part| parse_rational(part.trim()).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()
        .map(Csv)
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Report(#[from] ReportError),
    #[error("cannot serialize output: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

fn emit<T: serde::Serialize>(
    out: &mut impl Write,
    json: bool,
    value: &T,
    text: impl FnOnce(&T) -> String,
) -> Result<(), CliError> {
    if json {
        serde_json::to_writer_pretty(&mut *out, value)?;
        writeln!(out)?;
    } else {
        write!(out, "{}", text(value))?;
    }
    Ok(())
}

/// Runs one command and returns the process exit code.
pub fn run(cli: &Cli, out: &mut impl Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Slice(a) => {
            let levels = a.section.as_ref().map(|c| c.0.clone()).unwrap_or_default();
            let r = report::slice_report(&a.normal.0, &levels, a.axis, a.tol)?;
            emit(out, a.format.json, &r, report::SliceReport::to_text)?;
        }
        Command::Catalog(f) => {
            let rows = report::catalog()?;
            emit(out, f.json, &rows, |r| report::catalog_text(r))?;
            if rows.iter().any(|r| !r.matches) {
                return Ok(1);
            }
        }
        Command::Integral(a) => {
            let row = match (&a.p, &a.normal) {
                (Some(p), _) => report::integral_power(*p, a.tol)?,
                (None, Some(normal)) => report::integral_normal(&normal.0, a.tol)?,
                (None, None) => unreachable!("clap requires --p or --normal"),
            };
            emit(out, a.format.json, &row, report::IntegralRow::to_text)?;
        }
        Command::Census(a) => {
            let r = report::census_report(&a.normal.0)?;
            emit(out, a.format.json, &r, report::CensusReport::to_text)?;
        }
        Command::Project(a) => {
            let r = report::projection_report(&a.direction.0)?;
            emit(out, a.format.json, &r, report::ProjectionReport::to_text)?;
        }
    }
    Ok(0)
}
