mod error;
mod io;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use schurvar::geometry;
use schurvar::poly::build_polynomials;
use schurvar::regions::{
    boundary_curve, q_value, region, sample_batch, RegionRequest, RegionResult,
};
use schurvar::schur::{schur_parameters, SchurClassification, ToleranceConfig};
use schurvar::verify;
use serde_json::json;

use crate::error::CliError;
use crate::io::{complex_json, parse_complex, read_input, write_output, Curve};

#[derive(Parser)]
#[command(
    name = "schurvar",
    version,
    about = "Variability regions of Carathéodory interpolation data"
)]
struct Cli {
    #[command(flatten)]
    tol: TolArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TolArgs {
    /// Band around |γ| = 1 treated as unimodular.
    #[arg(long, global = true, default_value_t = 1e-12)]
    cls_tol: f64,
    /// Absolute error target of the segment quadrature.
    #[arg(long, global = true, env = "SCHUR_QUAD_TOL", default_value_t = 1e-10)]
    quad_tol: f64,
    /// Slack accepted outside a hull edge.
    #[arg(long, global = true, default_value_t = 1e-6)]
    geom_tol: f64,
}

impl TolArgs {
    fn config(&self) -> Result<ToleranceConfig, CliError> {
        let tol = ToleranceConfig {
            cls_tol: self.cls_tol,
            quad_tol: self.quad_tol,
            geom_tol: self.geom_tol,
        };
        tol.validate()?;
        Ok(tol)
    }
}

#[derive(Args)]
struct RegionArgs {
    /// JSON file with `coefficients` and an optional `domain` label.
    #[arg(long)]
    input: PathBuf,
    /// Evaluation point, e.g. `0.3+0.2i`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    z0: Complex64,
    /// Exponent of the weight ζ^j, at least -1.
    #[arg(long, allow_hyphen_values = true, default_value_t = -1)]
    j: i32,
    /// Overrides the domain given in the input file.
    #[arg(long)]
    domain: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify coefficient data as interior, boundary or exterior.
    Classify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sample the boundary of the region as CSV.
    Boundary {
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long, default_value_t = 512)]
        samples: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check random members of the region against the sampled hull.
    Sample {
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Boundary samples of the hull used for containment.
        #[arg(long, default_value_t = 2048)]
        samples: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the Schur polynomial property suites.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Comma-separated Schur parameters to check instead of random ones.
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
    },
    /// Render a boundary CSV as SVG.
    Plot {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let tol = cli.tol.config()?;
    match cli.command {
        Command::Classify { input, output } => classify(&input, output.as_deref(), &tol),
        Command::Boundary {
            region,
            samples,
            output,
        } => boundary(&region, samples, output.as_deref(), &tol),
        Command::Sample {
            region,
            count,
            seed,
            samples,
            output,
        } => sample(&region, count, seed, samples, output.as_deref(), &tol),
        Command::Verify { seed, gamma } => run_verify(seed, gamma.as_deref()),
        Command::Plot { input, output } => {
            let curve = Curve::read(&input)?;
            write_output(Some(&output), &svg::render(&curve)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn classify(
    input: &std::path::Path,
    output: Option<&std::path::Path>,
    tol: &ToleranceConfig,
) -> Result<ExitCode, CliError> {
    let job = read_input(input, None)?;
    let report = match schur_parameters(&job.data, tol) {
        SchurClassification::Interior { gamma } => json!({
            "class": "interior",
            "gamma": complex_json(&gamma),
        }),
        SchurClassification::Boundary {
            gamma_prefix,
            unimodular_index,
        } => json!({
            "class": "boundary",
            "gamma": complex_json(&gamma_prefix),
            "witness_index": unimodular_index,
        }),
        SchurClassification::Exterior {
            witness_index,
            reason,
        } => json!({
            "class": "exterior",
            "gamma": [],
            "witness_index": witness_index,
            "reason": format!("{reason:?}"),
        }),
    };
    write_output(output, &format!("{report}\n"))?;
    Ok(ExitCode::SUCCESS)
}

/// Loads the input and insists on interior data.
fn interior_gamma(
    args: &RegionArgs,
    tol: &ToleranceConfig,
) -> Result<(io::Job, Vec<Complex64>), CliError> {
    let job = read_input(&args.input, args.domain.as_deref())?;
    match schur_parameters(&job.data, tol) {
        SchurClassification::Interior { gamma } => Ok((job, gamma)),
        other => Err(CliError::NotInterior(other.label())),
    }
}

fn boundary(
    args: &RegionArgs,
    samples: usize,
    output: Option<&std::path::Path>,
    tol: &ToleranceConfig,
) -> Result<ExitCode, CliError> {
    if samples == 0 {
        return Err(CliError::Input("--samples must be positive".into()));
    }
    let (job, gamma) = interior_gamma(args, tol)?;
    let set = build_polynomials(&gamma)?;
    let (theta, values) =
        boundary_curve(&set, &job.domain, args.j, args.z0, samples, tol.quad_tol)?;
    let witness = q_value(
        &set,
        &job.domain,
        args.j,
        args.z0,
        Complex64::new(0.0, 0.0),
        tol.quad_tol,
    )?;
    let curve = Curve {
        convexity_defect: Some(geometry::convexity_defect(&values)),
        theta,
        values,
        witness: Some(witness),
    };
    write_output(output, &curve.to_csv()?)?;
    Ok(ExitCode::SUCCESS)
}

fn sample(
    args: &RegionArgs,
    count: usize,
    seed: u64,
    samples: usize,
    output: Option<&std::path::Path>,
    tol: &ToleranceConfig,
) -> Result<ExitCode, CliError> {
    let (job, gamma) = interior_gamma(args, tol)?;
    let request =
        RegionRequest::from_gamma(&gamma, args.j, args.z0, job.domain.clone(), samples, *tol)?;
    let hull = match region(&request)? {
        RegionResult::Jordan(jr) => jr,
        _ => return Err(CliError::NotInterior("interior")),
    };
    let set = build_polynomials(&gamma)?;
    let members = sample_batch(
        &set,
        &job.domain,
        args.j,
        args.z0,
        seed,
        count,
        tol.quad_tol,
    )?;
    let inside = members
        .iter()
        .filter(|m| hull.contains(m.value, tol.geom_tol))
        .count();
    let max_signed_distance = members
        .iter()
        .map(|m| hull.signed_distance(m.value))
        .reduce(f64::max);
    let report = json!({
        "count": count,
        "inside": inside,
        "max_signed_distance": max_signed_distance,
    });
    write_output(output, &format!("{report}\n"))?;
    if inside < count {
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(seed: u64, gamma: Option<&str>) -> Result<ExitCode, CliError> {
    let results = match gamma {
        Some(list) => {
            let gamma = list
                .split(',')
                .map(|s| parse_complex(s.trim()).map_err(CliError::Input))
                .collect::<Result<Vec<_>, _>>()?;
            verify::run_on(&gamma)?
        }
        None => verify::run_default(seed)?,
    };
    println!(
        "{:<30} {:<14} {:>12} {:>14}  result",
        "suite", "statistic", "value", "bound"
    );
    for r in &results {
        let bound = match r.bound {
            verify::Bound::Below(b) => format!("< {b:e}"),
            verify::Bound::AtLeast(b) => format!(">= {b:e}"),
            verify::Bound::Above(b) => format!("> {b:e}"),
        };
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        println!(
            "{:<30} {:<14} {:>12.3e} {:>14}  {verdict}",
            r.name, r.statistic, r.value, bound
        );
    }
    if results.iter().all(|r| r.passed()) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
