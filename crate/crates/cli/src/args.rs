use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use ministokes::benchmarks::NUM_PROBLEMS;
use ministokes::study::{StudyOptions, DEFAULT_H0};

use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "ministokes", version, about = "MINI element Stokes solver and convergence studies")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a mesh and print its quality summary.
    Mesh(MeshArgs),
    /// Solve one problem on one mesh and print the error report.
    Solve(SolveArgs),
    /// Convergence study over a sequence of mesh sizes.
    Study(StudyArgs),
    /// Study of all seven problems on the default sequence.
    Table1(Table1Args),
    /// Check a manufactured solution at sample points.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct SolverFlags {
    /// ILUT drop tolerance.
    #[arg(long)]
    pub droptol: Option<f64>,
    /// Relative residual tolerance.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Maximum GMRES iterations.
    #[arg(long)]
    pub maxit: Option<usize>,
    /// Jitter seed for the initial mesh lattice.
    #[arg(long)]
    pub seed: Option<u64>,
}

impl SolverFlags {
    pub fn options(&self) -> Result<StudyOptions, CliError> {
        if let Some(d) = self.droptol {
            if !(d >= 0.0 && d.is_finite()) {
                return Err(CliError::Usage(format!("--droptol must be non-negative, got {d}")));
            }
        }
        if let Some(t) = self.tol {
            if !(t > 0.0 && t < 1.0) {
                return Err(CliError::Usage(format!("--tol must lie in (0, 1), got {t}")));
            }
        }
        if self.maxit == Some(0) {
            return Err(CliError::Usage("--maxit must be positive".into()));
        }
        Ok(StudyOptions {
            tolerance: self.tol,
            max_iterations: self.maxit,
            droptol: self.droptol,
            seed: self.seed,
        })
    }
}

#[derive(Debug, Args)]
pub struct MeshArgs {
    /// Problem whose domain is meshed.
    #[arg(long, default_value_t = 1)]
    pub problem: usize,
    #[arg(long, allow_negative_numbers = true)]
    pub h0: f64,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Mesh file; written to stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub problem: usize,
    #[arg(long, allow_negative_numbers = true, conflicts_with = "mesh_file", required_unless_present = "mesh_file")]
    pub h0: Option<f64>,
    /// Solve on this mesh instead of generating one.
    #[arg(long)]
    pub mesh_file: Option<PathBuf>,
    #[command(flatten)]
    pub solver: SolverFlags,
    /// JSON copy of the report.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StudyArgs {
    /// Comma-separated problem ids.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub problem: Vec<usize>,
    /// Comma-separated mesh sizes, coarse to fine.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub h0: Option<Vec<f64>>,
    #[command(flatten)]
    pub solver: SolverFlags,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct Table1Args {
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub h0: Option<Vec<f64>>,
    #[command(flatten)]
    pub solver: SolverFlags,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Directory receiving results.csv, rates.csv and ratios.csv; tables go
    /// to stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write study.json next to the tables.
    #[arg(long, requires = "out")]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated problem ids; all problems when absent.
    #[arg(long, value_delimiter = ',')]
    pub problem: Option<Vec<usize>>,
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
}

pub fn check_problem(id: usize) -> Result<(), CliError> {
    if (1..=NUM_PROBLEMS).contains(&id) {
        Ok(())
    } else {
        Err(CliError::Usage(format!("unknown problem {id}, expected 1..={NUM_PROBLEMS}")))
    }
}

pub fn check_h0(h0: f64) -> Result<(), CliError> {
    if h0 > 0.0 && h0.is_finite() {
        Ok(())
    } else {
        Err(CliError::Usage(format!("--h0 must be positive, got {h0}")))
    }
}

/// Validated study configuration.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct StudyConfig {
    pub problems: Vec<usize>,
    pub h0: Vec<f64>,
    pub options: StudyOptions,
}

impl StudyConfig {
    pub fn new(problems: Vec<usize>, h0: Option<Vec<f64>>, solver: &SolverFlags) -> Result<Self, CliError> {
        if problems.is_empty() {
            return Err(CliError::Usage("at least one problem is required".into()));
        }
        for &p in &problems {
            check_problem(p)?;
        }
        let h0 = h0.unwrap_or_else(|| DEFAULT_H0.to_vec());
        for &h in &h0 {
            check_h0(h)?;
        }
        if h0.len() < 3 {
            return Err(CliError::Usage(format!("a study needs at least 3 mesh sizes, got {}", h0.len())));
        }
        if h0.windows(2).any(|w| w[1] >= w[0]) {
            return Err(CliError::Usage("--h0 values must be strictly decreasing".into()));
        }
        Ok(Self {
            problems,
            h0,
            options: solver.options()?,
        })
    }
}
