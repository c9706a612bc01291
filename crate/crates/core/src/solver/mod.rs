//! Sparse linear algebra for the saddle-point systems.

mod direct;
mod gmres;
mod ilu;
mod sparse;

use serde::{Deserialize, Serialize};

pub use direct::{bandwidth, direct_solve, reverse_cuthill_mckee};
pub use gmres::{gmres, GmresOutcome};
pub use ilu::{ilu_factor, FillStats, Ilut};
pub use sparse::{relative_residual, CsrMatrix, TripletBuilder};

use crate::Result;

/// Approximate inverse applied as `z = M^{-1} r`.
pub trait Preconditioner {
    fn apply(&self, r: &[f64], z: &mut [f64]);
}

pub struct IdentityPreconditioner;

impl Preconditioner for IdentityPreconditioner {
    fn apply(&self, r: &[f64], z: &mut [f64]) {
        z.copy_from_slice(r);
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Target `‖b - A x‖ / ‖b‖`.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Krylov vectors kept before restarting; 0 keeps all of them.
    pub restart: usize,
    /// ILUT drop tolerance relative to the row norm.
    pub droptol: f64,
    /// Drop tolerances tried in turn after `droptol` fails.
    pub retry_droptols: Vec<f64>,
    /// Fall back to the direct solver when every ILU attempt fails.
    pub direct_fallback: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            tolerance: 1e-12,
            max_iterations: 2000,
            restart: 0,
            droptol: 1e-3,
            retry_droptols: vec![1e-4],
            direct_fallback: true,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum SolveMethod {
    #[default]
    GmresIlut,
    Direct,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub method: SolveMethod,
    pub iterations: usize,
    pub relative_residual: f64,
    pub converged: bool,
    pub droptol: f64,
    pub fill: FillStats,
    /// Relative residual after each GMRES iteration, starting from `x0`.
    #[serde(skip)]
    pub residual_history: Vec<f64>,
    /// Failed attempts before the returned one.
    pub attempts: Vec<String>,
}

/// GMRES preconditioned by ILUT, retrying smaller drop tolerances and
/// finally the direct solver. The returned report describes the attempt that
/// produced `x`.
pub fn solve(a: &CsrMatrix, b: &[f64], config: &SolverConfig) -> Result<(Vec<f64>, SolveReport)> {
    let mut attempts = Vec::new();
    let mut best: Option<(Vec<f64>, SolveReport)> = None;
    let droptols = std::iter::once(config.droptol).chain(config.retry_droptols.iter().copied());
    for droptol in droptols {
        let ilu = match ilu_factor(a, droptol, None) {
            Ok(f) => f,
            Err(e) => {
                attempts.push(format!("ilut({droptol:e}): {e}"));
                continue;
            }
        };
        let out = gmres(a, b, &ilu, config, None)?;
        let mut report = out.report;
        report.droptol = droptol;
        report.fill = ilu.stats;
        if report.converged {
            report.attempts = attempts;
            return Ok((out.x, report));
        }
        attempts.push(format!(
            "gmres+ilut({droptol:e}): {} iterations, residual {:e}",
            report.iterations, report.relative_residual
        ));
        if best.as_ref().is_none_or(|(_, r)| report.relative_residual < r.relative_residual) {
            best = Some((out.x, report));
        }
    }

    if config.direct_fallback {
        match direct_solve(a, b) {
            Ok(x) => {
                let res = relative_residual(a, &x, b);
                let report = SolveReport {
                    method: SolveMethod::Direct,
                    relative_residual: res,
                    converged: res <= config.tolerance,
                    attempts,
                    ..Default::default()
                };
                return Ok((x, report));
            }
            Err(e) => attempts.push(format!("direct: {e}")),
        }
    }

    match best {
        Some((x, mut report)) => {
            report.attempts = attempts;
            Ok((x, report))
        }
        None => Err(crate::Error::SolveFailed(attempts.join("; "))),
    }
}
