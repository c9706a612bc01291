//! Drivers: mesh, assemble, solve and measure one problem on one or more
//! mesh levels.

use serde::{Deserialize, Serialize};

use crate::analysis::{compute_errors, ConvergenceStudy, ErrorReport};
use crate::benchmarks::BenchmarkProblem;
use crate::femspace::{build_saddle_system, solve_saddle, AssembledSystem, DiscreteSolution};
use crate::mesh::{generate_mesh_with, DistMeshParams, Mesh};
use crate::solver::SolverConfig;
use crate::Result;

pub const DEFAULT_H0: [f64; 4] = [0.2, 0.1, 0.05, 0.025];

/// Relative residual target: tight for the smooth enclosed flows, looser
/// for the two problems with inflow boundaries.
pub fn default_tolerance(problem: &BenchmarkProblem) -> f64 {
    if problem.id >= 6 {
        1e-8
    } else {
        1e-12
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct StudyOptions {
    /// Overrides the per-problem tolerance when set.
    pub tolerance: Option<f64>,
    pub max_iterations: Option<usize>,
    pub droptol: Option<f64>,
    pub seed: Option<u64>,
}

impl StudyOptions {
    pub fn solver_config(&self, problem: &BenchmarkProblem) -> SolverConfig {
        let mut c = SolverConfig {
            tolerance: self.tolerance.unwrap_or_else(|| default_tolerance(problem)),
            ..SolverConfig::default()
        };
        if let Some(m) = self.max_iterations {
            c.max_iterations = m;
        }
        if let Some(d) = self.droptol {
            c.droptol = d;
        }
        c
    }

    pub fn mesh_params(&self) -> DistMeshParams {
        DistMeshParams {
            seed: self.seed,
            ..DistMeshParams::default()
        }
    }
}

/// Everything produced by one solve.
#[derive(Clone, Debug)]
pub struct LevelResult {
    pub mesh: Mesh,
    pub system: AssembledSystem,
    pub solution: DiscreteSolution,
    pub errors: ErrorReport,
}

pub fn solve_on_mesh(problem: &BenchmarkProblem, mesh: Mesh, options: &StudyOptions) -> Result<LevelResult> {
    let system = build_saddle_system(&mesh, problem)?;
    let solution = solve_saddle(&system, &options.solver_config(problem))?;
    let errors = compute_errors(&mesh, &system.dofs, problem, &solution)?;
    Ok(LevelResult {
        mesh,
        system,
        solution,
        errors,
    })
}

pub fn solve_problem(problem: &BenchmarkProblem, h0: f64, options: &StudyOptions) -> Result<LevelResult> {
    let mesh = generate_mesh_with(problem.domain, h0, &options.mesh_params())?;
    solve_on_mesh(problem, mesh, options)
}

/// Solves on every level of `h0s` (coarse to fine) and fits rates.
pub fn run_study(problem: &BenchmarkProblem, h0s: &[f64], options: &StudyOptions) -> Result<ConvergenceStudy> {
    let reports = h0s
        .iter()
        .map(|&h0| solve_problem(problem, h0, options).map(|r| r.errors))
        .collect::<Result<Vec<_>>>()?;
    ConvergenceStudy::new(problem.id, reports)
}
