use serde::{Deserialize, Serialize};

use super::assembly::{
    assemble_divergence, assemble_load, assemble_stiffness, check_len, dirichlet_values, pressure_mean_vector,
};
use super::DofMap;
use crate::benchmarks::BenchmarkProblem;
use crate::mesh::Mesh;
use crate::quadrature::{rule_for_degree, select_degree, Integrand};
use crate::solver::{solve, CsrMatrix, SolveReport, SolverConfig, TripletBuilder};
use crate::Result;

/// Degree of the rule used for the stiffness and divergence blocks.
pub const BLOCK_QUADRATURE_DEGREE: usize = 4;

/// The Stokes saddle-point system before and after elimination of the
/// Dirichlet unknowns.
///
/// Unknowns of `matrix` are ordered as free velocities (ascending global
/// number), pressures, then the multiplier enforcing `∫ P_h = 0`:
///
/// ```text
/// [ A_ff  B_fᵀ  0 ] [u_f]   [F_f - A_fc g]
/// [ B_f   0     c ] [ p ] = [   -B_c g   ]
/// [ 0     cᵀ    0 ] [ λ ]   [     0      ]
/// ```
#[derive(Clone, Debug)]
pub struct AssembledSystem {
    pub dofs: DofMap,
    /// Full velocity-velocity block.
    pub a: CsrMatrix,
    /// Full pressure-velocity block.
    pub b: CsrMatrix,
    /// `c[v] = ∫ φ_v`.
    pub c: Vec<f64>,
    /// Full load vector.
    pub load: Vec<f64>,
    /// Prescribed values on constrained velocity unknowns, zero elsewhere.
    pub lifting: Vec<f64>,
    pub matrix: CsrMatrix,
    pub rhs: Vec<f64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DiscreteSolution {
    /// All velocity coefficients, nodal then bubble, in global numbering.
    pub velocity: Vec<f64>,
    pub pressure: Vec<f64>,
    /// Multiplier of the zero-mean constraint; absorbs any net boundary flux
    /// of the interpolated Dirichlet data.
    pub multiplier: f64,
    pub report: SolveReport,
}

impl AssembledSystem {
    pub fn num_free_velocity(&self) -> usize {
        self.dofs.free.len()
    }

    pub fn size(&self) -> usize {
        self.matrix.nrows()
    }

    /// The reduced saddle matrix without the mean-value row and column.
    pub fn unaugmented_matrix(&self) -> CsrMatrix {
        let keep: Vec<usize> = (0..self.size() - 1).collect();
        self.matrix.submatrix(&keep, &keep)
    }

    /// Splits a solution vector of `matrix` into full velocity, pressure and
    /// multiplier.
    pub fn expand(&self, x: &[f64]) -> Result<(Vec<f64>, Vec<f64>, f64)> {
        check_len("solution", x.len(), self.size())?;
        let nf = self.num_free_velocity();
        let np = self.dofs.num_pressure_dofs();
        let mut velocity = self.lifting.clone();
        for (k, &dof) in self.dofs.free.iter().enumerate() {
            velocity[dof] = x[k];
        }
        Ok((velocity, x[nf..nf + np].to_vec(), x[nf + np]))
    }

    /// Packs full velocity, pressure and multiplier into a vector of `matrix`.
    pub fn restrict(&self, velocity: &[f64], pressure: &[f64], multiplier: f64) -> Vec<f64> {
        let mut x: Vec<f64> = self.dofs.free.iter().map(|&d| velocity[d]).collect();
        x.extend_from_slice(pressure);
        x.push(multiplier);
        x
    }
}

/// Eliminates the constrained velocity unknowns and appends the mean-value
/// constraint. Returns the reduced matrix and right-hand side.
pub fn apply_dirichlet(
    dofs: &DofMap,
    a: &CsrMatrix,
    b: &CsrMatrix,
    c: &[f64],
    load: &[f64],
    g: &[f64],
) -> Result<(CsrMatrix, Vec<f64>)> {
    let nu = dofs.num_velocity_dofs();
    let np = dofs.num_pressure_dofs();
    check_len("velocity block rows", a.nrows(), nu)?;
    check_len("divergence block columns", b.ncols(), nu)?;
    check_len("divergence block rows", b.nrows(), np)?;
    check_len("mean vector", c.len(), np)?;
    check_len("load", load.len(), nu)?;
    check_len("boundary values", g.len(), nu)?;

    let nf = dofs.free.len();
    let n = nf + np + 1;
    let mut tb = TripletBuilder::with_capacity(n, n, a.nnz() + 2 * b.nnz() + 2 * np);
    let mut rhs = vec![0.0; n];
    for (fi, &i) in dofs.free.iter().enumerate() {
        rhs[fi] = load[i];
        let (cols, vals) = a.row(i);
        for (&j, &v) in cols.iter().zip(vals) {
            match dofs.free_index(j) {
                Some(fj) => tb.add(fi, fj, v),
                None => rhs[fi] -= v * g[j],
            }
        }
    }
    for q in 0..np {
        let row = nf + q;
        let (cols, vals) = b.row(q);
        for (&j, &v) in cols.iter().zip(vals) {
            match dofs.free_index(j) {
                Some(fj) => {
                    tb.add(row, fj, v);
                    tb.add(fj, row, v);
                }
                None => rhs[row] -= v * g[j],
            }
        }
        tb.add(row, n - 1, c[q]);
        tb.add(n - 1, row, c[q]);
    }
    Ok((tb.build(), rhs))
}

/// Assembles the reduced, augmented system for arbitrary data.
pub fn build_saddle_system_with(
    mesh: &Mesh,
    mu: f64,
    forcing: impl Fn(f64, f64) -> [f64; 2],
    boundary: impl Fn(f64, f64) -> [f64; 2],
    load_degree: usize,
) -> Result<AssembledSystem> {
    let dofs = DofMap::new(mesh);
    let block_rule = rule_for_degree(BLOCK_QUADRATURE_DEGREE)?;
    let a = assemble_stiffness(mesh, &dofs, mu, &block_rule)?;
    let b = assemble_divergence(mesh, &dofs, &block_rule)?;
    let c = pressure_mean_vector(mesh)?;
    let load = assemble_load(mesh, &dofs, forcing, &rule_for_degree(load_degree)?)?;
    let lifting = dirichlet_values(mesh, &dofs, boundary);
    let (matrix, rhs) = apply_dirichlet(&dofs, &a, &b, &c, &load, &lifting)?;
    Ok(AssembledSystem {
        dofs,
        a,
        b,
        c,
        load,
        lifting,
        matrix,
        rhs,
    })
}

/// Quadrature degree for the load of `problem`: exact for polynomial forcing
/// against the cubic velocity basis.
pub fn load_degree(problem: &BenchmarkProblem) -> Result<usize> {
    select_degree(match problem.polynomial {
        Some(d) => Integrand::Polynomial { degree: d.forcing + 3 },
        None => Integrand::NonPolynomial,
    })
}

pub fn build_saddle_system(mesh: &Mesh, problem: &BenchmarkProblem) -> Result<AssembledSystem> {
    build_saddle_system_with(
        mesh,
        problem.mu,
        |x, y| problem.forcing(x, y),
        |x, y| problem.boundary_velocity(x, y),
        load_degree(problem)?,
    )
}

pub fn solve_saddle(system: &AssembledSystem, config: &SolverConfig) -> Result<DiscreteSolution> {
    let (x, report) = solve(&system.matrix, &system.rhs, config)?;
    let (velocity, pressure, multiplier) = system.expand(&x)?;
    Ok(DiscreteSolution {
        velocity,
        pressure,
        multiplier,
        report,
    })
}
