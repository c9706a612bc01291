//! Error norms, nodal interpolation, the linear/bubble velocity split,
//! divergence norms and convergence-rate fitting.

use serde::{Deserialize, Serialize};

use crate::benchmarks::BenchmarkProblem;
use crate::femspace::{DiscreteSolution, DofMap, MiniBasisValues};
use crate::femspace::eval_basis;
use crate::mesh::{Mesh, Point2};
use crate::quadrature::{rule_for_degree, select_degree, Integrand, QuadratureRule, MAX_DEGREE};
use crate::solver::SolveMethod;
use crate::{Error, Result};

/// Continuous piecewise-linear field given by its vertex values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct P1Field<T> {
    pub values: Vec<T>,
}

pub type ScalarField = P1Field<f64>;
pub type VectorField = P1Field<[f64; 2]>;

impl<T: Copy> P1Field<T> {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl ScalarField {
    pub fn eval(&self, mesh: &Mesh, t: usize, bary: [f64; 3]) -> f64 {
        let v = mesh.triangles[t].0;
        (0..3).map(|i| bary[i] * self.values[v[i]]).sum()
    }
}

impl VectorField {
    pub fn eval(&self, mesh: &Mesh, t: usize, bary: [f64; 3]) -> [f64; 2] {
        let v = mesh.triangles[t].0;
        let mut out = [0.0; 2];
        for i in 0..3 {
            out[0] += bary[i] * self.values[v[i]][0];
            out[1] += bary[i] * self.values[v[i]][1];
        }
        out
    }
}

/// Vertex values of `f`.
pub fn nodal_interpolant<T>(mesh: &Mesh, f: impl Fn(f64, f64) -> T) -> P1Field<T> {
    P1Field {
        values: mesh.vertices.iter().map(|p| f(p.x, p.y)).collect(),
    }
}

/// Splits a MINI velocity into its piecewise-linear part (vertex unknowns)
/// and the per-triangle bubble coefficients.
pub fn split_velocity(velocity: &[f64], dofs: &DofMap) -> (VectorField, Vec<[f64; 2]>) {
    let nv = dofs.num_vertices;
    let linear = (0..nv).map(|v| [velocity[2 * v], velocity[2 * v + 1]]).collect();
    let bubbles = (0..dofs.num_triangles)
        .map(|t| [velocity[dofs.bubble_dof(t, 0)], velocity[dofs.bubble_dof(t, 1)]])
        .collect();
    (P1Field { values: linear }, bubbles)
}

/// Which parts of a MINI velocity to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VelocityPart {
    /// `u_h = u_hl + u_hb`.
    Full,
    /// `u_hl`, the vertex unknowns only.
    Linear,
    /// `u_hb`, the bubbles only.
    Bubble,
}

/// Value and gradient (`g[i][j] = ∂u_i/∂x_j`) of a MINI velocity.
pub fn eval_velocity(
    mesh: &Mesh,
    dofs: &DofMap,
    velocity: &[f64],
    part: VelocityPart,
    t: usize,
    basis: &MiniBasisValues,
) -> ([f64; 2], [[f64; 2]; 2]) {
    let mut u = [0.0; 2];
    let mut g = [[0.0; 2]; 2];
    if part != VelocityPart::Bubble {
        for (i, &v) in mesh.triangles[t].0.iter().enumerate() {
            for c in 0..2 {
                let coef = velocity[2 * v + c];
                u[c] += coef * basis.phi[i];
                g[c][0] += coef * basis.grad_phi[i][0];
                g[c][1] += coef * basis.grad_phi[i][1];
            }
        }
    }
    if part != VelocityPart::Linear {
        for c in 0..2 {
            let coef = velocity[dofs.bubble_dof(t, c)];
            u[c] += coef * basis.bubble;
            g[c][0] += coef * basis.grad_bubble[0];
            g[c][1] += coef * basis.grad_bubble[1];
        }
    }
    (u, g)
}

/// `sqrt(Σ_T ∫_T integrand)` for a nonnegative integrand.
fn root_integral(
    mesh: &Mesh,
    rule: &QuadratureRule,
    mut integrand: impl FnMut(usize, &MiniBasisValues, Point2) -> f64,
) -> Result<f64> {
    let mut total = 0.0;
    for t in 0..mesh.num_triangles() {
        let geo = mesh.geometry(t);
        let area = geo.checked_area()?;
        let mut local = 0.0;
        for q in &rule.points {
            let basis = eval_basis(&geo, q.bary)?;
            local += q.weight * integrand(t, &basis, geo.map(q.bary));
        }
        total += area * local;
    }
    Ok(total.max(0.0).sqrt())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum H1Mode {
    /// `(‖e‖² + |e|²)^½`.
    Norm,
    /// `|e| = ‖∇e‖`.
    SemiNorm,
}

/// `‖u − u_h‖_L²` for the selected part of a MINI velocity.
pub fn velocity_error_l2(
    mesh: &Mesh,
    dofs: &DofMap,
    velocity: &[f64],
    part: VelocityPart,
    exact: impl Fn(f64, f64) -> [f64; 2],
    rule: &QuadratureRule,
) -> Result<f64> {
    root_integral(mesh, rule, |t, b, x| {
        let (uh, _) = eval_velocity(mesh, dofs, velocity, part, t, b);
        let u = exact(x.x, x.y);
        (u[0] - uh[0]).powi(2) + (u[1] - uh[1]).powi(2)
    })
}

/// `‖u − u_h‖_H¹` or `|u − u_h|_H¹` for the selected part of a MINI velocity.
#[allow(clippy::too_many_arguments)]
pub fn velocity_error_h1(
    mesh: &Mesh,
    dofs: &DofMap,
    velocity: &[f64],
    part: VelocityPart,
    exact: impl Fn(f64, f64) -> [f64; 2],
    exact_gradient: impl Fn(f64, f64) -> [[f64; 2]; 2],
    rule: &QuadratureRule,
    mode: H1Mode,
) -> Result<f64> {
    root_integral(mesh, rule, |t, b, x| {
        let (uh, gh) = eval_velocity(mesh, dofs, velocity, part, t, b);
        let g = exact_gradient(x.x, x.y);
        let mut s = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                s += (g[i][j] - gh[i][j]).powi(2);
            }
        }
        if mode == H1Mode::Norm {
            let u = exact(x.x, x.y);
            s += (u[0] - uh[0]).powi(2) + (u[1] - uh[1]).powi(2);
        }
        s
    })
}

/// `‖P − P_h‖_L²` for a piecewise-linear pressure.
pub fn pressure_error_l2(
    mesh: &Mesh,
    pressure: &ScalarField,
    exact: impl Fn(f64, f64) -> f64,
    rule: &QuadratureRule,
) -> Result<f64> {
    root_integral(mesh, rule, |t, b, x| {
        (exact(x.x, x.y) - pressure.eval(mesh, t, b.phi)).powi(2)
    })
}

/// L² distance of two piecewise-linear vector fields, integrated exactly.
pub fn p1_difference_l2(mesh: &Mesh, a: &VectorField, b: &VectorField) -> Result<f64> {
    let rule = rule_for_degree(2)?;
    root_integral(mesh, &rule, |t, basis, _| {
        let (u, v) = (a.eval(mesh, t, basis.phi), b.eval(mesh, t, basis.phi));
        (u[0] - v[0]).powi(2) + (u[1] - v[1]).powi(2)
    })
}

/// H¹ distance of two piecewise-linear vector fields, integrated exactly.
pub fn p1_difference_h1(mesh: &Mesh, a: &VectorField, b: &VectorField, mode: H1Mode) -> Result<f64> {
    let rule = rule_for_degree(2)?;
    root_integral(mesh, &rule, |t, basis, _| {
        let verts = mesh.triangles[t].0;
        let mut s = 0.0;
        for c in 0..2 {
            let mut grad = [0.0; 2];
            for (i, &v) in verts.iter().enumerate() {
                let d = a.values[v][c] - b.values[v][c];
                grad[0] += d * basis.grad_phi[i][0];
                grad[1] += d * basis.grad_phi[i][1];
            }
            s += grad[0] * grad[0] + grad[1] * grad[1];
        }
        if mode == H1Mode::Norm {
            let (u, v) = (a.eval(mesh, t, basis.phi), b.eval(mesh, t, basis.phi));
            s += (u[0] - v[0]).powi(2) + (u[1] - v[1]).powi(2);
        }
        s
    })
}

/// `‖div u‖_L²` for the selected part of a MINI velocity.
pub fn div_l2(mesh: &Mesh, dofs: &DofMap, velocity: &[f64], part: VelocityPart, rule: &QuadratureRule) -> Result<f64> {
    root_integral(mesh, rule, |t, b, _| {
        let (_, g) = eval_velocity(mesh, dofs, velocity, part, t, b);
        (g[0][0] + g[1][1]).powi(2)
    })
}

/// Least-squares slope of `log(error)` against `log(h)`.
pub fn fit_rate(pairs: &[(f64, f64)]) -> Result<f64> {
    if pairs.len() < 3 {
        return Err(Error::FitDomain(format!("got {} pairs", pairs.len())));
    }
    if let Some(&(h, e)) = pairs.iter().find(|(h, e)| !(*h > 0.0 && *e > 0.0 && h.is_finite() && e.is_finite())) {
        return Err(Error::FitDomain(format!("non-positive or non-finite pair ({h}, {e})")));
    }
    let n = pairs.len() as f64;
    let xs: Vec<f64> = pairs.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = pairs.iter().map(|p| p.1.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::FitDomain("all h values are equal".into()));
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    Ok(sxy / sxx)
}

/// Errors and diagnostics of one solve.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub problem: usize,
    /// Longest edge of the mesh.
    pub h: f64,
    pub vertices: usize,
    pub triangles: usize,
    pub err_u_l2: f64,
    pub err_u_h1: f64,
    pub err_ul_l2: f64,
    pub err_ul_h1: f64,
    pub err_ihu_l2: f64,
    pub err_ihu_h1: f64,
    pub err_p_l2: f64,
    pub div_uh: f64,
    pub div_uhl: f64,
    pub err_u_h1_semi: f64,
    pub err_ul_h1_semi: f64,
    pub err_ihu_h1_semi: f64,
    pub iterations: usize,
    pub residual: f64,
    pub converged: bool,
    pub method: SolveMethod,
}

/// Rule degrees `(velocity, pressure)` for error integrals of `problem`.
pub fn error_degrees(problem: &BenchmarkProblem) -> Result<(usize, usize)> {
    match problem.polynomial {
        Some(d) => Ok((
            select_degree(Integrand::Polynomial {
                degree: 2 * d.velocity.max(3),
            })?,
            select_degree(Integrand::Polynomial {
                degree: 2 * d.pressure.max(1),
            })?,
        )),
        None => Ok((MAX_DEGREE, MAX_DEGREE)),
    }
}

/// All error measures of `solution` against the exact fields of `problem`.
pub fn compute_errors(
    mesh: &Mesh,
    dofs: &DofMap,
    problem: &BenchmarkProblem,
    solution: &DiscreteSolution,
) -> Result<ErrorReport> {
    let (du, dp) = error_degrees(problem)?;
    let ru = rule_for_degree(du)?;
    let rp = rule_for_degree(dp)?;
    let u = |x: f64, y: f64| problem.exact_velocity(x, y);
    let gu = |x: f64, y: f64| problem.exact_velocity_gradient(x, y);
    let vel = &solution.velocity;
    let (full, lin) = (VelocityPart::Full, VelocityPart::Linear);

    let (uhl, _) = split_velocity(vel, dofs);
    let ihu = nodal_interpolant(mesh, u);
    let ph = P1Field {
        values: solution.pressure.clone(),
    };
    let div_rule = rule_for_degree(4)?;
    Ok(ErrorReport {
        problem: problem.id,
        h: mesh.mesh_parameter_h(),
        vertices: mesh.num_vertices(),
        triangles: mesh.num_triangles(),
        err_u_l2: velocity_error_l2(mesh, dofs, vel, full, u, &ru)?,
        err_u_h1: velocity_error_h1(mesh, dofs, vel, full, u, gu, &ru, H1Mode::Norm)?,
        err_ul_l2: velocity_error_l2(mesh, dofs, vel, lin, u, &ru)?,
        err_ul_h1: velocity_error_h1(mesh, dofs, vel, lin, u, gu, &ru, H1Mode::Norm)?,
        err_ihu_l2: p1_difference_l2(mesh, &ihu, &uhl)?,
        err_ihu_h1: p1_difference_h1(mesh, &ihu, &uhl, H1Mode::Norm)?,
        err_p_l2: pressure_error_l2(mesh, &ph, |x, y| problem.exact_pressure(x, y), &rp)?,
        div_uh: div_l2(mesh, dofs, vel, full, &div_rule)?,
        div_uhl: div_l2(mesh, dofs, vel, lin, &div_rule)?,
        err_u_h1_semi: velocity_error_h1(mesh, dofs, vel, full, u, gu, &ru, H1Mode::SemiNorm)?,
        err_ul_h1_semi: velocity_error_h1(mesh, dofs, vel, lin, u, gu, &ru, H1Mode::SemiNorm)?,
        err_ihu_h1_semi: p1_difference_h1(mesh, &ihu, &uhl, H1Mode::SemiNorm)?,
        iterations: solution.report.iterations,
        residual: solution.report.relative_residual,
        converged: solution.report.converged,
        method: solution.report.method,
    })
}

/// Ratios comparing the full MINI velocity with its linear part.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorRatios {
    /// `‖u − u_h‖_H¹ / ‖u − u_hl‖_H¹`.
    pub h1: f64,
    /// `‖u − u_h‖_L² / ‖u − u_hl‖_L²`.
    pub l2: f64,
    /// `‖div u_h‖ / ‖div u_hl‖`.
    pub div: f64,
}

pub fn error_ratios(report: &ErrorReport) -> Result<ErrorRatios> {
    let ratio = |num: f64, den: f64, what: &str| {
        if den == 0.0 || !den.is_finite() || !num.is_finite() {
            Err(Error::DegenerateReport(format!("{what}: {num} / {den}")))
        } else {
            Ok(num / den)
        }
    };
    Ok(ErrorRatios {
        h1: ratio(report.err_u_h1, report.err_ul_h1, "H1 ratio")?,
        l2: ratio(report.err_u_l2, report.err_ul_l2, "L2 ratio")?,
        div: ratio(report.div_uh, report.div_uhl, "divergence ratio")?,
    })
}

/// Fitted rate of every error column.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rates {
    pub u_l2: f64,
    pub u_h1: f64,
    pub p_l2: f64,
    pub ihu_l2: f64,
    pub ihu_h1: f64,
    pub ul_l2: f64,
    pub ul_h1: f64,
    pub div_uh: f64,
    pub div_uhl: f64,
}

impl Rates {
    /// The seven columns `u−uh L2, u−uh H1, P−Ph L2, ihu−uhl L2, ihu−uhl H1,
    /// u−uhl L2, u−uhl H1`.
    pub fn table_columns(&self) -> [f64; 7] {
        [self.u_l2, self.u_h1, self.p_l2, self.ihu_l2, self.ihu_h1, self.ul_l2, self.ul_h1]
    }
}

pub const RATE_COLUMNS: [&str; 9] = [
    "u_l2", "u_h1", "p_l2", "ihu_l2", "ihu_h1", "ul_l2", "ul_h1", "div_uh", "div_uhl",
];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceStudy {
    pub problem: usize,
    pub reports: Vec<ErrorReport>,
    pub rates: Rates,
}

impl ConvergenceStudy {
    /// Fits all rates; levels must be ordered by strictly decreasing `h`.
    pub fn new(problem: usize, reports: Vec<ErrorReport>) -> Result<Self> {
        if reports.windows(2).any(|w| w[1].h >= w[0].h) {
            return Err(Error::FitDomain("mesh sizes are not strictly decreasing".into()));
        }
        let fit = |f: fn(&ErrorReport) -> f64| fit_rate(&reports.iter().map(|r| (r.h, f(r))).collect::<Vec<_>>());
        let rates = Rates {
            u_l2: fit(|r| r.err_u_l2)?,
            u_h1: fit(|r| r.err_u_h1)?,
            p_l2: fit(|r| r.err_p_l2)?,
            ihu_l2: fit(|r| r.err_ihu_l2)?,
            ihu_h1: fit(|r| r.err_ihu_h1)?,
            ul_l2: fit(|r| r.err_ul_l2)?,
            ul_h1: fit(|r| r.err_ul_h1)?,
            div_uh: fit(|r| r.div_uh)?,
            div_uhl: fit(|r| r.div_uhl)?,
        };
        Ok(Self {
            problem,
            reports,
            rates,
        })
    }
}
