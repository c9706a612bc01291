//! Consistency checks of the manufactured solutions that do not involve any
//! discretization: incompressibility, zero-mean pressure, momentum balance
//! and boundary data.

use serde::{Deserialize, Serialize};

use super::BenchmarkProblem;
use crate::mesh::{Point2, TriangleGeometry};
use crate::quadrature::{integrate, rule_for_degree, MAX_DEGREE};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ManufacturedTolerances {
    pub divergence: f64,
    pub pressure_mean: f64,
    pub momentum: f64,
    pub boundary: f64,
    pub gradient: f64,
}

impl Default for ManufacturedTolerances {
    fn default() -> Self {
        Self {
            divergence: 1e-10,
            pressure_mean: 1e-8,
            momentum: 1e-8,
            boundary: 1e-12,
            gradient: 1e-7,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ManufacturedReport {
    pub problem: usize,
    pub samples: usize,
    /// Largest `|div u|` from the analytic gradient.
    pub max_divergence: f64,
    /// Largest component of `-μΔu + ∇P - ρf`, derivatives by finite differences.
    pub max_momentum_residual: f64,
    pub pressure_mean: f64,
    pub max_boundary_mismatch: f64,
    /// Largest deviation of the analytic gradient from finite differences.
    pub max_gradient_mismatch: f64,
}

impl ManufacturedReport {
    pub fn passes(&self, tol: &ManufacturedTolerances) -> bool {
        self.max_divergence <= tol.divergence
            && self.pressure_mean.abs() <= tol.pressure_mean
            && self.max_momentum_residual <= tol.momentum
            && self.max_boundary_mismatch <= tol.boundary
            && self.max_gradient_mismatch <= tol.gradient
    }
}

fn radical_inverse(mut i: usize, base: usize) -> f64 {
    let mut f = 1.0;
    let mut r = 0.0;
    while i > 0 {
        f /= base as f64;
        r += f * (i % base) as f64;
        i /= base;
    }
    r
}

/// Two-level Richardson extrapolation of a second-order difference formula.
fn richardson(d: impl Fn(f64) -> f64, h: f64) -> f64 {
    let (d0, d1, d2) = (d(h), d(h / 2.0), d(h / 4.0));
    let r0 = (4.0 * d1 - d0) / 3.0;
    let r1 = (4.0 * d2 - d1) / 3.0;
    (16.0 * r1 - r0) / 15.0
}

fn first_derivative(f: impl Fn(f64) -> f64, t: f64, h: f64) -> f64 {
    richardson(|h| (f(t + h) - f(t - h)) / (2.0 * h), h)
}

fn second_derivative(f: impl Fn(f64) -> f64, t: f64, h: f64) -> f64 {
    richardson(|h| (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h), h)
}

/// `∫_Ω P` by the highest-degree rule on a uniform triangulation.
pub(crate) fn pressure_integral(p: &BenchmarkProblem) -> f64 {
    let rule = rule_for_degree(MAX_DEGREE).expect("tabulated");
    let d = p.domain;
    let n = 16;
    let (hx, hy) = (d.width() / n as f64, d.height() / n as f64);
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            let x0 = d.ax + i as f64 * hx;
            let y0 = d.ay + j as f64 * hy;
            let a = Point2::new(x0, y0);
            let b = Point2::new(x0 + hx, y0);
            let c = Point2::new(x0 + hx, y0 + hy);
            let e = Point2::new(x0, y0 + hy);
            for t in [TriangleGeometry::new([a, b, c]), TriangleGeometry::new([a, c, e])] {
                sum += integrate(|x, y| p.exact_pressure(x, y), &t, &rule).expect("positive area");
            }
        }
    }
    sum
}

/// Checks the exact fields of `p` at `n_samples` Halton points in the
/// interior and `n_samples` points spread over the four edges.
pub fn verify_manufactured(p: &BenchmarkProblem, n_samples: usize) -> ManufacturedReport {
    let d = p.domain;
    let h = 1e-2 * d.max_extent();
    let mut max_div = 0.0f64;
    let mut max_mom = 0.0f64;
    let mut max_grad = 0.0f64;
    for k in 1..=n_samples {
        let x = d.ax + d.width() * radical_inverse(k, 2);
        let y = d.ay + d.height() * radical_inverse(k, 3);
        let g = p.exact_velocity_gradient(x, y);
        max_div = max_div.max((g[0][0] + g[1][1]).abs());

        let f = p.forcing(x, y);
        let dpdx = first_derivative(|t| p.exact_pressure(t, y), x, h);
        let dpdy = first_derivative(|t| p.exact_pressure(x, t), y, h);
        let dp = [dpdx, dpdy];
        for c in 0..2 {
            let uxx = second_derivative(|t| p.exact_velocity(t, y)[c], x, h);
            let uyy = second_derivative(|t| p.exact_velocity(x, t)[c], y, h);
            max_mom = max_mom.max((-p.mu * (uxx + uyy) + dp[c] - f[c]).abs());

            let ux = first_derivative(|t| p.exact_velocity(t, y)[c], x, h);
            let uy = first_derivative(|t| p.exact_velocity(x, t)[c], y, h);
            max_grad = max_grad.max((ux - g[c][0]).abs()).max((uy - g[c][1]).abs());
        }
    }

    let mut max_bnd = 0.0f64;
    let per_edge = n_samples.div_ceil(4).max(1);
    let corners = d.corners();
    for e in 0..4 {
        let (a, b) = (corners[e], corners[(e + 1) % 4]);
        for k in 0..=per_edge {
            let s = k as f64 / per_edge as f64;
            let (x, y) = (a.x + s * (b.x - a.x), a.y + s * (b.y - a.y));
            let u = p.exact_velocity(x, y);
            let g = p.boundary_velocity(x, y);
            max_bnd = max_bnd.max((u[0] - g[0]).abs()).max((u[1] - g[1]).abs());
        }
    }

    ManufacturedReport {
        problem: p.id,
        samples: n_samples,
        max_divergence: max_div,
        max_momentum_residual: max_mom,
        pressure_mean: pressure_integral(p) / d.area(),
        max_boundary_mismatch: max_bnd,
        max_gradient_mismatch: max_grad,
    }
}
