//! The seven manufactured Stokes problems.
//!
//! Every problem carries its exact velocity, velocity gradient and pressure,
//! the body force `ρf` (with `ρ = 1`), the Dirichlet data on the boundary and,
//! for the polynomial cases, the degrees used to pick exact quadrature.

mod jet;
mod verify;

use std::f64::consts::{E, PI};

use serde::{Deserialize, Serialize};

use crate::mesh::Rect;
use crate::quadrature::Integrand;
use crate::{Error, Result};

pub use jet::Jet;
pub use verify::{verify_manufactured, ManufacturedReport, ManufacturedTolerances};

pub const NUM_PROBLEMS: usize = 7;

/// Mean of `cos(xy)` over the unit square.
pub const COS_XY_MEAN: f64 = 0.9460830703671845;

/// Total polynomial degrees of the exact fields and the forcing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialDegrees {
    pub velocity: usize,
    pub pressure: usize,
    pub forcing: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkProblem {
    pub id: usize,
    pub name: &'static str,
    pub domain: Rect,
    pub mu: f64,
    pub polynomial: Option<PolynomialDegrees>,
}

pub fn problem(id: usize) -> Result<BenchmarkProblem> {
    let unit = Rect::UNIT_SQUARE;
    let poly = |velocity, pressure, forcing| {
        Some(PolynomialDegrees {
            velocity,
            pressure,
            forcing,
        })
    };
    let (name, domain, polynomial) = match id {
        1 => ("enclosed clockwise vortex (polynomial)", unit, poly(7, 3, 5)),
        2 => ("enclosed counterclockwise vortex (polynomial)", unit, poly(7, 1, 5)),
        3 => ("enclosed vortex (trigonometric)", unit, None),
        4 => ("asymmetric enclosed vortex (exponential)", unit, None),
        5 => ("lid-driven cavity (polynomial)", unit, poly(7, 6, 5)),
        6 => ("corner flow", unit, None),
        7 => ("colliding flow", Rect::new(-1.0, 1.0, -1.0, 1.0), poly(5, 4, 0)),
        _ => return Err(Error::UnknownProblem(id)),
    };
    Ok(BenchmarkProblem {
        id,
        name,
        domain,
        mu: 1.0,
        polynomial,
    })
}

pub fn all_problems() -> Vec<BenchmarkProblem> {
    (1..=NUM_PROBLEMS).map(|id| problem(id).expect("valid id")).collect()
}

// x^2 (1-x)^2 and its first two derivatives
fn q(x: f64) -> f64 {
    x * x * (1.0 - x) * (1.0 - x)
}

fn dq(x: f64) -> f64 {
    2.0 * x * (1.0 - x) * (1.0 - 2.0 * x)
}

fn d2q(x: f64) -> f64 {
    2.0 * (1.0 - 6.0 * x + 6.0 * x * x)
}

// (x^2 - x)(x^2 + 3x - 2)
fn g4(x: f64) -> f64 {
    (x * x - x) * (x * x + 3.0 * x - 2.0)
}

// the x-polynomial inside the exponential bracket of the problem-4 pressure
fn r4(x: f64, y: f64) -> f64 {
    let s = y * y - y;
    let x2 = x * x;
    x2 * x2 * (s + 12.0) + 2.0 * x2 * x * (s - 36.0) + x2 * (-5.0 * s + 228.0) + 2.0 * x * (s - 228.0) + 456.0
}

fn pressure4_jet(x: Jet, y: Jet) -> Jet {
    let s = y * y - y;
    let x2 = x * x;
    let r = x2 * x2 * (s + 12.0) + 2.0 * x2 * x * (s - 36.0) + x2 * (-5.0 * s + 228.0) + 2.0 * x * (s - 228.0) + 456.0;
    s * (x.exp() * r - 456.0) + (156.0 * E - 424.0)
}

fn velocity4_jet(x: Jet, y: Jet) -> [Jet; 2] {
    let ex = x.exp();
    let s = y * y - y;
    let ux = 2.0 * ex * (x - 1.0).powi(2) * x.powi(2) * s * (2.0 * y - 1.0);
    let uy = -(ex * (x * x - x) * (x * x + 3.0 * x - 2.0) * (y - 1.0).powi(2) * y.powi(2));
    [ux, uy]
}

impl BenchmarkProblem {
    pub fn is_polynomial(&self) -> bool {
        self.polynomial.is_some()
    }

    pub fn velocity_integrand(&self) -> Integrand {
        match self.polynomial {
            Some(d) => Integrand::Polynomial { degree: d.velocity },
            None => Integrand::NonPolynomial,
        }
    }

    pub fn forcing_integrand(&self) -> Integrand {
        match self.polynomial {
            Some(d) => Integrand::Polynomial { degree: d.forcing },
            None => Integrand::NonPolynomial,
        }
    }

    pub fn exact_velocity(&self, x: f64, y: f64) -> [f64; 2] {
        match self.id {
            1 => [-q(x) * dq(y), q(y) * dq(x)],
            2 => [q(x) * dq(y), -dq(x) * q(y)],
            3 => {
                let (sx, cx) = (2.0 * PI * x).sin_cos();
                let (sy, cy) = (2.0 * PI * y).sin_cos();
                [sy * (1.0 - cx), sx * (cy - 1.0)]
            }
            4 => {
                let s = y * y - y;
                [
                    2.0 * x.exp() * q(x) * s * (2.0 * y - 1.0),
                    -x.exp() * g4(x) * s * s,
                ]
            }
            5 => [
                q(x) * (2.0 * y.powi(3) - y),
                -(2.0 * x.powi(3) - 3.0 * x * x + x) * (y.powi(4) - y * y),
            ],
            6 => {
                let s = (x * y).sin();
                [-x * s, y * s]
            }
            7 => [
                20.0 * x * y.powi(4) - 4.0 * x.powi(5),
                20.0 * x.powi(4) * y - 4.0 * y.powi(5),
            ],
            _ => unreachable!(),
        }
    }

    /// `g[i][j] = ∂u_i/∂x_j`.
    pub fn exact_velocity_gradient(&self, x: f64, y: f64) -> [[f64; 2]; 2] {
        match self.id {
            1 => [
                [-dq(x) * dq(y), -q(x) * d2q(y)],
                [q(y) * d2q(x), dq(y) * dq(x)],
            ],
            2 => [
                [dq(x) * dq(y), q(x) * d2q(y)],
                [-d2q(x) * q(y), -dq(x) * dq(y)],
            ],
            3 => {
                let w = 2.0 * PI;
                let (sx, cx) = (w * x).sin_cos();
                let (sy, cy) = (w * y).sin_cos();
                [
                    [w * sy * sx, w * cy * (1.0 - cx)],
                    [w * cx * (cy - 1.0), -w * sx * sy],
                ]
            }
            4 => {
                let ex = x.exp();
                let s = y * y - y;
                let t = 2.0 * y - 1.0;
                let x2 = x * x;
                // d/dx [e^x g4] = e^x (g4 + g4')
                let g_plus = x2 * x2 + 6.0 * x2 * x + x2 - 8.0 * x + 2.0;
                [
                    [2.0 * ex * g4(x) * s * t, 2.0 * ex * q(x) * (6.0 * y * y - 6.0 * y + 1.0)],
                    [-ex * g_plus * s * s, -2.0 * ex * g4(x) * s * t],
                ]
            }
            5 => {
                let c = 2.0 * x.powi(3) - 3.0 * x * x + x;
                let w = y.powi(4) - y * y;
                [
                    [dq(x) * (2.0 * y.powi(3) - y), q(x) * (6.0 * y * y - 1.0)],
                    [-(6.0 * x * x - 6.0 * x + 1.0) * w, -c * (4.0 * y.powi(3) - 2.0 * y)],
                ]
            }
            6 => {
                let (s, c) = (x * y).sin_cos();
                [
                    [-s - x * y * c, -x * x * c],
                    [y * y * c, s + x * y * c],
                ]
            }
            7 => [
                [20.0 * y.powi(4) - 20.0 * x.powi(4), 80.0 * x * y.powi(3)],
                [80.0 * x.powi(3) * y, 20.0 * x.powi(4) - 20.0 * y.powi(4)],
            ],
            _ => unreachable!(),
        }
    }

    pub fn exact_pressure(&self, x: f64, y: f64) -> f64 {
        let mu = self.mu;
        match self.id {
            1 => x * (1.0 - x) * (1.0 - y) - 1.0 / 12.0,
            2 => (x + y - 1.0) / 24.0,
            3 => 2.0 * PI * ((2.0 * PI * y).cos() - (2.0 * PI * x).cos()),
            4 => -424.0 + 156.0 * E + (y * y - y) * (-456.0 + x.exp() * r4(x, y)),
            5 => {
                mu * ((4.0 * x.powi(3) - 6.0 * x * x + 2.0 * x) * (2.0 * y.powi(3) - y)
                    + 0.4 * (6.0 * x.powi(5) - 15.0 * x.powi(4) + 10.0 * x.powi(3)) * y
                    - 0.1)
            }
            6 => (x * y).cos() - COS_XY_MEAN,
            7 => mu * (120.0 * x * x * y * y - 20.0 * x.powi(4) - 20.0 * y.powi(4) - 32.0 / 6.0),
            _ => unreachable!(),
        }
    }

    /// Body force `ρf`. Problem 4 uses the forcing obtained by differentiating
    /// its exact fields; all others use the closed forms.
    pub fn forcing(&self, x: f64, y: f64) -> [f64; 2] {
        match self.id {
            4 => self.derived_forcing(x, y),
            _ => self.printed_forcing(x, y),
        }
    }

    /// Closed-form body force as hand-expanded for each problem.
    pub fn printed_forcing(&self, x: f64, y: f64) -> [f64; 2] {
        let mu = self.mu;
        match self.id {
            1 => [
                -mu * (4.0 * y * (1.0 - y) * (2.0 * y - 1.0) * ((1.0 - 2.0 * x).powi(2) - 2.0 * x * (1.0 - x))
                    + 12.0 * x * x * (1.0 - x).powi(2) * (1.0 - 2.0 * y))
                    + (1.0 - 2.0 * x) * (1.0 - y),
                -mu * (4.0 * x * (1.0 - x) * (1.0 - 2.0 * x) * ((1.0 - 2.0 * y).powi(2) - 2.0 * y * (1.0 - y))
                    + 12.0 * y * y * (1.0 - y).powi(2) * (2.0 * x - 1.0))
                    - x * (1.0 - x),
            ],
            2 => [
                -mu * ((2.0 - 12.0 * x + 12.0 * x * x) * (2.0 * y - 6.0 * y * y + 4.0 * y.powi(3))
                    + (x * x - 2.0 * x.powi(3) + x.powi(4)) * (-12.0 + 24.0 * y))
                    + 1.0 / 24.0,
                mu * ((2.0 - 12.0 * y + 12.0 * y * y) * (2.0 * x - 6.0 * x * x + 4.0 * x.powi(3))
                    + (y * y - 2.0 * y.powi(3) + y.powi(4)) * (-12.0 + 24.0 * x))
                    + 1.0 / 24.0,
            ],
            3 => {
                let k = 4.0 * PI * PI;
                let (sx, cx) = (2.0 * PI * x).sin_cos();
                let (sy, cy) = (2.0 * PI * y).sin_cos();
                [
                    -k * mu * sy * (2.0 * cx - 1.0) + k * sx,
                    k * mu * sx * (2.0 * cy - 1.0) - k * sy,
                ]
            }
            4 => {
                let ex = x.exp();
                let s = y * y - y;
                let x2 = x * x;
                let fx = -mu
                    * (2.0 * ex * ((x2 + x - 1.0) * (x2 + 3.0 * x - 2.0) + (x2 - x) * (2.0 * x + 3.0)) * s * (2.0 * y - 1.0)
                        + 2.0 * ex * (x - 1.0).powi(2) * x2 * (12.0 * y - 6.0))
                    + s * ex
                        * (x2 * x2 * (s + 12.0) + 6.0 * x2 * x * (s - 4.0) + x2 * (s + 12.0) + 8.0 * x * (y - y * y)
                            + 2.0 * y * y
                            - 2.0 * y);
                let fy = -mu
                    * (-ex * (x2 * x2 + 10.0 * x2 * x + 19.0 * x2 - 6.0 * x - 6.0) * (y - 1.0).powi(2) * y * y
                        - 2.0 * ex * (x2 - x) * (x2 + 3.0 * x - 2.0) * (6.0 * y * y - 6.0 * y + 1.0))
                    + (2.0 * y - 1.0) * (-456.0 + ex * r4(x, y))
                    + ex * (x2 * x2 + 2.0 * x2 * x - 5.0 * x2 + 2.0 * x) * (2.0 * y - 1.0) * s;
                [fx, fy]
            }
            5 => [
                0.0,
                mu * ((12.0 * x - 6.0) * (y.powi(4) - y * y)
                    + (8.0 * x.powi(3) - 12.0 * x * x + 4.0 * x) * (6.0 * y * y - 1.0)
                    + 0.4 * (6.0 * x.powi(5) - 15.0 * x.powi(4) + 10.0 * x.powi(3))),
            ],
            6 => {
                let (s, c) = (x * y).sin_cos();
                [
                    -mu * (s * x * (x * x + y * y) - 2.0 * c * y) - s * y,
                    mu * (s * y * (x * x + y * y) - 2.0 * c * x) - s * x,
                ]
            }
            7 => [0.0, 0.0],
            _ => unreachable!(),
        }
    }

    /// `-μΔu + ∇P` evaluated by forward-mode differentiation. Available for
    /// problem 4, whose closed-form forcing is long enough to warrant an
    /// independent derivation.
    pub fn derived_forcing(&self, x: f64, y: f64) -> [f64; 2] {
        assert_eq!(self.id, 4, "derived forcing is only provided for problem 4");
        let (jx, jy) = (Jet::var_x(x), Jet::var_y(y));
        let [ux, uy] = velocity4_jet(jx, jy);
        let p = pressure4_jet(jx, jy);
        [
            -self.mu * ux.laplacian() + p.dx,
            -self.mu * uy.laplacian() + p.dy,
        ]
    }

    /// Dirichlet data as stated edge by edge; evaluated at boundary points.
    pub fn boundary_velocity(&self, x: f64, y: f64) -> [f64; 2] {
        let d = self.domain;
        let tol = 1e-9 * d.max_extent();
        let top = (y - d.by).abs() <= tol;
        let bottom = (y - d.ay).abs() <= tol;
        let right = (x - d.bx).abs() <= tol;
        let left = (x - d.ax).abs() <= tol;
        match self.id {
            1..=4 => [0.0, 0.0],
            5 if top => [x.powi(4) - 2.0 * x.powi(3) + x * x, 0.0],
            5 => [0.0, 0.0],
            6 if top => [-x * x.sin(), x.sin()],
            6 if right => [-y.sin(), y * y.sin()],
            6 => [0.0, 0.0],
            7 if top => [20.0 * x - 4.0 * x.powi(5), 20.0 * x.powi(4) - 4.0],
            7 if right => [20.0 * y.powi(4) - 4.0, 20.0 * y - 4.0 * y.powi(5)],
            7 if bottom => [20.0 * x - 4.0 * x.powi(5), -20.0 * x.powi(4) + 4.0],
            7 if left => [-20.0 * y.powi(4) + 4.0, 20.0 * y - 4.0 * y.powi(5)],
            7 => self.exact_velocity(x, y),
            _ => unreachable!(),
        }
    }
}
