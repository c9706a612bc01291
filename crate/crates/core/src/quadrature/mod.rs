//! Symmetric Gaussian quadrature on triangles.
//!
//! Rules are stored in barycentric form with weights summing to one, so
//! `∫_T f ≈ |T| Σ w_i f(x(λ_i))` on any triangle. Some of the higher-degree
//! rules have points slightly outside the triangle or negative weights.

mod tables;

use crate::mesh::TriangleGeometry;
use crate::{Error, Result};

pub const MAX_DEGREE: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadraturePoint {
    pub bary: [f64; 3],
    pub weight: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureRule {
    pub degree: usize,
    pub points: Vec<QuadraturePoint>,
}

impl QuadratureRule {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// The tabulated rule of exactness degree `d`.
pub fn rule_for_degree(d: usize) -> Result<QuadratureRule> {
    if !(1..=MAX_DEGREE).contains(&d) {
        return Err(Error::UnsupportedDegree(d));
    }
    let points = tables::RULES[d - 1]
        .iter()
        .map(|&[l1, l2, l3, w]| QuadraturePoint {
            bary: [l1, l2, l3],
            weight: w,
        })
        .collect();
    Ok(QuadratureRule { degree: d, points })
}

/// `|T| Σ w_i f(x_i)`.
pub fn integrate(f: impl Fn(f64, f64) -> f64, tri: &TriangleGeometry, rule: &QuadratureRule) -> Result<f64> {
    let area = tri.checked_area()?;
    let sum: f64 = rule
        .points
        .iter()
        .map(|q| {
            let p = tri.map(q.bary);
            q.weight * f(p.x, p.y)
        })
        .sum();
    Ok(area * sum)
}

/// What is known about an integrand when choosing a rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Integrand {
    Polynomial { degree: usize },
    NonPolynomial,
}

/// Smallest adequate degree: the polynomial degree itself (at least 1), or
/// the highest available degree for anything else.
pub fn select_degree(integrand: Integrand) -> Result<usize> {
    match integrand {
        Integrand::Polynomial { degree } if degree > MAX_DEGREE => Err(Error::UnsupportedDegree(degree)),
        Integrand::Polynomial { degree } => Ok(degree.max(1)),
        Integrand::NonPolynomial => Ok(MAX_DEGREE),
    }
}
