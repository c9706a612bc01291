use serde::{Deserialize, Serialize};

use super::{Mesh, TriangleGeometry};
use crate::Result;

/// Shape measures `(q1, q2)` of one triangle; both are 1 for an equilateral
/// triangle and tend to 0 as the triangle degenerates.
///
/// `q1 = (b+c-a)(c+a-b)(a+b-c)/(abc)` is the inradius/circumradius ratio
/// scaled by two; `q2 = 4 sqrt(3) A / (a^2 + b^2 + c^2)`.
pub fn quality_measures(tri: &TriangleGeometry) -> Result<(f64, f64)> {
    let area = tri.checked_area()?;
    let [a, b, c] = tri.side_lengths();
    let q1 = (b + c - a) * (c + a - b) * (a + b - c) / (a * b * c);
    let q2 = 4.0 * 3f64.sqrt() * area / (a * a + b * b + c * c);
    Ok((q1.clamp(0.0, 1.0), q2.clamp(0.0, 1.0)))
}

pub const HISTOGRAM_BINS: usize = 20;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeshQualityReport {
    pub q1: Vec<f64>,
    pub q2: Vec<f64>,
    pub min_q1: f64,
    pub min_q2: f64,
    pub mean_q1: f64,
    pub mean_q2: f64,
    /// Counts over `HISTOGRAM_BINS` equal bins of `[0, 1]`.
    pub hist_q1: Vec<usize>,
    pub hist_q2: Vec<usize>,
}

impl MeshQualityReport {
    pub fn new(mesh: &Mesh) -> Result<Self> {
        let mut q1 = Vec::with_capacity(mesh.num_triangles());
        let mut q2 = Vec::with_capacity(mesh.num_triangles());
        for t in 0..mesh.num_triangles() {
            let (a, b) = quality_measures(&mesh.geometry(t))?;
            q1.push(a);
            q2.push(b);
        }
        let min = |v: &[f64]| v.iter().copied().fold(f64::INFINITY, f64::min);
        let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len().max(1) as f64;
        let hist = |v: &[f64]| {
            let mut h = vec![0; HISTOGRAM_BINS];
            for &q in v {
                h[((q * HISTOGRAM_BINS as f64) as usize).min(HISTOGRAM_BINS - 1)] += 1;
            }
            h
        };
        Ok(Self {
            min_q1: min(&q1),
            min_q2: min(&q2),
            mean_q1: mean(&q1),
            mean_q2: mean(&q2),
            hist_q1: hist(&q1),
            hist_q2: hist(&q2),
            q1,
            q2,
        })
    }

    pub fn min_quality(&self) -> f64 {
        self.min_q1.min(self.min_q2)
    }
}
