//! WebAssembly bindings for the static page in `www/`.
//!
//! Three operations are exposed: mesh a problem domain, solve one problem on
//! one mesh, and run a small convergence study. Arrays come back flat
//! (`x0, y0, x1, y1, ...`) so they map onto typed arrays without copies on the
//! JavaScript side.

use wasm_bindgen::prelude::*;

use ministokes::analysis::split_velocity;
use ministokes::benchmarks::problem;
use ministokes::mesh::{generate_mesh, Mesh, MeshQualityReport};
use ministokes::study::{run_study, solve_problem, StudyOptions};

#[derive(Debug)]
#[wasm_bindgen]
pub struct MeshView {
    vertices: Vec<f64>,
    triangles: Vec<u32>,
    quality: Vec<f64>,
    min_quality: f64,
    h: f64,
}

#[wasm_bindgen]
impl MeshView {
    #[wasm_bindgen(getter)]
    pub fn vertices(&self) -> Vec<f64> {
        self.vertices.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn triangles(&self) -> Vec<u32> {
        self.triangles.clone()
    }

    /// `min(q1, q2)` per triangle.
    #[wasm_bindgen(getter)]
    pub fn quality(&self) -> Vec<f64> {
        self.quality.clone()
    }

    #[wasm_bindgen(getter, js_name = minQuality)]
    pub fn min_quality(&self) -> f64 {
        self.min_quality
    }

    #[wasm_bindgen(getter)]
    pub fn h(&self) -> f64 {
        self.h
    }
}

impl MeshView {
    fn new(mesh: &Mesh) -> Result<Self, String> {
        let q = MeshQualityReport::new(mesh).map_err(|e| e.to_string())?;
        Ok(Self {
            vertices: mesh.vertices.iter().flat_map(|p| [p.x, p.y]).collect(),
            triangles: mesh.triangles.iter().flat_map(|t| t.0.map(|v| v as u32)).collect(),
            quality: q.q1.iter().zip(&q.q2).map(|(a, b)| a.min(*b)).collect(),
            min_quality: q.min_quality(),
            h: mesh.mesh_parameter_h(),
        })
    }
}

#[derive(Debug)]
#[wasm_bindgen]
pub struct SolutionView {
    mesh: MeshView,
    velocity: Vec<f64>,
    pressure: Vec<f64>,
    report: String,
}

#[wasm_bindgen]
impl SolutionView {
    #[wasm_bindgen(getter)]
    pub fn mesh(&self) -> MeshView {
        MeshView {
            vertices: self.mesh.vertices.clone(),
            triangles: self.mesh.triangles.clone(),
            quality: self.mesh.quality.clone(),
            min_quality: self.mesh.min_quality,
            h: self.mesh.h,
        }
    }

    /// Linear part of the velocity at the vertices, `ux0, uy0, ux1, ...`.
    #[wasm_bindgen(getter)]
    pub fn velocity(&self) -> Vec<f64> {
        self.velocity.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn pressure(&self) -> Vec<f64> {
        self.pressure.clone()
    }

    /// Error report as JSON.
    #[wasm_bindgen(getter)]
    pub fn report(&self) -> String {
        self.report.clone()
    }
}

pub fn mesh_domain(problem_id: usize, h0: f64) -> Result<MeshView, String> {
    let p = problem(problem_id).map_err(|e| e.to_string())?;
    let mesh = generate_mesh(p.domain, h0).map_err(|e| e.to_string())?;
    MeshView::new(&mesh)
}

pub fn solve_view(problem_id: usize, h0: f64) -> Result<SolutionView, String> {
    let p = problem(problem_id).map_err(|e| e.to_string())?;
    let level = solve_problem(&p, h0, &StudyOptions::default()).map_err(|e| e.to_string())?;
    let (linear, _) = split_velocity(&level.solution.velocity, &level.system.dofs);
    Ok(SolutionView {
        mesh: MeshView::new(&level.mesh)?,
        velocity: linear.values.iter().flatten().copied().collect(),
        pressure: level.solution.pressure.clone(),
        report: serde_json::to_string(&level.errors).map_err(|e| e.to_string())?,
    })
}

/// Convergence study as JSON: per-level reports and fitted rates.
pub fn study_json(problem_id: usize, h0s: &[f64]) -> Result<String, String> {
    let p = problem(problem_id).map_err(|e| e.to_string())?;
    let study = run_study(&p, h0s, &StudyOptions::default()).map_err(|e| e.to_string())?;
    serde_json::to_string(&study).map_err(|e| e.to_string())
}

#[wasm_bindgen(js_name = generateMesh)]
pub fn generate_mesh_js(problem_id: usize, h0: f64) -> Result<MeshView, JsError> {
    mesh_domain(problem_id, h0).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn solve(problem_id: usize, h0: f64) -> Result<SolutionView, JsError> {
    solve_view(problem_id, h0).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn rates(problem_id: usize, h0s: Vec<f64>) -> Result<String, JsError> {
    study_json(problem_id, &h0s).map_err(|e| JsError::new(&e))
}
