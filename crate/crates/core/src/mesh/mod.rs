//! Conformal triangulations of axis-aligned rectangles.

mod distmesh;
mod geometry;
pub mod io;
mod quality;
mod repair;
mod smooth;
mod validate;

use serde::{Deserialize, Serialize};

pub use distmesh::{generate_mesh, generate_mesh_with, DistMeshParams};
pub use geometry::TriangleGeometry;
pub use quality::{quality_measures, MeshQualityReport, HISTOGRAM_BINS};
pub use repair::fix_corner_triangles;
pub use validate::{validate_conformity, ValidationReport, Violation};

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dist(self, other: Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Vertex indices of one triangle, counterclockwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triangle(pub [usize; 3]);

impl Triangle {
    pub fn edges(&self) -> [(usize, usize); 3] {
        let [a, b, c] = self.0;
        [(a, b), (b, c), (c, a)]
    }
}

/// The closed rectangle `[ax, bx] x [ay, by]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub ax: f64,
    pub bx: f64,
    pub ay: f64,
    pub by: f64,
}

impl Rect {
    pub const UNIT_SQUARE: Rect = Rect::new(0.0, 1.0, 0.0, 1.0);

    pub const fn new(ax: f64, bx: f64, ay: f64, by: f64) -> Self {
        Self { ax, bx, ay, by }
    }

    pub fn width(&self) -> f64 {
        self.bx - self.ax
    }

    pub fn height(&self) -> f64 {
        self.by - self.ay
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    pub fn max_extent(&self) -> f64 {
        self.width().max(self.height())
    }

    /// Counterclockwise from the lower-left corner.
    pub fn corners(&self) -> [Point2; 4] {
        [
            Point2::new(self.ax, self.ay),
            Point2::new(self.bx, self.ay),
            Point2::new(self.bx, self.by),
            Point2::new(self.ax, self.by),
        ]
    }

    /// Signed distance: negative inside, zero on the boundary.
    pub fn signed_distance(&self, p: Point2) -> f64 {
        -(p.y - self.ay)
            .min(self.by - p.y)
            .min(p.x - self.ax)
            .min(self.bx - p.x)
    }

    /// Tolerance for "on the boundary" tests.
    pub fn boundary_tol(&self) -> f64 {
        1e-12 * self.max_extent()
    }

    pub fn on_boundary(&self, p: Point2) -> bool {
        self.signed_distance(p).abs() <= self.boundary_tol()
    }

    /// Both endpoints on the same side of the rectangle.
    pub fn segment_on_boundary(&self, a: Point2, b: Point2) -> bool {
        let tol = self.boundary_tol();
        let same = |u: f64, v: f64, w: f64| (u - w).abs() <= tol && (v - w).abs() <= tol;
        same(a.x, b.x, self.ax) || same(a.x, b.x, self.bx) || same(a.y, b.y, self.ay) || same(a.y, b.y, self.by)
    }
}

/// Edge `(a, b)` with `a < b` and the triangles that contain it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeInfo {
    pub a: usize,
    pub b: usize,
    pub triangles: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Mesh {
    pub vertices: Vec<Point2>,
    pub triangles: Vec<Triangle>,
    pub boundary_vertex: Vec<bool>,
    pub domain: Rect,
}

impl Mesh {
    /// Builds a mesh and flags every vertex lying on the rectangle boundary.
    pub fn new(vertices: Vec<Point2>, triangles: Vec<Triangle>, domain: Rect) -> Self {
        let boundary_vertex = vertices.iter().map(|&p| domain.on_boundary(p)).collect();
        Self {
            vertices,
            triangles,
            boundary_vertex,
            domain,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_triangles(&self) -> usize {
        self.triangles.len()
    }

    pub fn geometry(&self, t: usize) -> TriangleGeometry {
        let [a, b, c] = self.triangles[t].0;
        TriangleGeometry::new([self.vertices[a], self.vertices[b], self.vertices[c]])
    }

    pub fn total_area(&self) -> f64 {
        (0..self.num_triangles()).map(|t| self.geometry(t).signed_area()).sum()
    }

    /// All edges sorted by `(a, b)`.
    pub fn edges(&self) -> Vec<EdgeInfo> {
        let mut half: Vec<(usize, usize, usize)> = self
            .triangles
            .iter()
            .enumerate()
            .flat_map(|(t, tri)| tri.edges().map(|(a, b)| (a.min(b), a.max(b), t)))
            .collect();
        half.sort_unstable();
        let mut out: Vec<EdgeInfo> = Vec::with_capacity(half.len() / 2 + 1);
        for (a, b, t) in half {
            match out.last_mut() {
                Some(e) if e.a == a && e.b == b => e.triangles.push(t),
                _ => out.push(EdgeInfo {
                    a,
                    b,
                    triangles: vec![t],
                }),
            }
        }
        out
    }

    /// Number of edges of each triangle that have no neighbour across them.
    pub fn boundary_edge_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.num_triangles()];
        for e in self.edges() {
            if e.triangles.len() == 1 {
                counts[e.triangles[0]] += 1;
            }
        }
        counts
    }

    /// Triangles with two or more boundary edges, in index order.
    pub fn corner_triangles(&self) -> Vec<usize> {
        self.boundary_edge_counts()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c >= 2)
            .map(|(t, _)| t)
            .collect()
    }

    /// Longest edge over all triangles.
    pub fn mesh_parameter_h(&self) -> f64 {
        self.triangles
            .iter()
            .flat_map(|tri| tri.edges())
            .map(|(a, b)| self.vertices[a].dist(self.vertices[b]))
            .fold(0.0, f64::max)
    }

    pub fn num_boundary_vertices(&self) -> usize {
        self.boundary_vertex.iter().filter(|&&b| b).count()
    }
}
