use std::fmt;

use super::{Mesh, TriangleGeometry};

#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    NonFiniteVertex { vertex: usize },
    BadIndex { triangle: usize },
    RepeatedVertex { triangle: usize },
    Orientation { triangle: usize, signed_area: f64 },
    /// Edge shared by more than two triangles.
    OverloadedEdge { a: usize, b: usize, count: usize },
    /// Edge with one incident triangle that is not on the rectangle boundary.
    OpenInteriorEdge { a: usize, b: usize },
    /// Vertex lying inside an edge it does not belong to.
    HangingNode { vertex: usize, a: usize, b: usize },
    BoundaryFlag { vertex: usize, flagged: bool },
    AreaMismatch { covered: f64, expected: f64 },
    CornerTriangle { triangle: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonFiniteVertex { vertex } => write!(f, "vertex {vertex} has non-finite coordinates"),
            Violation::BadIndex { triangle } => write!(f, "triangle {triangle} references a missing vertex"),
            Violation::RepeatedVertex { triangle } => write!(f, "triangle {triangle} repeats a vertex"),
            Violation::Orientation { triangle, signed_area } => {
                write!(f, "triangle {triangle} is not counterclockwise (signed area {signed_area:e})")
            }
            Violation::OverloadedEdge { a, b, count } => write!(f, "edge ({a}, {b}) is shared by {count} triangles"),
            Violation::OpenInteriorEdge { a, b } => write!(f, "edge ({a}, {b}) has one triangle but is not on the boundary"),
            Violation::HangingNode { vertex, a, b } => write!(f, "vertex {vertex} hangs on edge ({a}, {b})"),
            Violation::BoundaryFlag { vertex, flagged } => {
                write!(f, "vertex {vertex} boundary flag is {flagged} but its position disagrees")
            }
            Violation::AreaMismatch { covered, expected } => {
                write!(f, "triangles cover area {covered}, domain area is {expected}")
            }
            Violation::CornerTriangle { triangle } => write!(f, "triangle {triangle} has two boundary edges"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn is_valid_ignoring_corners(&self) -> bool {
        self.violations
            .iter()
            .all(|v| matches!(v, Violation::CornerTriangle { .. }))
    }
}

/// Checks every structural invariant of [`Mesh`] and lists what fails.
pub fn validate_conformity(mesh: &Mesh) -> ValidationReport {
    let mut out = Vec::new();
    let nv = mesh.num_vertices();
    let domain = mesh.domain;

    for (i, p) in mesh.vertices.iter().enumerate() {
        if !(p.x.is_finite() && p.y.is_finite()) {
            out.push(Violation::NonFiniteVertex { vertex: i });
        }
    }
    for (t, tri) in mesh.triangles.iter().enumerate() {
        let [a, b, c] = tri.0;
        if a >= nv || b >= nv || c >= nv {
            out.push(Violation::BadIndex { triangle: t });
        }
    }
    if !out.is_empty() {
        return ValidationReport { violations: out };
    }

    for (t, tri) in mesh.triangles.iter().enumerate() {
        let [a, b, c] = tri.0;
        if a == b || b == c || a == c {
            out.push(Violation::RepeatedVertex { triangle: t });
            continue;
        }
        let signed_area = mesh.geometry(t).signed_area();
        if signed_area <= 0.0 {
            out.push(Violation::Orientation { triangle: t, signed_area });
        }
    }

    let mut on_boundary_edge = vec![false; nv];
    for e in mesh.edges() {
        match e.triangles.len() {
            1 => {
                let (pa, pb) = (mesh.vertices[e.a], mesh.vertices[e.b]);
                if domain.segment_on_boundary(pa, pb) {
                    on_boundary_edge[e.a] = true;
                    on_boundary_edge[e.b] = true;
                } else {
                    out.push(Violation::OpenInteriorEdge { a: e.a, b: e.b });
                    out.extend(hanging_nodes(mesh, e.a, e.b));
                }
            }
            2 => {}
            count => out.push(Violation::OverloadedEdge { a: e.a, b: e.b, count }),
        }
    }

    for (v, &flagged) in mesh.boundary_vertex.iter().enumerate() {
        let geometric = domain.on_boundary(mesh.vertices[v]);
        if flagged != geometric || (on_boundary_edge[v] && !flagged) {
            out.push(Violation::BoundaryFlag { vertex: v, flagged });
        }
    }

    let covered = mesh.total_area();
    let expected = domain.area();
    if (covered - expected).abs() > 1e-12 * expected {
        out.push(Violation::AreaMismatch { covered, expected });
    }

    for t in mesh.corner_triangles() {
        out.push(Violation::CornerTriangle { triangle: t });
    }

    ValidationReport { violations: out }
}

fn hanging_nodes(mesh: &Mesh, a: usize, b: usize) -> Vec<Violation> {
    let (pa, pb) = (mesh.vertices[a], mesh.vertices[b]);
    let len = pa.dist(pb);
    mesh.vertices
        .iter()
        .enumerate()
        .filter(|&(v, &p)| {
            if v == a || v == b {
                return false;
            }
            let twice_area = TriangleGeometry::new([pa, pb, p]).signed_area().abs() * 2.0;
            let along = (p.x - pa.x) * (pb.x - pa.x) + (p.y - pa.y) * (pb.y - pa.y);
            twice_area <= 1e-12 * len * len && along > 0.0 && along < len * len
        })
        .map(|(v, _)| Violation::HangingNode { vertex: v, a, b })
        .collect()
}
