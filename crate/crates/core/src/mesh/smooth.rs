use super::{quality_measures, Mesh, Point2, TriangleGeometry};

/// Star quality below which an interior vertex is considered for relocation.
const TARGET: f64 = 0.75;

fn star_quality(mesh: &Mesh, star: &[usize], v: usize, at: Point2) -> f64 {
    star.iter()
        .map(|&t| {
            let tri = mesh.triangles[t].0;
            let p = tri.map(|w| if w == v { at } else { mesh.vertices[w] });
            match quality_measures(&TriangleGeometry::new(p)) {
                Ok((q1, q2)) => q1.min(q2),
                Err(_) => f64::NEG_INFINITY,
            }
        })
        .fold(f64::INFINITY, f64::min)
}

/// Relocates interior vertices whose incident triangles are poorly shaped.
///
/// Each candidate vertex is first tried at the centroid of its neighbours,
/// then refined by a compass search; a move is kept only if it raises the
/// worst `min(q1, q2)` among the incident triangles. Connectivity and
/// boundary vertices are unchanged.
pub(crate) fn smooth_poor_vertices(mesh: &mut Mesh, sweeps: usize) {
    let nv = mesh.num_vertices();
    let mut star: Vec<Vec<usize>> = vec![Vec::new(); nv];
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for (t, tri) in mesh.triangles.iter().enumerate() {
        for (i, &v) in tri.0.iter().enumerate() {
            star[v].push(t);
            for k in 1..3 {
                let w = tri.0[(i + k) % 3];
                if !nbrs[v].contains(&w) {
                    nbrs[v].push(w);
                }
            }
        }
    }

    for _ in 0..sweeps {
        let mut changed = false;
        for v in 0..nv {
            if mesh.boundary_vertex[v] || star[v].is_empty() {
                continue;
            }
            let mut best_q = star_quality(mesh, &star[v], v, mesh.vertices[v]);
            if best_q >= TARGET {
                continue;
            }
            let mut best = mesh.vertices[v];
            let k = nbrs[v].len() as f64;
            let mean = nbrs[v].iter().fold(Point2::new(0.0, 0.0), |acc, &w| {
                Point2::new(acc.x + mesh.vertices[w].x / k, acc.y + mesh.vertices[w].y / k)
            });
            let q = star_quality(mesh, &star[v], v, mean);
            if q > best_q {
                best_q = q;
                best = mean;
            }
            let mut step = 0.1 * nbrs[v].iter().map(|&w| best.dist(mesh.vertices[w])).sum::<f64>() / k;
            for _ in 0..12 {
                let mut improved = false;
                for dir in 0..8 {
                    let a = dir as f64 * std::f64::consts::FRAC_PI_4;
                    let cand = Point2::new(best.x + step * a.cos(), best.y + step * a.sin());
                    let q = star_quality(mesh, &star[v], v, cand);
                    if q > best_q {
                        best_q = q;
                        best = cand;
                        improved = true;
                    }
                }
                if !improved {
                    step *= 0.5;
                }
            }
            if best != mesh.vertices[v] {
                mesh.vertices[v] = best;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::{MeshQualityReport, Rect, Triangle};

    fn fan(center: Point2) -> Mesh {
        let v = vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
            center,
        ];
        let t = vec![
            Triangle([0, 1, 4]),
            Triangle([1, 2, 4]),
            Triangle([2, 3, 4]),
            Triangle([3, 0, 4]),
        ];
        Mesh::new(v, t, Rect::UNIT_SQUARE)
    }

    #[test]
    fn off_centre_vertex_recentred() {
        let mut m = fan(Point2::new(0.8, 0.3));
        let before = MeshQualityReport::new(&m).unwrap().min_quality();
        smooth_poor_vertices(&mut m, 3);
        let after = MeshQualityReport::new(&m).unwrap().min_quality();
        assert!(after > before);
        assert!(m.vertices[4].dist(Point2::new(0.5, 0.5)) < 1e-6);
    }

    #[test]
    fn good_mesh_untouched() {
        let mut m = fan(Point2::new(0.5, 0.5));
        let orig = m.clone();
        smooth_poor_vertices(&mut m, 3);
        assert_eq!(m, orig);
    }
}
