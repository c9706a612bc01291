use super::{Mesh, Triangle, TriangleGeometry};
use crate::{Error, Result};

/// Removes triangles with two boundary edges by flipping the interior edge
/// they share with their neighbour.
///
/// Triangles are scanned in index order and repaired one at a time until no
/// corner triangle remains. A flip that would produce a non-positive area, or
/// that leaves a corner triangle behind, is reported as a failure.
pub fn fix_corner_triangles(mut mesh: Mesh) -> Result<Mesh> {
    let max_flips = mesh.num_triangles() + 1;
    for _ in 0..max_flips {
        let Some(&t) = mesh.corner_triangles().first() else {
            return Ok(mesh);
        };
        flip_corner(&mut mesh, t)?;
    }
    Err(Error::RepairFailed {
        triangle: mesh.corner_triangles()[0],
        reason: "flip budget exhausted".into(),
    })
}

fn flip_corner(mesh: &mut Mesh, t: usize) -> Result<()> {
    let edges = mesh.edges();
    let interior: Vec<_> = edges
        .iter()
        .filter(|e| e.triangles.len() == 2 && e.triangles.contains(&t))
        .collect();
    let [shared] = interior.as_slice() else {
        return Err(Error::RepairFailed {
            triangle: t,
            reason: format!("expected one interior edge, found {}", interior.len()),
        });
    };
    let n = if shared.triangles[0] == t {
        shared.triangles[1]
    } else {
        shared.triangles[0]
    };

    // Rotate t to (c, a, b) with (a, b) the shared edge.
    let tv = mesh.triangles[t].0;
    let k = (0..3)
        .find(|&i| tv[i] != shared.a && tv[i] != shared.b)
        .expect("shared edge belongs to t");
    let (c, a, b) = (tv[k], tv[(k + 1) % 3], tv[(k + 2) % 3]);
    let d = mesh.triangles[n]
        .0
        .into_iter()
        .find(|&v| v != a && v != b)
        .expect("shared edge belongs to neighbour");

    let new_t = Triangle([c, a, d]);
    let new_n = Triangle([c, d, b]);
    for tri in [new_t, new_n] {
        let [p, q, r] = tri.0;
        let area = TriangleGeometry::new([mesh.vertices[p], mesh.vertices[q], mesh.vertices[r]]).signed_area();
        if area <= 0.0 {
            return Err(Error::RepairFailed {
                triangle: t,
                reason: format!("diagonal exchange with triangle {n} gives signed area {area:e}"),
            });
        }
    }
    mesh.triangles[t] = new_t;
    mesh.triangles[n] = new_n;

    let counts = mesh.boundary_edge_counts();
    if counts[t] >= 2 || counts[n] >= 2 {
        return Err(Error::RepairFailed {
            triangle: t,
            reason: format!("diagonal exchange with triangle {n} leaves a corner triangle"),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::{validate_conformity, Point2, Rect};

    /// Unit square with a centre vertex and edge midpoints on the right and
    /// top; the top-right corner is cut off by a corner triangle.
    fn corner_mesh() -> Mesh {
        let v = vec![
            Point2::new(0.0, 0.0), // 0
            Point2::new(1.0, 0.0), // 1
            Point2::new(1.0, 1.0), // 2
            Point2::new(0.0, 1.0), // 3
            Point2::new(1.0, 0.5), // 4
            Point2::new(0.5, 1.0), // 5
            Point2::new(0.5, 0.5), // 6
        ];
        let t = vec![
            Triangle([0, 1, 6]),
            Triangle([1, 4, 6]),
            Triangle([4, 2, 5]), // corner
            Triangle([4, 5, 6]),
            Triangle([6, 5, 3]),
            Triangle([0, 6, 3]),
        ];
        Mesh::new(v, t, Rect::UNIT_SQUARE)
    }

    #[test]
    fn repairs_top_right_corner() {
        let m = corner_mesh();
        assert!(validate_conformity(&m).is_valid_ignoring_corners());
        assert_eq!(m.corner_triangles(), vec![2]);
        let fixed = fix_corner_triangles(m).unwrap();
        assert!(fixed.corner_triangles().is_empty());
        assert!(validate_conformity(&fixed).is_valid());
        assert!((fixed.total_area() - 1.0).abs() < 1e-15);
        assert!(fixed.triangles[2].0.contains(&6));
    }

    #[test]
    fn identity_without_corners() {
        let fixed = fix_corner_triangles(corner_mesh()).unwrap();
        let again = fix_corner_triangles(fixed.clone()).unwrap();
        assert_eq!(fixed, again);
    }

    #[test]
    fn split_square_cannot_be_repaired() {
        let v = Rect::UNIT_SQUARE.corners().to_vec();
        let m = Mesh::new(v, vec![Triangle([0, 1, 2]), Triangle([0, 2, 3])], Rect::UNIT_SQUARE);
        match fix_corner_triangles(m) {
            Err(Error::RepairFailed { triangle, .. }) => assert_eq!(triangle, 0),
            other => panic!("expected repair failure, got {other:?}"),
        }
    }

    #[test]
    fn degenerate_flip_is_refused() {
        // The exchanged diagonal would pass through vertex 2.
        let v = vec![
            Point2::new(1.0, 1.0),
            Point2::new(0.6, 1.0),
            Point2::new(1.0, 0.6),
            Point2::new(1.0, 0.2),
        ];
        let mut m = Mesh::new(v, vec![Triangle([0, 1, 2]), Triangle([3, 2, 1])], Rect::UNIT_SQUARE);
        let r = flip_corner(&mut m, 0);
        assert!(matches!(r, Err(Error::RepairFailed { triangle: 0, .. })), "{r:?}");
    }
}
