use crate::mesh::TriangleGeometry;
use crate::Result;

/// Values of the local MINI basis at one point of a triangle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MiniBasisValues {
    pub phi: [f64; 3],
    pub grad_phi: [[f64; 2]; 3],
    /// `phi[0] * phi[1] * phi[2]`, equal to 1/27 at the centroid.
    pub bubble: f64,
    pub grad_bubble: [f64; 2],
}

/// Evaluates the three hat functions and the cubic bubble at the point with
/// barycentric coordinates `bary`.
pub fn eval_basis(tri: &TriangleGeometry, bary: [f64; 3]) -> Result<MiniBasisValues> {
    let grad_phi = tri.barycentric_gradients()?;
    Ok(basis_from_gradients(&grad_phi, bary))
}

pub(crate) fn basis_from_gradients(grad_phi: &[[f64; 2]; 3], bary: [f64; 3]) -> MiniBasisValues {
    let [l1, l2, l3] = bary;
    let w = [l2 * l3, l1 * l3, l1 * l2];
    let mut grad_bubble = [0.0; 2];
    for (wi, g) in w.iter().zip(grad_phi) {
        grad_bubble[0] += wi * g[0];
        grad_bubble[1] += wi * g[1];
    }
    MiniBasisValues {
        phi: bary,
        grad_phi: *grad_phi,
        bubble: l1 * l2 * l3,
        grad_bubble,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::Point2;

    fn tri() -> TriangleGeometry {
        TriangleGeometry::new([Point2::new(0.1, 0.2), Point2::new(1.3, 0.1), Point2::new(0.4, 0.9)])
    }

    #[test]
    fn centroid_bubble() {
        let b = eval_basis(&tri(), [1.0 / 3.0; 3]).unwrap();
        assert!((b.bubble - 1.0 / 27.0).abs() < 1e-16);
        assert!(b.grad_bubble[0].abs() < 1e-15 && b.grad_bubble[1].abs() < 1e-15);
    }

    #[test]
    fn bubble_vanishes_on_edges() {
        for bary in [[0.0, 0.3, 0.7], [0.6, 0.0, 0.4], [0.25, 0.75, 0.0]] {
            assert_eq!(eval_basis(&tri(), bary).unwrap().bubble, 0.0);
        }
    }

    #[test]
    fn nodal_at_vertices() {
        for i in 0..3 {
            let mut bary = [0.0; 3];
            bary[i] = 1.0;
            let b = eval_basis(&tri(), bary).unwrap();
            for j in 0..3 {
                assert_eq!(b.phi[j], if i == j { 1.0 } else { 0.0 });
            }
        }
    }

    #[test]
    fn bubble_gradient_matches_difference_quotient() {
        let t = tri();
        let bary = [0.2, 0.5, 0.3];
        let b = eval_basis(&t, bary).unwrap();
        let g = t.barycentric_gradients().unwrap();
        let h = 1e-6;
        let at = |dx: f64, dy: f64| {
            let l: Vec<f64> = (0..3).map(|i| bary[i] + g[i][0] * dx + g[i][1] * dy).collect();
            l[0] * l[1] * l[2]
        };
        let fx = (at(h, 0.0) - at(-h, 0.0)) / (2.0 * h);
        let fy = (at(0.0, h) - at(0.0, -h)) / (2.0 * h);
        assert!((fx - b.grad_bubble[0]).abs() < 1e-9);
        assert!((fy - b.grad_bubble[1]).abs() < 1e-9);
    }

    #[test]
    fn degenerate_rejected() {
        let t = TriangleGeometry::new([Point2::new(0.0, 0.0), Point2::new(1.0, 1.0), Point2::new(2.0, 2.0)]);
        assert!(eval_basis(&t, [1.0 / 3.0; 3]).is_err());
    }
}
