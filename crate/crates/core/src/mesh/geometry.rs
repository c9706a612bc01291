use super::Point2;
use crate::{Error, Result};

/// Vertex coordinates of one triangle plus the derived affine data.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TriangleGeometry {
    pub p: [Point2; 3],
}

impl TriangleGeometry {
    pub fn new(p: [Point2; 3]) -> Self {
        Self { p }
    }

    pub fn signed_area(&self) -> f64 {
        let [a, b, c] = self.p;
        0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y))
    }

    pub fn area(&self) -> f64 {
        self.signed_area().abs()
    }

    /// Fails unless the vertices are counterclockwise with nonzero area.
    pub fn checked_area(&self) -> Result<f64> {
        let area = self.signed_area();
        if area > 0.0 && area.is_finite() {
            Ok(area)
        } else {
            Err(Error::DegenerateTriangle { area })
        }
    }

    /// Side lengths `a, b, c`, side `i` opposite vertex `i`.
    pub fn side_lengths(&self) -> [f64; 3] {
        let [p0, p1, p2] = self.p;
        [p1.dist(p2), p2.dist(p0), p0.dist(p1)]
    }

    pub fn centroid(&self) -> Point2 {
        let [a, b, c] = self.p;
        Point2::new((a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0)
    }

    /// Cartesian point of barycentric coordinates `l`.
    pub fn map(&self, l: [f64; 3]) -> Point2 {
        let [a, b, c] = self.p;
        Point2::new(
            l[0] * a.x + l[1] * b.x + l[2] * c.x,
            l[0] * a.y + l[1] * b.y + l[2] * c.y,
        )
    }

    /// Constant gradients of the three barycentric coordinates.
    pub fn barycentric_gradients(&self) -> Result<[[f64; 2]; 3]> {
        let area = self.checked_area()?;
        let inv = 1.0 / (2.0 * area);
        let mut g = [[0.0; 2]; 3];
        for (i, gi) in g.iter_mut().enumerate() {
            let pj = self.p[(i + 1) % 3];
            let pk = self.p[(i + 2) % 3];
            *gi = [(pj.y - pk.y) * inv, (pk.x - pj.x) * inv];
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_right() -> TriangleGeometry {
        TriangleGeometry::new([Point2::new(0.0, 0.0), Point2::new(1.0, 0.0), Point2::new(0.0, 1.0)])
    }

    #[test]
    fn gradients_of_reference_triangle() {
        let g = unit_right().barycentric_gradients().unwrap();
        assert_eq!(g, [[-1.0, -1.0], [1.0, 0.0], [0.0, 1.0]]);
    }

    #[test]
    fn clockwise_is_degenerate() {
        let mut t = unit_right();
        t.p.swap(1, 2);
        assert!(matches!(t.checked_area(), Err(Error::DegenerateTriangle { .. })));
    }

    #[test]
    fn map_vertices() {
        let t = unit_right();
        assert_eq!(t.map([0.0, 1.0, 0.0]), Point2::new(1.0, 0.0));
        assert_eq!(t.centroid(), t.map([1.0 / 3.0; 3]));
    }
}
