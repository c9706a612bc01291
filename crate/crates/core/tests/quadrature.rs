use ministokes::mesh::{Point2, TriangleGeometry};
use ministokes::quadrature::{integrate, rule_for_degree, select_degree, Integrand, MAX_DEGREE};
use ministokes::Error;
use proptest::prelude::*;

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// `∫ x^a y^b` over the triangle (0,0), (1,0), (0,1).
fn monomial_moment(a: u32, b: u32) -> f64 {
    factorial(a) * factorial(b) / factorial(a + b + 2)
}

fn reference() -> TriangleGeometry {
    TriangleGeometry::new([Point2::new(0.0, 0.0), Point2::new(1.0, 0.0), Point2::new(0.0, 1.0)])
}

#[test]
fn every_rule_integrates_its_monomials() {
    let t = reference();
    for d in 1..=MAX_DEGREE {
        let rule = rule_for_degree(d).unwrap();
        for a in 0..=d as u32 {
            for b in 0..=(d as u32 - a) {
                let got = integrate(|x, y| x.powi(a as i32) * y.powi(b as i32), &t, &rule).unwrap();
                let want = monomial_moment(a, b);
                assert!(((got - want) / want).abs() <= 1e-12, "degree {d}, x^{a} y^{b}: {got} vs {want}");
            }
        }
    }
}

#[test]
fn point_counts() {
    let counts: Vec<usize> = (1..=MAX_DEGREE).map(|d| rule_for_degree(d).unwrap().len()).collect();
    assert_eq!(
        counts,
        vec![1, 3, 4, 6, 7, 12, 13, 16, 19, 25, 27, 33, 37, 42, 48, 52, 61, 70, 73, 79]
    );
}

#[test]
fn weights_sum_to_one_and_symmetric() {
    for d in 1..=MAX_DEGREE {
        let rule = rule_for_degree(d).unwrap();
        let sum: f64 = rule.points.iter().map(|p| p.weight).sum();
        assert!((sum - 1.0).abs() < 1e-14, "degree {d}");
        for p in &rule.points {
            assert!((p.bary.iter().sum::<f64>() - 1.0).abs() < 1e-14);
        }
    }
}

#[test]
fn unsupported_degrees() {
    assert!(matches!(rule_for_degree(0), Err(Error::UnsupportedDegree(0))));
    assert!(matches!(rule_for_degree(21), Err(Error::UnsupportedDegree(21))));
    assert_eq!(select_degree(Integrand::Polynomial { degree: 0 }).unwrap(), 1);
    assert_eq!(select_degree(Integrand::Polynomial { degree: 14 }).unwrap(), 14);
    assert_eq!(select_degree(Integrand::NonPolynomial).unwrap(), 20);
    assert!(select_degree(Integrand::Polynomial { degree: 21 }).is_err());
}

proptest! {
    #[test]
    fn exact_on_arbitrary_triangles(
        x in prop::array::uniform3(-3.0f64..3.0),
        y in prop::array::uniform3(-3.0f64..3.0),
        d in 1usize..=20,
    ) {
        let t = TriangleGeometry::new([Point2::new(x[0], y[0]), Point2::new(x[1], y[1]), Point2::new(x[2], y[2])]);
        prop_assume!(t.signed_area() > 1e-2);
        // Affine pullback: integrate (λ2)^d on the physical triangle; exact value
        // is 2|T| d! / (d+2)!.
        let g = t.barycentric_gradients().unwrap();
        let p0 = t.p[0];
        let lambda2 = |px: f64, py: f64| g[1][0] * (px - p0.x) + g[1][1] * (py - p0.y);
        let rule = rule_for_degree(d).unwrap();
        let got = integrate(|px, py| lambda2(px, py).powi(d as i32), &t, &rule).unwrap();
        let want = 2.0 * t.area() * factorial(d as u32) / factorial(d as u32 + 2);
        prop_assert!(((got - want) / want).abs() < 1e-11, "{got} vs {want}");
    }
}
