use ministokes::mesh::io::{read_mesh, write_mesh};
use ministokes::mesh::*;
use proptest::prelude::*;

fn check(m: &Mesh) {
    let report = validate_conformity(m);
    assert!(report.is_valid(), "{:?}", report.violations);
    assert!(m.corner_triangles().is_empty());
    let q = MeshQualityReport::new(m).unwrap();
    assert!(q.min_quality() >= 0.7, "min quality {}", q.min_quality());
    assert!((m.total_area() - m.domain.area()).abs() < 1e-12 * m.domain.area());
    for c in m.domain.corners() {
        assert!(m.vertices.contains(&c));
    }
}

#[test]
fn study_levels_unit_square() {
    for h0 in [0.2, 0.1, 0.05] {
        let m = generate_mesh(Rect::UNIT_SQUARE, h0).unwrap();
        check(&m);
        let h = m.mesh_parameter_h();
        assert!(h >= h0 && h <= 2.0 * h0, "h0 {h0}: h {h}");
    }
}

#[test]
fn colliding_flow_domain() {
    let m = generate_mesh(Rect::new(-1.0, 1.0, -1.0, 1.0), 0.2).unwrap();
    check(&m);
}

#[test]
fn text_round_trip_is_exact() {
    let m = generate_mesh(Rect::UNIT_SQUARE, 0.1).unwrap();
    let mut buf = Vec::new();
    write_mesh(&m, &mut buf).unwrap();
    let back = read_mesh(buf.as_slice()).unwrap();
    assert_eq!(back, m);
}

#[test]
fn repair_failure_reported() {
    // Two triangles splitting the square: both are corner triangles and any
    // exchange keeps them so.
    let m = Mesh::new(
        Rect::UNIT_SQUARE.corners().to_vec(),
        vec![Triangle([0, 1, 2]), Triangle([0, 2, 3])],
        Rect::UNIT_SQUARE,
    );
    assert!(matches!(fix_corner_triangles(m), Err(ministokes::Error::RepairFailed { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]
    #[test]
    fn jittered_meshes_are_valid(seed in any::<u64>(), h0 in 0.08f64..0.3, w in 0.8f64..1.6) {
        let params = DistMeshParams { seed: Some(seed), ..Default::default() };
        let m = generate_mesh_with(Rect::new(0.0, w, 0.0, 1.0), h0, &params).unwrap();
        let report = validate_conformity(&m);
        prop_assert!(report.is_valid(), "{:?}", report.violations);
        prop_assert!(m.corner_triangles().is_empty());
        let q = MeshQualityReport::new(&m).unwrap();
        prop_assert!(q.min_quality() >= 0.6, "min quality {}", q.min_quality());
    }
}
