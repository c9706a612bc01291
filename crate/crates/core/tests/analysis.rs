use ministokes::analysis::*;
use ministokes::benchmarks::problem;
use ministokes::femspace::DofMap;
use ministokes::mesh::generate_mesh;
use ministokes::quadrature::rule_for_degree;
use ministokes::study::{solve_problem, StudyOptions};
use proptest::prelude::*;

#[test]
fn interpolation_error_is_second_order() {
    let p = problem(3).unwrap();
    let rule = rule_for_degree(20).unwrap();
    let mut pairs = Vec::new();
    for h0 in [0.2, 0.1, 0.05] {
        let mesh = generate_mesh(p.domain, h0).unwrap();
        let dofs = DofMap::new(&mesh);
        let i = nodal_interpolant(&mesh, |x, y| p.exact_velocity(x, y));
        let mut vel = vec![0.0; dofs.num_velocity_dofs()];
        for (v, val) in i.values.iter().enumerate() {
            vel[2 * v] = val[0];
            vel[2 * v + 1] = val[1];
        }
        let e = velocity_error_l2(&mesh, &dofs, &vel, VelocityPart::Full, |x, y| p.exact_velocity(x, y), &rule).unwrap();
        pairs.push((mesh.mesh_parameter_h(), e));
    }
    let r = fit_rate(&pairs).unwrap();
    assert!((1.8..=2.3).contains(&r), "{r}");
}

#[test]
fn report_consistency_on_one_solve() {
    let p = problem(1).unwrap();
    let lvl = solve_problem(&p, 0.1, &StudyOptions::default()).unwrap();
    let e = &lvl.errors;
    for v in [e.err_u_l2, e.err_u_h1, e.err_ul_l2, e.err_ul_h1, e.err_ihu_l2, e.err_ihu_h1, e.err_p_l2, e.div_uh, e.div_uhl] {
        assert!(v.is_finite() && v > 0.0);
    }
    assert!(e.err_u_h1 >= e.err_u_h1_semi);
    assert!(e.err_ul_h1 >= e.err_ul_h1_semi);
    assert!(e.err_ihu_h1 >= e.err_ihu_h1_semi);
    assert!(e.residual <= 1e-10);

    // Triangle inequality through the bubble part.
    let rule = rule_for_degree(14).unwrap();
    let dofs = &lvl.system.dofs;
    let zero = |_: f64, _: f64| [0.0, 0.0];
    let ub_l2 = velocity_error_l2(&lvl.mesh, dofs, &lvl.solution.velocity, VelocityPart::Bubble, zero, &rule).unwrap();
    assert!(e.err_ul_l2 <= e.err_u_l2 + ub_l2 + 1e-15);
    let ub_h1 = velocity_error_h1(
        &lvl.mesh,
        dofs,
        &lvl.solution.velocity,
        VelocityPart::Bubble,
        zero,
        |_, _| [[0.0; 2]; 2],
        &rule,
        H1Mode::Norm,
    )
    .unwrap();
    assert!(e.err_ul_h1 <= e.err_u_h1 + ub_h1 + 1e-15);

    // Split: bubbles vanish at vertices, so u_hl and u_h agree there.
    let (lin, bub) = split_velocity(&lvl.solution.velocity, dofs);
    assert_eq!(lin.len(), lvl.mesh.num_vertices());
    assert_eq!(bub.len(), lvl.mesh.num_triangles());

    let ratios = error_ratios(e).unwrap();
    assert!(ratios.l2 < 1.0 && ratios.h1 < 1.0 && ratios.div > 1.0);
}

#[test]
fn l2_distance_is_symmetric_and_vanishes_on_equal_fields() {
    let mesh = generate_mesh(ministokes::mesh::Rect::UNIT_SQUARE, 0.2).unwrap();
    let a = nodal_interpolant(&mesh, |x, y| [x.sin(), y * y]);
    let b = nodal_interpolant(&mesh, |x, y| [x, y.cos()]);
    let ab = p1_difference_l2(&mesh, &a, &b).unwrap();
    let ba = p1_difference_l2(&mesh, &b, &a).unwrap();
    assert_eq!(ab, ba);
    assert_eq!(p1_difference_l2(&mesh, &a, &a).unwrap(), 0.0);
    assert_eq!(p1_difference_h1(&mesh, &b, &b, H1Mode::Norm).unwrap(), 0.0);
    let constant = vec![0.3; 2 * (mesh.num_vertices() + mesh.num_triangles())];
    let dofs = DofMap::new(&mesh);
    let mut c = constant;
    for t in 0..mesh.num_triangles() {
        c[dofs.bubble_dof(t, 0)] = 0.0;
        c[dofs.bubble_dof(t, 1)] = 0.0;
    }
    assert!(div_l2(&mesh, &dofs, &c, VelocityPart::Full, &rule_for_degree(4).unwrap()).unwrap() < 1e-14);
}

proptest! {
    #[test]
    fn fit_rate_scale_invariant(
        rate in 0.5f64..3.0,
        c in 1e-3f64..1e3,
        s in 1e-2f64..1e2,
        noise in prop::array::uniform4(-0.05f64..0.05),
    ) {
        let hs: [f64; 4] = [0.3, 0.14, 0.07, 0.035];
        let pairs: Vec<(f64, f64)> = hs.iter().zip(noise).map(|(&h, n)| (h, h.powf(rate) * (1.0 + n))).collect();
        let base = fit_rate(&pairs).unwrap();
        let scaled_e: Vec<_> = pairs.iter().map(|&(h, e)| (h, c * e)).collect();
        let scaled_h: Vec<_> = pairs.iter().map(|&(h, e)| (s * h, e)).collect();
        prop_assert!((fit_rate(&scaled_e).unwrap() - base).abs() < 1e-10);
        prop_assert!((fit_rate(&scaled_h).unwrap() - base).abs() < 1e-10);
    }
}
