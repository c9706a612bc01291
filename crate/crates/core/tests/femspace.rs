use ministokes::benchmarks::problem;
use ministokes::femspace::*;
use ministokes::mesh::{generate_mesh, Mesh, Point2, Rect, Triangle};
use ministokes::quadrature::rule_for_degree;
use ministokes::solver::{direct_solve, SolverConfig};
use ministokes::Error;
use proptest::prelude::*;

fn unit_triangle() -> Mesh {
    Mesh::new(
        vec![Point2::new(0.0, 0.0), Point2::new(1.0, 0.0), Point2::new(0.0, 1.0)],
        vec![Triangle([0, 1, 2])],
        Rect::UNIT_SQUARE,
    )
}

#[test]
fn p1_stiffness_on_unit_right_triangle() {
    let k = local_stiffness(&unit_triangle(), 0, 1.0, &rule_for_degree(4).unwrap()).unwrap();
    let want = [[1.0, -0.5, -0.5], [-0.5, 0.5, 0.0], [-0.5, 0.0, 0.5]];
    for i in 0..3 {
        for j in 0..3 {
            assert!((k[i][j] - want[i][j]).abs() < 1e-12, "{i} {j} {}", k[i][j]);
        }
        assert!(k[i][..3].iter().sum::<f64>().abs() < 1e-14);
    }
}

#[test]
fn bubble_stiffness_closed_form() {
    // ∫|∇b|² is invariant under scaling; 1/90 on the unit right triangle.
    let rule = rule_for_degree(4).unwrap();
    let small = local_stiffness(&unit_triangle(), 0, 1.0, &rule).unwrap()[3][3];
    let big_mesh = Mesh::new(
        vec![Point2::new(0.0, 0.0), Point2::new(2.0, 0.0), Point2::new(0.0, 2.0)],
        vec![Triangle([0, 1, 2])],
        Rect::new(0.0, 2.0, 0.0, 2.0),
    );
    let big = local_stiffness(&big_mesh, 0, 1.0, &rule).unwrap()[3][3];
    assert!((small - big).abs() < 1e-14);
    assert!((small - 1.0 / 90.0).abs() < 1e-14, "{small}");
}

proptest! {
    #[test]
    fn nodal_bubble_decoupled(
        x in prop::array::uniform3(-2.0f64..2.0),
        y in prop::array::uniform3(-2.0f64..2.0),
    ) {
        let area = 0.5 * ((x[1] - x[0]) * (y[2] - y[0]) - (x[2] - x[0]) * (y[1] - y[0]));
        prop_assume!(area > 1e-2);
        let m = Mesh::new(
            (0..3).map(|i| Point2::new(x[i], y[i])).collect(),
            vec![Triangle([0, 1, 2])],
            Rect::new(-2.0, 2.0, -2.0, 2.0),
        );
        let k = local_stiffness(&m, 0, 1.0, &rule_for_degree(4).unwrap()).unwrap();
        let scale = k[3][3].abs().max(k[0][0].abs());
        for i in 0..3 {
            prop_assert!(k[i][3].abs() <= 1e-12 * scale);
            prop_assert!(k[3][i].abs() <= 1e-12 * scale);
        }
        for i in 0..4 {
            for j in 0..4 {
                prop_assert!((k[i][j] - k[j][i]).abs() <= 1e-14 * scale);
            }
        }
    }

    #[test]
    fn basis_partition_of_unity(l1 in 0.0f64..1.0, s in 0.0f64..1.0) {
        let l2 = (1.0 - l1) * s;
        let l3 = 1.0 - l1 - l2;
        let m = unit_triangle();
        let b = eval_basis(&m.geometry(0), [l1, l2, l3]).unwrap();
        prop_assert!((b.phi.iter().sum::<f64>() - 1.0).abs() < 1e-15);
        prop_assert!((b.bubble - l1 * l2 * l3).abs() < 1e-16);
        let gsum = [b.grad_phi.iter().map(|g| g[0]).sum::<f64>(), b.grad_phi.iter().map(|g| g[1]).sum::<f64>()];
        prop_assert!(gsum[0].abs() < 1e-14 && gsum[1].abs() < 1e-14);
    }
}

#[test]
fn unit_load_entries() {
    let mesh = generate_mesh(Rect::UNIT_SQUARE, 0.2).unwrap();
    let dofs = DofMap::new(&mesh);
    let f = assemble_load(&mesh, &dofs, |_, _| [1.0, 0.0], &rule_for_degree(3).unwrap()).unwrap();
    let mut incident = vec![0.0; mesh.num_vertices()];
    for t in 0..mesh.num_triangles() {
        let area = mesh.geometry(t).area();
        assert!((f[dofs.bubble_dof(t, 0)] - area / 60.0).abs() < 1e-12 * area);
        assert_eq!(f[dofs.bubble_dof(t, 1)], 0.0);
        for &v in &mesh.triangles[t].0 {
            incident[v] += area / 3.0;
        }
    }
    for v in 0..mesh.num_vertices() {
        assert!((f[2 * v] - incident[v]).abs() < 1e-12);
        assert_eq!(f[2 * v + 1], 0.0);
    }
}

#[test]
fn zero_forcing_zero_load() {
    let p = problem(7).unwrap();
    let mesh = generate_mesh(p.domain, 0.5).unwrap();
    let dofs = DofMap::new(&mesh);
    let f = assemble_load(&mesh, &dofs, |x, y| p.forcing(x, y), &rule_for_degree(3).unwrap()).unwrap();
    assert!(f.iter().all(|&v| v == 0.0));
}

#[test]
fn constant_pressure_annihilates_interior_and_bubbles() {
    let mesh = generate_mesh(Rect::UNIT_SQUARE, 0.1).unwrap();
    let dofs = DofMap::new(&mesh);
    let b = assemble_divergence(&mesh, &dofs, &rule_for_degree(4).unwrap()).unwrap();
    let bt1 = b.transpose().mul_vec(&vec![1.0; dofs.num_pressure_dofs()]);
    let scale = b.max_abs();
    for &dof in &dofs.free {
        assert!(bt1[dof].abs() < 1e-12 * scale.max(1.0), "dof {dof}: {}", bt1[dof]);
    }
    // Constant velocity has zero divergence.
    let mut u = vec![0.0; dofs.num_velocity_dofs()];
    for v in 0..dofs.num_vertices {
        u[2 * v] = 0.7;
        u[2 * v + 1] = -1.3;
    }
    assert!(b.mul_vec(&u).iter().all(|v| v.abs() < 1e-14));
}

#[test]
fn single_triangle_divergence_entries() {
    // ψ = (φ_0, 0) has div ψ = -1, so -∫ φ_q div ψ = |T|/3 = 1/6 for every q.
    let m = unit_triangle();
    let dofs = DofMap::new(&m);
    let b = assemble_divergence(&m, &dofs, &rule_for_degree(4).unwrap()).unwrap();
    for q in 0..3 {
        assert!((b.get(q, 0) - 1.0 / 6.0).abs() < 1e-15);
    }
}

#[test]
fn dofmap_counts() {
    let mesh = generate_mesh(Rect::UNIT_SQUARE, 0.2).unwrap();
    let dofs = DofMap::new(&mesh);
    assert_eq!(dofs.num_velocity_dofs(), 2 * (mesh.num_vertices() + mesh.num_triangles()));
    assert_eq!(dofs.num_pressure_dofs(), mesh.num_vertices());
    assert_eq!(dofs.constrained.len(), 2 * mesh.num_boundary_vertices());
    assert!(dofs.constrained.iter().all(|&d| !dofs.is_bubble(d) && mesh.boundary_vertex[d / 2]));
    assert_eq!(dofs.free.len() + dofs.constrained.len(), dofs.num_velocity_dofs());
}

#[test]
fn augmented_shape_and_symmetry() {
    let p = problem(1).unwrap();
    let mesh = generate_mesh(p.domain, 0.2).unwrap();
    let sys = build_saddle_system(&mesh, &p).unwrap();
    assert_eq!(sys.size(), sys.num_free_velocity() + mesh.num_vertices() + 1);
    assert_eq!(sys.matrix.asymmetry(), 0.0);
    let ones = vec![1.0; mesh.num_vertices()];
    let total: f64 = sys.c.iter().zip(&ones).map(|(c, o)| c * o).sum();
    assert!((total - 1.0).abs() < 1e-14);
}

#[test]
fn unaugmented_matrix_is_singular() {
    let p = problem(1).unwrap();
    let mesh = generate_mesh(p.domain, 0.4).unwrap();
    let sys = build_saddle_system(&mesh, &p).unwrap();
    let k = sys.unaugmented_matrix();
    let mut null = vec![0.0; k.nrows()];
    null[sys.num_free_velocity()..].iter_mut().for_each(|v| *v = 1.0);
    assert!(k.mul_vec(&null).iter().all(|v| v.abs() < 1e-14));
    let rhs = vec![1.0; k.nrows()];
    assert!(matches!(direct_solve(&k, &rhs), Err(Error::Singular { .. })));
    assert!(direct_solve(&sys.matrix, &sys.rhs).is_ok());
}

fn cholesky_ok(a: &[Vec<f64>]) -> bool {
    let n = a.len();
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let s: f64 = a[i][j] - (0..j).map(|k| l[i][k] * l[j][k]).sum::<f64>();
            if i == j {
                if s <= 0.0 {
                    return false;
                }
                l[i][i] = s.sqrt();
            } else {
                l[i][j] = s / l[j][j];
            }
        }
    }
    true
}

#[test]
fn free_velocity_block_positive_definite() {
    let p = problem(3).unwrap();
    let mesh = generate_mesh(p.domain, 0.25).unwrap();
    let sys = build_saddle_system(&mesh, &p).unwrap();
    let nf = sys.num_free_velocity();
    let idx: Vec<usize> = (0..nf).collect();
    let aff = sys.matrix.submatrix(&idx, &idx).to_dense();
    assert!(cholesky_ok(&aff));
}

#[test]
fn solution_invariants_and_galerkin_orthogonality() {
    let p = problem(1).unwrap();
    let mesh = generate_mesh(p.domain, 0.2).unwrap();
    let sys = build_saddle_system(&mesh, &p).unwrap();
    let sol = solve_saddle(&sys, &SolverConfig::default()).unwrap();
    let mean: f64 = sys.c.iter().zip(&sol.pressure).map(|(c, p)| c * p).sum();
    assert!(mean.abs() < 1e-10);
    for &d in &sys.dofs.constrained {
        assert_eq!(sol.velocity[d], sys.lifting[d]);
    }
    let au = sys.a.mul_vec(&sol.velocity);
    let btp = sys.b.transpose().mul_vec(&sol.pressure);
    let fnorm = sys.load.iter().map(|v| v * v).sum::<f64>().sqrt();
    for &d in &sys.dofs.free {
        let r = sys.load[d] - au[d] - btp[d];
        assert!(r.abs() < 1e-10 * fnorm, "dof {d}: {r}");
    }
}

#[test]
fn dirichlet_values_follow_boundary_data() {
    let p5 = problem(5).unwrap();
    let mesh = generate_mesh(p5.domain, 0.2).unwrap();
    let sys = build_saddle_system(&mesh, &p5).unwrap();
    for &d in &sys.dofs.constrained {
        let q = mesh.vertices[d / 2];
        let want = if q.y == 1.0 && d % 2 == 0 {
            q.x.powi(4) - 2.0 * q.x.powi(3) + q.x * q.x
        } else {
            0.0
        };
        assert!((sys.lifting[d] - want).abs() < 1e-15);
    }
    let p7 = problem(7).unwrap();
    let mesh = generate_mesh(p7.domain, 0.5).unwrap();
    let sys = build_saddle_system(&mesh, &p7).unwrap();
    let corner = mesh.vertices.iter().position(|q| q.x == 1.0 && q.y == 1.0).unwrap();
    assert_eq!(sys.lifting[2 * corner], 16.0);
    assert_eq!(sys.lifting[2 * corner + 1], 16.0);
}

#[test]
fn patch_test_linear_flow() {
    let mesh = generate_mesh(Rect::UNIT_SQUARE, 0.2).unwrap();
    let u = |x: f64, y: f64| [x + 2.0 * y - 0.3, 3.0 * x - y + 0.1];
    let sys = build_saddle_system_with(&mesh, 1.0, |_, _| [0.0, 0.0], u, 1).unwrap();
    let sol = solve_saddle(&sys, &SolverConfig::default()).unwrap();
    for (v, q) in mesh.vertices.iter().enumerate() {
        let want = u(q.x, q.y);
        assert!((sol.velocity[2 * v] - want[0]).abs() < 1e-10);
        assert!((sol.velocity[2 * v + 1] - want[1]).abs() < 1e-10);
    }
    for t in 0..mesh.num_triangles() {
        assert!(sol.velocity[sys.dofs.bubble_dof(t, 0)].abs() < 1e-10);
    }
    let pmax = sol.pressure.iter().fold(0.0f64, |m, p| m.max(p.abs()));
    assert!(pmax < 1e-8, "{pmax}");
}

#[test]
fn assembly_is_bitwise_deterministic() {
    let p = problem(4).unwrap();
    let mesh = generate_mesh(p.domain, 0.1).unwrap();
    let a = build_saddle_system(&mesh, &p).unwrap();
    let b = build_saddle_system(&mesh, &p).unwrap();
    assert_eq!(a.matrix, b.matrix);
    assert_eq!(a.rhs, b.rhs);
}
