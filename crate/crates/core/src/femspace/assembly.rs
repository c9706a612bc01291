use super::basis::basis_from_gradients;
use super::DofMap;
use crate::mesh::Mesh;
use crate::quadrature::QuadratureRule;
use crate::solver::{CsrMatrix, TripletBuilder};
use crate::{Error, Result};

struct Element {
    area: f64,
    grads: [[f64; 2]; 3],
}

fn element(mesh: &Mesh, t: usize) -> Result<Element> {
    let g = mesh.geometry(t);
    Ok(Element {
        area: g.checked_area()?,
        grads: g.barycentric_gradients()?,
    })
}

/// Values and gradients of the four scalar shape functions (three hats and
/// the bubble) at one quadrature point.
fn shape(el: &Element, bary: [f64; 3]) -> ([f64; 4], [[f64; 2]; 4]) {
    let b = basis_from_gradients(&el.grads, bary);
    (
        [b.phi[0], b.phi[1], b.phi[2], b.bubble],
        [b.grad_phi[0], b.grad_phi[1], b.grad_phi[2], b.grad_bubble],
    )
}

/// Local 4x4 scalar stiffness `μ ∫_T ∇ψ_i·∇ψ_j` for one triangle.
pub fn local_stiffness(mesh: &Mesh, t: usize, mu: f64, rule: &QuadratureRule) -> Result<[[f64; 4]; 4]> {
    let el = element(mesh, t)?;
    let mut k = [[0.0; 4]; 4];
    for q in &rule.points {
        let (_, g) = shape(&el, q.bary);
        let w = mu * el.area * q.weight;
        for i in 0..4 {
            for j in 0..4 {
                k[i][j] += w * (g[i][0] * g[j][0] + g[i][1] * g[j][1]);
            }
        }
    }
    Ok(k)
}

/// Velocity-velocity block; both components share the same scalar block.
pub fn assemble_stiffness(mesh: &Mesh, dofs: &DofMap, mu: f64, rule: &QuadratureRule) -> Result<CsrMatrix> {
    let n = dofs.num_velocity_dofs();
    let mut tb = TripletBuilder::with_capacity(n, n, 32 * mesh.num_triangles());
    for t in 0..mesh.num_triangles() {
        let k = local_stiffness(mesh, t, mu, rule)?;
        let ed = dofs.element_dofs(mesh, t);
        for c in 0..2 {
            for i in 0..4 {
                for j in 0..4 {
                    tb.add(ed[i][c], ed[j][c], k[i][j]);
                }
            }
        }
    }
    Ok(tb.build())
}

/// Pressure-velocity block `B[q][v] = -∫ φ_q div ψ_v`.
pub fn assemble_divergence(mesh: &Mesh, dofs: &DofMap, rule: &QuadratureRule) -> Result<CsrMatrix> {
    let mut tb = TripletBuilder::with_capacity(dofs.num_pressure_dofs(), dofs.num_velocity_dofs(), 24 * mesh.num_triangles());
    for t in 0..mesh.num_triangles() {
        let el = element(mesh, t)?;
        let mut d = [[[0.0; 2]; 4]; 3];
        for q in &rule.points {
            let (v, g) = shape(&el, q.bary);
            let w = el.area * q.weight;
            for (p, dp) in d.iter_mut().enumerate() {
                for i in 0..4 {
                    for c in 0..2 {
                        dp[i][c] -= w * v[p] * g[i][c];
                    }
                }
            }
        }
        let ed = dofs.element_dofs(mesh, t);
        let verts = mesh.triangles[t].0;
        for (p, dp) in d.iter().enumerate() {
            for i in 0..4 {
                for c in 0..2 {
                    tb.add(verts[p], ed[i][c], dp[i][c]);
                }
            }
        }
    }
    Ok(tb.build())
}

/// Load vector `∫ ρf · ψ_v`.
pub fn assemble_load(
    mesh: &Mesh,
    dofs: &DofMap,
    forcing: impl Fn(f64, f64) -> [f64; 2],
    rule: &QuadratureRule,
) -> Result<Vec<f64>> {
    let mut f = vec![0.0; dofs.num_velocity_dofs()];
    for t in 0..mesh.num_triangles() {
        let el = element(mesh, t)?;
        let geo = mesh.geometry(t);
        let mut local = [[0.0; 2]; 4];
        for q in &rule.points {
            let (v, _) = shape(&el, q.bary);
            let x = geo.map(q.bary);
            let rf = forcing(x.x, x.y);
            let w = el.area * q.weight;
            for i in 0..4 {
                local[i][0] += w * rf[0] * v[i];
                local[i][1] += w * rf[1] * v[i];
            }
        }
        let ed = dofs.element_dofs(mesh, t);
        for i in 0..4 {
            for c in 0..2 {
                f[ed[i][c]] += local[i][c];
            }
        }
    }
    Ok(f)
}

/// `∫ φ_v` for every pressure basis function.
pub fn pressure_mean_vector(mesh: &Mesh) -> Result<Vec<f64>> {
    let mut c = vec![0.0; mesh.num_vertices()];
    for (t, tri) in mesh.triangles.iter().enumerate() {
        let area = mesh.geometry(t).checked_area()?;
        for &v in &tri.0 {
            c[v] += area / 3.0;
        }
    }
    Ok(c)
}

/// Velocity vector holding `g(vertex)` on the constrained unknowns and zero
/// elsewhere.
pub fn dirichlet_values(mesh: &Mesh, dofs: &DofMap, g: impl Fn(f64, f64) -> [f64; 2]) -> Vec<f64> {
    let mut out = vec![0.0; dofs.num_velocity_dofs()];
    for &dof in &dofs.constrained {
        let p = mesh.vertices[dof / 2];
        out[dof] = g(p.x, p.y)[dof % 2];
    }
    out
}

pub(crate) fn check_len(what: &str, got: usize, want: usize) -> Result<()> {
    if got != want {
        return Err(Error::Dimension(format!("{what}: length {got}, expected {want}")));
    }
    Ok(())
}
