use crate::mesh::Mesh;

/// Degree-of-freedom numbering.
///
/// Velocity: vertex `v` owns `2v` (x) and `2v + 1` (y); the bubble on
/// triangle `t` owns `2 nv + 2t` and `2 nv + 2t + 1`. Pressure: one unknown
/// per vertex, numbered like the vertices. Velocity unknowns at boundary
/// vertices are constrained; bubbles never are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DofMap {
    pub num_vertices: usize,
    pub num_triangles: usize,
    /// Constrained velocity unknowns, ascending.
    pub constrained: Vec<usize>,
    /// Unconstrained velocity unknowns, ascending.
    pub free: Vec<usize>,
    free_index: Vec<Option<usize>>,
}

impl DofMap {
    pub fn new(mesh: &Mesh) -> Self {
        let nv = mesh.num_vertices();
        let nt = mesh.num_triangles();
        let n = 2 * (nv + nt);
        let mut constrained = Vec::new();
        let mut free = Vec::with_capacity(n);
        let mut free_index = vec![None; n];
        for dof in 0..n {
            if dof < 2 * nv && mesh.boundary_vertex[dof / 2] {
                constrained.push(dof);
            } else {
                free_index[dof] = Some(free.len());
                free.push(dof);
            }
        }
        Self {
            num_vertices: nv,
            num_triangles: nt,
            constrained,
            free,
            free_index,
        }
    }

    pub fn num_velocity_dofs(&self) -> usize {
        2 * (self.num_vertices + self.num_triangles)
    }

    pub fn num_pressure_dofs(&self) -> usize {
        self.num_vertices
    }

    pub fn vertex_dof(&self, v: usize, component: usize) -> usize {
        2 * v + component
    }

    pub fn bubble_dof(&self, t: usize, component: usize) -> usize {
        2 * self.num_vertices + 2 * t + component
    }

    pub fn is_bubble(&self, dof: usize) -> bool {
        dof >= 2 * self.num_vertices
    }

    /// Position of `dof` among the free unknowns.
    pub fn free_index(&self, dof: usize) -> Option<usize> {
        self.free_index[dof]
    }

    /// The eight velocity unknowns of triangle `t`: three vertices then the
    /// bubble, x component first.
    pub fn element_dofs(&self, mesh: &Mesh, t: usize) -> [[usize; 2]; 4] {
        let [a, b, c] = mesh.triangles[t].0;
        [
            [2 * a, 2 * a + 1],
            [2 * b, 2 * b + 1],
            [2 * c, 2 * c + 1],
            [self.bubble_dof(t, 0), self.bubble_dof(t, 1)],
        ]
    }
}
