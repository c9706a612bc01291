//! MINI element: continuous P1 velocity enriched with one cubic bubble per
//! triangle, continuous P1 pressure.

mod assembly;
mod basis;
mod dofmap;
mod system;

pub use assembly::{
    assemble_divergence, assemble_load, assemble_stiffness, dirichlet_values, local_stiffness, pressure_mean_vector,
};
pub use basis::{eval_basis, MiniBasisValues};
pub use dofmap::DofMap;
pub use system::{
    apply_dirichlet, build_saddle_system, build_saddle_system_with, load_degree, solve_saddle, AssembledSystem,
    DiscreteSolution, BLOCK_QUADRATURE_DEGREE,
};
