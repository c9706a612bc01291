//! MINI mixed finite elements for the two-dimensional Stokes problem.
//!
//! The velocity space is continuous piecewise-linear enriched with one cubic
//! bubble per triangle, the pressure space continuous piecewise-linear. The
//! crate covers the whole pipeline used for convergence studies on
//! unstructured meshes:
//!
//! - [`mesh`]: force-equilibrium mesh generation on rectangles, corner-triangle
//!   repair, quality measures and a plain-text mesh format.
//! - [`quadrature`]: symmetric Gaussian rules on triangles, degrees 1 to 20.
//! - [`femspace`]: basis evaluation, degree-of-freedom bookkeeping and assembly
//!   of the saddle-point system with a zero-mean pressure multiplier.
//! - [`solver`]: compressed-row matrices, threshold ILU, GMRES and a banded
//!   direct solver used as oracle and fallback.
//! - [`benchmarks`]: the seven manufactured Stokes problems.
//! - [`analysis`]: error norms, velocity splitting, divergence norms and rate fits.
//! - [`study`]: drivers tying the above together.

pub mod analysis;
pub mod benchmarks;
pub mod error;
pub mod femspace;
pub mod mesh;
pub mod quadrature;
pub mod solver;
pub mod study;

pub use error::{Error, Result};
