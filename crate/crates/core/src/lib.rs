//! A structure-preserving finite element solver for the 2D incompressible
//! Navier-Stokes equations on fully periodic triangular meshes.
//!
//! The discretization combines a velocity-vorticity formulation in rotational
//! form with the compatible space triple `CG_N -> RT_N -> DG_{N-1}` (a discrete
//! curl/div subcomplex) and a staggered implicit midpoint integrator. In the
//! inviscid limit the resulting scheme conserves mass, kinetic energy,
//! enstrophy and total vorticity to round-off and is time reversible.
//!
//! Module map:
//! - [`mesh`]: periodic triangulations with oriented edge topology,
//! - [`elements`]: reference bases (`CG`, `DG`, `RT`) and quadrature,
//! - [`spaces`]: global degree-of-freedom numbering, fields, projections,
//! - [`assembly`]: sparse operators of the semi-discrete system,
//! - [`solver`]: sparse LU with iterative refinement,
//! - [`timestepper`]: staggered midpoint marching, bootstrap, reversal,
//! - [`diagnostics`]: conserved quantities and error norms,
//! - [`cases`]: Taylor-Green vortex and shear-layer roll-up benchmarks,
//! - [`studies`]: convergence study drivers.

pub mod assembly;
pub mod cases;
pub mod diagnostics;
pub mod elements;
pub mod error;
pub mod mesh;
pub mod poly;
pub mod quadrature;
pub mod solver;
pub mod spaces;
pub mod sparse;
pub mod studies;
pub mod timestepper;

pub use error::{Error, Result};
pub use mesh::{AffineMap, Mesh, MeshPattern};
// pub use spaces::{Family, Field, FunctionSpace};
// pub use sparse::SparseMatrix;
