//! Elastic fields around circular and spherical inhomogeneities whose
//! interfaces carry Gurtin–Murdoch or Steigmann–Ogden surface elasticity
//! with surface tension, and Maxwell-scheme effective shear moduli of the
//! resulting particulate composites.
//!
//! Solvers work on normalized inputs (moduli divided by the matrix shear
//! modulus, surface constants by μR) but nothing prevents dimensional use
//! as long as the units are consistent.

pub mod disk2d;
pub mod error;
pub mod homogenize;
pub mod linalg;
pub mod materials;
pub mod sphere_gm;
pub mod sphere_so;
pub mod verify;

pub use disk2d::{ChristensenLoCoeff2D, Coeff2D, FarField2D, HydroCoeff, Potentials2D};
pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use homogenize::{DipoleMatch, EffectiveEstimate, EquivalentInhomogeneity};
pub use materials::{
    BulkMaterial, DerivedBulk, DerivedSurface, Geometry, InterfaceModel, Phases, Side, SurfaceParams,
};
pub use sphere_gm::{Coeff3D, PartialSolution, SphericalStress};
pub use sphere_so::{CurvatureChange, SOAuxiliary, SOCoefficientMatrix, SurfaceCoupleStress};
pub use verify::{JumpResidual, SurfaceStressTensor};
