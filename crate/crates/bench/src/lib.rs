//! Shared inputs for the benchmarks: the normalized cavity example.

use surfel_core::{BulkMaterial, Geometry, Phases, SurfaceParams};

pub fn cavity() -> Phases {
    Phases::new(BulkMaterial::new(1.0, 0.3).unwrap(), BulkMaterial::cavity(0.3).unwrap()).unwrap()
}

pub fn unit() -> Geometry {
    Geometry::new(1.0).unwrap()
}

pub fn so_surface() -> SurfaceParams {
    SurfaceParams::gurtin_murdoch(0.030156, 0.060312, 0.0097983).with_gamma(0.00028382, unit())
}
