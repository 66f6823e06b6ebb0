use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use surfel_bench::{cavity, so_surface, unit};
use surfel_core::disk2d::DiskSolution;
use surfel_core::homogenize::effective_shear_curve;
use surfel_core::sphere_gm::SphereSolution;
use surfel_core::sphere_so::solve_so_shear;
use surfel_core::verify::{jump_residual_3d, linear_solve_oracle, JumpGrid, LinearSystem};
use surfel_core::{FarField2D, InterfaceModel};

fn closed_forms(c: &mut Criterion) {
    let (p, s, g) = (cavity(), so_surface(), unit());
    c.bench_function("solve_so_shear", |b| b.iter(|| solve_so_shear(black_box(&p), black_box(&s), g, 2.8818e-5)));
    c.bench_function("linear_solve_oracle", |b| {
        b.iter(|| linear_solve_oracle(LinearSystem::SteigmannOgden, black_box(&p), black_box(&s), g, 2.8818e-5))
    });
    let load = FarField2D { s11: 0.01, s22: -0.004, s12: 0.003 };
    c.bench_function("disk_solve", |b| b.iter(|| DiskSolution::solve(black_box(p), black_box(s), g, load)));
    let cs: Vec<f64> = (0..61).map(|i| 0.01 * i as f64).collect();
    c.bench_function("effective_shear_curve_61", |b| b.iter(|| effective_shear_curve(&p, black_box(&s), g, &cs)));
}

fn jump_grid(c: &mut Criterion) {
    let (p, s, g) = (cavity(), so_surface(), unit());
    let coeff = solve_so_shear(&p, &s, g, 2.8818e-5).unwrap();
    let field = SphereSolution { phases: p, surface: s, geometry: g, sigma_d: 2.8818e-5, coeff };
    let grid = JumpGrid { n_theta: 24, n_phi: 48, ..JumpGrid::default() };
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    group.bench_function("jump_residual_3d_24x48", |b| {
        b.iter(|| jump_residual_3d(black_box(&field), &s, InterfaceModel::SteigmannOgden, &grid))
    });
    group.finish();
}

criterion_group!(benches, closed_forms, jump_grid);
criterion_main!(benches);
