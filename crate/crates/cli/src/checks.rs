//! `verify`: runs the independent oracles on solved scenarios.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;
use surfel_core::disk2d::DiskSolution;
use surfel_core::sphere_so::jump_closed_form;
use surfel_core::verify::{
    closed_form_mismatch, coefficient_distance, equilibrium_residual_disk, equilibrium_residual_sphere,
    interface_residual, jump_residual_2d, jump_residual_3d, linear_solve_oracle, JumpGrid, LinearSystem,
};
use surfel_core::{BulkMaterial, Coeff3D, Complex64, FarField2D, Geometry, InterfaceModel, Phases, Side, SurfaceParams};

use crate::error::{CliError, CliResult};
use crate::figures;
use crate::scenario::{Load, Scenario, Shape};
use crate::solve::{solve, Solved};

pub const JUMP_BOUND: f64 = 1e-7;
pub const JUMP_BOUND_2D: f64 = 1e-8;
pub const CLASSICAL_JUMP_BOUND: f64 = 1e-12;
pub const EQUILIBRIUM_BOUND: f64 = 1e-6;
pub const ORACLE_BOUND: f64 = 1e-10;
pub const EQUILIBRIUM_POINTS: usize = 1000;
pub const DISK_SAMPLES: usize = 64;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub bound: f64,
    pub pass: bool,
}

impl Check {
    fn new(name: &str, value: f64, bound: f64) -> Self {
        Self { name: name.into(), value, bound, pass: value < bound }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScenarioReport {
    pub scenario: String,
    pub model: InterfaceModel,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl ScenarioReport {
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag} {} {}: {:.3e} (bound {:.0e})\n", self.scenario, c.name, c.value, c.bound));
        }
        out
    }
}

/// Sample points at least `0.1R` away from the interface, inside and out.
pub fn sample_points_3d(n: usize, seed: u64) -> Vec<[f64; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|i| {
            let r = if i % 2 == 0 { rng.random_range(0.05..0.9) } else { rng.random_range(1.1..4.0) };
            let ct: f64 = rng.random_range(-1.0..1.0);
            let phi = rng.random_range(0.0..2.0 * PI);
            let st = (1.0 - ct * ct).sqrt();
            [r * st * phi.cos(), r * st * phi.sin(), r * ct]
        })
        .collect()
}

pub fn sample_points_2d(n: usize, seed: u64) -> Vec<[f64; 2]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|i| {
            let r = if i % 2 == 0 { rng.random_range(0.05..0.9) } else { rng.random_range(1.1..4.0) };
            let t = rng.random_range(0.0..2.0 * PI);
            [r * t.cos(), r * t.sin()]
        })
        .collect()
}

fn jump_bound(model: InterfaceModel, bound: f64) -> f64 {
    if model == InterfaceModel::Classical {
        CLASSICAL_JUMP_BOUND
    } else {
        bound
    }
}

fn field_num(v: &Value, key: &str) -> CliResult<f64> {
    v.get(key)
        .and_then(Value::as_f64)
        .ok_or_else(|| CliError::Validation(format!("coefficients: missing numeric field {key:?}")))
}

fn complex(v: &Value, key: &str) -> CliResult<Complex64> {
    let a = v
        .get(key)
        .and_then(Value::as_array)
        .filter(|a| a.len() == 2)
        .ok_or_else(|| CliError::Validation(format!("coefficients: {key:?} must be [re, im]")))?;
    let re = a[0].as_f64();
    let im = a[1].as_f64();
    match (re, im) {
        (Some(re), Some(im)) => Ok(Complex64::new(re, im)),
        _ => Err(CliError::Validation(format!("coefficients: {key:?} must be [re, im]"))),
    }
}

/// Replaces solved coefficients with those in a JSON document, either a
/// `solve` report or its `coefficients` object.
pub fn apply_coefficients(solved: &mut Solved, doc: &Value) -> CliResult<()> {
    let v = doc.get("coefficients").unwrap_or(doc);
    match solved {
        Solved::SphereShear(f) => {
            f.coeff = Coeff3D {
                a0: field_num(v, "A0")?,
                a1: field_num(v, "A1")?,
                a2: field_num(v, "A2")?,
                d0: field_num(v, "D0")?,
                d1: field_num(v, "D1")?,
                d3: field_num(v, "D3")?,
                d4: field_num(v, "D4")?,
            };
        }
        Solved::SphereHydro(h) => {
            h.coeff.f1 = field_num(v, "F1")?;
            h.coeff.f2 = field_num(v, "F2")?;
            h.coeff.f3 = field_num(v, "F3")?;
        }
        Solved::Disk { solution, .. } => {
            let mut c = solution.coeff;
            c.re_a1 = field_num(v, "ReA1")?;
            c.a_m1 = complex(v, "A_minus1")?;
            c.a3 = complex(v, "A3")?;
            *solution =
                DiskSolution::from_coefficients(solution.phases, solution.surface, solution.geometry, solution.load, c)
                    .map_err(|e| CliError::from_core(e, || format!("{c:?}")))?;
        }
    }
    Ok(())
}

/// Runs every applicable oracle on `solved`.
pub fn verify_solved(s: &Scenario, solved: &Solved) -> ScenarioReport {
    let model = s.model();
    let surf = &s.surface;
    let mut checks = Vec::new();
    match solved {
        Solved::Disk { solution, .. } => {
            let j = jump_residual_2d(solution, DISK_SAMPLES);
            checks.push(Check::new("jump_residual_2d", j.max(), jump_bound(model, JUMP_BOUND_2D)));
            let eq = equilibrium_residual_disk(solution, &sample_points_2d(EQUILIBRIUM_POINTS, 11));
            checks.push(Check::new("equilibrium", eq, EQUILIBRIUM_BOUND));
        }
        _ => {
            let field = solved.sphere_field().expect("sphere");
            let grid = JumpGrid::default();
            let j = jump_residual_3d(field, surf, model, &grid);
            checks.push(Check::new("jump_residual_3d", j.max(), jump_bound(model, JUMP_BOUND)));
            let eq = equilibrium_residual_sphere(field, &sample_points_3d(EQUILIBRIUM_POINTS, 7));
            checks.push(Check::new("equilibrium", eq, EQUILIBRIUM_BOUND));
            if let Solved::SphereShear(f) = solved {
                let pm = f.coeff.radial_profile(&f.phases, s.geometry.radius, Side::Matrix);
                let closed = jump_closed_form(pm.u_r, pm.u_theta, pm.a, surf, s.geometry);
                let cf = closed_form_mismatch(field, &closed, surf, model, &grid);
                checks.push(Check::new("closed_form_jump", cf, jump_bound(model, JUMP_BOUND)));
                let system = if model.has_bending() { LinearSystem::SteigmannOgden } else { LinearSystem::GurtinMurdoch };
                let res = interface_residual(system, &f.phases, surf, s.geometry, &f.coeff);
                checks.push(Check::new("interface_residual", res, ORACLE_BOUND));
                let dist = match linear_solve_oracle(system, &f.phases, surf, s.geometry, f.sigma_d) {
                    Ok(o) => coefficient_distance(&o, &f.coeff, s.geometry),
                    Err(_) => f64::INFINITY,
                };
                checks.push(Check::new("linear_solve_oracle", dist, ORACLE_BOUND));
            }
        }
    }
    let pass = checks.iter().all(|c| c.pass);
    ScenarioReport { scenario: s.name.clone(), model, checks, pass }
}

pub fn verify_scenario(s: &Scenario, coefficients: Option<&Value>) -> CliResult<ScenarioReport> {
    let mut solved = solve(s)?;
    if let Some(doc) = coefficients {
        apply_coefficients(&mut solved, doc)?;
    }
    Ok(verify_solved(s, &solved))
}

fn scenario(name: &str, shape: Shape, phases: Phases, surface: SurfaceParams, load: Load) -> Scenario {
    Scenario {
        name: name.into(),
        shape,
        phases,
        surface,
        geometry: Geometry::new(1.0).unwrap(),
        load,
        grid: None,
        scales: None,
    }
}

/// Built-in verification suite: classical limits, the normalized cavity
/// example under each interface model, a stiff inhomogeneity and disks.
pub fn builtin_suite() -> Vec<Scenario> {
    let m = BulkMaterial::new(1.0, figures::NU).unwrap();
    let stiff = Phases::new(m, BulkMaterial::new(3.0, 0.2).unwrap()).unwrap();
    let cav = figures::cavity();
    let shear = Load::Shear { sigma_d: figures::SIGMA_D };
    let so_disk = SurfaceParams { mu0: figures::MU0, lambda0: figures::LAMBDA0, sigma0: 0.0067435, chi0: 0.0005, zeta0: 0.0002 };
    vec![
        scenario("classical-sphere-shear", Shape::Sphere, stiff, SurfaceParams::classical(), shear),
        scenario("classical-cavity-shear", Shape::Sphere, cav, SurfaceParams::classical(), shear),
        scenario("gm-cavity-shear", Shape::Sphere, cav, figures::gm_surface(figures::SIGMA0[1]), shear),
        scenario("so-cavity-shear", Shape::Sphere, cav, figures::so_surface(figures::SIGMA0[2]), shear),
        scenario("so-sphere-shear", Shape::Sphere, stiff, figures::so_surface(figures::SIGMA0[1]), Load::Shear { sigma_d: 0.01 }),
        scenario("gm-sphere-hydrostatic", Shape::Sphere, stiff, figures::gm_surface(figures::SIGMA0[1]), Load::Hydrostatic { sigma_h: 0.01 }),
        scenario("classical-disk-general", Shape::Disk, stiff, SurfaceParams::classical(), Load::General(FarField2D { s11: 0.01, s22: -0.004, s12: 0.003 })),
        scenario("gm-disk-shear", Shape::Disk, cav, figures::gm_surface(figures::SIGMA0[1]), shear),
        scenario("so-disk-general", Shape::Disk, stiff, so_disk, Load::General(FarField2D { s11: 0.01, s22: 0.002, s12: -0.005 })),
    ]
}
