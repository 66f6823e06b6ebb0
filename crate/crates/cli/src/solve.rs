//! `solve`: coefficients and optional field samples for one scenario.

use serde_json::{json, Value};
use surfel_core::disk2d::{solve_hydro_2d, DiskSolution};
use surfel_core::sphere_gm::{solve_gm_shear, solve_hydro_3d, HydroField3D, SphereField, SphereSolution};
use surfel_core::sphere_so::solve_so_shear;
use surfel_core::{FarField2D, HydroCoeff, InterfaceModel, Side};

use crate::error::{CliError, CliResult};
use crate::scenario::{Load, Scenario, Shape};
use crate::table::Table;

#[derive(Debug, Clone)]
pub enum Solved {
    SphereShear(SphereSolution),
    SphereHydro(HydroField3D),
    Disk { solution: DiskSolution, hydro: Option<HydroCoeff> },
}

impl Solved {
    pub fn sphere_field(&self) -> Option<&dyn SphereField> {
        match self {
            Solved::SphereShear(s) => Some(s),
            Solved::SphereHydro(h) => Some(h),
            Solved::Disk { .. } => None,
        }
    }
}

pub fn solve(s: &Scenario) -> CliResult<Solved> {
    let core = |e| CliError::from_core(e, || s.dump());
    let (p, surf, g) = (&s.phases, &s.surface, s.geometry);
    Ok(match (s.shape, s.load) {
        (Shape::Sphere, Load::Shear { sigma_d }) => {
            let coeff = match s.model() {
                InterfaceModel::SteigmannOgden => solve_so_shear(p, surf, g, sigma_d),
                _ => solve_gm_shear(p, surf, g, sigma_d),
            }
            .map_err(core)?;
            Solved::SphereShear(SphereSolution { phases: *p, surface: *surf, geometry: g, sigma_d, coeff })
        }
        (Shape::Sphere, Load::Hydrostatic { sigma_h }) => {
            let coeff = solve_hydro_3d(p, surf, g, sigma_h).map_err(core)?;
            Solved::SphereHydro(HydroField3D { phases: *p, geometry: g, coeff })
        }
        (Shape::Sphere, Load::General(_)) => {
            return Err(CliError::Validation("load.kind: general loads are supported for the disk only".into()))
        }
        (Shape::Disk, load) => {
            let (far, hydro) = match load {
                Load::Shear { sigma_d } => (FarField2D::simple_shear(sigma_d), None),
                Load::Hydrostatic { sigma_h } => {
                    (FarField2D::hydrostatic(sigma_h), Some(solve_hydro_2d(p, surf, g, sigma_h).map_err(core)?))
                }
                Load::General(f) => (f, None),
            };
            let solution = DiskSolution::solve(*p, *surf, g, far).map_err(core)?;
            Solved::Disk { solution, hydro }
        }
    })
}

/// Machine-readable report of the solved coefficients, in normalized units
/// (matrix μ = 1, R = 1).
pub fn coefficient_report(s: &Scenario, solved: &Solved) -> Value {
    let coefficients = match solved {
        Solved::SphereShear(f) => {
            let c = f.coeff;
            json!({ "A0": c.a0, "A1": c.a1, "A2": c.a2, "D0": c.d0, "D1": c.d1, "D3": c.d3, "D4": c.d4 })
        }
        Solved::SphereHydro(h) => json!({ "F1": h.coeff.f1, "F2": h.coeff.f2, "F3": h.coeff.f3 }),
        Solved::Disk { solution, hydro } => {
            let c = solution.coeff;
            let mut v = json!({
                "ReA1": c.re_a1,
                "A_minus1": [c.a_m1.re, c.a_m1.im],
                "A3": [c.a3.re, c.a3.im],
                "Delta1": c.delta1,
                "Delta2": c.delta2,
                "omega0": c.omega0,
                "omega1": c.omega1,
                "omega2": c.omega2,
            });
            if let Some(h) = hydro {
                v["F1"] = json!(h.f1);
                v["F2"] = json!(h.f2);
                v["F3"] = json!(h.f3);
            }
            v
        }
    };
    json!({
        "name": s.name,
        "shape": s.shape,
        "model": s.model(),
        "units": "normalized: stresses by the matrix shear modulus, lengths by R",
        "scales": s.scales,
        "coefficients": coefficients,
    })
}

/// Field samples on the scenario grid, or `None` if none was requested.
/// Points with `r < R` use the inhomogeneity branch; `r = R` samples the
/// matrix side.
pub fn field_grid(s: &Scenario, solved: &Solved) -> Option<Table> {
    let grid = s.grid.as_ref()?;
    let thetas: Vec<f64> =
        (0..grid.n_theta).map(|i| std::f64::consts::PI * i as f64 / (grid.n_theta - 1) as f64).collect();
    let r_big = s.geometry.radius;
    match solved {
        Solved::Disk { solution, .. } => {
            let mut t = Table::new([
                "r (R)",
                "theta (rad)",
                "u_r (R)",
                "u_theta (R)",
                "sigma_rr (mu)",
                "sigma_tt (mu)",
                "sigma_rt (mu)",
            ]);
            for &r in &grid.radii {
                for &th in &thetas {
                    let f = solution.sample(r, th, Side::of(r, s.geometry));
                    t.push(vec![r / r_big, th, f.u_r, f.u_theta, f.s_rr, f.s_tt, f.s_rt]);
                }
            }
            Some(t)
        }
        _ => {
            let field = solved.sphere_field().expect("sphere");
            let mut t = Table::new([
                "r (R)",
                "theta (rad)",
                "phi (rad)",
                "u_r (R)",
                "u_theta (R)",
                "u_phi (R)",
                "sigma_rr (mu)",
                "sigma_tt (mu)",
                "sigma_pp (mu)",
                "sigma_rt (mu)",
                "sigma_rp (mu)",
                "sigma_tp (mu)",
            ]);
            let phi = grid.phi;
            for &r in &grid.radii {
                let side = Side::of(r, s.geometry);
                for &th in &thetas {
                    let u = field.displacement(r, th, phi, side);
                    let st = field.stress(r, th, phi, side);
                    t.push(vec![r / r_big, th, phi, u[0], u[1], u[2], st.rr, st.tt, st.pp, st.rt, st.rp, st.tp]);
                }
            }
            Some(t)
        }
    }
}
