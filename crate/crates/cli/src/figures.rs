//! Data behind the reference figures and the effective-modulus table.
//!
//! All scenarios are a spherical cavity (ν_I = 0.3) in a matrix with
//! ν = 0.3, expressed in units of the matrix shear modulus and the radius.

use std::f64::consts::FRAC_PI_2;
use std::str::FromStr;

use surfel_core::homogenize::effective_shear_curve;
use surfel_core::sphere_gm::{spherical_to_cartesian_stress, stress_3d};
use surfel_core::sphere_so::solve_so_shear;
use surfel_core::{BulkMaterial, Coeff3D, Geometry, Phases, Side, SurfaceParams};

use crate::error::{CliError, CliResult};
use crate::table::Table;

pub const NU: f64 = 0.3;
/// σ_d/μ of the normalized cavity example.
pub const SIGMA_D: f64 = 2.8818e-5;
/// σ₀/(μR) values of the normalized cavity example.
pub const SIGMA0: [f64; 3] = [0.0, 0.0067435, 0.0097983];
/// μ₀/(μR).
pub const MU0: f64 = 0.030156;
/// λ₀/(μR).
pub const LAMBDA0: f64 = 0.060312;
/// γ/μ.
pub const GAMMA: f64 = 0.00028382;

/// Alumina matrix example, SI units.
pub mod alumina {
    pub const MU: f64 = 34.7e9;
    pub const SIGMA_D: f64 = 100e6;
    pub const MU0: f64 = 5.2321;
    pub const LAMBDA0: f64 = 10.4641;
    pub const SIGMA0: f64 = 1.7;
    pub const RADII_NM: [f64; 3] = [5.0, 10.0, 20.0];
}

/// Volume fractions of the effective-modulus table.
pub const TABLE1_C: [f64; 3] = [0.1, 0.3, 0.5];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Table1,
}

impl FromStr for FigureId {
    type Err = CliError;
    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "fig2" => Ok(Self::Fig2),
            "fig3" => Ok(Self::Fig3),
            "fig4" => Ok(Self::Fig4),
            "fig5" => Ok(Self::Fig5),
            "table1" => Ok(Self::Table1),
            _ => Err(CliError::Validation(format!(
                "unknown figure id {s:?} (expected fig2, fig3, fig4, fig5 or table1)"
            ))),
        }
    }
}

impl FigureId {
    pub fn default_resolution(self) -> usize {
        match self {
            FigureId::Fig5 => 61,
            FigureId::Table1 => TABLE1_C.len(),
            _ => 91,
        }
    }
}

pub fn cavity() -> Phases {
    Phases::new(BulkMaterial::new(1.0, NU).unwrap(), BulkMaterial::cavity(NU).unwrap()).unwrap()
}

fn unit() -> Geometry {
    Geometry::new(1.0).unwrap()
}

/// Gurtin–Murdoch constants of the normalized example with tension `s0`.
pub fn gm_surface(s0: f64) -> SurfaceParams {
    SurfaceParams::gurtin_murdoch(MU0, LAMBDA0, s0)
}

pub fn so_surface(s0: f64) -> SurfaceParams {
    gm_surface(s0).with_gamma(GAMMA, unit())
}

/// Alumina surface constants at radius `r_nm`, normalized by μR.
pub fn alumina_surface(r_nm: f64) -> SurfaceParams {
    let mu_r = alumina::MU * r_nm * 1e-9;
    SurfaceParams::gurtin_murdoch(alumina::MU0 / mu_r, alumina::LAMBDA0 / mu_r, alumina::SIGMA0 / mu_r)
        .with_gamma(GAMMA, unit())
}

fn thetas(n: usize) -> Vec<f64> {
    (0..n).map(|i| FRAC_PI_2 * i as f64 / (n - 1) as f64).collect()
}

fn cavity_shear(surf: &SurfaceParams, sigma_d: f64) -> CliResult<Coeff3D> {
    solve_so_shear(&cavity(), surf, unit(), sigma_d)
        .map_err(|e| CliError::from_core(e, || format!("  surface = {surf:?}\n  sigma_d = {sigma_d}")))
}

fn check_resolution(n: usize) -> CliResult<()> {
    if n < 2 {
        return Err(CliError::Validation(format!("resolution: need at least 2 points, got {n}")));
    }
    Ok(())
}

/// Matrix-side stresses along the cavity surface at azimuth `phi`,
/// reduced to one number by `pick`.
fn surface_curve(
    c: &Coeff3D,
    ths: &[f64],
    phi: f64,
    pick: impl Fn(&surfel_core::SphericalStress, f64) -> f64,
) -> Vec<f64> {
    ths.iter().map(|&t| pick(&stress_3d(c, &cavity(), 1.0, t, phi, Side::Matrix), t)).collect()
}

fn fig2_3(n: usize, zz: bool) -> CliResult<Table> {
    check_resolution(n)?;
    let ths = thetas(n);
    let name = if zz { "sigma_zz_over_mu" } else { "sigma_tt_over_mu" };
    let mut headers = vec!["theta (rad)".to_string()];
    let mut cols = Vec::new();
    for s0 in SIGMA0 {
        headers.push(format!("{name}[sigma0/muR={s0}] (1)"));
        let c = cavity_shear(&so_surface(s0), SIGMA_D)?;
        cols.push(surface_curve(&c, &ths, 0.0, |s, t| {
            if zz {
                spherical_to_cartesian_stress(s, t, 0.0)[2]
            } else {
                s.tt
            }
        }));
    }
    Ok(assemble(headers, &ths, &cols))
}

fn assemble(headers: Vec<String>, x: &[f64], cols: &[Vec<f64>]) -> Table {
    let mut t = Table::new(headers);
    for (i, &xi) in x.iter().enumerate() {
        let mut row = vec![xi];
        row.extend(cols.iter().map(|c| c[i]));
        t.push(row);
    }
    t
}

/// Hoop stress σ_θθ/σ_d along the cavity surface at φ = π/2 for the
/// alumina example, classical curve first.
pub fn fig4(n: usize) -> CliResult<Table> {
    check_resolution(n)?;
    let ths = thetas(n);
    let sd = alumina::SIGMA_D / alumina::MU;
    let hoop = |s: &surfel_core::SphericalStress, _t: f64| s.tt / sd;
    let mut headers = vec!["theta (rad)".to_string(), "sigma_tt_over_sigma_d[classical] (1)".to_string()];
    let mut cols = vec![surface_curve(&cavity_shear(&SurfaceParams::classical(), sd)?, &ths, FRAC_PI_2, hoop)];
    for r in alumina::RADII_NM {
        headers.push(format!("sigma_tt_over_sigma_d[R={r}nm] (1)"));
        cols.push(surface_curve(&cavity_shear(&alumina_surface(r), sd)?, &ths, FRAC_PI_2, hoop));
    }
    Ok(assemble(headers, &ths, &cols))
}

fn effective_columns(cs: &[f64], tensions: &[f64], with_gm: bool) -> CliResult<(Vec<String>, Vec<Vec<f64>>)> {
    let p = cavity();
    let g = unit();
    let curve = |surf: SurfaceParams| -> CliResult<Vec<f64>> {
        let est = effective_shear_curve(&p, &surf, g, cs)
            .map_err(|e| CliError::from_core(e, || format!("  surface = {surf:?}")))?;
        Ok(est.iter().map(|e| e.mu_ef_ratio).collect())
    };
    let mut headers = vec!["mu_ef_over_mu[classical] (1)".to_string()];
    let mut cols = vec![curve(SurfaceParams::classical())?];
    let label = |m: &str, s0: f64| {
        if tensions.len() == 1 {
            format!("mu_ef_over_mu[{m}] (1)")
        } else {
            format!("mu_ef_over_mu[{m},sigma0/muR={s0}] (1)")
        }
    };
    if with_gm {
        for &s0 in tensions {
            headers.push(label("gm", s0));
            cols.push(curve(gm_surface(s0))?);
        }
    }
    for &s0 in tensions {
        headers.push(label("so", s0));
        cols.push(curve(so_surface(s0))?);
    }
    Ok((headers, cols))
}

/// μ_ef/μ over c ∈ [0, 0.6] for the classical, GM and SO cavities at the
/// three tension values.
pub fn fig5(n: usize) -> CliResult<Table> {
    check_resolution(n)?;
    let cs: Vec<f64> = (0..n).map(|i| 0.6 * i as f64 / (n - 1) as f64).collect();
    let (mut headers, cols) = effective_columns(&cs, &SIGMA0, true)?;
    headers.insert(0, "c (1)".into());
    Ok(assemble(headers, &cs, &cols))
}

/// μ_ef/μ at c ∈ {0.1, 0.3, 0.5} with σ₀ = 0.
pub fn table1() -> CliResult<Table> {
    let (mut headers, cols) = effective_columns(&TABLE1_C, &[0.0], true)?;
    headers.insert(0, "c (1)".into());
    Ok(assemble(headers, &TABLE1_C, &cols))
}

pub fn run(id: FigureId, resolution: Option<usize>) -> CliResult<Table> {
    let n = resolution.unwrap_or(id.default_resolution());
    match id {
        FigureId::Fig2 => fig2_3(n, false),
        FigureId::Fig3 => fig2_3(n, true),
        FigureId::Fig4 => fig4(n),
        FigureId::Fig5 => fig5(n),
        FigureId::Table1 => table1(),
    }
}
