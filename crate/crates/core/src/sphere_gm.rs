//! Spherical inhomogeneity with a Gurtin–Murdoch interface: simple-shear
//! and hydrostatic solutions, the vector partial solutions they are built
//! from, and the resulting stress fields.
//!
//! The shear field has the fixed angular structure
//!
//! ```text
//! u_r = a(r) + U_r(r) sin²θ cos2φ
//! u_θ = U_θ(r) sinθ cosθ cos2φ
//! u_φ = −U_θ(r) sinθ sin2φ
//! ```
//!
//! with `a = −A₀ r` inside and `a = −D₀/r²` outside.

use std::fmt;
use std::str::FromStr;

use nalgebra::{Matrix3, Matrix4, Vector4};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::disk2d::HydroCoeff;
use crate::error::{invalid, Error, Result};
use crate::linalg;
use crate::materials::{BulkMaterial, Geometry, Phases, Side, SurfaceParams};

/// Coefficients of the sphere representation. `D1 = σ_d/(2μ)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Coeff3D {
    pub a0: f64,
    pub a1: f64,
    pub a2: f64,
    pub d0: f64,
    pub d1: f64,
    pub d3: f64,
    pub d4: f64,
}

/// Radial amplitudes and their r-derivatives at one radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialProfile {
    /// Spherically symmetric part `a(r)` and `a'(r)`.
    pub a: f64,
    pub da: f64,
    pub u_r: f64,
    pub du_r: f64,
    pub u_theta: f64,
    pub du_theta: f64,
}

/// `U_r^{inh}` and `U_θ^{inh}` power coefficients: `(r³ factor of U_r, r³
/// factor of U_θ)` per unit `A2`.
fn inner_factors(nu_i: f64) -> (f64, f64) {
    let q = 1.0 - 2.0 * nu_i;
    (6.0 * nu_i / q, (7.0 - 4.0 * nu_i) / q)
}

fn outer_factor(nu: f64) -> f64 {
    (5.0 - 4.0 * nu) / (1.0 - 2.0 * nu)
}

impl Coeff3D {
    pub fn radial_profile(&self, phases: &Phases, r: f64, side: Side) -> RadialProfile {
        match side {
            Side::Inhomogeneity => {
                let (fr, ft) = inner_factors(phases.inhomogeneity.nu);
                let r3 = r.powi(3);
                RadialProfile {
                    a: -self.a0 * r,
                    da: -self.a0,
                    u_r: self.a1 * r - fr * self.a2 * r3,
                    du_r: self.a1 - 3.0 * fr * self.a2 * r * r,
                    u_theta: self.a1 * r - ft * self.a2 * r3,
                    du_theta: self.a1 - 3.0 * ft * self.a2 * r * r,
                }
            }
            Side::Matrix => {
                let k = outer_factor(phases.matrix.nu);
                let (r2, r3, r4, r5) = (r * r, r.powi(3), r.powi(4), r.powi(5));
                RadialProfile {
                    a: -self.d0 / r2,
                    da: 2.0 * self.d0 / r3,
                    u_r: self.d1 * r + 3.0 * self.d3 / r4 + k * self.d4 / r2,
                    du_r: self.d1 - 12.0 * self.d3 / r5 - 2.0 * k * self.d4 / r3,
                    u_theta: self.d1 * r - 2.0 * self.d3 / r4 + 2.0 * self.d4 / r2,
                    du_theta: self.d1 + 8.0 * self.d3 / r5 - 4.0 * self.d4 / r3,
                }
            }
        }
    }
}

/// Vector partial solutions of the Lamé equation used by the sphere
/// representation. Interior (regular at the origin) solutions are the
/// lowercase `u`, exterior (decaying) ones the uppercase `U`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PartialSolution {
    #[serde(rename = "u00_3")]
    Inner00_3,
    #[serde(rename = "u22_1")]
    Inner22_1,
    #[serde(rename = "u22_3")]
    Inner22_3,
    #[serde(rename = "U00_1")]
    Outer00_1,
    #[serde(rename = "U22_1")]
    Outer22_1,
    #[serde(rename = "U22_3")]
    Outer22_3,
}

impl PartialSolution {
    pub const ALL: [PartialSolution; 6] = [
        Self::Inner00_3,
        Self::Inner22_1,
        Self::Inner22_3,
        Self::Outer00_1,
        Self::Outer22_1,
        Self::Outer22_3,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            Self::Inner00_3 => "u00_3",
            Self::Inner22_1 => "u22_1",
            Self::Inner22_3 => "u22_3",
            Self::Outer00_1 => "U00_1",
            Self::Outer22_1 => "U22_1",
            Self::Outer22_3 => "U22_3",
        }
    }
}

impl fmt::Display for PartialSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for PartialSolution {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.label() == s)
            .ok_or_else(|| invalid("label", format!("unknown partial solution `{s}`")))
    }
}

/// Surface harmonics `S⁽¹⁾` and `S⁽³⁾` for `(t, s) ∈ {(0,0), (2,2)}` as
/// complex `(e_r, e_θ, e_φ)` components. `P₂²(cosθ) = 3 sin²θ`.
fn harmonics(t: u8, theta: f64, phi: f64) -> ([Complex64; 3], [Complex64; 3]) {
    let zero = Complex64::new(0.0, 0.0);
    match t {
        0 => ([zero; 3], [Complex64::from(1.0), zero, zero]),
        _ => {
            let (s, c) = theta.sin_cos();
            let e = Complex64::from_polar(1.0, 2.0 * phi);
            let chi = 3.0 * s * s * e;
            let dchi_dt = 6.0 * s * c * e;
            // (1/sinθ) ∂χ/∂φ with the sinθ cancelled analytically
            let dchi_dp = Complex64::new(0.0, 6.0) * s * e;
            ([zero, dchi_dt, dchi_dp], [chi, zero, zero])
        }
    }
}

/// Complex value of a partial solution at `(r, θ, φ)` in `(e_r, e_θ, e_φ)`.
pub fn eval_partial_solution(label: PartialSolution, nu: f64, r: f64, theta: f64, phi: f64) -> [Complex64; 3] {
    use PartialSolution::*;
    let (t, a1, a3) = match label {
        Inner00_3 => (0, 0.0, -2.0 * (1.0 - 2.0 * nu) * r / 3.0),
        Inner22_1 => (2, r / 24.0, r / 12.0),
        Inner22_3 => {
            let f = r.powi(3) / 24.0;
            (2, f * (7.0 - 4.0 * nu) / 21.0, f * 4.0 * nu / 7.0)
        }
        Outer00_1 => (0, 0.0, -1.0 / (r * r)),
        Outer22_1 => (2, 1.0 / r.powi(4), -3.0 / r.powi(4)),
        Outer22_3 => {
            let f = 1.0 / (3.0 * r * r);
            (2, f * (1.0 - 2.0 * nu), f * (5.0 - 4.0 * nu))
        }
    };
    let (s1, s3) = harmonics(t, theta, phi);
    [0, 1, 2].map(|i| a1 * s1[i] + a3 * s3[i])
}

/// Displacement assembled from the partial solutions:
/// inside `(3/(2(1−2ν_I)))A₀u₀₀⁽³⁾ + 4A₁Re u₂₂⁽¹⁾ − (84/(1−2ν_I))A₂ Re u₂₂⁽³⁾`,
/// outside `2(σ_d/μ)Re u₂₂⁽¹⁾ + D₀U₀₀⁽¹⁾ − (D₃/3)Re U₂₂⁽¹⁾ + (D₄/(1−2ν))Re U₂₂⁽³⁾`.
pub fn displacement_from_partials(c: &Coeff3D, phases: &Phases, r: f64, theta: f64, phi: f64, side: Side) -> [f64; 3] {
    use PartialSolution::*;
    let terms: Vec<(f64, PartialSolution, f64)> = match side {
        Side::Inhomogeneity => {
            let nu = phases.inhomogeneity.nu;
            let q = 1.0 - 2.0 * nu;
            vec![(1.5 / q * c.a0, Inner00_3, nu), (4.0 * c.a1, Inner22_1, nu), (-84.0 / q * c.a2, Inner22_3, nu)]
        }
        Side::Matrix => {
            let nu = phases.matrix.nu;
            vec![
                (4.0 * c.d1, Inner22_1, nu),
                (c.d0, Outer00_1, nu),
                (-c.d3 / 3.0, Outer22_1, nu),
                (c.d4 / (1.0 - 2.0 * nu), Outer22_3, nu),
            ]
        }
    };
    let mut u = [0.0; 3];
    for (w, label, nu) in terms {
        let v = eval_partial_solution(label, nu, r, theta, phi);
        for i in 0..3 {
            u[i] += w * v[i].re;
        }
    }
    u
}

/// Spherical stress components.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct SphericalStress {
    pub rr: f64,
    pub tt: f64,
    pub pp: f64,
    pub rt: f64,
    pub rp: f64,
    pub tp: f64,
}

impl SphericalStress {
    pub fn isotropic(p: f64) -> Self {
        Self { rr: p, tt: p, pp: p, ..Self::default() }
    }

    pub fn as_matrix(&self) -> Matrix3<f64> {
        Matrix3::new(self.rr, self.rt, self.rp, self.rt, self.tt, self.tp, self.rp, self.tp, self.pp)
    }

    pub fn trace(&self) -> f64 {
        self.rr + self.tt + self.pp
    }

    pub fn von_mises(&self) -> f64 {
        let m = self.as_matrix();
        let dev = m - Matrix3::identity() * (self.trace() / 3.0);
        (1.5 * dev.component_mul(&dev).sum()).sqrt()
    }
}

/// Cartesian stress `(σ_xx, σ_yy, σ_zz, σ_xy, σ_xz, σ_yz)`.
pub type CartesianStress = [f64; 6];

/// Columns are `e_r`, `e_θ`, `e_φ` in Cartesian components.
pub fn spherical_basis(theta: f64, phi: f64) -> Matrix3<f64> {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    Matrix3::new(st * cp, ct * cp, -sp, st * sp, ct * sp, cp, ct, -st, 0.0)
}

pub fn spherical_to_cartesian_stress(s: &SphericalStress, theta: f64, phi: f64) -> CartesianStress {
    let q = spherical_basis(theta, phi);
    let c = q * s.as_matrix() * q.transpose();
    [c[(0, 0)], c[(1, 1)], c[(2, 2)], c[(0, 1)], c[(0, 2)], c[(1, 2)]]
}

fn lame(m: &BulkMaterial) -> (f64, f64) {
    (m.mu * m.lambda_over_mu(), m.mu)
}

/// Displacement `(u_r, u_θ, u_φ)`; interior branch for `r < R`.
pub fn displacement_3d(c: &Coeff3D, phases: &Phases, g: Geometry, r: f64, theta: f64, phi: f64) -> [f64; 3] {
    displacement_on_side(c, phases, Side::of(r, g), r, theta, phi)
}

pub fn displacement_on_side(c: &Coeff3D, phases: &Phases, side: Side, r: f64, theta: f64, phi: f64) -> [f64; 3] {
    let p = c.radial_profile(phases, r, side);
    let (s, co) = theta.sin_cos();
    let (s2p, c2p) = (2.0 * phi).sin_cos();
    [p.a + p.u_r * s * s * c2p, p.u_theta * s * co * c2p, -p.u_theta * s * s2p]
}

/// Stress from the analytic strain of the representation on `side`.
pub fn stress_3d(c: &Coeff3D, phases: &Phases, r: f64, theta: f64, phi: f64, side: Side) -> SphericalStress {
    let p = c.radial_profile(phases, r, side);
    let mat = match side {
        Side::Inhomogeneity => &phases.inhomogeneity,
        Side::Matrix => &phases.matrix,
    };
    let (lambda, mu) = lame(mat);
    let (s, co) = theta.sin_cos();
    let (s2p, c2p) = (2.0 * phi).sin_cos();
    let (ur, ut) = (p.u_r / r, p.u_theta / r);
    let shear = 2.0 * ur + p.du_theta - ut;
    let e_rr = p.da + p.du_r * s * s * c2p;
    let e_tt = ut * (co * co - s * s) * c2p + p.a / r + ur * s * s * c2p;
    let e_pp = ut * (co * co - 2.0) * c2p + p.a / r + ur * s * s * c2p;
    let e_rt = 0.5 * s * co * c2p * shear;
    let e_rp = -0.5 * s * s2p * shear;
    let e_tp = -ut * co * s2p;
    let tr = lambda * (e_rr + e_tt + e_pp);
    SphericalStress {
        rr: tr + 2.0 * mu * e_rr,
        tt: tr + 2.0 * mu * e_tt,
        pp: tr + 2.0 * mu * e_pp,
        rt: 2.0 * mu * e_rt,
        rp: 2.0 * mu * e_rp,
        tp: 2.0 * mu * e_tp,
    }
}

/// A displacement/stress field around a sphere, as consumed by the
/// verification routines.
pub trait SphereField: Sync {
    fn geometry(&self) -> Geometry;
    fn displacement(&self, r: f64, theta: f64, phi: f64, side: Side) -> [f64; 3];
    fn stress(&self, r: f64, theta: f64, phi: f64, side: Side) -> SphericalStress;

    /// Cartesian stress at `(x, y, z)`, side chosen by radius.
    fn stress_cartesian(&self, x: f64, y: f64, z: f64) -> CartesianStress {
        let r = (x * x + y * y + z * z).sqrt();
        let theta = (z / r).clamp(-1.0, 1.0).acos();
        let phi = y.atan2(x);
        let s = self.stress(r, theta, phi, Side::of(r, self.geometry()));
        spherical_to_cartesian_stress(&s, theta, phi)
    }
}

/// Solved sphere problem under simple shear (either interface model).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SphereSolution {
    pub phases: Phases,
    pub surface: SurfaceParams,
    pub geometry: Geometry,
    pub sigma_d: f64,
    pub coeff: Coeff3D,
}

impl SphereField for SphereSolution {
    fn geometry(&self) -> Geometry {
        self.geometry
    }
    fn displacement(&self, r: f64, theta: f64, phi: f64, side: Side) -> [f64; 3] {
        displacement_on_side(&self.coeff, &self.phases, side, r, theta, phi)
    }
    fn stress(&self, r: f64, theta: f64, phi: f64, side: Side) -> SphericalStress {
        stress_3d(&self.coeff, &self.phases, r, theta, phi, side)
    }
}

/// Hydrostatic sphere solution as a field.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HydroField3D {
    pub phases: Phases,
    pub geometry: Geometry,
    pub coeff: HydroCoeff,
}

impl SphereField for HydroField3D {
    fn geometry(&self) -> Geometry {
        self.geometry
    }
    fn displacement(&self, r: f64, _theta: f64, _phi: f64, side: Side) -> [f64; 3] {
        let h = &self.coeff;
        let ur = match side {
            Side::Inhomogeneity => h.f1 * r,
            Side::Matrix => h.f2 * r + h.f3 / (r * r),
        };
        [ur, 0.0, 0.0]
    }
    fn stress(&self, r: f64, _theta: f64, _phi: f64, side: Side) -> SphericalStress {
        let h = &self.coeff;
        match side {
            Side::Inhomogeneity => SphericalStress::isotropic(3.0 * self.phases.inhomogeneity.derive().k3 * h.f1),
            Side::Matrix => {
                let k = self.phases.matrix.derive().k3;
                let mu = self.phases.matrix.mu;
                let p = 3.0 * k * h.f2;
                let q = 2.0 * mu * h.f3 / r.powi(3);
                SphericalStress { rr: p - 2.0 * q, tt: p + q, pp: p + q, ..Default::default() }
            }
        }
    }
}

/// `(A₀, D₀)` of the spherically symmetric tension response.
pub fn tension_coefficients(phases: &Phases, surf: &SurfaceParams, g: Geometry) -> Result<(f64, f64)> {
    let den = tension_denominator(phases, surf, g)?;
    let a0 = 2.0 * surf.sigma0 / g.radius / den;
    Ok((a0, a0 * g.radius.powi(3)))
}

/// `4μ + 3K_I + 2η₀`.
fn tension_denominator(phases: &Phases, surf: &SurfaceParams, g: Geometry) -> Result<f64> {
    let den = 4.0 * phases.matrix.mu + 3.0 * phases.inhomogeneity.derive().k3 + 2.0 * surf.derive(g).eta0;
    if !(den > 0.0) {
        return Err(Error::Degenerate { what: "4mu+3K_I+2eta0", value: den });
    }
    Ok(den)
}

/// Interface system for `(A₁, A₂R², D₃/R⁵, D₄/R³)` per unit `D₁`: two
/// displacement-continuity rows and two traction-jump rows.
pub fn gm_system(phases: &Phases, surf: &SurfaceParams, g: Geometry) -> (Matrix4<f64>, Vector4<f64>) {
    let (mu, nu) = (phases.matrix.mu, phases.matrix.nu);
    let (mu_i, nu_i) = (phases.inhomogeneity.mu, phases.inhomogeneity.nu);
    let q = 1.0 - 2.0 * nu_i;
    let p = 1.0 - 2.0 * nu;
    let r = g.radius;
    let (mu0, l0, s0) = (surf.mu0, surf.lambda0, surf.sigma0);
    let vt = [1.0, -(7.0 - 4.0 * nu_i) / q];
    let vr = [1.0, -6.0 * nu_i / q];
    let k1 = ((mu0 - s0) - 3.0 * (l0 + 2.0 * mu0)) / (6.0 * mu * r);
    let k2 = (l0 + mu0 + s0) / (3.0 * mu * r);
    let j1 = (l0 + mu0 + s0) / (mu * r);
    let j2 = -2.0 * (l0 + mu0 + 2.0 * s0) / (3.0 * mu * r);
    let f1 = [k1 * vt[0] + k2 * vr[0], k1 * vt[1] + k2 * vr[1]];
    let f2 = [j1 * vt[0] + j2 * vr[0], j1 * vt[1] + j2 * vr[1]];
    let m = mu_i / mu;
    let a = Matrix4::new(
        vt[0], vt[1], 2.0, -2.0,
        vr[0], vr[1], -3.0, -(5.0 - 4.0 * nu) / p,
        m - 6.0 * f1[0], -m * (7.0 + 2.0 * nu_i) / q - 6.0 * f1[1], -8.0, -2.0 * (1.0 + nu) / p,
        m - 3.0 * f2[0], m * 3.0 * nu_i / q - 3.0 * f2[1], 12.0, -2.0 * (nu - 5.0) / p,
    );
    (a, Vector4::repeat(1.0))
}

/// Gurtin–Murdoch simple-shear solution. The four shear coefficients come
/// from a direct solve of [`gm_system`]; `(A₀, D₀)` from the closed form
/// `A₀ = D₀/R³ = (2σ₀/R)/(4μ + 3K_I + 2η₀)`.
pub fn solve_gm_shear(phases: &Phases, surf: &SurfaceParams, g: Geometry, sigma_d: f64) -> Result<Coeff3D> {
    surf.validate()?;
    g.validate()?;
    if !surf.is_gurtin_murdoch() {
        return Err(invalid("surface", "bending constants must vanish for the Gurtin-Murdoch solver"));
    }
    if !sigma_d.is_finite() {
        return Err(invalid("sigma_d", "must be finite"));
    }
    let (a0, d0) = tension_coefficients(phases, surf, g)?;
    let (a, b) = gm_system(phases, surf, g);
    let x = linalg::solve(a, b)?;
    let d1 = sigma_d / (2.0 * phases.matrix.mu);
    let r = g.radius;
    Ok(Coeff3D {
        a0,
        a1: x[0] * d1,
        a2: x[1] * d1 / (r * r),
        d0,
        d1,
        d3: x[2] * d1 * r.powi(5),
        d4: x[3] * d1 * r.powi(3),
    })
}

/// Residuals of the symmetric-mode traction equation
/// `2D₀/R³ = −(μ_I/μ)((1+ν_I)/(1−2ν_I))A₀ − f₀`, normalized by `|D₀|/R³`,
/// for `f₀ = −σ₀/(μR) + η₀A₀/(μR)` (first) and `f₀ = −σ₀/(μR) + η₀A₀/μ`
/// (second).
pub fn symmetric_traction_residuals(phases: &Phases, surf: &SurfaceParams, g: Geometry) -> Result<(f64, f64)> {
    let (a0, d0) = tension_coefficients(phases, surf, g)?;
    let (mu, r) = (phases.matrix.mu, g.radius);
    let nu_i = phases.inhomogeneity.nu;
    let eta0 = surf.derive(g).eta0;
    let lhs = 2.0 * d0 / r.powi(3);
    let base = -(phases.inhomogeneity.mu / mu) * (1.0 + nu_i) / (1.0 - 2.0 * nu_i) * a0 + surf.sigma0 / (mu * r);
    let scale = (d0 / r.powi(3)).abs().max(f64::MIN_POSITIVE);
    Ok((
        (lhs - (base - eta0 * a0 / (mu * r))).abs() / scale,
        (lhs - (base - eta0 * a0 / mu)).abs() / scale,
    ))
}

/// Hydrostatic-load radial solution of the sphere (`dim = 3`).
pub fn solve_hydro_3d(phases: &Phases, surf: &SurfaceParams, g: Geometry, sigma_h: f64) -> Result<HydroCoeff> {
    surf.validate()?;
    let den = tension_denominator(phases, surf, g)?;
    let k = phases.matrix.derive().k3;
    let ki = phases.inhomogeneity.derive().k3;
    let mu = phases.matrix.mu;
    let eta0 = surf.derive(g).eta0;
    let r = g.radius;
    let t = 2.0 * surf.sigma0 / r;
    Ok(HydroCoeff {
        f1: ((1.0 + 4.0 * mu / (3.0 * k)) * sigma_h - t) / den,
        f2: sigma_h / (3.0 * k),
        f3: r.powi(3) * (sigma_h * ((1.0 - ki / k) - 2.0 * eta0 / (3.0 * k)) - t) / den,
        dim: 3,
    })
}

/// Surface-tension radial correction factor `A = −2/(4μ + 3K_I + 2η₀)`.
pub fn tension_amplitude(phases: &Phases, surf: &SurfaceParams, g: Geometry) -> Result<f64> {
    Ok(-2.0 / tension_denominator(phases, surf, g)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    fn phases(mu_i: f64, nu_i: f64) -> Phases {
        Phases::new(BulkMaterial::new(1.0, 0.3).unwrap(), BulkMaterial::new(mu_i, nu_i).unwrap()).unwrap()
    }

    fn gm() -> SurfaceParams {
        SurfaceParams::gurtin_murdoch(0.05, 0.08, 0.03)
    }

    #[test]
    fn zero_tension_zero_symmetric_part() {
        let c = solve_gm_shear(&phases(0.7, 0.2), &SurfaceParams::gurtin_murdoch(0.05, 0.08, 0.0), Geometry::new(1.3).unwrap(), 0.2)
            .unwrap();
        assert_eq!(c.a0, 0.0);
        assert_eq!(c.d0, 0.0);
    }

    #[test]
    fn homogeneous_uniform_shear() {
        let c = solve_gm_shear(&phases(1.0, 0.3), &SurfaceParams::classical(), Geometry::new(1.0).unwrap(), 2.0).unwrap();
        assert!((c.d1 - 1.0).abs() < 1e-15);
        assert!((c.a1 - 1.0).abs() < 1e-14);
        assert!(c.a2.abs() < 1e-14 && c.d3.abs() < 1e-14 && c.d4.abs() < 1e-14);
    }

    #[test]
    fn bending_rejected() {
        let s = SurfaceParams { chi0: 1e-3, ..gm() };
        assert!(solve_gm_shear(&phases(1.0, 0.3), &s, Geometry::new(1.0).unwrap(), 1.0).is_err());
    }

    #[test]
    fn partial_solution_values() {
        let (r, t, p) = (1.7, 0.6, 0.4);
        let v = eval_partial_solution(PartialSolution::Outer00_1, 0.3, r, t, p);
        assert!((v[0].re + 1.0 / (r * r)).abs() < 1e-16 && v[1].norm() == 0.0 && v[2].norm() == 0.0);
        let v = eval_partial_solution(PartialSolution::Inner00_3, 0.3, r, t, p);
        assert!((v[0].re + 2.0 * 0.4 * r / 3.0).abs() < 1e-15);
        assert_eq!("U22_3".parse::<PartialSolution>().unwrap(), PartialSolution::Outer22_3);
        assert!("u33_1".parse::<PartialSolution>().is_err());
    }

    #[test]
    fn partials_match_component_form() {
        let p = phases(0.7, 0.2);
        let g = Geometry::new(1.3).unwrap();
        let c = solve_gm_shear(&p, &gm(), g, 0.2).unwrap();
        for &(r, t, ph) in &[(0.5, 0.3, 0.2), (1.0, 1.2, 2.0), (2.0, 2.5, -1.0), (5.0, 0.1, 3.0)] {
            let side = Side::of(r, g);
            let a = displacement_on_side(&c, &p, side, r, t, ph);
            let b = displacement_from_partials(&c, &p, r, t, ph, side);
            let scale = a.iter().map(|x| x.abs()).fold(0.0, f64::max);
            for i in 0..3 {
                assert!((a[i] - b[i]).abs() < 1e-13 * scale, "{a:?} {b:?}");
            }
        }
    }

    #[test]
    fn continuity_at_interface() {
        let p = phases(0.7, 0.2);
        let g = Geometry::new(1.3).unwrap();
        let c = solve_gm_shear(&p, &gm(), g, 0.2).unwrap();
        for &(t, ph) in &[(0.3, 0.2), (1.2, 2.0), (2.5, -1.0)] {
            let a = displacement_on_side(&c, &p, Side::Inhomogeneity, g.radius, t, ph);
            let b = displacement_on_side(&c, &p, Side::Matrix, g.radius, t, ph);
            for i in 0..3 {
                assert!((a[i] - b[i]).abs() < 1e-13 * a[0].abs().max(a[1].abs()));
            }
        }
    }

    #[test]
    fn pole_is_pure_radial() {
        let p = phases(0.7, 0.2);
        let g = Geometry::new(1.3).unwrap();
        let c = solve_gm_shear(&p, &gm(), g, 0.2).unwrap();
        let u = displacement_3d(&c, &p, g, 0.6, 0.0, 0.7);
        assert_eq!(u[1], 0.0);
        assert_eq!(u[2], 0.0);
        assert!(rel(u[0], -0.6 * c.a0) < 1e-15);
    }

    #[test]
    fn far_field_displacement() {
        let p = phases(0.7, 0.2);
        let g = Geometry::new(1.0).unwrap();
        let c = solve_gm_shear(&p, &gm(), g, 0.2).unwrap();
        let r = 50.0;
        let (t, ph) = (1.1, 0.3);
        let u = displacement_3d(&c, &p, g, r, t, ph);
        let far = Coeff3D { d1: c.d1, ..Default::default() };
        let v = displacement_on_side(&far, &p, Side::Matrix, r, t, ph);
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        for i in 0..3 {
            assert!((u[i] - v[i]).abs() < 1e-4 * n);
        }
    }

    #[test]
    fn dilatation_stress() {
        let p = phases(0.7, 0.2);
        let c = Coeff3D { a0: 0.01, ..Default::default() };
        let s = stress_3d(&c, &p, 0.4, 0.9, 0.3, Side::Inhomogeneity);
        let expect = -3.0 * p.inhomogeneity.derive().k3 * 0.01;
        for v in [s.rr, s.tt, s.pp] {
            assert!(rel(v, expect) < 1e-14);
        }
        assert!(s.rt.abs() < 1e-18 && s.rp.abs() < 1e-18 && s.tp.abs() < 1e-18);
    }

    #[test]
    fn uniform_shear_stress_is_far_field() {
        let p = phases(1.0, 0.3);
        let g = Geometry::new(1.0).unwrap();
        let sd = 0.3;
        let c = solve_gm_shear(&p, &SurfaceParams::classical(), g, sd).unwrap();
        for &(r, t, ph) in &[(0.5, 0.3, 0.2), (2.0, 2.5, -1.0)] {
            let s = stress_3d(&c, &p, r, t, ph, Side::of(r, g));
            let x = spherical_to_cartesian_stress(&s, t, ph);
            let expect = [sd, -sd, 0.0, 0.0, 0.0, 0.0];
            for i in 0..6 {
                assert!((x[i] - expect[i]).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn cartesian_rotation_properties() {
        let s = SphericalStress { rr: 1.0, tt: -0.3, pp: 0.7, rt: 0.2, rp: -0.4, tp: 0.9 };
        let x = spherical_to_cartesian_stress(&s, 0.0, 0.8);
        assert!((x[2] - s.rr).abs() < 1e-15);
        let h = spherical_to_cartesian_stress(&SphericalStress::isotropic(2.5), 1.1, 0.4);
        for i in 0..3 {
            assert!((h[i] - 2.5).abs() < 1e-15 && h[i + 3].abs() < 1e-15);
        }
        let x = spherical_to_cartesian_stress(&s, 1.2, -2.0);
        assert!((x[0] + x[1] + x[2] - s.trace()).abs() < 1e-14);
    }

    #[test]
    fn hydro_limits() {
        let p = phases(1.0, 0.3);
        let g = Geometry::new(1.0).unwrap();
        let k = p.matrix.derive().k3;
        let h = solve_hydro_3d(&p, &SurfaceParams::classical(), g, 0.5).unwrap();
        assert!(rel(h.f1, 0.5 / (3.0 * k)) < 1e-14);
        assert!(rel(h.f2, 0.5 / (3.0 * k)) < 1e-15);
        assert!(h.f3.abs() < 1e-16);

        let p = phases(0.7, 0.2);
        let s = SurfaceParams::gurtin_murdoch(0.05, 0.08, 0.03);
        let h = solve_hydro_3d(&p, &s, g, 0.0).unwrap();
        let den = 4.0 + 3.0 * p.inhomogeneity.derive().k3 + 2.0 * s.derive(g).eta0;
        assert!(rel(h.f1, -(2.0 * 0.03) / den) < 1e-15);
    }

    #[test]
    fn tension_amplitude_decomposition() {
        let p = phases(0.7, 0.2);
        let g = Geometry::new(1.3).unwrap();
        let c = solve_gm_shear(&p, &gm(), g, 0.2).unwrap();
        let a = tension_amplitude(&p, &gm(), g).unwrap();
        let classical = Coeff3D { a0: 0.0, d0: 0.0, ..c };
        for &(r, t, ph) in &[(0.5, 0.3, 0.2), (2.0, 2.5, -1.0)] {
            let side = Side::of(r, g);
            let u = displacement_on_side(&c, &p, side, r, t, ph)[0];
            let v = displacement_on_side(&classical, &p, side, r, t, ph)[0];
            let pw = if side == Side::Inhomogeneity { 1 } else { -2 };
            let extra = a * gm().sigma0 * (r / g.radius).powi(pw);
            assert!((u - v - extra).abs() < 1e-12 * u.abs().max(extra.abs()));
        }
    }
}
