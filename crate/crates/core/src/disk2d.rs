//! Circular inhomogeneity in plane strain with a Gurtin–Murdoch or
//! Steigmann–Ogden interface under a uniform far-field load.
//!
//! Fields are built from Kolosov–Muskhelishvili potentials that are finite
//! Laurent series in `z`. Displacements follow
//! `2μ(u_r + i u_ϑ) = e^{-iϑ}[κφ − z conj(φ') − conj(ψ)]`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::materials::{Geometry, Phases, Side, SurfaceParams};

/// Uniform in-plane far-field stress.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct FarField2D {
    pub s11: f64,
    pub s22: f64,
    pub s12: f64,
}

impl FarField2D {
    pub fn simple_shear(sigma_d: f64) -> Self {
        Self { s11: sigma_d, s22: -sigma_d, s12: 0.0 }
    }

    pub fn hydrostatic(sigma_h: f64) -> Self {
        Self { s11: sigma_h, s22: sigma_h, s12: 0.0 }
    }

    pub fn is_finite(&self) -> bool {
        self.s11.is_finite() && self.s22.is_finite() && self.s12.is_finite()
    }

    /// Polar components `(σ_rr, σ_ϑϑ, σ_rϑ)` of the far field at angle ϑ.
    pub fn polar(&self, theta: f64) -> [f64; 3] {
        cartesian_to_polar([self.s11, self.s22, self.s12], theta)
    }

    /// `σ₂₂ − σ₁₁ − 2iσ₁₂`, the deviatoric load entering `A₋₁`.
    fn dev(&self) -> Complex64 {
        Complex64::new(self.s22 - self.s11, -2.0 * self.s12)
    }
}

/// Rotates Cartesian `(σ11, σ22, σ12)` to polar `(σ_rr, σ_ϑϑ, σ_rϑ)`.
pub fn cartesian_to_polar(s: [f64; 3], theta: f64) -> [f64; 3] {
    let (sn, cs) = theta.sin_cos();
    let [a, b, t] = s;
    [
        a * cs * cs + b * sn * sn + 2.0 * t * sn * cs,
        a * sn * sn + b * cs * cs - 2.0 * t * sn * cs,
        (b - a) * sn * cs + t * (cs * cs - sn * sn),
    ]
}

/// Rotates polar `(σ_rr, σ_ϑϑ, σ_rϑ)` to Cartesian `(σ11, σ22, σ12)`.
pub fn polar_to_cartesian(s: [f64; 3], theta: f64) -> [f64; 3] {
    cartesian_to_polar(s, -theta)
}

/// Interface coefficients of the disk problem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Coeff2D {
    pub re_a1: f64,
    pub a_m1: Complex64,
    pub a3: Complex64,
    pub delta1: f64,
    pub delta2: f64,
    pub omega0: f64,
    pub omega1: f64,
    pub omega2: f64,
}

/// Christensen–Lo form of the simple-shear solution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChristensenLoCoeff2D {
    pub d1: f64,
    pub a1: f64,
    pub a3: f64,
    pub c3: f64,
}

/// Radial solution under hydrostatic load:
/// `u_r = F1 r` inside and `F2 r + F3 / r^{dim-1}` outside.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HydroCoeff {
    pub f1: f64,
    pub f2: f64,
    pub f3: f64,
    pub dim: u8,
}

impl HydroCoeff {
    pub fn radial_displacement(&self, r: f64, g: Geometry) -> f64 {
        if r < g.radius {
            self.f1 * r
        } else {
            self.f2 * r + self.f3 / r.powi(self.dim as i32 - 1)
        }
    }
}

/// Moduli and interface constants in the combinations the disk formulas use.
#[derive(Debug, Clone, Copy)]
struct Consts {
    mu: f64,
    mu_i: f64,
    kappa: f64,
    kappa_i: f64,
    k2: f64,
    k2_i: f64,
    eta: f64,
    eta1: f64,
    eta2: f64,
    gamma: f64,
    sigma0: f64,
    radius: f64,
}

impl Consts {
    fn new(phases: &Phases, surf: &SurfaceParams, g: Geometry) -> Result<Self> {
        surf.validate()?;
        g.validate()?;
        let m = phases.matrix.derive();
        let i = phases.inhomogeneity.derive();
        let s = surf.derive(g);
        Ok(Self {
            mu: phases.matrix.mu,
            mu_i: phases.inhomogeneity.mu,
            kappa: m.kappa,
            kappa_i: i.kappa,
            k2: m.k2,
            k2_i: i.k2,
            eta: s.eta,
            eta1: s.eta1,
            eta2: s.eta2,
            gamma: s.gamma_2d,
            sigma0: surf.sigma0,
            radius: g.radius,
        })
    }

    fn delta1(&self) -> f64 {
        self.k2_i / 2.0 + self.mu / 2.0 + self.eta
    }

    fn delta2(&self) -> f64 {
        let (mu, mi, k, ki) = (self.mu, self.mu_i, self.kappa, self.kappa_i);
        (mu + k * mi) * (mu * ki + mi)
            + self.eta1 * (3.0 * ki * (mu + k * mi) + k * (mu * ki + mi))
            + 12.0 * k * ki * self.eta * (self.sigma0 / (4.0 * self.radius) + self.gamma)
    }

    fn omegas(&self) -> (f64, f64, f64) {
        (
            self.k2_i - self.k2 + 2.0 * self.eta,
            self.mu_i - self.mu + self.eta1,
            self.mu_i * self.kappa / self.kappa_i - self.mu
                + 3.0 * self.kappa * self.eta1
                + 3.0 * self.eta2,
        )
    }

    fn checked_deltas(&self) -> Result<(f64, f64)> {
        let d1 = self.delta1();
        if !(d1 > 0.0) {
            return Err(Error::Degenerate { what: "delta1", value: d1 });
        }
        let d2 = self.delta2();
        if d2 == 0.0 || !d2.is_finite() {
            return Err(Error::Degenerate { what: "delta2", value: d2 });
        }
        Ok((d1, d2))
    }
}

/// Coefficients for an arbitrary uniform in-plane load.
pub fn solve_general_2d(
    phases: &Phases,
    surf: &SurfaceParams,
    g: Geometry,
    load: FarField2D,
) -> Result<Coeff2D> {
    if !load.is_finite() {
        return Err(crate::error::invalid("load", "far-field stresses must be finite"));
    }
    let k = Consts::new(phases, surf, g)?;
    let (delta1, delta2) = k.checked_deltas()?;
    let (omega0, omega1, omega2) = k.omegas();
    let r = g.radius;
    let kp = (k.kappa + 1.0) / 4.0;
    let re_a1 = (kp * r * (load.s11 + load.s22) - k.sigma0) / (4.0 * delta1);
    let dev = load.dev();
    let a_m1 = -kp * (k.mu * k.kappa_i + k.mu_i + 3.0 * k.kappa_i * k.eta1) / delta2 * r * dev;
    let a3 = -kp * k.kappa_i * k.eta2 / delta2 * r * dev.conj();
    Ok(Coeff2D { re_a1, a_m1, a3, delta1, delta2, omega0, omega1, omega2 })
}

/// Simple-shear entry point (`σ11 = −σ22 = σ_d`), coefficients written out
/// for real `σ_d`.
pub fn solve_simple_shear_2d(
    phases: &Phases,
    surf: &SurfaceParams,
    g: Geometry,
    sigma_d: f64,
) -> Result<Coeff2D> {
    let k = Consts::new(phases, surf, g)?;
    let (delta1, delta2) = k.checked_deltas()?;
    let (omega0, omega1, omega2) = k.omegas();
    let kp = (k.kappa + 1.0) / 2.0;
    let rs = g.radius * sigma_d;
    Ok(Coeff2D {
        re_a1: -k.sigma0 / (4.0 * delta1),
        a_m1: Complex64::from(kp * (k.mu * k.kappa_i + k.mu_i + 3.0 * k.kappa_i * k.eta1) / delta2 * rs),
        a3: Complex64::from(kp * k.kappa_i * k.eta2 / delta2 * rs),
        delta1,
        delta2,
        omega0,
        omega1,
        omega2,
    })
}

/// Christensen–Lo coefficients from a simple-shear solution. Only the real
/// parts of `A₋₁`, `A₃` are used.
pub fn cl_coefficients(
    c: &Coeff2D,
    phases: &Phases,
    surf: &SurfaceParams,
    g: Geometry,
) -> Result<ChristensenLoCoeff2D> {
    let k = Consts::new(phases, surf, g)?;
    let r = g.radius;
    let (am1, a3) = (c.a_m1.re / r, c.a3.re / r);
    let f = 4.0 / (k.kappa + 1.0);
    Ok(ChristensenLoCoeff2D {
        d1: 4.0 * k.mu_i / k.kappa_i * (3.0 * a3 + k.kappa_i * am1),
        a1: 4.0 * k.mu_i / k.kappa_i * a3,
        a3: f * (3.0 * k.eta2 * a3 - c.omega1 * am1),
        c3: f * ((c.omega1 + k.kappa * k.eta2) * am1 - c.omega2 * a3),
    })
}

impl ChristensenLoCoeff2D {
    /// Displacement `(u_r, u_ϑ)` of the Christensen–Lo representation plus the
    /// surface-tension radial term `−σ₀/(2(K_I+μ+2η)) (r/R)^{±1}`.
    ///
    /// The interior branch divides by μ_I and is an error for a cavity.
    pub fn displacement(
        &self,
        phases: &Phases,
        surf: &SurfaceParams,
        g: Geometry,
        sigma_d: f64,
        r: f64,
        theta: f64,
    ) -> Result<(f64, f64)> {
        let k = Consts::new(phases, surf, g)?;
        let big_r = g.radius;
        let rho = r / big_r;
        let tension = -k.sigma0 / (2.0 * (k.k2_i + k.mu + 2.0 * k.eta));
        let (s2, c2) = (2.0 * theta).sin_cos();
        if r < big_r {
            if k.mu_i == 0.0 {
                return Err(Error::Degenerate { what: "mu_i", value: 0.0 });
            }
            let f = big_r / (4.0 * k.mu_i);
            let ur = tension * rho + f * (self.d1 * rho + (k.kappa_i - 3.0) * self.a1 * rho.powi(3)) * c2;
            let ut = f * (-self.d1 * rho + (k.kappa_i + 3.0) * self.a1 * rho.powi(3)) * s2;
            Ok((ur, ut))
        } else {
            let f = big_r / (4.0 * k.mu);
            let q = 1.0 / rho;
            let ur = tension * q
                + f * (2.0 * sigma_d * rho + (k.kappa + 1.0) * self.a3 * q + self.c3 * q.powi(3)) * c2;
            let ut = f * (-2.0 * sigma_d * rho - (k.kappa - 1.0) * self.a3 * q + self.c3 * q.powi(3)) * s2;
            Ok((ur, ut))
        }
    }
}

/// Hydrostatic-load radial solution.
pub fn solve_hydro_2d(
    phases: &Phases,
    surf: &SurfaceParams,
    g: Geometry,
    sigma_h: f64,
) -> Result<HydroCoeff> {
    let k = Consts::new(phases, surf, g)?;
    let r = g.radius;
    let den = 2.0 * (k.k2_i + k.mu + 2.0 * k.eta);
    if !(den > 0.0) {
        return Err(Error::Degenerate { what: "delta1", value: den / 4.0 });
    }
    Ok(HydroCoeff {
        f1: ((k.kappa + 1.0) / 2.0 * sigma_h - k.sigma0 / r) / den,
        f2: sigma_h / (2.0 * k.k2),
        f3: -r * r / den
            * (sigma_h * (k.k2_i / k.k2 - 1.0 + 2.0 * k.eta / k.k2) + k.sigma0 / r),
        dim: 2,
    })
}

/// Finite Laurent series `Σ c_n z^n`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Laurent {
    pub terms: Vec<(i32, Complex64)>,
}

impl Laurent {
    fn push(&mut self, n: i32, c: Complex64) {
        if c != Complex64::new(0.0, 0.0) {
            self.terms.push((n, c));
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.terms.iter().map(|&(n, c)| c * z.powi(n)).sum()
    }

    pub fn derivative(&self) -> Laurent {
        Laurent {
            terms: self
                .terms
                .iter()
                .filter(|(n, _)| *n != 0)
                .map(|&(n, c)| (n - 1, c * n as f64))
                .collect(),
        }
    }
}

/// Complex potentials of both phases.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Potentials2D {
    pub inhomogeneity: (Laurent, Laurent),
    pub matrix: (Laurent, Laurent),
    pub radius: f64,
}

impl Potentials2D {
    pub fn branch(&self, side: Side) -> &(Laurent, Laurent) {
        match side {
            Side::Inhomogeneity => &self.inhomogeneity,
            Side::Matrix => &self.matrix,
        }
    }

    /// `(φ(z), ψ(z))` on the branch selected by |z| against R.
    pub fn at(&self, z: Complex64) -> (Complex64, Complex64) {
        let (phi, psi) = self.branch(if z.norm() < self.radius { Side::Inhomogeneity } else { Side::Matrix });
        (phi.eval(z), psi.eval(z))
    }
}

/// Displacement and polar stress at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FieldSample2D {
    pub r: f64,
    pub theta: f64,
    pub side: Side,
    pub u_r: f64,
    pub u_theta: f64,
    pub s_rr: f64,
    pub s_tt: f64,
    pub s_rt: f64,
}

/// Solved disk problem: inputs plus coefficients.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiskSolution {
    pub phases: Phases,
    pub surface: SurfaceParams,
    pub geometry: Geometry,
    pub load: FarField2D,
    pub coeff: Coeff2D,
    potentials: Potentials2D,
}

impl DiskSolution {
    pub fn solve(phases: Phases, surface: SurfaceParams, geometry: Geometry, load: FarField2D) -> Result<Self> {
        let coeff = solve_general_2d(&phases, &surface, geometry, load)?;
        Self::from_coefficients(phases, surface, geometry, load, coeff)
    }

    /// Wraps externally supplied coefficients (e.g. for verification of a
    /// perturbed set).
    pub fn from_coefficients(
        phases: Phases,
        surface: SurfaceParams,
        geometry: Geometry,
        load: FarField2D,
        coeff: Coeff2D,
    ) -> Result<Self> {
        let potentials = km_potentials(&coeff, load, &phases, &surface, geometry)?;
        Ok(Self { phases, surface, geometry, load, coeff, potentials })
    }

    pub fn potentials(&self) -> &Potentials2D {
        &self.potentials
    }

    pub fn displacement(&self, r: f64, theta: f64) -> (f64, f64) {
        displacement_2d(&self.coeff, self.load, &self.phases, &self.surface, self.geometry, r, theta)
    }

    pub fn stress(&self, r: f64, theta: f64, side: Side) -> [f64; 3] {
        stress_from_potentials(&self.potentials, &self.phases, side, r, theta)
    }

    /// Cartesian stress `(σ11, σ22, σ12)` at `(x, y)`.
    pub fn stress_cartesian(&self, x: f64, y: f64) -> [f64; 3] {
        let r = x.hypot(y);
        let theta = y.atan2(x);
        polar_to_cartesian(self.stress(r, theta, Side::of(r, self.geometry)), theta)
    }

    pub fn sample(&self, r: f64, theta: f64, side: Side) -> FieldSample2D {
        let (u_r, u_theta) = self.displacement(r, theta);
        let [s_rr, s_tt, s_rt] = self.stress(r, theta, side);
        FieldSample2D { r, theta, side, u_r, u_theta, s_rr, s_tt, s_rt }
    }
}

/// Displacement `(u_r, u_ϑ)` at polar point `(r, ϑ)`; the interior branch
/// is used for `r < R`.
pub fn displacement_2d(
    c: &Coeff2D,
    load: FarField2D,
    phases: &Phases,
    surf: &SurfaceParams,
    g: Geometry,
    r: f64,
    theta: f64,
) -> (f64, f64) {
    let m = phases.matrix.derive();
    let i = phases.inhomogeneity.derive();
    let s = surf.derive(g);
    let e = |k: f64| Complex64::from_polar(1.0, k * theta);
    let rho = r / g.radius;
    let w = if r < g.radius {
        c.re_a1 * rho
            + c.a3 * rho.powi(3) * e(2.0)
            + (3.0 / i.kappa * c.a3.conj() * (rho - rho.powi(3)) + c.a_m1 * rho) * e(-2.0)
    } else {
        let k = m.kappa;
        let mu = phases.matrix.mu;
        let q = 1.0 / rho;
        let body = -(k - 1.0) * (c.omega0 * c.re_a1 + surf.sigma0 / 2.0) * q
            + k * (-c.omega1 * c.a_m1 + 3.0 * s.eta2 * c.a3.conj()) * q * e(-2.0)
            + (-c.omega1 * c.a_m1.conj() + 3.0 * s.eta2 * c.a3) * q * e(2.0)
            + ((c.omega1 + k * s.eta2) * c.a_m1.conj() - c.omega2 * c.a3) * q.powi(3) * e(2.0);
        let far = (k - 1.0) * (load.s11 + load.s22) * r / (8.0 * mu) - load.dev() * r * e(-2.0) / (4.0 * mu);
        body / (mu * (k + 1.0)) + far
    };
    (w.re, w.im)
}

/// Kolosov–Muskhelishvili potentials of both phases.
pub fn km_potentials(
    c: &Coeff2D,
    load: FarField2D,
    phases: &Phases,
    surf: &SurfaceParams,
    g: Geometry,
) -> Result<Potentials2D> {
    let m = phases.matrix.derive();
    let i = phases.inhomogeneity.derive();
    let s = surf.derive(g);
    let r = g.radius;
    let mu_i = phases.inhomogeneity.mu;
    let (k, ki) = (m.kappa, i.kappa);

    let mut phi_i = Laurent::default();
    phi_i.push(1, Complex64::from(2.0 * mu_i / (ki - 1.0) * c.re_a1 / r));
    phi_i.push(3, 2.0 * mu_i / ki * c.a3 / r.powi(3));
    let mut psi_i = Laurent::default();
    psi_i.push(1, -2.0 * mu_i * (3.0 / ki * c.a3 + c.a_m1.conj()) / r);

    let f = 2.0 / (k + 1.0);
    let mut phi_m = Laurent::default();
    phi_m.push(-1, f * (-c.omega1 * c.a_m1 + 3.0 * s.eta2 * c.a3.conj()) * r);
    phi_m.push(1, Complex64::from((load.s11 + load.s22) / 4.0));
    let mut psi_m = Laurent::default();
    psi_m.push(-1, Complex64::from(f * (k - 1.0) * (c.omega0 * c.re_a1 + surf.sigma0 / 2.0) * r));
    psi_m.push(-3, f * (-(c.omega1 + k * s.eta2) * c.a_m1 + c.omega2 * c.a3.conj()) * r.powi(3));
    psi_m.push(1, Complex64::new(load.s22 - load.s11, 2.0 * load.s12) / 2.0);

    Ok(Potentials2D { inhomogeneity: (phi_i, psi_i), matrix: (phi_m, psi_m), radius: r })
}

/// Displacement from potentials of the phase on `side`.
pub fn displacement_from_potentials(
    p: &Potentials2D,
    phases: &Phases,
    side: Side,
    r: f64,
    theta: f64,
) -> (f64, f64) {
    let (mat, (phi, psi)) = match side {
        Side::Inhomogeneity => (phases.inhomogeneity, &p.inhomogeneity),
        Side::Matrix => (phases.matrix, &p.matrix),
    };
    let kappa = mat.derive().kappa;
    let z = Complex64::from_polar(r, theta);
    let w = Complex64::from_polar(1.0, -theta)
        * (kappa * phi.eval(z) - z * phi.derivative().eval(z).conj() - psi.eval(z).conj())
        / (2.0 * mat.mu);
    (w.re, w.im)
}

/// Polar stress `(σ_rr, σ_ϑϑ, σ_rϑ)` from the potentials of the phase on
/// `side`.
pub fn stress_from_potentials(p: &Potentials2D, _phases: &Phases, side: Side, r: f64, theta: f64) -> [f64; 3] {
    let (phi, psi) = p.branch(side);
    let z = Complex64::from_polar(r, theta);
    let d1 = phi.derivative();
    let d2 = d1.derivative();
    let sum = 4.0 * d1.eval(z).re;
    let diff = 2.0 * Complex64::from_polar(1.0, 2.0 * theta) * (z.conj() * d2.eval(z) + psi.derivative().eval(z));
    [(sum - diff.re) / 2.0, (sum + diff.re) / 2.0, diff.im / 2.0]
}

/// Polar stress at `(r, ϑ)` on the given side.
pub fn stress_2d(
    c: &Coeff2D,
    load: FarField2D,
    phases: &Phases,
    surf: &SurfaceParams,
    g: Geometry,
    r: f64,
    theta: f64,
    side: Side,
) -> Result<[f64; 3]> {
    let p = km_potentials(c, load, phases, surf, g)?;
    Ok(stress_from_potentials(&p, phases, side, r, theta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::materials::BulkMaterial;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    fn phases(mu_i: f64, nu_i: f64) -> Phases {
        Phases::new(BulkMaterial::new(1.0, 0.3).unwrap(), BulkMaterial::new(mu_i, nu_i).unwrap()).unwrap()
    }

    fn gm() -> SurfaceParams {
        SurfaceParams { mu0: 0.05, lambda0: 0.08, sigma0: 0.03, chi0: 0.0, zeta0: 0.0 }
    }

    #[test]
    fn hydrostatic_has_no_deviatoric_coefficients() {
        let p = phases(0.7, 0.2);
        let g = Geometry::new(1.3).unwrap();
        let c = solve_general_2d(&p, &gm(), g, FarField2D::hydrostatic(0.4)).unwrap();
        assert_eq!(c.a_m1, Complex64::new(0.0, 0.0));
        assert_eq!(c.a3, Complex64::new(0.0, 0.0));
        let h = solve_hydro_2d(&p, &gm(), g, 0.4).unwrap();
        assert!(rel(c.re_a1 / g.radius, h.f1) < 1e-14);
    }

    #[test]
    fn unloaded_tension_free_is_zero() {
        let p = phases(0.7, 0.2);
        let s = SurfaceParams { sigma0: 0.0, ..gm() };
        let c = solve_general_2d(&p, &s, Geometry::new(1.0).unwrap(), FarField2D::default()).unwrap();
        assert_eq!(c.re_a1, 0.0);
        assert_eq!(c.a_m1.norm(), 0.0);
        assert_eq!(c.a3.norm(), 0.0);
    }

    #[test]
    fn homogeneous_classical_is_far_field() {
        let p = phases(1.0, 0.3);
        let g = Geometry::new(1.0).unwrap();
        let sd = 0.2;
        let sol = DiskSolution::solve(p, SurfaceParams::classical(), g, FarField2D::simple_shear(sd)).unwrap();
        let k = 1.8;
        let d2 = (1.0 + k) * (k + 1.0);
        let expect = (k + 1.0) / 2.0 * (k + 1.0) / d2 * sd;
        assert!(rel(sol.coeff.a_m1.re, expect) < 1e-14);
        assert_eq!(sol.coeff.a3.norm(), 0.0);
        for &(r, t) in &[(0.3, 0.2), (1.0, 1.0), (2.5, -0.7), (7.0, 2.9)] {
            let (ur, ut) = sol.displacement(r, t);
            let far = sd * r / 2.0;
            assert!((ur - far * (2.0 * t).cos()).abs() < 1e-13 * far);
            assert!((ut + far * (2.0 * t).sin()).abs() < 1e-13 * far);
            let s = sol.stress(r, t, Side::of(r, g));
            let f = FarField2D::simple_shear(sd).polar(t);
            for j in 0..3 {
                assert!((s[j] - f[j]).abs() < 1e-13 * sd);
            }
        }
    }

    #[test]
    fn simple_shear_fast_path_matches_general() {
        let p = phases(0.7, 0.2);
        let g = Geometry::new(1.3).unwrap();
        let s = SurfaceParams { chi0: 0.01, zeta0: 0.004, ..gm() };
        let a = solve_general_2d(&p, &s, g, FarField2D::simple_shear(0.3)).unwrap();
        let b = solve_simple_shear_2d(&p, &s, g, 0.3).unwrap();
        assert!((a.re_a1 - b.re_a1).abs() < 1e-15);
        assert!((a.a_m1 - b.a_m1).norm() < 1e-15);
        assert!((a.a3 - b.a3).norm() < 1e-15);
        assert!(a.a_m1.im == 0.0 && a.a3.im == 0.0);
    }

    #[test]
    fn displacement_continuous_at_interface() {
        let p = phases(0.7, 0.2);
        let g = Geometry::new(1.3).unwrap();
        let s = SurfaceParams { chi0: 0.01, zeta0: 0.004, ..gm() };
        let load = FarField2D { s11: 0.4, s22: -0.1, s12: 0.25 };
        let c = solve_general_2d(&p, &s, g, load).unwrap();
        for k in 0..16 {
            let t = k as f64 * 0.39;
            let inner = displacement_2d(&c, load, &p, &s, g, g.radius * (1.0 - 1e-15), t);
            let outer = displacement_2d(&c, load, &p, &s, g, g.radius, t);
            let scale = inner.0.hypot(inner.1).max(1e-300);
            assert!((inner.0 - outer.0).abs() < 1e-13 * scale, "{inner:?} {outer:?}");
            assert!((inner.1 - outer.1).abs() < 1e-13 * scale);
        }
    }

    #[test]
    fn potentials_reproduce_displacement() {
        let p = phases(0.7, 0.2);
        let g = Geometry::new(1.3).unwrap();
        let s = SurfaceParams { chi0: 0.01, zeta0: 0.004, ..gm() };
        let load = FarField2D { s11: 0.4, s22: -0.1, s12: 0.25 };
        let sol = DiskSolution::solve(p, s, g, load).unwrap();
        for &(r, t) in &[(0.4, 0.3), (1.1, 2.0), (1.3, -1.0), (2.0, 0.9), (9.0, 4.0)] {
            let side = Side::of(r, g);
            let a = sol.displacement(r, t);
            let b = displacement_from_potentials(sol.potentials(), &p, side, r, t);
            let scale = a.0.hypot(a.1);
            assert!((a.0 - b.0).abs() < 1e-12 * scale && (a.1 - b.1).abs() < 1e-12 * scale);
        }
    }

    #[test]
    fn far_field_only_potentials() {
        let p = phases(1.0, 0.3);
        let load = FarField2D { s11: 0.4, s22: -0.1, s12: 0.25 };
        let zero = Coeff2D {
            re_a1: 0.0,
            a_m1: Complex64::new(0.0, 0.0),
            a3: Complex64::new(0.0, 0.0),
            delta1: 1.0,
            delta2: 1.0,
            omega0: 0.0,
            omega1: 0.0,
            omega2: 0.0,
        };
        let pot = km_potentials(&zero, load, &p, &SurfaceParams::classical(), Geometry::new(1.0).unwrap()).unwrap();
        let z = Complex64::new(3.0, 4.0);
        let (phi, psi) = pot.at(z);
        assert!((phi - z * 0.3 / 4.0).norm() < 1e-15);
        assert!((psi - Complex64::new(-0.5, 0.5) * z / 2.0).norm() < 1e-15);
        let pot = km_potentials(&zero, FarField2D::default(), &p, &SurfaceParams::classical(), Geometry::new(1.0).unwrap())
            .unwrap();
        assert_eq!(pot.at(z), (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)));
    }

    #[test]
    fn far_field_decay() {
        let p = phases(2.0, 0.25);
        let g = Geometry::new(1.0).unwrap();
        let sd = 0.1;
        let sol = DiskSolution::solve(p, gm(), g, FarField2D::simple_shear(sd)).unwrap();
        let r = 100.0;
        let t = 0.3;
        let (ur, _) = sol.displacement(r, t);
        let far = sd * r / 2.0 * (2.0 * t).cos();
        assert!(rel(ur, far) < 1e-3);
    }

    #[test]
    fn tension_only_is_radial() {
        let p = phases(0.7, 0.2);
        let g = Geometry::new(1.3).unwrap();
        let sol = DiskSolution::solve(p, gm(), g, FarField2D::default()).unwrap();
        let (a, _) = sol.displacement(0.5, 0.0);
        for &(r, t) in &[(0.5, 1.0), (1.0, 2.0), (2.0, 0.4), (4.0, 3.0)] {
            let (ur, ut) = sol.displacement(r, t);
            assert!(ut.abs() < 1e-16);
            if r < g.radius {
                assert!(rel(ur, a * r / 0.5) < 1e-13);
            } else {
                let (b, _) = sol.displacement(2.0, 0.0);
                assert!(rel(ur, b * 2.0 / r) < 1e-13);
            }
        }
    }

    #[test]
    fn hydro_limits() {
        let p = phases(1.0, 0.3);
        let g = Geometry::new(1.0).unwrap();
        let h = solve_hydro_2d(&p, &SurfaceParams::classical(), g, 0.5).unwrap();
        let k2 = p.matrix.derive().k2;
        assert!(rel(h.f1, 0.5 / (2.0 * k2)) < 1e-15);
        assert!(rel(h.f2, 0.5 / (2.0 * k2)) < 1e-15);
        assert!(h.f3.abs() < 1e-16);

        let s = SurfaceParams { sigma0: 0.02, ..SurfaceParams::classical() };
        let p = phases(0.7, 0.2);
        let h = solve_hydro_2d(&p, &s, g, 0.0).unwrap();
        let ki = p.inhomogeneity.derive().k2;
        assert!(h.f1 < 0.0);
        assert!(rel(h.f1, -0.02 / (2.0 * (ki + 1.0))) < 1e-15);
    }

    #[test]
    fn hydro_coefficients_match_general_fields() {
        let p = phases(2.0, 0.3);
        let g = Geometry::new(1.0).unwrap();
        let s = SurfaceParams { mu0: 0.05, lambda0: 0.1, sigma0: 0.01, chi0: 0.0, zeta0: 0.0 };
        let h = solve_hydro_2d(&p, &s, g, 1.0).unwrap();
        let sol = DiskSolution::solve(p, s, g, FarField2D::hydrostatic(1.0)).unwrap();
        for &r in &[0.3, 0.9, 1.0, 1.7, 5.0] {
            let (ur, _) = sol.displacement(r, 0.4);
            assert!(rel(ur, h.radial_displacement(r, g)) < 1e-13);
        }
    }

    #[test]
    fn christensen_lo_form() {
        let p = phases(0.7, 0.2);
        let g = Geometry::new(1.3).unwrap();
        let s = SurfaceParams { chi0: 0.01, zeta0: 0.004, ..gm() };
        let sd = 0.3;
        let c = solve_simple_shear_2d(&p, &s, g, sd).unwrap();
        let cl = cl_coefficients(&c, &p, &s, g).unwrap();
        let ki = p.inhomogeneity.derive().kappa;
        assert!(rel(cl.a1, 4.0 * 0.7 / ki * c.a3.re / g.radius) < 1e-15);
        for &(r, t) in &[(0.4, 0.3), (1.1, 2.0), (1.3, -1.0), (2.0, 0.9)] {
            let a = displacement_2d(&c, FarField2D::simple_shear(sd), &p, &s, g, r, t);
            let b = cl.displacement(&p, &s, g, sd, r, t).unwrap();
            let scale = a.0.hypot(a.1);
            assert!((a.0 - b.0).abs() < 1e-12 * scale && (a.1 - b.1).abs() < 1e-12 * scale);
        }

        let unit = Coeff2D { a3: Complex64::new(0.0, 0.0), a_m1: Complex64::from(g.radius), ..c };
        let cl = cl_coefficients(&unit, &p, &s, g).unwrap();
        assert_eq!(cl.a1, 0.0);
        assert!(rel(cl.d1, 4.0 * 0.7) < 1e-15);
    }

    #[test]
    fn degenerate_delta_rejected() {
        let p = phases(0.0, 0.3);
        let s = SurfaceParams { mu0: -1.2, lambda0: 0.0, ..SurfaceParams::classical() };
        assert!(matches!(
            solve_general_2d(&p, &s, Geometry::new(1.0).unwrap(), FarField2D::simple_shear(1.0)),
            Err(Error::Degenerate { what: "delta1", .. })
        ));
    }
}
