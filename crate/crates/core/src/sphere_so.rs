//! Spherical inhomogeneity with the complete Steigmann–Ogden interface under
//! simple shear: closed-form coefficients, curvature and couple-stress
//! tensors, the closed-form traction jumps and the tension-subtracted
//! problem used for homogenization.
//!
//! Every λ_I/μ_I ratio is written as 2ν_I/(1−2ν_I) so a cavity (μ_I = 0) is
//! a regular input.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::materials::{Geometry, Phases, SurfaceParams};
use crate::sphere_gm::{tension_coefficients, Coeff3D};

/// Coefficients of the two traction-jump equations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SOCoefficientMatrix {
    pub c31: f64,
    pub c32: f64,
    pub c41: f64,
    pub c42: f64,
}

/// Intermediate scalars of the closed-form solution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SOAuxiliary {
    pub e11: f64,
    pub e12: f64,
    pub e21: f64,
    pub e22: f64,
    pub f: f64,
}

impl SOAuxiliary {
    pub fn determinant(&self) -> f64 {
        self.e11 * self.e22 - self.e12 * self.e21
    }
}

pub fn so_matrix(phases: &Phases, surf: &SurfaceParams, g: Geometry) -> Result<SOCoefficientMatrix> {
    phases.inhomogeneity.validate()?;
    surf.validate()?;
    g.validate()?;
    let ri = phases.inhomogeneity.lambda_over_mu();
    let mu_i = phases.inhomogeneity.mu;
    let lambda_i = ri * mu_i;
    let r = g.radius;
    let (mu0, l0, s0) = (surf.mu0, surf.lambda0, surf.sigma0);
    let gamma = surf.derive(g).gamma;
    Ok(SOCoefficientMatrix {
        c31: -2.0 * mu_i + 2.0 / r * (l0 + mu0 - s0) - 6.0 * gamma,
        c32: -3.0 * lambda_i - 6.0 / r * (l0 + mu0) * (3.0 * ri + 7.0) - 6.0 / r * s0 * (ri + 7.0)
            + 6.0 * gamma * (ri - 7.0),
        c41: -mu_i - (3.0 * mu0 + l0 - s0) / r + gamma,
        c42: 8.0 * lambda_i + 7.0 * mu_i + mu0 / r * (19.0 * ri + 35.0) + 3.0 * l0 / r * (3.0 * ri + 7.0)
            - s0 / r * (ri - 7.0)
            - gamma * (ri - 7.0),
    })
}

pub fn so_auxiliary(phases: &Phases, c: &SOCoefficientMatrix) -> SOAuxiliary {
    let mu = phases.matrix.mu;
    let lambda = mu * phases.matrix.lambda_over_mu();
    let ri = phases.inhomogeneity.lambda_over_mu();
    let d = 9.0 * lambda + 14.0 * mu;
    let p = 3.0 * lambda + 10.0 * mu;
    let q = 18.0 * lambda + 44.0 * mu;
    let w = 15.0 * lambda + 34.0 * mu;
    SOAuxiliary {
        e11: 1.0 - (p * c.c31 + q * c.c41) / (4.0 * mu * d),
        e12: -(p * c.c32 + q * c.c42) / (4.0 * mu * d) - (5.0 * ri + 7.0),
        e21: 1.0 - (w * c.c31 + 6.0 * p * c.c41) / (8.0 * mu * d),
        e22: -3.0 * ri - (w * c.c32 + 6.0 * p * c.c42) / (8.0 * mu * d),
        f: 15.0 * (lambda + 2.0 * mu) / d,
    }
}

/// Shear coefficients per unit `D₁` in scaled form `(A₁, A₂R², D₃/R⁵, D₄/R³)`.
pub fn so_scaled_coefficients(phases: &Phases, surf: &SurfaceParams, g: Geometry) -> Result<[f64; 4]> {
    let c = so_matrix(phases, surf, g)?;
    let e = so_auxiliary(phases, &c);
    let det = e.determinant();
    if det == 0.0 || !det.is_finite() {
        return Err(Error::Degenerate { what: "E11*E22-E12*E21", value: det });
    }
    let mu = phases.matrix.mu;
    let lambda = mu * phases.matrix.lambda_over_mu();
    let d = 9.0 * lambda + 14.0 * mu;
    let a1 = e.f * (e.e22 - e.e12) / det;
    let a2 = e.f * (e.e11 - e.e21) / det;
    let (u, v) = (3.0 * lambda + 2.0 * mu, 18.0 * lambda + 20.0 * mu);
    let d3 = -(a1 * (u * c.c31 + v * c.c41) + a2 * (u * c.c32 + v * c.c42) + 24.0 * mu * (mu + lambda)) / (8.0 * mu * d);
    let d4 = (a1 * (c.c31 + 3.0 * c.c41) + a2 * (c.c32 + 3.0 * c.c42) + 5.0 * mu) / d;
    Ok([a1, a2, d3, d4])
}

/// Closed-form Steigmann–Ogden simple-shear solution. The symmetric part
/// `(A₀, D₀)` is the Gurtin–Murdoch one, since the curvature change of a
/// uniform radial displacement vanishes.
pub fn solve_so_shear(phases: &Phases, surf: &SurfaceParams, g: Geometry, sigma_d: f64) -> Result<Coeff3D> {
    if !sigma_d.is_finite() {
        return Err(crate::error::invalid("sigma_d", "must be finite"));
    }
    let [a1, a2, d3, d4] = so_scaled_coefficients(phases, surf, g)?;
    let (a0, d0) = tension_coefficients(phases, surf, g)?;
    let d1 = sigma_d / (2.0 * phases.matrix.mu);
    let r = g.radius;
    Ok(Coeff3D {
        a0,
        a1: a1 * d1,
        a2: a2 * d1 / (r * r),
        d0,
        d1,
        d3: d3 * d1 * r.powi(5),
        d4: d4 * d1 * r.powi(3),
    })
}

/// Shear problem with the pure-tension response removed: the deviatoric
/// coefficients of [`solve_so_shear`] with `A₀ = D₀ = 0`.
pub fn residual_subtraction(phases: &Phases, surf: &SurfaceParams, g: Geometry, sigma_d: f64) -> Result<Coeff3D> {
    let c = solve_so_shear(phases, surf, g, sigma_d)?;
    Ok(Coeff3D { a0: 0.0, d0: 0.0, ..c })
}

/// Displacement components and their angular derivatives at one surface
/// point. Subscripts name the derivatives, e.g. `ur_tp = ∂²u_r/∂θ∂φ`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct DisplacementJet {
    pub ur: f64,
    pub ur_t: f64,
    pub ur_p: f64,
    pub ur_tt: f64,
    pub ur_pp: f64,
    pub ur_tp: f64,
    pub ut: f64,
    pub ut_t: f64,
    pub ut_p: f64,
    pub up: f64,
    pub up_t: f64,
    pub up_p: f64,
}

/// Change-of-curvature tensor on a sphere of radius `r`.
///
/// All three components share the orientation of `κ_φφ`, so rigid motions
/// give zero.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct CurvatureChange {
    pub k_phiphi: f64,
    pub k_phitheta: f64,
    pub k_thetatheta: f64,
}

impl CurvatureChange {
    pub fn from_jet(j: &DisplacementJet, r: f64, theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        let r2 = r * r;
        let bracket = (j.ur_tp - j.ut_p) * s - (j.ur_p - j.up * s) * c + j.ur_tp * s - j.ur_p * c - j.up_t * s * s;
        Self {
            k_phiphi: -(j.ur_pp - j.up_p * s + (j.ur_t - j.ut) * c * s) / (r2 * s * s),
            k_phitheta: -bracket / (2.0 * r2 * s * s),
            k_thetatheta: -(j.ur_tt - j.ut_t) / r2,
        }
    }
}

/// Surface couple-stress tensor; `M_θφ = M_φθ`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct SurfaceCoupleStress {
    pub m_phiphi: f64,
    pub m_phitheta: f64,
    pub m_thetatheta: f64,
}

impl SurfaceCoupleStress {
    pub fn from_curvature(k: &CurvatureChange, surf: &SurfaceParams) -> Self {
        let (chi, zeta) = (surf.chi0, surf.zeta0);
        Self {
            m_phiphi: (2.0 * chi + zeta) * k.k_phiphi + zeta * k.k_thetatheta,
            m_phitheta: 2.0 * chi * k.k_phitheta,
            m_thetatheta: zeta * k.k_phiphi + (2.0 * chi + zeta) * k.k_thetatheta,
        }
    }
}

/// Closed-form traction jumps `σ^{inh} − σ^{mat}` on the interface for a
/// displacement with shear amplitudes `U_r(R)`, `U_θ(R)` and uniform radial
/// part `u₀`:
///
/// ```text
/// rr = normal + rr_amp sin²θ cos2φ
/// rθ = rt_amp sin2θ cos2φ
/// rφ = rp_amp sinθ sin2φ
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JumpClosedForm {
    pub normal: f64,
    pub rr_amp: f64,
    pub rt_amp: f64,
    pub rp_amp: f64,
}

impl JumpClosedForm {
    /// `[rr, rθ, rφ]` at `(θ, φ)`.
    pub fn eval(&self, theta: f64, phi: f64) -> [f64; 3] {
        let s = theta.sin();
        let (s2p, c2p) = (2.0 * phi).sin_cos();
        [
            self.normal + self.rr_amp * s * s * c2p,
            self.rt_amp * (2.0 * theta).sin() * c2p,
            self.rp_amp * s * s2p,
        ]
    }
}

pub fn jump_closed_form(ur: f64, ut: f64, u0: f64, surf: &SurfaceParams, g: Geometry) -> JumpClosedForm {
    let r = g.radius;
    let r2 = r * r;
    let d = surf.derive(g);
    let (mu0, l0, s0) = (surf.mu0, surf.lambda0, surf.sigma0);
    let bend = d.gamma / r * (2.0 * ur - ut);
    let a = 3.0 * l0 + 5.0 * mu0 + s0;
    let b = mu0 + l0 + s0;
    JumpClosedForm {
        normal: -2.0 * s0 / r - 2.0 * d.eta0 * u0 / r,
        rr_amp: (6.0 * b * ut - 4.0 * (mu0 + l0 + 2.0 * s0) * ur) / r2 - 6.0 * bend,
        rt_amp: (-a * ut + 2.0 * b * ur) / r2 + bend,
        rp_amp: 2.0 * (a * ut - 2.0 * b * ur) / r2 - 2.0 * bend,
    }
}
