//! Independent numerical checks of the solvers.
//!
//! The traction-jump checks rebuild the interface loads from the surface
//! stress and couple-stress constitutive laws, differentiating the solved
//! displacement numerically, and compare them with the bulk stress jump.
//! The linear-system oracles assemble the interface equations directly and
//! solve them numerically. Nothing here calls the closed-form coefficient
//! solutions being checked.

use std::f64::consts::PI;

use nalgebra::{SMatrix, SVector};
use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use crate::disk2d::DiskSolution;
use crate::error::Result;
use crate::linalg;
use crate::materials::{Geometry, InterfaceModel, Phases, Side, SurfaceParams};
use crate::sphere_gm::{stress_3d, Coeff3D, SphereField};
use crate::sphere_so::{jump_closed_form, CurvatureChange, DisplacementJet, JumpClosedForm, SurfaceCoupleStress};

/// Surface stress tensor on the sphere.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct SurfaceStressTensor {
    pub t_thetatheta: f64,
    pub t_phiphi: f64,
    pub t_phitheta: f64,
    pub t_thetaphi: f64,
    pub t_thetar: f64,
    pub t_phir: f64,
}

/// Surface stress from a displacement jet at `(r, θ)`.
pub fn surface_t(j: &DisplacementJet, surf: &SurfaceParams, r: f64, theta: f64) -> SurfaceStressTensor {
    let (s, c) = theta.sin_cos();
    let (mu0, l0, s0) = (surf.mu0, surf.lambda0, surf.sigma0);
    let hoop = (j.up_p + j.ut * c + j.ur * s) / (r * s);
    let merid = (j.ut_t + j.ur) / r;
    let twist = j.ut_p - j.up * c;
    SurfaceStressTensor {
        t_thetatheta: s0 + (l0 + s0) * hoop + (l0 + 2.0 * mu0) * merid,
        t_phiphi: s0 + (l0 + 2.0 * mu0) * hoop + (l0 + s0) * merid,
        t_phitheta: (mu0 * twist + (mu0 - s0) * j.up_t * s) / (r * s),
        t_thetaphi: ((mu0 - s0) * twist + mu0 * j.up_t * s) / (r * s),
        t_thetar: s0 / r * (j.ur_t - j.ut),
        t_phir: s0 / (r * s) * (j.ur_p - j.up * s),
    }
}

/// Surface couple stress from a displacement jet at `(r, θ)`.
pub fn surface_m(j: &DisplacementJet, surf: &SurfaceParams, r: f64, theta: f64) -> SurfaceCoupleStress {
    SurfaceCoupleStress::from_curvature(&CurvatureChange::from_jet(j, r, theta), surf)
}

/// Central-difference jet of `u(θ, φ)` with step `h`.
pub fn fd_jet(u: impl Fn(f64, f64) -> [f64; 3], theta: f64, phi: f64, h: f64) -> DisplacementJet {
    let c = u(theta, phi);
    let tp = u(theta + h, phi);
    let tm = u(theta - h, phi);
    let pp = u(theta, phi + h);
    let pm = u(theta, phi - h);
    let d1 = |a: f64, b: f64| (a - b) / (2.0 * h);
    let d2 = |a: f64, m: f64, b: f64| (a - 2.0 * m + b) / (h * h);
    let mixed = (u(theta + h, phi + h)[0] - u(theta + h, phi - h)[0] - u(theta - h, phi + h)[0]
        + u(theta - h, phi - h)[0])
        / (4.0 * h * h);
    DisplacementJet {
        ur: c[0],
        ur_t: d1(tp[0], tm[0]),
        ur_p: d1(pp[0], pm[0]),
        ur_tt: d2(tp[0], c[0], tm[0]),
        ur_pp: d2(pp[0], c[0], pm[0]),
        ur_tp: mixed,
        ut: c[1],
        ut_t: d1(tp[1], tm[1]),
        ut_p: d1(pp[1], pm[1]),
        up: c[2],
        up_t: d1(tp[2], tm[2]),
        up_p: d1(pp[2], pm[2]),
    }
}

/// Interface loads `[rr, rθ, rφ]` assembled from the surface tensors at
/// `(θ, φ)` with nested central differences of step `h`.
pub fn jump_rhs_fd(field: &dyn SphereField, surf: &SurfaceParams, model: InterfaceModel, theta: f64, phi: f64, h: f64) -> [f64; 3] {
    let r = field.geometry().radius;
    let u = |t: f64, p: f64| field.displacement(r, t, p, Side::Matrix);
    let tensors = |t: f64, p: f64| {
        let j = fd_jet(u, t, p, h);
        (surface_t(&j, surf, r, t), surface_m(&j, surf, r, t))
    };
    let (t0, m0) = tensors(theta, phi);
    let (tn, mn) = tensors(theta + h, phi);
    let (ts, ms) = tensors(theta - h, phi);
    let (te, me) = tensors(theta, phi + h);
    let (tw, mw) = tensors(theta, phi - h);
    let d = |a: f64, b: f64| (a - b) / (2.0 * h);
    let (s, c) = theta.sin_cos();

    let rr = (d(te.t_phir, tw.t_phir) + t0.t_thetar * c
        + (d(tn.t_thetar, ts.t_thetar) - t0.t_phiphi - t0.t_thetatheta) * s)
        / (r * s);
    let rt = (d(te.t_phitheta, tw.t_phitheta)
        + (d(tn.t_thetatheta, ts.t_thetatheta) + t0.t_thetar) * s
        + (t0.t_thetatheta - t0.t_phiphi) * c)
        / (r * s);
    let rp = (d(te.t_phiphi, tw.t_phiphi)
        + (d(tn.t_thetaphi, ts.t_thetaphi) + t0.t_phir) * s
        + (t0.t_phitheta + t0.t_thetaphi) * c)
        / (r * s);
    if !model.has_bending() {
        return [rr, rt, rp];
    }

    let d2 = |a: f64, m: f64, b: f64| (a - 2.0 * m + b) / (h * h);
    let diag = |dt: f64, dp: f64| tensors(theta + dt, phi + dp).1.m_phitheta;
    let m_pt_tp = (diag(h, h) - diag(h, -h) - diag(-h, h) + diag(-h, -h)) / (4.0 * h * h);
    let m_pp_pp = d2(me.m_phiphi, m0.m_phiphi, mw.m_phiphi);
    let m_tt_tt = d2(mn.m_thetatheta, m0.m_thetatheta, ms.m_thetatheta);
    let m_pt_p = d(me.m_phitheta, mw.m_phitheta);
    let m_pt_t = d(mn.m_phitheta, ms.m_phitheta);
    let m_tt_t = d(mn.m_thetatheta, ms.m_thetatheta);
    let m_pp_t = d(mn.m_phiphi, ms.m_phiphi);
    let m_pp_p = d(me.m_phiphi, mw.m_phiphi);
    let split = m0.m_thetatheta - m0.m_phiphi;

    let brr = (m_pp_pp + 2.0 * m_pt_tp * s + m_tt_tt * s * s + 2.0 * m_pt_p * c + (2.0 * m_tt_t - m_pp_t) * c * s
        - split * s * s)
        / (r * r * s * s);
    let brt = (m_pt_p + split * c + m_tt_t * s) / (r * r * s);
    let brp = (m_pp_p + 2.0 * m0.m_phitheta * c + m_pt_t * s) / (r * r * s);
    [rr + brr, rt + brt, rp + brp]
}

/// One Richardson level on [`jump_rhs_fd`] with steps `h` and `2h`.
pub fn jump_rhs(field: &dyn SphereField, surf: &SurfaceParams, model: InterfaceModel, theta: f64, phi: f64, h: f64) -> [f64; 3] {
    let fine = jump_rhs_fd(field, surf, model, theta, phi, h);
    let coarse = jump_rhs_fd(field, surf, model, theta, phi, 2.0 * h);
    [0, 1, 2].map(|i| (4.0 * fine[i] - coarse[i]) / 3.0)
}

/// Bulk traction jump `σ^{inh} − σ^{mat}` on the interface, with the
/// largest stress component on either side as a magnitude reference.
pub fn traction_jump(field: &dyn SphereField, theta: f64, phi: f64) -> ([f64; 3], f64) {
    let r = field.geometry().radius;
    let a = field.stress(r, theta, phi, Side::Inhomogeneity);
    let b = field.stress(r, theta, phi, Side::Matrix);
    let scale = [a.rr, a.tt, a.pp, a.rt, a.rp, a.tp, b.rr, b.tt, b.pp, b.rt, b.rp, b.tp]
        .iter()
        .fold(0.0_f64, |m, x| m.max(x.abs()));
    ([a.rr - b.rr, a.rt - b.rt, a.rp - b.rp], scale)
}

/// Surface grid for the sphere checks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JumpGrid {
    pub n_theta: usize,
    pub n_phi: usize,
    /// Finest angular step of the difference stencils. The couple-stress
    /// loads are nested fourth differences, so much smaller steps are
    /// dominated by rounding.
    pub step: f64,
    /// Polar distance kept clear of each pole. The loads carry `1/sin²θ`
    /// factors, so difference errors grow toward the poles.
    pub pole_band: f64,
}

impl Default for JumpGrid {
    fn default() -> Self {
        Self { n_theta: 96, n_phi: 192, step: PI / 256.0, pole_band: PI / 16.0 }
    }
}

impl JumpGrid {
    /// Polar angles, equally spaced on `[b, π − b]` with `b` the pole band.
    pub fn thetas(&self) -> Vec<f64> {
        let lo = self.pole_band;
        let hi = PI - lo;
        (0..self.n_theta).map(|i| lo + (hi - lo) * i as f64 / (self.n_theta - 1) as f64).collect()
    }

    pub fn phis(&self) -> Vec<f64> {
        (0..self.n_phi).map(|j| 2.0 * PI * j as f64 / self.n_phi as f64).collect()
    }
}

/// Max relative residual per component `[rr, rθ, rφ]`.
///
/// Each component's max absolute mismatch over the grid is divided by the
/// largest magnitude, over the grid, of any stress component on either side
/// of the interface and of the predicted jump.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JumpResidual {
    /// Richardson-extrapolated residual.
    pub components: [f64; 3],
    /// Residual with plain central differences at the finest step.
    pub raw: [f64; 3],
    /// Residual with plain central differences at twice the finest step.
    pub raw_coarse: [f64; 3],
    pub n_theta: usize,
    pub n_phi: usize,
    pub step: f64,
}

impl JumpResidual {
    pub fn max(&self) -> f64 {
        self.components.iter().cloned().fold(0.0, f64::max)
    }
}

#[derive(Clone, Copy, Default)]
struct Acc {
    err: [[f64; 3]; 3],
    scale: [f64; 3],
}

impl Acc {
    fn merge(mut self, o: Acc) -> Acc {
        for k in 0..3 {
            for i in 0..3 {
                self.err[k][i] = self.err[k][i].max(o.err[k][i]);
            }
            self.scale[k] = self.scale[k].max(o.scale[k]);
        }
        self
    }

    fn finish(self, n_theta: usize, n_phi: usize, step: f64) -> JumpResidual {
        let rel = |e: [f64; 3]| [0, 1, 2].map(|i| if self.scale[i] > 0.0 { e[i] / self.scale[i] } else { e[i] });
        JumpResidual { components: rel(self.err[0]), raw: rel(self.err[1]), raw_coarse: rel(self.err[2]), n_theta, n_phi, step }
    }
}

/// Traction-jump residual of a sphere field on `grid`.
pub fn jump_residual_3d(field: &dyn SphereField, surf: &SurfaceParams, model: InterfaceModel, grid: &JumpGrid) -> JumpResidual {
    let phis = grid.phis();
    let h = grid.step;
    grid.thetas()
        .par_iter()
        .map(|&theta| {
            let mut acc = Acc::default();
            for &phi in &phis {
                let (lhs, scale) = traction_jump(field, theta, phi);
                let fine = jump_rhs_fd(field, surf, model, theta, phi, h);
                let coarse = jump_rhs_fd(field, surf, model, theta, phi, 2.0 * h);
                for i in 0..3 {
                    let rich = (4.0 * fine[i] - coarse[i]) / 3.0;
                    acc.err[0][i] = acc.err[0][i].max((lhs[i] - rich).abs());
                    acc.err[1][i] = acc.err[1][i].max((lhs[i] - fine[i]).abs());
                    acc.err[2][i] = acc.err[2][i].max((lhs[i] - coarse[i]).abs());
                    acc.scale[i] = acc.scale[i].max(scale).max(rich.abs());
                }
            }
            acc
        })
        .reduce(Acc::default, Acc::merge)
        .finish(grid.n_theta, grid.n_phi, grid.step)
}

/// Relative mismatch between a closed-form jump and the difference-based
/// interface loads on `grid`, normalized like [`jump_residual_3d`].
pub fn closed_form_mismatch(
    field: &dyn SphereField,
    closed: &JumpClosedForm,
    surf: &SurfaceParams,
    model: InterfaceModel,
    grid: &JumpGrid,
) -> f64 {
    let phis = grid.phis();
    let h = grid.step;
    let acc = grid
        .thetas()
        .par_iter()
        .map(|&theta| {
            let mut acc = Acc::default();
            for &phi in &phis {
                let (_, scale) = traction_jump(field, theta, phi);
                let rhs = jump_rhs(field, surf, model, theta, phi, h);
                let cf = closed.eval(theta, phi);
                for i in 0..3 {
                    acc.err[0][i] = acc.err[0][i].max((rhs[i] - cf[i]).abs());
                    acc.scale[i] = acc.scale[i].max(scale).max(cf[i].abs());
                }
            }
            acc
        })
        .reduce(Acc::default, Acc::merge)
        .finish(grid.n_theta, grid.n_phi, grid.step);
    acc.max()
}

/// Spectral derivatives of a periodic real sequence, orders 1 through 4.
fn spectral_derivatives(samples: &[f64]) -> [Vec<f64>; 4] {
    let n = samples.len();
    let mut planner = FftPlanner::new();
    let fwd = planner.plan_fft_forward(n);
    let inv = planner.plan_fft_inverse(n);
    let mut spec: Vec<Complex64> = samples.iter().map(|&x| Complex64::from(x)).collect();
    fwd.process(&mut spec);
    let wave = |k: usize| -> f64 {
        if 2 * k == n {
            0.0
        } else if k < n / 2 {
            k as f64
        } else {
            k as f64 - n as f64
        }
    };
    [1, 2, 3, 4].map(|order| {
        let mut d: Vec<Complex64> = spec
            .iter()
            .enumerate()
            .map(|(k, &c)| c * Complex64::new(0.0, wave(k)).powi(order))
            .collect();
        inv.process(&mut d);
        d.iter().map(|c| c.re / n as f64).collect()
    })
}

/// Traction-jump residual of a disk solution at `n` equally spaced angles on
/// the interface. Angular derivatives are spectral and exact for the modes
/// present, so all three reported residual sets coincide.
pub fn jump_residual_2d(sol: &DiskSolution, n: usize) -> JumpResidual {
    let r = sol.geometry.radius;
    let thetas: Vec<f64> = (0..n).map(|i| 2.0 * PI * i as f64 / n as f64).collect();
    let (ur, ut): (Vec<f64>, Vec<f64>) = thetas.iter().map(|&t| sol.displacement(r, t)).unzip();
    let [ur1, ur2, ur3, ur4] = spectral_derivatives(&ur);
    let [ut1, ut2, ut3, _] = spectral_derivatives(&ut);
    let s = &sol.surface;
    let stiff = s.lambda0 + 2.0 * s.mu0;
    let bend = 2.0 * s.chi0 + s.zeta0;
    let s0 = s.sigma0;
    let r2 = r * r;
    let r4 = r2 * r2;
    let mut acc = Acc::default();
    for i in 0..n {
        let t = thetas[i];
        let j_rr = -s0 / r + s0 / r2 * (ur2[i] - ut1[i]) - stiff / r2 * (ut1[i] + ur[i]) - bend / r4 * (ur4[i] - ut3[i]);
        let j_rt = s0 / r2 * (ur1[i] - ut[i]) + stiff / r2 * (ut2[i] + ur1[i]) - bend / r4 * (ur3[i] - ut2[i]);
        let a = sol.stress(r, t, Side::Inhomogeneity);
        let b = sol.stress(r, t, Side::Matrix);
        let scale = a.iter().chain(b.iter()).fold(0.0_f64, |m, x| m.max(x.abs()));
        let err = [(a[0] - b[0] - j_rr).abs(), (a[2] - b[2] - j_rt).abs(), 0.0];
        for k in 0..3 {
            for c in 0..2 {
                acc.err[k][c] = acc.err[k][c].max(err[c]);
            }
        }
        acc.scale[0] = acc.scale[0].max(scale).max(j_rr.abs());
        acc.scale[1] = acc.scale[1].max(scale).max(j_rt.abs());
    }
    acc.finish(n, 1, 2.0 * PI / n as f64)
}

/// `|div σ| r / max|σ|` by central differences of step `h` in Cartesian
/// coordinates, for a stress given as `(σ11, σ22, σ12)` in the plane.
pub fn equilibrium_residual_2d(stress: impl Fn(f64, f64) -> [f64; 3], x: f64, y: f64, h: f64) -> f64 {
    let (xp, xm, yp, ym) = (stress(x + h, y), stress(x - h, y), stress(x, y + h), stress(x, y - h));
    let fx = (xp[0] - xm[0] + yp[2] - ym[2]) / (2.0 * h);
    let fy = (xp[2] - xm[2] + yp[1] - ym[1]) / (2.0 * h);
    let scale = [xp, xm, yp, ym].iter().flatten().fold(0.0_f64, |m, v| m.max(v.abs()));
    if scale == 0.0 {
        return 0.0;
    }
    fx.hypot(fy) * x.hypot(y) / scale
}

/// Three-dimensional analogue of [`equilibrium_residual_2d`] for stresses
/// `(σxx, σyy, σzz, σxy, σxz, σyz)`.
pub fn equilibrium_residual_3d(stress: impl Fn(f64, f64, f64) -> [f64; 6], p: [f64; 3], h: f64) -> f64 {
    let [x, y, z] = p;
    let e = [
        (stress(x + h, y, z), stress(x - h, y, z)),
        (stress(x, y + h, z), stress(x, y - h, z)),
        (stress(x, y, z + h), stress(x, y, z - h)),
    ];
    // row i of σ in Voigt-like storage
    let idx = [[0, 3, 4], [3, 1, 5], [4, 5, 2]];
    let mut f = [0.0; 3];
    for (i, row) in idx.iter().enumerate() {
        for (j, &k) in row.iter().enumerate() {
            f[i] += (e[j].0[k] - e[j].1[k]) / (2.0 * h);
        }
    }
    let scale = e.iter().flat_map(|(a, b)| a.iter().chain(b.iter())).fold(0.0_f64, |m, v| m.max(v.abs()));
    if scale == 0.0 {
        return 0.0;
    }
    (f[0] * f[0] + f[1] * f[1] + f[2] * f[2]).sqrt() * (x * x + y * y + z * z).sqrt() / scale
}

/// Max [`equilibrium_residual_3d`] over `points`, step `1e-5 R`.
pub fn equilibrium_residual_sphere(field: &dyn SphereField, points: &[[f64; 3]]) -> f64 {
    let h = 1e-5 * field.geometry().radius;
    points
        .par_iter()
        .map(|&p| equilibrium_residual_3d(|x, y, z| field.stress_cartesian(x, y, z), p, h))
        .reduce(|| 0.0, f64::max)
}

/// Max [`equilibrium_residual_2d`] over `points`, step `1e-5 R`.
pub fn equilibrium_residual_disk(sol: &DiskSolution, points: &[[f64; 2]]) -> f64 {
    let h = 1e-5 * sol.geometry.radius;
    points
        .par_iter()
        .map(|&[x, y]| equilibrium_residual_2d(|a, b| sol.stress_cartesian(a, b), x, y, h))
        .reduce(|| 0.0, f64::max)
}

/// Interface systems that can be solved numerically as oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LinearSystem {
    /// Gurtin–Murdoch traction conditions; bending constants are ignored.
    GurtinMurdoch,
    /// Full Steigmann–Ogden traction conditions.
    SteigmannOgden,
}

/// Unknowns `(A₀, A₁, A₂R², D₀/R³, D₃/R⁵, D₄/R³)` as coefficients.
fn unscale(x: &[f64; 6], d1: f64, r: f64) -> Coeff3D {
    Coeff3D {
        a0: x[0],
        a1: x[1],
        a2: x[2] / (r * r),
        d0: x[3] * r.powi(3),
        d1,
        d3: x[4] * r.powi(5),
        d4: x[5] * r.powi(3),
    }
}

/// Interface conditions evaluated for a coefficient set: continuity of the
/// uniform, radial-shear and tangential-shear amplitudes, then the normal
/// uniform, normal shear and tangential shear traction-jump amplitudes.
/// Traction rows are measured against the largest interface stress.
/// Bulk stresses come from the strain of the representation, the loads from
/// the surface constitutive laws.
fn interface_conditions(phases: &Phases, surf: &SurfaceParams, g: Geometry, c: &Coeff3D) -> ([f64; 6], [f64; 6]) {
    let r = g.radius;
    let pi = c.radial_profile(phases, r, Side::Inhomogeneity);
    let pm = c.radial_profile(phases, r, Side::Matrix);
    let jump = jump_closed_form(pm.u_r, pm.u_theta, pm.a, surf, g);
    let d = |theta: f64| {
        let a = stress_3d(c, phases, r, theta, 0.0, Side::Inhomogeneity);
        let b = stress_3d(c, phases, r, theta, 0.0, Side::Matrix);
        let big = [a.rr, a.tt, a.pp, a.rt, b.rr, b.tt, b.pp, b.rt].iter().fold(0.0_f64, |m, x| m.max(x.abs()));
        (a.rr - b.rr, a.rt - b.rt, big)
    };
    let (n_rr, _, n_s) = d(0.0);
    let (e_rr, _, e_s) = d(PI / 2.0);
    let (_, q_rt, q_s) = d(PI / 4.0);
    let s_all = n_s.max(e_s).max(q_s);
    let res = [
        pi.a - pm.a,
        pi.u_r - pm.u_r,
        pi.u_theta - pm.u_theta,
        n_rr - jump.normal,
        e_rr - n_rr - jump.rr_amp,
        q_rt - jump.rt_amp,
    ];
    let mags = [
        pi.a.abs().max(pm.a.abs()),
        pi.u_r.abs().max(pm.u_r.abs()),
        pi.u_theta.abs().max(pm.u_theta.abs()),
        s_all.max(jump.normal.abs()),
        s_all.max(jump.rr_amp.abs()),
        s_all.max(jump.rt_amp.abs()),
    ];
    (res, mags)
}

fn effective_surface(system: LinearSystem, surf: &SurfaceParams) -> SurfaceParams {
    match system {
        LinearSystem::GurtinMurdoch => SurfaceParams { chi0: 0.0, zeta0: 0.0, ..*surf },
        LinearSystem::SteigmannOgden => *surf,
    }
}

/// Affine interface map `x ↦ M x + f` in the scaled unknowns, assembled by
/// probing [`interface_conditions`] with unit vectors.
pub fn interface_system(
    system: LinearSystem,
    phases: &Phases,
    surf: &SurfaceParams,
    g: Geometry,
    sigma_d: f64,
) -> (SMatrix<f64, 6, 6>, SVector<f64, 6>) {
    let surf = effective_surface(system, surf);
    let d1 = sigma_d / (2.0 * phases.matrix.mu);
    let r = g.radius;
    let f = interface_conditions(phases, &surf, g, &unscale(&[0.0; 6], d1, r)).0;
    let mut m = SMatrix::<f64, 6, 6>::zeros();
    for k in 0..6 {
        let mut x = [0.0; 6];
        x[k] = 1.0;
        let col = interface_conditions(phases, &surf, g, &unscale(&x, d1, r)).0;
        for i in 0..6 {
            m[(i, k)] = col[i] - f[i];
        }
    }
    (m, SVector::<f64, 6>::from_column_slice(&f))
}

/// Numeric solve of the chosen interface system for far-field shear `σ_d`.
pub fn linear_solve_oracle(system: LinearSystem, phases: &Phases, surf: &SurfaceParams, g: Geometry, sigma_d: f64) -> Result<Coeff3D> {
    let (mut m, mut f) = interface_system(system, phases, surf, g, sigma_d);
    for i in 0..6 {
        let row = m.row(i).amax();
        if row > 0.0 {
            m.row_mut(i).scale_mut(1.0 / row);
            f[i] /= row;
        }
    }
    let x = linalg::solve(m, -f)?;
    let d1 = sigma_d / (2.0 * phases.matrix.mu);
    Ok(unscale(&[x[0], x[1], x[2], x[3], x[4], x[5]], d1, g.radius))
}

/// Largest interface-condition residual of a coefficient set, each row
/// relative to the magnitudes of the quantities it balances.
pub fn interface_residual(system: LinearSystem, phases: &Phases, surf: &SurfaceParams, g: Geometry, c: &Coeff3D) -> f64 {
    let surf = effective_surface(system, surf);
    let (res, mags) = interface_conditions(phases, &surf, g, c);
    res.iter()
        .zip(mags.iter())
        .map(|(e, m)| if *m > 0.0 { e.abs() / m } else { e.abs() })
        .fold(0.0, f64::max)
}

/// Largest relative difference between two coefficient sets, each entry
/// scaled by the magnitude of the matching entry and `D₁`-based reference
/// magnitudes so that vanishing coefficients compare absolutely.
pub fn coefficient_distance(a: &Coeff3D, b: &Coeff3D, g: Geometry) -> f64 {
    let r = g.radius;
    let pairs = [
        (a.a0, b.a0, a.a0.abs().max(b.a0.abs())),
        (a.a1, b.a1, a.d1.abs()),
        (a.a2 * r * r, b.a2 * r * r, a.d1.abs()),
        (a.d0 / r.powi(3), b.d0 / r.powi(3), a.a0.abs().max(b.a0.abs())),
        (a.d3 / r.powi(5), b.d3 / r.powi(5), a.d1.abs()),
        (a.d4 / r.powi(3), b.d4 / r.powi(3), a.d1.abs()),
    ];
    pairs
        .iter()
        .map(|&(x, y, s)| {
            let scale = s.max(x.abs()).max(y.abs());
            if scale == 0.0 {
                0.0
            } else {
                (x - y).abs() / scale
            }
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk2d::FarField2D;
    use crate::materials::BulkMaterial;
    use crate::sphere_gm::{solve_gm_shear, SphereSolution};

    fn phases(mu_i: f64, nu_i: f64) -> Phases {
        Phases::new(BulkMaterial::new(1.0, 0.3).unwrap(), BulkMaterial::new(mu_i, nu_i).unwrap()).unwrap()
    }

    #[test]
    fn surface_t_reference_cases() {
        let s = SurfaceParams { mu0: 0.1, lambda0: 0.2, sigma0: 0.05, chi0: 0.0, zeta0: 0.0 };
        let t = surface_t(&DisplacementJet::default(), &s, 1.5, 0.7);
        assert_eq!(t.t_thetatheta, 0.05);
        assert_eq!(t.t_phiphi, 0.05);
        assert_eq!((t.t_phitheta, t.t_thetaphi, t.t_thetar, t.t_phir), (0.0, 0.0, 0.0, 0.0));
        let u0 = 0.01;
        let t = surface_t(&DisplacementJet { ur: u0, ..Default::default() }, &s, 1.5, 0.7);
        let expect = 0.05 + (2.0 * 0.2 + 2.0 * 0.1 + 0.05) * u0 / 1.5;
        assert!((t.t_thetatheta - expect).abs() < 1e-16 && (t.t_phiphi - expect).abs() < 1e-16);
    }

    #[test]
    fn rigid_rotation_surface_shear() {
        // u_φ = ω r sinθ about z: only the σ₀ part of the in-plane shear survives
        let (w, r) = (0.01, 1.2);
        let s = SurfaceParams { mu0: 0.1, lambda0: 0.2, sigma0: 0.05, chi0: 0.0, zeta0: 0.0 };
        let u = |t: f64, _p: f64| [0.0, 0.0, w * r * t.sin()];
        let t = 0.8;
        let j = fd_jet(u, t, 0.3, 1e-4);
        let tt = surface_t(&j, &s, r, t);
        assert!((tt.t_phitheta + 0.05 * w * t.cos()).abs() < 1e-9);
        assert!((tt.t_thetaphi - 0.05 * w * t.cos()).abs() < 1e-9);
        assert!(tt.t_thetar.abs() < 1e-12 && (tt.t_phir + 0.05 * w * t.sin()).abs() < 1e-9);
    }

    #[test]
    fn classical_jump_vanishes() {
        let p = phases(0.7, 0.2);
        let g = Geometry::new(1.3).unwrap();
        let s = SurfaceParams::classical();
        let c = solve_gm_shear(&p, &s, g, 0.2).unwrap();
        let f = SphereSolution { phases: p, surface: s, geometry: g, sigma_d: 0.2, coeff: c };
        let grid = JumpGrid { n_theta: 12, n_phi: 16, ..Default::default() };
        let res = jump_residual_3d(&f, &s, InterfaceModel::Classical, &grid);
        assert!(res.max() < 1e-12, "{res:?}");
    }

    #[test]
    fn gm_jump_small() {
        let p = phases(0.7, 0.2);
        let g = Geometry::new(1.3).unwrap();
        let s = SurfaceParams::gurtin_murdoch(0.05, 0.08, 0.03);
        let c = solve_gm_shear(&p, &s, g, 0.2).unwrap();
        let f = SphereSolution { phases: p, surface: s, geometry: g, sigma_d: 0.2, coeff: c };
        let grid = JumpGrid { n_theta: 12, n_phi: 16, ..Default::default() };
        let res = jump_residual_3d(&f, &s, InterfaceModel::GurtinMurdoch, &grid);
        assert!(res.max() < 1e-7, "{res:?}");
    }

    #[test]
    fn spectral_derivative_of_mode() {
        let n = 64;
        let x: Vec<f64> = (0..n).map(|i| (2.0 * 2.0 * PI * i as f64 / n as f64).cos()).collect();
        let [d1, d2, _, d4] = spectral_derivatives(&x);
        for i in 0..n {
            let t = 2.0 * PI * i as f64 / n as f64;
            assert!((d1[i] + 2.0 * (2.0 * t).sin()).abs() < 1e-12);
            assert!((d2[i] + 4.0 * (2.0 * t).cos()).abs() < 1e-12);
            assert!((d4[i] - 16.0 * (2.0 * t).cos()).abs() < 1e-9);
        }
    }

    #[test]
    fn disk_jump_small() {
        let p = phases(0.7, 0.2);
        let g = Geometry::new(1.3).unwrap();
        let s = SurfaceParams { mu0: 0.05, lambda0: 0.08, sigma0: 0.03, chi0: 0.01, zeta0: 0.004 };
        let sol = DiskSolution::solve(p, s, g, FarField2D { s11: 0.4, s22: -0.1, s12: 0.25 }).unwrap();
        let res = jump_residual_2d(&sol, 64);
        assert!(res.max() < 1e-10, "{res:?}");
    }

    #[test]
    fn far_field_equilibrium() {
        let stress = |_x: f64, _y: f64| [0.3, -0.1, 0.2];
        assert_eq!(equilibrium_residual_2d(stress, 1.0, 2.0, 1e-5), 0.0);
    }

    #[test]
    fn oracle_classical_pattern() {
        let p = phases(1.0, 0.3);
        let g = Geometry::new(1.0).unwrap();
        for sys in [LinearSystem::GurtinMurdoch, LinearSystem::SteigmannOgden] {
            let c = linear_solve_oracle(sys, &p, &SurfaceParams::classical(), g, 2.0).unwrap();
            assert!((c.a1 - c.d1).abs() < 1e-14);
            assert!(c.a2.abs() < 1e-14 && c.d3.abs() < 1e-14 && c.d4.abs() < 1e-14);
        }
    }
}
