//! Maxwell-scheme effective shear modulus of a composite of spheres with
//! Steigmann–Ogden interfaces.
//!
//! Stage one solves the single-sphere shear problem with the tension
//! response removed and reads off the dipole coefficient `D₄`. Stage two
//! replaces the sphere by a perfectly bonded one with the same `D₄` and
//! applies the Maxwell formula to that equivalent inhomogeneity.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::materials::{BulkMaterial, Geometry, Phases, SurfaceParams};
use crate::sphere_so::residual_subtraction;

/// Agreement required between the two algebraic routes to `μ_ef`.
pub const ROUTE_TOLERANCE: f64 = 1e-12;

/// Perfectly bonded sphere with the same dipole response.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EquivalentInhomogeneity {
    /// `μ_eq/μ`.
    pub mu_eq_ratio: f64,
    /// `D₄ R⁻³ / σ_d` of the interface-bearing sphere.
    pub d4_so_ratio: f64,
}

/// Effective shear modulus at one volume fraction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EffectiveEstimate {
    pub c: f64,
    pub mu_star_ratio: f64,
    /// `Λ = 1 − μ_eq/μ`.
    pub lambda: f64,
    /// `μ_ef/μ` from the closed Maxwell expression in `Λ`.
    pub mu_ef_ratio: f64,
    /// `μ_ef/μ` from the generic Maxwell formula in `μ_eq` and `μ*`.
    pub mu_ef_ratio_generic: f64,
}

fn lame(m: &BulkMaterial) -> (f64, f64) {
    (m.mu * m.lambda_over_mu(), m.mu)
}

/// `μ*/μ = (9λ + 14μ)/(2(3λ + 8μ))`, equivalently `(9K + 8μ)/(6(K + 2μ))`.
pub fn mu_star(matrix: &BulkMaterial) -> f64 {
    let (l, m) = lame(matrix);
    (9.0 * l + 14.0 * m) / (2.0 * (3.0 * l + 8.0 * m))
}

/// How the dipole of the perfectly bonded comparison sphere depends on its
/// shear modulus `m = μ_eq/μ`. Both rules share the numerator
/// `−(5/2)(m − 1)σ_d R³` and the constant `9λ + 14μ` in the denominator;
/// they differ in the weight of `2m`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DipoleMatch {
    /// Weight `8λ + 3μ`, the rule behind the reference effective-modulus
    /// table. It agrees with the bonded-sphere dipole only at `m = 0` and
    /// `m = 1`, and stiff inhomogeneities fall outside its range.
    #[default]
    Tabulated,
    /// Weight `3λ + 8μ`: the exact dipole of a bonded sphere whose Poisson
    /// ratio equals the matrix one.
    Exact,
}

impl DipoleMatch {
    fn weight(self, l: f64, m: f64) -> f64 {
        match self {
            DipoleMatch::Tabulated => 8.0 * l + 3.0 * m,
            DipoleMatch::Exact => 3.0 * l + 8.0 * m,
        }
    }
}

/// Dipole coefficient of a perfectly bonded sphere with shear modulus
/// `μ_eq`, under the [`DipoleMatch::Tabulated`] rule.
pub fn d4_equivalent(mu_eq_ratio: f64, matrix: &BulkMaterial, g: Geometry, sigma_d: f64) -> Result<f64> {
    d4_equivalent_with(DipoleMatch::Tabulated, mu_eq_ratio, matrix, g, sigma_d)
}

pub fn d4_equivalent_with(rule: DipoleMatch, mu_eq_ratio: f64, matrix: &BulkMaterial, g: Geometry, sigma_d: f64) -> Result<f64> {
    let (l, m) = lame(matrix);
    let den = (9.0 * l + 14.0 * m) + 2.0 * mu_eq_ratio * rule.weight(l, m);
    if den == 0.0 || !den.is_finite() {
        return Err(Error::Degenerate { what: "d4_equivalent denominator", value: den });
    }
    Ok(-2.5 * (mu_eq_ratio - 1.0) * sigma_d * g.radius.powi(3) / den)
}

/// Inverse of [`d4_equivalent`]: `μ_eq/μ` from `x = D₄R⁻³/σ_d`.
pub fn mu_eq_from_d4_ratio(x: f64, matrix: &BulkMaterial) -> Result<f64> {
    mu_eq_from_d4_ratio_with(DipoleMatch::Tabulated, x, matrix)
}

/// Inverse of [`d4_equivalent_with`]. Dipoles beyond the rigid-sphere value
/// of `rule` have no bonded equivalent and are an error. A negative `μ_eq`
/// is admissible: a tensioned, compliant interface can be softer than a void.
pub fn mu_eq_from_d4_ratio_with(rule: DipoleMatch, x: f64, matrix: &BulkMaterial) -> Result<f64> {
    let (l, m) = lame(matrix);
    let w = rule.weight(l, m);
    let den = 1.0 + 0.8 * x * w;
    if !(den > 0.0) || !den.is_finite() {
        return Err(Error::Degenerate { what: "mu_eq denominator", value: den });
    }
    Ok(1.0 - 0.4 * x * (9.0 * l + 14.0 * m + 2.0 * w) / den)
}

/// Stage one: equivalent inhomogeneity of an interface-bearing sphere.
pub fn equivalent_inhomogeneity(phases: &Phases, surf: &SurfaceParams, g: Geometry) -> Result<EquivalentInhomogeneity> {
    equivalent_inhomogeneity_with(DipoleMatch::Tabulated, phases, surf, g)
}

pub fn equivalent_inhomogeneity_with(
    rule: DipoleMatch,
    phases: &Phases,
    surf: &SurfaceParams,
    g: Geometry,
) -> Result<EquivalentInhomogeneity> {
    let sigma_d = 1.0;
    let c = residual_subtraction(phases, surf, g, sigma_d)?;
    let x = c.d4 / g.radius.powi(3) / sigma_d;
    Ok(EquivalentInhomogeneity { mu_eq_ratio: mu_eq_from_d4_ratio_with(rule, x, &phases.matrix)?, d4_so_ratio: x })
}

/// Generic Maxwell estimate with inhomogeneity modulus ratio `m`.
pub fn maxwell_generic(m: f64, c: f64, matrix: &BulkMaterial) -> f64 {
    let s = mu_star(matrix);
    (m + s + c * s * (m - 1.0)) / (m + s - c * (m - 1.0))
}

/// Maxwell estimate written in terms of `Λ = 1 − μ_eq/μ`.
pub fn maxwell_lambda(lambda: f64, c: f64, matrix: &BulkMaterial) -> Result<f64> {
    let (l, m) = lame(matrix);
    let den = 2.0 * (3.0 * l + 8.0 * m) * (1.0 - (1.0 - c) * lambda) + (9.0 * l + 14.0 * m);
    if den == 0.0 || !den.is_finite() {
        return Err(Error::Degenerate { what: "maxwell denominator", value: den });
    }
    Ok(1.0 - 15.0 * c * (l + 2.0 * m) * lambda / den)
}

/// Stage two at volume fraction `c`, with both routes cross-checked.
pub fn effective_from_equivalent(eq: &EquivalentInhomogeneity, matrix: &BulkMaterial, c: f64) -> Result<EffectiveEstimate> {
    if !(0.0..1.0).contains(&c) {
        return Err(invalid("c", format!("volume fraction must lie in [0, 1), got {c}")));
    }
    let lambda = 1.0 - eq.mu_eq_ratio;
    let mu_ef_ratio = maxwell_lambda(lambda, c, matrix)?;
    let mu_ef_ratio_generic = maxwell_generic(eq.mu_eq_ratio, c, matrix);
    let gap = (mu_ef_ratio - mu_ef_ratio_generic).abs();
    if !(gap <= ROUTE_TOLERANCE * mu_ef_ratio.abs().max(1.0)) {
        return Err(Error::Degenerate { what: "maxwell route mismatch", value: gap });
    }
    Ok(EffectiveEstimate { c, mu_star_ratio: mu_star(matrix), lambda, mu_ef_ratio, mu_ef_ratio_generic })
}

pub fn effective_shear(phases: &Phases, surf: &SurfaceParams, g: Geometry, c: f64) -> Result<EffectiveEstimate> {
    let eq = equivalent_inhomogeneity(phases, surf, g)?;
    effective_from_equivalent(&eq, &phases.matrix, c)
}

/// [`effective_shear`] over many volume fractions; stage one runs once.
pub fn effective_shear_curve(phases: &Phases, surf: &SurfaceParams, g: Geometry, cs: &[f64]) -> Result<Vec<EffectiveEstimate>> {
    effective_shear_curve_with(DipoleMatch::Tabulated, phases, surf, g, cs)
}

pub fn effective_shear_curve_with(
    rule: DipoleMatch,
    phases: &Phases,
    surf: &SurfaceParams,
    g: Geometry,
    cs: &[f64],
) -> Result<Vec<EffectiveEstimate>> {
    let eq = equivalent_inhomogeneity_with(rule, phases, surf, g)?;
    cs.par_iter().map(|&c| effective_from_equivalent(&eq, &phases.matrix, c)).collect()
}
