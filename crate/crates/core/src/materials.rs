//! Bulk phases, interface constants and the quantities derived from them.
//!
//! Every symbol the solvers use is computed here once. Ratios that would
//! divide by the inhomogeneity shear modulus (λ_I/μ_I) are formed from the
//! Poisson ratio instead, so a cavity (μ_I = 0) is an ordinary input.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Isotropic linear elastic phase.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BulkMaterial {
    /// Shear modulus.
    pub mu: f64,
    /// Poisson ratio.
    pub nu: f64,
}

/// Moduli derived from a [`BulkMaterial`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivedBulk {
    /// Kolosov constant for plane strain, 3 − 4ν.
    pub kappa: f64,
    /// Two-dimensional (plane strain) bulk modulus 2μ/(κ − 1).
    pub k2: f64,
    /// Three-dimensional bulk modulus.
    pub k3: f64,
    /// First Lamé parameter.
    pub lambda: f64,
}

impl BulkMaterial {
    pub fn new(mu: f64, nu: f64) -> Result<Self> {
        let m = Self { mu, nu };
        m.validate()?;
        Ok(m)
    }

    /// Traction-free void. The Poisson ratio does not influence any field
    /// outside the cavity; it only keeps the interior formulas finite.
    pub fn cavity(nu: f64) -> Result<Self> {
        Self::new(0.0, nu)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.mu.is_finite() || self.mu < 0.0 {
            return Err(invalid("mu", format!("shear modulus must be finite and >= 0, got {}", self.mu)));
        }
        if !self.nu.is_finite() || self.nu <= -1.0 || self.nu >= 0.5 {
            return Err(invalid("nu", format!("Poisson ratio must lie in (-1, 0.5), got {}", self.nu)));
        }
        Ok(())
    }

    pub fn is_cavity(&self) -> bool {
        self.mu == 0.0
    }

    pub fn derive(&self) -> DerivedBulk {
        let kappa = 3.0 - 4.0 * self.nu;
        let k3 = 2.0 / 3.0 * self.mu * (1.0 + self.nu) / (1.0 - 2.0 * self.nu);
        DerivedBulk {
            kappa,
            k2: 2.0 * self.mu / (kappa - 1.0),
            k3,
            lambda: k3 - 2.0 * self.mu / 3.0,
        }
    }

    /// λ/μ = 2ν/(1 − 2ν), finite even when μ = 0.
    pub fn lambda_over_mu(&self) -> f64 {
        2.0 * self.nu / (1.0 - 2.0 * self.nu)
    }
}

/// Checked constructor for [`DerivedBulk`]; rejects ν = 0.5 and other
/// inadmissible inputs.
pub fn derive_bulk(m: BulkMaterial) -> Result<DerivedBulk> {
    m.validate()?;
    Ok(m.derive())
}

/// Matrix and inhomogeneity pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Phases {
    pub matrix: BulkMaterial,
    pub inhomogeneity: BulkMaterial,
}

impl Phases {
    pub fn new(matrix: BulkMaterial, inhomogeneity: BulkMaterial) -> Result<Self> {
        matrix.validate()?;
        inhomogeneity.validate()?;
        if matrix.mu <= 0.0 {
            return Err(invalid("matrix.mu", "matrix shear modulus must be positive"));
        }
        Ok(Self { matrix, inhomogeneity })
    }

    /// Both phases identical.
    pub fn homogeneous(m: BulkMaterial) -> Result<Self> {
        Self::new(m, m)
    }
}

/// Interface constants of the Steigmann–Ogden model. Gurtin–Murdoch is the
/// special case `chi0 == zeta0 == 0`; the classical perfect bond has every
/// field zero.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct SurfaceParams {
    /// Surface shear modulus μ₀ (force/length).
    pub mu0: f64,
    /// Surface Lamé constant λ₀ (force/length).
    pub lambda0: f64,
    /// Residual surface tension σ₀ (force/length).
    pub sigma0: f64,
    /// Bending stiffness χ₀ acting on the curvature deviator (force·length).
    pub chi0: f64,
    /// Bending stiffness ζ₀ acting on the curvature trace (force·length).
    pub zeta0: f64,
}

impl SurfaceParams {
    pub fn classical() -> Self {
        Self::default()
    }

    pub fn gurtin_murdoch(mu0: f64, lambda0: f64, sigma0: f64) -> Self {
        Self { mu0, lambda0, sigma0, chi0: 0.0, zeta0: 0.0 }
    }

    /// Builds bending constants from a prescribed spherical bending modulus
    /// γ (see [`DerivedSurface::gamma`]) by splitting it evenly, χ₀ = ζ₀.
    pub fn with_gamma(mut self, gamma: f64, g: Geometry) -> Self {
        let b = gamma * g.radius.powi(3) / 8.0;
        self.chi0 = b;
        self.zeta0 = b;
        self
    }

    pub fn is_gurtin_murdoch(&self) -> bool {
        self.chi0 == 0.0 && self.zeta0 == 0.0
    }

    pub fn is_classical(&self) -> bool {
        *self == Self::default()
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("mu0", self.mu0),
            ("lambda0", self.lambda0),
            ("sigma0", self.sigma0),
            ("chi0", self.chi0),
            ("zeta0", self.zeta0),
        ];
        for (name, v) in fields {
            if !v.is_finite() {
                return Err(invalid(name, format!("surface constant must be finite, got {v}")));
            }
        }
        Ok(())
    }

    pub fn derive(&self, g: Geometry) -> DerivedSurface {
        let r = g.radius;
        let eta = (2.0 * self.mu0 + self.lambda0) / (4.0 * r);
        let gamma = (5.0 * self.chi0 + 3.0 * self.zeta0) / r.powi(3);
        let gamma_2d = (2.0 * self.chi0 + self.zeta0) / r.powi(3);
        let tension = self.sigma0 / (4.0 * r);
        DerivedSurface {
            eta,
            eta1: eta + gamma_2d + tension,
            eta2: eta - gamma_2d - tension,
            eta0: (2.0 * self.mu0 + 2.0 * self.lambda0 + self.sigma0) / r,
            gamma,
            gamma_2d,
        }
    }
}

/// Interface model implied by a set of surface constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InterfaceModel {
    /// Perfect bond, no surface constants.
    Classical,
    GurtinMurdoch,
    SteigmannOgden,
}

impl InterfaceModel {
    pub fn of(s: &SurfaceParams) -> Self {
        if s.is_classical() {
            Self::Classical
        } else if s.is_gurtin_murdoch() {
            Self::GurtinMurdoch
        } else {
            Self::SteigmannOgden
        }
    }

    /// Whether the surface couple stress enters the jump conditions.
    pub fn has_bending(&self) -> bool {
        matches!(self, Self::SteigmannOgden)
    }
}

/// Interface quantities scaled by the radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivedSurface {
    /// η = (2μ₀ + λ₀)/(4R).
    pub eta: f64,
    /// η⁽¹⁾ = η + γ₂ + σ₀/(4R), circular interface.
    pub eta1: f64,
    /// η⁽²⁾ = η − γ₂ − σ₀/(4R), circular interface.
    pub eta2: f64,
    /// η₀ = (2μ₀ + 2λ₀ + σ₀)/R, spherical interface.
    pub eta0: f64,
    /// Bending modulus of the degree-two spherical mode, (5χ₀ + 3ζ₀)/R³.
    ///
    /// With the couple-stress law M = ζ₀ tr(κ) 1 + 2χ₀ κ the deviatoric
    /// stiffness weighs five and the trace stiffness three for this mode.
    pub gamma: f64,
    /// Bending modulus of the circular interface, (2χ₀ + ζ₀)/R³.
    pub gamma_2d: f64,
}

/// Free function form of [`SurfaceParams::derive`].
pub fn derive_surface(s: SurfaceParams, g: Geometry) -> Result<DerivedSurface> {
    s.validate()?;
    g.validate()?;
    Ok(s.derive(g))
}

/// Inhomogeneity radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Geometry {
    pub radius: f64,
}

impl Geometry {
    pub fn new(radius: f64) -> Result<Self> {
        let g = Self { radius };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.radius.is_finite() && self.radius > 0.0) {
            return Err(invalid("radius", format!("radius must be finite and > 0, got {}", self.radius)));
        }
        Ok(())
    }
}

/// Which side of the interface a field sample belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Inhomogeneity,
    Matrix,
}

impl Side {
    /// Side containing radius `r`; the interface itself is assigned to the
    /// matrix.
    pub fn of(r: f64, g: Geometry) -> Self {
        if r < g.radius {
            Side::Inhomogeneity
        } else {
            Side::Matrix
        }
    }
}
