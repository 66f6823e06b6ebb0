//! Scenario files.
//!
//! A scenario is a TOML document:
//!
//! ```toml
//! schema_version = 1
//! name = "alumina cavity"
//! geometry = "sphere"          # or "disk"
//! radius = "5 nm"
//!
//! [matrix]
//! mu = "34.7 GPa"
//! nu = 0.3
//!
//! [inhomogeneity]
//! cavity = true                # or give mu
//! nu = 0.3
//!
//! [interface]
//! model = "steigmann_ogden"    # classical | gurtin_murdoch | steigmann_ogden
//! mu0 = "5.2321 N/m"
//! lambda0 = "10.4641 N/m"
//! sigma0 = "1.7 N/m"
//! gamma = "9.848554 MPa"       # sphere only; or chi0/zeta0 in N*m
//!
//! [load]
//! kind = "shear"               # shear | hydrostatic | general (disk only)
//! sigma_d = "100 MPa"
//!
//! [grid]                       # optional field samples
//! radii = [0.5, 1.0, 2.0]      # in units of R
//! n_theta = 19
//! phi = 0.0
//! output = "field.csv"
//! ```
//!
//! Quantities are either bare numbers or strings with a unit. If any
//! quantity carries a unit, the matrix `mu` and `radius` must too. Every
//! input is normalized on load: stresses by the matrix shear modulus,
//! lengths by the radius.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use surfel_core::{BulkMaterial, FarField2D, Geometry, InterfaceModel, Phases, SurfaceParams};

use crate::error::{CliError, CliResult};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    Disk,
    Sphere,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Dim {
    Stress,
    /// Force per length.
    Surface,
    Length,
    /// Force times length.
    Bending,
}

impl Dim {
    fn units(self) -> &'static [(&'static str, f64)] {
        match self {
            Dim::Stress => &[("Pa", 1.0), ("kPa", 1e3), ("MPa", 1e6), ("GPa", 1e9)],
            Dim::Surface => &[("N/m", 1.0), ("J/m^2", 1.0), ("mN/m", 1e-3)],
            Dim::Length => &[("m", 1.0), ("mm", 1e-3), ("um", 1e-6), ("nm", 1e-9)],
            Dim::Bending => &[("N*m", 1.0), ("J", 1.0), ("nN*nm", 1e-18), ("eV", 1.602176634e-19)],
        }
    }
}

/// A number, or a string `"<value> <unit>"`.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum Quantity {
    Number(f64),
    Text(String),
}

/// Parsed value: either normalized already or in SI.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Value {
    Plain(f64),
    Si(f64),
}

fn parse(q: &Quantity, dim: Dim, path: &str) -> CliResult<Value> {
    match q {
        Quantity::Number(x) => Ok(Value::Plain(*x)),
        Quantity::Text(s) => {
            let mut it = s.split_whitespace();
            let (Some(num), Some(unit), None) = (it.next(), it.next(), it.next()) else {
                return Err(CliError::Validation(format!("{path}: expected \"<value> <unit>\", got {s:?}")));
            };
            let x: f64 = num
                .parse()
                .map_err(|_| CliError::Validation(format!("{path}: cannot parse number {num:?}")))?;
            let Some(&(_, f)) = dim.units().iter().find(|(u, _)| *u == unit) else {
                let known: Vec<_> = dim.units().iter().map(|(u, _)| *u).collect();
                return Err(CliError::Validation(format!(
                    "{path}: unit {unit:?} not accepted here (expected one of {})",
                    known.join(", ")
                )));
            };
            Ok(Value::Si(x * f))
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    schema_version: u32,
    name: Option<String>,
    geometry: Shape,
    radius: Quantity,
    matrix: RawMatrix,
    inhomogeneity: RawInhomogeneity,
    #[serde(default)]
    interface: RawInterface,
    load: RawLoad,
    grid: Option<GridSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMatrix {
    mu: Quantity,
    nu: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInhomogeneity {
    #[serde(default)]
    cavity: bool,
    mu: Option<Quantity>,
    nu: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInterface {
    model: InterfaceModel,
    mu0: Option<Quantity>,
    lambda0: Option<Quantity>,
    sigma0: Option<Quantity>,
    chi0: Option<Quantity>,
    zeta0: Option<Quantity>,
    gamma: Option<Quantity>,
}

impl Default for RawInterface {
    fn default() -> Self {
        Self {
            model: InterfaceModel::Classical,
            mu0: None,
            lambda0: None,
            sigma0: None,
            chi0: None,
            zeta0: None,
            gamma: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
enum LoadKind {
    Shear,
    Hydrostatic,
    General,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLoad {
    kind: LoadKind,
    sigma_d: Option<Quantity>,
    sigma_h: Option<Quantity>,
    s11: Option<Quantity>,
    s22: Option<Quantity>,
    s12: Option<Quantity>,
}

/// Field sampling request. Radii are in units of R, angles in radians.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub radii: Vec<f64>,
    pub n_theta: usize,
    #[serde(default)]
    pub phi: f64,
    pub output: Option<PathBuf>,
}

/// Far-field load in units of the matrix shear modulus.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Load {
    Shear { sigma_d: f64 },
    Hydrostatic { sigma_h: f64 },
    General(FarField2D),
}

/// Dimensional scales removed on load, in SI, when the file used units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Scales {
    pub mu_pa: f64,
    pub radius_m: f64,
}

/// Normalized scenario: matrix μ = 1 and R = 1.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Scenario {
    pub name: String,
    pub shape: Shape,
    pub phases: Phases,
    pub surface: SurfaceParams,
    pub geometry: Geometry,
    pub load: Load,
    pub grid: Option<GridSpec>,
    pub scales: Option<Scales>,
}

/// Divisor that normalizes a quantity of dimension `dim`.
fn unit_scale(dim: Dim, mu: f64, r: f64) -> f64 {
    match dim {
        Dim::Stress => mu,
        Dim::Surface => mu * r,
        Dim::Length => r,
        Dim::Bending => mu * r.powi(3),
    }
}

/// Prefixes a core error with the scenario path it came from, extending a
/// section path by the offending field.
fn core_err(path: &str) -> impl Fn(surfel_core::Error) -> CliError + '_ {
    move |e| match e {
        surfel_core::Error::InvalidParameter { field, reason } => {
            if path.rsplit('.').next() == Some(field) {
                CliError::Validation(format!("{path}: {reason}"))
            } else {
                CliError::Validation(format!("{path}.{field}: {reason}"))
            }
        }
        e => CliError::Validation(format!("{path}: {e}")),
    }
}

impl Scenario {
    pub fn from_toml(text: &str) -> CliResult<Self> {
        let raw: RawScenario = toml::from_str(text).map_err(|e| CliError::Validation(format!("scenario: {e}")))?;
        Self::from_raw(raw)
    }

    pub fn from_path(path: &std::path::Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path.display(), e))?;
        Self::from_toml(&text).map_err(|e| match e {
            CliError::Validation(m) => CliError::Validation(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    fn from_raw(raw: RawScenario) -> CliResult<Self> {
        if raw.schema_version != SCHEMA_VERSION {
            return Err(CliError::Validation(format!(
                "schema_version: unsupported version {}, expected {SCHEMA_VERSION}",
                raw.schema_version
            )));
        }
        let mu_v = parse(&raw.matrix.mu, Dim::Stress, "matrix.mu")?;
        let r_v = parse(&raw.radius, Dim::Length, "radius")?;
        let (mu, radius, scales) = match (mu_v, r_v) {
            (Value::Plain(m), Value::Plain(r)) => (m, r, None),
            (Value::Si(m), Value::Si(r)) => (m, r, Some(Scales { mu_pa: m, radius_m: r })),
            _ => {
                return Err(CliError::Validation(
                    "matrix.mu, radius: give both with units or both as plain numbers".into(),
                ))
            }
        };
        if !(mu > 0.0 && mu.is_finite()) {
            return Err(CliError::Validation(format!("matrix.mu: must be positive and finite, got {mu}")));
        }
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(CliError::Validation(format!("radius: must be positive and finite, got {radius}")));
        }
        let dimensional = scales.is_some();
        let rescale = |q: &Quantity, dim: Dim, path: &str| -> CliResult<f64> {
            let x = match (parse(q, dim, path)?, dimensional) {
                (Value::Plain(x), false) | (Value::Si(x), true) => x / unit_scale(dim, mu, radius),
                (Value::Plain(_), true) => {
                    return Err(CliError::Validation(format!(
                        "{path}: give a unit, since matrix.mu and radius have units"
                    )))
                }
                (Value::Si(_), false) => {
                    return Err(CliError::Validation(format!(
                        "{path}: has a unit, so matrix.mu and radius must carry units too"
                    )))
                }
            };
            if !x.is_finite() {
                return Err(CliError::Validation(format!("{path}: must be finite")));
            }
            Ok(x)
        };
        let opt = |q: &Option<Quantity>, dim: Dim, path: &str| -> CliResult<f64> {
            q.as_ref().map_or(Ok(0.0), |q| rescale(q, dim, path))
        };

        let matrix = BulkMaterial::new(1.0, raw.matrix.nu).map_err(core_err("matrix.nu"))?;
        let inh = &raw.inhomogeneity;
        let inhomogeneity = match (inh.cavity, &inh.mu) {
            (true, Some(_)) => {
                return Err(CliError::Validation("inhomogeneity: give either cavity = true or mu, not both".into()))
            }
            (true, None) => BulkMaterial::cavity(inh.nu).map_err(core_err("inhomogeneity.nu"))?,
            (false, Some(q)) => {
                let m = rescale(q, Dim::Stress, "inhomogeneity.mu")?;
                BulkMaterial::new(m, inh.nu).map_err(core_err("inhomogeneity"))?
            }
            (false, None) => return Err(CliError::Validation("inhomogeneity: missing mu (or cavity = true)".into())),
        };
        let phases = Phases::new(matrix, inhomogeneity).map_err(core_err("matrix"))?;
        let geometry = Geometry::new(1.0).map_err(core_err("radius"))?;

        let it = &raw.interface;
        let mut surface = SurfaceParams::gurtin_murdoch(
            opt(&it.mu0, Dim::Surface, "interface.mu0")?,
            opt(&it.lambda0, Dim::Surface, "interface.lambda0")?,
            opt(&it.sigma0, Dim::Surface, "interface.sigma0")?,
        );
        surface.chi0 = opt(&it.chi0, Dim::Bending, "interface.chi0")?;
        surface.zeta0 = opt(&it.zeta0, Dim::Bending, "interface.zeta0")?;
        if let Some(g) = &it.gamma {
            if it.chi0.is_some() || it.zeta0.is_some() {
                return Err(CliError::Validation("interface.gamma: give either gamma or chi0/zeta0, not both".into()));
            }
            if raw.geometry == Shape::Disk {
                return Err(CliError::Validation(
                    "interface.gamma: defined for the sphere only; give chi0/zeta0 for a disk".into(),
                ));
            }
            surface = surface.with_gamma(rescale(g, Dim::Stress, "interface.gamma")?, geometry);
        }
        match it.model {
            InterfaceModel::Classical if !surface.is_classical() => {
                return Err(CliError::Validation("interface: classical model requires all surface constants to be 0".into()))
            }
            InterfaceModel::GurtinMurdoch if !surface.is_gurtin_murdoch() => {
                return Err(CliError::Validation(
                    "interface: gurtin_murdoch model requires chi0 = zeta0 = 0 (and no gamma)".into(),
                ))
            }
            _ => {}
        }

        let l = &raw.load;
        let need = |q: &Option<Quantity>, path: &str| -> CliResult<f64> {
            match q {
                Some(q) => rescale(q, Dim::Stress, path),
                None => Err(CliError::Validation(format!("{path}: required for this load kind"))),
            }
        };
        let load = match l.kind {
            LoadKind::Shear => Load::Shear { sigma_d: need(&l.sigma_d, "load.sigma_d")? },
            LoadKind::Hydrostatic => Load::Hydrostatic { sigma_h: need(&l.sigma_h, "load.sigma_h")? },
            LoadKind::General => {
                if raw.geometry == Shape::Sphere {
                    return Err(CliError::Validation("load.kind: general loads are supported for the disk only".into()));
                }
                Load::General(FarField2D {
                    s11: opt(&l.s11, Dim::Stress, "load.s11")?,
                    s22: opt(&l.s22, Dim::Stress, "load.s22")?,
                    s12: opt(&l.s12, Dim::Stress, "load.s12")?,
                })
            }
        };

        if let Some(g) = &raw.grid {
            if g.radii.iter().any(|r| !(r.is_finite() && *r > 0.0)) {
                return Err(CliError::Validation("grid.radii: entries must be positive and finite".into()));
            }
            if g.n_theta < 2 {
                return Err(CliError::Validation("grid.n_theta: need at least 2".into()));
            }
            if !g.phi.is_finite() {
                return Err(CliError::Validation("grid.phi: must be finite".into()));
            }
        }

        Ok(Scenario {
            name: raw.name.unwrap_or_else(|| "scenario".into()),
            shape: raw.geometry,
            phases,
            surface,
            geometry,
            load,
            grid: raw.grid,
            scales,
        })
    }

    pub fn model(&self) -> InterfaceModel {
        InterfaceModel::of(&self.surface)
    }

    /// Human-readable parameter dump for error reports.
    pub fn dump(&self) -> String {
        format!(
            "  shape = {:?}\n  matrix = {:?}\n  inhomogeneity = {:?}\n  surface = {:?}\n  load = {:?}",
            self.shape, self.phases.matrix, self.phases.inhomogeneity, self.surface, self.load
        )
    }
}
