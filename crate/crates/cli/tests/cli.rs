use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn surfel(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_surfel")).args(args).current_dir(dir).output().expect("run surfel")
}

fn write(dir: &Path, name: &str, text: &str) {
    std::fs::write(dir.join(name), text).unwrap();
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

const SO_SPHERE: &str = r#"
schema_version = 1
name = "so sphere"
geometry = "sphere"
radius = "10 nm"

[matrix]
mu = "34.7 GPa"
nu = 0.3

[inhomogeneity]
mu = "80 GPa"
nu = 0.25

[interface]
model = "steigmann_ogden"
mu0 = "5.2321 N/m"
lambda0 = "10.4641 N/m"
sigma0 = "1.7 N/m"
chi0 = "1e-18 N*m"
zeta0 = "5e-19 N*m"

[load]
kind = "shear"
sigma_d = "100 MPa"

[grid]
radii = [0.5, 1.0, 2.0]
n_theta = 7
phi = 0.3
output = "field.csv"
"#;

#[test]
fn solve_sphere_writes_report_and_grid() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "s.toml", SO_SPHERE);
    let o = surfel(&["solve", "s.toml", "--out", "report.json"], dir.path());
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_slice(&std::fs::read(dir.path().join("report.json")).unwrap()).unwrap();
    assert_eq!(v["model"], "steigmann_ogden");
    let d1 = v["coefficients"]["D1"].as_f64().unwrap();
    assert!((d1 - 100e6 / 34.7e9 / 2.0).abs() < 1e-15);
    assert_eq!(v["scales"]["radius_m"].as_f64().unwrap(), 1e-8);
    let csv = std::fs::read_to_string(dir.path().join("field.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 1 + 3 * 7);
    assert!(lines[0].starts_with("r (R),theta (rad),phi (rad),u_r (R)"));

    let o = surfel(&["verify", "s.toml"], dir.path());
    assert!(o.status.success(), "{}", stderr(&o));
    let reports: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(reports[0]["pass"], true);
}

#[test]
fn hydrostatic_homogeneous_disk_is_uniform() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "h.toml",
        r#"
schema_version = 1
name = "homogeneous disk"
geometry = "disk"
radius = 1.0
[matrix]
mu = 1.0
nu = 0.3
[inhomogeneity]
mu = 1.0
nu = 0.3
[interface]
model = "classical"
[load]
kind = "hydrostatic"
sigma_h = 0.02
"#,
    );
    let o = surfel(&["solve", "h.toml"], dir.path());
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let c = &v["coefficients"];
    let (f1, f2, f3) = (c["F1"].as_f64().unwrap(), c["F2"].as_f64().unwrap(), c["F3"].as_f64().unwrap());
    assert!((f1 - f2).abs() <= 4.0 * f64::EPSILON * f2.abs());
    assert!(f3.abs() <= 4.0 * f64::EPSILON * f2.abs());
}

#[test]
fn invalid_poisson_ratio_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "bad.toml", &SO_SPHERE.replace("nu = 0.25", "nu = 0.6"));
    let o = surfel(&["solve", "bad.toml"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("inhomogeneity.nu"), "{err}");
    assert!(o.stdout.is_empty());
}

#[test]
fn unknown_fields_and_units_rejected() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a.toml", &SO_SPHERE.replace("nu = 0.3\n", "nu = 0.3\nnuu = 1\n"));
    assert_eq!(surfel(&["solve", "a.toml"], dir.path()).status.code(), Some(1));
    write(dir.path(), "b.toml", &SO_SPHERE.replace("\"34.7 GPa\"", "\"34.7 furlong\""));
    let o = surfel(&["solve", "b.toml"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("matrix.mu"), "{}", stderr(&o));
}

#[test]
fn builtin_verification_passes() {
    let dir = tempfile::tempdir().unwrap();
    let o = surfel(&["verify", "--builtin"], dir.path());
    assert!(o.status.success(), "{}", stderr(&o));
    let reports: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), 9);
    assert!(!stderr(&o).contains("FAIL"));
}

#[test]
fn corrupted_coefficients_fail_verification() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "s.toml", SO_SPHERE);
    let o = surfel(&["solve", "s.toml", "--out", "good.json"], dir.path());
    assert!(o.status.success());
    let mut v: Value = serde_json::from_slice(&std::fs::read(dir.path().join("good.json")).unwrap()).unwrap();
    let d4 = v["coefficients"]["D4"].as_f64().unwrap();
    v["coefficients"]["D4"] = (d4 * (1.0 + 1e-6)).into();
    write(dir.path(), "bad.json", &v.to_string());

    let ok = surfel(&["verify", "s.toml", "--coefficients", "good.json"], dir.path());
    assert!(ok.status.success(), "{}", stderr(&ok));
    let bad = surfel(&["verify", "s.toml", "--coefficients", "bad.json"], dir.path());
    assert_eq!(bad.status.code(), Some(3), "{}", stderr(&bad));
    assert!(stderr(&bad).contains("FAIL so sphere interface_residual"));
}

#[test]
fn unknown_figure_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let o = surfel(&["figure", "fig9"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("fig9"));
}

#[test]
fn fig2_zero_tension_curve_changes_sign() {
    let dir = tempfile::tempdir().unwrap();
    let o = surfel(&["figure", "fig2", "--resolution", "11"], dir.path());
    assert!(o.status.success());
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let rows: Vec<Vec<f64>> =
        rdr.records().map(|r| r.unwrap().iter().map(|x| x.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 11);
    assert!(rows[0][1] > 0.0 && rows[10][1] < 0.0);
    assert!(rows.iter().all(|r| r[2] < 0.0 && r[3] < 0.0));
}

#[test]
fn table1_output_is_replaced_atomically() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("t.csv");
    std::fs::write(&target, "stale").unwrap();
    let o = surfel(&["table1", "--out", "t.csv"], dir.path());
    assert!(o.status.success());
    let text = std::fs::read_to_string(&target).unwrap();
    assert!(text.starts_with("c (1),mu_ef_over_mu[classical] (1)"));
    assert_eq!(text.lines().count(), 4);
    let leftovers: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(leftovers.len(), 1, "{leftovers:?}");

    let o = surfel(&["table1", "--out", "missing/dir/t.csv"], dir.path());
    assert_eq!(o.status.code(), Some(1));
}
