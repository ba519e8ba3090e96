use std::process::{Command, Output};

fn kerrsq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kerrsq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn csv_rows(out: &Output) -> (Vec<String>, Vec<Vec<String>>) {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let mut r = csv::Reader::from_reader(out.stdout.as_slice());
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r
        .records()
        .map(|rec| rec.unwrap().iter().map(String::from).collect())
        .collect();
    (header, rows)
}

fn column(header: &[String], rows: &[Vec<String>], name: &str) -> Vec<f64> {
    let i = header
        .iter()
        .position(|h| h == name)
        .unwrap_or_else(|| panic!("no column {name}"));
    rows.iter().map(|r| r[i].parse().unwrap()).collect()
}

#[test]
fn quadspec_linear_row_is_shot_noise() {
    let out = kerrsq(&["quadspec", "--psi0", "0", "--omega0", "1", "--omega-range", "0:4:9"]);
    let (h, rows) = csv_rows(&out);
    assert_eq!(h, ["psi0", "omega_tau_r", "s_x", "s_y"]);
    assert_eq!(rows.len(), 9);
    for name in ["s_x", "s_y"] {
        assert!(column(&h, &rows, name).iter().all(|&v| v == 0.25));
    }
}

#[test]
fn quadspec_zero_frequency_minimum() {
    let out = kerrsq(&["quadspec", "--psi0-range", "0.5:5:10", "--omega-range", "0:4:401"]);
    let (h, rows) = csv_rows(&out);
    let psi = column(&h, &rows, "psi0");
    let w = column(&h, &rows, "omega_tau_r");
    let sx = column(&h, &rows, "s_x");
    for chunk in 0..10 {
        let range = chunk * 401..(chunk + 1) * 401;
        assert!(psi[range.clone()].iter().all(|&p| p == psi[range.start]));
        let best = range.clone().min_by(|&a, &b| sx[a].total_cmp(&sx[b])).unwrap();
        assert_eq!(w[best], 0.0);
    }
}

#[test]
fn quadspec_numbers_have_fourteen_digits() {
    let out = kerrsq(&[
        "quadspec",
        "--psi0",
        "1",
        "--omega-range",
        "0:1:2",
        "--phase",
        "fixed:0.3",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let line = text.lines().nth(1).unwrap();
    assert!(line
        .split(',')
        .all(|f| f.contains('e') && f.split('e').next().unwrap().len() >= 15));
}

#[test]
fn bandwidth_column() {
    let out = kerrsq(&["bandwidth", "--psi0-range", "0:100:101"]);
    let (h, rows) = csv_rows(&out);
    let w = column(&h, &rows, "delta_omega_tau_r");
    assert_eq!(w[0], 1.0);
    assert!((w[1] - 1.390).abs() < 1e-3);
    assert!((w[100] - 1.554).abs() < 1e-3);
    assert!(w.windows(2).all(|p| p[1] >= p[0]));
}

#[test]
fn photon_origin_curve() {
    let out = kerrsq(&["photon", "--psi0-range", "0:5:101", "--band-width", "0.75"]);
    let (h, rows) = csv_rows(&out);
    let psi = column(&h, &rows, "psi0");
    let r = column(&h, &rows, "r_tilde_simplified");
    assert_eq!(r[0], 0.0);
    assert!(r[1..].iter().all(|&v| v < 0.0));
    let best = (0..r.len()).min_by(|&a, &b| r[a].total_cmp(&r[b])).unwrap();
    assert!((0.5..=1.5).contains(&psi[best]), "minimum at {}", psi[best]);
}

#[test]
fn photon_off_centre_band() {
    let out = kerrsq(&[
        "photon",
        "--psi0-range",
        "0:3:7",
        "--band-center",
        "0.04",
        "--band-width",
        "2.5e-3",
    ]);
    let (h, rows) = csv_rows(&out);
    assert!(!h.iter().any(|c| c == "r_tilde_simplified"));
    let smooth = column(&h, &rows, "r_smooth");
    assert_eq!(smooth[0], 0.0);
    let weak = smooth[1].abs();
    assert!(smooth[3..].iter().all(|v| v.abs() > weak));
}

#[test]
fn photon_density_table() {
    let out = kerrsq(&["photon", "--table", "density", "--psi0", "1", "--omega-range", "-1:1:3"]);
    let (h, rows) = csv_rows(&out);
    assert_eq!(h, ["psi0", "omega_tau_p", "density_classical", "density_relaxing"]);
    let d = column(&h, &rows, "density_classical");
    assert!((d[1] - 1.0 / 5f64.sqrt()).abs() < 1e-13);
    assert_eq!(d[0], d[2]);
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = kerrsq(&[
            "photon",
            "--psi0-range",
            "0:2:5",
            "--format",
            "json",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        assert!(out.stdout.is_empty());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn json_mirrors_csv() {
    let csv_out = kerrsq(&["bandwidth", "--psi0-range", "0:2:5"]);
    let (h, rows) = csv_rows(&csv_out);
    let json_out = kerrsq(&["bandwidth", "--psi0-range", "0:2:5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&json_out.stdout).unwrap();
    assert_eq!(v["metadata"]["command"], "bandwidth");
    assert!(v["metadata"]["version"].is_string());
    let from_csv = column(&h, &rows, "delta_omega_tau_r");
    let from_json: Vec<f64> = v["columns"]["delta_omega_tau_r"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    for (a, b) in from_csv.iter().zip(&from_json) {
        assert!((a - b).abs() <= 1e-13 * b.abs());
    }
}

#[test]
fn validate_default_passes() {
    let out = kerrsq(&["validate"]);
    let (h, rows) = csv_rows(&out);
    assert!(rows.len() >= 20);
    let pass = h.iter().position(|c| c == "pass").unwrap();
    assert!(rows.iter().all(|r| r[pass] == "true"));
}

#[test]
fn validate_single_case_and_errors() {
    let (_, rows) = csv_rows(&kerrsq(&["validate", "--case", "photon-peak"]));
    assert_eq!(rows.len(), 1);
    assert_eq!(kerrsq(&["validate", "--case", "missing"]).status.code(), Some(2));
    assert_eq!(
        kerrsq(&["validate", "--case", "quadspec-round-trip", "--tol-scale", "1e-12"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(kerrsq(&["validate", "--tol-scale", "-1"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(kerrsq(&["quadspec", "--omega-range", "0:1:1"]).status.code(), Some(2));
    assert_eq!(kerrsq(&["quadspec", "--phase", "best"]).status.code(), Some(2));
    assert_eq!(
        kerrsq(&["quadspec", "--psi0", "1", "--nu", "0.5"]).status.code(),
        Some(2)
    );
    assert_eq!(kerrsq(&["bandwidth", "--psi0", "-1"]).status.code(), Some(2));
    assert_eq!(kerrsq(&["photon", "--band-width", "0"]).status.code(), Some(2));
    assert_eq!(kerrsq(&["frobnicate"]).status.code(), Some(2));
}
