use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn ringvac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringvac")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn rows(csv_text: &str) -> Vec<Vec<String>> {
    let mut r = csv::Reader::from_reader(csv_text.as_bytes());
    r.records().map(|rec| rec.unwrap().iter().map(str::to_owned).collect()).collect()
}

const DEVICE: [&str; 4] = ["--beta", "100", "--i-cl-hat", "9000"];

#[test]
fn sweep_of_reference_device() {
    let out = ringvac(&[&["sweep", "--nu-end", "0.05", "--nu-step", "1e-4"][..], &DEVICE].concat());
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next().unwrap(), "nu,M,C,e_zp,e_cl,e_total,l_total,at_jump");
    let rows = rows(&text);
    assert_eq!(rows.len(), 501);
    let e_total: Vec<f64> = rows.iter().map(|r| r[5].parse().unwrap()).collect();
    let k = (0..e_total.len()).min_by(|&a, &b| e_total[a].total_cmp(&e_total[b])).unwrap();
    let nu_min: f64 = rows[k][0].parse().unwrap();
    assert!((nu_min - 0.01).abs() < 1e-12);
    assert!((nu_min - 0.009_999_000_199_950_014).abs() <= 1e-4);
    // Floats carry 17 significant digits.
    assert_eq!(rows[1][0], "1.0000000000000000e-4");
}

#[test]
fn neutral_sweep_column() {
    let out = ringvac(&["sweep", "--field", "neutral", "--nu-max", "0.9", "--nu-step", "0.05"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows = rows(&text);
    assert_eq!(rows.len(), 18);
    for r in rows {
        let nu: f64 = r[0].parse().unwrap();
        let e_zp: f64 = r[3].parse().unwrap();
        assert_eq!(e_zp, -(1.0 + nu * nu) / 48.0);
        assert_eq!((r[1].as_str(), r[2].as_str()), ("0", "1"));
    }
}

#[test]
fn identical_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for path in [&a, &b] {
        let out = ringvac(
            &[&["sweep", "--format", "json", "--nu-max", "0.05", "--output", path.to_str().unwrap()][..], &DEVICE]
                .concat(),
        );
        assert!(out.status.success());
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert_eq!(a, b);
    let doc: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(doc["provenance"]["constants"]["hbar"], 1.054571817e-34);
    assert_eq!(doc["provenance"]["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(doc["rows"].as_array().unwrap().len(), 50_000 / 1_000);
}

#[test]
fn empty_range_creates_no_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("never.csv");
    let out = ringvac(&["sweep", "--nu-start", "0.3", "--nu-end", "0.1", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("empty sweep range"));
    assert!(!path.exists());
}

#[test]
fn unwritable_output_names_the_path() {
    let out = ringvac(&["sweep", "--output", "/nonexistent-dir/out.csv"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent-dir/out.csv"));
}

#[test]
fn settings_file_under_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("device.toml");
    std::fs::write(&path, "beta = 100\ni_cl_hat = 9000\nnu_max = 0.05\n").unwrap();
    let cfg = path.to_str().unwrap();
    let doc = json_of(&ringvac(&["minimize", "--config", cfg]));
    assert_eq!(doc["report"]["rotating_ground_state"], true);
    let doc = json_of(&ringvac(&["minimize", "--config", cfg, "--i-cl-hat", "1e6"]));
    assert_eq!(doc["report"]["nu_star"], 0.0);
    assert_eq!(doc["provenance"]["config"]["i_cl_hat"], 1e6);

    std::fs::write(&path, "beta = 100\nbogus = 1\n").unwrap();
    assert_eq!(ringvac(&["minimize", "--config", cfg]).status.code(), Some(2));
}

#[test]
fn minimize_reports() {
    let doc = json_of(&ringvac(&[&["minimize", "--nu-max", "0.05", "--radius-si", "1e-6"][..], &DEVICE].concat()));
    let report = &doc["report"];
    assert_eq!(report["rotating_ground_state"], true);
    assert!((report["nu_star"].as_f64().unwrap() - 0.009_999_000_199_950_014).abs() < 1e-17);
    assert!(report["candidates"].as_array().unwrap().len() >= 2);
    assert!(doc["si"]["omega_star"].as_f64().unwrap() > 0.0);
    assert!(doc["provenance"]["regulator"]["epsilons"].is_array());

    let doc = json_of(&ringvac(&["minimize", "--field", "neutral"]));
    assert_eq!(doc["report"]["boundary_hit"], true);
    assert!(doc["si"].is_null());
}

#[test]
fn estimate_for_micron_ring() {
    let doc = json_of(&ringvac(&["estimate", "--radius-si", "1e-6", "--b-field-si", "10", "--winding", "1000"]));
    let beta = doc["beta"].as_f64().unwrap();
    assert!((beta - 15_192.674_488_095_105).abs() <= 1e-12 * beta);
    let omega = doc["omega_ch_nonrelativistic_si"].as_f64().unwrap();
    assert!((omega - 1.973_269_803_383_964e10).abs() <= 1e-12 * omega);
    // The exact first jump sits below 1/β by a relative 1/β².
    let exact = doc["omega_ch_si"].as_f64().unwrap();
    assert!(((omega - exact) / omega - 1.0 / (beta * beta)).abs() <= 1e-12);
    assert_eq!(doc["requested_winding"]["c_factor"], 6_006_001);

    let doc = json_of(&ringvac(&["estimate", "--radius-si", "1e-6"]));
    assert_eq!(doc["beta"], 0.0);
    assert!(doc["nu_ch"].is_null());
    assert!(doc["omega_ch_si"].is_null());
    assert!(doc["omega_ch_nonrelativistic_si"].is_null());

    assert_eq!(ringvac(&["estimate", "--radius-si", "-1"]).status.code(), Some(2));
    assert_eq!(ringvac(&["estimate"]).status.code(), Some(2));
}

#[test]
fn branches_greens_and_t00() {
    let out = ringvac(&[&["branches", "--nu-max", "0.05"][..], &DEVICE].concat());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next().unwrap(), "n,nu_lo,nu_hi,C,curvature,offset");
    assert_eq!(rows(&text).len(), 6);

    let doc = json_of(&ringvac(&["greens", "--phi", "0.0"]));
    assert_eq!(doc["green"][0], 0.0);
    let doc = json_of(&ringvac(&["greens", "--nu", "0.5", "--delta", "1e-4", "--m-max", "1000000"]));
    let closed = &doc["structure_function"];
    let series = &doc["series"]["value"];
    for k in 0..2 {
        assert!((closed[k].as_f64().unwrap() - series[k].as_f64().unwrap()).abs() < 1e-6);
    }

    let doc = json_of(&ringvac(&["t00", "--nu", "0.5"]));
    assert!(doc["relative_error"].as_f64().unwrap() <= 1e-4);
    assert_eq!(ringvac(&["t00", "--format", "csv"]).status.code(), Some(2));
}

#[test]
fn verify_exit_code() {
    let out = ringvac(&["verify"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.contains("PASS  static Casimir -1/48"));
    assert!(text.contains("PASS  t00 nu=0.5 -> -1.25/(96pi)"));
    assert!(text.contains("PASS  L=dE/dnu on branch"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn bad_flags_are_rejected() {
    assert!(!ringvac(&["sweep", "--field", "scalar"]).status.success());
    assert!(!ringvac(&["sweep", "--i-cl-si", "1", "--mass-per-length", "1"]).status.success());
    assert!(!Path::new("never.csv").exists());
}
