use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_teleport-sim"));
    cmd.env_remove("TELEPORT_SIM_SEED");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn teleport_basis_state() {
    let v = json(&[
        "teleport", "--rho00", "1", "--rho01-re", "0", "--rho01-im", "0", "--alpha", "0.3",
        "--format", "json",
    ]);
    let out: Vec<f64> = v["rho_out_analytic"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|z| z.as_array().unwrap().iter().map(|x| x.as_f64().unwrap()))
        .collect();
    assert_eq!(out, vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    assert_eq!(v["outcomes"].as_array().unwrap().len(), 4);
    assert!((v["fidelity"].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn teleport_damps_coherence() {
    let v = json(&[
        "teleport", "--rho00", "0.5", "--rho01-re", "0.5", "--rho01-im", "0", "--alpha", "0.5",
        "--format", "json",
    ]);
    let off = v["rho_out_analytic"][1][0].as_f64().unwrap();
    assert!((off - 0.25).abs() < 1e-15);
    assert!(v["max_numeric_deviation"].as_f64().unwrap() < 1e-12);
    for o in v["outcomes"].as_array().unwrap() {
        assert!((o["probability"].as_f64().unwrap() - 0.25).abs() < 1e-12);
    }
}

#[test]
fn teleport_text_report() {
    let o = run(&["teleport", "--rho00", "0.3", "--rho01-re", "0.1", "--rho01-im", "-0.2", "--alpha", "0.7"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for label in ["Psi-", "Psi+", "Phi-", "Phi+", "rho_out", "fidelity", "max deviation"] {
        assert!(text.contains(label), "missing {label} in\n{text}");
    }
}

#[test]
fn teleport_rejects_non_positive_input() {
    let o = run(&["teleport", "--rho00", "0.5", "--rho01-re", "0.6", "--rho01-im", "0", "--alpha", "0.5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("positivity"));
}

#[test]
fn alpha_out_of_range_is_usage_error() {
    let o = run(&["teleport", "--rho00", "1", "--alpha", "1.5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn default_sweep() {
    let o = run(&["sweep"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "phi,phi_m,alpha,probability_up,fidelity,mc_estimate,mc_stderr,mc_shots");
    assert_eq!(lines.len() - 1, 61 * 51);

    let rows: Vec<Vec<&str>> = lines[1..].iter().map(|l| l.split(',').collect()).collect();
    let fid = |r: &Vec<&str>| r[4].parse::<f64>().unwrap();
    // φ = 0, α = 0
    assert_eq!(fid(&rows[0]), 1.0);
    // φ = π/2 is phi index 30, α = 0
    let mid = &rows[30 * 51];
    assert!((mid[0].parse::<f64>().unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
    assert!((fid(mid) - 0.5).abs() < 1e-15);
    assert!(rows.iter().all(|r| r[5].is_empty() && r[6].is_empty() && r[7].is_empty()));

    let again = run(&["sweep"]);
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn sweep_to_file_with_mc_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.json");
    let args = [
        "sweep", "--phi-steps", "3", "--alpha-steps", "2", "--shots", "500", "--seed", "4",
        "--format", "json", "--output", path.to_str().unwrap(),
    ];
    assert!(run(&args).status.success());
    let first = std::fs::read(&path).unwrap();
    let v: Value = serde_json::from_slice(&first).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    for key in ["phi", "phi_m", "alpha", "probability_up", "fidelity", "mc_estimate", "mc_stderr"] {
        assert!(rows[0][key].is_f64(), "{key}");
    }
    assert_eq!(rows[0]["mc_shots"], 500);

    assert!(run(&args).status.success());
    assert_eq!(first, std::fs::read(&path).unwrap());
}

#[test]
fn sweep_in_degrees() {
    let o = run(&["sweep", "--degrees", "--phi-min", "90", "--phi-max", "90", "--phi-steps", "1", "--alpha-steps", "3"]);
    assert!(o.status.success());
    let fids: Vec<f64> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(4).unwrap().parse().unwrap())
        .collect();
    for (got, want) in fids.iter().zip([0.5, 0.75, 1.0]) {
        assert!((got - want).abs() < 1e-15);
    }
}

#[test]
fn sweep_unwritable_path_is_io_failure() {
    let o = run(&["sweep", "--output", "/nonexistent-dir/x/y.csv"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn montecarlo_deterministic_case() {
    let v = json(&[
        "montecarlo", "--phi", "1.0", "--phi-m", "1.0", "--alpha", "1", "--shots", "100000",
        "--seed", "7", "--format", "json",
    ]);
    assert_eq!(v["estimate"].as_f64().unwrap(), 1.0);
    assert_eq!(v["z_score"].as_f64().unwrap(), 0.0);
}

#[test]
fn montecarlo_fully_dephased_equator() {
    let v = json(&[
        "montecarlo", "--phi", "1.5707963", "--phi-m", "1.5707963", "--alpha", "0", "--shots",
        "100000", "--format", "json",
    ]);
    assert!((v["estimate"].as_f64().unwrap() - 0.5).abs() < 0.01);
    assert!(v["z_score"].as_f64().unwrap().abs() < 3.0);
}

#[test]
fn montecarlo_same_seed_same_bytes() {
    let args = ["montecarlo", "--phi", "0.4", "--phi-m", "1.3", "--alpha", "0.6", "--shots", "20000", "--seed", "11"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn seed_from_environment() {
    let args = ["montecarlo", "--phi", "0.4", "--phi-m", "1.3", "--alpha", "0.6", "--shots", "5000"];
    let env = bin().args(args).env("TELEPORT_SIM_SEED", "11").output().unwrap();
    let flag = run(&[&args[..], &["--seed", "11"]].concat());
    assert_eq!(env.stdout, flag.stdout);
}

#[test]
fn otp_report() {
    let v = json(&["otp", "--shots", "10000", "--seed", "1", "--format", "json"]);
    assert_eq!(v["success_rate"].as_f64().unwrap(), 1.0);
    assert!(v["uncorrected_z"].as_f64().unwrap() < 3.0);
}

#[test]
fn otp_zero_shots_is_usage_error() {
    assert_eq!(run(&["otp", "--shots", "0"]).status.code(), Some(2));
}

#[test]
fn verify_passes_for_any_seed() {
    for seed in ["42", "43"] {
        let o = run(&["verify", "--seed", seed]);
        assert_eq!(o.status.code(), Some(0));
        let text = stdout(&o);
        assert!(text.contains("PASS  outcome-independence"));
        assert!(!text.contains("FAIL"));
    }
}
