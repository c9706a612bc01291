use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use ministokes::mesh::io::load_mesh;
use ministokes::mesh::{generate_mesh, Rect};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ministokes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn value(text: &str, key: &str) -> f64 {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key} = ")))
        .unwrap_or_else(|| panic!("{key} missing in\n{text}"))
        .parse()
        .unwrap()
}

#[test]
fn mesh_round_trip_and_quality() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.txt");
    let o = run(&["mesh", "--h0", "0.1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let loaded = load_mesh(&path).unwrap();
    let generated = generate_mesh(Rect::UNIT_SQUARE, 0.1).unwrap();
    assert_eq!(loaded.vertices, generated.vertices);
    assert_eq!(loaded.triangles, generated.triangles);
    let text = stdout(&o);
    assert!(value(&text, "min_q1") >= 0.7);
    assert!(value(&text, "min_q2") >= 0.7);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["mesh", "--h0", "-1"][..],
        &["mesh", "--h0", "5"],
        &["solve", "--problem", "9", "--h0", "0.1"],
        &["solve", "--problem", "1"],
        &["study", "--h0", "0.1,0.2,0.05"],
        &["study", "--h0", "0.2,0.1"],
        &["study", "--problem", "0"],
        &["verify", "--problem", "8"],
        &["solve", "--problem", "1", "--h0", "0.1", "--tol", "2"],
        &["frobnicate"],
        &[],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn help_exits_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn solve_problem_1() {
    let o = run(&["solve", "--problem", "1", "--h0", "0.1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for key in ["err_u_l2", "err_u_h1", "err_p_l2", "err_ihu_l2", "err_ihu_h1", "err_ul_l2", "err_ul_h1", "div_uh", "div_uhl"] {
        let v = value(&text, key);
        assert!(v.is_finite() && v > 0.0, "{key} = {v}");
    }
    assert!(value(&text, "residual") <= 1e-10);
}

#[test]
fn solve_problem_7() {
    let o = run(&["solve", "--problem", "7", "--h0", "0.1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(value(&stdout(&o), "residual") <= 1e-5);
}

#[test]
fn solve_on_mesh_file_with_json() {
    let dir = tempfile::tempdir().unwrap();
    let mesh = dir.path().join("m.txt");
    let json = dir.path().join("r.json");
    assert_eq!(run(&["mesh", "--h0", "0.2", "--out", mesh.to_str().unwrap()]).status.code(), Some(0));
    let o = run(&["solve", "--problem", "3", "--mesh-file", mesh.to_str().unwrap(), "--out", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["problem"], 3);
    assert_eq!(v["err_u_l2"].as_f64().unwrap(), value(&stdout(&o), "err_u_l2"));

    // Problem 7 lives on a different square.
    let o = run(&["solve", "--problem", "7", "--mesh-file", mesh.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn starved_solver_exits_one() {
    let o = run(&["solve", "--problem", "1", "--h0", "0.1", "--maxit", "5", "--tol", "1e-18"]);
    assert_eq!(o.status.code(), Some(1), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("converged = false"));
    assert!(value(&text, "residual").is_finite());
}

#[test]
fn verify_exit_status() {
    let o = run(&["verify", "--problem", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(value(&text, "max_momentum_residual") <= 1e-8);
    assert!(value(&text, "max_divergence") <= 1e-8);
    assert!(value(&text, "pressure_mean").abs() <= 1e-8);
    assert!(value(&text, "max_boundary_mismatch") <= 1e-8);

    let o = run(&["verify", "--problem", "1"]);
    assert!(value(&stdout(&o), "pressure_mean").abs() <= 1e-10);
    let o = run(&["verify", "--problem", "3"]);
    assert!(value(&stdout(&o), "max_divergence") <= 1e-12);
}

fn rows(path: &Path) -> Vec<Vec<String>> {
    let mut r = csv::Reader::from_path(path).unwrap();
    r.records().map(|rec| rec.unwrap().iter().map(String::from).collect()).collect()
}

#[test]
fn study_files_are_stable_and_parseable() {
    let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
    for d in &dirs {
        let o = run(&[
            "study", "--problem", "1,3", "--h0", "0.2,0.1,0.05", "--seed", "4", "--out", d.path().to_str().unwrap(), "--json",
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    }
    for name in ["results.csv", "rates.csv", "ratios.csv", "study.json"] {
        let a = fs::read(dirs[0].path().join(name)).unwrap();
        let b = fs::read(dirs[1].path().join(name)).unwrap();
        assert_eq!(a, b, "{name} differs between runs");
    }

    let results = rows(&dirs[0].path().join("results.csv"));
    assert_eq!(results.len(), 6);
    assert_eq!(results[0].len(), 17);
    let problems: Vec<&str> = results.iter().map(|r| r[0].as_str()).collect();
    assert_eq!(problems, ["1", "1", "1", "3", "3", "3"]);
    for r in &results {
        for v in &r[4..13] {
            let x: f64 = v.parse().unwrap();
            assert!(x.is_finite() && x > 0.0);
            assert_eq!(v.split('e').next().unwrap().replace(['.', '-'], "").len(), 17);
        }
    }

    let rates = rows(&dirs[0].path().join("rates.csv"));
    assert_eq!(rates.len(), 2);
    let u_h1: f64 = rates[0][3].parse().unwrap();
    assert!((u_h1 - 1.0).abs() < 0.3, "u H1 rate {u_h1}");

    for r in rows(&dirs[0].path().join("ratios.csv")) {
        let div: f64 = r[4].parse().unwrap();
        assert!(div > 1.0, "divergence ratio {div}");
    }

    let json: serde_json::Value = serde_json::from_slice(&fs::read(dirs[0].path().join("study.json")).unwrap()).unwrap();
    assert_eq!(json["studies"].as_array().unwrap().len(), 2);
    assert_eq!(json["config"]["options"]["seed"], 4);
}

#[test]
fn table1_writes_seven_rate_rows() {
    let d = tempfile::tempdir().unwrap();
    let o = run(&["table1", "--h0", "0.2,0.1,0.05", "--out", d.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let rates = rows(&d.path().join("rates.csv"));
    assert_eq!(rates.len(), 7);
    for (i, r) in rates.iter().enumerate() {
        assert_eq!(r[0], (i + 1).to_string());
        assert_eq!(r.last().unwrap(), "ok");
    }
}
