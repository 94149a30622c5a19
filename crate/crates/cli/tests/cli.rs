use std::fs;
use std::path::PathBuf;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["casimir"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = casimir::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = args.to_vec();
    a.push("--json");
    let (code, out, err) = run(&a);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).expect("valid json")
}

fn output(v: &serde_json::Value, name: &str) -> f64 {
    v["outputs"].as_array().unwrap().iter().find(|o| o["name"] == name).unwrap()["value"].as_f64().unwrap()
}

fn temp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("casimir-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn rindler_force_both_methods() {
    let v = json(&["rindler-force", "--a", "1", "--A", "1", "--B", "2", "--method", "both"]);
    assert!((output(&v, "ratio_pressure_over_energy") - 0.5).abs() < 1e-12);
    assert!((output(&v, "pressure_force") + 0.0681126).abs() < 1e-6);
    assert!((output(&v, "energy_force") + 0.1362253).abs() < 1e-6);
    assert!(v["version"].is_string());
    assert!(v["conventions"].as_str().unwrap().contains("hbar=c=1"));
}

#[test]
fn text_output_starts_with_units_banner() {
    let (code, out, _) = run(&["rindler-energy", "--A", "1", "--B", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# natural units"));
    let (_, quiet, _) = run(&["--quiet", "rindler-energy", "--A", "1", "--B", "2"]);
    assert!(!quiet.starts_with('#'));
}

#[test]
fn validation_errors_exit_one() {
    let (code, _, err) = run(&["rindler-force", "--A", "1", "--B", "0.5"]);
    assert_eq!(code, 1);
    assert!(err.contains("mirror_order"));
    let (code, _, err) = run(&["desitter-force", "--H", "0"]);
    assert_eq!(code, 1);
    assert!(err.contains("--flat-limit"));
    let (code, _, _) = run(&["rindler-force", "--A", "1"]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["--json", "--csv", "verify"]);
    assert_eq!(code, 1);
}

#[test]
fn json_errors_are_structured() {
    let (code, out, err) = run(&["--json", "rindler-force", "--A", "1", "--B", "0.5"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    let v: serde_json::Value = serde_json::from_str(&err).unwrap();
    assert_eq!(v["error"]["kind"], "mirror_order");
    assert_eq!(v["error"]["exit_code"], 1);
}

#[test]
fn verify_exit_codes() {
    let (code, _, _) = run(&["verify"]);
    assert_eq!(code, 0);
    let (code, out, _) = run(&["--tol", "1e-15", "--json", "verify"]);
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["failed"].as_u64().unwrap() > 0);
    let (code, _, _) = run(&["--tol", "-1", "verify"]);
    assert_eq!(code, 1);
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["--version"]).0, 0);
    assert_eq!(run(&["sweep", "--help"]).0, 0);
    assert_eq!(run(&["no-such-command"]).0, 1);
}

#[test]
fn desitter_flat_limit_flag() {
    let v = json(&["desitter-force", "--flat-limit"]);
    let f = output(&v, "total");
    assert!((f + std::f64::consts::PI.powi(2) / 240.0).abs() < 1e-12);
}

#[test]
fn sweep_is_deterministic_and_ordered() {
    let args = [
        "sweep",
        "--param",
        "tau",
        "--start",
        "-1",
        "--stop",
        "1",
        "--count",
        "9",
        "rindler-force",
        "--A",
        "1",
        "--B",
        "2",
    ];
    let (c1, first, _) = run(&args);
    let (c2, second, _) = run(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(first, second);
    let lines: Vec<&str> = first.lines().collect();
    assert_eq!(lines.len(), 10);
    assert!(lines[0].starts_with("command,index,"));
    for (i, line) in lines[1..].iter().enumerate() {
        assert!(line.starts_with(&format!("rindler-force,{i},")));
    }
}

#[test]
fn sweep_to_file_matches_stdout() {
    let path = temp("sweep.csv");
    let base = [
        "sweep",
        "--param",
        "A",
        "--start",
        "1",
        "--stop",
        "100",
        "--count",
        "3",
        "--scale",
        "log",
        "rindler-force",
        "--L",
        "1",
    ];
    let (_, stdout, _) = run(&base);
    let mut with_out = vec!["--out", path.to_str().unwrap()];
    with_out.extend_from_slice(&base);
    let (code, empty, _) = run(&with_out);
    assert_eq!(code, 0);
    assert!(empty.is_empty());
    assert_eq!(fs::read_to_string(&path).unwrap(), stdout);
}

#[test]
fn sweep_rejects_bad_specs() {
    let tail = ["rindler-force", "--A", "1", "--B", "2"];
    for head in [
        vec!["sweep", "--param", "tau", "--start", "0", "--stop", "1", "--count", "1"],
        vec!["sweep", "--param", "H", "--start", "0", "--stop", "1", "--count", "3"],
        vec!["sweep", "--param", "A", "--start", "0", "--stop", "1", "--count", "3", "--scale", "log"],
    ] {
        let mut args = head.clone();
        args.extend_from_slice(&tail);
        assert_eq!(run(&args).0, 1, "{args:?}");
    }
}

#[test]
fn config_file_supplies_defaults_and_flags_override() {
    let path = temp("cavity.cfg");
    fs::write(&path, "# cavity\na = 1\nA = 1\nB = 2\n").unwrap();
    let p = path.to_str().unwrap();
    let from_file = json(&["--config", p, "rindler-force"]);
    assert!((output(&from_file, "energy_force") + 0.1362253).abs() < 1e-6);
    let overridden = json(&["--config", p, "rindler-force", "--B", "4"]);
    let expected = -std::f64::consts::PI / (24.0 * 4.0 * 4f64.ln().powi(2));
    assert!((output(&overridden, "energy_force") - expected).abs() < 1e-12);
}

#[test]
fn csv_single_record() {
    let (code, out, _) = run(&["--csv", "anomaly-trace", "--dim", "4", "--species", "maxwell", "--H", "1"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().count(), 2);
}
