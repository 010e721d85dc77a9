use std::path::PathBuf;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_equideg");
const BUNDLED: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/models/six-membranes.json");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("equideg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

/// The bundled config with one JSON edit applied.
fn edited(name: &str, edit: impl FnOnce(&mut serde_json::Value)) -> PathBuf {
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(BUNDLED).unwrap()).unwrap();
    edit(&mut v);
    let p = scratch(name);
    std::fs::write(&p, v.to_string()).unwrap();
    p
}

#[test]
fn bessel_grid() {
    let out = stdout(&["bessel", "--m-max", "3", "--n-max", "2"]);
    assert_eq!(out.lines().count(), 5);
    assert!(out.lines().nth(1).unwrap().starts_with("0\t5.783"));
    let v: serde_json::Value = serde_json::from_str(&stdout(&["bessel", "--format", "json"])).unwrap();
    assert_eq!(v["s"].as_array().unwrap().len(), 11);
    assert_eq!(v["s"][0].as_array().unwrap().len(), 9);
}

#[test]
fn decompose_and_critical_points() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["decompose", "--format", "json"])).unwrap();
    let mults: Vec<u64> = v.as_array().unwrap().iter().map(|r| r["multiplicity"].as_u64().unwrap()).collect();
    assert_eq!(mults, vec![1, 0, 1, 1, 0]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&["critical-points", "--format", "json"])).unwrap();
    let ids: Vec<String> = v.as_array().unwrap().iter().map(|c| c["id"].to_string()).collect();
    assert_eq!(ids, ["[1,3,2]", "[1,3,3]", "[1,3,0]", "[2,1,2]", "[2,1,3]"]);
}

#[test]
fn degrees_invariants_and_verdicts() {
    let out = stdout(&["basic-degree", "--m", "1", "--j", "0"]);
    assert_eq!(out.trim(), "(G) - (D2^D1 x^S4 S4p)");
    let out = stdout(&["invariant", "--id", "1,3,2", "--mode", "full"]);
    assert!(out.starts_with("omega(1,3,2) [full] = "));
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["global", "--orbit-type", "(D2^D1 x^S4 S4p)", "--format", "json"])).unwrap();
    assert_eq!(v["conclusion"], "UnboundedBranch");
    assert_eq!(v["members"], serde_json::json!([[1, 3, 0]]));
    assert_eq!(v["symmetry"], "(D6^D3 x^S4 S4p)");
}

#[test]
fn report_to_file_is_deterministic() {
    let a = scratch("a.json");
    let b = scratch("b.json");
    stdout(&["report", "--format", "json", "--out", a.to_str().unwrap()]);
    stdout(&["--config", BUNDLED, "report", "--format", "json", "--out", b.to_str().unwrap()]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let text = stdout(&["report"]);
    assert!(text.contains("verdicts"));
}

#[test]
fn kernel_grid_csv() {
    let out = stdout(&["kernel-grid", "--id", "1,3,2", "--orbit-type", "(D2^D1 x^D4 D4p)", "--resolution", "10"]);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap(), "r,theta,u1,u2,u3,u4,u5,u6");
    assert_eq!(lines.count(), 100);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--config", "/nonexistent.json", "report"]).status.code(), Some(2));
    let bad = scratch("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(run(&["--config", bad.to_str().unwrap(), "decompose"]).status.code(), Some(2));
    let skew = edited("skew.json", |v| {
        v["linearization"]["coupling"] = serde_json::json!([
            [1, 0.5, 0, 0, 0, 0], [0.5, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]
        ]);
    });
    assert_eq!(run(&["--config", skew.to_str().unwrap(), "decompose"]).status.code(), Some(2));
    assert_eq!(run(&["global", "--orbit-type", "(nonsense)"]).status.code(), Some(2));
    assert_eq!(run(&["invariant", "--id", "1,0,0"]).status.code(), Some(2));
    // d = 0 makes every block cross at the same alpha
    let flat = edited("flat.json", |v| v["linearization"]["coupling"]["d"] = serde_json::json!(0.0));
    let out = run(&["--config", flat.to_str().unwrap(), "invariant", "--id", "1,3,0"]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(run(&["report", "--out", "/nonexistent/dir/r.json"]).status.code(), Some(2));
    assert_ne!(run(&["no-such-command"]).status.code(), Some(0));
}
