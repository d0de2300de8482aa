use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_theta-trace")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn theta_of_c2() {
    let o = run(&["theta", "--group", "cyclic:2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "[C/C] - 1/2[C/e]");
}

#[test]
fn hc_of_q() {
    let o = run(&["hc", "--algebra", "Q", "--degree", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "(1,0,1,0,1)"), "{}", stdout(&o));
}

#[test]
fn hh_json_output() {
    let o = run(&["hh", "--algebra", "Q[S3]", "--degree", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dims"], serde_json::json!([3, 0, 0]));
    assert_eq!(v["theory"], "HH");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["theta", "--group", "{\"kind\":\"perm\""]).status.code(), Some(2));
    assert_eq!(run(&["theta", "--group", "S3"]).status.code(), Some(2));
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["hc", "--algebra", "Q", "--degree", "1"]).status.code(), Some(2));
}

#[test]
fn capability_errors_exit_2() {
    let o = run(&["hh", "--algebra", "Q[A4]", "--degree", "4", "--budget", "100"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("capability"));
}

#[test]
fn group_checks_pass() {
    for cmd in ["defect", "dtr", "chern", "marks"] {
        let o = run(&[cmd, "--group", "S3"]);
        assert_eq!(o.status.code(), Some(0), "{cmd}: {}", stdout(&o));
    }
}

#[test]
fn verify_single_group_has_only_its_checks() {
    let o = run(&["verify", "--group", "cyclic:4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], true);
    let ids: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert!(ids.iter().all(|id| *id == "exactla.selftest" || id.ends_with("[C4]")), "{ids:?}");
    assert!(ids.contains(&"burnside.theta[C4]"));
    assert!(!ids.iter().any(|id| id.starts_with("rep.defect_noncyclic")));
    for key in ["version", "config", "checks", "verdict"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    for key in ["id", "anchor", "inputs", "got", "want", "provenance", "verdict", "ms"] {
        assert!(v["checks"][0].get(key).is_some(), "{key}");
    }
}

#[test]
fn regenerated_fixtures_round_trip() {
    let path = std::env::temp_dir().join(format!("theta-trace-fixtures-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let o = run(&["verify", "--regen-fixtures", "--group", "S3", "--fixtures", p]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("\"S3\""));
    let o = run(&["verify", "--group", "S3", "--fixtures", p, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["checks"][1]["inputs"]["oracle"], "fixture");
    std::fs::remove_file(&path).ok();
}
