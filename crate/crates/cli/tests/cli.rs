use std::process::{Command, Output};

fn qkernel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qkernel")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn normalize_prints_canonical_text() {
    let o = qkernel(&["normalize", "P*P", "--alg", "ospq"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1");
    let o = qkernel(&["normalize", "Y"]);
    assert_eq!(stdout(&o).trim(), "K*P");
    let o = qkernel(&["normalize", "K*A+*Kinv"]);
    assert_eq!(stdout(&o).trim(), "s^2*A+");
}

#[test]
fn normalize_latex() {
    let o = qkernel(&["normalize", "K^-1", "--latex"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "K^{-1}");
}

#[test]
fn check_exit_codes() {
    let o = qkernel(&["check", "{A+, A-}", "==", "(K - K^-1)/(s - s^-1)", "--alg", "ospq"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert_eq!(stdout(&o).trim(), "holds");
    let o = qkernel(&["check", "A+*A- == A-*A+"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("fails"));
}

#[test]
fn parse_errors_exit_2() {
    let o = qkernel(&["normalize", "A+ A-"]);
    assert_eq!(o.status.code(), Some(2));
    let o = qkernel(&["normalize", "x", "--alg", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn suite_filter_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = qkernel(&["suite", "--filter", "equitable.*", "--json", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["schema"], 1);
    let recs = v["records"].as_array().unwrap();
    assert_eq!(recs.len(), 13);
    assert!(recs.iter().all(|r| r["status"] == "pass" && r["residual"] == ""));
}

#[test]
fn suite_hopf_passes() {
    let o = qkernel(&["suite", "--filter", "hopf.*", "--quiet"]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn suite_report_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let strip = |p: &std::path::Path| {
        let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap();
        for r in v["records"].as_array_mut().unwrap() {
            r.as_object_mut().unwrap().remove("wall_ms");
        }
        serde_json::to_string(&v).unwrap()
    };
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = qkernel(&["suite", "--filter", "{casimir,limits,qmq,confluence}.*", "--json", p.to_str().unwrap()]);
        assert!(o.status.success());
    }
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn corrupted_fixture_fails_suite() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.pres");
    std::fs::write(
        &path,
        "presentation bad\ngenerators A+ A- K Kinv\ninverse K Kinv\n\
         rule A- * A+ -> -A+*A- + (K - Kinv)/(s - s^-1)\n\
         rule K * A+ -> s*A+*K\nrule K * A- -> s^-2*A-*K\n\
         rule Kinv * A+ -> s^-2*A+*Kinv\nrule Kinv * A- -> s^2*A-*Kinv\n\
         rule K * Kinv -> 1\nrule Kinv * K -> 1\n",
    )
    .unwrap();
    let o = qkernel(&["suite", "--filter", "fixture.*", "--presentation", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL  fixture.bad.confluence"));
    let o = qkernel(&["confluence", "--alg", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn confluence_builtins() {
    for alg in ["ospq", "slq", "qbi", "bi"] {
        let o = qkernel(&["confluence", "--alg", alg]);
        assert!(o.status.success(), "{alg}: {}", stdout(&o));
        assert!(stdout(&o).contains("0 not joinable"));
    }
}

#[test]
fn rep_matrix_grid() {
    let o = qkernel(&["rep", "--N", "2", "--e", "1", "--matrix", "P"]);
    assert!(o.status.success());
    let grid: Vec<Vec<String>> = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(grid, vec![vec!["1", "0", "0"], vec!["0", "-1", "0"], vec!["0", "0", "1"]]);
    let o = qkernel(&["rep", "--N", "2", "--e", "-1", "--matrix", "K", "--eval-s", "2"]);
    let grid: Vec<Vec<String>> = serde_json::from_str(stdout(&o).trim()).unwrap();
    // K f_n = s^(2n+1) w f_n with w = s^-3
    assert_eq!(grid[0][0], "1/4");
    assert_eq!(grid[1][1], "1");
    assert_eq!(grid[2][2], "4");
    let o = qkernel(&["rep", "--N", "3", "--e", "1", "--matrix", "P"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn limits_report() {
    let o = qkernel(&["limits"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("qbi_relations I1I2: zero"));
    assert!(out.contains("structure_constants Ap_eq: pole at q=1"));
}

#[test]
fn step_limit_env() {
    let o = Command::new(env!("CARGO_BIN_EXE_qkernel"))
        .args(["normalize", "(A-)^3*(A+)^3"])
        .env("QKERNEL_STEP_LIMIT", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("step limit"));
}
