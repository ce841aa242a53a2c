use std::process::Command;

fn symrees(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_symrees")).args(args).output().expect("binary runs")
}

#[test]
fn passing_scenario_exits_zero_with_json() {
    let out = symrees(&["verify", "fitting", "--m", "4", "--n", "3", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["scenario"], "fitting");
    assert_eq!(v["checks"].as_array().unwrap().len(), 3);
}

#[test]
fn json_is_byte_identical_across_runs() {
    let args = ["verify", "eta", "--seed", "4"];
    assert_eq!(symrees(&args).stdout, symrees(&args).stdout);
}

#[test]
fn configuration_errors_exit_three() {
    for args in [
        vec!["verify", "nope"],
        vec!["verify", "eima", "--m", "4"],
        vec!["verify", "fitting", "--field", "fp:4"],
        vec!["verify", "eta", "--fixture", "missing"],
        vec!["verify", "fitting", "--format", "yaml"],
        vec!["verify", "fitting", "--budget-secs", "-1"],
        vec!["verify", "fitting", "--bogus"],
    ] {
        let out = symrees(&args);
        assert_eq!(out.status.code(), Some(3), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn exhausted_budget_exits_two() {
    let out = symrees(&["verify", "kernel-pi", "--max-steps", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn failing_check_exits_one_with_witness() {
    let out = symrees(&["verify", "implicit-core", "--fixture", "tchernev", "--field", "fp:32003"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let failing: Vec<_> = v["checks"].as_array().unwrap().iter().filter(|c| c["status"] == "fail").collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().all(|c| !c["witness"].as_str().unwrap().is_empty()));
}

#[test]
fn out_flag_writes_the_report() {
    let dir = std::env::temp_dir().join(format!("symrees-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.txt");
    let out =
        symrees(&["verify", "cremona", "--fixture", "fix-c3", "--format", "text", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("chain-rule determinant identity"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn list_names_every_scenario() {
    let out = symrees(&["list"]);
    let text = String::from_utf8(out.stdout).unwrap();
    for name in [
        "fitting",
        "sat-powers",
        "cremona",
        "eima",
        "eta",
        "implicit-core",
        "kernel-pi",
        "w-nzd",
        "hilbert-symbolic",
        "erratic",
    ] {
        assert!(text.lines().any(|l| l.starts_with(name)), "{name}");
    }
}
