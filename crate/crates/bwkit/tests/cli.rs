//! End-to-end command-line behavior: JSON shape, exit codes, scenario
//! files and the report directory.

use std::process::Command;

fn bwkit(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_bwkit"))
        .args(args)
        .env_remove("BWKIT_REPORT_DIR")
        .output()
        .expect("binary runs")
}

#[test]
fn spectrum_reports_the_classic_ratio_in_json() {
    let out = bwkit(&["spectrum", "--A=-7", "--B=-8", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "bwkit-report/1");
    assert_eq!(v["reports"][0]["values"]["mass2_ratio"], "4/3");
    assert_eq!(v["reports"][0]["status"], "pass");
}

#[test]
fn malformed_inputs_exit_with_code_two() {
    let out = bwkit(&["spectrum", "--A=0.5", "--B=-8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let out = bwkit(&["bw1", "--check", "bogus"]);
    assert_eq!(out.status.code(), Some(2));

    let out = bwkit(&["run", "/nonexistent/scenario.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scenario_files_run_with_expectations() {
    let dir = std::env::temp_dir().join("bwkit-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.scenario");
    std::fs::write(
        &good,
        "name = classic-point\ntarget = dispersion-spectrum\nparam.A = -7\nparam.B = -8\nexpect.mass2_ratio = 4/3\n",
    )
    .unwrap();
    let out = bwkit(&["run", good.to_str().unwrap(), "--json"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["reports"][0]["scenario"], "classic-point");
    assert_eq!(v["reports"][0]["values"]["expectation: mass2_ratio"], true);

    // A wrong expectation turns the scenario into a failure (exit 1).
    let bad = dir.join("bad.scenario");
    std::fs::write(
        &bad,
        "name = wrong\ntarget = dispersion-spectrum\nparam.A = -7\nparam.B = -8\nexpect.mass2_ratio = 1/3\n",
    )
    .unwrap();
    let out = bwkit(&["run", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    // Malformed scenario content is an input error (exit 2) and the
    // message names the offending line.
    let broken = dir.join("broken.scenario");
    std::fs::write(&broken, "name = x\nnonsense\n").unwrap();
    let out = bwkit(&["run", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn json_scenarios_are_accepted() {
    let dir = std::env::temp_dir().join("bwkit-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("scenario.json");
    std::fs::write(
        &path,
        r#"{"name": "json-point", "target": "dispersion-spectrum", "params": {"A": "-7", "B": "-8"}}"#,
    )
    .unwrap();
    let out = bwkit(&["run", path.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["reports"][0]["values"]["mass2_ratio"], "4/3");
}

#[test]
fn report_directory_receives_timed_copies() {
    let dir = std::env::temp_dir().join("bwkit-report-dir-test");
    let _ = std::fs::remove_dir_all(&dir);
    let out = Command::new(env!("CARGO_BIN_EXE_bwkit"))
        .args(["bw1", "--check", "signs"])
        .env("BWKIT_REPORT_DIR", &dir)
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let body = std::fs::read_to_string(dir.join("sign-enumeration.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["values"]["distinct_systems"], 12);
    assert!(v["timing_seconds"].as_f64().is_some());
}

#[test]
fn single_check_json_is_deterministic() {
    let run = || bwkit(&["quanta", "--json"]).stdout;
    assert_eq!(run(), run());
}
