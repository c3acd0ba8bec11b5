//! Integration tests for the command-line driver and the report contract.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qfano-verify"))
}

#[test]
fn list_prints_a_rich_registry() {
    let out = bin().arg("list").output().unwrap();
    assert!(out.status.success());
    let ids: Vec<&str> = std::str::from_utf8(&out.stdout)
        .unwrap()
        .lines()
        .collect();
    assert!(ids.len() >= 30, "only {} ids", ids.len());
    assert!(ids.contains(&"typeR.complexes"));
    assert!(ids.contains(&"typeR.mq.minors4"));
    assert!(ids.contains(&"intersection.typeR"));
    assert!(ids.contains(&"typeIR.general.univ_relations"));
    assert!(ids.contains(&"typeIR.special.fibers.f"));
}

#[test]
fn list_with_pattern_and_unknown_pattern() {
    let out = bin().args(["list", "typeR.mq*"]).output().unwrap();
    assert!(out.status.success());
    let ids: Vec<String> = std::str::from_utf8(&out.stdout)
        .unwrap()
        .lines()
        .map(String::from)
        .collect();
    assert_eq!(ids.len(), 5);
    assert!(ids.iter().all(|i| i.starts_with("typeR.mq.")));

    let out = bin().args(["list", "no.such.prefix"]).output().unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
}

#[test]
fn machine_reports_are_byte_identical_and_schema_valid() {
    let run = || {
        bin()
            .args([
                "run",
                "intersection",
                "typeIR.general",
                "--seed",
                "1",
                "--trials",
                "4",
                "--format",
                "machine",
            ])
            .output()
            .unwrap()
    };
    let a = run();
    let b = run();
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(a.stdout, b.stdout, "reports must be byte-identical");
    // one JSON object per line, round-tripping through the schema
    for line in std::str::from_utf8(&a.stdout).unwrap().lines() {
        let r: qfano_verify::report::CheckResult = serde_json::from_str(line).unwrap();
        assert_eq!(r.elapsed_ms, 0, "machine format normalizes elapsed time");
        assert!(!r.id.is_empty());
    }
}

#[test]
fn intersection_run_reports_the_chain_values() {
    let out = bin()
        .args(["run", "intersection.typeR", "--seed", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("deg C"));
    assert!(text.contains("12"));
    assert!(text.contains("-138"));
    assert!(text.contains("p_g"));
    assert!(text.contains("7"));
}

#[test]
fn clean_run_exits_zero_with_whitelisted_discrepancy() {
    let out = bin()
        .args([
            "run",
            "intersection",
            "--seed",
            "3",
            "--trials",
            "2",
            "--format",
            "machine",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "whitelisted discrepancy must not fail the run");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"status\":\"discrepancy\""));
}

#[test]
fn fail_fast_stops_on_injected_failure() {
    let out = bin()
        .args(["run", "debug*", "core*", "--fail-fast", "--trials", "2"])
        .env("QFV_INJECT_FAIL", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn zero_trials_is_a_config_error() {
    let out = bin().args(["run", "core", "--trials", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_seed_is_honored() {
    let with_env = bin()
        .args(["run", "typeR.mq.rank0", "--trials", "3", "--format", "machine"])
        .env("QFV_SEED", "99")
        .output()
        .unwrap();
    let with_flag = bin()
        .args([
            "run",
            "typeR.mq.rank0",
            "--seed",
            "99",
            "--trials",
            "3",
            "--format",
            "machine",
        ])
        .output()
        .unwrap();
    assert_eq!(with_env.stdout, with_flag.stdout);
}

#[test]
fn lforms_hook_reads_a_config() {
    // the 3-space that carries five rational special points: r12 = r14 =
    // r45 = 0, r13 = r34 + r35, r23 = -(r34 + r35), r25 = -r35, together
    // with the five points it cuts from the Plücker cone
    let dir = std::env::temp_dir().join(format!("qfv-lforms-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("forms.json");
    std::fs::write(
        &path,
        r#"{
            "case": "special",
            "forms": [
                {"rt12": "1"}, {"rt14": "1"}, {"rt45": "1"},
                {"rt13": "1", "rt34": "-1", "rt35": "-1"},
                {"rt23": "1", "rt34": "1", "rt35": "1"},
                {"rt25": "1", "rt35": "1"}
            ],
            "points": [
                ["0","0","0","1","0","0","0","0","0","0"],
                ["0","0","0","0","0","1","0","0","0","0"],
                ["0","1","0","0","-1","0","0","1","0","0"],
                ["0","1","0","1","-1","0","-1","0","1","0"],
                ["0","0","0","0","0","1","-1","-1","1","0"]
            ]
        }"#,
    )
    .unwrap();
    let out = bin()
        .args([
            "run",
            "typeIR.special.orbits",
            "--trials",
            "2",
            "--format",
            "machine",
        ])
        .arg("--lforms")
        .arg(&path)
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("typeIR.special.lforms.independence"), "{text}");
    assert!(text.contains(r#""id":"typeIR.special.lforms.points","status":"pass""#), "{text}");
    assert!(text.contains(r#""id":"typeIR.special.lforms.branch_nonzero","status":"pass""#), "{text}");
    assert!(out.status.success(), "{text}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn bad_lforms_file_is_a_config_error() {
    let out = bin()
        .args(["run", "typeIR.special.orbits", "--lforms", "/no/such/file.json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
