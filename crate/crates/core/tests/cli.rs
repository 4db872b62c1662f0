use std::process::{Command, Output};

fn greedybench(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_greedybench"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

const DW: &str = r#"{"kind":"dw","weight":{"prefix":["1"],"tail":"1/3"}}"#;

#[test]
fn norm_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("dw.json");
    let vector = dir.path().join("f.json");
    std::fs::write(&spec, DW).unwrap();
    std::fs::write(&vector, r#"{"entries":{"1":"1","2":"1/3"}}"#).unwrap();
    let out = greedybench(&["norm", "--spec", spec.to_str().unwrap(), "--vector", vector.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "10/9");
}

#[test]
fn hidden_oracle_flag() {
    let out = greedybench(&["norm", "--spec", DW, "--vector", r#"{"entries":{"1":"1","2":"1/3","3":"-1/3"}}"#, "--oracle"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["value"], "1");
    assert_eq!(v["agree"], true);
    let help = stdout(&greedybench(&["norm", "--help"]));
    assert!(!help.contains("--oracle"));
}

#[test]
fn repro_csv_columns() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("out.csv");
    let out = greedybench(&["repro", "kn-curve", "--n", "16", "--csv", csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,omega_n,K_n"));
    assert_eq!(lines.count(), 16);
}

#[test]
fn certify_ks_emits_certificate() {
    let out = greedybench(&["certify", "ks", "--spec", DW, "--family", "default-grid"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["kind"], "suppression");
    assert_eq!(v["value"], "10/9");
    assert_eq!(v["bound_kind"], "lower_bound");
    assert!(v["witness"]["f"]["entries"].is_object());
}

#[test]
fn dual_and_tga() {
    let hex = r#"{"kind":"polyhedral","family":{"preset":"hexagon","alpha":"1/2"}}"#;
    let out = greedybench(&["dual", "--spec", hex, "--functional", r#"["1","0"]"#]);
    assert_eq!(stdout(&out).trim(), "2");

    let out = greedybench(&["tga", "--spec", DW, "--vector", r#"{"entries":{"1":"1","2":"1/3","3":"-1/3"}}"#, "--sigma", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["trace"][0]["residual"], "1");
    assert_eq!(v["trace"][3]["residual"], "0");
    assert_eq!(v["sigma"]["lower_bound"], "0");
}

#[test]
fn certify_subcommands() {
    let cases: &[&[&str]] = &[
        &["certify", "lattice", "--spec", DW, "--f", r#"{"entries":{"1":"1","2":"1/3","3":"1/3"}}"#, "--g", r#"{"entries":{"1":"1","2":"1/3","3":"-1/3"}}"#],
        &["certify", "property-a", "--spec", DW, "--instance", r#"{"f":{"entries":{"1":"1/2"}},"a":{"2":"+"},"b":{"3":"-","4":"+"}}"#],
        &["certify", "superdemocracy", "--spec", DW, "--m", "3"],
        &["certify", "ucc", "--weight", r#"{"prefix":["1"],"tail":"1/3"}"#, "--m", "4"],
        &["certify", "quasi-greedy", "--spec", DW, "--vector", r#"{"entries":{"1":"1","2":"1/3"}}"#],
        &["certify", "almost-greedy", "--spec", DW, "--vector", r#"{"entries":{"1":"1","2":"1/2"}}"#],
    ];
    for args in cases {
        let out = greedybench(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        serde_json::from_slice::<serde_json::Value>(&out.stdout).unwrap();
    }
}

#[test]
fn exit_codes() {
    assert_eq!(greedybench(&["repro", "no-such-scenario"]).status.code(), Some(2));
    assert_eq!(greedybench(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(greedybench(&["norm", "--spec", "{", "--vector", "{}"]).status.code(), Some(2));
    // a grid that misses a = 1/3 cannot reach 10/9
    assert_eq!(greedybench(&["repro", "remark-10-9", "--grid", "10", "--count", "10"]).status.code(), Some(1));
}

#[test]
fn list_scenarios() {
    let out = stdout(&greedybench(&["list-scenarios"]));
    for name in ["k1-witness", "kn-curve", "bad-dual", "hexagon", "pafinite", "lattice-ratio", "ucc-growth", "remark-10-9", "sandwich+compare"] {
        assert!(out.contains(name), "{name}");
    }
}

#[test]
fn repro_json_is_deterministic() {
    let a = greedybench(&["repro", "sandwich+compare", "--count", "300", "--seed", "5", "--json"]);
    let b = greedybench(&["repro", "sandwich+compare", "--count", "300", "--seed", "5", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
