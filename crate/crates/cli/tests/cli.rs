use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_singbraid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn equality_and_exit_codes() {
    let o = run(&["equal", "--strands", "2", "s1 t1", "t1 s1"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "equal"));
    let o = run(&["equal", "--strands", "3", "t1 t2", "t2 t1"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(1), "different"));
    assert_eq!(
        run(&["equal", "--strands", "2", "s1", "s3"]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["equal", "--strands", "2", "s1"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&[
            "rep",
            "apply",
            "--rep",
            "phi9",
            "--strands",
            "2",
            "--braid",
            "s1"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "sp-presentation", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 13);
    assert!(!text.contains("FAIL"));
    assert_eq!(
        run(&["verify", "no-such-suite", "--n", "3"]).status.code(),
        Some(2)
    );
    let a = run(&["verify", "rs-roundtrip", "--n", "3", "--seed", "5"]);
    let b = run(&["verify", "rs-roundtrip", "--n", "3", "--seed", "5"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn representation_check_reports_failures() {
    assert_eq!(
        run(&["rep", "check", "--rep", "phi1", "--strands", "3"])
            .status
            .code(),
        Some(0)
    );
    let o = run(&["rep", "check", "--rep", "phi4:1", "--strands", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
    let o = run(&[
        "rep",
        "apply",
        "--rep",
        "phi1",
        "--strands",
        "2",
        "--braid",
        "s1 t1",
    ]);
    assert_eq!(
        stdout(&o),
        "x1 -> x1 x2 x1 x2 x1^-1 x2^-1 x1^-1\nx2 -> x1 x2 x1 x2^-1 x1^-1\n"
    );
}

#[test]
fn group_invariants() {
    let o = run(&[
        "invariant",
        "group",
        "--rep",
        "phi4:1",
        "--strands",
        "2",
        "--braid",
        "s1 t1",
        "--todd-coxeter",
        "1000",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("order: 2"));
    let o = run(&[
        "invariant",
        "group",
        "--rep",
        "phi1",
        "--strands",
        "2",
        "--braid",
        "s1 t1",
        "--abelianize",
        "--homs-into",
        "s3",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["abelianization"]["free_rank"], 1);
    assert_eq!(doc["homs"]["s3"], 12);
    assert_eq!(
        doc["presentation"]["generators"].as_array().unwrap().len(),
        2
    );
}

#[test]
fn presentations_in_all_formats() {
    let o = run(&["present", "--group", "sp", "--n", "3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["generators"].as_array().unwrap().len(), 6);
    assert_eq!(doc["relators"].as_array().unwrap().len(), 13);
    let gap = stdout(&run(&[
        "present", "--group", "pn", "--n", "3", "--format", "gap",
    ]));
    assert!(gap.starts_with("F := FreeGroup(") && gap.contains("rels := ["));
    assert_eq!(
        run(&["present", "--group", "center", "--n", "2"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn word_tools() {
    let o = run(&["perm", "--strands", "3", "t1 t2 t1"]);
    assert_eq!(stdout(&o), "pi: (1 3)\ntheta: (1 3)\n");
    assert_eq!(
        stdout(&run(&["rewrite", "--strands", "2", "t1 s1"])).trim(),
        "b12"
    );
    assert_eq!(
        run(&["rewrite", "--strands", "3", "s1"]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["comb", "--strands", "3", "t1 s1"]).status.code(),
        Some(1)
    );
    assert!(stdout(&run(&["parse", "--strands", "3", "s1 T2"])).contains("tau-positive: false"));
}

#[test]
fn singquandle_census_and_colorings() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("models.json");
    let path = path.to_str().unwrap();
    let o = run(&["sq", "census", "--order", "2", "--up-to-iso", "--out", path]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&[
        "sq",
        "colorings",
        "--strands",
        "2",
        "--braid",
        "s1 s1 t1",
        "--model",
        path,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let stabilized = run(&[
        "sq",
        "colorings",
        "--strands",
        "3",
        "--braid",
        "s1 s1 t1 S2",
        "--model",
        path,
    ]);
    assert_eq!(o.stdout, stabilized.stdout);
    assert!(stdout(&run(&[
        "sq",
        "present",
        "--strands",
        "2",
        "--braid",
        "s1 t1"
    ]))
    .starts_with("< x1, x2 |"));
}
