use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_starforge")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn star_products_print_series() {
    let o = run(&["star", "moyal", "x1", "x2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "x1*x2 - nu");
    let o = run(&["star", "bracket", "x1", "x2"]);
    assert_eq!(stdout(&o).trim(), "-1");
    let o = run(&["star", "lambda", "--group", "rn", "--n", "1", "--lambda", "0", "x2", "x1"]);
    assert_eq!(stdout(&o).trim(), "x1*x2 + 2*nu");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "frt"]).status.code(), Some(0));
    assert_eq!(run(&["ybe", "--rmatrix", "sl2q.json"]).status.code(), Some(0));
    assert_eq!(run(&["hopf", "twist", "--alg", "sl2", "--twist", "e_square"]).status.code(), Some(1));
    assert_eq!(run(&["star", "moyal", "--bogus", "x1", "x2"]).status.code(), Some(2));
    assert_eq!(run(&["star", "moyal", "x1 +* x2", "x1"]).status.code(), Some(2));
    assert_eq!(run(&["double", "build", "--group", "Q8"]).status.code(), Some(2));
}

#[test]
fn broken_bracket_file_names_the_triple() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(
        &path,
        r#"{"basis": ["H","E","F"], "brackets": [["H","E",[["E",2]]],["H","F",[["F",-2]]],["E","F",[["E",1]]]]}"#,
    )
    .unwrap();
    let o = run(&["hopf", "check", "--alg", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("(H, E, F)"));
}

#[test]
fn json_and_text_agree() {
    let text = stdout(&run(&["double", "build", "--group", "Z3"]));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["--json", "double", "build", "--group", "Z3"]))).unwrap();
    for c in json["checks"].as_array().unwrap() {
        let line = format!("{:<7} {}", c["status"].as_str().unwrap(), c["id"].as_str().unwrap());
        assert!(text.contains(&line), "{line}");
    }
}

#[test]
fn seeded_reports_are_byte_identical() {
    let a = run(&["verify", "hopf", "--seed", "3"]);
    let b = run(&["verify", "hopf", "--seed", "3"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("seed 3\n"));
}

#[test]
fn injected_fault_prints_the_failing_case() {
    let o = run(&["verify", "moyal", "--inject"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("fail    moyal.jacobi.random_l2: ("));
}

#[test]
fn frt_commands() {
    let o = run(&["frt", "relations", "--rmatrix", "sl2q.json"]);
    assert!(stdout(&o).contains("t11*t12 - q*t12*t11 = 0"));
    let o = run(&["frt", "flat", "--rmatrix", "nonflat.json", "--degree", "2"]);
    assert!(stdout(&o).contains("dim 6 vs 10"));
    assert_eq!(run(&["frt", "flat", "--rmatrix", "sl2q", "--degree", "5"]).status.code(), Some(2));
}
