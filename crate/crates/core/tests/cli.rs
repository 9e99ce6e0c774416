use std::process::Command;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn survive(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_survive")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn compare_exit_codes_follow_the_verdict() {
    assert_eq!(survive(&["compare", "--input", &fixture("ex_main_mu")]).0, 0);
    assert_eq!(survive(&["compare", "--input", &fixture("ex_main_nu")]).0, 1);
}

#[test]
fn characterize_proves_x_and_refutes_y() {
    let (code, out) = survive(&["characterize", "--input", &fixture("pr_vektor_y")]);
    assert_eq!(code, 0);
    assert!(out.contains("\"proved\""));
    let (code, out) = survive(&["characterize", "--input", &fixture("pr_vektor_y_y")]);
    assert_eq!(code, 1);
    assert!(out.contains("\"refuted\""));
}

#[test]
fn search_prints_a_witness() {
    let (code, out) = survive(&["search", "--op", "sum", "--n", "3", "--budget", "10000", "--seed", "42"]);
    assert_eq!(code, 1);
    assert!(out.contains("\"instance\""));
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(survive(&["gsf", "--input", "/nonexistent.json"]).0, 2);
    assert_eq!(survive(&["frobnicate"]).0, 2);
    assert_eq!(survive(&["check", "--input", &fixture("example"), "--conditions", "C9"]).0, 2);
}

#[test]
fn check_reports_failing_conditions() {
    let (code, out) = survive(&["check", "--input", &fixture("example"), "--conditions", "C1,C2"]);
    assert_eq!(code, 1);
    assert!(out.contains("\"C1\""));
    let (code, _) = survive(&["check", "--input", &fixture("sc_example"), "--conditions", "C1,C2"]);
    assert_eq!(code, 0);
}

#[test]
fn diagram_writes_svg_to_stdout() {
    let (code, out) = survive(&["diagram", "--input", &fixture("worked_max")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("<svg"));
    assert_eq!(out.matches("stroke-width=\"1.5\"").count(), 8);
}
