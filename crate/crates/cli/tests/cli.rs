use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dynatomic")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn dynatomic_goldens() {
    assert_eq!(stdout(&["dynatomic", "2", "1"]).trim(), "X^2 - X + C");
    assert_eq!(stdout(&["dynatomic", "2", "2"]).trim(), "X^2 + X + C + 1");
    assert_eq!(
        stdout(&["dynatomic", "2", "2", "--format", "json"]).trim(),
        r#"{"vars":["X","C"],"terms":[[2,0,"1"],[1,0,"1"],[0,1,"1"],[0,0,"1"]]}"#
    );
    assert_eq!(stdout(&["iterate", "2", "2"]).trim(), "X^4 + 2*X^2*C + C^2 + C");
}

#[test]
fn printed_polynomials_round_trip() {
    use dynatomic_core::exactmath::{bipoly_from_json, parse_bipoly};
    let text = stdout(&["gen-dynatomic", "3", "2", "2"]);
    let json = stdout(&["gen-dynatomic", "3", "2", "2", "--format", "json"]);
    let a = parse_bipoly(text.trim()).unwrap();
    let b = bipoly_from_json(&serde_json::from_str(&json).unwrap()).unwrap();
    assert_eq!(a, b);
    assert_eq!(a, dynatomic_core::dynatomic::gen_dynatomic_poly(
        dynatomic_core::dynatomic::MapSpec::new(3).unwrap(),
        dynatomic_core::dynatomic::PortraitLabel::new(2, 2).unwrap(),
    ).unwrap());
}

#[test]
fn realizes_json() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["realizes", "-1/2", "0", "2", "2", "--format", "json"])).unwrap();
    assert_eq!(v["realizable"], false);
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["realizes", "0", "0", "2", "2", "--format", "json"])).unwrap();
    assert_eq!(v["realizable"], true);
}

#[test]
fn portrait_and_curve_info() {
    assert_eq!(
        stdout(&["portrait", "1", "-1", "2", "--format", "json"]).trim(),
        r#"{"x":"1","c":"-1","d":2,"orbit":["1","0","-1"],"portrait":[1,2],"bound_used":3}"#
    );
    let out = stdout(&["portrait", "1/7", "1/3", "3", "--format", "json"]);
    assert!(out.contains("NotPreperiodicWithinBound"));
    assert_eq!(
        stdout(&["curve-info", "2", "2", "2", "--format", "json"]).trim(),
        r#"{"M":2,"N":2,"d":2,"degX":4,"degC":2,"components":1,"singular_note":"points with f_{d,c}^{M-1}(x) = 0"}"#
    );
    assert!(stdout(&["realizes", "t", "2", "2", "2", "--field", "t^2+1"]).contains("realizable: true"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(run(&["dynatomic", "1", "2"]).status.code(), Some(1));
    assert_eq!(run(&["dynatomic", "2", "0"]).status.code(), Some(1));
    let bad = run(&["realizes", "0.5", "0", "2", "2"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(!bad.stderr.is_empty());
    assert_eq!(run(&["realizes", "t", "0", "2", "2", "--field", "t^2-1"]).status.code(), Some(1));
}

#[test]
fn deterministic_output() {
    let args = ["realizes", "3/2", "1", "2", "2", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn sweep_preserves_input_order() {
    let mut grid = tempfile::NamedTempFile::new().unwrap();
    write!(
        grid,
        r#"[{{"x":"0","M":1,"N":1,"d":2}},{{"x":"-1/2","M":0,"N":2,"d":2}},{{"x":"1","M":1,"N":2,"d":2}}]"#
    )
    .unwrap();
    let path = grid.path().to_str().unwrap();
    let text = stdout(&["sweep", "--grid", path]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("x=0 M=1 N=1 d=2"));
    assert!(lines[1].starts_with("x=-1/2 M=0 N=2 d=2 realizable=false"));
    assert!(lines[2].starts_with("x=1 M=1 N=2 d=2 realizable=true"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&["sweep", "--grid", path, "--format", "json"])).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 3);
    assert_eq!(run(&["sweep", "--grid", "/nonexistent/grid.json"]).status.code().map(|c| c != 0), Some(true));
}

#[test]
fn verify_single_suite() {
    assert!(stdout(&["verify", "--suite", "factorization"]).starts_with("PASS factorization"));
    assert_eq!(run(&["verify", "--suite", "bogus"]).status.code(), Some(1));
}
