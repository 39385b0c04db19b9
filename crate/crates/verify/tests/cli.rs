use std::process::{Command, Output};

fn biforms(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biforms")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_single_check_exits_zero() {
    let o = biforms(&["verify", "--check", "C12", "--seed", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["checks"][0]["witnesses"]["rank1"], serde_json::json!([9, 9]));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(biforms(&["verify", "--check", "C99"]).status.code(), Some(2));
    assert_eq!(biforms(&["verify", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(biforms(&["transvect", "--lhs", "X +", "--rhs", "Y", "--r", "0"]).status.code(), Some(2));
    assert_eq!(biforms(&["transvect", "--lhs", "X", "--rhs", "Y", "--r", "2"]).status.code(), Some(2));
    assert_eq!(biforms(&["curve", "--form", "X1*Y2^2 + Y1*X2^2"]).status.code(), Some(2));
    assert_eq!(biforms(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn markdown_output_to_file() {
    let dir = std::env::temp_dir().join(format!("biforms-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c05.md");
    let o = biforms(&["verify", "--check", "C05", "--format", "md", "--out", path.to_str().unwrap(), "--no-timings"]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("| C05 | pass | 0 |"), "{text}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn transvect_kernel_and_curve() {
    let o = biforms(&["transvect", "--lhs", "X^2", "--rhs", "Y^2", "--r", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "4");
    let o = biforms(&[
        "transvect",
        "--lhs",
        "X1*X2^2*Y2^6 + Y1*X2^6*Y2^2",
        "--rhs",
        "X1*Y2^4 + Y1*X2^4",
        "--r",
        "1",
        "--s",
        "2",
    ]);
    assert_eq!(stdout(&o).trim(), "0");
    let o = biforms(&[
        "kernel",
        "--form",
        "X1*X2^3*Y2^3 + Y1*(X2^4*Y2^2 + X2^2*Y2^4)",
        "--r",
        "1",
        "--s",
        "2",
        "--source",
        "1,2",
    ]);
    let out = stdout(&o);
    assert!(out.starts_with("rank 5 of 5\nkernel dimension 1\n"), "{out}");
    let o = biforms(&["curve", "--form", "X1*Y2^2 + Y1*X2^2", "--span"]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = biforms(&["curve", "--form", "X1*Y2^2 + Y1*X2^2", "--degree"]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = biforms(&["curve", "--form", "X1*Y2^2 + Y1*X2^2", "--branch"]);
    assert!(stdout(&o).contains("distinct roots 2"), "{}", stdout(&o));
}
