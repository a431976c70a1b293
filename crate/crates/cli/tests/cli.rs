//! Runs the `structmv` binary end to end.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use structmv::linalg::real_vec;
use structmv_cli::files::VectorFile;

fn structmv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_structmv"))
        .args(args)
        .output()
        .expect("spawn structmv")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p: PathBuf = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn apply_both(matrix: &str, vector: &str, want: &[f64], count: usize) {
    for method in ["program", "direct"] {
        let out = structmv(&["apply", matrix, vector, "--method", method]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        let z = VectorFile::parse(&stdout(&out)).unwrap();
        let err = structmv::linalg::rel_err(&z, &real_vec(want));
        assert!(err < 1e-12, "{method}: {z:?}");
        assert_eq!(stderr(&out).trim(), format!("multiplications: {count}"));
    }
}

#[test]
fn apply_documented_examples() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let ones = write(d, "ones.json", r#"{"n": 3, "v": [[1,0],[1,0],[1,0]]}"#);
    let circ = write(d, "circ.json", r#"{"structure": "circulant", "n": 3, "param": [[1,0],[2,0],[3,0]]}"#);
    apply_both(&circ, &ones, &[6.0, 6.0, 6.0], 3);

    let bccb = write(
        d,
        "bccb.json",
        r#"{"structure": "multilevel", "levels": [
            {"structure": "circulant", "n": 2, "param": [[1,0],[2,0]]},
            {"structure": "circulant", "n": 2, "param": [[3,0],[4,0]]}]}"#,
    );
    let e1 = write(d, "e1.json", r#"{"n": 4, "v": [[1,0],[0,0],[0,0],[0,0]]}"#);
    apply_both(&bccb, &e1, &[3.0, 4.0, 6.0, 8.0], 4);

    let id = write(d, "id.json", r#"{"structure": "toeplitz", "n": 2, "param": [[0,0],[1,0],[0,0]]}"#);
    let v = write(d, "v.json", r#"{"n": 2, "v": [[3,0],[4,0]]}"#);
    apply_both(&id, &v, &[3.0, 4.0], 3);
}

#[test]
fn gen_is_byte_identical_per_seed() {
    let args = ["gen", "--structure", "circulant", "--n", "4", "--seed", "1"];
    let (a, b) = (structmv(&args), structmv(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let bad = write(d, "bad.json", r#"{"structure": "toeplitz", "n": 3, "param": [[1,0],[2,0]]}"#);
    let out = structmv(&["verify", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("error"));

    assert_eq!(structmv(&["gen", "--structure", "banded", "--n", "3"]).status.code(), Some(2));
    assert_eq!(structmv(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(structmv(&["verify", &d.join("missing.json").to_string_lossy()]).status.code(), Some(2));

    let circ = write(d, "c.json", r#"{"structure": "circulant", "n": 3, "param": [[1,0],[2,0],[3,0]]}"#);
    let short = write(d, "short.json", r#"{"n": 2, "v": [[1,0],[1,0]]}"#);
    assert_eq!(structmv(&["apply", &circ, &short]).status.code(), Some(2));
    let nan = write(d, "nan.json", r#"{"n": 1, "v": [[NaN,0]]}"#);
    assert_eq!(structmv(&["apply", &circ, &nan]).status.code(), Some(2));
}

#[test]
fn verify_reports_and_fails_below_roundoff() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let gen = structmv(&["gen", "--structure", "circulant", "--n", "64", "--seed", "3"]);
    let m = write(d, "c64.json", &stdout(&gen));

    let ok = structmv(&["verify", &m, "--seed", "9"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("PASS"));

    let strict = structmv(&["verify", &m, "--seed", "9", "--tol", "1e-18"]);
    assert_eq!(strict.status.code(), Some(1));
    let report = stdout(&strict);
    assert!(report.contains("FAIL") && report.contains("program error"), "{report}");
}

#[test]
fn count_prints_table() {
    let out = structmv(&["count", "--structure", "toeplitz", "--n", "1", "--n-max", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    let header: Vec<_> = lines.next().unwrap().split_whitespace().collect();
    assert_eq!(header, ["structure", "n", "theoretical", "measured", "match"]);
    let measured: Vec<usize> = lines
        .map(|l| {
            let cols: Vec<_> = l.split_whitespace().collect();
            assert_eq!(cols[4], "yes");
            cols[3].parse().unwrap()
        })
        .collect();
    assert_eq!(measured, [1, 3, 5, 7, 9, 11, 13, 15]);

    let ml = structmv(&["count", "--structure", "multilevel", "--levels", "circulant:2,toeplitz:2,symmetric:2"]);
    assert!(stdout(&ml).lines().nth(1).unwrap().contains(" 18 "));
}

#[test]
fn bench_to_stdout() {
    let out = structmv(&["bench", "--structure", "toeplitz", "--n-max", "8", "--reps", "1", "--csv", "-"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let methods: Vec<_> = text.lines().skip(1).map(|l| l.split(',').nth(2).unwrap()).collect();
    assert_eq!(methods.len(), 9);
    assert!(methods.chunks(3).all(|c| c == ["structured-program", "structured-direct", "dense-naive"]));
}
