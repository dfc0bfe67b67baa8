use std::fs;
use std::path::{Path, PathBuf};

use bigraded_lc::cli::{exit_code, main_with_args, run, Cli};
use clap::Parser;

/// A scratch directory unique to this test.
fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("blc-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn ideal_file(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.display().to_string()
}

/// `(exit code, stdout text)` of one invocation, without spawning a process.
fn invoke(args: &[&str]) -> (i32, String) {
    let cli = Cli::try_parse_from(std::iter::once("bigraded-lc").chain(args.iter().copied())).unwrap();
    match run(&cli) {
        Ok(out) => (out.code, out.text),
        Err(e) => (exit_code(&e), e.to_string()),
    }
}

const BILINEAR: &str = "ring m=2 n=2 p=32003\nx1*y1 + x2*y2\n";

#[test]
fn compute_top_component() {
    let dir = scratch("compute");
    let f = ideal_file(&dir, "ideal.txt", BILINEAR);
    let out = dir.join("betti.csv");
    let (code, text) = invoke(&["compute", "--ideal", &f, "--s", "2", "--j", "-3", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(text.contains("reg 1") && text.contains("dim 0"), "{text}");
    assert_eq!(fs::read_to_string(&out).unwrap(), "pos,0,1,2,3\n0,2,0,0,0\n1,0,3,0,0\n2,0,0,0,1\n");

    let (code, text) = invoke(&["compute", "--ideal", &f, "--s", "2", "--j", "-1"]);
    assert_eq!(code, 0);
    assert!(text.contains("zero module"));

    let (code, text) = invoke(&["compute", "--ideal", &f, "--s", "1", "--j", "-2"]);
    assert_eq!(code, 0);
    assert!(text.contains("reg 2"), "{text}");
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_regular_sequence_family() {
    let dir = scratch("regular");
    let out = dir.join("v.csv");
    let args = ["verify", "regular", "--family", "regular-sequence", "--d", "1", "--n", "2", "--j-window", "-2..-8", "--out", out.to_str().unwrap()];
    let (code, _) = invoke(&args);
    assert_eq!(code, 0);
    let csv = fs::read_to_string(&out).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("s,j,reg,dim,ann_exp,predicted,pass"));
    for (line, j) in lines.zip((-8..=-2).rev()) {
        assert_eq!(line, format!("2,{j},{},0,,{},true", -j - 2, -j - 2));
    }
    // identical inputs give identical bytes
    invoke(&args);
    assert_eq!(fs::read_to_string(&out).unwrap(), csv);
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_monomial_and_two_summands() {
    let dir = scratch("monomial");
    let f = ideal_file(&dir, "ideal.txt", "ring m=2 n=2\nx1*y1\nx2*y2\n");
    let (code, text) = invoke(&["verify", "monomial", "--ideal", &f]);
    assert_eq!(code, 0, "{text}");
    let (code, text) = invoke(&["verify", "twosummands", "--family", "two-summands", "--f1", "x1^2", "--f2", "x1*x2", "--j-window", "-3..-3"]);
    assert_eq!(code, 0, "{text}");
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn oracle_on_the_zero_ideal() {
    let dir = scratch("oracle");
    let f = ideal_file(&dir, "ideal.txt", "ring m=2 n=2\n");
    let out = dir.join("o.csv");
    let (code, _) = invoke(&["oracle", "--ideal", &f, "--s", "2", "--i-range", "0..1", "--j-window", "-2..-3", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let dims: Vec<String> = fs::read_to_string(&out).unwrap().lines().skip(1).map(|l| l.split(',').nth(3).unwrap().to_string()).collect();
    assert_eq!(dims, ["1", "2", "2", "4"]);

    let (code, _) = invoke(&["oracle", "--ideal", &f, "--s", "0", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(fs::read_to_string(&out).unwrap().lines().skip(1).all(|l| l.split(',').nth(3) == Some("0")));
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exit_codes() {
    let dir = scratch("codes");
    let f = ideal_file(&dir, "ideal.txt", BILINEAR);
    let out = dir.join("never.csv");
    // non-monomial input to a monomial theorem: hypothesis violated, and no CSV is left behind
    let (code, _) = invoke(&["verify", "monomial", "--ideal", &f, "--out", out.to_str().unwrap()]);
    assert_eq!(code, 4);
    assert!(!out.exists());
    assert_eq!(invoke(&["compute", "--ideal", &f, "--s", "3", "--j", "-2"]).0, 3);
    assert_eq!(invoke(&["compute", "--ideal", &f, "--s", "2", "--j", "-2", "--field", "15"]).0, 3);
    let bad = ideal_file(&dir, "bad.txt", "ring m=2 n=2\nx1*y1 +\n");
    assert_eq!(invoke(&["compute", "--ideal", &bad, "--s", "2", "--j", "-2"]).0, 2);
    assert_eq!(invoke(&["compute", "--ideal", "/nonexistent/ideal", "--s", "2", "--j", "-2"]).0, 2);
    assert_eq!(main_with_args(["bigraded-lc", "compute", "--bogus"]), 2);
    assert_eq!(main_with_args(["bigraded-lc", "compute", "--ideal", &f, "--s", "2", "--j", "-2"]), 0);
    fs::remove_dir_all(dir).unwrap();
}
