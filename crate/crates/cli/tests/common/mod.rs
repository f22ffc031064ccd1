//! Running the `antidend` binary against the shipped fixtures.

#![allow(dead_code)]

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

pub fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub fn fixture(name: &str) -> PathBuf {
    root().join("fixtures").join(name)
}

pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs the binary in the fixtures directory, optionally feeding stdin.
pub fn run(args: &[&str], stdin: Option<&str>) -> Run {
    run_with_env(args, stdin, &[])
}

pub fn run_with_env(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_antidend"));
    cmd.args(args)
        .current_dir(root().join("fixtures"))
        .env_remove("ANTIDEND_SEARCH_BUDGET")
        .envs(env.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary runs");
    let mut pipe = child.stdin.take().expect("stdin piped");
    pipe.write_all(stdin.unwrap_or("").as_bytes()).expect("stdin writable");
    drop(pipe);
    let out = child.wait_with_output().expect("binary finishes");
    Run {
        stdout: String::from_utf8(out.stdout).expect("utf-8 output"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 diagnostics"),
        code: out.status.code().expect("exited normally"),
    }
}

/// A named command line, optionally reading the output of another one.
pub struct Pipeline {
    pub name: &'static str,
    pub upstream: Option<&'static [&'static str]>,
    pub args: &'static [&'static str],
    pub exit: i32,
}

const fn p(name: &'static str, args: &'static [&'static str], exit: i32) -> Pipeline {
    Pipeline { name, upstream: None, args, exit }
}

pub const BIG_BUDGET: &str = "100000000";

pub const PIPELINES: &[Pipeline] = &[
    p("check-algebra-z1", &["check", "algebra", "z1.add"], 0),
    p("check-algebra-z2", &["check", "algebra", "z2.add"], 0),
    p("check-algebra-f3a", &["check", "algebra", "f3a.add"], 0),
    p("check-algebra-n3", &["check", "algebra", "n3.add"], 0),
    p("check-bialgebra-zero2", &["check", "bialgebra", "zero2.bialg"], 0),
    p("check-bialgebra-f3a-zero", &["check", "bialgebra", "f3a-zero.bialg"], 0),
    p("check-bialgebra-f3a-dsucc", &["check", "bialgebra", "f3a-dsucc.bialg"], 1),
    p("check-rep-f3a-regular", &["check", "rep", "f3a.add", "f3a-regular.rep"], 0),
    p("check-quadratic-f3a", &["check", "quadratic", "f3a.add", "f3a-id.form"], 0),
    p("check-qrb-z2-half", &["check", "qrb", "z2.add", "z2-half-p.mat", "z2-id.form", "--weight", "1"], 0),
    p("check-qrb-z2-half-bundle", &["check", "qrb", "z2-half.rb"], 0),
    p("check-qrb-f3a-two", &["check", "qrb", "f3a.add", "f3a-two.mat", "f3a-id.form", "--weight", "1"], 1),
    p("double-zero1", &["double", "zero1.bialg"], 0),
    p("double-f3a-zero", &["double", "f3a-zero.bialg"], 0),
    p("double-f3a-dsucc", &["double", "f3a-dsucc.bialg"], 1),
    p("cobound-z2-skew", &["cobound", "z2.add", "skew.t2"], 0),
    p("classify-z2-skew", &["classify", "z2.add", "skew.t2"], 0),
    p("classify-db1", &["classify", "db1.add", "db1.t2"], 0),
    p("factorize-db1", &["factorize", "db1.add", "db1.t2", "--vector", "2,3"], 0),
    p("factorize-z2-skew", &["factorize", "z2.add", "skew.t2", "--vector", "1,1"], 1),
    p("canonical-double-zero1", &["canonical-double", "zero1.bialg"], 0),
    p("canonical-double-f3a-zero", &["canonical-double", "f3a-zero.bialg"], 0),
    Pipeline {
        name: "canonical-double-zero1-classify",
        upstream: Some(&["canonical-double", "zero1.bialg"]),
        args: &["classify", "-"],
        exit: 0,
    },
    Pipeline {
        name: "canonical-double-f3a-zero-classify",
        upstream: Some(&["canonical-double", "f3a-zero.bialg"]),
        args: &["classify", "-"],
        exit: 0,
    },
    p("qrb-to-r-z2-half", &["qrb", "to-r", "z2-half.rb"], 0),
    p("qrb-from-r-db1", &["qrb", "from-r", "db1.add", "db1.t2", "--weight", "1"], 0),
    Pipeline {
        name: "qrb-from-r-db1-check",
        upstream: Some(&["qrb", "from-r", "db1.add", "db1.t2", "--weight", "1"]),
        args: &["check", "qrb", "-"],
        exit: 0,
    },
    p("semidirect-z1-zero", &["semidirect", "z1.add", "z1-zero.mat", "--weight", "1"], 0),
    p("semidirect-z2-zero", &["semidirect", "z2.add", "z2-zero.mat", "--weight", "1"], 0),
    p("semidirect-f3a-two", &["semidirect", "f3a.add", "f3a-two.mat", "--weight", "1"], 0),
    Pipeline {
        name: "semidirect-f3a-two-check",
        upstream: Some(&["semidirect", "f3a.add", "f3a-two.mat", "--weight", "1"]),
        args: &["check", "qrb", "-"],
        exit: 0,
    },
    p("search-algebras-1-p2", &["search", "algebras", "--dim", "1", "--field", "p2"], 0),
    p("search-algebras-1-p3", &["search", "algebras", "--dim", "1", "--field", "p3"], 0),
    p("search-algebras-2-p2", &["search", "algebras", "--dim", "2", "--field", "p2"], 0),
    p("search-algebras-2-p3", &["search", "algebras", "--dim", "2", "--field", "p3", "--budget", BIG_BUDGET], 0),
    p("search-ybe-f3a", &["search", "ybe", "f3a.add"], 0),
    p("search-ybe-z2-p2-triangular", &["search", "ybe", "z2-p2.add", "--filter", "triangular"], 0),
];

pub fn run_pipeline(pl: &Pipeline) -> Run {
    match pl.upstream {
        None => run(pl.args, None),
        Some(up) => {
            let first = run(up, None);
            assert_eq!(first.code, 0, "{}: upstream failed: {}", pl.name, first.stderr);
            run(pl.args, Some(&first.stdout))
        }
    }
}
