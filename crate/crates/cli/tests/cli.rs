use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn sups(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sups")).args(args).output().expect("run sups")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn run_ok(args: &[&str]) -> String {
    let o = sups(args);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn reference_text_queries() {
    let f = fixture("reference.txt");
    let out = run_ok(&["query", f.to_str().unwrap(), "--verify"]);
    assert_eq!(out, "5 6 -> 2: [2,6] [4,8] len=5\n1 13 -> 0\n3 3 -> 1: [3,5] len=3\n");
}

#[test]
fn four_sups_witness_from_fasta() {
    let f = fixture("witness.txt");
    let out = run_ok(&["query", f.to_str().unwrap(), "--verify"]);
    assert_eq!(out, "18 18 -> 4: [1,19] [4,22] [16,34] [18,36] len=19\n");
}

#[test]
fn empty_answer() {
    let f = fixture("empty.txt");
    assert!(run_ok(&["query", f.to_str().unwrap()]).ends_with("-> 0\n"));
}

#[test]
fn parse_errors_name_the_line() {
    let f = fixture("bad_line.txt");
    let o = sups(&["query", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
    let o = sups(&["query", fixture("reference.txt").to_str().unwrap(), "--bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn out_of_range_query_fails() {
    let dir = std::env::temp_dir().join(format!("sups-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("range.txt");
    std::fs::write(&f, "abc\n2 4\n").unwrap();
    let o = sups(&["query", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn slide_script() {
    let f = fixture("slide.txt");
    let out = run_ok(&["slide", f.to_str().unwrap(), "--capacity", "4", "--verify"]);
    assert_eq!(out, "1 2 -> 0\n2 3 -> 1: [1,3] len=3\n2 4 -> 0\n3 5 -> 1: [2,5] len=4\n");
    let f = fixture("empty_script.txt");
    assert_eq!(run_ok(&["slide", f.to_str().unwrap(), "--capacity", "4"]), "");
}

#[test]
fn slide_state_errors() {
    let f = fixture("pop_empty.txt");
    let o = sups(&["slide", f.to_str().unwrap(), "--capacity", "3"]);
    assert_ne!(o.status.code(), Some(0));
    let f = fixture("slide.txt");
    let o = sups(&["slide", f.to_str().unwrap(), "--capacity", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 5"));
}

#[test]
fn edit_script() {
    let f = fixture("edit.txt");
    let out = run_ok(&["edit", f.to_str().unwrap(), "--verify"]);
    assert_eq!(
        out,
        "2 2 -> 1: [1,3] len=3\n2 2 -> 1: [2,2] len=1\n1 1 -> 1: [1,3] len=3\n1 1 -> 1: [1,3] len=3\n"
    );
    let f = fixture("close_without_sub.txt");
    assert_eq!(sups(&["edit", f.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn fuzz_is_deterministic() {
    for mode in ["slide", "edit", "logrmq"] {
        let a = run_ok(&["fuzz", "--mode", mode, "--seed", "3", "--iters", "40"]);
        let b = run_ok(&["fuzz", "--mode", mode, "--seed", "3", "--iters", "40"]);
        assert!(a.starts_with("PASS"), "{a}");
        assert_eq!(a, b);
    }
}

#[test]
fn bench_csv() {
    let out = run_ok(&["bench", "--mode", "logrmq", "--sizes", "100,1000"]);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows[0], "mode,n,op,median_ns");
    assert_eq!(rows.len(), 5);
    assert!(rows[1..].iter().all(|r| r.starts_with("logrmq,") && r.split(',').count() == 4));
}
