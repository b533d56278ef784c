//! End-to-end tests of the binary: subcommand wiring, stdin input, exit
//! codes (0 success, 1 usage/parse, 2 mathematical validation failure).

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bw1(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bw1"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn bw1_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_bw1"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.as_mut().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn gen_emits_parseable_documents() {
    let out = bw1(&["gen", "chain", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let q = bw1::cli::parse_quiver(&text).unwrap();
    assert_eq!(q.vertex_count(), 3);
    assert_eq!(bw1::cli::serialize_quiver(&q), text);
}

#[test]
fn partition_reads_stdin() {
    let doc = stdout(&bw1(&["gen", "chain", "3"]));
    let out = bw1_stdin(&["partition", "-"], &doc);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "a: 1,2 | b: 3 | f: a1,a2 | g: - | h: -\n");
}

#[test]
fn partition_of_cycle_lists_h() {
    let doc = stdout(&bw1(&["gen", "cycle", "3"]));
    let out = bw1_stdin(&["partition", "-"], &doc);
    assert!(out.status.success());
    assert!(stdout(&out).contains("h: a3"));
}

#[test]
fn malformed_document_exits_one() {
    let out = bw1_stdin(&["partition", "-"], "{ nope");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn matrices_text_and_structured() {
    let doc = stdout(&bw1(&["gen", "cycle", "3"]));
    let out = bw1_stdin(&["matrices", "-"], &doc);
    assert!(out.status.success());
    assert!(stdout(&out).contains("id_3 - a3*a1*a2"));

    let out = bw1_stdin(&["matrices", "-", "--format", "structured"], &doc);
    assert!(out.status.success());
    let q = bw1::cli::parse_quiver(&doc).unwrap();
    let vw = bw1::cli::parse_matrix_pair(&q, &stdout(&out)).unwrap();
    assert_eq!(vw.row_arrows.len(), 3);
}

#[test]
fn h1_regular_both_routes() {
    let doc = stdout(&bw1(&["gen", "chain", "4"]));
    let out = bw1_stdin(&["h1", "-", "--regular", "--both"], &doc);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("main: dim H^1 = 0"));
    assert!(text.contains("spans agree"));
}

#[test]
fn h1_zigzag_regular_dimension() {
    let doc = stdout(&bw1(&["gen", "zigzag", "3"]));
    let out = bw1_stdin(&["h1", "-", "--regular"], &doc);
    assert!(out.status.success());
    assert!(stdout(&out).contains("dim H^1 = 6"));
}

#[test]
fn h1_with_rep_document() {
    let dir = std::env::temp_dir().join(format!("bw1-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let quiver_path = dir.join("cycle3.json");
    let rep_path = dir.join("rep.json");
    std::fs::write(&quiver_path, stdout(&bw1(&["gen", "cycle", "3"]))).unwrap();
    std::fs::write(
        &rep_path,
        r#"{
            "field": "rationals",
            "dims": {"1": 1, "2": 1, "3": 1},
            "matrices": {"a1": [[1]], "a2": [[1]], "a3": [[1]]}
        }"#,
    )
    .unwrap();
    let out = bw1(&[
        "h1",
        quiver_path.to_str().unwrap(),
        rep_path.to_str().unwrap(),
        "--both",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("dim H^1 = 1"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn h1_regular_on_cyclic_quiver_exits_two() {
    let doc = stdout(&bw1(&["gen", "cycle", "3"]));
    let out = bw1_stdin(&["h1", "-", "--regular"], &doc);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("regular module requires acyclic"));
}

#[test]
fn h1_without_rep_source_exits_one() {
    let doc = stdout(&bw1(&["gen", "chain", "3"]));
    let out = bw1_stdin(&["h1", "-"], &doc);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn fuzz_small_run_is_deterministic() {
    let args = ["fuzz", "--count", "12", "--seed", "3"];
    let a = bw1(&args);
    let b = bw1(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("passed 12/12"));
}

#[test]
fn fuzz_over_prime_field() {
    let out = bw1(&["fuzz", "--count", "10", "--seed", "5", "--field", "p:101"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("passed 10/10"));
}

#[test]
fn oracle_route_alone() {
    let doc = stdout(&bw1(&["gen", "star", "3"]));
    let out = bw1_stdin(&["h1", "-", "--regular", "--oracle"], &doc);
    assert!(out.status.success());
    assert!(stdout(&out).contains("oracle: dim H^1 = 5"));
}
