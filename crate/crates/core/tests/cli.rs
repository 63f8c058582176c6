use std::io::Write;
use std::process::{Command, Output, Stdio};

fn spectree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spectree"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn spectree_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_spectree"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_trees() {
    let o = spectree(&["gen-trees", "--order", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 5);
    let o = spectree(&["gen-trees", "--order", "1", "--format", "multiset"]);
    assert_eq!(stdout(&o).lines().collect::<Vec<_>>(), ["root:[]"]);
    assert_eq!(
        spectree(&["gen-trees", "--order", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(spectree(&["gen-trees"]).status.code(), Some(2));
}

#[test]
fn radius() {
    let o = spectree(&["radius", "--exact-snk", "6,2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("closed_form=3.372281323"), "{out}");
    let delta: f64 = out
        .split_whitespace()
        .find_map(|w| w.strip_prefix("delta="))
        .unwrap()
        .parse()
        .unwrap();
    assert!(delta < 1e-8);

    let o = spectree_stdin(&["radius"], ">>graph6<<A_\n\nC~\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "A_\t1.000000000000\nC~\t3.000000000000\n");

    let o = spectree_stdin(&["radius"], "A_\nnot graph6\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    assert_eq!(
        spectree(&["radius", "--exact-snk", "6"]).status.code(),
        Some(2)
    );
    assert_eq!(
        spectree(&["radius", "--exact-snk", "6,6"]).status.code(),
        Some(2)
    );
}

#[test]
fn radius_tolerance_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_spectree"))
        .args(["radius", "--exact-snk", "10,3"])
        .env("SPECTREE_TOL", "1e-6")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let o = Command::new(env!("CARGO_BIN_EXE_spectree"))
        .args(["radius", "--exact-snk", "10,3"])
        .env("SPECTREE_TOL", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check() {
    let o = spectree(&["check", "es4", "--n", "6", "--k", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("holds at this scale"));
    assert_eq!(
        spectree(&["check", "matching", "--n", "5", "--k", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        spectree(&["check", "structure", "--n", "6", "--k", "2"])
            .status
            .code(),
        Some(0)
    );
    let o = spectree(&[
        "check", "matching", "--n", "8", "--k", "3", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["lemma"], "matching");
    assert_eq!(v["equality_cases"], 1);
    assert_eq!(
        spectree(&["check", "bogus", "--n", "6", "--k", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn census_outputs_are_byte_identical_across_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("j1.csv");
    let p4 = dir.path().join("j4.csv");
    let run = |jobs: &str, path: &std::path::Path| {
        spectree(&[
            "census",
            "--mode",
            "a",
            "--n",
            "6",
            "--k",
            "2",
            "--jobs",
            jobs,
            "--out",
            path.to_str().unwrap(),
        ])
    };
    let o1 = run("1", &p1);
    let o4 = run("4", &p4);
    assert_eq!(o1.status.code(), o4.status.code());
    assert!(matches!(o1.status.code(), Some(0) | Some(3)));
    let a = std::fs::read(&p1).unwrap();
    assert_eq!(a, std::fs::read(&p4).unwrap());
    let text = String::from_utf8(a).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("\"root:")).count(), 5);
    if o1.status.code() == Some(3) {
        assert!(text.contains("# VIOLATION"));
    }
}

#[test]
fn census_errors_and_corpus_file() {
    assert_eq!(
        spectree(&["census", "--mode", "a", "--n", "9", "--k", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        spectree(&["census", "--mode", "b", "--n", "6", "--k", "2"])
            .status
            .code(),
        Some(2)
    );

    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("g5.g6");
    let g5 = spectree::graph::enumerate_graphs(5).unwrap();
    let text: String = g5
        .iter()
        .map(|g| spectree::graph::graph6::encode(g) + "\n")
        .collect();
    std::fs::write(&corpus, &text).unwrap();
    let o = spectree(&[
        "census",
        "--mode",
        "a",
        "--n",
        "5",
        "--k",
        "1",
        "--corpus",
        corpus.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(matches!(o.status.code(), Some(0) | Some(3)));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["corpus_size"], 34);
    assert_eq!(v["rows"].as_array().unwrap().len(), 2);

    let empty = dir.path().join("empty.g6");
    std::fs::write(&empty, "").unwrap();
    let o = spectree(&[
        "census",
        "--mode",
        "a",
        "--n",
        "5",
        "--k",
        "1",
        "--corpus",
        empty.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = spectree(&[
        "census",
        "--mode",
        "a",
        "--n",
        "5",
        "--k",
        "1",
        "--corpus",
        "/nonexistent/x.g6",
    ]);
    assert_eq!(o.status.code(), Some(1));
}
