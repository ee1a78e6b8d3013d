use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn qface(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qface"))
        .args(args)
        .output()
        .expect("run qface")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim_end().to_string()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const DOUBLE_SQUARE: &str = "0 1\n1 0\n1 2\n2 1\n2 3\n3 2\n3 0\n0 3\n";

#[test]
fn fvector_of_double_square() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "dc4.txt", DOUBLE_SQUARE);
    let out = qface(&["fvector", s(&f)]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "dim 3; f = 8 12 6");
}

#[test]
fn is_face_on_a_path() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "path.txt", "0 1\n1 2\n");
    assert_eq!(stdout(&qface(&["is-face", s(&f), "--sub", "0 1"])), "face, dim 0");
    assert_eq!(stdout(&qface(&["is-face", s(&f), "--sub", "0 1, 1 2"])), "face, dim 1");
    let missing = qface(&["is-face", s(&f), "--sub", "1 0"]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn is_face_rejects_a_diagonal() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "diamond.txt", "0 1\n0 2\n1 3\n2 3\n");
    assert_eq!(stdout(&qface(&["is-face", s(&f), "--sub", "0 1 1 3"])), "not a face");
}

#[test]
fn verify_balanced_square() {
    let dir = TempDir::new().unwrap();
    let gen = qface(&["gen", "polygon", "+\u{2212}+\u{2212}"]);
    assert!(gen.status.success());
    let f = write(&dir, "poly.txt", &stdout(&gen));
    let out = qface(&["verify", s(&f)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "MATCH: 10 faces, dim 2");
}

#[test]
fn verify_exit_two_only_with_injected_fault() {
    let dir = TempDir::new().unwrap();
    for (name, text) in [("dc4.txt", DOUBLE_SQUARE), ("single.txt", "a b\n")] {
        let f = write(&dir, name, text);
        assert_eq!(qface(&["verify", s(&f)]).status.code(), Some(0));
        let out = qface(&["verify", s(&f), "--inject-fault"]);
        assert_eq!(out.status.code(), Some(2));
        assert!(stdout(&out).starts_with("MISMATCH"));
    }
}

#[test]
fn verify_generated_families() {
    let dir = TempDir::new().unwrap();
    let families: [&[&str]; 5] = [
        &["path", "4"],
        &["double-cycle", "3"],
        &["double-cycle", "5"],
        &["polygon", "-++--+"],
        &["random", "5", "7", "11"],
    ];
    for fam in families {
        let mut args = vec!["gen"];
        args.extend_from_slice(fam);
        let f = write(&dir, "g.txt", &stdout(&qface(&args)));
        let out = qface(&["verify", s(&f)]);
        assert_eq!(out.status.code(), Some(0), "{fam:?}: {}", stdout(&out));
    }
}

fn stable_json(args: &[&str]) -> Value {
    let out = qface(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let mut v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let obj = v.as_object_mut().unwrap();
    obj.remove("elapsed_us");
    obj.remove("input");
    v
}

#[test]
fn json_ignores_edge_order() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.txt", DOUBLE_SQUARE);
    let mut lines: Vec<&str> = DOUBLE_SQUARE.lines().collect();
    lines.reverse();
    lines.swap(1, 5);
    let b = write(&dir, "b.txt", &(lines.join("\n") + "\n"));
    let c = write(
        &dir,
        "c.json",
        r#"{"vertices": [3, 2, 1, 0], "edges": [[3,0],[0,3],[2,3],[3,2],[1,2],[2,1],[0,1],[1,0]]}"#,
    );
    for cmd in ["dim", "rank", "facets", "faces", "fvector", "verify"] {
        let base = stable_json(&["--json", cmd, s(&a)]);
        assert_eq!(base, stable_json(&["--json", cmd, s(&b)]), "{cmd}");
        assert_eq!(base, stable_json(&[cmd, s(&c), "--json"]), "{cmd}");
    }
}

#[test]
fn json_report_shape() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "dc4.txt", DOUBLE_SQUARE);
    let out = qface(&["--json", "fvector", s(&f)]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["command"], "fvector");
    assert_eq!(v["result"]["kind"], "fvector");
    assert_eq!(v["result"]["counts"], serde_json::json!([8, 12, 6]));
    assert_eq!(v["input_digest"].as_str().unwrap().len(), 64);
    assert!(v["elapsed_us"].is_u64());
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn isolated_vertices_need_json() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "q.json", r#"{"vertices": ["a", "b", "c"], "edges": [["a", "b"]]}"#);
    let v = stable_json(&["--json", "dim", s(&f)]);
    assert_eq!(v["result"]["vertices"], 3);
    assert_eq!(v["result"]["components"], 2);
    assert_eq!(v["result"]["dim"], 0);

    let e = write(&dir, "e.json", r#"{"vertices": [0, 1], "edges": []}"#);
    let out = qface(&["dim", s(&e)]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("dim -1 (no edges"));
}

#[test]
fn bad_input_exits_one_and_names_the_line() {
    let dir = TempDir::new().unwrap();
    let cases = [
        ("loop.txt", "0 1\n1 1\n", "line 2"),
        ("dup.txt", "0 1\n# again\n0 1\n", "line 3"),
        ("short.txt", "0 1\n2\n", "line 2"),
        ("empty.txt", "# nothing here\n", "no vertices"),
        ("bad.json", "{\"vertices\": [0, 1],\n \"edges\": [[0 1]]}", "line 2"),
        ("array.json", "[[0, 1]]", "unknown input format"),
    ];
    for (name, text, needle) in cases {
        let f = write(&dir, name, text);
        let out = qface(&["dim", s(&f)]);
        assert_eq!(out.status.code(), Some(1), "{name}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(needle), "{name}: {err}");
    }
    assert_eq!(qface(&["dim", "/nonexistent/q.txt"]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(qface(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(qface(&["gen", "polygon", "+-"]).status.code(), Some(1));
    assert_eq!(qface(&["gen", "random", "2", "3", "0"]).status.code(), Some(1));
    assert_eq!(qface(&["--help"]).status.code(), Some(0));
}

#[test]
fn edge_limit_variable_guards_the_oracle() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "k4.txt", &stdout(&qface(&["gen", "double-complete", "4"])));
    let out = Command::new(env!("CARGO_BIN_EXE_qface"))
        .args(["verify", s(&f)])
        .env("QFACE_EDGE_LIMIT", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("12 edges exceed the oracle limit of 10"));
}

#[test]
fn gen_output_is_valid_input() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "c6.txt", &stdout(&qface(&["gen", "double-cycle", "6"])));
    assert_eq!(stdout(&qface(&["fvector", s(&f)])), "dim 5; f = 12 60 120 90 20");
    let json = qface(&["--json", "gen", "random", "6", "8", "3"]);
    let v: Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["result"]["family"], "random 6 8 3");
    assert_eq!(v["result"]["edges"].as_array().unwrap().len(), 8);
}

#[test]
fn rank_and_facets_text() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "path.txt", "b c\na b\n");
    assert_eq!(stdout(&qface(&["rank", s(&f)])), "a\t0\nb\t1\nc\t2");
    assert_eq!(stdout(&qface(&["facets", s(&f)])), "2 facets\n(a,b)\n(b,c)");
    let g = write(&dir, "tri.txt", "0 1\n1 2\n2 0\n");
    assert_eq!(stdout(&qface(&["rank", s(&g)])), "no rank function");
}
