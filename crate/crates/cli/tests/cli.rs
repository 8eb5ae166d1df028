use std::path::Path;
use std::process::{Command, Output};

fn segre(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_segre"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn write_matrix(dir: &Path, name: &str, json: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, json).unwrap();
    path.to_str().unwrap().to_string()
}

const FOUR_EIGENVALUES: &str = r#"{"rows": 10, "cols": 10, "entries": [
  [1,1,0,0,0,0,0,0,0,0],
  [0,1,0,0,0,0,0,0,0,0],
  [0,0,1,0,0,0,0,0,0,0],
  [0,0,0,2,1,0,0,0,0,0],
  [0,0,0,0,2,1,0,0,0,0],
  [0,0,0,0,0,2,0,0,0,0],
  [0,0,0,0,0,0,3,0,0,0],
  [0,0,0,0,0,0,0,4,1,0],
  [0,0,0,0,0,0,0,0,4,0],
  [0,0,0,0,0,0,0,0,0,4]]}"#;

#[test]
fn count() {
    assert_eq!(stdout(&segre(&["count", "4"])), "14\n");
    assert_eq!(stdout(&segre(&["count", "0"])), "1\n");
    assert_eq!(stdout(&segre(&["count", "5", "--method", "sum"])), "27\n");
    let both = segre(&["count", "11", "--method", "both"]);
    assert_eq!(code(&both), 0);
    assert_eq!(stdout(&both), "1527\n1527\n");
}

#[test]
fn count_self_check_never_disagrees() {
    for n in [0, 1, 7, 30, 60] {
        assert_eq!(
            code(&segre(&["count", &n.to_string(), "--method", "both"])),
            0
        );
    }
}

#[test]
fn count_prints_full_decimal() {
    assert_eq!(stdout(&segre(&["count", "60"])), "163254461674365\n");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&segre(&["count", "four"])), 2);
    assert_eq!(code(&segre(&["count", "-1"])), 2);
    assert_eq!(code(&segre(&["count", "4", "--method", "magic"])), 2);
    assert_eq!(code(&segre(&["enumerate", "0"])), 2);
    assert_eq!(code(&segre(&["render", "0"])), 2);
    assert_eq!(code(&segre(&["render", "3", "--columns", "0"])), 2);
    assert_eq!(code(&segre(&["frobnicate"])), 2);
    assert_eq!(code(&segre(&["count", "4", "--bogus"])), 2);
    assert_eq!(code(&segre(&[])), 2);
}

#[test]
fn enumerate() {
    assert_eq!(stdout(&segre(&["enumerate", "1"])), "[(1)]\ntotal: 1\n");
    let four = stdout(&segre(&["enumerate", "4"]));
    let lines: Vec<&str> = four.lines().collect();
    assert_eq!(lines.len(), 15);
    assert_eq!(lines[0], "[(4)]");
    assert_eq!(lines[14], "total: 14");
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&segre(&["enumerate", "6", "--format", "json"]))).unwrap();
    let items = json.as_array().unwrap();
    assert_eq!(items.len(), 58);
    assert!(items.iter().all(|v| v.as_str().unwrap().starts_with("[(")));
}

#[test]
fn analyze_four_eigenvalue_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_matrix(dir.path(), "a.json", FOUR_EIGENVALUES);
    let out = segre(&["analyze", &file]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("segre: [(3),(2,1),(2,1),(1)]\n"), "{text}");
    assert!(text.contains("eigenvalue 1: multiplicity 3, rank pattern (10,8,7), blocks [2,1]"));

    let json: serde_json::Value =
        serde_json::from_str(&stdout(&segre(&["analyze", &file, "--format", "json"]))).unwrap();
    assert_eq!(json["segre"], "[(3),(2,1),(2,1),(1)]");
    assert_eq!(json["eigenvalues"][0]["value"], "1");
    assert_eq!(
        json["eigenvalues"][0]["rank_pattern"],
        serde_json::json!([10, 8, 7])
    );
    assert_eq!(json["eigenvalues"][1]["blocks"], serde_json::json!([3]));
}

#[test]
fn analyze_small_cases() {
    let dir = tempfile::tempdir().unwrap();
    let one = write_matrix(
        dir.path(),
        "one.json",
        r#"{"rows":1,"cols":1,"entries":[[7]]}"#,
    );
    assert_eq!(
        stdout(&segre(&["analyze", &one])),
        "segre: [(1)]\neigenvalue 7: multiplicity 1, rank pattern (1,0), blocks [1]\n"
    );

    let half = write_matrix(
        dir.path(),
        "half.json",
        r#"{"rows":2,"cols":2,"entries":[["1/2",1],[0,"1/2"]]}"#,
    );
    assert!(stdout(&segre(&["analyze", &half]))
        .contains("eigenvalue 1/2: multiplicity 2, rank pattern (2,1,0), blocks [2]"));

    let companion = write_matrix(
        dir.path(),
        "c.json",
        r#"{"rows":2,"cols":2,"entries":[[0,2],[1,0]]}"#,
    );
    let out = segre(&["analyze", &companion]);
    assert_eq!(code(&out), 4);
    assert!(String::from_utf8_lossy(&out.stderr).contains("degree 2"));
}

#[test]
fn analyze_input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope.json");
    assert_eq!(code(&segre(&["analyze", missing.to_str().unwrap()])), 2);
    let ragged = write_matrix(
        dir.path(),
        "r.json",
        r#"{"rows":2,"cols":2,"entries":[[1,2],[3]]}"#,
    );
    assert_eq!(code(&segre(&["analyze", &ragged])), 2);
    let rect = write_matrix(
        dir.path(),
        "rect.json",
        r#"{"rows":1,"cols":2,"entries":[[1,2]]}"#,
    );
    assert_eq!(code(&segre(&["analyze", &rect])), 2);
    let garbage = write_matrix(dir.path(), "g.json", "not json");
    assert_eq!(code(&segre(&["analyze", &garbage])), 2);
}

#[test]
fn render_svg_files() {
    let dir = tempfile::tempdir().unwrap();
    for (n, columns, expected) in [("4", "4", 14), ("5", "6", 27), ("6", "6", 58)] {
        let path = dir.path().join(format!("fig{n}.svg"));
        let out = segre(&[
            "render",
            n,
            "--out",
            path.to_str().unwrap(),
            "--columns",
            columns,
        ]);
        assert_eq!(code(&out), 0);
        assert!(out.stdout.is_empty());
        let svg = std::fs::read_to_string(&path).unwrap();
        assert_eq!(svg.matches("<g class=\"segre-grid\"").count(), expected);
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}

#[test]
fn render_ascii() {
    assert_eq!(stdout(&segre(&["render", "1", "--format", "ascii"])), "a\n");
    let three = stdout(&segre(&["render", "2", "--format", "ascii"]));
    assert_eq!(three, "a1\n.a\n\na.\n.a\n\na.\n.b\n");
}

#[test]
fn render_io_failure_exits_5() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing-dir").join("fig.svg");
    assert_eq!(
        code(&segre(&["render", "3", "--out", path.to_str().unwrap()])),
        5
    );
}

#[test]
fn rankpattern() {
    assert_eq!(
        stdout(&segre(&["rankpattern", "n=10: 10,7,5,3,2,1,0"])),
        "growth: [3,2,2,1,1,1]\nblocks: [6,3,1]\n"
    );
    assert!(stdout(&segre(&["rankpattern", "n=1: 1,0"])).contains("blocks: [1]\n"));
    let bad = segre(&["rankpattern", "n=5: 5,3,2,0"]);
    assert_eq!(code(&bad), 6);
    assert!(String::from_utf8_lossy(&bad.stderr).contains("no matrix has this rank pattern"));
    assert_eq!(code(&segre(&["rankpattern", "10,7,5"])), 2);
    assert_eq!(code(&segre(&["rankpattern", "n=3: 2,1"])), 2);
}

#[test]
fn deterministic_output() {
    for args in [
        &["enumerate", "5"][..],
        &["render", "4", "--columns", "3"],
        &["count", "25", "--method", "both"],
    ] {
        assert_eq!(segre(args).stdout, segre(args).stdout);
    }
}
