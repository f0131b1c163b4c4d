//! End-to-end tests driving the fcat binary.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn fcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fcat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fcat_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fcat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary exits")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn count_examples() {
    let out = fcat(&["count", "--family", "partitions", "-n", "2", "-m", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "22\n");

    let out = fcat(&["count", "--family", "positive", "-n", "2", "-m", "1"]);
    assert_eq!(stdout(&out), "2\n");

    let out = fcat(&[
        "count", "--family", "refined", "-n", "2", "-m", "1", "--J", "1",
    ]);
    assert_eq!(stdout(&out), "1\n");

    // the (5,3) cell exceeds the naive candidate bound; --force runs the
    // pruning enumerator anyway
    let out = fcat(&["count", "--family", "regions", "-n", "5", "-m", "3"]);
    assert_eq!(out.status.code(), Some(3));
    let out = fcat(&[
        "count", "--family", "regions", "-n", "5", "-m", "3", "--force",
    ]);
    assert_eq!(stdout(&out), "7084\n");

    let out = fcat(&["count", "--family", "regions", "-n", "4", "-m", "3"]);
    assert_eq!(stdout(&out), "969\n");

    let out = fcat(&["count", "--family", "dissections", "-n", "4", "-m", "3"]);
    assert_eq!(stdout(&out), "969\n");
}

#[test]
fn count_json_flag() {
    let out = fcat(&[
        "count",
        "--family",
        "partitions",
        "-n",
        "2",
        "-m",
        "3",
        "--json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["count"], "22");
    assert_eq!(value["family"], "partitions");
}

#[test]
fn refined_table_rows_sum_to_the_full_count() {
    let out = fcat(&[
        "count", "--family", "refined", "-n", "3", "-m", "2", "--table",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = value["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    let total: u64 = rows
        .iter()
        .map(|r| r["count"].as_str().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 55);
}

#[test]
fn map_partition_to_tableau_example() {
    let out = fcat_stdin(
        &["map", "--from", "partition", "--to", "tableau"],
        r#"{"n":2,"m":3,"parts":[4,2]}"#,
    );
    assert!(out.status.success());
    assert_eq!(stdout(&out), "{\"n\":2,\"m\":3,\"rows\":[[1,3],[2]]}\n");
}

#[test]
fn map_tableau_to_dissection_snake() {
    let out = fcat_stdin(
        &["map", "--from", "tableau", "--to", "dissection"],
        r#"{"n":4,"m":3,"rows":[[3,3,3,3],[3,3,3],[3,3],[3]]}"#,
    );
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["labeling"], "alternating");
    assert_eq!(
        value["diagonals"],
        serde_json::json!([[3, 6], [6, 9], [9, 12], [12, 15]])
    );
}

#[test]
fn map_partition_to_dissection_fan() {
    let out = fcat_stdin(
        &["map", "--from", "partition", "--to", "dissection"],
        r#"{"n":2,"m":1,"parts":[0,0]}"#,
    );
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let diagonals = value["diagonals"].as_array().unwrap();
    assert!(diagonals.iter().all(|d| d[0] == 0));
}

#[test]
fn map_round_trip_through_all_families() {
    let partition = r#"{"n":3,"m":2,"parts":[5,2,1]}"#;
    let tableau = fcat_stdin(
        &["map", "--from", "partition", "--to", "tableau"],
        partition,
    );
    let dissection = fcat_stdin(
        &["map", "--from", "tableau", "--to", "dissection"],
        &stdout(&tableau),
    );
    let back = fcat_stdin(
        &["map", "--from", "dissection", "--to", "partition"],
        &stdout(&dissection),
    );
    let value: serde_json::Value = serde_json::from_str(&stdout(&back)).unwrap();
    assert_eq!(value["parts"], serde_json::json!([5, 2, 1]));
}

#[test]
fn map_standard_dissection_reads_initial_points() {
    // the standard fan with saturated image
    let out = fcat_stdin(
        &["map", "--from", "dissection", "--to", "partition"],
        r#"{"n":3,"m":2,"labeling":"standard","diagonals":[[2,9],[4,9],[6,9]]}"#,
    );
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["parts"], serde_json::json!([6, 4, 2]));
}

#[test]
fn enumerate_partitions_in_order() {
    let out = fcat(&["enumerate", "--family", "partitions", "-n", "2", "-m", "1"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[0], r#"{"n":2,"m":1,"parts":[2,1]}"#);
    assert_eq!(lines[4], r#"{"n":2,"m":1,"parts":[0,0]}"#);
}

#[test]
fn enumerate_regions_streams_tableaux() {
    let out = fcat(&["enumerate", "--family", "regions", "-n", "2", "-m", "3"]);
    assert_eq!(stdout(&out).lines().count(), 22);
}

#[test]
fn enumerate_dissections_respects_labeling() {
    let out = fcat(&[
        "enumerate",
        "--family",
        "dissections",
        "-n",
        "1",
        "-m",
        "1",
        "--labeling",
        "standard",
    ]);
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 2);
    assert!(lines.iter().all(|l| l.contains(r#""labeling":"standard""#)));
}

#[test]
fn verify_suites_pass() {
    for suite in ["counts", "roundtrip", "walls", "refined", "oracle"] {
        let out = fcat(&["verify", "--suite", suite, "--n-max", "3", "--m-max", "2"]);
        assert!(out.status.success(), "suite {suite}: {}", stdout(&out));
        for line in stdout(&out).lines() {
            let value: serde_json::Value = serde_json::from_str(line).unwrap();
            assert_eq!(value["status"], "ok", "suite {suite}: {line}");
        }
    }
}

#[test]
fn verify_guard_rail_on_bounds() {
    let out = fcat(&[
        "verify", "--suite", "counts", "--n-max", "9", "--m-max", "3",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn exit_codes() {
    // usage
    let out = fcat(&["count", "--family", "partitions", "-n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = fcat(&[
        "count",
        "--family",
        "partitions",
        "-n",
        "2",
        "-m",
        "1",
        "--J",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // guard rail without --force
    let out = fcat(&["count", "--family", "regions", "-n", "9", "-m", "3"]);
    assert_eq!(out.status.code(), Some(3));
    // schema
    let out = fcat_stdin(
        &["map", "--from", "partition", "--to", "tableau"],
        "not json",
    );
    assert_eq!(out.status.code(), Some(4));
    let out = fcat_stdin(
        &["map", "--from", "partition", "--to", "tableau"],
        r#"{"n":2}"#,
    );
    assert_eq!(out.status.code(), Some(4));
    // invariant
    let out = fcat_stdin(
        &["map", "--from", "partition", "--to", "tableau"],
        r#"{"n":2,"m":1,"parts":[4,3]}"#,
    );
    assert_eq!(out.status.code(), Some(5));
    let out = fcat_stdin(
        &["map", "--from", "tableau", "--to", "partition"],
        r#"{"n":2,"m":1,"rows":[[1,0],[0]]}"#,
    );
    assert_eq!(out.status.code(), Some(5));
    // mapping a standard-labeled dissection into a region is undefined
    let out = fcat_stdin(
        &["map", "--from", "dissection", "--to", "tableau"],
        r#"{"n":2,"m":1,"labeling":"standard","diagonals":[[0,2],[0,3]]}"#,
    );
    assert_eq!(out.status.code(), Some(5));
    // unwritable output
    let out = fcat(&[
        "count",
        "--family",
        "partitions",
        "-n",
        "2",
        "-m",
        "1",
        "--out",
        "/nonexistent-dir/x.txt",
    ]);
    assert_eq!(out.status.code(), Some(6));
}

#[test]
fn render_polygon_with_snake() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("snake.svg");
    let out = fcat_stdin(
        &["render", "--out", path.to_str().unwrap()],
        r#"{"n":4,"m":3,"labeling":"alternating"}"#,
    );
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.trim_end().ends_with("</svg>"));
    // 17 vertex labels and 4 highlighted snake diagonals
    assert_eq!(svg.matches("<text").count(), 17);
    assert_eq!(svg.matches("#c0392b").count(), 4);
}

#[test]
fn render_tableau_and_partition() {
    let out = fcat_stdin(
        &["render"],
        r#"{"n":4,"m":3,"rows":[[0,0,0,0],[0,0,0],[0,0],[0]]}"#,
    );
    assert!(out.status.success());
    let svg = stdout(&out);
    assert_eq!(svg.matches("<rect").count(), 10);

    let out = fcat_stdin(&["render"], r#"{"n":2,"m":3,"parts":[4,2]}"#);
    let svg = stdout(&out);
    // 6 + 3 staircase cells
    assert_eq!(svg.matches("<rect").count(), 9);
    assert_eq!(svg.matches("#9ec9e6").count(), 6);
}

#[test]
fn render_is_deterministic() {
    let input = r#"{"n":2,"m":3,"labeling":"alternating"}"#;
    let first = stdout(&fcat_stdin(&["render"], input));
    let second = stdout(&fcat_stdin(&["render"], input));
    assert_eq!(first, second);
    assert!(!first.is_empty());
}

#[test]
fn render_rejects_unknown_format_and_bad_objects() {
    let out = fcat_stdin(&["render", "--format", "png"], "{}");
    assert_eq!(out.status.code(), Some(2));
    let out = fcat_stdin(&["render"], r#"{"x":1}"#);
    assert_eq!(out.status.code(), Some(4));
    let out = fcat_stdin(&["render"], r#"{"n":2,"m":1,"rows":[[1,0],[0]]}"#);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn outputs_are_identical_between_stdout_and_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.txt");
    let direct = stdout(&fcat(&[
        "count",
        "--family",
        "partitions",
        "-n",
        "5",
        "-m",
        "3",
    ]));
    let out = fcat(&[
        "count",
        "--family",
        "partitions",
        "-n",
        "5",
        "-m",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(Path::new(&path)).unwrap(), direct);
    assert_eq!(direct, "7084\n");
}
