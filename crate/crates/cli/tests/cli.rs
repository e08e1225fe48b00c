use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

fn hurwitz(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

#[test]
fn count_examples() {
    let o = hurwitz(&["count", "--n", "2", "--m", "1", "--lambda", "2"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"raw\":4,\"hurwitz\":{\"num\":2,\"den\":1},\"matching\":2}\n");

    let o = hurwitz(&["count", "--n", "1", "--m", "3", "--lambda", "1"], "");
    assert!(stdout(&o).starts_with("{\"raw\":0,"));

    let o = hurwitz(&["count", "--n", "2", "--m", "0", "--lambda", "1,1"], "");
    assert!(stdout(&o).contains("\"hurwitz\":{\"num\":1,\"den\":2}"));
}

#[test]
fn count_accepts_exponent_form_and_csv() {
    let o = hurwitz(&["count", "--m", "2", "--lambda", "2^1 1^1", "--format", "csv"], "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,m,lambda,raw_count,hurwitz_num,hurwitz_den,matching_count"));
    let row = lines.next().unwrap();
    assert!(row.starts_with("3,2,\"2,1\","), "{}", row);
    assert!(!text.contains('.'));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["count", "--n", "3", "--m", "1", "--lambda", "2"],
        vec!["count", "--m", "1", "--lambda", "2,x"],
        vec!["count", "--m", "1"],
        vec!["count", "--m", "1", "--lambda", "2", "--format", "dot"],
        vec!["frobnicate"],
    ] {
        let o = hurwitz(&args, "");
        assert_eq!(o.status.code(), Some(2), "{:?}: {}", args, stderr(&o));
    }
}

#[test]
fn caps_exit_3_unless_forced() {
    let o = hurwitz(&["count", "--m", "1", "--lambda", "6"], "");
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("--force"));
    let o = hurwitz(&["count", "--m", "8", "--lambda", "1"], "");
    assert_eq!(o.status.code(), Some(3));
    let o = hurwitz(&["count", "--m", "8", "--lambda", "1", "--force"], "");
    assert_eq!(o.status.code(), Some(0));
    let o = hurwitz(&["verify", "--n-max", "5", "--m-max", "1"], "");
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn pmap_then_preimages() {
    let o = hurwitz(&["pmap", "--n", "2"], "(1 2)\n");
    assert_eq!(o.status.code(), Some(0));
    let image = stdout(&o);
    assert_eq!(image, "{\"n\":2,\"deltas\":[\"(1 -1)(2 -2)\",\"(1 -2)(-1 2)\"]}\n");
    let o = hurwitz(&["preimages", "--format", "text"], &image);
    assert_eq!(stdout(&o), "(-1 -2)\n(1 2)\n");
}

#[test]
fn pmap_streams_many_lines_and_infers_n() {
    let o = hurwitz(&["pmap", "--format", "text"], "# words\n(1 2)\n\n(1 2);(-1 3)\n");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("[(1 -1)(2 -2)(3 -3), "));
}

#[test]
fn parse_errors_name_line_and_column() {
    let o = hurwitz(&["pmap", "--n", "2"], "(1 2)\n(1 2);(2 -2)\n");
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("line 2, column 7"), "{}", err);
    assert!(err.contains("not admissible"), "{}", err);
}

#[test]
fn semantic_errors_name_the_condition() {
    let o = hurwitz(&["preimages"], "{\"n\":2,\"deltas\":[\"(1 2)(-1 -2)\"]}");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("start with tau"), "{}", stderr(&o));

    let o = hurwitz(&["preimages"], "{\"n\":2,\"deltas\":[\"(1 -1)(2 -2)\",\"(1 -1)(2 -2)\"]}");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("Lambda"), "{}", stderr(&o));
}

#[test]
fn build_requires_two_matchings() {
    let o = hurwitz(&["build", "--dot"], "{\"n\":2,\"deltas\":[\"(1 -1)(2 -2)\",\"(1 -2)(-1 2)\"]}");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("m >= 2 required"));
}

#[test]
fn build_matches_golden_files() {
    for name in ["projective", "sphere"] {
        let input = golden(&format!("{}.seq.json", name));
        let input = input.to_str().unwrap();
        let dot = hurwitz(&["build", "--dot", "--input", input], "");
        assert_eq!(stdout(&dot), std::fs::read_to_string(golden(&format!("{}.dot", name))).unwrap());
        let json = hurwitz(&["build", "--format", "json", "--input", input], "");
        assert_eq!(stdout(&json), std::fs::read_to_string(golden(&format!("{}.json", name))).unwrap());
    }
}

#[test]
fn extract_inverts_build() {
    let seq = std::fs::read_to_string(golden("projective.seq.json")).unwrap();
    let structured = std::fs::read_to_string(golden("projective.json")).unwrap();
    let o = hurwitz(&["extract"], &structured);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), seq);
}

#[test]
fn verify_small_and_degenerate() {
    let o = hurwitz(&["verify", "--n-max", "2", "--m-max", "3"], "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let ok_suites = text.lines().filter(|l| l.ends_with("  ok")).count();
    assert!(ok_suites >= 6, "{}", text);

    let o = hurwitz(&["verify", "--n-max", "1", "--m-max", "1"], "");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_reports_injected_fault() {
    let o = hurwitz(&["verify", "--n-max", "2", "--m-max", "2", "--inject-fault"], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL: image validity"));
}

#[test]
fn table_writes_artifact() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let o = hurwitz(&["table", "--n-max", "3", "--m-max", "3", "--out", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    let mut reader = csv::Reader::from_path(&path).unwrap();
    let mut rows = 0;
    for record in reader.records() {
        let r = record.unwrap();
        let m: u32 = r[1].parse().unwrap();
        let raw: u64 = r[3].parse().unwrap();
        let matching: u64 = r[6].parse().unwrap();
        assert_eq!(raw, matching << m);
        rows += 1;
    }
    // p(1) + p(2) + p(3) partitions times four values of m
    assert_eq!(rows, (1 + 2 + 3) * 4);
}

#[test]
fn enumerate_kinds() {
    let o = hurwitz(&["enumerate", "--m", "1", "--lambda", "2"], "");
    assert_eq!(stdout(&o).lines().count(), 4);
    let o = hurwitz(&["enumerate", "--m", "1", "--lambda", "2", "--kind", "matchings"], "");
    assert_eq!(stdout(&o).lines().count(), 2);
    let one = hurwitz(&["enumerate", "--m", "3", "--lambda", "2,1"], "");
    let many = hurwitz(&["enumerate", "--m", "3", "--lambda", "2,1", "--workers", "4"], "");
    assert_eq!(one.stdout, many.stdout);
}
