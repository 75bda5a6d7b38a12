use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn aprac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aprac"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_string_lossy().into_owned()
}

fn k9_text() -> String {
    let mut s = String::from("n 9\n");
    for u in 0..9 {
        for v in u + 1..9 {
            s.push_str(&format!("e {u} {v}\n"));
        }
    }
    s
}

#[test]
fn draw_then_validate_then_render() {
    let dir = tempfile::tempdir().unwrap();
    let (graph, drawing, report, svg) = (
        path(dir.path(), "k9.txt"),
        path(dir.path(), "k9.drawing"),
        path(dir.path(), "report.txt"),
        path(dir.path(), "k9.svg"),
    );
    fs::write(&graph, k9_text()).unwrap();

    let out = aprac(&["draw", "--input", &graph, "--output", &drawing]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&drawing).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 36);

    let out = aprac(&[
        "validate", "--input", &drawing, "--bends", "2", "--mode", "aprac", "--report", &report,
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report_text = fs::read_to_string(&report).unwrap();
    assert!(report_text.contains("verdict pass"), "{report_text}");
    assert!(report_text.contains("density 2-bend"));

    // Too few bends allowed: the same drawing fails.
    let out = aprac(&["validate", "--input", &drawing, "--bends", "1", "--mode", "aprac"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("bend-count"));

    let out = aprac(&[
        "render",
        "--input",
        &drawing,
        "--output",
        &svg,
        "--mark-crossings",
        "--scale",
        "2",
    ]);
    assert!(out.status.success());
    assert!(fs::read_to_string(&svg).unwrap().starts_with("<svg"));
}

#[test]
fn decompose_lists_four_factors() {
    let dir = tempfile::tempdir().unwrap();
    let graph = path(dir.path(), "k9.txt");
    fs::write(&graph, k9_text()).unwrap();
    let out = aprac(&["decompose", "--input", &graph]);
    assert!(out.status.success());
    let listing = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = listing.lines().collect();
    assert_eq!(lines.len(), 4);
    for line in lines {
        assert_eq!(line.split_whitespace().count(), 9);
        assert!(!line.contains('*'), "K9 needs no augmented arcs");
    }
}

#[test]
fn generate_and_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let (graph, drawing) = (path(dir.path(), "g.txt"), path(dir.path(), "d.txt"));
    let out = aprac(&[
        "generate",
        "--family",
        "aprac1",
        "--k",
        "10",
        "--out-graph",
        &graph,
        "--out-drawing",
        &drawing,
    ]);
    assert!(out.status.success());
    let out = aprac(&["validate", "--input", &drawing, "--bends", "1", "--mode", "aprac"]);
    assert_eq!(out.status.code(), Some(0));

    let k4 = path(dir.path(), "k4.txt");
    fs::write(&k4, "n 4\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n").unwrap();
    let out = aprac(&[
        "oracle",
        "--input",
        &k4,
        "--grid",
        "3x3",
        "--mode",
        "aprac",
        "--deterministic",
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("found"));
    let out = aprac(&["oracle", "--input", &k4, "--grid", "2x2", "--mode", "aprac"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("not a proof"));
}

#[test]
fn usage_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = path(dir.path(), "missing.txt");
    assert_eq!(
        aprac(&["draw", "--input", &missing, "--output", &missing])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        aprac(&["oracle", "--input", &missing, "--grid", "3", "--mode", "rac"])
            .status
            .code(),
        Some(2)
    );
    let out = aprac(&[
        "generate",
        "--family",
        "aprac2",
        "--k",
        "3",
        "--out-graph",
        &missing,
        "--out-drawing",
        &missing,
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("k >= 6"));
}
