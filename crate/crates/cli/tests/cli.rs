use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;
use vdcore::io::{parse_complex, parse_complex_json, parse_graph};
use vdcore::verify::VerificationReport;
use vdcore::{verify_certificate, SimplicialComplex, VdCertificate};

struct Sandbox {
    dir: TempDir,
}

impl Sandbox {
    fn new() -> Self {
        Sandbox {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        fs::write(&path, text).unwrap();
        path
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }
}

fn vd<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    Command::new(env!("CARGO_BIN_EXE_vd"))
        .args(args)
        .env_remove("VD_MAX_VERTICES")
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn cx(facets: &[&str]) -> SimplicialComplex {
    SimplicialComplex::from_facets(facets.iter().map(|f| f.split_whitespace())).unwrap()
}

const TWO_TRIANGLES: &str = "x1 x2 x3\nx3 x4 x5\n";

#[test]
fn whisker_emits_the_four_facet_complex() {
    let s = Sandbox::new();
    let f = s.file("t.cplx", TWO_TRIANGLES);
    let out = vd(["whisker", p(&f), "--classes", "x3"]);
    assert_eq!(code(&out), 0);
    let c = parse_complex(&stdout(&out)).unwrap();
    assert_eq!(c, cx(&["x4 x5 y1", "x1 x2 y1", "x3 x4 x5", "x1 x2 x3"]));

    let w = s.file("w.cplx", &stdout(&out));
    let out = vd(["check", p(&w)]);
    assert_eq!(code(&out), 10);
    assert_eq!(stdout(&out).trim(), "not vertex decomposable");
}

#[test]
fn check_answers_and_certificates() {
    let s = Sandbox::new();
    let f = s.file("t.cplx", "x1 x2 x3\nx3 x4\n");
    let cert_path = s.path("cert.json");
    for extra in [vec![], vec!["--no-memo"], vec!["--single-thread"]] {
        let mut args = vec!["check", p(&f), "--certificate", p(&cert_path)];
        args.extend(extra);
        let out = vd(args);
        assert_eq!(code(&out), 0);
        let cert: VdCertificate =
            serde_json::from_str(&fs::read_to_string(&cert_path).unwrap()).unwrap();
        assert!(cert.is_decomposable());
        assert!(verify_certificate(&parse_complex("x1 x2 x3\nx3 x4\n").unwrap(), &cert).unwrap());
    }
    let g = s.file("pair.cplx", "x1 x2\nx4 x5\n");
    let out = vd(["--json", "check", p(&g), "--certificate", p(&cert_path)]);
    assert_eq!(code(&out), 10);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["vertex_decomposable"], false);
    let cert: VdCertificate =
        serde_json::from_str(&fs::read_to_string(&cert_path).unwrap()).unwrap();
    assert!(!cert.is_decomposable());
}

#[test]
fn complex_operations_round_trip() {
    let s = Sandbox::new();
    let f = s.file("t.cplx", TWO_TRIANGLES);
    let z = s.file(
        "z.json",
        r#"{"vertices": ["z1", "z2"], "facets": [["z1"], ["z2"]]}"#,
    );
    let cases: Vec<(Vec<&str>, SimplicialComplex)> = vec![
        (vec!["link", p(&f), "--face", "x3"], cx(&["x1 x2", "x4 x5"])),
        (
            vec!["link", p(&f), "--face", ""],
            parse_complex(TWO_TRIANGLES).unwrap(),
        ),
        (
            vec!["restrict", p(&f), "--to", "x1,x2,x4,x5"],
            cx(&["x1 x2", "x4 x5"]),
        ),
        (
            vec!["join", p(&f), p(&z)],
            cx(&["x1 x2 x3 z1", "x1 x2 x3 z2", "x3 x4 x5 z1", "x3 x4 x5 z2"]),
        ),
    ];
    for (args, expected) in cases {
        let out = vd(&args);
        assert_eq!(code(&out), 0, "{args:?}");
        assert_eq!(parse_complex(&stdout(&out)).unwrap(), expected, "{args:?}");
        let mut json_args = vec!["--json"];
        json_args.extend(&args);
        let out = vd(&json_args);
        assert_eq!(
            parse_complex_json(&stdout(&out)).unwrap(),
            expected,
            "{args:?}"
        );
    }
    // Deleting a vertex drops it from the vertex set; the output keeps any
    // ghost vertices and re-parses to the same value.
    let out = vd(["del", p(&f), "--face", "x3"]);
    let c = parse_complex(&stdout(&out)).unwrap();
    assert_eq!(c.facet_labels(), vec![vec!["x1", "x2"], vec!["x4", "x5"]]);
    let out = vd(["del", p(&f), "--face", "x1,x2"]);
    let c = parse_complex(&stdout(&out)).unwrap();
    assert_eq!(c.vertex_count(), 5);
    assert_eq!(
        c.facet_labels(),
        vec![vec!["x1", "x3"], vec!["x2", "x3"], vec!["x3", "x4", "x5"]]
    );
}

#[test]
fn graph_commands() {
    let s = Sandbox::new();
    let c4 = s.file("c4.graph", "x1 x2\nx2 x3\nx3 x4\nx4 x1\n");
    let path = s.file("path.graph", "vertices: x4\nx1 x2\nx2 x3\n");
    assert_eq!(code(&vd(["chordal", p(&c4)])), 10);
    assert_eq!(code(&vd(["chordal", p(&path)])), 0);

    let out = vd(["ind", p(&c4)]);
    assert_eq!(
        parse_complex(&stdout(&out)).unwrap(),
        cx(&["x1 x3", "x2 x4"])
    );

    let out = vd(["whisker-graph", p(&path), "--s", "x1"]);
    assert_eq!(code(&out), 0);
    let g = parse_graph(&stdout(&out)).unwrap();
    assert_eq!(g.vertex_count(), 5);
    assert!(g.has_edge(g.id("x1").unwrap(), g.id("y1").unwrap()));

    let out = vd(["whisker-graph", p(&c4), "--s", "x1,x3", "--ind"]);
    let whiskered = parse_complex(&stdout(&out)).unwrap();
    assert_eq!(whiskered.vertex_count(), 6);
}

#[test]
fn explain_names_the_failing_face() {
    let s = Sandbox::new();
    let six = s.file(
        "r.cplx",
        "x1 x2 x3 x4\nx1 x3 x4 x5\nx1 x3 x5 x6\nx1 x2 x5 x6\nx2 x3 x6\n",
    );
    let out = vd(["explain", p(&six), "--classes", "x1|x2"]);
    assert_eq!(code(&out), 10);
    assert!(
        stdout(&out).contains("witness μ = {x1 x2}"),
        "{}",
        stdout(&out)
    );

    let out = vd(["--json", "explain", p(&six), "--classes", "x1|x2"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["witness"], serde_json::json!(["x1", "x2"]));

    let t = s.file("t.cplx", TWO_TRIANGLES);
    let out = vd(["explain", p(&t), "--classes", "x3"]);
    assert!(stdout(&out).contains("witness μ = ∅"));
    // A cone over two disjoint edges: every vertex fails.
    let out = vd(["explain", p(&t)]);
    assert_eq!(code(&out), 10);
    assert_eq!(stdout(&out).lines().count(), 6, "{}", stdout(&out));
    let path = s.file("p.cplx", "x1 x2 x3\nx3 x4\n");
    let out = vd(["explain", p(&path)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("shedding sequence"));

    let g = s.file("g.graph", "x1 x2\nx4 x5\nx3 x2\nx3 x4\n");
    let out = vd(["explain", "--graph", p(&g), "--s", "x3"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn coloring_documents() {
    let s = Sandbox::new();
    let t = s.file("t.cplx", TWO_TRIANGLES);
    let col = s.file(
        "c.json",
        r#"{"classes": [["x3"]], "uncolored": ["x1", "x2", "x4", "x5"]}"#,
    );
    let out = vd(["whisker", p(&t), "--coloring", p(&col)]);
    assert_eq!(code(&out), 0);
    assert_eq!(parse_complex(&stdout(&out)).unwrap().facets().len(), 4);
}

#[test]
fn error_exit_codes() {
    let s = Sandbox::new();
    let t = s.file("t.cplx", TWO_TRIANGLES);
    let bad = s.file("bad.cplx", "x1 ∅\n");
    // Invalid coloring is a negative answer.
    assert_eq!(code(&vd(["whisker", p(&t), "--classes", "x1,x2"])), 10);
    assert_eq!(code(&vd(["whisker", p(&t), "--classes", "q9"])), 2);
    assert_eq!(code(&vd(["whisker", p(&t)])), 2);
    assert_eq!(code(&vd(["check", p(&bad)])), 2);
    assert_eq!(code(&vd(["check", p(&s.path("missing.cplx"))])), 2);
    assert_eq!(code(&vd(["link", p(&t), "--face", "x1,x5"])), 2);
    assert_eq!(code(&vd(["frobnicate"])), 2);
    assert_eq!(code(&vd(["verify", "--theorem", "9.9", "--seed", "1"])), 2);
    assert_eq!(code(&vd(["--help"])), 0);

    let capped = Command::new(env!("CARGO_BIN_EXE_vd"))
        .args(["check", p(&t)])
        .env("VD_MAX_VERTICES", "4")
        .output()
        .unwrap();
    assert_eq!(code(&capped), 3);
    let bogus = Command::new(env!("CARGO_BIN_EXE_vd"))
        .args(["check", p(&t)])
        .env("VD_MAX_VERTICES", "lots")
        .output()
        .unwrap();
    assert_eq!(code(&bogus), 2);
}

#[test]
fn verify_reports_are_reproducible() {
    let s = Sandbox::new();
    assert_eq!(
        code(&vd(["verify", "--theorem", "3.3", "--budget", "10"])),
        2
    );
    let mut reports = Vec::new();
    for name in ["a.json", "b.json"] {
        let path = s.path(name);
        let out = vd([
            "verify",
            "--theorem",
            "3.3",
            "--seed",
            "5",
            "--budget",
            "60",
            "--report",
            p(&path),
        ]);
        assert_eq!(code(&out), 0, "{}", stdout(&out));
        let report: VerificationReport =
            serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
        assert!(report.passed());
        assert_eq!(report.instances_checked, 63);
        reports.push(report);
    }
    assert_eq!(reports[0].spec, reports[1].spec);
    assert_eq!(reports[0].stats, reports[1].stats);

    for theorem in ["3.5", "3.7", "joins-links", "section4", "chordal"] {
        let out = vd([
            "verify",
            "--theorem",
            theorem,
            "--seed",
            "3",
            "--budget",
            "30",
        ]);
        assert_eq!(code(&out), 0, "{theorem}: {}", stdout(&out));
    }
    let out = vd([
        "verify",
        "--theorem",
        "3.7",
        "--tier",
        "exhaustive",
        "--max-vertices",
        "3",
    ]);
    assert_eq!(code(&out), 0);
}
