use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use sr_locus_cli::Report;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sr-locus"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn run_file(args: &[&str], file: &str) -> Output {
    bin().args(args).arg(data(file)).output().unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

const FILES: [&str; 5] = [
    "cone.txt",
    "cone_facets.txt",
    "path.txt",
    "complete_intersection.txt",
    "four_cycle.txt",
];

#[test]
fn locus_is_the_default_command() {
    let text = stdout(&run_file(&[], "cone.txt"));
    assert!(text.contains("J = (x, y, w, a, b)\n"), "{text}");
    assert!(text.contains("maximal: {3}\n"), "{text}");
    assert_eq!(stdout(&run_file(&["locus"], "cone.txt")), text);
}

#[test]
fn facet_input_matches_ideal_input() {
    for args in [&[][..], &["--method", "algebraic"], &["--format", "json"]] {
        assert_eq!(
            stdout(&run_file(args, "cone.txt")),
            stdout(&run_file(args, "cone_facets.txt"))
        );
    }
}

#[test]
fn stdin_matches_file_input() {
    let input = std::fs::read_to_string(data("cone.txt")).unwrap();
    let file = stdout(&run_file(&[], "cone.txt"));
    assert_eq!(stdout(&run_with_stdin(&[], &input)), file);
    assert_eq!(stdout(&run_with_stdin(&["locus", "-"], &input)), file);
}

#[test]
fn check_reports_the_irrelevant_face() {
    let text = stdout(&run_file(&["check", "--face", ""], "path.txt"));
    assert!(text.contains("not finitely generated"), "{text}");
    assert!(text.contains("witness x_1^2*x_2"), "{text}");

    let text = stdout(&run_file(&["check", "--face", "2"], "path.txt"));
    assert!(text.ends_with("\nfinitely generated\n"), "{text}");
}

#[test]
fn check_on_the_cone_face() {
    let text = stdout(&run_file(&["check", "--face", "3"], "cone.txt"));
    assert!(text.contains("not finitely generated"), "{text}");
    let text = stdout(&run_file(&["check", "--face", "1"], "cone.txt"));
    assert!(
        text.contains("(I : x_F) = (z*b, w, a)\nfinitely generated"),
        "{text}"
    );
}

#[test]
fn link_shows_cone_points() {
    let text = stdout(&run_file(&["link", "--face", "1"], "cone.txt"));
    assert!(text.contains("facets: {2,3} {2,6}\n"), "{text}");
    assert!(text.contains("cone points: {2}\n"), "{text}");
    assert!(text.contains("no free face\n"), "{text}");
}

#[test]
fn oracle_on_a_complete_intersection_vanishes() {
    let text = stdout(&run_file(
        &["oracle", "--char", "2", "--emax", "3"],
        "complete_intersection.txt",
    ));
    assert!(text.contains("e = 2: vanishes"), "{text}");
    assert!(text.contains("e = 3: vanishes"), "{text}");
    assert!(text.contains("all degrees vanish"), "{text}");
}

#[test]
fn oracle_on_the_path_does_not_vanish() {
    for p in ["2", "3"] {
        let text = stdout(&run_file(
            &["oracle", "--char", p, "--emax", "3"],
            "path.txt",
        ));
        assert!(text.contains("does not vanish"), "{text}");
        assert!(!text.contains("all degrees vanish"), "{text}");
        assert!(text.contains("criterion: not finitely generated"), "{text}");
    }
}

#[test]
fn nci_shortcut_agrees_with_locus() {
    let text = stdout(&run_file(&["nci"], "four_cycle.txt"));
    assert!(text.starts_with("nearly complete intersection\n"), "{text}");
    assert!(text.contains("J = (a, b, c, d)"), "{text}");
    let text = stdout(&run_file(&["nci"], "cone.txt"));
    assert!(
        text.contains("not a nearly complete intersection"),
        "{text}"
    );
}

#[test]
fn methods_and_pruning_agree() {
    for file in FILES {
        let faces = |args: &[&str]| {
            let json = stdout(&run_file(&[&["--format", "json"], args].concat(), file));
            let v: serde_json::Value = serde_json::from_str(&json).unwrap();
            (
                v["igl"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|e| e["face"].clone())
                    .collect::<Vec<_>>(),
                v["j_ideal"].clone(),
            )
        };
        let both = faces(&[]);
        assert_eq!(faces(&["--method", "algebraic"]), both, "{file}");
        assert_eq!(faces(&["--method", "combinatorial"]), both, "{file}");
        assert_eq!(faces(&["--no-prune"]), both, "{file}");
    }
}

#[test]
fn json_matches_the_schema() {
    let json = stdout(&run_file(&["--format", "json"], "cone.txt"));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    for key in [
        "vars",
        "ideal",
        "igl",
        "igl_maximal",
        "j_ideal",
        "empty_locus",
        "method",
    ] {
        assert!(keys.contains(&key), "missing {key}");
    }
    assert_eq!(v["method"], "both");
    assert_eq!(v["empty_locus"], false);
    assert_eq!(v["igl_maximal"], serde_json::json!([[3]]));
    assert_eq!(v["ideal"][0]["display"], "x*w");
    assert_eq!(
        v["ideal"][0]["exponents"],
        serde_json::json!([1, 0, 0, 1, 0, 0])
    );
    let entry = &v["igl"][1];
    assert_eq!(entry["face"], serde_json::json!([3]));
    assert_eq!(entry["prime"].as_array().unwrap().len(), 5);
    assert_eq!(entry["witness"]["free_face"], serde_json::json!([2]));
    assert!(entry["witness"]["monomial"]["display"].is_string());
}

#[test]
fn json_round_trips_to_identical_text() {
    let commands: [&[&str]; 7] = [
        &[],
        &["--method", "algebraic"],
        &["check", "--face", ""],
        &["link", "--face", "1"],
        &["oracle", "--char", "3"],
        &["nci"],
        &["--no-prune"],
    ];
    for file in FILES {
        for args in commands {
            let text = stdout(&run_file(args, file));
            let json = stdout(&run_file(&[&["--format", "json"], args].concat(), file));
            let report: Report = serde_json::from_str(&json).unwrap();
            assert_eq!(report.to_string(), text, "{file} {args:?}");
        }
    }
}

#[test]
fn input_errors_exit_with_one() {
    let cases: [(&[&str], &str); 9] = [
        (&[], "vars: x, y\n"),
        (&[], "vars: x, y\nideal: x^2\n"),
        (&[], "vars: x, y\nideal: x*q\n"),
        (&[], "vars: x\nideal: x\nfacets: 1\n"),
        (&[], "garbage"),
        (
            &["check", "--face", "1 3"],
            "vars: x_1, x_2, x_3\nideal: x_1*x_3\n",
        ),
        (
            &["check", "--face", "7"],
            "vars: x_1, x_2\nideal: x_1*x_2\n",
        ),
        (&["oracle", "--char", "7"], "vars: x, y\nideal: x*y\n"),
        (&["--method", "fast"], "vars: x, y\nideal: x*y\n"),
    ];
    for (args, input) in cases {
        let out = run_with_stdin(args, input);
        assert_eq!(out.status.code(), Some(1), "{args:?} {input:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
    let missing = bin().arg("/nonexistent/problem.txt").output().unwrap();
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn unit_ideal_is_an_input_error() {
    let out = run_with_stdin(&[], "vars: x, y\nideal: 1\n");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn disagreement_maps_to_exit_two() {
    let err = sr_locus_cli::CliError::Algebra(sr_locus::Error::MethodDisagreement {
        algebraic: vec![],
        combinatorial: vec![sr_locus::VarSet::EMPTY],
    });
    assert_eq!(err.exit_code(), 2);
    assert_eq!(sr_locus_cli::CliError::Input("x".into()).exit_code(), 1);
}

#[test]
fn temp_files_are_read() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "vars: p, q, r").unwrap();
    writeln!(file, "facets: 1 2; 3").unwrap();
    let out = bin().arg(file.path()).output().unwrap();
    let text = stdout(&out);
    assert!(text.contains("I = (p*r, q*r)"), "{text}");
    assert!(text.contains("J = (p, q, r)"), "{text}");
}
