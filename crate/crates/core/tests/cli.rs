use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn sublabel(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sublabel"));
    cmd.args(args)
        .env_remove("SUBLABEL_SEARCH_CAP")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    Output {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn run(args: &[&str]) -> Output {
    sublabel(args, "", &[])
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).expect("valid JSON")
}

/// JSON that follows the human-readable part of `verify` output.
fn trailing_json(text: &str) -> Value {
    json(&text[text.find("{\n").expect("JSON block")..])
}

#[test]
fn construct_cycle_emits_the_labeling_and_verdicts() {
    let out = run(&[
        "construct",
        "--family",
        "cycle",
        "--n",
        "3",
        "--labeling",
        "sa-sv-al",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let doc = json(&out.stdout);
    assert_eq!(doc["format_version"], 1);
    assert_eq!(doc["vertex_labels"], serde_json::json!([1, 2, 3]));
    assert_eq!(doc["arc_labels"], serde_json::json!([5, 4, 6]));
    let c = &doc["classification"];
    assert_eq!(
        c["arc"],
        serde_json::json!({"verdict": "arithmetic", "a": 4, "d": 1})
    );
    assert_eq!(
        c["vertex"],
        serde_json::json!({"verdict": "arithmetic", "a": 1, "d": 1})
    );
    assert_eq!(c["strong"], true);
}

#[test]
fn construct_star_reports_magic_constant() {
    let out = run(&[
        "construct",
        "--family",
        "star",
        "--n",
        "2",
        "--labeling",
        "saml",
    ]);
    assert_eq!(out.code, 0);
    let doc = json(&out.stdout);
    assert_eq!(
        doc["classification"]["arc"],
        serde_json::json!({"verdict": "magic", "mu": 6})
    );
}

#[test]
fn path_arithmetic_construction_carries_a_note() {
    let out = run(&[
        "construct",
        "--family",
        "path",
        "--n",
        "4",
        "--labeling",
        "sa-al",
    ]);
    let doc = json(&out.stdout);
    assert!(doc["note"].as_str().unwrap().contains("2n-i"));
    assert_eq!(doc["arc_labels"], serde_json::json!([7, 6, 5]));
}

#[test]
fn construct_rejects_unsupported_kind() {
    let out = run(&[
        "construct",
        "--family",
        "cycle",
        "--n",
        "3",
        "--labeling",
        "saml",
    ]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("sa-sv-al"));
}

#[test]
fn verify_accepts_a_valid_document() {
    let built = run(&[
        "construct",
        "--family",
        "wheel",
        "--n",
        "3",
        "--labeling",
        "sval",
    ]);
    let out = sublabel(&["verify", "-"], &built.stdout, &[]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("Arithmetic(a=4, d=2)"));
    assert_eq!(
        trailing_json(&out.stdout)["vertex_labels"],
        json(&built.stdout)["vertex_labels"]
    );
}

#[test]
fn verify_rejects_a_non_bijection() {
    let doc = r#"{"format_version": 1, "vertex_count": 3, "arcs": [[0, 1], [1, 2]],
                  "vertex_labels": [1, 2, 3], "arc_labels": [6, 5]}"#;
    let out = sublabel(&["verify"], doc, &[]);
    assert_eq!(out.code, 2);
    assert!(
        out.stderr.contains("labels not a bijection onto 1..5"),
        "{}",
        out.stderr
    );
}

#[test]
fn verify_exits_one_when_both_sides_are_unclassified() {
    // arc weights 6, 8, 8 and vertex weights -4, -6, 10, 10
    let doc = r#"{"format_version": 1, "vertex_count": 4, "arcs": [[0, 1], [1, 2], [1, 3]],
                  "vertex_labels": [1, 2, 3, 4], "arc_labels": [5, 7, 6]}"#;
    let out = sublabel(&["verify", "-"], doc, &[]);
    assert_eq!(out.code, 1, "{}{}", out.stdout, out.stderr);
}

#[test]
fn verify_rejects_malformed_json() {
    let out = sublabel(&["verify"], "{not json", &[]);
    assert_eq!(out.code, 2);
}

#[test]
fn search_exit_codes() {
    let found = run(&["search", "--family", "path", "--n", "3", "--class", "sval"]);
    assert_eq!(found.code, 0);
    let report = json(&found.stdout);
    assert_eq!(report["solutions_found"], 108);
    assert_eq!(report["exhaustive"], true);

    for (family, n, class) in [
        ("path", "3", "svml"),
        ("cycle", "3", "saml"),
        ("star", "3", "svml"),
    ] {
        let out = run(&["search", "--family", family, "--n", n, "--class", class]);
        assert_eq!(out.code, 1, "{family} {class}");
        assert_eq!(json(&out.stdout)["solutions_found"], 0);
    }

    let refused = run(&["search", "--family", "wheel", "--n", "4", "--class", "svml"]);
    assert_eq!(refused.code, 2);
    assert!(refused.stderr.contains("cap of 12"), "{}", refused.stderr);
}

#[test]
fn search_honours_strong_flags_and_progression_terms() {
    let out = run(&[
        "search", "--family", "cycle", "--n", "3", "--class", "sa-al", "--strong",
    ]);
    assert_eq!(json(&out.stdout)["solutions_found"], 24);
    let out = run(&[
        "search",
        "--family",
        "cycle",
        "--n",
        "3",
        "--class",
        "sa-al",
        "--a",
        "4",
        "--d",
        "1",
        "--mode",
        "collect:100",
    ]);
    let report = json(&out.stdout);
    let witnesses = report["witnesses"].as_array().unwrap();
    assert!(!witnesses.is_empty());
    assert!(witnesses.len() as u64 == report["solutions_found"].as_u64().unwrap());
}

#[test]
fn search_reads_a_document() {
    let built = run(&["construct", "--family", "tadpole", "--n", "3", "--t", "1"]);
    let out = sublabel(
        &["search", "--input", "-", "--class", "svml"],
        &built.stdout,
        &[],
    );
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(json(&out.stdout)["solutions_found"], 2);
}

#[test]
fn search_cap_from_env_and_flag() {
    let args = ["search", "--family", "path", "--n", "4", "--class", "svml"];
    let low = sublabel(&args, "", &[("SUBLABEL_SEARCH_CAP", "5")]);
    assert_eq!(low.code, 2);
    assert!(low.stderr.contains("cap of 5"), "{}", low.stderr);

    let mut with_flag = args.to_vec();
    with_flag.extend(["--cap", "7"]);
    let ok = sublabel(&with_flag, "", &[("SUBLABEL_SEARCH_CAP", "5")]);
    assert_eq!(ok.code, 1, "{}", ok.stderr);
    assert_eq!(json(&ok.stdout)["query"]["cap"], 7);
}

#[test]
fn search_is_identical_across_worker_counts() {
    let strip = |s: &str| {
        let mut v = json(s);
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let base = [
        "search",
        "--family",
        "star",
        "--n",
        "3",
        "--orientation",
        "in",
        "--class",
        "sval",
    ];
    let one = run(&[&base[..], &["--workers", "1"]].concat());
    let four = run(&[&base[..], &["--workers", "4"]].concat());
    assert_eq!(strip(&one.stdout), strip(&four.stdout));
}

#[test]
fn export_dot_is_deterministic() {
    let built = run(&[
        "construct",
        "--family",
        "cycle",
        "--n",
        "3",
        "--labeling",
        "sa-sv-al",
    ]);
    let a = sublabel(&["export", "--format", "dot"], &built.stdout, &[]);
    let b = sublabel(&["export", "--format", "dot", "-"], &built.stdout, &[]);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stdout.starts_with("digraph"));
    assert!(a.stdout.contains(r#"v0 [label="v0:1"];"#), "{}", a.stdout);
    assert!(
        a.stdout.contains(r#"v0 -> v1 [label="5 (w=6)"];"#),
        "{}",
        a.stdout
    );
}

#[test]
fn export_json_round_trips() {
    let built = run(&[
        "construct",
        "--family",
        "butterfly",
        "--n",
        "3",
        "--labeling",
        "sval",
    ]);
    let once = sublabel(&["export", "--format", "json"], &built.stdout, &[]);
    let twice = sublabel(&["export", "--format", "json"], &once.stdout, &[]);
    assert_eq!(once.stdout, twice.stdout);
    assert_eq!(json(&once.stdout), json(&built.stdout));
}

#[test]
fn out_flag_writes_a_file() {
    let path = std::env::temp_dir().join(format!("sublabel-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let out = run(&[
        "construct",
        "--family",
        "friendship",
        "--n",
        "2",
        "--labeling",
        "sa-al",
        "--out",
        p,
    ]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    let verified = run(&["verify", p]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(verified.code, 0);
    assert!(verified.stdout.contains("Arithmetic(a=6, d=1)"));
}

#[test]
fn help_and_version() {
    assert_eq!(run(&["--help"]).code, 0);
    assert_eq!(run(&["--version"]).code, 0);
    assert_eq!(run(&["frobnicate"]).code, 2);
}
