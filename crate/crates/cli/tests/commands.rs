use std::f64::consts::PI;
use std::io::Write;
use std::process::{Command, Stdio};

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run_with(args: &[&str], stdin: &str) -> Out {
    let mut argv = vec!["spheretile"];
    argv.extend_from_slice(args);
    let (mut o, mut e) = (Vec::new(), Vec::new());
    let code = cli::run(argv, &mut stdin.as_bytes(), &mut o, &mut e);
    Out { code, stdout: String::from_utf8(o).unwrap(), stderr: String::from_utf8(e).unwrap() }
}

fn run(args: &[&str]) -> Out {
    run_with(args, "")
}

fn json(s: &str) -> serde_json::Value {
    serde_json::from_str(s).unwrap_or_else(|e| panic!("{e}: {s}"))
}

fn edges_over_pi(v: &serde_json::Value) -> (f64, f64) {
    let spec = &v["spec"];
    (spec["a"].as_f64().unwrap() / PI, spec["b"].as_f64().unwrap() / PI)
}

#[test]
fn solve_s36_5_edges() {
    let o = run(&["solve", "--class", "a3b", "--angles", "4/9", "7/9", "1/3", "5/9"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let (a, b) = edges_over_pi(&json(&o.stdout));
    assert!((a - 0.1741).abs() < 1e-4 && (b - 0.2584).abs() < 1e-4, "{a} {b}");
}

#[test]
fn solve_s36_6_edges_follow_closed_forms() {
    let o = run(&["solve", "--class", "a3b", "--angles", "1/3", "5/9", "7/18", "5/6"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let v = json(&o.stdout);
    let (a, b) = edges_over_pi(&v);
    let t = (PI / 9.0).tan();
    let (s, c) = (PI / 9.0).sin_cos();
    assert!(((a * PI).cos() - (4.0 * c - 3.0)).abs() < 1e-10);
    let cos_b = 6.0 * c + 2.0 * 3f64.sqrt() * s - 3.0 * 3f64.sqrt() * t - 4.0;
    assert!(((b * PI).cos() - cos_b).abs() < 1e-10);
    assert_eq!(v["simple"], true);
}

#[test]
fn solve_other_classes() {
    let o = run(&["solve", "--class", "a4", "--angles", "2/3", "1/2"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(json(&o.stdout)["spec"]["class"], "Rhombus");
    let o = run(&["solve", "--class", "a3", "--angles", "2/5", "--f", "20"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let o = run(&["solve", "--class", "a2bc", "--angles", "2/3", "2/3", "1/2", "1/3"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(json(&o.stdout).as_array().is_some_and(|v| !v.is_empty()));
}

#[test]
fn solve_failures() {
    // violates the almost equilateral identity
    let o = run(&["solve", "--class", "a3b", "--angles", "1/2", "1/2", "1/2", "2/3"]);
    assert_eq!(o.code, 1);
    assert_eq!(run(&["solve", "--class", "a3b", "--angles", "1/3"]).code, 2);
    assert_eq!(run(&["solve", "--class", "pentagon", "--angles", "1/3"]).code, 2);
    assert_eq!(run(&["solve", "--class", "a4", "--angles", "x", "1/2"]).code, 2);
}

#[test]
fn avc_listing() {
    let o = run(&["avc", "--angles", "2/3", "4/9", "--class", "a4"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(o.stdout, "α³, αβ³\n");
    // β completed from f = 18
    let o = run(&["avc", "--angles", "2/3", "--class", "a4", "--f", "18"]);
    assert_eq!(o.stdout, "α³, αβ³\n");
    let o = run(&["avc", "--angles", "2/3", "--class", "a4", "--max-f", "30"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert!(lines.contains(&"f=18: α³, αβ³"), "{lines:?}");
    assert!(lines.iter().all(|l| l.starts_with("f=")));
    let o = run(&["avc", "--angles", "2/3", "4/9", "--class", "a4", "--json"]);
    let v = json(&o.stdout);
    assert_eq!(v["combos"], serde_json::json!(["α³", "αβ³"]));
}

#[test]
fn avc_errors() {
    assert_eq!(run(&["avc", "--angles", "2/3", "--class", "a4"]).code, 2);
    assert_eq!(run(&["avc", "--angles", "2/3", "--class", "a4", "--f", "7"]).code, 2);
    assert_eq!(run(&["avc", "--angles", "2/3", "--class", "a4", "--f", "18", "--max-f", "20"]).code, 2);
}

#[test]
fn catalog_pipeline_verifies() {
    let doc = run(&["catalog", "--family", "S_16_4"]);
    assert_eq!(doc.code, 0, "{}", doc.stderr);
    let v = run_with(&["verify", "-"], &doc.stdout);
    assert_eq!(v.code, 0, "{}{}", v.stdout, v.stderr);
    assert!(v.stdout.trim_end().ends_with("PASS"));
}

#[test]
fn catalog_parameters_and_listing() {
    let o = run(&["catalog", "--family", "E□4", "--p", "5"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let v = json(&o.stdout);
    assert_eq!(v["complex"]["tiles"].as_array().unwrap().len(), 10);
    assert_eq!(v["family"]["params"]["p"], 5);
    let o = run(&["catalog", "--family", "Equad2", "--p", "10", "--free", "0.85"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let o = run(&["catalog", "--family", "E'(s,t)quad2", "--p", "8", "--s", "3", "--t", "2"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let o = run(&["catalog"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout.lines().count(), 1 + 7 + 8 + 11 + 13 + 12);
    let o = run(&["catalog", "--format", "json"]);
    assert_eq!(json(&o.stdout).as_array().unwrap().len(), 51);
}

#[test]
fn catalog_errors_are_usage_errors() {
    assert_eq!(run(&["catalog", "--family", "P12"]).code, 2);
    assert_eq!(run(&["catalog", "--family", "nonsense"]).code, 2);
    assert_eq!(run(&["catalog", "--family", "E□4", "--p", "2"]).code, 2);
    assert_eq!(run(&["catalog", "--family", "E'(s,t)quad2", "--s", "3"]).code, 2);
    assert_eq!(run(&["catalog", "--family", "P6", "--tol", "-1"]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
}

#[test]
fn json_errors_flag() {
    let o = run(&["--json-errors", "catalog", "--family", "nonsense"]);
    assert_eq!(o.code, 2);
    let v = json(o.stderr.trim());
    assert_eq!(v["error"], "usage");
    assert_eq!(v["exit_code"], 2);
    assert!(v["message"].as_str().unwrap().contains("nonsense"));
    let o = run(&["solve", "--json-errors", "--bogus"]);
    assert_eq!(o.code, 2);
    assert_eq!(json(o.stderr.trim())["error"], "usage");
}

#[test]
fn verify_reports_failure_with_exit_1() {
    let doc = run(&["catalog", "--family", "P6"]).stdout;
    let mut v = json(&doc);
    let x = v["coords"][0]["x"].as_f64().unwrap();
    v["coords"][0]["x"] = serde_json::json!(x + 1e-3);
    let o = run_with(&["verify", "-"], &v.to_string());
    assert_eq!(o.code, 1);
    assert!(o.stdout.trim_end().ends_with("FAIL"));
    // a loose tolerance accepts it
    let o = run_with(&["verify", "-", "--tol", "1e-1"], &v.to_string());
    assert_eq!(o.code, 0, "{}", o.stdout);
}

#[test]
fn verify_without_coordinates_checks_the_complex() {
    let mut v = json(&run(&["catalog", "--family", "P6"]).stdout);
    v.as_object_mut().unwrap().remove("coords");
    let o = run_with(&["verify", "-"], &v.to_string());
    assert_eq!(o.code, 0, "{}", o.stdout);
    assert!(!o.stdout.contains("holonomy"));
}

#[test]
fn verify_input_errors() {
    assert_eq!(run_with(&["verify", "-"], "{not json").code, 2);
    assert_eq!(run(&["verify", "/nonexistent/doc.json"]).code, 2);
    let mut v = json(&run(&["catalog", "--family", "P4"]).stdout);
    v["schema_version"] = serde_json::json!(99);
    assert_eq!(run_with(&["verify", "-"], &v.to_string()).code, 2);
}

#[test]
fn export_formats() {
    let doc = run(&["catalog", "--family", "P6"]).stdout;
    let obj = run_with(&["export", "-", "--format", "obj"], &doc);
    assert_eq!(obj.code, 0);
    assert_eq!(obj.stdout.lines().filter(|l| l.starts_with("v ")).count(), 8);
    assert_eq!(obj.stdout.lines().filter(|l| l.starts_with("f ")).count(), 6);
    let doc = run(&["catalog", "--family", "E□4", "--p", "4"]).stdout;
    let svg = run_with(&["export", "-", "--format", "svg"], &doc);
    assert_eq!(svg.stdout.matches("<path ").count(), 16);
    let again = run_with(&["export", "-", "--format", "json"], &doc);
    assert_eq!(again.stdout, doc);
    let mut v = json(&doc);
    v.as_object_mut().unwrap().remove("coords");
    let o = run_with(&["export", "-", "--format", "obj"], &v.to_string());
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("coordinates"));
}

#[test]
fn export_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("p20.json");
    std::fs::write(&src, run(&["catalog", "--family", "P20"]).stdout).unwrap();
    let dst = dir.path().join("p20.obj");
    let o = run(&["export", src.to_str().unwrap(), "--format", "obj", "-o", dst.to_str().unwrap()]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let text = std::fs::read_to_string(dst).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 20);
}

#[test]
fn output_is_deterministic() {
    for fam in ["S36_5", "QP6", "E△1"] {
        assert_eq!(run(&["catalog", "--family", fam]).stdout, run(&["catalog", "--family", fam]).stdout);
    }
    assert_eq!(run(&["tables"]).stdout, run(&["tables"]).stdout);
}

#[test]
fn help_documents_every_flag() {
    let top = run(&["--help"]);
    assert_eq!(top.code, 0);
    for word in ["catalog", "solve", "avc", "verify", "tables", "export", "--json-errors", "SPHERETILE_TOL"] {
        assert!(top.stdout.contains(word), "{word}");
    }
    for (cmd, flags) in [
        ("catalog", &["--family", "--p", "--q", "--f", "--s", "--t", "--free", "--tol", "--format"][..]),
        ("solve", &["--class", "--angles", "--f"]),
        ("avc", &["--class", "--angles", "--f", "--max-f", "--max-degree", "--json"]),
        ("verify", &["--tol"]),
        ("tables", &["--table"]),
        ("export", &["--format", "--output"]),
    ] {
        let h = run(&[cmd, "--help"]);
        assert_eq!(h.code, 0);
        for f in flags {
            assert!(h.stdout.contains(f), "{cmd} {f}");
        }
    }
}

fn binary(args: &[&str], env: Option<(&str, &str)>, stdin: &str) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_spheretile"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    if let Some((k, v)) = env {
        cmd.env(k, v);
    } else {
        cmd.env_remove(cli::TOL_ENV);
    }
    let mut child = cmd.spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn binary_pipeline_and_tolerance_variable() {
    let (code, doc) = binary(&["catalog", "--family", "S_16_4"], None, "");
    assert_eq!(code, 0);
    assert_eq!(binary(&["verify", "-"], None, &doc).0, 0);
    let mut v = json(&doc);
    let x = v["coords"][3]["z"].as_f64().unwrap();
    v["coords"][3]["z"] = serde_json::json!(x + 1e-4);
    let bad = v.to_string();
    assert_eq!(binary(&["verify", "-"], None, &bad).0, 1);
    assert_eq!(binary(&["verify", "-"], Some((cli::TOL_ENV, "1e-1")), &bad).0, 0);
    assert_eq!(binary(&["verify", "-", "--tol", "1e-9"], Some((cli::TOL_ENV, "1e-1")), &bad).0, 1);
    assert_eq!(binary(&["verify", "-"], Some((cli::TOL_ENV, "abc")), &doc).0, 2);
}
