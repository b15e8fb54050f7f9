use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/fixtures");

fn fixture(name: &str) -> String {
    format!("{FIXTURES}/{name}.json")
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_clutterkit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().expect("stdin is piped");
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

const P4_NO_MATCHING: &str =
    r#"{"vertices":["x1","x2","x3","x4"],"edges":[["x1","x2"],["x2","x3"],["x3","x4"]]}"#;

#[test]
fn unmixed_path_exits_zero() {
    let out = run(
        &["check", "--property", "unmixed", "--input", &fixture("p4")],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["command"], "check");
    assert_eq!(r["result"], true);
    assert!(r["elapsed_ms"].is_null());
    assert_eq!(r["input_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn mixed_path_exits_one_with_covers() {
    let p3 = r#"{"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]}"#;
    let out = run(&["check", "--property", "unmixed"], Some(p3));
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["witness"]["smaller_cover"], serde_json::json!(["b"]));
}

#[test]
fn generated_grid_shells_in_lexicographic_order() {
    let generated = run(
        &["gen", "complete-admissible", "--g", "3", "--d", "3"],
        None,
    );
    assert_eq!(generated.status.code(), Some(0));
    let text = String::from_utf8(generated.stdout).unwrap();
    let out = run(&["shell", "--method", "lex"], Some(&text));
    assert_eq!(out.status.code(), Some(0));
    let facets: Vec<Vec<String>> = serde_json::from_value(report(&out)["result"].clone()).unwrap();
    let vectors: Vec<String> = facets
        .iter()
        .map(|f| f.iter().map(|v| v.rsplit('_').next().unwrap()).collect())
        .collect();
    let expected = [
        "111", "112", "113", "122", "123", "133", "222", "223", "233", "333",
    ];
    assert_eq!(vectors, expected);
}

#[test]
fn missing_matching_is_a_usage_error() {
    let out = run(&["check", "--property", "theorem25"], Some(P4_NO_MATCHING));
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn malformed_input_is_a_validation_error() {
    let out = run(&["covers"], Some(r#"{"vertices":["a"],"edges":[["b"]]}"#));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn size_guard_exits_three() {
    let out = run(
        &["covers", "--max-vertices", "2", "--input", &fixture("k22")],
        None,
    );
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unknown_subcommand_exits_two() {
    assert_eq!(run(&["frobnicate"], None).status.code(), Some(2));
}

#[test]
fn reports_are_deterministic() {
    let args = [
        "shell",
        "--method",
        "recursive",
        "--input",
        &fixture("konig_without_matching"),
    ];
    let a = run(&args, None);
    let b = run(&args, None);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
}

#[test]
fn timing_is_reported_on_request() {
    let out = run(&["covers", "--timing", "--input", &fixture("p4")], None);
    assert!(report(&out)["elapsed_ms"].is_u64());
}

#[test]
fn recursive_shelling_reports_witnesses() {
    let out = run(&["shell", "--input", &fixture("p4")], None);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let facets = r["result"].as_array().unwrap();
    assert_eq!(facets.len(), 3);
    let rows = r["witness"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[1]["pairs"].as_array().unwrap().len(), 2);
}

#[test]
fn gap_example_has_no_shelling() {
    let out = run(
        &[
            "shell",
            "--method",
            "bruteforce",
            "--input",
            &fixture("gap_admissible"),
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(report(&out)["result"].is_null());
}

#[test]
fn minor_steps_apply_in_order() {
    let out = run(
        &["minor", "--delete", "x2", "--contract", "x3"],
        Some(P4_NO_MATCHING),
    );
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["result"]["edges"], serde_json::json!([["x4"]]));

    let out = run(
        &["minor", "--contract", "x3", "--delete", "x2"],
        Some(P4_NO_MATCHING),
    );
    assert_eq!(report(&out)["result"]["edges"], serde_json::json!([["x4"]]));

    let single = r#"{"vertices":["a","b"],"edges":[["a"],["b"]]}"#;
    let out = run(&["minor", "--contract", "a"], Some(single));
    assert_eq!(report(&out)["result"], "improper");
}

#[test]
fn dual_of_path() {
    let out = run(&["dual"], Some(P4_NO_MATCHING));
    let r = report(&out);
    assert_eq!(
        r["result"]["edges"],
        serde_json::json!([["x1", "x3"], ["x2", "x3"], ["x2", "x4"]])
    );
}

#[test]
fn dual_ideal_and_linear_quotients() {
    let out = run(&["dual-ideal"], Some(P4_NO_MATCHING));
    assert_eq!(
        report(&out)["result"],
        serde_json::json!([["x3", "x4"], ["x1", "x4"], ["x1", "x2"]])
    );
    let generated = run(
        &["gen", "complete-admissible", "--g", "3", "--d", "3"],
        None,
    );
    let text = String::from_utf8(generated.stdout).unwrap();
    assert_eq!(
        run(&["linear-quotients"], Some(&text)).status.code(),
        Some(0)
    );
    let disjoint = r#"{"vertices":["a","b","c","d"],"edges":[["a","b"],["c","d"]]}"#;
    let out = run(&["linear-quotients", "--of", "edges"], Some(disjoint));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bipartite_criteria_on_skeleton_example() {
    let input = fixture("bipartite_skeleton");
    let code = |criterion: &str| {
        run(
            &["bipartite", "--criterion", criterion, "--input", &input],
            None,
        )
        .status
        .code()
    };
    assert_eq!(code("h1"), Some(0));
    assert_eq!(code("skeleton-shelling"), Some(0));
    assert_eq!(code("herzog-hibi"), Some(1));
    assert_eq!(code("unmixed"), Some(1));
}

#[test]
fn isolated_vertices_need_a_flag() {
    let doc = r#"{"vertices":["x1","y1","z"],"edges":[["x1","y1"]]}"#;
    let strict = run(&["bipartite", "--criterion", "herzog-hibi"], Some(doc));
    assert_eq!(strict.status.code(), Some(2));
    let relaxed = run(
        &[
            "bipartite",
            "--criterion",
            "herzog-hibi",
            "--allow-isolated",
        ],
        Some(doc),
    );
    assert_eq!(relaxed.status.code(), Some(0));
}

#[test]
fn whisker_then_recursive_shelling() {
    let p3 = r#"{"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]}"#;
    let out = run(&["whisker"], Some(p3));
    let text = String::from_utf8(out.stdout).unwrap();
    let r: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(r["result"]["vertices"].as_array().unwrap().len(), 6);
    assert_eq!(r["result"]["edges"].as_array().unwrap().len(), 5);
    let out = run(&["check", "--property", "ordering"], Some(&text));
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["shell"], Some(&text));
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn selftest_passes() {
    let out = run(&["selftest"], None);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let r = report(&out);
    assert_eq!(r["witness"]["criteria"].as_array().unwrap().len(), 12);
}
