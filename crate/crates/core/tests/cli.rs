use std::io::Write;
use std::process::{Command, Output, Stdio};

use edgestab::cli::ReportDocument;

fn edgestab(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_edgestab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn pipe(gen: &[&str], then: &[&str]) -> Output {
    let generated = edgestab(gen, "");
    assert!(generated.status.success());
    edgestab(then, &stdout(&generated))
}

fn json_report(out: &Output) -> ReportDocument {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(stdout(out).trim()).unwrap()
}

#[test]
fn petersen_es_is_two() {
    let out = pipe(&["gen", "petersen"], &["es", "--exact", "--json"]);
    let doc = json_report(&out);
    assert_eq!(doc.chi, 4);
    assert_eq!(doc.stability.unwrap().es, 2);
}

#[test]
fn complete_minus_matching_es() {
    let out = pipe(&["gen", "complete_minus_matching", "3", "2"], &["es", "--exact", "--json"]);
    assert_eq!(json_report(&out).stability.unwrap().es, 1);
}

#[test]
fn reports_are_deterministic() {
    let a = pipe(&["gen", "random", "9", "0.5", "--seed", "7"], &["es", "--json"]);
    let b = pipe(&["gen", "random", "9", "0.5", "--seed", "7"], &["es", "--json"]);
    assert_eq!(stdout(&a), stdout(&b));
    let doc = json_report(&a);
    assert!(doc.timings_ms.is_none());
    assert_eq!(serde_json::to_string(&doc).unwrap(), stdout(&a).trim());
}

#[test]
fn mitigate_picks_the_applicable_bound() {
    let cases = [("complete_bipartite 3 3", "bipartite_formula"), ("petersen", "class2_bound"), ("q_chain 1", "general_bound")];
    for (family, method) in cases {
        let doc = json_report(&edgestab(&["mitigate", "--json", "--family", family], ""));
        let rep = doc.stability.unwrap();
        assert_eq!(serde_json::to_value(rep.method).unwrap(), method, "{family}");
        assert!(rep.witness.chi_after < rep.witness.chi_before);
        assert!(rep.witness.edges.len() <= rep.bound_value);
    }
}

#[test]
fn normalize_replaces_the_low_edge() {
    let out = edgestab(&["normalize", "--json", "--family", "prop_counterexample 2", "--set", "0-8,1-2"], "");
    let doc = json_report(&out);
    let trace = doc.normalization.unwrap();
    assert_eq!(trace.steps.len(), 1);
    assert_eq!(trace.steps[0].removed.to_string(), "0-8");
    assert_eq!(doc.stability.unwrap().witness.edges.len(), 2);
}

#[test]
fn edge_list_files_and_formats() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.txt");
    std::fs::write(&path, "# five-cycle\n5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n").unwrap();
    let out = edgestab(&["chi", "--input", path.to_str().unwrap(), "--json"], "");
    let doc = json_report(&out);
    assert_eq!((doc.chi, doc.graph.m), (3, 5));
    let listed = edgestab(&["gen", "cycle", "5", "--format", "edgelist"], "");
    assert_eq!(stdout(&listed), "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
}

#[test]
fn exit_codes() {
    assert_eq!(edgestab(&["chi"], "2 1\n0 0\n").status.code(), Some(2));
    assert_eq!(edgestab(&["chi"], "not-graph6!\n").status.code(), Some(2));
    assert_eq!(edgestab(&["es"], "D??\n").status.code(), Some(2));
    assert_eq!(edgestab(&["es", "--budget", "2"], "IheA@GUAo\n").status.code(), Some(3));
    assert_eq!(edgestab(&["gen", "random", "6", "0.5", "--json"], "").status.code(), Some(2));
    assert_eq!(edgestab(&["verify", "thm5"], "").status.code(), Some(2));
    let bad_set = edgestab(&["normalize", "--family", "petersen", "--set", "0-1"], "");
    assert_eq!(bad_set.status.code(), Some(2));
}

#[test]
fn verify_all_passes() {
    let out = edgestab(&["verify", "all"], "");
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn census_counts() {
    let out = edgestab(&["census", "5", "--connected"], "");
    assert_eq!(stdout(&out).lines().count(), 21);
    let es = edgestab(&["es", "--json"], &stdout(&out));
    assert_eq!(stdout(&es).lines().count(), 21);
}
