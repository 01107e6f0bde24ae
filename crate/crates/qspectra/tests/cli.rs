//! End-to-end tests of the command-line interface: exit-code contract,
//! pipeline composition, and text/JSON payload agreement.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn qspectra(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qspectra"));
    cmd.args(args);
    cmd.stdin(Stdio::piped());
    cmd.stdout(Stdio::piped());
    cmd.stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary spawns");
    if let Some(text) = stdin {
        child
            .stdin
            .as_mut()
            .expect("stdin piped")
            .write_all(text.as_bytes())
            .expect("stdin write");
    }
    drop(child.stdin.take());
    child.wait_with_output().expect("binary exits")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn family_pipes_into_slee() {
    let family = qspectra(&["family", "--id", "H7", "--n", "4"], Some(""));
    assert_eq!(family.status.code(), Some(0));
    let g6 = stdout_str(&family);

    let slee = qspectra(&["slee"], Some(&g6));
    assert_eq!(slee.status.code(), Some(0));
    let value: f64 = stdout_str(&slee).trim().parse().expect("numeric output");
    let expected = 6f64.exp() + 3.0 * 2f64.exp();
    assert!((value - expected).abs() < 1e-8 * expected, "{value} vs {expected}");
}

#[test]
fn charpoly_of_the_five_vertex_family_member() {
    let family = qspectra(&["family", "--id", "H6", "--n", "5"], Some(""));
    let out = qspectra(&["charpoly"], Some(&stdout_str(&family)));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_str(&out).trim(), "[48,-148,152,-69,14,-1]");
}

#[test]
fn verify_cospectral_json_passes() {
    let out = qspectra(
        &["verify", "cospectral", "--n-max", "20", "--format", "json"],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(stdout_str(&out).trim()).expect("json");
    assert_eq!(report["pass"], serde_json::json!(true));
    assert_eq!(report["claim"], serde_json::json!("cospectral"));
}

#[test]
fn verify_recurrence_printed_form_fails_with_exit_1() {
    let out = qspectra(
        &["verify", "recurrence", "--j", "6", "--n-max", "8", "--form", "printed"],
        None,
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_recurrence_adjudication_passes_with_both_forms() {
    let out = qspectra(
        &["verify", "recurrence", "--j", "7", "--n-max", "8", "--format", "json"],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    let reports: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).expect("json lines"))
        .collect();
    assert_eq!(reports.len(), 2);
    let passes: Vec<bool> = reports.iter().map(|r| r["pass"].as_bool().unwrap()).collect();
    assert_eq!(passes.iter().filter(|p| **p).count(), 1);
}

#[test]
fn malformed_graph6_exits_2() {
    let out = qspectra(&["slee"], Some("D?\n"));
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("graph6"), "diagnostic should mention graph6: {err}");
}

#[test]
fn empty_input_exits_2() {
    let out = qspectra(&["estrada"], Some(""));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn text_and_json_report_identical_numbers() {
    let family = qspectra(&["family", "--id", "H6", "--n", "7"], Some(""));
    let g6 = stdout_str(&family);

    let text = qspectra(&["slee"], Some(&g6));
    let text_value: f64 = stdout_str(&text).trim().parse().unwrap();

    let json = qspectra(&["slee", "--format", "json"], Some(&g6));
    let parsed: serde_json::Value = serde_json::from_str(stdout_str(&json).trim()).unwrap();
    let json_value = parsed["value"].as_f64().unwrap();

    // Text carries 12 significant digits; JSON carries the full double.
    assert!((text_value - json_value).abs() <= 1e-11 * json_value.abs());
    assert_eq!(parsed["graph6"].as_str().unwrap(), g6.trim());
}

#[test]
fn edge_list_input_matches_graph6_input() {
    let family = qspectra(&["family", "--id", "H7", "--n", "6"], Some(""));
    let g6 = stdout_str(&family);
    let edge_list = qspectra(&["family", "--id", "H7", "--n", "6", "--edge-list"], Some(""));
    let el_text = stdout_str(&edge_list);
    assert!(el_text.starts_with("6 8\n"));

    let via_g6 = qspectra(&["estrada"], Some(&g6));
    let via_el = qspectra(&["estrada", "--edge-list"], Some(&el_text));
    assert_eq!(stdout_str(&via_g6), stdout_str(&via_el));
}

#[test]
fn moments_text_lists_low_orders() {
    let out = qspectra(&["moments", "--max-k", "3"], Some("Bg\n")); // path on 3 vertices
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.contains("T_0 = 3"));
    assert!(text.contains("T_1 = 4"));
}

#[test]
fn walks_oracle_guard_exits_2() {
    let kn = qspectra(&["family", "--id", "A7_1"], Some(""));
    let g6 = stdout_str(&kn);
    let out = qspectra(
        &["walks", "--k", "11", "--from", "0", "--to", "0", "--oracle"],
        Some(&g6),
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn walks_table_equals_oracle_entry() {
    let tri = qspectra(&["family", "--id", "A7_1"], Some(""));
    let g6 = stdout_str(&tri);
    let fast = qspectra(&["walks", "--k", "3", "--from", "0", "--to", "1"], Some(&g6));
    let slow = qspectra(
        &["walks", "--k", "3", "--from", "0", "--to", "1", "--oracle"],
        Some(&g6),
    );
    assert_eq!(stdout_str(&fast), stdout_str(&slow));
}

#[test]
fn dominance_reports_star_strictness() {
    // Star on 4 vertices: leaf 1 against center 0.
    let star = "Cs\n";
    let parsed = qspectra(&["dominance", "--x", "1", "--y", "1", "--u", "0", "--v", "0", "--format", "json"], Some(star));
    assert_eq!(parsed.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout_str(&parsed).trim()).unwrap();
    assert_eq!(v["outcome"], serde_json::json!("strictly-dominates"));
    assert_eq!(v["first_strict_k"], serde_json::json!(1));
}

#[test]
fn enumerate_streams_canonical_graph6() {
    let out = qspectra(&["enumerate", "--n", "5"], None);
    assert_eq!(out.status.code(), Some(0));
    let listing = stdout_str(&out);
    let lines: Vec<&str> = listing.lines().map(str::trim).collect();
    assert_eq!(lines.len(), 4);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("enumerated 4 tricyclic graphs"), "{err}");

    let class7 = qspectra(&["enumerate", "--n", "5", "--class", "7"], None);
    assert_eq!(stdout_str(&class7).lines().count(), 2);
}

#[test]
fn enumerate_n9_requires_expensive_flag() {
    let out = qspectra(&["enumerate", "--n", "9"], None);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("--expensive"), "{err}");
}

#[test]
fn verify_theorem_subcommands_pass_at_small_orders() {
    let t1 = qspectra(&["verify", "theorem1", "--n", "6", "--class", "7"], None);
    assert_eq!(t1.status.code(), Some(0));
    let t2 = qspectra(&["verify", "theorem2", "--n", "5", "--format", "json"], None);
    assert_eq!(t2.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(stdout_str(&t2).trim()).unwrap();
    assert_eq!(report["witnesses"].as_array().unwrap().len(), 2);
}

#[test]
fn cache_env_var_creates_and_reuses_the_cache() {
    let dir = std::env::temp_dir().join(format!("qspectra-cli-cache-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cache.jsonl");
    let _ = std::fs::remove_file(&path);

    let run = |args: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_qspectra"));
        cmd.args(args);
        cmd.env("QSPECTRA_CACHE", &path);
        cmd.stdout(Stdio::piped());
        cmd.stderr(Stdio::piped());
        cmd.output().expect("binary runs")
    };
    let first = run(&["verify", "theorem2", "--n", "5", "--format", "json"]);
    assert_eq!(first.status.code(), Some(0));
    assert!(path.exists(), "cache file created");
    let lines_after_first = std::fs::read_to_string(&path).unwrap().lines().count();
    assert!(lines_after_first >= 4);

    let second = run(&["verify", "theorem2", "--n", "5", "--format", "json"]);
    assert_eq!(second.status.code(), Some(0));
    let lines_after_second = std::fs::read_to_string(&path).unwrap().lines().count();
    assert_eq!(lines_after_first, lines_after_second, "second run reuses the cache");
    // Identical payloads, down to the float bits, modulo wall-clock time.
    let strip = |out: &Output| {
        let mut v: serde_json::Value =
            serde_json::from_str(stdout_str(out).trim()).expect("report json");
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    assert_eq!(strip(&first), strip(&second));
    let _ = std::fs::remove_file(&path);
}
