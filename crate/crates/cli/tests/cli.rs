use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn rimhook(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rimhook"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &str) -> String {
    let out = rimhook(args, stdin);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str], stdin: &str) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    serde_json::from_str(&ok(&a, stdin)).unwrap()
}

const PI: &str = "0 1 2 3\n1 2 2\n1\n";

#[test]
fn factorize_reads_off_the_anchors() {
    let v = json(&["factorize"], PI);
    assert_eq!(
        v["anchors"],
        serde_json::json!([[1, 4], [1, 3], [2, 2], [1, 1]])
    );
    assert_eq!(
        v["tableau"]["rows"],
        serde_json::json!([[1, 0, 1, 1], [0, 1, 0], [0]])
    );
    let text = ok(&["factorize", "--steps"], PI);
    assert!(text.contains("step 4: candidate (3,1), path (3,1),(2,1),(2,2),(2,3),(1,3),(1,4)"));
}

#[test]
fn build_inverts_factorize() {
    let t = ok(&["factorize"], PI);
    let grid: String = t
        .lines()
        .take_while(|l| !l.starts_with("anchors"))
        .map(|l| format!("{l}\n"))
        .collect();
    assert_eq!(ok(&["build"], &grid), PI);
    assert_eq!(ok(&["build", "--shape", "2,2"], ""), "0 0\n0 0\n");
}

#[test]
fn serialisers_round_trip() {
    // text → json → text through the grid commands
    let v = json(&["validate"], PI);
    assert_eq!(v["size"], 12);
    let as_json = serde_json::to_string(&json(&["zeta", "--corner", "(3,1)"], PI)).unwrap();
    let text = ok(&["zeta", "--corner", "(3,1)"], PI);
    assert_eq!(
        ok(&["validate", "--format", "json"], &as_json),
        ok(&["validate", "--format", "json"], &text)
    );
    let pair = ok(&["rsk"], "1 1 2\n0 1 0\n3 0 0\n");
    assert_eq!(ok(&["rsk-inv"], &pair), "1 1 2\n0 1 0\n3 0 0\n");
    let pair_json = serde_json::to_string(&json(&["rsk"], "1 1 2\n0 1 0\n3 0 0\n")).unwrap();
    assert_eq!(ok(&["rsk-inv"], &pair_json), "1 1 2\n0 1 0\n3 0 0\n");
    let t = ok(&["hg"], PI);
    assert_eq!(ok(&["hg-inv"], &t), PI);
}

#[test]
fn maps_agree() {
    let square_sample = "1 1 4\n2 3 4\n4 4 4\n";
    let xi = ok(&["xi"], square_sample);
    assert_eq!(xi, "1 1 2\n0 1 0\n3 0 0\n");
    assert_eq!(ok(&["xi", "--corner", "(3,3)"], square_sample), xi);
    let t = ok(&["xi"], PI);
    for x in ["(3,1)", "(2,3)", "(1,4)"] {
        assert_eq!(ok(&["xi", "--corner", x], PI), t);
    }
    assert_eq!(ok(&["diag", "--k", "0"], square_sample), "4,3,1\n");
    assert_eq!(ok(&["diag", "--k", "-1"], square_sample), "4,2\n");
    let trace = json(&["trace"], square_sample);
    assert_eq!(trace["0"], 8);
    assert_eq!(trace["-1"], 6);
    let gk = json(&["gk", "--k", "0", "--r", "2", "--kind", "weak"], &xi);
    assert_eq!(gk["max"], gk["partial_sum"]);
}

#[test]
fn insertion_outcomes() {
    let v = json(&["insert", "--hook", "(1,3)"], "0 0 0\n0 0 0\n1 1 1\n");
    assert_eq!(v["path"], serde_json::json!([[1, 3], [2, 3], [2, 2]]));
    let out = rimhook(&["insert", "--hook", "(1,1)", "--format", "json"], "0\n1\n");
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"], "DoesNotInsert");
    assert_eq!(v["detail"]["witness"], serde_json::json!([2, 1]));
}

#[test]
fn exit_codes() {
    let out = rimhook(&["validate"], "1 0\n");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("weakly increase"));
    let out = rimhook(&["validate", "--format", "json"], "1 0\n");
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"], "NotMonotone");
    assert_eq!(rimhook(&["no-such-command"], "").status.code(), Some(2));
    assert_eq!(rimhook(&["insert"], PI).status.code(), Some(2));
    assert_eq!(
        rimhook(&["insert", "--hook", "oops"], PI).status.code(),
        Some(2)
    );
    assert_eq!(
        rimhook(&["zeta", "--corner", "(1,1)"], PI).status.code(),
        Some(1)
    );
}

#[test]
fn verify_reports_coefficients() {
    let out = ok(
        &[
            "verify", "stanley", "--shape", "4,3,1", "--degree", "10", "--jobs", "2",
        ],
        "",
    );
    assert!(out.starts_with("PASS stanley"));
    assert!(out.contains("[1,3,7,14,27,47,79,126,196,294,432]"));
    let v = json(&["verify", "golden"], "");
    assert_eq!(v[0]["passed"], true);
    let out = rimhook(
        &["verify", "stanley", "--shape", "3,3,3", "--budget", "10"],
        "",
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_all_on_a_small_range() {
    let out = ok(
        &[
            "verify",
            "all",
            "--shape",
            "2,2",
            "--shape",
            "3,1",
            "--degree",
            "6",
            "--trace-degree",
            "4",
            "--bound",
            "4",
            "--commute-bound",
            "4",
            "--small-shape-max",
            "5",
            "--small-bound",
            "3",
            "--gk-shape",
            "2,2",
            "--gk-sum",
            "3",
            "--syt-n",
            "2",
            "--perm-n",
            "3",
        ],
        "",
    );
    assert_eq!(
        out.lines().filter(|l| l.starts_with("PASS ")).count(),
        14,
        "{out}"
    );
}

#[test]
fn enumerate_streams_ndjson() {
    let out = ok(&["enumerate", "rpps", "--shape", "2,2", "--bound", "2"], "");
    let lines: Vec<Value> = out
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    // 1 + 1 + 3 fillings of sizes 0, 1, 2
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[0]["rows"], serde_json::json!([[0, 0], [0, 0]]));
    let out = ok(
        &["enumerate", "tableaux", "--shape", "2,2", "--bound", "2"],
        "",
    );
    assert_eq!(out.lines().count(), 5);
}

#[test]
fn rendering() {
    let dir = std::env::temp_dir().join(format!("rimhook-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let svg = dir.join("pi.svg");
    let text = ok(
        &[
            "render",
            "--path",
            "(1,3),(2,3),(2,2)",
            "--svg",
            svg.to_str().unwrap(),
        ],
        "0 0 0\n0 0 0\n1 1 1\n",
    );
    assert_eq!(text.matches('*').count(), 3);
    let body = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(body.matches("<rect").count(), 9);
    let hooks = dir.join("hook.svg");
    let out = ok(
        &[
            "rimhooks",
            "--shape",
            "4,3,1",
            "--svg",
            hooks.to_str().unwrap(),
            "--hook",
            "(1,1)",
        ],
        "",
    );
    assert_eq!(out.lines().count(), 8);
    assert!(out.starts_with("(1,4) len 1: (1,4)"));
    assert!(std::fs::read_to_string(&hooks)
        .unwrap()
        .contains("<polyline"));
    let info = json(&["info", "--shape", "4,3,1"], "");
    assert_eq!(info["hooks"][0], serde_json::json!([6, 4, 3, 1]));
    std::fs::remove_dir_all(&dir).ok();
}
