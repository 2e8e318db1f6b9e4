use std::path::Path;
use std::process::{Command, Output};

use ekrcx_cli::report::{read_reports, Verdict};

fn ekrcx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ekrcx"))
        .args(args)
        .env_remove("EKRCX_PRIME")
        .env_remove("EKRCX_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn shift_of_two_edges() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "two-edges.cplx", "1 2\n3 4\n");
    let o = ekrcx(&["shift", "--in", &f]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().skip(1).map(String::from).collect();
    assert_eq!(lines, ["4", "1 2", "1 3"]);
}

#[test]
fn depth_of_the_four_cycle_complex() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c4.dimacs", "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    let ic = ekrcx(&["graph", "ic", "--in", &g]);
    let f = write(dir.path(), "ic4.cplx", &stdout(&ic));
    let o = ekrcx(&["depth", "--in", &f]);
    assert_eq!(stdout(&o).trim(), "0");
    let o = ekrcx(&["depth", "--method", "shift", "--in", &f]);
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn tetrahedron_boundary_is_not_three_ekr() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "b.cplx", "1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
    let o = ekrcx(&["--format", "json", "check", "ekr", "--r", "3", "--in", &f]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["witness"].as_array().unwrap().len(), 4);
    assert_eq!(v["star_bound"], 3);
    let o = ekrcx(&["check", "ekr", "--r", "2", "--in", &f]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn errors_map_to_exit_codes() {
    assert_eq!(ekrcx(&["frobnicate"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.cplx", "1 x\n");
    assert_eq!(ekrcx(&["fvector", "--in", &bad]).status.code(), Some(2));
    assert_eq!(ekrcx(&["fvector", "--in", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(ekrcx(&["--prime", "12", "fvector", "--in", &bad]).status.code(), Some(2));
    // 21 vertices exceeds the shifting cost guard
    let big = write(dir.path(), "big.cplx", "n 21\n1 21\n");
    assert_eq!(ekrcx(&["shift", "--in", &big]).status.code(), Some(4));
    let f = write(dir.path(), "s.cplx", "1 2 3 4 5 6 7 8 9 10 11 12\n");
    let o = ekrcx(&["check", "ekr", "--r", "6", "--max-faces", "100", "--in", &f]);
    assert_eq!(o.status.code(), Some(4));
    let o = ekrcx(&["corpus", "no-such-claim", "--family", "cycles:4..5", "--out", "/dev/null"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn small_commands() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "two-edges.cplx", "1 2\n3 4\n");
    assert_eq!(stdout(&ekrcx(&["fvector", "--in", &f])).trim(), "(1,4,2)");
    assert_eq!(stdout(&ekrcx(&["link", "--face", "1", "--in", &f])), "n 4\n2\n");
    assert_eq!(stdout(&ekrcx(&["cm", "--in", &f])).trim(), "false");
    assert_eq!(stdout(&ekrcx(&["cm", "--sequential", "--in", &f])).trim(), "false");
    let o = ekrcx(&["--format", "json", "homology", "--in", &f]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["reduced_betti"], serde_json::json!([0, 1, 0]));
    let g = write(dir.path(), "c4.dimacs", "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    assert_eq!(stdout(&ekrcx(&["graph", "chordal", "--in", &g])).trim(), "false");
    let o = ekrcx(&["check", "chvatal", "--in", &f]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn campaigns_are_deterministic_and_resumable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.jsonl");
    let b = dir.path().join("b.jsonl");
    let run = |out: &Path, workers: &str, extra: &[&str]| {
        let mut args = vec!["corpus", "duval-depth", "--family", "random:30:6:0.5:3", "--workers", workers];
        args.extend_from_slice(&["--out", out.to_str().unwrap()]);
        args.extend_from_slice(extra);
        ekrcx(&args)
    };
    assert_eq!(run(&a, "1", &[]).status.code(), Some(0));
    assert_eq!(run(&b, "4", &[]).status.code(), Some(0));
    let strip = |p: &Path| -> Vec<serde_json::Value> {
        std::fs::read_to_string(p)
            .unwrap()
            .lines()
            .map(|l| {
                let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
                v.as_object_mut().unwrap().remove("runtime_ms");
                v
            })
            .collect()
    };
    let first = strip(&a);
    assert_eq!(first.len(), 30);
    assert_eq!(first, strip(&b));

    // cut the log mid-record, then resume
    let text = std::fs::read_to_string(&a).unwrap();
    let cut = text.match_indices('\n').nth(11).unwrap().0 + 20;
    std::fs::write(&a, &text[..cut]).unwrap();
    assert_eq!(run(&a, "2", &["--resume"]).status.code(), Some(0));
    assert_eq!(strip(&a), first);
    let o = run(&a, "2", &["--resume"]);
    assert!(stdout(&o).contains("(30 already present)"));
    assert_eq!(strip(&a), first);

    let o = ekrcx(&["summary", "--in", a.to_str().unwrap()]);
    assert!(stdout(&o).contains("duval-depth"));
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn replay_confirms_genuine_failures_only() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("c.jsonl");
    // every record passes, so doctor one into a failure
    let o = ekrcx(&["corpus", "cycle-ekr", "--family", "cycles:4..5", "--out", log.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let mut reports = read_reports(&log).unwrap();
    assert!(reports.iter().all(|r| r.verdict == Verdict::Pass));
    reports[0].verdict = Verdict::Fail;
    reports[0].witness = Some(ekrcx_cli::report::Witness::family(&[
        ekrcx::Face::of(&[1]),
        ekrcx::Face::of(&[3]),
    ]));
    let text: String = reports
        .iter()
        .map(|r| serde_json::to_string(r).unwrap() + "\n")
        .collect();
    std::fs::write(&log, text).unwrap();
    let o = ekrcx(&["replay", "--in", log.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("line 1: failure did not reproduce"));
}
