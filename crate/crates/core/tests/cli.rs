use std::process::{Command, Output};

use mopcheck::verifier::{read_reports_json, Expectations};

fn mopcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mopcheck"))
        .args(args)
        .env_remove("MOPCHECK_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table1_matches() {
    let o = mopcheck(&["table1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("3 4 12 27 82 228 733 2282"));
    assert!(text.contains("S(16) =  83898  bound 6229860"));
}

#[test]
fn verify_exception_order() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("six.json");
    let o = mopcheck(&["verify", "-n", "6..6", "--report", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("λ_max = 3.2361  λ_fan = 3.2227  fan extremal: false"));
    let reports = read_reports_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(reports.len(), 1);
    assert!(!reports[0].conjecture_holds);
    assert_eq!(reports[0].runtime_ms, 0);
}

#[test]
fn reports_identical_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let mut bodies = Vec::new();
    for (threads, format) in [("1", "csv"), ("3", "csv"), ("1", "json"), ("3", "json")] {
        let path = dir.path().join(format!("r{threads}.{format}"));
        let o = mopcheck(&[
            "--threads",
            threads,
            "verify",
            "-n",
            "6..10",
            "--format",
            format,
            "--report",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        bodies.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(bodies[0], bodies[1]);
    assert_eq!(bodies[2], bodies[3]);
    assert_eq!(String::from_utf8(bodies[0].clone()).unwrap().lines().count(), 6);
}

#[test]
fn corrupted_expectations_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let mut bad = Expectations::builtin();
    bad.class_counts.insert(8, 13);
    let path = dir.path().join("bad.json");
    std::fs::write(&path, serde_json::to_string(&bad).unwrap()).unwrap();
    let o = mopcheck(&["verify", "-n", "7..8", "--expectations", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("MISMATCH n = 8: S(n) = 12, expected 13"));
}

#[test]
fn spectral_of_triangle() {
    let o = mopcheck(&["spectral", "--graph6", "Bw"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 3);
    let (lo, hi) = (v["lower"].as_f64().unwrap(), v["upper"].as_f64().unwrap());
    assert!(lo <= 2.0 && 2.0 <= hi && hi - lo < 1e-9);
}

#[test]
fn spectral_reads_stdin() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_mopcheck"))
        .arg("spectral")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"A_\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["lower"].as_f64().unwrap() <= 1.0 && 1.0 <= v["upper"].as_f64().unwrap());
}

#[test]
fn enumerate_formats() {
    let o = mopcheck(&["enumerate", "-n", "6", "--format", "native"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 3);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eight.g6");
    let o = mopcheck(&["enumerate", "-n", "8", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 12);
    assert!(text.lines().all(|l| l.starts_with('G')));
}

#[test]
fn bounds_text() {
    let o = mopcheck(&["bounds", "-n", "16"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("4.9167"));
    assert!(text.contains("-0.0169"));
}

#[test]
fn usage_and_runtime_errors_exit_1() {
    assert_eq!(mopcheck(&["verify"]).status.code(), Some(1));
    assert_eq!(mopcheck(&["verify", "-n", "1..3"]).status.code(), Some(1));
    assert_eq!(mopcheck(&["spectral", "--graph6", "!!"]).status.code(), Some(1));
    assert_eq!(mopcheck(&["--help"]).status.code(), Some(0));
}
