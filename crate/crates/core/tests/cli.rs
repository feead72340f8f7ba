//! End-to-end runs of the `kneser` binary.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn kneser(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kneser"))
        .args(args)
        .env_remove("KNESER_THREADS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_then_verify_passes() {
    let dir = tempfile::tempdir().unwrap();
    let cover = dir.path().join("c4.txt");
    let out = kneser(&["construct", "--k", "4", "--out", path(&cover), "--no-timing"]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&cover).unwrap();
    assert!(text.starts_with("18 4 12\n"));

    let out = kneser(&["verify", "--in", path(&cover), "--no-timing"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = json(&out);
    assert_eq!(r["values"]["coverage"]["misses"], "0");
    assert_eq!(r["values"]["coverage"]["checked"], "3060");
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn dropped_color_fails_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let cover = dir.path().join("c3.txt");
    assert_eq!(kneser(&["construct", "--k", "3", "--out", path(&cover)]).status.code(), Some(0));
    let text = std::fs::read_to_string(&cover).unwrap();
    let blocks: Vec<&str> = text.split("color ").collect();
    let corrupted = format!("8 3 3\n{}", blocks[1..4].iter().map(|b| format!("color {b}")).collect::<String>());
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, corrupted).unwrap();

    let out = kneser(&["verify", "--in", path(&bad), "--no-timing"]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    let witness = r["values"]["coverage"]["witness"].as_array().unwrap();
    assert_eq!(witness.len(), 3);
    assert_ne!(r["values"]["coverage"]["misses"], "0");
}

#[test]
fn prop12_at_k3() {
    let out = kneser(&["bounds", "--check", "prop12", "--k", "3", "--no-timing"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["values"]["lhs"], "39");
    assert_eq!(r["values"]["rhs"], "23");
}

#[test]
fn no_timing_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cover = dir.path().join("c.txt");
    kneser(&["construct", "--k", "3", "--out", path(&cover)]);
    for args in [
        vec!["verify", "--in", path(&cover), "--no-timing"],
        vec!["bounds", "--check", "hm", "--n", "8", "--k", "3", "--no-timing"],
        vec!["search", "--n", "5", "--k", "2", "--colors", "3", "--no-timing", "--threads", "1"],
        vec!["verify", "--k", "7", "--sample", "2000", "--seed", "9", "--no-timing"],
    ] {
        let a = kneser(&args);
        let b = kneser(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.is_empty());
    }
    let timed = json(&kneser(&["bounds", "--check", "prop12", "--k", "3"]));
    assert!(timed["timing_ms"].is_number());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(kneser(&["--bogus"]).status.code(), Some(2));
    assert_eq!(kneser(&["verify"]).status.code(), Some(2));
    assert_eq!(kneser(&["verify", "--in", "/nonexistent/cover.txt"]).status.code(), Some(2));
    assert_eq!(kneser(&["bounds", "--check", "prop12", "--k", "2"]).status.code(), Some(2));
}

#[test]
fn randomized_operations_require_a_seed() {
    let out = kneser(&["verify", "--k", "7", "--sample", "100"]);
    assert_eq!(out.status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("k4.txt");
    std::fs::write(&h, "4 2 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n").unwrap();
    let base = ["bounds", "--check", "spencer", "--in", path(&h), "--b", "2", "--p", "1/2", "--trials", "100"];
    assert_eq!(kneser(&base).status.code(), Some(2));
    let mut seeded = base.to_vec();
    seeded.extend(["--seed", "3"]);
    let out = kneser(&seeded);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["seed"], 3);
}

#[test]
fn search_reports_and_exports() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = dir.path().join("n3.cnf");
    let cert = dir.path().join("n3.txt");
    let out = kneser(&[
        "search", "--n", "3", "--k", "2", "--colors", "1", "--sat-out", path(&cnf), "--cert-out", path(&cert),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["values"]["status"], "found");
    let cnf_text = std::fs::read_to_string(&cnf).unwrap();
    assert!(cnf_text.lines().any(|l| l == "p cnf 3 6"));
    let cover = kneser::io::parse_cover(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(cover.len(), 1);

    let out = kneser(&["search", "--n", "5", "--k", "2", "--colors", "3", "--no-timing"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["values"]["status"], "exhausted-none");

    let out = kneser(&["search", "--n", "8", "--k", "3", "--colors", "3", "--mode", "partition", "--budget-nodes", "10"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["values"]["status"], "inconclusive");

    let out = kneser(&["search", "--oracle", "--k", "2", "--no-timing"]);
    assert_eq!(json(&out)["values"]["value"], 3);
}

#[test]
fn tau_decompose_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let fano = dir.path().join("fano.txt");
    std::fs::write(&fano, "7 3 7\n1 2 4\n2 3 5\n3 4 6\n4 5 7\n1 5 6\n2 6 7\n1 3 7\n").unwrap();
    let out = kneser(&["tau", "--in", path(&fano)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["values"]["tau"], 3);

    let rep = dir.path().join("r.json");
    let out = kneser(&["decompose", "--lemma", "34", "--in", path(&fano), "--report", path(&rep)]);
    assert_eq!(out.status.code(), Some(0));
    let saved: Value = serde_json::from_str(&std::fs::read_to_string(&rep).unwrap()).unwrap();
    assert_eq!(saved["values"]["cover_family"]["members"].as_array().unwrap().len(), 20);

    let out = kneser(&["report", "--in", path(&rep)]);
    assert_eq!(out.status.code(), Some(0));

    let out = kneser(&["decompose", "--lemma", "41", "--in", path(&fano)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["values"]["case"], "a");

    let out = kneser(&["decompose", "--lemma", "rho", "--n", "20", "--k", "3", "--ell", "1", "--i", "1"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn pair_decomposition_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    let f = dir.path().join("f.txt");
    let x = dir.path().join("x.txt");
    let csv = dir.path().join("levels.csv");
    std::fs::write(&g, "6 2\n1 2\n3 4\n").unwrap();
    // independent 3-sets of g meeting every set of the cross family
    let gr = kneser::io::parse_graph(&std::fs::read_to_string(&g).unwrap()).unwrap();
    let u = kneser::Universe::new(6, 3).unwrap();
    let cross = kneser::SetFamily::filter_ksets(u, |s| s.contains(1) as u8 + s.contains(2) as u8 + s.contains(3) as u8 >= 2);
    let fam = kneser::SetFamily::new(
        u,
        gr.independent_family(3).unwrap().iter().filter(|s| cross.iter().all(|c| c.intersects(s))).copied(),
    )
    .unwrap();
    std::fs::write(&f, kneser::io::family_to_string(&fam)).unwrap();
    std::fs::write(&x, kneser::io::family_to_string(&cross)).unwrap();
    let out = kneser(&[
        "decompose", "--lemma", "thmkey", "--graph", path(&g), "--in", path(&f), "--cross", path(&x),
        "--levels", "2", "--csv", path(&csv),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let table = std::fs::read_to_string(&csv).unwrap();
    assert!(table.lines().count() >= 2);
}

#[test]
fn threads_flag_and_env_are_accepted() {
    let out = kneser(&["bounds", "--check", "prop12", "--k", "4", "--threads", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(env!("CARGO_BIN_EXE_kneser"))
        .args(["bounds", "--check", "ekr", "--n", "8", "--k", "3"])
        .env("KNESER_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
