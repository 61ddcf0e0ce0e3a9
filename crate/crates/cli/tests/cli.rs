use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn hyperpd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperpd"))
        .args(args)
        .env("HYPERPD_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn path_str(p: &Path) -> String {
    p.to_string_lossy().into_owned()
}

#[test]
fn solve_squid_of_single_edge() {
    let dir = TempDir::new().unwrap();
    let base = write(&dir, "base.hgr", "p hpd 3 1\ne 1 2 3\n");
    let squid = path_str(&dir.path().join("squid.hgr"));
    let out = hyperpd(&["generate", "squid", "--base", &base, "-k", "1", "-o", &squid]);
    assert!(out.status.success());

    let v = json(&hyperpd(&["solve", "-i", &squid, "-k", "1"]));
    assert_eq!(v["schema"], "hyperpd.solve/1");
    assert_eq!(v["n"], 12);
    assert_eq!(v["gamma_pk"], 3);
    assert_eq!(v["witnesses"][0], serde_json::json!([1, 2, 3]));
}

#[test]
fn solve_all_lists_every_minimum_set() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "edge.hgr", "p hpd 3 1\ne 1 2 3\n");
    let v = json(&hyperpd(&["solve", "-i", &path, "-k", "0", "--all"]));
    assert_eq!(v["gamma_pk"], 1);
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 3);
}

#[test]
fn counterexample_has_two() {
    let out = hyperpd(&["generate", "counterexample", "-k", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("p hpd 15 6\n"));
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "c.hgr", &text);

    let v = json(&hyperpd(&["solve", "-i", &path, "-k", "1"]));
    assert_eq!(v["gamma_pk"], 2);

    let v = json(&hyperpd(&["check", "-i", &path, "-k", "1"]));
    assert_eq!(v["schema"], "hyperpd.bounds/1");
    let conjecture = v["bounds"].as_array().unwrap().iter().find(|b| b["name"] == "conjecture").unwrap();
    assert_eq!(conjecture["verdict"], "VIOLATED");
    assert_eq!(conjecture["value"], "15/8");
}

#[test]
fn generators_are_byte_stable() {
    for args in [
        &["generate", "bht", "--r", "5"][..],
        &["generate", "random", "--n", "9", "--r", "3", "--m", "5", "--seed", "11"][..],
        &["generate", "gsquid", "-k", "1", "--r", "3", "--x", "1,2", "--chain"][..],
    ] {
        let a = hyperpd(args);
        let b = hyperpd(args);
        assert!(a.status.success(), "{args:?}: {}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout);
        let text = String::from_utf8(a.stdout).unwrap();
        assert!(text.starts_with("c generated by hyperpd "));
    }
}

#[test]
fn generated_sizes() {
    let header = |args: &[&str]| {
        let out = hyperpd(args);
        assert!(out.status.success(), "{args:?}");
        String::from_utf8(out.stdout)
            .unwrap()
            .lines()
            .find(|l| l.starts_with("p "))
            .unwrap()
            .to_string()
    };
    assert_eq!(header(&["generate", "bht", "--r", "6"]), "p hpd 11 3");
    assert_eq!(header(&["generate", "counterexample", "-k", "2", "--ell", "1"]), "p hpd 23 9");
    assert_eq!(header(&["generate", "random", "--n", "8", "--r", "4", "--m", "3"]), "p hpd 8 3");
}

#[test]
fn bad_input_exits_two() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.hgr", "p hpd 3 1\ne 1 2 9\n");
    assert_eq!(hyperpd(&["solve", "-i", &bad]).status.code(), Some(2));
    let missing = path_str(&dir.path().join("missing.hgr"));
    assert_eq!(hyperpd(&["check", "-i", &missing]).status.code(), Some(2));
    assert_eq!(hyperpd(&["generate", "bht", "--r", "2"]).status.code(), Some(2));
    assert_eq!(hyperpd(&["generate", "counterexample", "-k", "0"]).status.code(), Some(2));
}

#[test]
fn empty_hypergraph_exits_three() {
    let dir = TempDir::new().unwrap();
    let empty = write(&dir, "empty.hgr", "p hpd 0 0\n");
    let out = hyperpd(&["solve", "-i", &empty]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn non_uniform_is_not_applicable() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "mixed.hgr", "p hpd 5 3\ne 1 2 3\ne 3 4\ne 4 5\n");
    let v = json(&hyperpd(&["check", "-i", &path, "-k", "1", "--gamma"]));
    for b in v["bounds"].as_array().unwrap() {
        assert_eq!(b["verdict"], "NOT_APPLICABLE", "{b}");
        assert!(b["reason"].is_string());
    }
}

#[test]
fn verify_lemmas_reports_both() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "path.hgr", "p hpd 5 2\ne 1 2 3\ne 3 4 5\n");
    let v = json(&hyperpd(&["verify-lemmas", "-i", &path, "-k", "1"]));
    assert_eq!(v["schema"], "hyperpd.lemmas/1");
    assert_eq!(v["lemma4"]["outcome"]["status"], "FAIL");
    assert_eq!(v["lemma5"]["outcome"]["status"], "PASS");
}

#[test]
fn campaign_smoke() {
    let dir = TempDir::new().unwrap();
    let config = write(
        &dir,
        "c.toml",
        "ranks = [3]\nn_min = 5\nn_max = 7\nbudgets = [1]\nsamples = 6\nseed = 3\nchecks = [\"bounds\", \"lemma5\"]\n",
    );
    let report = path_str(&dir.path().join("report.json"));
    let out = hyperpd(&["campaign", "--config", &config, "-o", &report]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("campaign: 6 instances"));
    let v: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["schema"], "hyperpd.campaign/1");
    assert_eq!(v["records"].as_array().unwrap().len(), 6);

    // Flags override the file, and stdout carries the report without -o.
    let out = hyperpd(&["campaign", "--config", &config, "--samples", "2"]);
    let v = json(&out);
    assert_eq!(v["summary"]["instances"], 2);

    // Identical reports regardless of worker count.
    let a = hyperpd(&["campaign", "--config", &config]);
    let b = Command::new(env!("CARGO_BIN_EXE_hyperpd"))
        .args(["campaign", "--config", &config])
        .env("HYPERPD_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn campaign_rejects_bad_config() {
    let dir = TempDir::new().unwrap();
    let config = write(&dir, "c.toml", "bogus = 1\n");
    assert_eq!(hyperpd(&["campaign", "--config", &config]).status.code(), Some(2));
    let out = hyperpd(&["campaign", "--r", "5", "--n-min", "3", "--n-max", "4"]);
    assert_eq!(out.status.code(), Some(2));
}
