use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

use pebbling::io::Instance;

const P3: &str = "vertices = [\"v1\", \"v2\", \"v3\"]\nedges = [[\"v1\", \"v2\"], [\"v2\", \"v3\"]]\ndemand_kind = \"unit\"\n[config]\n";
const SAMPLE: &str = "2 3\n1 2 3 4\n3 4 5 6\n5 6 7 8\n";

fn pebble(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pebble")).args(args).output().expect("binary runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("a single JSON document")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn p3(dir: &TempDir, v1: i64) -> PathBuf {
    write(dir, &format!("p3_{v1}.toml"), &format!("{P3}v1 = {v1}\n"))
}

#[test]
fn solve_and_verify_round_trip() {
    let dir = TempDir::new().unwrap();
    let inst = p3(&dir, 7);
    let cert = dir.path().join("cert.toml");
    let out = pebble(&["solve", "--instance", path_str(&inst), "--output", path_str(&cert)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "solvable\nv1 -> v2: 3\nv2 -> v3: 1\n");
    let out = pebble(&["verify", "--instance", path_str(&inst), "--certificate", path_str(&cert)]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert_eq!(stdout(&out), "verified\n");
}

#[test]
fn unsolvable_reports_witness() {
    let dir = TempDir::new().unwrap();
    let inst = p3(&dir, 6);
    let out = pebble(&["solve", "--instance", path_str(&inst), "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let doc = json(&out);
    assert_eq!(doc["status"], "unsolvable");
    assert_eq!(doc["witness"], "v3");
    assert!(doc["certificate"].is_null());
}

#[test]
fn failing_certificate_names_vertex() {
    let dir = TempDir::new().unwrap();
    let inst = p3(&dir, 6);
    let cert = write(&dir, "c.toml", "[[moves]]\nfrom = \"v1\"\nto = \"v2\"\ncount = 3\n\n[[moves]]\nfrom = \"v2\"\nto = \"v3\"\ncount = 1\n");
    let out = pebble(&["verify", "--instance", path_str(&inst), "--certificate", path_str(&cert)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("violated at v1"), "{}", stdout(&out));
    let out = pebble(&["verify", "--instance", path_str(&inst), "--certificate", path_str(&cert), "--json"]);
    assert_eq!(json(&out)["violations"][0]["vertex"], "v1");
}

#[test]
fn reduce_output_is_byte_stable() {
    let dir = TempDir::new().unwrap();
    let x4c = write(&dir, "sample.x4c", SAMPLE);
    for kind in ["x4c-cover", "x4c-number"] {
        let out = pebble(&["reduce", kind, "--x4c", path_str(&x4c)]);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        let parsed = Instance::parse(&text).unwrap();
        assert_eq!(parsed.to_toml(), text);
        let file = write(&dir, &format!("{kind}.toml"), &text);
        let again = pebble(&["reduce", kind, "--x4c", path_str(&x4c), "--output", path_str(&file)]);
        assert_eq!(again.status.code(), Some(0));
        assert_eq!(fs::read_to_string(&file).unwrap(), text);
    }
    let cover = dir.path().join("x4c-cover.toml");
    let out = pebble(&["solve", "--instance", path_str(&cover)]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn reduce_to_canonical() {
    let dir = TempDir::new().unwrap();
    let inst = write(
        &dir,
        "p4.toml",
        "vertices = [\"v1\", \"v2\", \"v3\", \"v4\"]\nedges = [[\"v1\", \"v2\"], [\"v2\", \"v3\"], [\"v3\", \"v4\"]]\n[config]\nv2 = 2\nv3 = 1\nv4 = 3\n",
    );
    let out = pebble(&["reduce", "cover-to-canonical", "--instance", path_str(&inst), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 25);
    assert_eq!(doc["config"]["w0"], 12);
    assert_eq!(doc["config"]["v4'"], 4);
    assert_eq!(doc["target"], "w4");
}

#[test]
fn random_reductions_follow_the_seed() {
    let a = pebble(&["reduce", "x4c-number", "--seed", "11", "--n", "2", "--m", "4"]);
    let b = pebble(&["reduce", "x4c-number", "--seed", "11", "--n", "2", "--m", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let inst = Instance::parse(&stdout(&a)).unwrap();
    assert_eq!(inst.graph.vertex_count(), 4 * 2 + 4 * 4 + 1);
    assert_eq!(inst.threshold, Some(15 * 4 + 16 * 2));
}

#[test]
fn numbers() {
    let dir = TempDir::new().unwrap();
    let inst = p3(&dir, 0);
    let out = pebble(&["number", "--instance", path_str(&inst), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["value"], 7);
    assert_eq!(doc["extremal_config"]["v1"], 6);
    let out = pebble(&["number", "--instance", path_str(&inst), "--demand-kind", "reach:v3", "--json"]);
    assert_eq!(json(&out)["value"], 4);
    let out = pebble(&["pi", "--instance", path_str(&inst)]);
    assert_eq!(stdout(&out).lines().next(), Some("4"));
}

#[test]
fn canonical_oracle_and_gamma() {
    let dir = TempDir::new().unwrap();
    let two = write(&dir, "two.toml", &format!("{P3}v1 = 2\n"));
    let out = pebble(&["canonical", "--instance", path_str(&two), "--json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["unreachable"], serde_json::json!(["v3"]));
    let out = pebble(&["reach", "--instance", path_str(&two), "--target", "v2"]);
    assert_eq!(out.status.code(), Some(0));
    let out = pebble(&["oracle", "--instance", path_str(&p3(&dir, 7))]);
    assert_eq!((out.status.code(), stdout(&out)), (Some(0), "solvable\n".to_string()));
    let out = pebble(&["gamma", "--instance", path_str(&p3(&dir, 6)), "--target", "v3", "--json"]);
    let doc = json(&out);
    assert_eq!(doc["negative"], true);
    assert_eq!(doc["numerator"], "-1");
    assert_eq!(doc["log2_denominator"], 2);
}

#[test]
fn exit_codes_for_errors() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.toml", "vertices = [\"a\", \"b\"]\nedges = [\n  [\"a\", \"b\"],\n  [\"a\", \"q\"],\n]\n");
    let out = pebble(&["solve", "--instance", path_str(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));

    let out = pebble(&["solve", "--instance", path_str(&p3(&dir, 7)), "--node-cap", "0"]);
    assert_eq!(out.status.code(), Some(3));

    assert_eq!(pebble(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(pebble(&["solve"]).status.code(), Some(2));
    assert_eq!(pebble(&["reach", "--instance", path_str(&p3(&dir, 7)), "--target", "zz"]).status.code(), Some(2));
}
