use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

use ordfor::kan::{pullback_presheaf, representable_presheaf, PresheafMap};
use ordfor::normalization::SsmMap;
use ordfor::random::{random_epi_functor, random_ssm, seeded};

fn ordfor(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_ordfor"))
        .args(args)
        .output()
        .expect("binary runs");
    let code = out.status.code().expect("exit code");
    let text = String::from_utf8(out.stdout).unwrap();
    let json = if text.trim().is_empty() {
        Value::Null
    } else {
        serde_json::from_str(&text).expect("stdout is one JSON document")
    };
    (code, json)
}

fn write(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn endomorphisms_of_the_point() {
    let (code, out) = ordfor(&["enum-hom", "0", "0", "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(out["result"]["count"], 2);
    assert_eq!(out["counts"]["oracle_count"], 2);
}

#[test]
fn no_morphisms_downward() {
    let (code, out) = ordfor(&["enum-hom", "2", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out["result"]["count"], 0);
}

#[test]
fn surjection_counts() {
    let (_, out) = ordfor(&["enum-epi", "5", "2"]);
    assert_eq!(out["result"]["count"], 10);
}

#[test]
fn diamond_is_rejected() {
    let dir = TempDir::new().unwrap();
    let f = write(
        dir.path(),
        "diamond.json",
        r#"{"size":4,"covers":[[0,2],[1,2],[0,3],[1,3]]}"#,
    );
    let (code, out) = ordfor(&["validate", arg(&f)]);
    assert_eq!(code, 2);
    assert_eq!(out["pass"], false);
    assert!(out["error"]["kind"]
        .as_str()
        .unwrap()
        .ends_with("Violation"));
}

#[test]
fn malformed_json_exits_two() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "bad.json", "{not json");
    let (code, out) = ordfor(&["validate", arg(&f)]);
    assert_eq!(code, 2);
    assert_eq!(out["pass"], false);
}

#[test]
fn unknown_subcommand_exits_two() {
    let (code, _) = ordfor(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn validate_and_decompose_a_forest() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "f.json", r#"{"size":4,"covers":[[0,1],[2,3]]}"#);
    let (code, out) = ordfor(&["validate", arg(&f)]);
    assert_eq!(code, 0);
    assert_eq!(out["result"]["maxima"], serde_json::json!([1, 3]));
    let (code, out) = ordfor(&["decompose", arg(&f)]);
    assert_eq!(code, 0);
    assert_eq!(out["result"]["trees"].as_array().unwrap().len(), 2);
}

#[test]
fn edge_composed_with_itself_reduces_to_an_edge() {
    let dir = TempDir::new().unwrap();
    let e = write(dir.path(), "e.json", r#"{"size":2,"covers":[[0,1]]}"#);
    let (code, out) = ordfor(&["compose", arg(&e), arg(&e)]);
    assert_eq!(code, 0);
    assert_eq!(out["result"]["graft"]["size"], 3);
    assert_eq!(out["result"]["composite"]["forest"]["size"], 2);
    let chain = write(dir.path(), "c.json", r#"{"size":3,"covers":[[0,1],[1,2]]}"#);
    let (_, out) = ordfor(&["reduce", arg(&chain)]);
    assert_eq!(out["result"]["contractions"], 1);
    let (_, out) = ordfor(&["shadow", arg(&e)]);
    assert_eq!(out["result"]["values"], serde_json::json!([0]));
}

#[test]
fn report_is_also_written_to_out() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("report.json");
    let (code, out) = ordfor(&[
        "--out",
        arg(&out_path),
        "check",
        "confluence",
        "--max-size",
        "6",
    ]);
    assert_eq!(code, 0);
    let saved: Value = serde_json::from_str(&fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(saved["pass"], true);
    assert_eq!(saved["counts"], out["counts"]);
}

#[test]
fn small_checks_pass() {
    for args in [
        &["check", "axioms", "--max", "2", "--assoc-max", "1"][..],
        &["check", "pi", "--max", "1"],
        &["check", "decomposition", "--max-size", "5"],
        &["check", "graft", "--max-size", "3"],
        &["nk-check", "--trials", "5"],
        &["kan", "unit", "--trials", "3"],
        &["kan", "detect", "--trials", "3"],
    ] {
        let (code, out) = ordfor(args);
        assert_eq!(code, 0, "{args:?}: {out}");
        assert_eq!(out["pass"], true);
    }
}

#[test]
fn export_dot_writes_graphviz() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "f.json", r#"{"size":3,"covers":[[0,2],[1,2]]}"#);
    let (code, _) = ordfor(&["export-dot", arg(&f)]);
    assert_eq!(code, 0);
    let dot = fs::read_to_string(dir.path().join("f.dot")).unwrap();
    assert!(dot.starts_with("digraph"));
}

#[test]
fn homology_and_weq_of_module_files() {
    let dir = TempDir::new().unwrap();
    let x = random_ssm(&mut seeded(1), 2, 2, false);
    let xf = write(
        dir.path(),
        "x.json",
        &serde_json::to_string(&x.to_record()).unwrap(),
    );
    let (code, out) = ordfor(&["homology", arg(&xf)]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(
        out["result"]["normalized_dims"].as_array().unwrap().len(),
        3
    );
    let id = write(
        dir.path(),
        "id.json",
        &serde_json::to_string(&SsmMap::identity(&x).to_record()).unwrap(),
    );
    let (code, out) = ordfor(&["weq", arg(&id)]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out["result"]["weak_equivalence"], true);
    assert_eq!(out["result"]["fibration"], true);
}

#[test]
fn kan_commands_on_presheaf_files() {
    let dir = TempDir::new().unwrap();
    let a = random_epi_functor(&mut seeded(2), 2, 2);
    let x = pullback_presheaf(&a).unwrap();
    let xf = write(
        dir.path(),
        "x.json",
        &serde_json::to_string(&x.to_record()).unwrap(),
    );
    let (code, out) = ordfor(&["kan", "push", arg(&xf)]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out["result"]["dims"], serde_json::json!(a.dims()));
    let (code, out) = ordfor(&["kan", "push", arg(&xf), "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out["result"]["dim"], a.dims()[1]);

    let id = write(
        dir.path(),
        "id.json",
        &serde_json::to_string(&PresheafMap::identity(&x).to_record()).unwrap(),
    );
    let (code, out) = ordfor(&["kan", "weq", arg(&id)]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out["result"]["weak_equivalence"], true);

    let r = representable_presheaf(0, 2).unwrap();
    let rf = write(
        dir.path(),
        "r.json",
        &serde_json::to_string(&r.to_record()).unwrap(),
    );
    let (code, out) = ordfor(&["kan", "counit", arg(&rf)]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(
        out["result"]["pushed_counit_iso"],
        serde_json::json!([true, true, true])
    );
    assert_eq!(out["result"]["counit_iso"][0], false);
}
