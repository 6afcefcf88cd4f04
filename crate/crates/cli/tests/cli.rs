use std::process::{Command, Output};

use cellar_core::catalog;
use cellar_core::obstruction::VerdictKind;
use serde_json::Value;

fn cellar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cellar")).args(args).env("CELLAR_SEED", "7").output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = cellar(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), v)
}

#[test]
fn report_refutes_a3() {
    let (code, v) = json(&["report", "catalog:A3"]);
    assert_eq!(code, 1);
    assert_eq!(v["results"]["verdict"], "NOT-CELLULAR");
    assert_eq!(v["results"]["reason"], "order_consistency refuted both candidates");
}

#[test]
fn verify_cell_a11() {
    let (code, v) = json(&["verify-cell", "catalog:A11", "--datum", "bundled"]);
    assert_eq!(code, 0);
    for k in ["c1", "c2", "c3", "cartan_identity", "verified"] {
        assert_eq!(v["results"][k], true, "{k}");
    }
}

#[test]
fn gram_factor_of_one() {
    let (code, v) = json(&["gram-factor", "--cartan", "[[1]]"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["count"], 1);
    assert_eq!(v["results"]["candidates"], serde_json::json!([[[1]]]));
}

#[test]
fn json_is_byte_identical_and_sorted() {
    let args = ["report", "catalog:LoopedPair", "--json"];
    let a = cellar(&args).stdout;
    let b = cellar(&args).stdout;
    assert_eq!(a, b);
    let v: Value = serde_json::from_slice(&a).unwrap();
    let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
    assert_eq!(String::from_utf8(a).unwrap(), again);
    let text = String::from_utf8(cellar(&["report", "catalog:LoopedPair"]).stdout).unwrap();
    assert!(text.contains("verdict: UNDECIDED"));
    assert!(!text.contains("timings"));
}

#[test]
fn exit_codes_on_the_catalog() {
    for e in catalog::registry() {
        let uri = format!("catalog:{}", e.name());
        let b = catalog::build_uri(&uri).unwrap();
        let (code, v) = json(&["report", &uri]);
        let verdict = v["results"]["verdict"].as_str().unwrap().to_string();
        assert_eq!(code, i32::from(verdict == "NOT-CELLULAR"), "{uri}");
        if let Some(want) = b.metadata.expected_verdict {
            assert_eq!(verdict, want.to_string(), "{uri}");
        }
        if b.datum.is_some() {
            let (code, _) = json(&["verify-cell", &uri, "--datum", "bundled"]);
            assert_eq!(code, 0, "{uri}");
            assert_eq!(b.metadata.expected_verdict, Some(VerdictKind::CellularVerified));
        }
    }
}

#[test]
fn input_errors_exit_2() {
    let (code, v) = json(&["cartan", "catalog:NoSuchThing"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "invalid");
    assert_eq!(json(&["cartan", "catalog:LambdaPrime?l=x"]).0, 2);
    assert_eq!(json(&["gram-factor", "--cartan", "[[1,2]]"]).0, 2);
    assert_eq!(json(&["cartan", "/nonexistent/file.json"]).0, 2);
    assert_eq!(json(&["verify-cell", "catalog:A3", "--datum", "bundled"]).0, 2);
    assert_eq!(cellar(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn caps_exit_3() {
    let (code, v) = json(&["gram-factor", "--cartan", "[[25]]"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "cap");
    assert_eq!(json(&["basis", "catalog:DoubleQuiver?edges=1>2", "--cap", "12"]).0, 3);
    let (code, v) = json(&["report", "catalog:A5", "--trace-cap", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["verdict"], "UNDECIDED");
}

#[test]
fn build_then_report_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("a4.json");
    let d = dir.path().join("a4-datum.json");
    let out = cellar(&["catalog", "build", "A4", "--out", p.to_str().unwrap(), "--datum-out", d.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let (code, v) = json(&["verify-cell", p.to_str().unwrap(), "--datum", d.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["dimension"], 28);
    let (_, a) = json(&["report", p.to_str().unwrap(), "--datum", d.to_str().unwrap()]);
    let (_, b) = json(&["report", "catalog:A4"]);
    assert_eq!(a["results"]["verdict"], "CELLULAR-VERIFIED");
    assert_eq!(a["inputs_digest"], b["inputs_digest"]);
    let r = dir.path().join("report.json");
    assert_eq!(cellar(&["cartan", "catalog:A4", "--out", r.to_str().unwrap()]).status.code(), Some(0));
    let saved: Value = serde_json::from_str(&std::fs::read_to_string(&r).unwrap()).unwrap();
    assert_eq!(saved["results"]["cartan"], serde_json::json!([[2, 2, 1, 1], [2, 4, 2, 2], [1, 2, 3, 0], [1, 2, 0, 3]]));
}

#[test]
fn truncation_and_order_check() {
    let (_, v) = json(&["cartan", "catalog:LambdaPrime?l=2&m=2", "--vertices", "-1,0,1"]);
    assert_eq!(v["results"]["cartan"], serde_json::json!([[2, 2, 1], [2, 4, 2], [1, 2, 2]]));
    let (code, v) = json(&["order-check", "--decomposition", "[[1,1],[1,1],[1,0],[1,0]]", "--self-injective"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["consistent"], true);
    let (code, _) = json(&["order-check", "catalog:OddCycle"]);
    assert_eq!(code, 1);
    let (code, v) = json(&["ext-sym", "catalog:A8"]);
    assert_eq!(code, 1);
    assert_eq!(v["results"]["symmetric"], false);
    assert_eq!(json(&["weak-sym", "catalog:A8"]).0, 0);
}

#[test]
fn chain_and_listing() {
    let (code, v) = json(&["chain", "catalog:Kronecker", "--datum", "bundled"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["chain"]["ok"], true);
    let (code, v) = json(&["catalog", "list"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["entries"].as_array().unwrap().len(), catalog::registry().len());
}
