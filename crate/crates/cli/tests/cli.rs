use std::path::PathBuf;
use std::process::{Command, Output};

fn catcenter(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catcenter")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut a = args.to_vec();
    a.push("--json");
    let out = catcenter(&a);
    let v =
        serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), v)
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("catcenter-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn check_category_s3_passes() {
    let (code, v) = json(&["check", "category", "s3"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["passed"], true);
}

#[test]
fn strong_left_center_of_s3_has_one_object() {
    let (code, v) = json(&["center", "s3", "--side", "left", "--strength", "strong"]);
    assert_eq!(code, 0);
    assert_eq!(v["details"]["object_count"], 1);
    assert!(v["details"]["category_spec"].as_str().unwrap().contains("[[category]]"));
}

#[test]
fn check_bimonad_kz2_lists_eight_laws() {
    let (code, v) = json(&["check", "bimonad", "kz2"]);
    assert_eq!(code, 0);
    assert_eq!(v["laws"].as_array().unwrap().len(), 8);
}

#[test]
fn failing_laws_give_exit_status_one() {
    let dir = scratch("fail");
    let path = dir.join("bad.spec");
    std::fs::write(
        &path,
        "[[bimonad]]\nname = \"bad\"\ncarrier = 2\nmu = [[1, 0, 0, 1], [0, 1, 1, 0]]\neta = [[1], [0]]\n\
         delta = [[1, 0], [0, 0], [0, 0], [0, 1]]\neps = [[1, 0]]\n",
    )
    .unwrap();
    let (code, v) = json(&["check", "bimonad", "bad", "--spec", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["passed"], false);
    let failed: Vec<_> = v["laws"].as_array().unwrap().iter().filter(|l| l["passed"] == false).collect();
    assert!(failed.iter().all(|l| !l["witnesses"].as_array().unwrap().is_empty()));
}

#[test]
fn unresolved_names_give_exit_status_two_with_a_line() {
    let dir = scratch("unresolved");
    let path = dir.join("f.spec");
    std::fs::write(&path, "[[functor]]\nname = \"f\"\nsource = \"nowhere\"\ntarget = \"s3\"\nobjects = []\n").unwrap();
    let out = catcenter(&["check", "functor", "f", "--spec", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains(":2:") && err.contains("nowhere"), "{err}");
}

#[test]
fn reports_are_deterministic_modulo_timing() {
    let strip = |mut v: serde_json::Value| {
        v["elapsed_ms"] = serde_json::Value::Null;
        v
    };
    let a = strip(json(&["center", "z4", "--strength", "strong"]).1);
    let b = strip(json(&["center", "z4", "--strength", "strong"]).1);
    assert_eq!(a, b);
}

#[test]
fn out_writes_the_full_report() {
    let dir = scratch("out");
    let path = dir.join("r.json");
    let out = catcenter(&["check", "lambda", "kz2xz2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "check lambda");
    assert_eq!(v["passed"], true);
}

#[test]
fn bilax_commands() {
    assert_eq!(json(&["check", "bilax", "t-kz2"]).0, 0);
    assert_eq!(json(&["check", "bilax", "const-kz2"]).0, 0);
    assert_eq!(json(&["check", "bilax-transformation", "yd0-bilax"]).0, 0);
    let (code, v) = json(&["map-to-dist", "yd1-bilax"]);
    assert_eq!(code, 0);
    assert!(v["details"]["psi"].is_array());
    let (code, v) = json(&["enumerate", "yd", "kz2"]);
    assert_eq!(code, 0);
    assert_eq!(v["details"]["count"], 2);
}

#[test]
fn twisted_center_and_adjoints() {
    let dir = scratch("twist");
    let path = dir.join("t.spec");
    std::fs::write(&path, "[[functor]]\nname = \"conj\"\nsource = \"s3\"\ntarget = \"s3\"\nconjugation = \"s\"\n\n[[functor]]\nname = \"id\"\nsource = \"s3\"\ntarget = \"s3\"\nobjects = [\"e\", \"r\", \"r2\", \"s\", \"sr\", \"sr2\"]\n").unwrap();
    let (code, v) = json(&["center", "s3", "--twist", "conj", "id", "--spec", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["details"]["object_count"], 1);
    let (code, v) = json(&["adjoints", "poset"]);
    assert_eq!(code, 0);
    assert_eq!(v["details"]["autonomous"], false);
    let (code, v) = json(&["center", "z4", "--strength", "strong", "--dualize"]);
    assert_eq!(code, 0);
    assert_eq!(v["details"]["duals"].as_array().unwrap().len(), 4);
}

#[test]
fn seed_suite_writes_a_parsable_file() {
    let dir = scratch("seed");
    let out = catcenter(&["seed-suite", "--out", dir.to_str().unwrap()]);
    assert!(out.status.success());
    let path = dir.join("suite.spec");
    let ws = catcenter::spec::parse_spec(&path).unwrap();
    for name in ["z2", "z4", "s3", "poset", "kz2", "kz2xz2", "yd0", "yd1"] {
        assert!(ws.get(name).is_some(), "{name}");
    }
    let (code, _) = json(&["check", "moncat", "z2", "--spec", path.to_str().unwrap()]);
    assert_eq!(code, 0);
}
