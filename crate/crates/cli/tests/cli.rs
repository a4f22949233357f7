use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    root.join(name).to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfcalc")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn thm1_2_on_s3_with_a3_passes() {
    let o = run(&["check", "thm1.2", "--A", &fixture("kS3"), "--K", "subgroup:A3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("verdict: PASS"));
}

#[test]
fn z2_smatrix_is_a_sign_table() {
    let o = run(&["smatrix", "--A", &fixture("kZ2")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 4);
    for row in &rows {
        assert_eq!(row.len(), 4);
        assert!(row.iter().all(|c| *c == "1" || *c == "-1"), "{row:?}");
    }
    assert_eq!(rows[0], ["1", "1", "1", "1"]);
}

#[test]
fn broken_fixture_names_the_failed_identity() {
    let o = run(&["axioms", &fixture("broken.hopf.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("comultiplication is an algebra map fails"));
    let o = run(&["axioms", &fixture("broken.hopf.json"), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["valid"], false);
    assert!(v["failures"].as_array().unwrap().iter().any(|f| f["identity"].is_string()));
}

#[test]
fn unsatisfied_hypothesis_exits_2_with_transcript() {
    let o = run(&["check", "thm1.1", "--A", &fixture("kS3"), "--K", "subgroup:S2", "--json"]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "not_applicable");
    assert!(v["hypotheses"].as_array().unwrap().iter().any(|h| h["holds"] == false));
}

#[test]
fn bad_inputs_exit_3() {
    for args in [
        vec!["check", "thm9.9", "--A", "fixtures/kS3"],
        vec!["check", "thm1.2", "--A", "no/such/fixture"],
        vec!["check", "thm1.2", "--A", "FIX", "--K", "subgroup:Q"],
        vec!["check", "thm1.2", "--A", "FIX", "--K", "span:1"],
        vec!["check", "thm1.2", "--A", "FIX"],
    ] {
        let s3 = fixture("kS3");
        let args: Vec<&str> = args.iter().map(|a| if *a == "FIX" { s3.as_str() } else { a }).collect();
        let o = run(&args);
        assert_eq!(o.status.code(), Some(3), "{args:?}");
    }
    let o = run(&["check", "thm1.2", "--A", "no/such/fixture", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["error"], "io");
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["lattice", "--A", &fixture("kS3"), "--coideals", "--json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn selectors_resolve() {
    let a = fixture("k^S3");
    let o = run(&["check", "thm5.10", "--A", &a, "--K", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let b = fixture("bismash_S3");
    let o = run(&["check", "thm5.10", "--A", &b, "--K", "named:function_part"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["centralizer", "--A", &fixture("kS3"), "--K", "span:0,1,2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["centralizer", "--A", &fixture("kZ2"), "--K", "unit", "--format", "csv"]);
    assert!(stdout(&o).starts_with("side,simples,fpdim\n"));
}

#[test]
fn kernels_report_brauer_closure() {
    let o = run(&["kernels", "--A", &fixture("kS3"), "--module", "coideal:subgroup:A3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["brauer_holds"], true);
    assert_eq!(v["generated"], v["left_kernel"]["trivial_on"]);
}

#[test]
fn irr_csv_has_a_header_and_one_row_per_simple() {
    let o = run(&["irr", "--A", &fixture("kS3"), "--format", "csv"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 4);
    assert!(text.starts_with("simple,degree,dual,"));
}

#[test]
fn csv_is_refused_where_there_is_no_table() {
    let o = run(&["double", "--A", &fixture("kZ2"), "--format", "csv"]);
    assert_eq!(o.status.code(), Some(3));
}
