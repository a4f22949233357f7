//! The fixture directory matches the generators. Set `HOPFCALC_BLESS=1` to rewrite it.

use std::path::PathBuf;

use hopfcalc::examples::io::{load_hopf_fixture, parse_hopf};
use hopfcalc::examples::{by_name, generated_fixtures, load_group, Strictness, GENERATED};
use hopfcalc::hopf::verify_axioms;

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

#[test]
fn fixture_files_are_fresh() {
    let bless = std::env::var("HOPFCALC_BLESS").is_ok_and(|v| v == "1");
    for f in generated_fixtures().unwrap() {
        let path = fixture_dir().join(&f.file);
        if bless {
            std::fs::write(&path, &f.contents).unwrap();
        }
        let on_disk = std::fs::read_to_string(&path).unwrap_or_default();
        assert!(on_disk == f.contents, "{} is stale; rerun with HOPFCALC_BLESS=1", f.file);
    }
}

#[test]
fn fixtures_round_trip_to_the_generated_algebras() {
    for (name, stem) in GENERATED {
        let (h, group) = by_name(name).unwrap();
        let (loaded, _) = load_hopf_fixture(fixture_dir().join(format!("{stem}.hopf.json")), Strictness::Verify).unwrap();
        assert_eq!(loaded.to_data().mult, h.to_data().mult, "{name}");
        assert_eq!(loaded.to_data().comult, h.to_data().comult, "{name}");
        if let Some(g) = group.filter(|_| !name.starts_with("k^")) {
            assert_eq!(load_group(fixture_dir().join(format!("{stem}.group.json"))).unwrap(), g);
        }
    }
}

#[test]
fn broken_fixture_fails_verification() {
    let text = std::fs::read_to_string(fixture_dir().join("broken.hopf.json")).unwrap();
    assert!(parse_hopf(&text, Strictness::Verify).is_err());
    let (h, _) = parse_hopf(&text, Strictness::Trust).unwrap();
    assert!(!verify_axioms(&h).is_valid());
}

#[test]
fn named_subspaces_resolve() {
    let (_, f) = load_hopf_fixture(fixture_dir().join("k^S3.hopf.json"), Strictness::Verify).unwrap();
    assert_eq!(f.subspace("quotient_A3").unwrap().dim(), 2);
    let (_, f) = load_hopf_fixture(fixture_dir().join("bismash_S3.hopf.json"), Strictness::Verify).unwrap();
    assert_eq!(f.subspace("function_part").unwrap().dim(), 3);
}

#[test]
fn guide_fixture_example_loads() {
    let guide = std::fs::read_to_string(fixture_dir().join("../book/src/cli.md")).unwrap();
    let block = guide.split("```json").nth(1).unwrap().split("```").next().unwrap();
    let (h, _) = parse_hopf(block, Strictness::Verify).unwrap();
    assert!(verify_axioms(&h).is_valid());
    assert_eq!(h, by_name("kZ2").unwrap().0.with_name("kZ2"));
}
