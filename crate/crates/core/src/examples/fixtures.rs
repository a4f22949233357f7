//! The bundled fixture files, generated from the constructors in this module.

use std::collections::BTreeMap;

use super::io::{subspace_rows, HopfFixture};
use super::{by_name, function_part, s3_bismash};
use crate::error::Result;
use crate::linalg::{Subspace, Vector};
use crate::scalars::CycScalar;

/// A fixture file: name relative to the fixture directory and its contents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureFile {
    pub file: String,
    pub contents: String,
}

/// File stem of each generated algebra.
pub const GENERATED: [(&str, &str); 6] = [
    ("kZ2", "kZ2"),
    ("kZ3", "kZ3"),
    ("kZ4", "kZ4"),
    ("kS3", "kS3"),
    ("k^S3", "k^S3"),
    ("k^Z3#kZ2", "bismash_S3"),
];

fn pretty<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("fixture serializes") + "\n"
}

/// Every generated fixture file. `H8.hopf.json` is hand-written and not included.
pub fn generated_fixtures() -> Result<Vec<FixtureFile>> {
    let mut out = Vec::new();
    for (name, stem) in GENERATED {
        let (h, group) = by_name(name)?;
        let mut fixture = HopfFixture::from_algebra(&h);
        fixture.name = name.to_string();
        match name {
            "k^S3" => {
                // functions constant on the cosets of A3, that is k^{S3/A3}
                let ones = |idx: &[usize]| -> Vector {
                    (0..h.dim())
                        .map(|i| if idx.contains(&i) { CycScalar::one() } else { CycScalar::zero() })
                        .collect()
                };
                let w = Subspace::span(h.dim(), &[ones(&[0, 1, 2]), ones(&[3, 4, 5])]);
                fixture.subspaces.insert("quotient_A3".into(), subspace_rows(&w));
            }
            "k^Z3#kZ2" => {
                let w = Subspace::span(h.dim(), &function_part(&s3_bismash()?.0));
                fixture.subspaces.insert("function_part".into(), subspace_rows(&w));
            }
            _ => {}
        }
        out.push(FixtureFile {
            file: format!("{stem}.hopf.json"),
            contents: pretty(&fixture),
        });
        if let (Some(g), true) = (group, name.starts_with("kZ") || name == "kS3") {
            out.push(FixtureFile {
                file: format!("{stem}.group.json"),
                contents: pretty(&g),
            });
        }
    }
    out.push(FixtureFile {
        file: "broken.hopf.json".into(),
        contents: pretty(&broken_fixture()?),
    });
    Ok(out)
}

/// `kZ2` with `g² = 2`: associative and unital, but `Δ` is no longer multiplicative.
pub fn broken_fixture() -> Result<HopfFixture> {
    let (h, _) = by_name("kZ2")?;
    let mut fixture = HopfFixture::from_algebra(&h);
    fixture.name = "broken".into();
    for entry in fixture.mult.iter_mut() {
        if entry.0 == 1 && entry.1 == 1 {
            entry.3 = CycScalar::from_int(2).to_string();
        }
    }
    fixture.subspaces = BTreeMap::new();
    Ok(fixture)
}
