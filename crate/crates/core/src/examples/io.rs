//! JSON fixtures for Hopf algebras, subspaces and groups.
//!
//! Coefficients are scalar literals such as `zeta(3)[0:1/2, 1:-1/1]`; a
//! subspace is a list of coordinate rows.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::groups::GroupPresentation;
use crate::error::{Error, Result};
use crate::hopf::{verify_axioms, HopfAlgebra, HopfData};
use crate::linalg::{Subspace, Vector};
use crate::scalars::CycScalar;

/// The on-disk form of a Hopf algebra.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HopfFixture {
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub name: String,
    pub dim: usize,
    pub conductor: u32,
    pub labels: Vec<String>,
    pub mult: Vec<(usize, usize, usize, String)>,
    pub unit: Vec<String>,
    pub comult: Vec<(usize, usize, usize, String)>,
    pub counit: Vec<String>,
    pub antipode: Vec<Vec<String>>,
    /// Named subspaces, for selectors.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub subspaces: BTreeMap<String, Vec<Vec<String>>>,
}

/// Whether loading checks the Hopf axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strictness {
    Verify,
    Trust,
}

fn scalar(s: &str, location: impl Fn() -> String) -> Result<CycScalar> {
    s.parse::<CycScalar>().map_err(|e| match e {
        Error::Parse { message, .. } => Error::parse(location(), format!("{message} in `{s}`")),
        other => Error::parse(location(), other.to_string()),
    })
}

fn row(r: &[String], location: impl Fn(usize) -> String) -> Result<Vector> {
    r.iter().enumerate().map(|(k, s)| scalar(s, || location(k))).collect()
}

pub fn literal(c: &CycScalar) -> String {
    c.to_string()
}

fn literal_row(v: &[CycScalar]) -> Vec<String> {
    v.iter().map(literal).collect()
}

impl HopfFixture {
    pub fn from_algebra(h: &HopfAlgebra) -> HopfFixture {
        let data = h.to_data();
        HopfFixture {
            name: data.name,
            dim: h.dim(),
            conductor: data.conductor,
            labels: data.labels,
            mult: data.mult.iter().map(|(i, j, k, c)| (*i, *j, *k, literal(c))).collect(),
            unit: literal_row(&data.unit),
            comult: data.comult.iter().map(|(i, j, k, c)| (*i, *j, *k, literal(c))).collect(),
            counit: literal_row(&data.counit),
            antipode: data.antipode.iter().map(|r| literal_row(r)).collect(),
            subspaces: BTreeMap::new(),
        }
    }

    pub fn to_algebra(&self) -> Result<HopfAlgebra> {
        if self.labels.len() != self.dim {
            return Err(Error::parse("labels", format!("expected {} labels", self.dim)));
        }
        let entries = |list: &[(usize, usize, usize, String)], what: &str| -> Result<Vec<(usize, usize, usize, CycScalar)>> {
            list.iter()
                .enumerate()
                .map(|(e, (i, j, k, c))| {
                    if *i >= self.dim || *j >= self.dim || *k >= self.dim {
                        return Err(Error::parse(format!("{what}[{e}]"), "index out of range"));
                    }
                    Ok((*i, *j, *k, scalar(c, || format!("{what}[{e}]"))?))
                })
                .collect()
        };
        let mult = entries(&self.mult, "mult")?;
        let comult = entries(&self.comult, "comult")?;
        let unit = row(&self.unit, |k| format!("unit[{k}]"))?;
        let counit = row(&self.counit, |k| format!("counit[{k}]"))?;
        let antipode = self
            .antipode
            .iter()
            .enumerate()
            .map(|(i, r)| row(r, |k| format!("antipode[{i}][{k}]")))
            .collect::<Result<Vec<_>>>()?;
        let mut conductor = self.conductor.max(1);
        for c in mult.iter().map(|e| &e.3).chain(comult.iter().map(|e| &e.3)) {
            conductor = crate::scalars::cyclotomic::lcm(conductor, c.conductor());
        }
        HopfAlgebra::from_data(HopfData {
            name: self.name.clone(),
            labels: self.labels.clone(),
            conductor,
            mult,
            unit,
            comult,
            counit,
            antipode,
        })
        .map_err(|e| Error::parse("structure", e.to_string()))
    }

    pub fn subspace(&self, name: &str) -> Result<Subspace> {
        let rows = self
            .subspaces
            .get(name)
            .ok_or_else(|| Error::parse(format!("subspaces.{name}"), "no such subspace"))?;
        subspace_from_rows(self.dim, rows, &format!("subspaces.{name}"))
    }
}

pub fn subspace_from_rows(dim: usize, rows: &[Vec<String>], location: &str) -> Result<Subspace> {
    let vecs = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            if r.len() != dim {
                return Err(Error::parse(format!("{location}[{i}]"), format!("expected {dim} entries")));
            }
            row(r, |k| format!("{location}[{i}][{k}]"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Subspace::span(dim, &vecs))
}

pub fn subspace_rows(w: &Subspace) -> Vec<Vec<String>> {
    w.basis().iter().map(|v| literal_row(v)).collect()
}

pub fn parse_hopf(text: &str, strictness: Strictness) -> Result<(HopfAlgebra, HopfFixture)> {
    let fixture: HopfFixture = serde_json::from_str(text).map_err(|e| Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    let h = fixture.to_algebra()?;
    if strictness == Strictness::Verify {
        let report = verify_axioms(&h);
        if let Some(f) = report.failures.first() {
            return Err(Error::Precondition(format!(
                "fixture fails the {} axiom at basis indices {:?}",
                f.identity, f.witness
            )));
        }
    }
    Ok((h, fixture))
}

pub fn load_hopf(path: impl AsRef<Path>, strictness: Strictness) -> Result<HopfAlgebra> {
    Ok(load_hopf_fixture(path, strictness)?.0)
}

pub fn load_hopf_fixture(path: impl AsRef<Path>, strictness: Strictness) -> Result<(HopfAlgebra, HopfFixture)> {
    let text = std::fs::read_to_string(path.as_ref())?;
    parse_hopf(&text, strictness)
}

pub fn hopf_to_json(h: &HopfAlgebra) -> String {
    serde_json::to_string_pretty(&HopfFixture::from_algebra(h)).expect("fixture serializes")
}

pub fn save_hopf(path: impl AsRef<Path>, h: &HopfAlgebra) -> Result<()> {
    std::fs::write(path, hopf_to_json(h) + "\n")?;
    Ok(())
}

pub fn save_subspace(path: impl AsRef<Path>, w: &Subspace) -> Result<()> {
    let text = serde_json::to_string_pretty(&subspace_rows(w)).expect("rows serialize");
    std::fs::write(path, text + "\n")?;
    Ok(())
}

pub fn load_subspace(path: impl AsRef<Path>, dim: usize) -> Result<Subspace> {
    let text = std::fs::read_to_string(path.as_ref())?;
    let rows: Vec<Vec<String>> = serde_json::from_str(&text).map_err(|e| Error::parse("subspace", e.to_string()))?;
    subspace_from_rows(dim, &rows, "rows")
}

pub fn parse_group(text: &str) -> Result<GroupPresentation> {
    let g: GroupPresentation = serde_json::from_str(text).map_err(|e| Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    g.validate()?;
    Ok(g)
}

pub fn load_group(path: impl AsRef<Path>) -> Result<GroupPresentation> {
    parse_group(&std::fs::read_to_string(path.as_ref())?)
}

pub fn save_group(path: impl AsRef<Path>, g: &GroupPresentation) -> Result<()> {
    std::fs::write(path, serde_json::to_string_pretty(g).expect("group serializes") + "\n")?;
    Ok(())
}
