//! Fixture paths and subobject selectors.

use std::path::{Path, PathBuf};

use hopfcalc::examples::io::load_hopf_fixture;
use hopfcalc::examples::{load_group, GroupPresentation, HopfFixture, Strictness};
use hopfcalc::hopf::{classify_subspace, HopfAlgebra};
use hopfcalc::linalg::{Subspace, Vector};
use hopfcalc::scalars::CycScalar;
use hopfcalc::{Error, Result};

/// A loaded algebra with its fixture and, when present, its group table.
pub struct Input {
    pub algebra: HopfAlgebra,
    pub fixture: HopfFixture,
    pub group: Option<GroupPresentation>,
}

/// Resolves `fixtures/kS3` to `fixtures/kS3.hopf.json`; a path to an existing file is used as is.
pub fn fixture_path(arg: &Path) -> PathBuf {
    if arg.is_file() {
        return arg.to_path_buf();
    }
    let mut name = arg.as_os_str().to_owned();
    name.push(".hopf.json");
    PathBuf::from(name)
}

fn group_path(hopf: &Path) -> Option<PathBuf> {
    let s = hopf.to_str()?;
    let stem = s.strip_suffix(".hopf.json")?;
    Some(PathBuf::from(format!("{stem}.group.json")))
}

pub fn load(arg: &Path, strictness: Strictness) -> Result<Input> {
    let path = fixture_path(arg);
    if !path.is_file() {
        return Err(Error::Io(format!("no fixture at {}", path.display())));
    }
    let (algebra, fixture) = load_hopf_fixture(&path, strictness)?;
    let group = match group_path(&path) {
        Some(g) if g.is_file() => Some(load_group(&g)?),
        _ => None,
    };
    let algebra = if fixture.name.is_empty() {
        let stem = path.file_name().and_then(|s| s.to_str()).unwrap_or("A");
        algebra.with_name(stem.trim_end_matches(".hopf.json"))
    } else {
        algebra
    };
    Ok(Input { algebra, fixture, group })
}

/// Splits on `sep` outside square brackets, so scalar literals keep their commas.
fn split_outside_brackets(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

fn indices(list: &str, dim: usize, what: &str) -> Result<Vec<usize>> {
    list.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let i: usize = t
                .trim()
                .parse()
                .map_err(|_| Error::parse(what, format!("`{t}` is not an index")))?;
            if i >= dim {
                return Err(Error::parse(what, format!("index {i} out of range for dimension {dim}")));
            }
            Ok(i)
        })
        .collect()
}

/// Resolves a selector to a subspace of `A`.
///
/// `all`, `unit`, `subgroup:<name>`, `span:<i,j,…>` (basis elements),
/// `rows:<row>;<row>` (explicit coordinate rows), `named:<name>` (fixture subspace).
pub fn subspace(input: &Input, selector: &str) -> Result<Subspace> {
    let n = input.algebra.dim();
    let what = format!("selector `{selector}`");
    let (kind, arg) = selector.split_once(':').unwrap_or((selector, ""));
    match kind {
        "all" => Ok(Subspace::full(n)),
        "unit" => Ok(Subspace::span(n, &[input.algebra.unit().clone()])),
        "subgroup" => {
            let g = input
                .group
                .as_ref()
                .ok_or_else(|| Error::parse(&what, "the algebra has no group fixture"))?;
            let elems = g
                .subgroup(arg)
                .ok_or_else(|| Error::parse(&what, format!("group {} has no subgroup named {arg}", g.name)))?;
            Ok(Subspace::coordinate(n, elems))
        }
        "span" => Ok(Subspace::coordinate(n, &indices(arg, n, &what)?)),
        "rows" => {
            let rows = arg
                .split(';')
                .map(|r| {
                    let v: Vector = split_outside_brackets(r, ',')
                        .into_iter()
                        .map(|t| t.parse::<CycScalar>().map_err(|e| Error::parse(&what, e.to_string())))
                        .collect::<Result<_>>()?;
                    if v.len() != n {
                        return Err(Error::parse(&what, format!("row has {} entries, expected {n}", v.len())));
                    }
                    Ok(v)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Subspace::span(n, &rows))
        }
        "named" => input.fixture.subspace(arg),
        _ => Err(Error::parse(
            &what,
            "expected all, unit, subgroup:<name>, span:<indices>, rows:<rows> or named:<name>",
        )),
    }
}

/// A selector that must name a unital subalgebra of `A`.
pub fn subalgebra(input: &Input, selector: &str) -> Result<Subspace> {
    let w = subspace(input, selector)?;
    if !classify_subspace(&input.algebra, &w).subalgebra {
        return Err(Error::parse(
            format!("selector `{selector}`"),
            "does not span a unital subalgebra",
        ));
    }
    Ok(w)
}

/// Comma separated simple indices below `rank`.
pub fn simples(list: &str, rank: usize) -> Result<Vec<usize>> {
    indices(list, rank, "--simples")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brackets_protect_literal_commas() {
        assert_eq!(
            split_outside_brackets("zeta(3)[0:1/2, 1:1/1], 0, 1", ','),
            vec!["zeta(3)[0:1/2, 1:1/1]", "0", "1"]
        );
    }

    #[test]
    fn fixture_stems_gain_the_extension() {
        assert_eq!(fixture_path(Path::new("nowhere/kS3")), PathBuf::from("nowhere/kS3.hopf.json"));
        assert_eq!(group_path(Path::new("f/kS3.hopf.json")), Some(PathBuf::from("f/kS3.group.json")));
    }

    #[test]
    fn index_lists_are_range_checked() {
        assert_eq!(indices("0, 2", 3, "x").unwrap(), vec![0, 2]);
        assert!(indices("3", 3, "x").is_err());
        assert!(indices("a", 3, "x").is_err());
    }
}
