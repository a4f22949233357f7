//! Finite groups given by Cayley tables, and the Hopf algebras built from them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, HopfData};
use crate::linalg::{unit_vec, Vector};
use crate::scalars::CycScalar;

/// A finite group as a Cayley table on `0..order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub name: String,
    pub labels: Vec<String>,
    /// `table[a][b]` is the index of `ab`.
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
    /// Named subgroups, as sorted element indices.
    #[serde(default)]
    pub subgroups: BTreeMap<String, Vec<usize>>,
}

impl GroupPresentation {
    /// Builds a presentation from a table, deriving identity and inverses and
    /// validating the group axioms.
    pub fn from_table(name: impl Into<String>, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<GroupPresentation> {
        let n = table.len();
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::Precondition("Cayley table has no identity".into()))?;
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| table[a][b] == identity && table[b][a] == identity)
                    .ok_or_else(|| Error::Precondition(format!("element {a} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        let g = GroupPresentation {
            name: name.into(),
            labels,
            table,
            identity,
            inverse,
            subgroups: BTreeMap::new(),
        };
        g.validate()?;
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// Checks shape, closure, identity, inverses, associativity and subgroup tables.
    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        let bad = |m: String| Err(Error::Precondition(m));
        if self.labels.len() != n || self.inverse.len() != n || self.table.iter().any(|r| r.len() != n) {
            return bad("Cayley table is not square or labels have the wrong length".into());
        }
        if self.identity >= n || self.table.iter().flatten().any(|&x| x >= n) {
            return bad("Cayley table entry out of range".into());
        }
        for a in 0..n {
            if self.mul(self.identity, a) != a || self.mul(a, self.identity) != a {
                return bad(format!("identity fails on element {a}"));
            }
            if self.mul(a, self.inverse[a]) != self.identity || self.mul(self.inverse[a], a) != self.identity {
                return bad(format!("inverse table fails on element {a}"));
            }
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return bad(format!("associativity fails on ({a}, {b}, {c})"));
                    }
                }
            }
        }
        for (name, elems) in &self.subgroups {
            let closed = elems.contains(&self.identity)
                && elems.iter().all(|&a| {
                    a < n
                        && elems.contains(&self.inverse[a])
                        && elems.iter().all(|&b| elems.contains(&self.mul(a, b)))
                });
            if !closed {
                return bad(format!("subgroup {name} is not closed"));
            }
        }
        Ok(())
    }

    pub fn with_subgroup(mut self, name: impl Into<String>, mut elems: Vec<usize>) -> Result<GroupPresentation> {
        elems.sort_unstable();
        elems.dedup();
        self.subgroups.insert(name.into(), elems);
        self.validate()?;
        Ok(self)
    }

    pub fn subgroup(&self, name: &str) -> Option<&[usize]> {
        self.subgroups.get(name).map(Vec::as_slice)
    }

    /// The index set of `⟨gens⟩`.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut set = vec![self.identity];
        let mut i = 0;
        while i < set.len() {
            for &g in gens {
                let x = self.mul(set[i], g);
                if !set.contains(&x) {
                    set.push(x);
                }
            }
            i += 1;
        }
        set.sort_unstable();
        set
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Conjugacy classes, each sorted, ordered by smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if seen[a] {
                continue;
            }
            let mut class: Vec<usize> = (0..n)
                .map(|g| self.mul(self.mul(g, a), self.inverse[g]))
                .collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// `C_G(a)` as sorted indices.
    pub fn centralizer(&self, a: usize) -> Vec<usize> {
        (0..self.order()).filter(|&g| self.mul(g, a) == self.mul(a, g)).collect()
    }

    /// The subgroup given by `elems` as a presentation of its own, with the
    /// embedding into `self`.
    pub fn restrict(&self, name: impl Into<String>, elems: &[usize]) -> Result<(GroupPresentation, Vec<usize>)> {
        let pos = |x: usize| {
            elems
                .iter()
                .position(|&e| e == x)
                .ok_or_else(|| Error::Precondition("subset is not closed under multiplication".into()))
        };
        let table = elems
            .iter()
            .map(|&a| elems.iter().map(|&b| pos(self.mul(a, b))).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let labels = elems.iter().map(|&a| self.labels[a].clone()).collect();
        Ok((GroupPresentation::from_table(name, labels, table)?, elems.to_vec()))
    }

    /// The trivial group.
    pub fn trivial() -> GroupPresentation {
        GroupPresentation::from_table("1", vec!["1".into()], vec![vec![0]]).expect("trivial group")
    }

    /// `Z_n` with elements `g^k`.
    pub fn cyclic(n: usize) -> GroupPresentation {
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let mut g = GroupPresentation::from_table(format!("Z{n}"), labels, table).expect("cyclic group");
        for d in 1..=n {
            if n % d == 0 && d != 1 && d != n {
                let elems: Vec<usize> = (0..n).filter(|k| k % (n / d) == 0).collect();
                g.subgroups.insert(format!("Z{d}"), elems);
            }
        }
        g.subgroups.insert("1".into(), vec![0]);
        g.subgroups.insert(format!("Z{n}"), (0..n).collect());
        g
    }

    /// `S_3` as permutations of `{1,2,3}` composed right to left.
    ///
    /// Named subgroups: `1`, `A3`, `S2` (generated by `(12)`), `S3`.
    pub fn symmetric3() -> GroupPresentation {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [2, 1, 0], [0, 2, 1]];
        let labels = ["e", "(123)", "(132)", "(12)", "(13)", "(23)"];
        let compose = |a: &[usize; 3], b: &[usize; 3]| -> [usize; 3] { [a[b[0]], a[b[1]], a[b[2]]] };
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        let c = compose(a, b);
                        perms.iter().position(|p| *p == c).expect("S3 is closed")
                    })
                    .collect()
            })
            .collect();
        let mut g = GroupPresentation::from_table("S3", labels.iter().map(|s| s.to_string()).collect(), table)
            .expect("S3");
        g.subgroups.insert("1".into(), vec![0]);
        g.subgroups.insert("A3".into(), vec![0, 1, 2]);
        g.subgroups.insert("S2".into(), vec![0, 3]);
        g.subgroups.insert("S3".into(), (0..6).collect());
        g
    }
}

fn one() -> CycScalar {
    CycScalar::one()
}

/// The group algebra `kG`: `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(g: &GroupPresentation) -> Result<HopfAlgebra> {
    g.validate()?;
    let n = g.order();
    let mut mult = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            mult.push((a, b, g.mul(a, b), one()));
        }
    }
    let comult = (0..n).map(|a| (a, a, a, one())).collect();
    let antipode: Vec<Vector> = (0..n).map(|a| unit_vec(n, g.inverse[a])).collect();
    let h = HopfAlgebra::from_data(HopfData {
        name: format!("k{}", g.name),
        labels: g.labels.clone(),
        conductor: 1,
        mult,
        unit: unit_vec(n, g.identity),
        comult,
        counit: vec![one(); n],
        antipode,
    })?;
    Ok(h)
}

/// The function algebra `k^G` in the basis of point indicators `e_g`:
/// `e_a e_b = δ_{ab} e_a`, `Δ(e_g) = Σ_{ab=g} e_a ⊗ e_b`, `S(e_g) = e_{g⁻¹}`.
pub fn dual_group_algebra(g: &GroupPresentation) -> Result<HopfAlgebra> {
    g.validate()?;
    let n = g.order();
    let mult = (0..n).map(|a| (a, a, a, one())).collect();
    let mut comult = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            comult.push((g.mul(a, b), a, b, one()));
        }
    }
    let antipode: Vec<Vector> = (0..n).map(|a| unit_vec(n, g.inverse[a])).collect();
    HopfAlgebra::from_data(HopfData {
        name: format!("k^{}", g.name),
        labels: g.labels.iter().map(|l| format!("{l}*")).collect(),
        conductor: 1,
        mult,
        unit: vec![one(); n],
        comult,
        counit: unit_vec(n, g.identity),
        antipode,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_table_is_a_nonabelian_group() {
        let g = GroupPresentation::symmetric3();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.conjugacy_classes().len(), 3);
        assert_eq!(g.generated(&[1]), vec![0, 1, 2]);
    }

    #[test]
    fn bad_table_is_rejected() {
        let labels = vec!["a".into(), "b".into()];
        assert!(GroupPresentation::from_table("x", labels, vec![vec![0, 1], vec![1, 1]]).is_err());
    }

    #[test]
    fn dual_group_algebra_is_dual_of_group_algebra() {
        let g = GroupPresentation::symmetric3();
        let kg = group_algebra(&g).unwrap();
        let fg = dual_group_algebra(&g).unwrap();
        assert_eq!(kg.dual(), fg);
        assert_eq!(fg.dual(), kg);
    }
}
