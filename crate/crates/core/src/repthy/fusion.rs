//! Fusion subcategories of `Rep(A)` as index sets of simples.

use serde::Serialize;

use super::{coideal_integral, FusionRules, IrrDecomposition, Representation};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{dot, Subspace};

/// A fusion subcategory, stored as the sorted indices of its simples.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct FusionSubcategory {
    indices: Vec<usize>,
}

impl FusionSubcategory {
    /// Wraps an index set without checking closure.
    pub fn from_indices(mut indices: Vec<usize>) -> FusionSubcategory {
        indices.sort_unstable();
        indices.dedup();
        FusionSubcategory { indices }
    }

    pub fn trivial() -> FusionSubcategory {
        FusionSubcategory { indices: vec![0] }
    }

    pub fn everything(rank: usize) -> FusionSubcategory {
        FusionSubcategory {
            indices: (0..rank).collect(),
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn fpdim(&self, dec: &IrrDecomposition) -> u64 {
        dec.fpdim(&self.indices)
    }

    pub fn intersect(&self, other: &FusionSubcategory) -> FusionSubcategory {
        FusionSubcategory {
            indices: self.indices.iter().copied().filter(|i| other.contains(*i)).collect(),
        }
    }

    /// The smallest fusion subcategory containing both.
    pub fn join(&self, other: &FusionSubcategory, dec: &IrrDecomposition, rules: &FusionRules) -> FusionSubcategory {
        let mut seed = self.indices.clone();
        seed.extend_from_slice(&other.indices);
        fusion_closure(&seed, dec, rules)
    }

    /// Contains the unit, closed under duals and under fusion.
    pub fn is_closed(&self, dec: &IrrDecomposition, rules: &FusionRules) -> bool {
        self.contains(0)
            && self.indices.iter().all(|&i| self.contains(dec.dual_map[i]))
            && self.indices.iter().all(|&i| {
                self.indices
                    .iter()
                    .all(|&j| rules.constituents(i, j).all(|k| self.contains(k)))
            })
    }

    pub fn is_subcategory_of(&self, other: &FusionSubcategory) -> bool {
        self.indices.iter().all(|&i| other.contains(i))
    }

    fn from_mask(mask: u64) -> FusionSubcategory {
        FusionSubcategory {
            indices: (0..64).filter(|i| mask & (1 << i) != 0).collect(),
        }
    }
}

/// The smallest fusion subcategory containing `seed`.
pub fn fusion_closure(seed: &[usize], dec: &IrrDecomposition, rules: &FusionRules) -> FusionSubcategory {
    let mut set = vec![false; dec.rank()];
    set[0] = true;
    for &i in seed {
        set[i] = true;
    }
    loop {
        let current: Vec<usize> = (0..set.len()).filter(|&i| set[i]).collect();
        let mut changed = false;
        for &i in &current {
            let d = dec.dual_map[i];
            if !set[d] {
                set[d] = true;
                changed = true;
            }
            for &j in &current {
                for k in rules.constituents(i, j) {
                    if !set[k] {
                        set[k] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return FusionSubcategory::from_indices(current);
        }
    }
}

/// `⟨M⟩`: the fusion subcategory generated by the constituents of `M`.
pub fn generated_subcategory(m: &Representation, dec: &IrrDecomposition, rules: &FusionRules) -> FusionSubcategory {
    let chi = m.character();
    let seed: Vec<usize> = (0..dec.rank())
        .filter(|&j| !dot(&chi, &dec.idempotents[j]).is_zero())
        .collect();
    fusion_closure(&seed, dec, rules)
}

/// `Rep(A//L)`: the simples on which `L` acts trivially.
///
/// Decided twice, by `χ_j(x) = ε(x)deg_j` on a basis of `L` and by
/// `χ_j(Λ_L) = deg_j` for the idempotent integral of `L`; disagreement is an error.
pub fn rep_trivial_on(h: &HopfAlgebra, l: &Subspace, dec: &IrrDecomposition) -> Result<FusionSubcategory> {
    let lambda = coideal_integral(h, l)?;
    let mut indices = Vec::new();
    for j in 0..dec.rank() {
        let deg = crate::scalars::CycScalar::from_int(dec.degrees[j] as i64);
        let by_basis = l
            .basis()
            .iter()
            .all(|x| dec.eval(j, x) == &h.eps(x) * &deg);
        let by_integral = dec.eval(j, &lambda) == deg;
        if by_basis != by_integral {
            return Err(Error::InternalConsistency(format!(
                "triviality tests disagree on simple {j}"
            )));
        }
        if by_basis {
            indices.push(j);
        }
    }
    Ok(FusionSubcategory::from_indices(indices))
}

/// All fusion subcategories, sorted by size then indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lattice {
    pub subcategories: Vec<FusionSubcategory>,
    /// Whether every subset of simples was closed individually (as opposed to
    /// joining singleton closures).
    pub exhaustive: bool,
}

/// Largest rank for which every subset of simples is closed individually.
pub const EXHAUSTIVE_RANK: usize = 16;
/// Largest rank accepted at all.
pub const MAX_RANK: usize = 22;

pub fn enumerate_fusion_subcategories(dec: &IrrDecomposition, rules: &FusionRules) -> Result<Lattice> {
    let s = dec.rank();
    if s > MAX_RANK {
        return Err(Error::BoundExceeded(format!(
            "{s} simples exceed the enumeration bound {MAX_RANK}"
        )));
    }
    // closure on bitmasks
    let dual: Vec<u64> = (0..s).map(|i| 1u64 << dec.dual_map[i]).collect();
    let prod: Vec<Vec<u64>> = (0..s)
        .map(|i| {
            (0..s)
                .map(|j| rules.constituents(i, j).fold(0u64, |m, k| m | (1 << k)))
                .collect()
        })
        .collect();
    let close = |mut m: u64| -> u64 {
        m |= 1;
        loop {
            let mut next = m;
            for i in 0..s {
                if m & (1 << i) == 0 {
                    continue;
                }
                next |= dual[i];
                for j in 0..s {
                    if m & (1 << j) != 0 {
                        next |= prod[i][j];
                    }
                }
            }
            if next == m {
                return m;
            }
            m = next;
        }
    };
    let mut found = std::collections::BTreeSet::new();
    let exhaustive = s <= EXHAUSTIVE_RANK;
    if exhaustive {
        for sub in 0..(1u64 << (s - 1)) {
            found.insert(close((sub << 1) | 1));
        }
    } else {
        let singles: Vec<u64> = (0..s).map(|i| close(1 | (1 << i))).collect();
        found.extend(singles.iter().copied());
        loop {
            let current: Vec<u64> = found.iter().copied().collect();
            let mut grew = false;
            for &a in &current {
                for &b in &singles {
                    let j = close(a | b);
                    if found.insert(j) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
    }
    let mut subcategories: Vec<FusionSubcategory> = found.into_iter().map(FusionSubcategory::from_mask).collect();
    subcategories.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.indices.cmp(&b.indices)));
    Ok(Lattice {
        subcategories,
        exhaustive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::by_name;
    use crate::hopf::integral;
    use crate::repthy::{decompose, fusion_rules};

    #[test]
    fn s3_has_three_fusion_subcategories() {
        let (a, _) = by_name("kS3").unwrap();
        let dec = decompose(&a).unwrap();
        let rules = fusion_rules(&a, &dec, &integral(&a).unwrap()).unwrap();
        let lattice = enumerate_fusion_subcategories(&dec, &rules).unwrap();
        assert!(lattice.exhaustive);
        let fpdims: Vec<u64> = lattice.subcategories.iter().map(|k| k.fpdim(&dec)).collect();
        assert_eq!(lattice.subcategories.len(), 3);
        assert!(fpdims.contains(&1) && fpdims.contains(&2) && fpdims.contains(&6));
    }

    #[test]
    fn index_sets_are_sorted_and_deduplicated() {
        let k = FusionSubcategory::from_indices(vec![3, 0, 3, 1]);
        assert_eq!(k.indices(), &[0, 1, 3]);
        assert!(FusionSubcategory::trivial().is_subcategory_of(&k));
        assert_eq!(k.intersect(&FusionSubcategory::from_indices(vec![1, 2])).indices(), &[1]);
    }
}
