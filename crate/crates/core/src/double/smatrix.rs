//! The S-matrix of a factorizable Hopf algebra and Müger centralizers.

use num_rational::BigRational;
use serde::Serialize;

use crate::linalg::Matrix;
use crate::repthy::FusionSubcategory;
use crate::scalars::cyclotomic::gcd;
use crate::scalars::interval::abs_at_most;
use crate::scalars::CycScalar;

/// `s_ij = χ_i(φ(χ_j ∘ S))`, indexed by the simples of the decomposition it was built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SMatrix {
    pub entries: Matrix,
    pub degrees: Vec<u64>,
    pub dual_map: Vec<usize>,
}

/// Outcome of the S-matrix invariant checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SMatrixReport {
    pub unit_row_is_degrees: bool,
    pub symmetric: bool,
    pub dual_invariant: bool,
    pub invertible: bool,
    /// `|s_ij| ≤ deg_i deg_j` under every complex embedding, with certified intervals.
    pub bounded: bool,
    pub precision_bits: u32,
}

impl SMatrixReport {
    pub fn is_valid(&self) -> bool {
        self.unit_row_is_degrees && self.symmetric && self.dual_invariant && self.invertible && self.bounded
    }
}

impl SMatrix {
    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &CycScalar {
        &self.entries[(i, j)]
    }

    /// `s_ij = deg_i deg_j`, the exact centralizing test.
    pub fn centralize(&self, i: usize, j: usize) -> bool {
        let d = (self.degrees[i] * self.degrees[j]) as i64;
        *self.get(i, j) == CycScalar::from_int(d)
    }

    /// Checks every invariant; the bound is certified at `bits` of precision.
    pub fn check(&self, bits: u32) -> SMatrixReport {
        let s = self.rank();
        let unit_row_is_degrees = (0..s).all(|j| *self.get(0, j) == CycScalar::from_int(self.degrees[j] as i64));
        let symmetric = (0..s).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)));
        let dual_invariant =
            (0..s).all(|i| (0..s).all(|j| self.get(i, j) == self.get(self.dual_map[i], self.dual_map[j])));
        let invertible = self.entries.rank() == s;
        let bounded = self.within_bound(bits);
        SMatrixReport {
            unit_row_is_degrees,
            symmetric,
            dual_invariant,
            invertible,
            bounded,
            precision_bits: bits,
        }
    }

    fn within_bound(&self, bits: u32) -> bool {
        let s = self.rank();
        for i in 0..s {
            for j in 0..s {
                let v = self.get(i, j);
                let n = v.conductor();
                let b = BigRational::from_integer(((self.degrees[i] * self.degrees[j]) as i64).into());
                let all = (1..n.max(2) as u64)
                    .filter(|k| gcd(*k, n as u64) == 1 || n == 1)
                    .all(|k| abs_at_most(v, k as i64, &b, bits));
                if !all {
                    return false;
                }
            }
        }
        true
    }

    /// Entries in short notation, one row per line, comma separated.
    pub fn to_csv(&self) -> String {
        let s = self.rank();
        let mut out = String::new();
        for i in 0..s {
            let row: Vec<String> = (0..s).map(|j| self.get(i, j).to_short_string()).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// `K' = {i : s_ij = deg_i deg_j for all j ∈ K}`.
pub fn centralizer(k: &FusionSubcategory, s: &SMatrix) -> FusionSubcategory {
    let indices = (0..s.rank())
        .filter(|&i| k.indices().iter().all(|&j| s.centralize(i, j)))
        .collect();
    FusionSubcategory::from_indices(indices)
}

#[cfg(test)]
mod tests {
    use crate::double::DoubleContext;
    use crate::examples::by_name;
    use crate::repthy::FusionSubcategory;

    #[test]
    fn toric_code_table_is_signs() {
        let ctx = DoubleContext::new(&by_name("kZ2").unwrap().0).unwrap();
        let csv = ctx.s.to_csv();
        assert_eq!(csv.lines().count(), 4);
        assert!(csv.split([',', '\n']).filter(|t| !t.is_empty()).all(|t| t == "1" || t == "-1"));
        assert_eq!(csv.matches("-1").count(), 6);
    }

    #[test]
    fn centralizer_of_everything_is_trivial() {
        let ctx = DoubleContext::new(&by_name("kS3").unwrap().0).unwrap();
        let all = FusionSubcategory::everything(ctx.rank());
        assert_eq!(super::centralizer(&all, &ctx.s), FusionSubcategory::trivial());
        assert_eq!(super::centralizer(&FusionSubcategory::trivial(), &ctx.s), all);
    }
}
