//! Characters as functionals: the character ring, multiplicities and fusion rules.

use serde::Serialize;

use super::IrrDecomposition;
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{dot, zero_vec, Matrix, Subspace, Vector};
use crate::scalars::CycScalar;

/// Product in `A*`: `(fg)(a) = f(a_1) g(a_2)`.
pub fn convolve(h: &HopfAlgebra, f: &[CycScalar], g: &[CycScalar]) -> Vector {
    (0..h.dim())
        .map(|i| {
            let mut acc = CycScalar::zero();
            for (j, k, c) in h.comult_basis(i) {
                if f[*j].is_zero() || g[*k].is_zero() {
                    continue;
                }
                acc.add_mul(&(c * &f[*j]), &g[*k]);
            }
            acc
        })
        .collect()
}

/// `C(A) = {f ∈ A* : f(ab) = f(ba)}`, in dual coordinates.
pub fn character_ring(h: &HopfAlgebra) -> Subspace {
    let n = h.dim();
    let mut rows: Vec<Vector> = Vec::new();
    for i in 0..n {
        for &g in h.generators() {
            // f(b_i b_g − b_g b_i) = 0
            let mut row = zero_vec(n);
            for (k, c) in h.mult_basis(i, g) {
                row[*k] = &row[*k] + c;
            }
            for (k, c) in h.mult_basis(g, i) {
                row[*k] = &row[*k] - c;
            }
            if !crate::linalg::is_zero_vec(&row) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Subspace::full(n);
    }
    Subspace::span(n, &Matrix::from_rows(&rows, n).nullspace())
}

/// `m(χ, µ) = (χ* µ)(Λ)` with `χ* = χ ∘ S`, the dimension of `Hom(M, N)`.
pub fn multiplicity(h: &HopfAlgebra, chi: &[CycScalar], mu: &[CycScalar], lambda: &[CycScalar]) -> Result<u64> {
    let n = h.dim();
    let chi_star: Vector = (0..n).map(|i| dot(chi, h.antipode_basis(i))).collect();
    let v = dot(&convolve(h, &chi_star, mu), lambda);
    v.as_integer()
        .filter(|x| *x >= 0)
        .map(|x| x as u64)
        .ok_or_else(|| Error::InternalConsistency(format!("multiplicity {v} is not a nonnegative integer")))
}

/// Fusion coefficients `N_ij^k = m(χ_k, χ_i χ_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusionRules {
    pub rank: usize,
    /// `n[i][j][k]`.
    pub n: Vec<Vec<Vec<u64>>>,
}

impl FusionRules {
    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.n[i][j][k]
    }

    /// Indices `k` with `N_ij^k > 0`.
    pub fn constituents(&self, i: usize, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank).filter(move |&k| self.n[i][j][k] > 0)
    }
}

pub fn fusion_rules(h: &HopfAlgebra, dec: &IrrDecomposition, lambda: &[CycScalar]) -> Result<FusionRules> {
    let s = dec.rank();
    let dim = h.dim();
    let delta_lambda = h.comul(lambda);
    let duals: Vec<Vector> = dec
        .characters
        .iter()
        .map(|chi| (0..dim).map(|i| dot(chi, h.antipode_basis(i))).collect())
        .collect();
    let mut n = vec![vec![vec![0u64; s]; s]; s];
    for i in 0..s {
        for j in 0..s {
            let prod = convolve(h, &dec.characters[i], &dec.characters[j]);
            let mut total = 0u64;
            for k in 0..s {
                // same value as `multiplicity`, with Δ(Λ) computed once
                let mut v = CycScalar::zero();
                for ((a, b), c) in &delta_lambda {
                    if !duals[k][*a].is_zero() && !prod[*b].is_zero() {
                        v.add_mul(&(c * &duals[k][*a]), &prod[*b]);
                    }
                }
                let m = v
                    .as_integer()
                    .filter(|x| *x >= 0)
                    .map(|x| x as u64)
                    .ok_or_else(|| {
                        Error::InternalConsistency(format!("multiplicity {v} is not a nonnegative integer"))
                    })?;
                total += m * dec.degrees[k];
                n[i][j][k] = m;
            }
            if total != dec.degrees[i] * dec.degrees[j] {
                return Err(Error::InternalConsistency(format!(
                    "fusion of simples {i} and {j} has the wrong dimension"
                )));
            }
        }
    }
    Ok(FusionRules { rank: s, n })
}
