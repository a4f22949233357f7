//! Representation theory of semisimple Hopf algebras: Wedderburn blocks,
//! characters, fusion rules, kernels and fusion subcategories.

mod characters;
mod decompose;
mod fusion;
mod kernels;
mod lattice;

pub use characters::{
    character_ring, convolve, fusion_rules, multiplicity, FusionRules,
};
pub use decompose::{center, decompose, decompose_at, exponent, is_semisimple, max_conductor, IrrDecomposition};
pub use fusion::{
    enumerate_fusion_subcategories, fusion_closure, generated_subcategory, rep_trivial_on,
    FusionSubcategory, Lattice,
};
pub use kernels::{coideal_integral, grouplikes, hopf_kernel, left_kernel, subcoalgebra_of};
pub use lattice::{
    grothendieck_commutative, lattice_identities, normal_coideal_lattice, simple_left_kernels, CoidealEntry,
    IdentityTally, LatticeReport,
};

use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::scalars::CycScalar;

/// A finite-dimensional module, given by the action matrix of every basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    dim: usize,
    action: Vec<Matrix>,
}

impl Representation {
    pub fn new(dim: usize, action: Vec<Matrix>) -> Representation {
        Representation { dim, action }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `ρ(b_i)`.
    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// `ρ(x)` for an arbitrary element.
    pub fn act(&self, x: &[CycScalar]) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.action[i].scale(c));
            }
        }
        out
    }

    /// The character as a covector: `χ(b_i) = tr ρ(b_i)`.
    pub fn character(&self) -> Vector {
        self.action.iter().map(Matrix::trace).collect()
    }

    /// Checks `ρ(1) = id` and `ρ(b_i)ρ(g) = ρ(b_i g)` for all `i` and every generator `g`.
    pub fn is_module_over(&self, h: &HopfAlgebra) -> bool {
        if self.action.len() != h.dim() {
            return false;
        }
        if self.act(h.unit()) != Matrix::identity(self.dim) {
            return false;
        }
        let gens: Vec<usize> = if h.dim() <= 16 {
            (0..h.dim()).collect()
        } else {
            h.generators().to_vec()
        };
        for i in 0..h.dim() {
            for &g in &gens {
                let lhs = self.action[i].mul(&self.action[g]);
                let prod: Vector = h.mul(&h.basis(i), &h.basis(g));
                if lhs != self.act(&prod) {
                    return false;
                }
            }
        }
        true
    }

    pub fn direct_sum(&self, other: &Representation) -> Representation {
        let d = self.dim + other.dim;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(d, d);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        m[(i, j)] = a[(i, j)].clone();
                    }
                }
                for i in 0..other.dim {
                    for j in 0..other.dim {
                        m[(self.dim + i, self.dim + j)] = b[(i, j)].clone();
                    }
                }
                m
            })
            .collect();
        Representation::new(d, action)
    }

    /// The left regular module.
    pub fn regular(h: &HopfAlgebra) -> Representation {
        Representation::on_left_ideal(h, &Subspace::full(h.dim())).expect("A is a left ideal of itself")
    }

    /// `A` acting by left multiplication on a left ideal, in its echelon basis.
    pub fn on_left_ideal(h: &HopfAlgebra, ideal: &Subspace) -> Result<Representation> {
        let r = ideal.dim();
        let mut action = Vec::with_capacity(h.dim());
        for i in 0..h.dim() {
            let mut cols = Vec::with_capacity(r);
            for v in ideal.basis() {
                let img = h.mul_left_basis(i, v);
                cols.push(
                    ideal
                        .coords(&img)
                        .ok_or_else(|| Error::Precondition("subspace is not a left ideal".into()))?,
                );
            }
            action.push(Matrix::from_cols(&cols, r));
        }
        Ok(Representation::new(r, action))
    }

    /// The isotypic block `A·e_j`, which contains every simple of type `j`.
    pub fn isotypic(h: &HopfAlgebra, dec: &IrrDecomposition, j: usize) -> Representation {
        let e = &dec.idempotents[j];
        let vecs: Vec<Vector> = (0..h.dim()).map(|i| h.mul_left_basis(i, e)).collect();
        let ideal = Subspace::span(h.dim(), &vecs);
        Representation::on_left_ideal(h, &ideal).expect("A e is a left ideal")
    }

    /// Indices `j` with `ρ(e_j) ≠ 0`.
    pub fn constituents(&self, dec: &IrrDecomposition) -> Vec<usize> {
        (0..dec.rank())
            .filter(|&j| !self.act(&dec.idempotents[j]).is_zero())
            .collect()
    }
}
