//! The Drinfeld double `D(A) = A^{*cop} ⋈ A`, its R-matrix and modular data,
//! Müger centralizers, and the theorem verification suite.
//!
//! The basis of `D(A)` is `b_p^* ⋈ b_q`, stored at index `p·n + q`.

mod context;
mod modules;
mod smatrix;
mod verify;

pub use context::{DoubleContext, ModularReport, TwistConvention};
pub use modules::{
    dual_module_model, dual_side_module, fourier_check, module_on_k, module_on_k_with, restrict_to_submodule,
    DualSideConvention, FourierComponent, FourierReport, ModuleConvention,
};
pub use smatrix::{centralizer, SMatrix, SMatrixReport};
pub use verify::{verify_theorem, Case, Hypothesis, Report, TheoremId, TheoremInputs, Verdict};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::{tensor3_add, HopfAlgebra, HopfData, Tensor2, Tensor3};
use crate::linalg::{axpy, zero_vec, Matrix, Subspace, Vector};
use crate::scalars::CycScalar;

/// Which formula produced the antipode of the double.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AntipodeConvention {
    /// `S(f ⋈ a) = (ε ⋈ S⁻¹a)(S*⁻¹f ⋈ 1)`, the antipodes of `A` and `A^{*cop}` in reverse order.
    InverseBoth,
    /// `S(f ⋈ a) = (ε ⋈ Sa)(S*f ⋈ 1)`.
    DirectBoth,
    /// `S(f ⋈ a) = (ε ⋈ S⁻¹a)(S*f ⋈ 1)`.
    InverseOnA,
    /// `S(f ⋈ a) = (ε ⋈ Sa)(S*⁻¹f ⋈ 1)`.
    InverseOnDual,
}

/// A Hopf algebra with an R-matrix.
#[derive(Clone, Debug)]
pub struct QuasitriangularHopf {
    pub hopf: HopfAlgebra,
    pub r: Tensor2,
    pub antipode_convention: AntipodeConvention,
}

/// Failures of the R-matrix axioms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RMatrixReport {
    /// `RΔ(x) = Δ^cop(x)R`, checked on a generating set.
    pub intertwines_coproduct: bool,
    /// `(Δ ⊗ id)(R) = R₁₃R₂₃`.
    pub first_leg: bool,
    /// `(id ⊗ Δ)(R) = R₁₃R₁₂`.
    pub second_leg: bool,
    /// `(ε ⊗ id)(R) = 1 = (id ⊗ ε)(R)`.
    pub counit: bool,
}

impl RMatrixReport {
    pub fn is_valid(&self) -> bool {
        self.intertwines_coproduct && self.first_leg && self.second_leg && self.counit
    }
}

fn embed3(t: &Tensor2, unit: &[CycScalar], slot: usize) -> Tensor3 {
    let mut out = Tensor3::new();
    for ((a, b), c) in t {
        for (u, x) in unit.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let key = match slot {
                0 => (u, *a, *b),
                1 => (*a, u, *b),
                _ => (*a, *b, u),
            };
            tensor3_add(&mut out, key, c * x);
        }
    }
    out
}

impl QuasitriangularHopf {
    /// `R₂₁`.
    pub fn r21(&self) -> Tensor2 {
        self.r.iter().map(|((i, j), c)| ((*j, *i), c.clone())).collect()
    }

    /// Checks the four R-matrix axioms exactly.
    pub fn verify_r(&self) -> RMatrixReport {
        let h = &self.hopf;
        let unit = h.unit();
        let intertwines_coproduct = h.generators().iter().all(|&g| {
            let x = h.basis(g);
            h.mul_tensor(&self.r, &h.comul(&x)) == h.mul_tensor(&h.comul_cop(&x), &self.r)
        });
        let r13 = embed3(&self.r, unit, 1);
        let r23 = embed3(&self.r, unit, 0);
        let r12 = embed3(&self.r, unit, 2);
        let first_leg = h.comul_first(&self.r) == h.mul_tensor3(&r13, &r23);
        let second_leg = h.comul_second(&self.r) == h.mul_tensor3(&r13, &r12);
        let n = h.dim();
        let mut left = zero_vec(n);
        let mut right = zero_vec(n);
        for ((i, j), c) in &self.r {
            left[*j].add_mul(c, &h.counit()[*i]);
            right[*i].add_mul(c, &h.counit()[*j]);
        }
        let counit = &left == unit && &right == unit;
        RMatrixReport {
            intertwines_coproduct,
            first_leg,
            second_leg,
            counit,
        }
    }

    /// `u = Σ S(R²)R¹`.
    pub fn drinfeld_element(&self) -> Vector {
        let h = &self.hopf;
        let mut u = zero_vec(h.dim());
        for ((i, j), c) in &self.r {
            let s = h.antipode_basis(*j);
            axpy(&mut u, c, &h.mul_right_basis(s, *i));
        }
        u
    }

    /// The matrix of `φ(f) = (id ⊗ f)(R₂₁R)`: column `t` is `φ(b_t^*)`.
    pub fn phi_matrix(&self) -> Matrix {
        let h = &self.hopf;
        let q = h.mul_tensor(&self.r21(), &self.r);
        let mut m = Matrix::zeros(h.dim(), h.dim());
        for ((i, t), c) in q {
            m[(i, t)] = c;
        }
        m
    }
}

/// Index of `b_p^* ⋈ b_q` in `D(A)`.
pub fn double_index(n: usize, p: usize, q: usize) -> usize {
    p * n + q
}

/// `f ⋈ a` as a vector of `D(A)`.
pub fn bowtie(f: &[CycScalar], a: &[CycScalar]) -> Vector {
    let n = a.len();
    let mut out = zero_vec(n * n);
    for (p, x) in f.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (q, y) in a.iter().enumerate() {
            if !y.is_zero() {
                out[p * n + q] = x * y;
            }
        }
    }
    out
}

/// `span{f ⋈ a : f ∈ F, a ∈ L}` inside `D(A)`.
pub fn bowtie_span(f: &Subspace, l: &Subspace) -> Subspace {
    let n = l.ambient();
    let mut vecs = Vec::with_capacity(f.dim() * l.dim());
    for x in f.basis() {
        for y in l.basis() {
            vecs.push(bowtie(x, y));
        }
    }
    Subspace::span(n * n, &vecs)
}

/// `a ↦ ε ⋈ a`.
pub fn include_a(a_alg: &HopfAlgebra, a: &[CycScalar]) -> Vector {
    bowtie(a_alg.counit(), a)
}

/// `f ↦ f ⋈ 1`.
pub fn include_dual(a_alg: &HopfAlgebra, f: &[CycScalar]) -> Vector {
    bowtie(f, a_alg.unit())
}

/// Matrix of `S*⁻¹` on `A*` (row `p` is `S*⁻¹(b_p^*)`), i.e. `f ↦ f ∘ S⁻¹`.
fn dual_antipode_rows(a: &HopfAlgebra, inverse: bool) -> Result<Vec<Vector>> {
    let n = a.dim();
    let rows: Vec<Vector> = if inverse {
        a.antipode_inverse_rows().ok_or(Error::NonInvertibleAntipode)?.clone()
    } else {
        (0..n).map(|i| a.antipode_basis(i).clone()).collect()
    };
    // (b_p^* ∘ T)(b_i) = T(b_i)[p], so b_p^* ∘ T = Σ_i rows[i][p] b_i^*
    Ok((0..n).map(|p| (0..n).map(|i| rows[i][p].clone()).collect()).collect())
}

/// Builds `D(A)` with its R-matrix `R = Σ (ε ⋈ b_i) ⊗ (b_i^* ⋈ 1)`.
///
/// The multiplication is `(g ⋈ a)(f ⋈ b) = g(a₁ ⇀ f ↼ S⁻¹a₃) ⋈ a₂b` with
/// `(a ⇀ f ↼ c)(x) = f(c x a)`. The antipode is taken from the first
/// [`AntipodeConvention`] under which the antipode identities hold.
pub fn drinfeld_double(a: &HopfAlgebra) -> Result<QuasitriangularHopf> {
    let n = a.dim();
    let dim = n * n;
    let ad = a.dual();
    let sinv = a.antipode_inverse_rows().ok_or(Error::NonInvertibleAntipode)?.clone();

    // twisted[(i, k)][v] = S⁻¹(b_k) b_v b_i
    let mut twisted: BTreeMap<(usize, usize), Vec<Vector>> = BTreeMap::new();
    let deltas: Vec<Tensor3> = (0..n).map(|q| a.comul2(&a.basis(q))).collect();
    for t in &deltas {
        for (i, _, k) in t.keys() {
            twisted.entry((*i, *k)).or_insert_with(|| {
                (0..n)
                    .map(|v| a.mul_right_basis(&a.mul_right_basis(&sinv[*k], v), *i))
                    .collect()
            });
        }
    }

    let mut mult: Vec<(usize, usize, usize, CycScalar)> = Vec::new();
    for q in 0..n {
        let mut acc: BTreeMap<(usize, usize, usize, usize, usize), CycScalar> = BTreeMap::new();
        for ((i, j, k), c) in &deltas[q] {
            let tw = &twisted[&(*i, *k)];
            for r in 0..n {
                for p in 0..n {
                    // f = b_p^* · Σ_v [S⁻¹(b_k) b_v b_i]_r b_v^*
                    let mut f: BTreeMap<usize, CycScalar> = BTreeMap::new();
                    for (v, w) in tw.iter().enumerate() {
                        let coeff = &w[r];
                        if coeff.is_zero() {
                            continue;
                        }
                        for (t, d) in ad.mult_basis(p, v) {
                            f.entry(*t).or_insert_with(CycScalar::zero).add_mul(coeff, d);
                        }
                    }
                    for (t, fc) in f {
                        if fc.is_zero() {
                            continue;
                        }
                        let cf = c * &fc;
                        for s in 0..n {
                            for (m, e) in a.mult_basis(*j, s) {
                                acc.entry((p, r, s, t, *m))
                                    .or_insert_with(CycScalar::zero)
                                    .add_mul(&cf, e);
                            }
                        }
                    }
                }
            }
        }
        for ((p, r, s, t, m), c) in acc {
            if !c.is_zero() {
                mult.push((p * n + q, r * n + s, t * n + m, c));
            }
        }
    }

    // Δ(b_p^* ⋈ b_q) = Σ m_ij^p d_q^{kl} (b_j^* ⋈ b_k) ⊗ (b_i^* ⋈ b_l)
    let mut comult = Vec::new();
    for p in 0..n {
        for q in 0..n {
            for (i, j, c) in ad.comult_basis(p) {
                for (k, l, d) in a.comult_basis(q) {
                    comult.push((p * n + q, j * n + k, i * n + l, c * d));
                }
            }
        }
    }
    let unit = bowtie(a.counit(), a.unit());
    let counit = bowtie(a.unit(), a.counit());
    let labels: Vec<String> = (0..n)
        .flat_map(|p| (0..n).map(move |q| (p, q)))
        .map(|(p, q)| format!("{}*⋈{}", a.labels()[p], a.labels()[q]))
        .collect();
    let placeholder: Vec<Vector> = (0..dim).map(|i| crate::linalg::unit_vec(dim, i)).collect();
    let mut data = HopfData {
        name: format!("D({})", a.name()),
        labels,
        conductor: a.conductor(),
        mult,
        unit,
        comult,
        counit,
        antipode: placeholder,
    };
    let base = HopfAlgebra::from_data(HopfData {
        name: data.name.clone(),
        labels: data.labels.clone(),
        conductor: data.conductor,
        mult: data.mult.clone(),
        unit: data.unit.clone(),
        comult: data.comult.clone(),
        counit: data.counit.clone(),
        antipode: data.antipode.clone(),
    })?;

    let conventions = [
        AntipodeConvention::InverseBoth,
        AntipodeConvention::DirectBoth,
        AntipodeConvention::InverseOnA,
        AntipodeConvention::InverseOnDual,
    ];
    for conv in conventions {
        let (inv_a, inv_dual) = match conv {
            AntipodeConvention::InverseBoth => (true, true),
            AntipodeConvention::DirectBoth => (false, false),
            AntipodeConvention::InverseOnA => (true, false),
            AntipodeConvention::InverseOnDual => (false, true),
        };
        let sa: Vec<Vector> = if inv_a {
            sinv.clone()
        } else {
            (0..n).map(|i| a.antipode_basis(i).clone()).collect()
        };
        let sd = dual_antipode_rows(a, inv_dual)?;
        let antipode: Vec<Vector> = (0..n)
            .flat_map(|p| (0..n).map(move |q| (p, q)))
            .map(|(p, q)| {
                let left = include_a(a, &sa[q]);
                let right = include_dual(a, &sd[p]);
                base.mul(&left, &right)
            })
            .collect();
        let candidate = HopfAlgebra::from_data(HopfData {
            name: data.name.clone(),
            labels: data.labels.clone(),
            conductor: data.conductor,
            mult: data.mult.clone(),
            unit: data.unit.clone(),
            comult: data.comult.clone(),
            counit: data.counit.clone(),
            antipode: antipode.clone(),
        })?;
        if antipode_identities_hold(&candidate) {
            data.antipode = antipode;
            let hopf = HopfAlgebra::from_data(data)?;
            let r = r_matrix(a);
            return Ok(QuasitriangularHopf {
                hopf,
                r,
                antipode_convention: conv,
            });
        }
    }
    Err(Error::InternalConsistency(format!(
        "no antipode convention satisfies the antipode identities on D({})",
        a.name()
    )))
}

fn antipode_identities_hold(h: &HopfAlgebra) -> bool {
    let n = h.dim();
    (0..n).all(|i| {
        let mut left = zero_vec(n);
        let mut right = zero_vec(n);
        for (j, k, c) in h.comult_basis(i) {
            axpy(&mut left, c, &h.mul_right_basis(h.antipode_basis(*j), *k));
            axpy(&mut right, c, &h.mul_left_basis(*j, h.antipode_basis(*k)));
        }
        let expect = crate::linalg::scale_vec(&h.counit()[i], h.unit());
        left == expect && right == expect
    })
}

/// `R = Σ_i (ε ⋈ b_i) ⊗ (b_i^* ⋈ 1)`.
fn r_matrix(a: &HopfAlgebra) -> Tensor2 {
    let n = a.dim();
    let mut r = Tensor2::new();
    for i in 0..n {
        let left = include_a(a, &a.basis(i));
        let right = include_dual(a, &crate::linalg::unit_vec(n, i));
        for (k, v) in HopfAlgebra::outer(&left, &right) {
            crate::hopf::tensor_add(&mut r, k, v);
        }
    }
    r
}
