//! `D(A)`-modules built from `A` and `A*`, and the Fourier transform between them.

use serde::Serialize;

use super::dual_antipode_rows;
use crate::error::{Error, Result};
use crate::hopf::{adjoint_module, integral, HopfAlgebra, Variant};
use crate::linalg::{dot, Matrix, Subspace, Vector};
use crate::repthy::{IrrDecomposition, Representation};

/// How `A*` enters the action `(f ⋈ a)x = ad(a)(x) ↼ T(f)` on a normal Hopf subalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleConvention {
    /// `T = S⁻¹`.
    InverseAntipode,
    /// `T = S`.
    Antipode,
}

/// `x ↼ f = f(x₁)x₂` on the echelon basis of `k`, for `f` in dual coordinates.
fn right_hit_matrix(a: &HopfAlgebra, k: &Subspace, f: &[crate::scalars::CycScalar]) -> Result<Matrix> {
    let r = k.dim();
    let n = a.dim();
    let mut cols = Vec::with_capacity(r);
    for v in k.basis() {
        let mut img = crate::linalg::zero_vec(n);
        for ((i, j), c) in a.comul(v) {
            if !f[i].is_zero() {
                img[j].add_mul(&c, &f[i]);
            }
        }
        cols.push(
            k.coords(&img)
                .ok_or_else(|| Error::Precondition("subspace is not a right coideal".into()))?,
        );
    }
    Ok(Matrix::from_cols(&cols, r))
}

/// Restricts a module to an invariant subspace, in the echelon basis of `w`.
pub fn restrict_to_submodule(m: &Representation, w: &Subspace) -> Result<Representation> {
    let r = w.dim();
    let mut action = Vec::with_capacity(m.actions().len());
    for x in m.actions() {
        let mut cols = Vec::with_capacity(r);
        for v in w.basis() {
            cols.push(
                w.coords(&x.mul_vec(v))
                    .ok_or_else(|| Error::Precondition("subspace is not a submodule".into()))?,
            );
        }
        action.push(Matrix::from_cols(&cols, r));
    }
    Ok(Representation::new(r, action))
}

/// `(f ⋈ a)x = a₁xS(a₂) ↼ T(f)` on `K`, with `T` fixed by `convention`.
pub fn module_on_k_with(a: &HopfAlgebra, k: &Subspace, convention: ModuleConvention) -> Result<Representation> {
    let n = a.dim();
    let ad = adjoint_module(a, k)?;
    let t_rows = dual_antipode_rows(a, convention == ModuleConvention::InverseAntipode)?;
    let hits: Vec<Matrix> = t_rows
        .iter()
        .map(|f| right_hit_matrix(a, k, f))
        .collect::<Result<_>>()?;
    let mut action = Vec::with_capacity(n * n);
    for hit in &hits {
        for q in 0..n {
            action.push(hit.mul(ad.action(q)));
        }
    }
    Ok(Representation::new(k.dim(), action))
}

/// The `D(A)`-module structure on a normal Hopf subalgebra `K`:
/// `(f ⋈ a)x = a₁xS(a₂) ↼ S⁻¹f`.
///
/// The module axioms are verified over `d = D(A)`. When `S² = id` the
/// variant with `Sf` in place of `S⁻¹f` is built too and must agree.
pub fn module_on_k(a: &HopfAlgebra, d: &HopfAlgebra, k: &Subspace) -> Result<Representation> {
    let m = module_on_k_with(a, k, ModuleConvention::InverseAntipode)?;
    if !m.is_module_over(d) {
        return Err(Error::InternalConsistency(
            "adjoint-and-hit action on K violates the module axioms".into(),
        ));
    }
    if a.antipode_is_involutive() && module_on_k_with(a, k, ModuleConvention::Antipode)? != m {
        return Err(Error::InternalConsistency(
            "the S and S⁻¹ forms of the action differ although S² = id".into(),
        ));
    }
    Ok(m)
}

/// `D(A)` acting on `A*` by `(f ⋈ a)g = f(a₁ ⇀ g ↼ S(a₂))`, the trivial
/// `A`-module induced to `D(A)`.
pub fn dual_module_model(a: &HopfAlgebra, d: &HopfAlgebra) -> Result<Representation> {
    let n = a.dim();
    let ad = a.dual();
    // conj[q][(m, t)] = Σ c [S(b_k) b_m b_j]_t over Δ(b_q) = Σ c b_j ⊗ b_k
    let mut conj = Vec::with_capacity(n);
    for q in 0..n {
        let mut mat = Matrix::zeros(n, n);
        for (j, k, c) in a.comult_basis(q) {
            let sk = a.antipode_basis(*k);
            for m in 0..n {
                let w = a.mul_right_basis(&a.mul_right_basis(sk, m), *j);
                for (t, x) in w.iter().enumerate() {
                    if !x.is_zero() {
                        mat[(m, t)].add_mul(c, x);
                    }
                }
            }
        }
        conj.push(mat);
    }
    let left: Vec<Matrix> = (0..n).map(|p| ad.left_mult_matrix(&ad.basis(p))).collect();
    let mut action = Vec::with_capacity(n * n);
    for l in &left {
        for c in &conj {
            action.push(l.mul(c));
        }
    }
    let m = Representation::new(n, action);
    if !m.is_module_over(d) {
        return Err(Error::InternalConsistency("induced module on A* violates the module axioms".into()));
    }
    Ok(m)
}

/// How the dual-side module on `A*` was assembled: `A*` by an adjoint
/// action, `A` by translation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DualSideConvention {
    /// `(f ⋈ a)g = f₁(g ↼ Sa)S(f₂)`.
    AdjointRightHit,
    /// `(f ⋈ a)g = f₂(g ↼ Sa)S⁻¹(f₁)`.
    CoppedAdjointRightHit,
    /// `(f ⋈ a)g = f₁(a ⇀ g)S(f₂)`.
    AdjointLeftHit,
    /// `(f ⋈ a)g = f₂(a ⇀ g)S⁻¹(f₁)`.
    CoppedAdjointLeftHit,
}

/// The `D(A)`-module on `A*` in which `A*` acts by its adjoint action and `A`
/// by translation, mirroring the module on `K` under `D(A) ≅ D(A^{*op cop})^op`.
///
/// The first convention satisfying the module axioms is used; normal Hopf
/// subalgebras `(A//L)*` of `A*` are submodules of it.
pub fn dual_side_module(a: &HopfAlgebra, d: &HopfAlgebra) -> Result<(Representation, DualSideConvention)> {
    let n = a.dim();
    let ad = a.dual();
    let adcop = ad.variant(Variant::Cop)?;
    let full = Subspace::full(n);
    let adj = adjoint_module(&ad, &full)?;
    let adj_cop = adjoint_module(&adcop, &full)?;
    let right_hit: Vec<Matrix> = (0..n)
        .map(|q| {
            let sq = a.antipode_basis(q);
            let cols: Vec<Vector> = (0..n)
                .map(|t| {
                    // (g ↼ c)(b_m) = g(c b_m): column for g = b_t^*
                    (0..n).map(|m| a.mul_right_basis(sq, m)[t].clone()).collect()
                })
                .collect();
            Matrix::from_cols(&cols, n)
        })
        .collect();
    let left_hit: Vec<Matrix> = (0..n)
        .map(|q| {
            let cols: Vec<Vector> = (0..n)
                .map(|t| (0..n).map(|m| a.mul_left_basis(m, &a.basis(q))[t].clone()).collect())
                .collect();
            Matrix::from_cols(&cols, n)
        })
        .collect();
    let candidates = [
        (DualSideConvention::AdjointRightHit, &adj, &right_hit),
        (DualSideConvention::CoppedAdjointRightHit, &adj_cop, &right_hit),
        (DualSideConvention::AdjointLeftHit, &adj, &left_hit),
        (DualSideConvention::CoppedAdjointLeftHit, &adj_cop, &left_hit),
    ];
    for (conv, adjoint, hit) in candidates {
        let mut action = Vec::with_capacity(n * n);
        for p in 0..n {
            for h in hit.iter() {
                action.push(adjoint.action(p).mul(h));
            }
        }
        let m = Representation::new(n, action);
        if m.is_module_over(d) {
            return Ok((m, conv));
        }
    }
    Err(Error::InternalConsistency(
        "no adjoint-and-translation action on A* satisfies the module axioms".into(),
    ))
}

/// One homogeneous component `V_j` of `A` matched with `F(V_j) = A*E_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FourierComponent {
    /// Index of the simple `D(A)`-module.
    pub simple: usize,
    pub dim: usize,
    /// `E_j` is a cocommutative idempotent, i.e. an idempotent of `C(A)`.
    pub idempotent_in_character_ring: bool,
    /// `F(V_j) = A*E_j`.
    pub image_is_ideal: bool,
    /// `p_{V_j} = S(E_j)`.
    pub indicator_is_antipode_of_idempotent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FourierReport {
    /// `F(1) = t`.
    pub unit_maps_to_integral: bool,
    pub injective: bool,
    /// `F((f ⋈ a)·b) = (f ⋈ a)·F(b)` on all basis elements.
    pub intertwines: bool,
    pub components: Vec<FourierComponent>,
    /// The `E_j` sum to `ε` and there is one per central primitive idempotent of `C(A)`.
    pub complete: bool,
}

impl FourierReport {
    pub fn is_valid(&self) -> bool {
        self.unit_maps_to_integral
            && self.injective
            && self.intertwines
            && self.complete
            && self.components.iter().all(|c| {
                c.idempotent_in_character_ring && c.image_is_ideal && c.indicator_is_antipode_of_idempotent
            })
    }
}

/// Checks that `F: a ↦ a ⇀ t` intertwines the module on `A` with the induced
/// module on `A*`, and matches the homogeneous components `V_j ↔ A*E_j` with
/// `p_{V_j} = S(E_j)`.
pub fn fourier_check(a: &HopfAlgebra, d: &HopfAlgebra, dec: &IrrDecomposition) -> Result<FourierReport> {
    let n = a.dim();
    let ad = a.dual();
    let t = integral(&ad)?;
    // F(b_q)[m] = t(b_m b_q)
    let cols: Vec<Vector> = (0..n)
        .map(|q| (0..n).map(|m| dot(&t, &a.mul_right_basis(&a.basis(m), q))).collect())
        .collect();
    let f = Matrix::from_cols(&cols, n);
    let unit_maps_to_integral = f.mul_vec(a.unit()) == t;
    let injective = f.rank() == n;

    let on_a = module_on_k(a, d, &Subspace::full(n))?;
    let on_dual = dual_module_model(a, d)?;
    let intertwines = (0..d.dim()).all(|x| f.mul(on_a.action(x)) == on_dual.action(x).mul(&f));

    let eps = a.counit();
    let mut components = Vec::new();
    let mut sum = crate::linalg::zero_vec(n);
    for j in 0..dec.rank() {
        let proj = on_a.act(&dec.idempotents[j]);
        if proj.is_zero() {
            continue;
        }
        let v = Subspace::span(n, &proj.transpose().to_rows());
        let image = v.image(&f);
        let e = on_dual.act(&dec.idempotents[j]).mul_vec(eps);
        crate::linalg::axpy(&mut sum, &crate::scalars::CycScalar::one(), &e);
        let cocommutative = (0..n).all(|i| {
            (0..n).all(|k| dot(&e, &a.mul_right_basis(&a.basis(i), k)) == dot(&e, &a.mul_right_basis(&a.basis(k), i)))
        });
        let idempotent = ad.mul(&e, &e) == e;
        let ideal_vecs: Vec<Vector> = (0..n).map(|p| ad.mul(&ad.basis(p), &e)).collect();
        let image_is_ideal = Subspace::span(n, &ideal_vecs) == image;
        let p: Vector = (0..n).map(|m| dot(eps, &proj.col(m))).collect();
        components.push(FourierComponent {
            simple: j,
            dim: v.dim(),
            idempotent_in_character_ring: cocommutative && idempotent,
            image_is_ideal,
            indicator_is_antipode_of_idempotent: p == ad.antipode(&e),
        });
    }
    let complete = &sum == eps && components.len() == character_ring_center_dim(a, &ad);
    Ok(FourierReport {
        unit_maps_to_integral,
        injective,
        intertwines,
        components,
        complete,
    })
}

/// Dimension of the center of the character ring `C(A) ⊆ A*`.
fn character_ring_center_dim(a: &HopfAlgebra, ad: &HopfAlgebra) -> usize {
    let c = crate::repthy::character_ring(a);
    let r = c.dim();
    let n = a.dim();
    // unknown coordinates y ∈ k^r of z = Σ y_i c_i; equations z x − x z = 0 for x in the basis of C
    let mut rows: Vec<Vector> = Vec::new();
    for x in c.basis() {
        let cols: Vec<Vector> = c
            .basis()
            .iter()
            .map(|ci| crate::linalg::sub_vec(&ad.mul(ci, x), &ad.mul(x, ci)))
            .collect();
        rows.extend(Matrix::from_cols(&cols, n).to_rows());
    }
    if rows.is_empty() {
        return r;
    }
    Matrix::from_rows(&rows, r).nullspace().len()
}
