//! Hopf kernels, left kernels, idempotent integrals of coideal subalgebras and grouplikes.

use super::{IrrDecomposition, Representation};
use crate::error::{Error, Result};
use crate::hopf::{classify_subspace, HopfAlgebra};
use crate::linalg::{axpy, zero_vec, Matrix, Subspace, Vector};
use crate::scalars::CycScalar;

/// The idempotent integral `Λ_L` of a left coideal subalgebra: `lΛ_L = ε(l)Λ_L` for `l ∈ L`, `ε(Λ_L) = 1`.
pub fn coideal_integral(h: &HopfAlgebra, l: &Subspace) -> Result<Vector> {
    let n = h.dim();
    let r = l.dim();
    let basis = l.basis();
    let mut rows: Vec<Vector> = Vec::new();
    for lb in basis {
        let e = h.eps(lb);
        let cols: Vec<Vector> = basis
            .iter()
            .map(|la| {
                let mut v = h.mul(lb, la);
                axpy(&mut v, &-&e, la);
                v
            })
            .collect();
        rows.extend(Matrix::from_cols(&cols, n).to_rows());
    }
    let sols = Matrix::from_rows(&rows, r).nullspace();
    if sols.len() != 1 {
        return Err(Error::NoSolution(format!(
            "coideal subalgebra has a {}-dimensional space of integrals",
            sols.len()
        )));
    }
    let lambda = l.combine(&sols[0]);
    let e = h.eps(&lambda);
    if e.is_zero() {
        return Err(Error::NoSolution("integral of the coideal subalgebra is killed by ε".into()));
    }
    let inv = e.inv()?;
    Ok(lambda.iter().map(|x| x * &inv).collect())
}

/// `LKer(M) = {a : a_1 ⊗ a_2 m = a ⊗ m ∀ m}`.
pub fn left_kernel(h: &HopfAlgebra, m: &Representation) -> Subspace {
    let n = h.dim();
    let d = m.dim();
    if d == 0 {
        return Subspace::full(n);
    }
    // unknowns x_i; equations indexed by (j, row r, module basis vector c)
    let mut system = Matrix::zeros(n * d * d, n);
    for i in 0..n {
        for (j, k, c) in h.comult_basis(i) {
            let rho = m.action(*k);
            for r in 0..d {
                for col in 0..d {
                    let v = &rho[(r, col)];
                    if !v.is_zero() {
                        let idx = (*j * d + r) * d + col;
                        system[(idx, i)] = &system[(idx, i)] + &(c * v);
                    }
                }
            }
        }
        for r in 0..d {
            let idx = (i * d + r) * d + r;
            system[(idx, i)] = &system[(idx, i)] - &CycScalar::one();
        }
    }
    Subspace::span(n, &system.nullspace())
}

/// The simple subcoalgebra `C_d = span{(id ⊗ f)Δ(d) : f ∈ A*}`.
pub fn subcoalgebra_of(h: &HopfAlgebra, d: &[CycScalar]) -> Subspace {
    let n = h.dim();
    let mut slices = vec![zero_vec(n); n];
    for ((j, k), c) in h.comul(d) {
        slices[k][j] = c;
    }
    Subspace::span(n, &slices)
}

/// Irreducible characters of `A*` realized as elements of `A`.
pub fn dual_characters_in_a(dual_dec: &IrrDecomposition) -> &[Vector] {
    &dual_dec.characters
}

/// `HKer(M)`: the Hopf subalgebra generated by the subcoalgebras `C_d` over
/// the `d ∈ Irr(A*)` with `χ_M(d) = χ_M(1)ε(d)`.
///
/// The closure under products and the antipode is taken explicitly, and the
/// result is checked to be a Hopf subalgebra acting trivially on `M`.
pub fn hopf_kernel(h: &HopfAlgebra, m: &Representation, dual_dec: &IrrDecomposition) -> Result<Subspace> {
    let chi = m.character();
    let dim_m = crate::linalg::dot(&chi, h.unit());
    let mut gens: Vec<Vector> = Vec::new();
    for d in dual_characters_in_a(dual_dec) {
        let lhs = crate::linalg::dot(&chi, d);
        if lhs == &dim_m * &h.eps(d) {
            let c = subcoalgebra_of(h, d);
            for v in c.basis() {
                gens.push(h.antipode(v));
                gens.push(v.clone());
            }
        }
    }
    let kernel = h.subalgebra_generated(&gens);
    if !classify_subspace(h, &kernel).hopf_subalgebra {
        return Err(Error::InternalConsistency("Hopf kernel closure is not a Hopf subalgebra".into()));
    }
    for x in kernel.basis() {
        let expect = Matrix::identity(m.dim()).scale(&h.eps(x));
        if m.act(x) != expect {
            return Err(Error::InternalConsistency("Hopf kernel does not act trivially".into()));
        }
    }
    Ok(kernel)
}

/// The grouplike elements: the `d ∈ Irr(A*)` with `ε(d) = 1`, each checked to satisfy `Δ(d) = d ⊗ d`.
pub fn grouplikes(h: &HopfAlgebra, dual_dec: &IrrDecomposition) -> Result<Vec<Vector>> {
    let mut out = Vec::new();
    for (j, d) in dual_dec.characters.iter().enumerate() {
        if dual_dec.degrees[j] == 1 {
            if !h.is_grouplike(d) {
                return Err(Error::InternalConsistency(format!(
                    "degree-one dual character {j} is not grouplike"
                )));
            }
            out.push(d.clone());
        }
    }
    Ok(out)
}
