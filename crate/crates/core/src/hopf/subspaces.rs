//! Subobjects of a Hopf algebra: classification, quotients, integrals and the
//! coideal-subalgebra calculus.

use serde::Serialize;

use super::{HopfAlgebra, HopfData, Tensor2};
use crate::error::{Error, Result};
use crate::linalg::{axpy, zero_vec, Matrix, Subspace, Vector};
use crate::repthy::Representation;
use crate::scalars::CycScalar;

/// Which closure properties a subspace has; each decided exactly on basis elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SubspaceFlags {
    pub subalgebra: bool,
    pub subcoalgebra: bool,
    pub s_stable: bool,
    pub left_coideal: bool,
    pub hopf_subalgebra: bool,
    pub normal_hopf_subalgebra: bool,
    pub normal_left_coideal_subalgebra: bool,
}

/// Splits `t ∈ A⊗A` into its slices `t = Σ_j b_j ⊗ right[j]` and `t = Σ_k left[k] ⊗ b_k`.
fn slices(n: usize, t: &Tensor2) -> (Vec<Vector>, Vec<Vector>) {
    let mut right = vec![zero_vec(n); n];
    let mut left = vec![zero_vec(n); n];
    for ((j, k), c) in t {
        right[*j][*k] = c.clone();
        left[*k][*j] = c.clone();
    }
    (right, left)
}

pub fn classify_subspace(h: &HopfAlgebra, w: &Subspace) -> SubspaceFlags {
    let n = h.dim();
    let basis = w.basis();
    let subalgebra = w.contains(h.unit())
        && basis
            .iter()
            .all(|x| basis.iter().all(|y| w.contains(&h.mul(x, y))));
    let mut left_coideal = true;
    let mut right_coideal = true;
    for x in basis {
        let (right, left) = slices(n, &h.comul(x));
        left_coideal &= right.iter().all(|v| w.contains(v));
        right_coideal &= left.iter().all(|v| w.contains(v));
    }
    let subcoalgebra = left_coideal && right_coideal;
    let s_stable = basis.iter().all(|x| w.contains(&h.antipode(x)));
    let ad_stable = (0..n).all(|i| {
        let bi = h.basis(i);
        basis.iter().all(|x| w.contains(&h.ad_left(&bi, x)))
    });
    let hopf_subalgebra = subalgebra && subcoalgebra && s_stable;
    SubspaceFlags {
        subalgebra,
        subcoalgebra,
        s_stable,
        left_coideal,
        hopf_subalgebra,
        normal_hopf_subalgebra: hopf_subalgebra && ad_stable,
        normal_left_coideal_subalgebra: subalgebra && left_coideal && ad_stable,
    }
}

/// `L⁺ = L ∩ ker ε`, spanned by `l − ε(l)1`.
fn augmentation(h: &HopfAlgebra, l: &Subspace) -> Vec<Vector> {
    l.basis()
        .iter()
        .map(|x| {
            let mut v = x.clone();
            let e = -h.eps(x);
            axpy(&mut v, &e, h.unit());
            v
        })
        .collect()
}

/// The right ideal-generated space `A L⁺`.
fn ideal_from(h: &HopfAlgebra, l: &Subspace) -> Subspace {
    let plus = augmentation(h, l);
    let mut vecs = Vec::new();
    for i in 0..h.dim() {
        for x in &plus {
            vecs.push(h.mul_left_basis(i, x));
        }
    }
    Subspace::span(h.dim(), &vecs)
}

/// The quotient Hopf algebra `A//L = A/AL⁺` and the projection matrix `π_L`.
///
/// The quotient basis is the images of the basis vectors `b_j` whose index is
/// not a pivot of the echelon basis of `AL⁺`.
pub fn quotient(h: &HopfAlgebra, l: &Subspace) -> Result<(HopfAlgebra, Matrix)> {
    if !classify_subspace(h, l).normal_left_coideal_subalgebra {
        return Err(Error::Precondition(
            "quotient requires a normal left coideal subalgebra".into(),
        ));
    }
    let n = h.dim();
    let ideal = ideal_from(h, l);
    if n % l.dim() != 0 || ideal.dim() != n - n / l.dim() {
        return Err(Error::InternalConsistency(format!(
            "quotient by a {}-dimensional subalgebra of a {}-dimensional algebra has dimension {}",
            l.dim(),
            n,
            n - ideal.dim()
        )));
    }
    let kept: Vec<usize> = (0..n).filter(|i| !ideal.pivots().contains(i)).collect();
    let q = kept.len();
    let project = |v: &[CycScalar]| -> Vector {
        let r = ideal.reduce(v);
        kept.iter().map(|&j| r[j].clone()).collect()
    };
    let proj_cols: Vec<Vector> = (0..n).map(|i| project(&h.basis(i))).collect();
    let pi = Matrix::from_cols(&proj_cols, q);

    let mut mult = Vec::new();
    for (a, &i) in kept.iter().enumerate() {
        for (b, &j) in kept.iter().enumerate() {
            let prod = h.mul(&h.basis(i), &h.basis(j));
            for (c, v) in project(&prod).into_iter().enumerate() {
                if !v.is_zero() {
                    mult.push((a, b, c, v));
                }
            }
        }
    }
    let mut comult = Vec::new();
    for (a, &i) in kept.iter().enumerate() {
        let mut t = Tensor2::new();
        for (j, k, c) in h.comult_basis(i) {
            let pj = &proj_cols[*j];
            let pk = &proj_cols[*k];
            for (x, u) in pj.iter().enumerate() {
                if u.is_zero() {
                    continue;
                }
                for (y, w) in pk.iter().enumerate() {
                    if !w.is_zero() {
                        super::tensor_add(&mut t, (x, y), &(c * u) * w);
                    }
                }
            }
        }
        for ((x, y), c) in t {
            comult.push((a, x, y, c));
        }
    }
    let unit = project(h.unit());
    let counit = kept.iter().map(|&i| h.counit()[i].clone()).collect();
    let antipode = kept.iter().map(|&i| project(h.antipode_basis(i))).collect();
    let labels = kept.iter().map(|&i| format!("[{}]", h.labels()[i])).collect();
    let quo = HopfAlgebra::from_data(HopfData {
        name: format!("{}//{}", h.name(), l.dim()),
        labels,
        conductor: h.conductor(),
        mult,
        unit,
        comult,
        counit,
        antipode,
    })?;
    Ok((quo, pi))
}

/// `(A//L)* = {f ∈ A* : f(al) = f(a)ε(l)}`, the annihilator of `AL⁺`, in dual coordinates.
pub fn dual_quotient_subalgebra(h: &HopfAlgebra, l: &Subspace) -> Subspace {
    ideal_from(h, l).annihilator()
}

/// `span{lk : l ∈ L, k ∈ K}`.
pub fn coideal_product(h: &HopfAlgebra, l: &Subspace, k: &Subspace) -> Subspace {
    let mut vecs = Vec::new();
    for x in l.basis() {
        for y in k.basis() {
            vecs.push(h.mul(x, y));
        }
    }
    Subspace::span(h.dim(), &vecs)
}

/// The subalgebra generated by `L + K`.
pub fn coideal_join(h: &HopfAlgebra, l: &Subspace, k: &Subspace) -> Subspace {
    let mut gens = l.basis().to_vec();
    gens.extend(k.basis().iter().cloned());
    h.subalgebra_generated(&gens)
}

/// The idempotent (left) integral: `xΛ = ε(x)Λ` and `ε(Λ) = 1`.
pub fn integral(h: &HopfAlgebra) -> Result<Vector> {
    let n = h.dim();
    let mut rows: Vec<Vector> = Vec::new();
    for &g in h.generators() {
        let mut m = h.left_mult_matrix(&h.basis(g));
        let e = h.counit()[g].clone();
        for i in 0..n {
            m[(i, i)] = &m[(i, i)] - &e;
        }
        rows.extend(m.to_rows());
    }
    let space = if rows.is_empty() {
        vec![crate::linalg::unit_vec(n, 0)]
    } else {
        Matrix::from_rows(&rows, n).nullspace()
    };
    if space.len() != 1 {
        return Err(Error::NoSolution(format!(
            "space of left integrals has dimension {}",
            space.len()
        )));
    }
    let e = h.eps(&space[0]);
    if e.is_zero() {
        return Err(Error::NoSolution("integral is killed by the counit; algebra is not semisimple".into()));
    }
    let inv = e.inv()?;
    Ok(space[0].iter().map(|x| x * &inv).collect())
}

/// `A` acting on an ad-stable subspace `K` by `ad_l(x)(a) = x_1 a S(x_2)`,
/// in the echelon basis of `K`.
pub fn adjoint_module(h: &HopfAlgebra, k: &Subspace) -> Result<Representation> {
    let r = k.dim();
    let mut action = Vec::with_capacity(h.dim());
    for i in 0..h.dim() {
        let bi = h.basis(i);
        let mut cols = Vec::with_capacity(r);
        for v in k.basis() {
            let img = h.ad_left(&bi, v);
            cols.push(k.coords(&img).ok_or_else(|| {
                Error::Precondition("subspace is not stable under the adjoint action".into())
            })?);
        }
        action.push(if r == 0 {
            Matrix::zeros(0, 0)
        } else {
            Matrix::from_cols(&cols, r)
        });
    }
    Ok(Representation::new(r, action))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::by_name;

    #[test]
    fn alternating_subgroup_is_a_normal_hopf_subalgebra() {
        let (a, g) = by_name("kS3").unwrap();
        let k = Subspace::coordinate(a.dim(), g.unwrap().subgroup("A3").unwrap());
        let f = classify_subspace(&a, &k);
        assert!(f.hopf_subalgebra && f.normal_hopf_subalgebra && f.normal_left_coideal_subalgebra);
        let (q, _) = quotient(&a, &k).unwrap();
        assert_eq!(q.dim(), 2);
    }

    #[test]
    fn transposition_subgroup_is_not_normal() {
        let (a, g) = by_name("kS3").unwrap();
        let g = g.unwrap();
        let a3 = g.subgroup("A3").unwrap();
        let t = (0..g.order()).find(|x| !a3.contains(x)).unwrap();
        let w = Subspace::coordinate(a.dim(), &g.generated(&[t]));
        let f = classify_subspace(&a, &w);
        assert!(f.hopf_subalgebra);
        assert!(!f.normal_hopf_subalgebra);
    }

    #[test]
    fn integral_is_idempotent_with_unit_counit() {
        let (a, _) = by_name("H8").unwrap();
        let lambda = integral(&a).unwrap();
        assert_eq!(a.mul(&lambda, &lambda), lambda);
        assert!(crate::linalg::dot(a.counit(), &lambda).is_one());
    }
}
