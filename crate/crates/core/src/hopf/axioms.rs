//! Exact checking of the Hopf algebra axioms.
//!
//! Linear identities (unit, counit, coassociativity, antipode) are checked on
//! every basis element. Bilinear and trilinear identities are checked on all
//! basis pairs and triples for small algebras; above [`BRUTE_FORCE_DIM`] the
//! last argument ranges over a generating set instead, which is exact: if
//! `(xy)g = x(yg)` for all `x, y` and every generator `g`, induction on word
//! length gives associativity for every product of generators, and likewise
//! `Δ(xg) = Δ(x)Δ(g)` propagates to all of `A`.

use std::fmt;

use serde::Serialize;

use super::{tensor_add, HopfAlgebra, Tensor2};
use crate::linalg::{axpy, zero_vec, Vector};
use crate::scalars::CycScalar;

/// Largest dimension checked by exhaustive enumeration of basis triples.
pub const BRUTE_FORCE_DIM: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    ComultiplicationMultiplicative,
    CounitMultiplicative,
    Antipode,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Identity::Associativity => "associativity",
            Identity::Unit => "unit",
            Identity::Coassociativity => "coassociativity",
            Identity::Counit => "counit",
            Identity::ComultiplicationMultiplicative => "comultiplication is an algebra map",
            Identity::CounitMultiplicative => "counit is an algebra map",
            Identity::Antipode => "antipode",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub identity: Identity,
    /// Basis indices at which the identity fails.
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub failures: Vec<AxiomFailure>,
    /// Whether bilinear identities were reduced to a generating set.
    pub generator_reduced: bool,
}

impl AxiomReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

fn push(report: &mut AxiomReport, identity: Identity, witness: Vec<usize>) {
    // one witness per identity keeps reports short
    if !report.failures.iter().any(|f| f.identity == identity) {
        report.failures.push(AxiomFailure { identity, witness });
    }
}

fn vec_tensor_mul(h: &HopfAlgebra, a: &Tensor2, b: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::new();
    for ((i, j), c) in a {
        for ((k, l), d) in b {
            let cd = c * d;
            let left = h.mult_basis(*i, *k);
            let right = h.mult_basis(*j, *l);
            for (p, x) in left {
                let cdx = &cd * x;
                for (q, y) in right {
                    tensor_add(&mut out, (*p, *q), &cdx * y);
                }
            }
        }
    }
    out
}

/// Checks all Hopf algebra axioms exactly; an empty report means `h` is a Hopf algebra.
pub fn verify_axioms(h: &HopfAlgebra) -> AxiomReport {
    let n = h.dim();
    let mut report = AxiomReport::default();
    let unit = h.unit().clone();

    // unit: 1·b = b = b·1
    for i in 0..n {
        let b = h.basis(i);
        if h.mul(&unit, &b) != b || h.mul(&b, &unit) != b {
            push(&mut report, Identity::Unit, vec![i]);
        }
    }

    // counit: (ε⊗id)Δ = id = (id⊗ε)Δ
    for i in 0..n {
        let mut left = zero_vec(n);
        let mut right = zero_vec(n);
        for (j, k, c) in h.comult_basis(i) {
            left[*k].add_mul(&h.counit()[*j], c);
            right[*j].add_mul(&h.counit()[*k], c);
        }
        let b = h.basis(i);
        if left != b || right != b {
            push(&mut report, Identity::Counit, vec![i]);
        }
    }

    // coassociativity
    for i in 0..n {
        let mut a = super::Tensor3::new();
        let mut b = super::Tensor3::new();
        for (j, k, c) in h.comult_basis(i) {
            for (p, q, d) in h.comult_basis(*j) {
                super::tensor3_add(&mut a, (*p, *q, *k), c * d);
            }
            for (p, q, d) in h.comult_basis(*k) {
                super::tensor3_add(&mut b, (*j, *p, *q), c * d);
            }
        }
        if a != b {
            push(&mut report, Identity::Coassociativity, vec![i]);
        }
    }

    // antipode: S(b_1)b_2 = ε(b)1 = b_1S(b_2)
    for i in 0..n {
        let mut left = zero_vec(n);
        let mut right = zero_vec(n);
        for (j, k, c) in h.comult_basis(i) {
            let l = h.mul(h.antipode_basis(*j), &h.basis(*k));
            axpy(&mut left, c, &l);
            let r = h.mul(&h.basis(*j), h.antipode_basis(*k));
            axpy(&mut right, c, &r);
        }
        let expect: Vector = unit.iter().map(|u| u * &h.counit()[i]).collect();
        if left != expect || right != expect {
            push(&mut report, Identity::Antipode, vec![i]);
        }
    }

    // ε(1) = 1 and Δ(1) = 1⊗1
    if !h.eps(&unit).is_one() {
        push(&mut report, Identity::CounitMultiplicative, vec![]);
    }
    let mut one_one = Tensor2::new();
    for (i, a) in unit.iter().enumerate() {
        for (j, b) in unit.iter().enumerate() {
            tensor_add(&mut one_one, (i, j), a * b);
        }
    }
    if h.comul(&unit) != one_one {
        push(&mut report, Identity::ComultiplicationMultiplicative, vec![]);
    }

    // ε multiplicative on all pairs (cheap)
    for i in 0..n {
        for j in 0..n {
            let prod: Vector = h.mult_basis(i, j).iter().fold(zero_vec(n), |mut acc, (k, c)| {
                acc[*k] = c.clone();
                acc
            });
            if h.eps(&prod) != &h.counit()[i] * &h.counit()[j] {
                push(&mut report, Identity::CounitMultiplicative, vec![i, j]);
            }
        }
    }

    let reduced = n > BRUTE_FORCE_DIM;
    report.generator_reduced = reduced;
    let thirds: Vec<usize> = if reduced {
        if report.failures.iter().any(|f| f.identity == Identity::Unit) {
            (0..n).collect()
        } else {
            h.generators().to_vec()
        }
    } else {
        (0..n).collect()
    };

    // associativity: (b_i b_j) b_k = b_i (b_j b_k)
    'assoc: for i in 0..n {
        for j in 0..n {
            let ij = sparse_to_vec(h.mult_basis(i, j), n);
            for &k in &thirds {
                let lhs = h.mul_right_basis(&ij, k);
                let jk = sparse_to_vec(h.mult_basis(j, k), n);
                let rhs = h.mul_left_basis(i, &jk);
                if lhs != rhs {
                    push(&mut report, Identity::Associativity, vec![i, j, k]);
                    break 'assoc;
                }
            }
        }
    }

    // Δ(b_i b_k) = Δ(b_i)Δ(b_k)
    let deltas: Vec<Tensor2> = (0..n).map(|i| h.comul(&h.basis(i))).collect();
    'bialg: for i in 0..n {
        for &k in &thirds {
            let prod = sparse_to_vec(h.mult_basis(i, k), n);
            let lhs = h.comul(&prod);
            let rhs = vec_tensor_mul(h, &deltas[i], &deltas[k]);
            if lhs != rhs {
                push(&mut report, Identity::ComultiplicationMultiplicative, vec![i, k]);
                break 'bialg;
            }
        }
    }

    report
}

fn sparse_to_vec(s: &[(usize, CycScalar)], n: usize) -> Vector {
    let mut v = zero_vec(n);
    for (k, c) in s {
        v[*k] = c.clone();
    }
    v
}
