//! Finite-dimensional Hopf algebras stored as structure tensors.

mod axioms;
mod subspaces;

pub use axioms::{verify_axioms, AxiomFailure, AxiomReport, Identity};
pub use subspaces::{
    adjoint_module, classify_subspace, coideal_join, coideal_product, dual_quotient_subalgebra,
    integral, quotient, SubspaceFlags,
};

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vec, unit_vec, zero_vec, Matrix, Subspace, Vector};
use crate::scalars::CycScalar;

/// A sparse vector: `(basis index, coefficient)` pairs with nonzero coefficients.
pub type Sparse = Vec<(usize, CycScalar)>;

/// A sparse element of `A ⊗ A`.
pub type Tensor2 = BTreeMap<(usize, usize), CycScalar>;

/// A sparse element of `A ⊗ A ⊗ A`.
pub type Tensor3 = BTreeMap<(usize, usize, usize), CycScalar>;

pub fn tensor_add(t: &mut Tensor2, key: (usize, usize), c: CycScalar) {
    if c.is_zero() {
        return;
    }
    let entry = t.entry(key).or_insert_with(CycScalar::zero);
    *entry += &c;
    if entry.is_zero() {
        t.remove(&key);
    }
}

pub fn tensor3_add(t: &mut Tensor3, key: (usize, usize, usize), c: CycScalar) {
    if c.is_zero() {
        return;
    }
    let entry = t.entry(key).or_insert_with(CycScalar::zero);
    *entry += &c;
    if entry.is_zero() {
        t.remove(&key);
    }
}

fn sparse_of(v: &[CycScalar]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// A finite-dimensional Hopf algebra over a cyclotomic field, in a fixed basis `b_0, …, b_{n-1}`.
///
/// Multiplication and comultiplication are stored sparsely; the counit, unit
/// and antipode densely.
#[derive(Clone)]
pub struct HopfAlgebra {
    name: String,
    dim: usize,
    labels: Vec<String>,
    conductor: u32,
    mult: Vec<Sparse>,
    unit: Vector,
    comult: Vec<Vec<(usize, usize, CycScalar)>>,
    counit: Vector,
    antipode: Vec<Vector>,
    generators: OnceLock<Vec<usize>>,
    antipode_inv: OnceLock<Option<Vec<Vector>>>,
}

/// The structure data of a Hopf algebra before validation.
pub struct HopfData {
    pub name: String,
    pub labels: Vec<String>,
    pub conductor: u32,
    /// Entries `(i, j, k, c)` meaning `b_i b_j` has coefficient `c` on `b_k`.
    pub mult: Vec<(usize, usize, usize, CycScalar)>,
    pub unit: Vector,
    /// Entries `(i, j, k, c)` meaning `Δ(b_i)` has coefficient `c` on `b_j ⊗ b_k`.
    pub comult: Vec<(usize, usize, usize, CycScalar)>,
    pub counit: Vector,
    /// Row `i` holds the coordinates of `S(b_i)`.
    pub antipode: Vec<Vector>,
}

impl HopfAlgebra {
    /// Assembles a Hopf algebra from raw structure data, checking shapes only.
    pub fn from_data(data: HopfData) -> Result<HopfAlgebra> {
        let n = data.labels.len();
        let shape = |what: &str| Error::DimensionMismatch(format!("{what} does not match dimension {n}"));
        if data.unit.len() != n {
            return Err(shape("unit"));
        }
        if data.counit.len() != n {
            return Err(shape("counit"));
        }
        if data.antipode.len() != n || data.antipode.iter().any(|r| r.len() != n) {
            return Err(shape("antipode"));
        }
        let mut mult_acc: Vec<BTreeMap<usize, CycScalar>> = vec![BTreeMap::new(); n * n];
        for (i, j, k, c) in data.mult {
            if i >= n || j >= n || k >= n {
                return Err(shape("multiplication index"));
            }
            *mult_acc[i * n + j].entry(k).or_insert_with(CycScalar::zero) += &c;
        }
        let mut comult_acc: Vec<BTreeMap<(usize, usize), CycScalar>> = vec![BTreeMap::new(); n];
        for (i, j, k, c) in data.comult {
            if i >= n || j >= n || k >= n {
                return Err(shape("comultiplication index"));
            }
            *comult_acc[i].entry((j, k)).or_insert_with(CycScalar::zero) += &c;
        }
        Ok(HopfAlgebra {
            name: data.name,
            dim: n,
            labels: data.labels,
            conductor: data.conductor.max(1),
            mult: mult_acc
                .into_iter()
                .map(|m| m.into_iter().filter(|(_, c)| !c.is_zero()).collect())
                .collect(),
            unit: data.unit,
            comult: comult_acc
                .into_iter()
                .map(|m| {
                    m.into_iter()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|((j, k), c)| (j, k, c))
                        .collect()
                })
                .collect(),
            counit: data.counit,
            antipode: data.antipode,
            generators: OnceLock::new(),
            antipode_inv: OnceLock::new(),
        })
    }

    /// Raw structure data, suitable for serialization or modification.
    pub fn to_data(&self) -> HopfData {
        let n = self.dim;
        let mut mult = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in &self.mult[i * n + j] {
                    mult.push((i, j, *k, c.clone()));
                }
            }
        }
        let mut comult = Vec::new();
        for i in 0..n {
            for (j, k, c) in &self.comult[i] {
                comult.push((i, *j, *k, c.clone()));
            }
        }
        HopfData {
            name: self.name.clone(),
            labels: self.labels.clone(),
            conductor: self.conductor,
            mult,
            unit: self.unit.clone(),
            comult,
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> HopfAlgebra {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Conductor of the field the structure constants are defined over.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vec(self.dim, i)
    }

    /// `b_i b_j` as a sparse vector.
    pub fn mult_basis(&self, i: usize, j: usize) -> &Sparse {
        &self.mult[i * self.dim + j]
    }

    /// `Δ(b_i)` as a list of `(j, k, c)`.
    pub fn comult_basis(&self, i: usize) -> &[(usize, usize, CycScalar)] {
        &self.comult[i]
    }

    /// Coordinates of `S(b_i)`.
    pub fn antipode_basis(&self, i: usize) -> &Vector {
        &self.antipode[i]
    }

    pub fn mul(&self, x: &[CycScalar], y: &[CycScalar]) -> Vector {
        let n = self.dim;
        let mut out = zero_vec(n);
        let ys = sparse_of(y);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in &ys {
                let ab = a * b;
                for (k, c) in &self.mult[i * n + j] {
                    out[*k].add_mul(&ab, c);
                }
            }
        }
        out
    }

    /// `x · b_j`.
    pub fn mul_right_basis(&self, x: &[CycScalar], j: usize) -> Vector {
        let n = self.dim;
        let mut out = zero_vec(n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, c) in &self.mult[i * n + j] {
                out[*k].add_mul(a, c);
            }
        }
        out
    }

    /// `b_i · y`.
    pub fn mul_left_basis(&self, i: usize, y: &[CycScalar]) -> Vector {
        let n = self.dim;
        let mut out = zero_vec(n);
        for (j, b) in y.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for (k, c) in &self.mult[i * n + j] {
                out[*k].add_mul(b, c);
            }
        }
        out
    }

    pub fn comul(&self, x: &[CycScalar]) -> Tensor2 {
        let mut t = Tensor2::new();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comult[i] {
                tensor_add(&mut t, (*j, *k), a * c);
            }
        }
        t
    }

    /// `Δ²(x) = (Δ ⊗ id)Δ(x)`.
    pub fn comul2(&self, x: &[CycScalar]) -> Tensor3 {
        let mut t = Tensor3::new();
        for ((j, k), c) in self.comul(x) {
            for (p, q, d) in &self.comult[j] {
                tensor3_add(&mut t, (*p, *q, k), &c * d);
            }
        }
        t
    }

    pub fn eps(&self, x: &[CycScalar]) -> CycScalar {
        crate::linalg::dot(&self.counit, x)
    }

    pub fn antipode(&self, x: &[CycScalar]) -> Vector {
        let mut out = zero_vec(self.dim);
        for (i, a) in x.iter().enumerate() {
            axpy(&mut out, a, &self.antipode[i]);
        }
        out
    }

    /// The antipode as a matrix acting on column vectors.
    pub fn antipode_matrix(&self) -> Matrix {
        Matrix::from_cols(&self.antipode, self.dim)
    }

    /// Rows of `S^{-1}`, if the antipode is invertible.
    pub fn antipode_inverse_rows(&self) -> Option<&Vec<Vector>> {
        self.antipode_inv
            .get_or_init(|| {
                let inv = self.antipode_matrix().inverse().ok()?;
                Some((0..self.dim).map(|i| inv.col(i)).collect())
            })
            .as_ref()
    }

    pub fn antipode_inv(&self, x: &[CycScalar]) -> Result<Vector> {
        let rows = self.antipode_inverse_rows().ok_or(Error::NonInvertibleAntipode)?;
        let mut out = zero_vec(self.dim);
        for (i, a) in x.iter().enumerate() {
            axpy(&mut out, a, &rows[i]);
        }
        Ok(out)
    }

    /// Matrix of left multiplication by `x` (column `j` is `x b_j`).
    pub fn left_mult_matrix(&self, x: &[CycScalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul_right_basis(x, j)).collect();
        Matrix::from_cols(&cols, self.dim)
    }

    /// Trace of left multiplication by `b_i`, for every `i`.
    pub fn regular_trace_form(&self) -> Vector {
        let n = self.dim;
        (0..n)
            .map(|i| {
                let mut t = CycScalar::zero();
                for j in 0..n {
                    for (k, c) in &self.mult[i * n + j] {
                        if *k == j {
                            t += c;
                        }
                    }
                }
                t
            })
            .collect()
    }

    /// Trace of left multiplication by `x`.
    pub fn regular_trace(&self, x: &[CycScalar]) -> CycScalar {
        crate::linalg::dot(&self.regular_trace_form(), x)
    }

    /// `ad_l(x)(a) = x_1 a S(x_2)`.
    pub fn ad_left(&self, x: &[CycScalar], a: &[CycScalar]) -> Vector {
        let mut out = zero_vec(self.dim);
        for ((j, k), c) in self.comul(x) {
            let left = self.mul_left_basis(j, a);
            let right = self.mul(&left, &self.antipode[k]);
            axpy(&mut out, &c, &right);
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| self.mult[i * n + j] == self.mult[j * n + i]))
    }

    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim).all(|i| {
            let mut a: Tensor2 = Tensor2::new();
            let mut b: Tensor2 = Tensor2::new();
            for (j, k, c) in &self.comult[i] {
                tensor_add(&mut a, (*j, *k), c.clone());
                tensor_add(&mut b, (*k, *j), c.clone());
            }
            a == b
        })
    }

    /// `S² = id`.
    pub fn antipode_is_involutive(&self) -> bool {
        (0..self.dim).all(|i| self.antipode(&self.antipode[i]) == self.basis(i))
    }

    /// The subalgebra generated by `vectors` (always containing 1).
    pub fn subalgebra_generated(&self, vectors: &[Vector]) -> Subspace {
        let mut span = vec![self.unit.clone()];
        span.extend(vectors.iter().cloned());
        let mut current = Subspace::span(self.dim, &span);
        loop {
            let mut more: Vec<Vector> = current.basis().to_vec();
            for u in current.basis() {
                for g in vectors {
                    more.push(self.mul(u, g));
                }
            }
            let next = Subspace::span(self.dim, &more);
            if next.dim() == current.dim() {
                return current;
            }
            current = next;
        }
    }

    /// Basis indices that generate the algebra; chosen greedily in index order.
    pub fn generators(&self) -> &[usize] {
        self.generators.get_or_init(|| {
            let mut gens: Vec<usize> = Vec::new();
            let mut span = Subspace::span(self.dim, std::slice::from_ref(&self.unit));
            for i in 0..self.dim {
                if span.dim() == self.dim {
                    break;
                }
                if span.contains(&self.basis(i)) {
                    continue;
                }
                gens.push(i);
                let vecs: Vec<Vector> = gens.iter().map(|&g| self.basis(g)).collect();
                span = self.subalgebra_generated(&vecs);
            }
            gens
        })
    }

    /// Replaces the cached generating set; the caller vouches that the given
    /// basis elements generate the algebra.
    pub fn set_generators(&self, gens: Vec<usize>) {
        let _ = self.generators.set(gens);
    }

    /// `(φ ⊗ ψ)(t)` for maps given on basis elements.
    pub fn tensor_map(
        t: &Tensor2,
        f: impl Fn(usize) -> Vector,
        g: impl Fn(usize) -> Vector,
    ) -> Tensor2 {
        let mut out = Tensor2::new();
        for ((j, k), c) in t {
            let fj = f(*j);
            let gk = g(*k);
            for (a, x) in fj.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let cx = c * x;
                for (b, y) in gk.iter().enumerate() {
                    if !y.is_zero() {
                        tensor_add(&mut out, (a, b), &cx * y);
                    }
                }
            }
        }
        out
    }

    /// The dual Hopf algebra `A*` in the dual basis `b_i^*`.
    pub fn dual(&self) -> HopfAlgebra {
        let n = self.dim;
        let mut mult = Vec::new();
        for k in 0..n {
            for (i, j, c) in &self.comult[k] {
                mult.push((*i, *j, k, c.clone()));
            }
        }
        let mut comult = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in &self.mult[i * n + j] {
                    comult.push((*k, i, j, c.clone()));
                }
            }
        }
        let antipode: Vec<Vector> = (0..n)
            .map(|i| (0..n).map(|j| self.antipode[j][i].clone()).collect())
            .collect();
        let labels = self.labels.iter().map(|l| dual_label(l)).collect();
        HopfAlgebra::from_data(HopfData {
            name: dual_label(&self.name),
            labels,
            conductor: self.conductor,
            mult,
            unit: self.counit.clone(),
            comult,
            counit: self.unit.clone(),
            antipode,
        })
        .expect("dual of a well-shaped algebra is well-shaped")
    }

    /// `A^op`, `A^cop` or `A^{op,cop}`.
    pub fn variant(&self, kind: Variant) -> Result<HopfAlgebra> {
        let mut data = self.to_data();
        let flip_mult = matches!(kind, Variant::Op | Variant::OpCop);
        let flip_comult = matches!(kind, Variant::Cop | Variant::OpCop);
        if flip_mult {
            data.mult = data.mult.into_iter().map(|(i, j, k, c)| (j, i, k, c)).collect();
        }
        if flip_comult {
            data.comult = data.comult.into_iter().map(|(i, j, k, c)| (i, k, j, c)).collect();
        }
        if flip_mult != flip_comult {
            let rows = self.antipode_inverse_rows().ok_or(Error::NonInvertibleAntipode)?;
            data.antipode = rows.clone();
        }
        data.name = format!("{}^{}", self.name, kind.suffix());
        HopfAlgebra::from_data(data)
    }

    /// Restricts the structure to a Hopf subalgebra `K`, in the echelon basis of `K`.
    pub fn sub_hopf(&self, k: &Subspace) -> Result<HopfAlgebra> {
        let r = k.dim();
        let basis = k.basis();
        let piv = k.pivots();
        let coords = |v: &[CycScalar]| -> Result<Vector> {
            k.coords(v)
                .ok_or_else(|| Error::Precondition("subspace is not a Hopf subalgebra".into()))
        };
        let mut mult = Vec::new();
        for a in 0..r {
            for b in 0..r {
                let prod = self.mul(&basis[a], &basis[b]);
                for (c, v) in coords(&prod)?.into_iter().enumerate() {
                    if !v.is_zero() {
                        mult.push((a, b, c, v));
                    }
                }
            }
        }
        let mut comult = Vec::new();
        for a in 0..r {
            let t = self.comul(&basis[a]);
            // an element of K⊗K is determined by its pivot-pivot entries
            let mut check = Tensor2::new();
            for (x, px) in piv.iter().enumerate() {
                for (y, py) in piv.iter().enumerate() {
                    if let Some(c) = t.get(&(*px, *py)) {
                        comult.push((a, x, y, c.clone()));
                        for (i, u) in basis[x].iter().enumerate() {
                            if u.is_zero() {
                                continue;
                            }
                            for (j, w) in basis[y].iter().enumerate() {
                                if !w.is_zero() {
                                    tensor_add(&mut check, (i, j), &(c * u) * w);
                                }
                            }
                        }
                    }
                }
            }
            if check != t {
                return Err(Error::Precondition("subspace is not a subcoalgebra".into()));
            }
        }
        let unit = coords(&self.unit)?;
        let counit = basis.iter().map(|v| self.eps(v)).collect();
        let antipode = basis
            .iter()
            .map(|v| coords(&self.antipode(v)))
            .collect::<Result<Vec<_>>>()?;
        let labels = basis
            .iter()
            .map(|v| self.describe(v))
            .collect();
        HopfAlgebra::from_data(HopfData {
            name: format!("{}|sub{}", self.name, r),
            labels,
            conductor: self.conductor,
            mult,
            unit,
            comult,
            counit,
            antipode,
        })
    }

    /// Product in `A ⊗ A`.
    pub fn mul_tensor(&self, a: &Tensor2, b: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::new();
        for ((i, j), c) in a {
            for ((k, l), d) in b {
                let cd = c * d;
                for (p, x) in self.mult_basis(*i, *k) {
                    let cdx = &cd * x;
                    for (q, y) in self.mult_basis(*j, *l) {
                        tensor_add(&mut out, (*p, *q), &cdx * y);
                    }
                }
            }
        }
        out
    }

    /// Product in `A ⊗ A ⊗ A`.
    pub fn mul_tensor3(&self, a: &Tensor3, b: &Tensor3) -> Tensor3 {
        let mut out = Tensor3::new();
        for ((i, j, k), c) in a {
            for ((l, m, o), d) in b {
                let cd = c * d;
                for (p, x) in self.mult_basis(*i, *l) {
                    let cdx = &cd * x;
                    for (q, y) in self.mult_basis(*j, *m) {
                        let cdxy = &cdx * y;
                        for (r, z) in self.mult_basis(*k, *o) {
                            tensor3_add(&mut out, (*p, *q, *r), &cdxy * z);
                        }
                    }
                }
            }
        }
        out
    }

    /// `x ⊗ y`.
    pub fn outer(x: &[CycScalar], y: &[CycScalar]) -> Tensor2 {
        let mut out = Tensor2::new();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    tensor_add(&mut out, (i, j), a * b);
                }
            }
        }
        out
    }

    /// `Δ(x)` for `x ∈ A`, then the flip: `Δ^cop(x)`.
    pub fn comul_cop(&self, x: &[CycScalar]) -> Tensor2 {
        self.comul(x).into_iter().map(|((i, j), c)| ((j, i), c)).collect()
    }

    /// `(Δ ⊗ id)(t)`.
    pub fn comul_first(&self, t: &Tensor2) -> Tensor3 {
        let mut out = Tensor3::new();
        for ((i, j), c) in t {
            for (p, q, d) in self.comult_basis(*i) {
                tensor3_add(&mut out, (*p, *q, *j), c * d);
            }
        }
        out
    }

    /// `(id ⊗ Δ)(t)`.
    pub fn comul_second(&self, t: &Tensor2) -> Tensor3 {
        let mut out = Tensor3::new();
        for ((i, j), c) in t {
            for (p, q, d) in self.comult_basis(*j) {
                tensor3_add(&mut out, (*i, *p, *q), c * d);
            }
        }
        out
    }

    /// Human-readable linear combination of basis labels.
    pub fn describe(&self, v: &[CycScalar]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    self.labels[i].clone()
                } else if let Some(r) = c.as_rat() {
                    format!("({r})·{}", self.labels[i])
                } else {
                    format!("({c})·{}", self.labels[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// Whether `v` is grouplike: `Δ(v) = v ⊗ v` and `ε(v) = 1`.
    pub fn is_grouplike(&self, v: &[CycScalar]) -> bool {
        if !self.eps(v).is_one() || is_zero_vec(v) {
            return false;
        }
        let mut vv = Tensor2::new();
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if !b.is_zero() {
                    tensor_add(&mut vv, (i, j), a * b);
                }
            }
        }
        self.comul(v) == vv
    }
}

fn dual_label(l: &str) -> String {
    match l.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{l}*"),
    }
}

/// Which structure maps to reverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Op,
    Cop,
    OpCop,
}

impl Variant {
    fn suffix(self) -> &'static str {
        match self {
            Variant::Op => "op",
            Variant::Cop => "cop",
            Variant::OpCop => "opcop",
        }
    }
}

impl std::fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HopfAlgebra({}, dim {})", self.name, self.dim)
    }
}

/// Structure tensors agree exactly (labels and names are ignored).
impl PartialEq for HopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.mult == other.mult
            && self.comult == other.comult
            && self.unit == other.unit
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}
