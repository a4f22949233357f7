//! Dense exact linear algebra over [`CycScalar`]: row reduction, null spaces,
//! and echelonized subspaces.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::CycScalar;

pub type Scalar = CycScalar;
pub type Vector = Vec<CycScalar>;

pub fn zero_vec(n: usize) -> Vector {
    vec![CycScalar::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = CycScalar::one();
    v
}

pub fn is_zero_vec(v: &[CycScalar]) -> bool {
    v.iter().all(CycScalar::is_zero)
}

pub fn add_vec(a: &[CycScalar], b: &[CycScalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[CycScalar], b: &[CycScalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(c: &CycScalar, v: &[CycScalar]) -> Vector {
    if c.is_zero() {
        return zero_vec(v.len());
    }
    v.iter().map(|x| c * x).collect()
}

/// `acc += c·v`.
pub fn axpy(acc: &mut [CycScalar], c: &CycScalar, v: &[CycScalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            a.add_mul(c, x);
        }
    }
}

pub fn dot(a: &[CycScalar], b: &[CycScalar]) -> CycScalar {
    let mut acc = CycScalar::zero();
    for (x, y) in a.iter().zip(b) {
        acc.add_mul(x, y);
    }
    acc
}

/// A dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<CycScalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![CycScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = CycScalar::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vector], cols: usize) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            m.data[i * cols..(i + 1) * cols].clone_from_slice(r);
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vector], rows: usize) -> Matrix {
        Matrix::from_rows(cols, rows).transpose()
    }

    pub fn row(&self, i: usize) -> &[CycScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vector {
        self.row(i).to_vec()
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[CycScalar]) -> Vector {
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    /// `vᵀ·M`.
    pub fn vec_mul(&self, v: &[CycScalar]) -> Vector {
        let mut out = zero_vec(self.cols);
        for (i, c) in v.iter().enumerate() {
            axpy(&mut out, c, self.row(i));
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: add_vec(&self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: sub_vec(&self.data, &other.data),
        }
    }

    pub fn scale(&self, c: &CycScalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: scale_vec(c, &self.data),
        }
    }

    pub fn trace(&self) -> CycScalar {
        let mut acc = CycScalar::zero();
        for i in 0..self.rows.min(self.cols) {
            acc += &self[(i, i)];
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    /// Reduces in place to reduced row-echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv().expect("pivot is nonzero");
            for j in c..self.cols {
                if !self[(r, j)].is_zero() {
                    self[(r, j)] = &self[(r, j)] * &inv;
                }
            }
            let pivot_row: Vector = self.row_vec(r);
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = -&self[(i, c)];
                let base = i * self.cols;
                for j in c..self.cols {
                    if !pivot_row[j].is_zero() {
                        self.data[base + j].add_mul(&f, &pivot_row[j]);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : M x = 0}`.
    pub fn nullspace(&self) -> Vec<Vector> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = zero_vec(self.cols);
                v[f] = CycScalar::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -&m[(r, f)];
                }
                v
            })
            .collect()
    }

    /// One solution of `M x = b`, if any.
    pub fn solve(&self, b: &[CycScalar]) -> Option<Vector> {
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vec(self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = CycScalar::one();
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::NoSolution("matrix is singular".into()));
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    pub fn determinant(&self) -> CycScalar {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = CycScalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return CycScalar::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det = &det * &piv;
            let inv = piv.inv().expect("pivot is nonzero");
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = -(&m[(i, c)] * &inv);
                for j in c..n {
                    let v = m[(c, j)].clone();
                    if !v.is_zero() {
                        m.data[i * n + j].add_mul(&f, &v);
                    }
                }
            }
        }
        det
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = CycScalar;
    fn index(&self, (i, j): (usize, usize)) -> &CycScalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut CycScalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A subspace of `k^n`, stored as the nonzero rows of a reduced row-echelon basis.
///
/// The echelon form is canonical, so equality of subspaces is equality of
/// the stored bases.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| unit_vec(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(ambient: usize, vectors: &[Vector]) -> Subspace {
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        let mut m = Matrix::from_rows(vectors, ambient);
        let pivots = m.rref();
        let basis = (0..pivots.len()).map(|i| m.row_vec(i)).collect();
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    /// Span of the coordinate vectors `e_i` for the given indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Subspace {
        let vecs: Vec<Vector> = indices.iter().map(|&i| unit_vec(ambient, i)).collect();
        Subspace::span(ambient, &vecs)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the components along the basis; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[CycScalar]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let c = -&r[p];
                axpy(&mut r, &c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[CycScalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[CycScalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn combine(&self, coords: &[CycScalar]) -> Vector {
        let mut out = zero_vec(self.ambient);
        for (c, row) in coords.iter().zip(&self.basis) {
            axpy(&mut out, c, row);
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &vecs)
    }

    /// Zassenhaus intersection.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let n = self.ambient;
        let mut rows = Vec::new();
        for v in &self.basis {
            let mut r = v.clone();
            r.extend(v.iter().cloned());
            rows.push(r);
        }
        for w in &other.basis {
            let mut r = w.clone();
            r.extend(zero_vec(n));
            rows.push(r);
        }
        if rows.is_empty() {
            return Subspace::zero(n);
        }
        let mut m = Matrix::from_rows(&rows, 2 * n);
        let pivots = m.rref();
        let vecs: Vec<Vector> = pivots
            .iter()
            .enumerate()
            .filter(|(_, &p)| p >= n)
            .map(|(i, _)| m.row(i)[n..].to_vec())
            .collect();
        Subspace::span(n, &vecs)
    }

    /// `{f : f(v) = 0 ∀ v}` in dual coordinates.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient);
        }
        let m = Matrix::from_rows(&self.basis, self.ambient);
        Subspace::span(self.ambient, &m.nullspace())
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image(&self, map: &Matrix) -> Subspace {
        let vecs: Vec<Vector> = self.basis.iter().map(|v| map.mul_vec(v)).collect();
        Subspace::span(map.rows, &vecs)
    }

    /// Indices of the coordinate vectors `e_i` contained in the subspace.
    pub fn coordinate_support(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|&i| self.contains(&unit_vec(self.ambient, i)))
            .collect()
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {})", self.dim(), self.ambient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| CycScalar::from_int(x)).collect()
    }

    #[test]
    fn rref_and_nullspace() {
        let m = Matrix::from_rows(&[v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[1, 0, 1])], 3);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(is_zero_vec(&m.mul_vec(&ns[0])));
    }

    #[test]
    fn inverse_and_determinant() {
        let m = Matrix::from_rows(&[v(&[2, 1]), v(&[1, 1])], 2);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert_eq!(m.determinant(), CycScalar::one());
        let s = Matrix::from_rows(&[v(&[1, 2]), v(&[2, 4])], 2);
        assert!(s.inverse().is_err());
        assert!(s.determinant().is_zero());
    }

    #[test]
    fn subspace_lattice() {
        let a = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 0, 1])]);
        let b = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        assert_eq!(a.intersect(&a), a);
        assert_eq!(a.intersect(&Subspace::zero(3)), Subspace::zero(3));
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&v(&[2, 2, 0])));
        assert_eq!(a.sum(&b), Subspace::full(3));
        assert_eq!(a.annihilator().dim(), 1);
    }
}

impl serde::Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl serde::Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.basis.serialize(s)
    }
}
