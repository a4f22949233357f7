//! Central primitive idempotents and irreducible characters by iterative block splitting.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{axpy, dot, scale_vec, sub_vec, zero_vec, Matrix, Subspace, Vector};
use crate::scalars::cyclotomic::lcm;
use crate::scalars::{roots_in_field, CycScalar};

/// Default upper bound for conductor escalation; overridden by `HOPF_MAX_CONDUCTOR`.
pub const DEFAULT_MAX_CONDUCTOR: u32 = 64;

pub fn max_conductor() -> u32 {
    std::env::var("HOPF_MAX_CONDUCTOR")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_CONDUCTOR)
}

/// Wedderburn data of a split semisimple algebra.
///
/// Simples are ordered with the trivial representation (the counit) first,
/// then by degree, then by the character vector in the canonical scalar order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrrDecomposition {
    /// Conductor of the field over which the decomposition was found.
    pub conductor: u32,
    pub idempotents: Vec<Vector>,
    /// `characters[j][k] = χ_j(b_k)`.
    pub characters: Vec<Vector>,
    pub degrees: Vec<u64>,
    /// `χ_{dual_map[j]} = χ_j ∘ S`.
    pub dual_map: Vec<usize>,
}

impl IrrDecomposition {
    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn unit_index(&self) -> usize {
        0
    }

    /// `χ_j(x)`.
    pub fn eval(&self, j: usize, x: &[CycScalar]) -> CycScalar {
        dot(&self.characters[j], x)
    }

    /// `Σ deg_j²` over the given simples.
    pub fn fpdim(&self, indices: &[usize]) -> u64 {
        indices.iter().map(|&j| self.degrees[j] * self.degrees[j]).sum()
    }

    /// Index of the simple whose character equals `chi`.
    pub fn index_of_character(&self, chi: &[CycScalar]) -> Option<usize> {
        self.characters.iter().position(|c| c.as_slice() == chi)
    }
}

/// `Z(A) = {z : z b_g = b_g z}` over a generating set.
pub fn center(h: &HopfAlgebra) -> Subspace {
    let n = h.dim();
    let mut rows: Vec<Vector> = Vec::new();
    for &g in h.generators() {
        // column i of the system is b_i b_g − b_g b_i
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            let mut col = zero_vec(n);
            for (k, c) in h.mult_basis(i, g) {
                col[*k] = &col[*k] + c;
            }
            for (k, c) in h.mult_basis(g, i) {
                col[*k] = &col[*k] - c;
            }
            for (k, v) in col.into_iter().enumerate() {
                m[(k, i)] = v;
            }
        }
        rows.extend(m.to_rows());
    }
    if rows.is_empty() {
        return Subspace::full(n);
    }
    Subspace::span(n, &Matrix::from_rows(&rows, n).nullspace())
}

/// Semisimplicity via nondegeneracy of the regular trace form.
pub fn is_semisimple(h: &HopfAlgebra) -> bool {
    let n = h.dim();
    let t = h.regular_trace_form();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut v = CycScalar::zero();
            for (k, c) in h.mult_basis(i, j) {
                v.add_mul(c, &t[*k]);
            }
            m[(i, j)] = v;
        }
    }
    m.rank() == n
}

/// Smallest `m ≤ bound` with `id^{*m} = ηε` (the convolution power of the identity).
pub fn exponent(h: &HopfAlgebra, bound: u32) -> Option<u32> {
    let n = h.dim();
    // power[i] = id^{*m}(b_i)
    let mut power: Vec<Vector> = (0..n).map(|i| h.basis(i)).collect();
    let target: Vec<Vector> = (0..n).map(|i| scale_vec(&h.counit()[i], h.unit())).collect();
    for m in 1..=bound {
        if power == target {
            return Some(m);
        }
        let next: Vec<Vector> = (0..n)
            .map(|i| {
                let mut acc = zero_vec(n);
                for (j, k, c) in h.comult_basis(i) {
                    let p = h.mul_right_basis(&power[*j], *k);
                    axpy(&mut acc, c, &p);
                }
                acc
            })
            .collect();
        power = next;
    }
    None
}

/// Minimal polynomial of `x` inside the algebra with identity `e` (coefficients constant first).
fn min_poly(h: &HopfAlgebra, e: &[CycScalar], x: &[CycScalar]) -> Vec<CycScalar> {
    let n = h.dim();
    let mut powers: Vec<Vector> = vec![e.to_vec()];
    loop {
        let next = h.mul(powers.last().unwrap(), x);
        // solve next = Σ c_i powers[i]
        let m = Matrix::from_cols(&powers, n);
        if let Some(c) = m.solve(&next) {
            let mut poly: Vec<CycScalar> = c.into_iter().map(|v| -v).collect();
            poly.push(CycScalar::one());
            return poly;
        }
        powers.push(next);
    }
}

fn eval_poly_in_algebra(h: &HopfAlgebra, poly: &[CycScalar], e: &[CycScalar], x: &[CycScalar]) -> Vector {
    let mut acc = zero_vec(h.dim());
    for c in poly.iter().rev() {
        acc = h.mul(&acc, x);
        axpy(&mut acc, c, e);
    }
    acc
}

fn eval_poly(poly: &[CycScalar], x: &CycScalar) -> CycScalar {
    let mut acc = CycScalar::zero();
    for c in poly.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// `p / (X − λ)` by synthetic division.
fn deflate(poly: &[CycScalar], lambda: &CycScalar) -> Vec<CycScalar> {
    let deg = poly.len() - 1;
    let mut q = vec![CycScalar::zero(); deg];
    let mut carry = CycScalar::zero();
    for i in (0..deg).rev() {
        carry = &poly[i + 1] + &(&carry * lambda);
        q[i] = carry.clone();
    }
    q
}

fn isqrt(v: u64) -> Option<u64> {
    let r = (v as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).find(|&s| s * s == v)
}

/// Decomposes `h` with conductor escalation: starts at the lcm of the
/// structure conductor and the exponent, doubling on split failure up to
/// [`max_conductor`].
pub fn decompose(h: &HopfAlgebra) -> Result<IrrDecomposition> {
    if !is_semisimple(h) {
        return Err(Error::NotSemisimple(format!(
            "regular trace form of {} is degenerate",
            h.name()
        )));
    }
    let bound = max_conductor();
    let exp = exponent(h, (h.dim() * h.dim()) as u32).unwrap_or(1);
    let mut n = lcm(h.conductor(), exp);
    if n > bound {
        return Err(Error::ConductorOverflow { requested: n, bound });
    }
    loop {
        match decompose_at(h, n) {
            Ok(d) => return Ok(d),
            Err(Error::SplitFailure(_)) if 2 * n <= bound => n *= 2,
            Err(Error::SplitFailure(msg)) => {
                return Err(Error::SplitFailure(format!("{msg}; conductor bound {bound} reached")))
            }
            Err(e) => return Err(e),
        }
    }
}

/// Splits `h` over `Q(ζ_n)`; fails with [`Error::SplitFailure`] if the field is too small.
pub fn decompose_at(h: &HopfAlgebra, n: u32) -> Result<IrrDecomposition> {
    let dim = h.dim();
    let z = center(h);
    let mut pending: Vec<Vector> = vec![h.unit().clone()];
    let mut blocks: Vec<Vector> = Vec::new();
    while let Some(e) = pending.pop() {
        let ze: Vec<Vector> = z.basis().iter().map(|v| h.mul(v, &e)).collect();
        let block_center = Subspace::span(dim, &ze);
        if block_center.dim() == 1 {
            blocks.push(e);
            continue;
        }
        let mut split = false;
        for x in &ze {
            if Subspace::span(dim, &[e.clone(), x.clone()]).dim() == 1 {
                continue;
            }
            let p = min_poly(h, &e, x);
            let roots = roots_in_field(&p, n);
            if roots.is_empty() {
                return Err(Error::SplitFailure(format!(
                    "minimal polynomial of degree {} has no root in Q(ζ_{n})",
                    p.len() - 1
                )));
            }
            let mut rest = e.clone();
            for lambda in &roots {
                let q = deflate(&p, lambda);
                let scale = eval_poly(&q, lambda).inv()?;
                let proj = scale_vec(&scale, &eval_poly_in_algebra(h, &q, &e, x));
                rest = sub_vec(&rest, &proj);
                pending.push(proj);
            }
            if !crate::linalg::is_zero_vec(&rest) {
                pending.push(rest);
            }
            split = true;
            break;
        }
        if !split {
            return Err(Error::InternalConsistency(
                "block center is not spanned by the block idempotent".into(),
            ));
        }
    }

    let trace = h.regular_trace_form();
    let mut entries: Vec<(u64, Vector, Vector)> = Vec::with_capacity(blocks.len());
    for e in blocks {
        let tr = dot(&trace, &e);
        let sq = tr
            .as_integer()
            .filter(|v| *v > 0)
            .and_then(|v| isqrt(v as u64))
            .ok_or_else(|| Error::SplitFailure(format!("block of regular trace {tr} is not a split matrix block")))?;
        let inv_deg = CycScalar::frac(1, sq as i64);
        let chi: Vector = (0..dim)
            .map(|k| &dot(&trace, &h.mul_left_basis(k, &e)) * &inv_deg)
            .collect();
        entries.push((sq, chi, e));
    }
    let counit = h.counit().clone();
    entries.sort_by(|a, b| {
        let ua = a.1 != counit;
        let ub = b.1 != counit;
        ua.cmp(&ub).then(a.0.cmp(&b.0)).then_with(|| a.1.cmp(&b.1))
    });
    if entries.first().map(|e| &e.1) != Some(&counit) {
        return Err(Error::InternalConsistency("counit is not an irreducible character".into()));
    }
    let total: u64 = entries.iter().map(|e| e.0 * e.0).sum();
    if total != dim as u64 {
        return Err(Error::InternalConsistency(format!(
            "squared degrees sum to {total}, not {dim}"
        )));
    }
    let degrees: Vec<u64> = entries.iter().map(|e| e.0).collect();
    let characters: Vec<Vector> = entries.iter().map(|e| e.1.clone()).collect();
    let idempotents: Vec<Vector> = entries.into_iter().map(|e| e.2).collect();

    let s_rows: Vec<&Vector> = (0..dim).map(|i| h.antipode_basis(i)).collect();
    let mut dual_map = Vec::with_capacity(characters.len());
    for chi in &characters {
        let composed: Vector = s_rows.iter().map(|s| dot(chi, s)).collect();
        let j = characters
            .iter()
            .position(|c| *c == composed)
            .ok_or_else(|| Error::InternalConsistency("χ∘S is not an irreducible character".into()))?;
        dual_map.push(j);
    }
    Ok(IrrDecomposition {
        conductor: n,
        idempotents,
        characters,
        degrees,
        dual_map,
    })
}
