//! Split abelian extensions `k^G # kF` from matched pairs of groups.

use serde::Serialize;

use super::groups::GroupPresentation;
use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, HopfData};
use crate::linalg::{zero_vec, Vector};
use crate::scalars::CycScalar;

/// A matched pair of groups, presented by the factorization rule
/// `g·x = (g ▷ x)(g ◁ x)` for `g ∈ G`, `x ∈ F`.
///
/// `▷` is a left action of `G` on the set `F`, `◁` a right action of `F` on
/// the set `G`, subject to `g ▷ xy = (g ▷ x)((g ◁ x) ▷ y)` and
/// `gh ◁ x = (g ◁ (h ▷ x))(h ◁ x)`.
#[derive(Clone, Debug, Serialize)]
pub struct MatchedPair {
    pub f: GroupPresentation,
    pub g: GroupPresentation,
    /// `left[g][x] = g ▷ x ∈ F`.
    pub left: Vec<Vec<usize>>,
    /// `right[g][x] = g ◁ x ∈ G`.
    pub right: Vec<Vec<usize>>,
}

impl MatchedPair {
    pub fn new(
        f: GroupPresentation,
        g: GroupPresentation,
        left: Vec<Vec<usize>>,
        right: Vec<Vec<usize>>,
    ) -> Result<MatchedPair> {
        let m = MatchedPair { f, g, left, right };
        m.validate()?;
        Ok(m)
    }

    /// Trivial actions: `A = k^G ⊗ kF`.
    pub fn trivial(f: GroupPresentation, g: GroupPresentation) -> MatchedPair {
        let left = (0..g.order()).map(|_| (0..f.order()).collect()).collect();
        let right = (0..g.order()).map(|a| vec![a; f.order()]).collect();
        MatchedPair { f, g, left, right }
    }

    /// The matched pair of an exact factorization `Σ = F·G`: the subgroups
    /// `F`, `G` of `Σ` meet trivially and `|F||G| = |Σ|`.
    pub fn from_factorization(sigma: &GroupPresentation, f_elems: &[usize], g_elems: &[usize]) -> Result<MatchedPair> {
        let (f, _) = sigma.restrict(format!("{}_F", sigma.name), f_elems)?;
        let (g, _) = sigma.restrict(format!("{}_G", sigma.name), g_elems)?;
        if f_elems.len() * g_elems.len() != sigma.order() {
            return Err(Error::Precondition("subgroup orders do not multiply to the group order".into()));
        }
        // factor every σ uniquely as x·h with x ∈ F, h ∈ G
        let mut factor = vec![None; sigma.order()];
        for (xi, &x) in f_elems.iter().enumerate() {
            for (hi, &h) in g_elems.iter().enumerate() {
                let p = sigma.mul(x, h);
                if factor[p].is_some() {
                    return Err(Error::Precondition("factorization is not exact".into()));
                }
                factor[p] = Some((xi, hi));
            }
        }
        let mut left = vec![vec![0; f.order()]; g.order()];
        let mut right = vec![vec![0; f.order()]; g.order()];
        for (gi, &ge) in g_elems.iter().enumerate() {
            for (xi, &xe) in f_elems.iter().enumerate() {
                let (a, b) = factor[sigma.mul(ge, xe)].expect("factorization covers the group");
                left[gi][xi] = a;
                right[gi][xi] = b;
            }
        }
        MatchedPair::new(f, g, left, right)
    }

    /// Checks the action and compatibility identities on all pairs and triples.
    pub fn validate(&self) -> Result<()> {
        let (f, g) = (&self.f, &self.g);
        let bad = |m: String| Err(Error::Precondition(format!("matched pair: {m}")));
        if self.left.len() != g.order()
            || self.right.len() != g.order()
            || self.left.iter().chain(&self.right).any(|r| r.len() != f.order())
        {
            return bad("action tables have the wrong shape".into());
        }
        for a in 0..g.order() {
            if self.left[a][f.identity] != f.identity || self.right[a][f.identity] != a {
                return bad(format!("identity of F does not act trivially at {a}"));
            }
        }
        for x in 0..f.order() {
            if self.left[g.identity][x] != x || self.right[g.identity][x] != g.identity {
                return bad(format!("identity of G does not act trivially at {x}"));
            }
        }
        for a in 0..g.order() {
            for x in 0..f.order() {
                for y in 0..f.order() {
                    let xy = f.mul(x, y);
                    let lhs = self.left[a][xy];
                    let rhs = f.mul(self.left[a][x], self.left[self.right[a][x]][y]);
                    if lhs != rhs {
                        return bad(format!("g ▷ xy fails at ({a}, {x}, {y})"));
                    }
                    if self.right[a][xy] != self.right[self.right[a][x]][y] {
                        return bad(format!("◁ is not a right action at ({a}, {x}, {y})"));
                    }
                }
                for b in 0..g.order() {
                    let ab = g.mul(a, b);
                    let bx = self.left[b][x];
                    if self.left[ab][x] != self.left[a][bx] {
                        return bad(format!("▷ is not a left action at ({a}, {b}, {x})"));
                    }
                    let rhs = g.mul(self.right[a][bx], self.right[b][x]);
                    if self.right[ab][x] != rhs {
                        return bad(format!("gh ◁ x fails at ({a}, {b}, {x})"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Basis index of `e_g # x`.
    pub fn index(&self, g: usize, x: usize) -> usize {
        g * self.f.order() + x
    }
}

/// The bismash product `A = k^G # kF` in the basis `e_g # x`:
///
/// - `(e_g # x)(e_h # y) = δ_{g◁x, h} e_g # xy`
/// - `Δ(e_g # x) = Σ_{ab = g} (e_a # (b ▷ x)) ⊗ (e_b # x)`
/// - `ε(e_g # x) = δ_{g,1}`, `1 = Σ_g e_g # 1`
/// - `S(e_g # x) = e_{(g◁x)⁻¹} # (g ▷ x)⁻¹`
pub fn bismash_product(m: &MatchedPair) -> Result<HopfAlgebra> {
    m.validate()?;
    let (f, g) = (&m.f, &m.g);
    let n = f.order() * g.order();
    let one = CycScalar::one;
    let mut mult = Vec::new();
    let mut comult = Vec::new();
    let mut antipode: Vec<Vector> = Vec::with_capacity(n);
    let mut counit = zero_vec(n);
    let mut unit = zero_vec(n);
    let mut labels = Vec::with_capacity(n);
    for a in 0..g.order() {
        unit[m.index(a, f.identity)] = one();
        for x in 0..f.order() {
            let i = m.index(a, x);
            labels.push(format!("e[{}]#{}", g.labels[a], f.labels[x]));
            if a == g.identity {
                counit[i] = one();
            }
            let ax = m.right[a][x];
            for y in 0..f.order() {
                mult.push((i, m.index(ax, y), m.index(a, f.mul(x, y)), one()));
            }
            for p in 0..g.order() {
                // a = p·q
                let q = g.mul(g.inverse[p], a);
                comult.push((i, m.index(p, m.left[q][x]), m.index(q, x), one()));
            }
            let mut s = zero_vec(n);
            s[m.index(g.inverse[ax], f.inverse[m.left[a][x]])] = one();
            antipode.push(s);
        }
    }
    HopfAlgebra::from_data(HopfData {
        name: format!("k^{}#k{}", g.name, f.name),
        labels,
        conductor: 1,
        mult,
        unit,
        comult,
        counit,
        antipode,
    })
}

/// `k^{Z3} # kZ2` from the exact factorization `S3 = Z2·A3`.
pub fn s3_bismash() -> Result<(MatchedPair, HopfAlgebra)> {
    let s3 = GroupPresentation::symmetric3();
    let a3 = s3.subgroup("A3").expect("A3").to_vec();
    let s2 = s3.subgroup("S2").expect("S2").to_vec();
    let m = MatchedPair::from_factorization(&s3, &s2, &a3)?;
    let a = bismash_product(&m)?.with_name("k^Z3#kZ2");
    Ok((m, a))
}

/// The normal Hopf subalgebra `k^G # 1` as a list of basis vectors.
pub fn function_part(m: &MatchedPair) -> Vec<Vector> {
    let n = m.f.order() * m.g.order();
    (0..m.g.order())
        .map(|a| crate::linalg::unit_vec(n, m.index(a, m.f.identity)))
        .collect()
}
