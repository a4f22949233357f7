//! Independent oracles: classical group-theoretic formulas for doubles of
//! finite groups, computed here without the library's Hopf machinery.

mod common;

use hopfcalc::double::DoubleContext;
use hopfcalc::examples::by_name;
use hopfcalc::repthy::decompose;
use hopfcalc::scalars::CycScalar;

#[test]
fn double_of_s3_matches_the_pair_count() {
    let (count, dims) = common::s3_double_pair_count();
    assert_eq!(count, 8);
    assert_eq!(common::classes(&common::s3(), &common::s3()).len(), 3);
    let (a, _) = by_name("kS3").unwrap();
    let ctx = DoubleContext::new(&a).unwrap();
    assert_eq!(ctx.rank(), count);
    let mut lib: Vec<usize> = ctx.dec.degrees.iter().map(|&d| d as usize).collect();
    lib.sort();
    assert_eq!(lib, dims);
    assert_eq!(decompose(&a).unwrap().degrees, vec![1, 1, 2]);
}

/// Simple `(a, m)` of `D(Z_n)`: `δ_x ⋈ y ↦ [x = a] ζ_n^{m y}`. Its character as a
/// functional on the basis `b_p^* ⋈ b_q` (index `p n + q`).
fn abelian_character(n: usize, a: usize, m: usize) -> Vec<CycScalar> {
    let mut out = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            out.push(if p == a {
                CycScalar::zeta_pow(n as u32, (m * q) as i64)
            } else {
                CycScalar::zero()
            });
        }
    }
    out
}

/// For the R-matrix `Σ (ε ⋈ g) ⊗ (δ_g ⋈ 1)` one finds
/// `s_{(a,m),(b,l)} = conj(ζ^{m b + l a})` and `θ_{(a,m)} = conj(ζ^{m a})`.
#[test]
fn abelian_doubles_match_the_closed_form() {
    for (name, n) in [("kZ2", 2usize), ("kZ3", 3), ("kZ4", 4)] {
        let (a, _) = by_name(name).unwrap();
        let ctx = DoubleContext::new(&a).unwrap();
        assert_eq!(ctx.rank(), n * n);
        let labels: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |m| (x, m))).collect();
        let index: Vec<usize> = labels
            .iter()
            .map(|&(x, m)| {
                let chi = abelian_character(n, x, m);
                ctx.dec
                    .characters
                    .iter()
                    .position(|c| *c == chi)
                    .unwrap_or_else(|| panic!("{name}: no simple with the character of ({x}, {m})"))
            })
            .collect();
        let zeta = |k: usize| CycScalar::zeta_pow(n as u32, k as i64);
        for (u, &(x, m)) in labels.iter().enumerate() {
            assert_eq!(ctx.twist[index[u]], zeta(m * x).conj(), "{name}: twist of ({x}, {m})");
            for (v, &(y, l)) in labels.iter().enumerate() {
                let expected = zeta(m * y + l * x).conj();
                assert_eq!(*ctx.s.get(index[u], index[v]), expected, "{name}: s at ({x},{m}), ({y},{l})");
            }
        }
    }
}

/// Fusion subcategories of `Rep(D(Z_2))` are the subgroups of `Z_2 × Z_2`.
#[test]
fn toric_code_has_five_subcategories() {
    let subgroups = common::klein_subgroups();
    assert_eq!(subgroups, 5);
    let (a, _) = by_name("kZ2").unwrap();
    let ctx = DoubleContext::new(&a).unwrap();
    let lattice = ctx.lattice().unwrap();
    assert!(lattice.exhaustive);
    assert_eq!(lattice.subcategories.len(), subgroups);
}

/// One-dimensional representations of H8 are the assignments `x, y ↦ ±1`,
/// `z ↦ c` respecting `zx = yz`, `zy = xz` and `z² = (1 + x + y − xy)/2`.
/// Counting them and completing `Σ deg² = 8` gives the degree pattern.
#[test]
fn h8_degrees() {
    let candidates = [
        CycScalar::zero(),
        CycScalar::one(),
        CycScalar::from_int(-1),
        CycScalar::zeta(4),
        -&CycScalar::zeta(4),
    ];
    let mut linear = 0;
    for x in [1i64, -1] {
        for y in [1i64, -1] {
            let (cx, cy) = (CycScalar::from_int(x), CycScalar::from_int(y));
            let square = CycScalar::frac(1 + x + y - x * y, 2);
            for c in &candidates {
                if &(c * &cx) == &(&cy * c) && &(c * &cy) == &(&cx * c) && &(c * c) == &square {
                    linear += 1;
                }
            }
        }
    }
    assert_eq!(linear, 4);
    let (h, _) = by_name("H8").unwrap();
    let dec = decompose(&h).unwrap();
    assert_eq!(dec.degrees, vec![1, 1, 1, 1, 2]);
    assert_eq!(dec.degrees.iter().filter(|&&d| d == 1).count(), linear);
}
