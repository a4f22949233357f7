//! Group-theoretic oracles shared by the integration tests, computed from
//! permutations without the library.

use std::collections::BTreeSet;

/// S3 as permutations of {0,1,2}, composed right to left.
pub fn s3() -> Vec<[usize; 3]> {
    vec![[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [2, 1, 0], [0, 2, 1]]
}

pub fn compose(a: &[usize; 3], b: &[usize; 3]) -> [usize; 3] {
    [a[b[0]], a[b[1]], a[b[2]]]
}

pub fn inverse(a: &[usize; 3]) -> [usize; 3] {
    let mut out = [0; 3];
    for (i, &x) in a.iter().enumerate() {
        out[x] = i;
    }
    out
}

pub fn classes(elems: &[[usize; 3]], group: &[[usize; 3]]) -> Vec<BTreeSet<[usize; 3]>> {
    let mut out: Vec<BTreeSet<[usize; 3]>> = Vec::new();
    for x in elems {
        if out.iter().any(|c| c.contains(x)) {
            continue;
        }
        out.push(group.iter().map(|g| compose(&compose(g, x), &inverse(g))).collect());
    }
    out
}

/// Degrees of the irreducibles of a group of order `n` with `k` classes and
/// `linear` one-dimensional characters: the unique multiset found by search.
pub fn degrees(n: usize, k: usize, linear: usize) -> Vec<usize> {
    fn search(rest: usize, slots: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 0 {
            if rest == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for d in (2..=max).rev() {
            if d * d <= rest {
                acc.push(d);
                search(rest - d * d, slots - 1, d, acc, out);
                acc.pop();
            }
        }
    }
    let mut found = Vec::new();
    let mut acc = Vec::new();
    search(n - linear, k - linear, n, &mut acc, &mut found);
    assert_eq!(found.len(), 1, "degree pattern not determined");
    let mut d = vec![1; linear];
    d.extend(found.pop().unwrap());
    d.sort();
    d
}

/// `(Σ over classes of #Irr(centralizer), sorted degrees |class|·deg ρ)` for D(S3).
pub fn s3_double_pair_count() -> (usize, Vec<usize>) {
    let g = s3();
    let mut count = 0;
    let mut dims = Vec::new();
    for c in &classes(&g, &g) {
        let x = c.iter().next().unwrap();
        let cent: Vec<[usize; 3]> = g.iter().copied().filter(|h| compose(h, x) == compose(x, h)).collect();
        let cent_classes = classes(&cent, &cent);
        let commutators: BTreeSet<[usize; 3]> = cent
            .iter()
            .flat_map(|a| {
                cent.iter()
                    .map(move |b| compose(&compose(a, b), &compose(&inverse(a), &inverse(b))))
            })
            .collect();
        let linear = cent.len() / commutators.len();
        count += cent_classes.len();
        for d in degrees(cent.len(), cent_classes.len(), linear) {
            dims.push(c.len() * d);
        }
    }
    dims.sort();
    (count, dims)
}

/// Number of subgroups of `Z_2 × Z_2`, the fusion subcategories of `Rep(D(Z_2))`.
pub fn klein_subgroups() -> usize {
    let elems: Vec<(u8, u8)> = vec![(0, 0), (0, 1), (1, 0), (1, 1)];
    (0u32..16)
        .filter(|mask| {
            let s: Vec<(u8, u8)> = (0..4).filter(|i| mask >> i & 1 == 1).map(|i| elems[i]).collect();
            s.contains(&(0, 0)) && s.iter().all(|x| s.iter().all(|y| s.contains(&((x.0 + y.0) % 2, (x.1 + y.1) % 2))))
        })
        .count()
}
