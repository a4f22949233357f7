//! Property tests: field axioms, subspace dimension counts and the centralizer
//! calculus on random inputs.

use std::sync::OnceLock;

use proptest::prelude::*;

use hopfcalc::double::DoubleContext;
use hopfcalc::examples::by_name;
use hopfcalc::linalg::{Subspace, Vector};
use hopfcalc::repthy::FusionSubcategory;
use hopfcalc::scalars::{CycScalar, Rat};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn scalar() -> impl Strategy<Value = CycScalar> {
    (
        prop::sample::select(vec![1u32, 3, 4, 5, 6, 8, 12]),
        prop::collection::vec((-6i64..=6, 1i64..=4), 1..6),
    )
        .prop_map(|(n, cs)| {
            let coeffs: Vec<Rat> = cs.into_iter().map(|(p, q)| Rat::new(p, q)).collect();
            CycScalar::from_powers(n, &coeffs)
        })
}

fn vector(dim: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(-3i64..=3, dim).prop_map(|v| v.into_iter().map(CycScalar::from_int).collect())
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn galois_conjugation_is_multiplicative(a in scalar(), b in scalar(), k in prop::sample::select(vec![1i64, 7, 11, 13, 17, 19, 23])) {
        prop_assert_eq!((&a * &b).galois(k), &a.galois(k) * &b.galois(k));
        prop_assert_eq!((&a + &b).galois(k), &a.galois(k) + &b.galois(k));
    }

    #[test]
    fn literals_round_trip(a in scalar()) {
        let parsed: CycScalar = a.to_string().parse().unwrap();
        prop_assert_eq!(parsed, a);
    }

    #[test]
    fn embedding_respects_products(a in scalar(), b in scalar()) {
        let lhs = (&a * &b).to_complex();
        let rhs = a.to_complex() * b.to_complex();
        prop_assert!((lhs - rhs).norm() < 1e-9 * (1.0 + rhs.norm()));
    }

    #[test]
    fn subspace_dimension_formula(
        u in prop::collection::vec(vector(6), 0..5),
        w in prop::collection::vec(vector(6), 0..5),
    ) {
        let u = Subspace::span(6, &u);
        let w = Subspace::span(6, &w);
        prop_assert_eq!(u.sum(&w).dim() + u.intersect(&w).dim(), u.dim() + w.dim());
        prop_assert!(u.intersect(&w).is_subspace_of(&u));
        prop_assert_eq!(u.annihilator().dim(), 6 - u.dim());
    }
}

fn s3_double() -> &'static DoubleContext {
    static CTX: OnceLock<DoubleContext> = OnceLock::new();
    CTX.get_or_init(|| DoubleContext::new(&by_name("kS3").unwrap().0).unwrap())
}

fn closure(mask: u32) -> FusionSubcategory {
    let ctx = s3_double();
    let seed: Vec<usize> = (0..ctx.rank()).filter(|j| mask >> j & 1 == 1).collect();
    ctx.closure(&seed).unwrap()
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn centralizer_calculus(m1 in 0u32..256, m2 in 0u32..256) {
        let ctx = s3_double();
        let rules = ctx.rules().unwrap();
        let (k, l) = (closure(m1), closure(m2));
        prop_assert!(k.is_closed(&ctx.dec, rules));
        let kp = ctx.centralizer(&k).unwrap();
        let lp = ctx.centralizer(&l).unwrap();
        prop_assert_eq!(k.fpdim(&ctx.dec) * kp.fpdim(&ctx.dec), ctx.global_dim());
        prop_assert_eq!(ctx.centralizer(&kp).unwrap(), k.clone());
        prop_assert_eq!(ctx.centralizer(&k.join(&l, &ctx.dec, rules)).unwrap(), kp.intersect(&lp));
        prop_assert_eq!(ctx.centralizer(&k.intersect(&l)).unwrap(), kp.join(&lp, &ctx.dec, rules));
        if k.is_subcategory_of(&l) {
            prop_assert!(lp.is_subcategory_of(&kp));
        }
    }

    #[test]
    fn phi_maps_class_functions_to_central_elements(coeffs in prop::collection::vec(-3i64..=3, 8)) {
        let ctx = s3_double();
        let d = ctx.d();
        let mut f = vec![CycScalar::zero(); d.dim()];
        for (c, chi) in coeffs.iter().zip(&ctx.dec.characters) {
            hopfcalc::linalg::axpy(&mut f, &CycScalar::from_int(*c), chi);
        }
        let z = ctx.phi_of(&f);
        for &g in d.generators() {
            prop_assert_eq!(d.mul_right_basis(&z, g), d.mul_left_basis(g, &z));
        }
    }

    #[test]
    fn comultiplication_is_multiplicative_on_random_elements(x in vector(36), y in vector(36)) {
        let d = s3_double().d();
        let lhs = d.comul(&d.mul(&x, &y));
        let rhs = d.mul_tensor(&d.comul(&x), &d.comul(&y));
        prop_assert_eq!(lhs, rhs);
    }
}
