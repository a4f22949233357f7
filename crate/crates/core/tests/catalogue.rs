//! Every catalogue algebra and its double: axioms, modular data and every
//! theorem check that applies.

use hopfcalc::double::{verify_theorem, DoubleContext, TheoremId, TheoremInputs, Verdict};
use hopfcalc::examples::{by_name, catalogue, function_part, s3_bismash};
use hopfcalc::hopf::verify_axioms;
use hopfcalc::linalg::Subspace;
use hopfcalc::repthy::decompose;

#[test]
fn catalogue_algebras_are_semisimple_hopf_algebras() {
    for name in catalogue() {
        let (h, _) = by_name(name).unwrap();
        let r = verify_axioms(&h);
        assert!(r.is_valid(), "{name}: {:?}", r.failures);
        let d = decompose(&h).unwrap();
        let total: u64 = d.degrees.iter().map(|&k| (k * k) as u64).sum();
        assert_eq!(total as usize, h.dim(), "{name}: sum of squared degrees");
    }
}

#[test]
fn modular_data_is_consistent() {
    for name in ["kZ2", "kZ3", "kS3", "k^S3", "H8"] {
        let ctx = DoubleContext::new(&by_name(name).unwrap().0).unwrap();
        let r = ctx.modular_report().unwrap();
        assert!(r.is_valid(), "D({name}): {r:?}");
        assert!(ctx.s.check(64).is_valid(), "D({name}) S-matrix");
    }
}

#[test]
fn no_theorem_check_fails() {
    for name in ["kZ2", "kZ4", "kS3", "k^S3", "k^Z3#kZ2"] {
        let (a, g) = by_name(name).unwrap();
        let ctx = DoubleContext::new(&a).unwrap();
        let k = match name {
            "kS3" => Subspace::coordinate(a.dim(), g.unwrap().subgroup("A3").unwrap()),
            "kZ4" => Subspace::coordinate(a.dim(), g.unwrap().subgroup("Z2").unwrap()),
            "k^Z3#kZ2" => Subspace::span(a.dim(), &function_part(&s3_bismash().unwrap().0)),
            _ => Subspace::full(a.dim()),
        };
        let mut passed = 0;
        for id in TheoremId::ALL {
            let r = verify_theorem(&ctx, id, &TheoremInputs::with_k("K", k.clone())).unwrap();
            assert_ne!(r.verdict, Verdict::Fail, "{name} {id}: {:?}", r.cases);
            if r.verdict == Verdict::Pass {
                passed += 1;
            }
        }
        assert!(passed >= TheoremId::ALL.len() - 1, "{name}: only {passed} checks applied");
    }
}
