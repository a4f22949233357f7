//! Acceptance suite: one line per criterion with its tolerance, then a
//! second full run compared byte for byte against the first.
//!
//! Runs without the test harness so the lines always print.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use hopfcalc::double::{module_on_k, verify_theorem, DoubleContext, Report, TheoremId, TheoremInputs};
use hopfcalc::examples::{by_name, function_part, s3_bismash, GroupPresentation};
use hopfcalc::hopf::{verify_axioms, HopfAlgebra};
use hopfcalc::linalg::{Subspace, Vector};
use hopfcalc::repthy::{
    decompose, enumerate_fusion_subcategories, fusion_rules, lattice_identities, normal_coideal_lattice,
    FusionSubcategory, Representation,
};
use hopfcalc::scalars::CycScalar;

/// Result of one criterion. `detail` must be deterministic; timings are kept apart.
struct Outcome {
    id: u8,
    title: &'static str,
    pass: bool,
    detail: String,
    tolerance: &'static str,
    report: Value,
    elapsed: Duration,
    budget: Option<Duration>,
}

impl Outcome {
    fn line(&self) -> String {
        let timing = match self.budget {
            Some(b) => format!("{:.2} s of {} s budget", self.elapsed.as_secs_f64(), b.as_secs()),
            None => format!("{:.2} s", self.elapsed.as_secs_f64()),
        };
        format!(
            "[{}] C{:02} {} | {} | tolerance: {} | {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.tolerance,
            timing
        )
    }
}

struct Suite {
    contexts: BTreeMap<&'static str, DoubleContext>,
}

impl Suite {
    fn new() -> Suite {
        Suite { contexts: BTreeMap::new() }
    }

    fn ctx(&mut self, name: &'static str) -> &DoubleContext {
        self.contexts
            .entry(name)
            .or_insert_with(|| DoubleContext::new(&by_name(name).unwrap().0).unwrap())
    }
}

fn algebra(name: &str) -> (HopfAlgebra, Option<GroupPresentation>) {
    by_name(name).unwrap()
}

fn subgroup(name: &str, sub: &str) -> Subspace {
    let (a, g) = algebra(name);
    Subspace::coordinate(a.dim(), g.unwrap().subgroup(sub).unwrap())
}

fn full(name: &str) -> Subspace {
    Subspace::full(algebra(name).0.dim())
}

fn unit(name: &str) -> Subspace {
    let a = algebra(name).0;
    Subspace::span(a.dim(), &[a.unit().clone()])
}

fn bismash_kernel() -> Subspace {
    let (m, h) = s3_bismash().unwrap();
    Subspace::span(h.dim(), &function_part(&m))
}

fn quotient_a3() -> Subspace {
    let one = |idx: [usize; 3]| -> Vector {
        (0..6)
            .map(|i| if idx.contains(&i) { CycScalar::one() } else { CycScalar::zero() })
            .collect()
    };
    Subspace::span(6, &[one([0, 1, 2]), one([3, 4, 5])])
}

fn run(suite: &mut Suite, id: TheoremId, algebra: &'static str, inputs: TheoremInputs) -> Report {
    verify_theorem(suite.ctx(algebra), id, &inputs).unwrap()
}

fn summary(r: &Report) -> Value {
    json!({
        "theorem": r.theorem,
        "algebra": r.algebra,
        "inputs": r.inputs,
        "verdict": r.verdict,
        "lhs": r.lhs_indices,
        "rhs": r.rhs_indices,
        "fpdims": r.fpdims,
        "dimensions": r.dimensions,
        "failed_cases": r.cases.iter().filter(|c| !c.holds).map(|c| c.label.clone()).collect::<Vec<_>>(),
        "failed_hypotheses": r.hypotheses.iter().filter(|h| !h.holds).map(|h| h.name.clone()).collect::<Vec<_>>(),
    })
}

fn criterion(
    id: u8,
    title: &'static str,
    tolerance: &'static str,
    budget: Option<u64>,
    body: impl FnOnce() -> (bool, String, Value),
) -> Outcome {
    let start = Instant::now();
    let (pass, detail, report) = body();
    let elapsed = start.elapsed();
    let budget = budget.map(Duration::from_secs);
    let within = budget.map_or(true, |b| elapsed <= b);
    Outcome {
        id,
        title,
        pass: pass && within,
        detail,
        tolerance,
        report,
        elapsed,
        budget,
    }
}

fn c01_axioms(suite: &mut Suite) -> Outcome {
    criterion(1, "axiom suite on algebras and doubles", "exact", Some(60), || {
        let mut failures = Vec::new();
        let mut checked = 0;
        for name in ["kZ2", "kS3", "k^S3", "k^Z3#kZ2", "H8"] {
            let a = algebra(name).0;
            let ra = verify_axioms(&a);
            let d = suite.ctx(name);
            let rd = verify_axioms(d.d());
            checked += 2;
            if !ra.is_valid() {
                failures.push(name.to_string());
            }
            if !rd.is_valid() || !d.r_report.is_valid() {
                failures.push(format!("D({name})"));
            }
        }
        (
            failures.is_empty(),
            format!("{checked} structures checked, failures: {failures:?}"),
            json!({ "checked": checked, "failures": failures }),
        )
    })
}

fn c02_wedderburn(suite: &mut Suite) -> Outcome {
    criterion(2, "Wedderburn sanity", "exact", Some(120), || {
        let s3 = decompose(&algebra("kS3").0).unwrap().degrees;
        let h8 = decompose(&algebra("H8").0).unwrap().degrees;
        let (oracle, oracle_dims) = common::s3_double_pair_count();
        let ctx = suite.ctx("kS3");
        let mut dims: Vec<usize> = ctx.dec.degrees.iter().map(|&d| d as usize).collect();
        dims.sort();
        let pass = s3 == [1, 1, 2] && h8 == [1, 1, 1, 1, 2] && ctx.rank() == oracle && oracle == 8 && dims == oracle_dims;
        (
            pass,
            format!(
                "Irr(kS3) {s3:?}, Irr(H8) {h8:?}, #Irr(D(kS3)) = {} vs class-centralizer oracle {oracle}",
                ctx.rank()
            ),
            json!({ "kS3": s3, "H8": h8, "double_kS3": dims, "oracle": oracle }),
        )
    })
}

const DOUBLES: [&str; 7] = ["kZ2", "kZ3", "kZ4", "kS3", "k^S3", "k^Z3#kZ2", "H8"];

fn c03_prop46(suite: &mut Suite) -> Outcome {
    criterion(3, "E_j(d) nonnegative integers summing to eps(d)", "exact", None, || {
        let mut bad = Vec::new();
        let mut rows = 0;
        for name in DOUBLES {
            let ctx = suite.ctx(name);
            let report = ctx.modular_report().unwrap();
            rows += report.e_table.len();
            if !(report.e_table_valid && report.e_sum_is_counit) {
                bad.push(name);
            }
        }
        (
            bad.is_empty(),
            format!("{} doubles, {rows} characters d of D(A)*, failures: {bad:?}", DOUBLES.len()),
            json!({ "rows": rows, "failures": bad }),
        )
    })
}

fn c04_smatrix(suite: &mut Suite) -> Outcome {
    criterion(4, "S-matrix invariants", "exact; |s_ij| bound via 128-bit certified intervals", None, || {
        let mut reports = BTreeMap::new();
        let mut pass = true;
        for name in ["kZ2", "kS3", "H8"] {
            let r = suite.ctx(name).s.check(128);
            pass &= r.is_valid();
            reports.insert(name, r);
        }
        let detail = reports
            .iter()
            .map(|(n, r)| format!("D({n}) {}", if r.is_valid() { "ok" } else { "violated" }))
            .collect::<Vec<_>>()
            .join(", ");
        (pass, detail, json!(reports))
    })
}

fn lattice_calculus(ctx: &DoubleContext) -> (usize, bool, usize) {
    let lattice = ctx.lattice().unwrap();
    let rules = ctx.rules().unwrap();
    let subs = &lattice.subcategories;
    let cents: Vec<FusionSubcategory> = subs.iter().map(|k| ctx.centralizer(k).unwrap()).collect();
    let mut failures = 0;
    for (k, kp) in subs.iter().zip(&cents) {
        if k.fpdim(&ctx.dec) * kp.fpdim(&ctx.dec) != ctx.global_dim() || ctx.centralizer(kp).unwrap() != *k {
            failures += 1;
        }
    }
    for i in 0..subs.len() {
        for j in 0..subs.len() {
            let join = ctx.centralizer(&subs[i].join(&subs[j], &ctx.dec, rules)).unwrap();
            let meet = ctx.centralizer(&subs[i].intersect(&subs[j])).unwrap();
            if join != cents[i].intersect(&cents[j]) || meet != cents[i].join(&cents[j], &ctx.dec, rules) {
                failures += 1;
            }
        }
    }
    (subs.len(), lattice.exhaustive, failures)
}

fn c05_muger(suite: &mut Suite) -> Outcome {
    criterion(5, "Müger calculus over all fusion subcategories", "exact", Some(600), || {
        let (n2, ex2, f2) = lattice_calculus(suite.ctx("kZ2"));
        let (n3, ex3, f3) = lattice_calculus(suite.ctx("kS3"));
        let oracle = common::klein_subgroups();
        let pass = ex2 && ex3 && f2 == 0 && f3 == 0 && n2 == oracle;
        (
            pass,
            format!(
                "Rep(D(kZ2)): {n2} subcategories (Z2×Z2 subgroup oracle {oracle}), Rep(D(kS3)): {n3} over 2^8 subsets; \
                 FPdim products, K'' = K and both De Morgan laws: {} failures",
                f2 + f3
            ),
            json!({ "kZ2": n2, "kS3": n3, "oracle_kZ2": oracle, "failures": f2 + f3 }),
        )
    })
}

fn c06_thm12(suite: &mut Suite) -> Outcome {
    criterion(6, "D(K)' = <K>", "exact set equality", None, || {
        let cases: Vec<(&'static str, &str, Subspace)> = vec![
            ("kZ2", "kZ2", full("kZ2")),
            ("kS3", "kA3", subgroup("kS3", "A3")),
            ("kS3", "kS3", full("kS3")),
            ("kZ4", "kZ2", subgroup("kZ4", "Z2")),
            ("kZ2", "k1", unit("kZ2")),
            ("kS3", "k1", unit("kS3")),
        ];
        let mut pass = true;
        let mut parts = Vec::new();
        let mut reports = Vec::new();
        for (a, label, k) in cases {
            let r = run(suite, TheoremId::KernelCategoryCentralizer, a, TheoremInputs::with_k(label, k));
            let mut ok = r.passed();
            if label == "k1" {
                // both sides are the Müger center, which is trivial
                ok &= r.lhs_indices.as_deref() == Some(&[0][..]) && r.rhs_indices == r.lhs_indices;
            }
            pass &= ok;
            parts.push(format!("({a}, {label}) {}", if ok { "ok" } else { "FAILED" }));
            reports.push(summary(&r));
        }
        (pass, parts.join(", "), json!(reports))
    })
}

fn c07_thm11(suite: &mut Suite) -> Outcome {
    criterion(7, "D(K,L)' = D(L,K)", "exact", None, || {
        let k = subgroup("kS3", "A3");
        let r = run(
            suite,
            TheoremId::CommutingPairCentralizer,
            "kS3",
            TheoremInputs::with_pair("kA3", k.clone(), "kA3", k),
        );
        let hyps = r.hypotheses.len();
        let all_hold = r.hypotheses.iter().all(|h| h.holds);
        let fp = r.lhs_indices.as_ref().map(|_| r.fpdims.get("lhs").copied().unwrap_or(0)).unwrap_or(0);
        let expected = 6 * 3 / 3;
        let pass = r.passed() && all_hold && hyps >= 4 && fp == expected;
        (
            pass,
            format!("(kS3, K = L = kA3): {hyps} hypotheses hold, FPdim D(K,L)' = {fp} = dim A·dim L/dim K = {expected}"),
            summary(&r),
        )
    })
}

fn c08_kernels(suite: &mut Suite) -> Outcome {
    criterion(8, "Hopf kernels, quotient categories and grouplikes", "exact", None, || {
        let mut pass = true;
        let mut parts = Vec::new();
        let mut reports = Vec::new();
        for (a, k) in [("kZ2", full("kZ2")), ("kS3", subgroup("kS3", "A3"))] {
            for (id, inputs) in [
                (TheoremId::HopfKernelCentralizer, TheoremInputs::none()),
                (TheoremId::QuotientCategoryCentralizer, TheoremInputs::with_k("K", k.clone())),
                (TheoremId::GrouplikeIdempotent, TheoremInputs::none()),
            ] {
                let r = run(suite, id, a, inputs);
                pass &= r.passed();
                parts.push(format!("{id} on D({a}) {} cases", r.cases.len()));
                reports.push(summary(&r));
            }
        }
        (pass, parts.join(", "), json!(reports))
    })
}

fn c09_brauer(suite: &mut Suite) -> Outcome {
    criterion(9, "<M> = Rep(D(A)//LKer(M))", "exact", None, || {
        let mut modules = 0;
        let mut failures = Vec::new();
        for (a, k) in [
            ("kZ2", full("kZ2")),
            ("kS3", subgroup("kS3", "A3")),
            ("kS3", full("kS3")),
            ("kZ4", subgroup("kZ4", "Z2")),
        ] {
            let ctx = suite.ctx(a);
            for j in 0..ctx.rank() {
                let m = Representation::isotypic(ctx.d(), &ctx.dec, j);
                let (gen, triv) = ctx.brauer_pair(&m).unwrap();
                modules += 1;
                if gen != triv {
                    failures.push(format!("D({a}) simple {j}"));
                }
            }
            let m = module_on_k(&ctx.base, ctx.d(), &k).unwrap();
            let (gen, triv) = ctx.brauer_pair(&m).unwrap();
            modules += 1;
            if gen != triv {
                failures.push(format!("D({a}) module on K of dim {}", k.dim()));
            }
        }
        (
            failures.is_empty(),
            format!("{modules} modules (all simples and the module on K), failures: {failures:?}"),
            json!({ "modules": modules, "failures": failures }),
        )
    })
}

fn c10_lattice(suite: &mut Suite) -> Outcome {
    criterion(10, "normal left coideal lattice identities", "exact", None, || {
        let mut pass = true;
        let mut parts = Vec::new();
        let mut reports = BTreeMap::new();
        let a = algebra("kS3").0;
        let dec = decompose(&a).unwrap();
        let rules = fusion_rules(&a, &dec, &hopfcalc::hopf::integral(&a).unwrap()).unwrap();
        let lat = enumerate_fusion_subcategories(&dec, &rules).unwrap();
        let entries = normal_coideal_lattice(&a, &dec, &lat).unwrap();
        let r = lattice_identities(&a, &dec, &rules, &entries).unwrap();
        pass &= r.holds();
        parts.push(format!("kS3 {} entries", r.size));
        reports.insert("kS3".to_string(), json!(r));
        for name in ["kZ2", "kS3"] {
            let ctx = suite.ctx(name);
            let entries = normal_coideal_lattice(ctx.d(), &ctx.dec, ctx.lattice().unwrap()).unwrap();
            let r = lattice_identities(ctx.d(), &ctx.dec, ctx.rules().unwrap(), &entries).unwrap();
            pass &= r.holds();
            parts.push(format!("D({name}) {} entries", r.size));
            reports.insert(format!("D({name})"), json!(r));
        }
        (pass, parts.join(", "), json!(reports))
    })
}

fn c11_lagrangian(suite: &mut Suite) -> Outcome {
    criterion(11, "D(k^G,k^G) Lagrangian, commutative containment", "exact", None, || {
        let mut pass = true;
        let mut parts = Vec::new();
        let mut reports = Vec::new();
        for (a, label, k) in [("k^S3", "k^S3", full("k^S3")), ("k^Z3#kZ2", "k^Z3", bismash_kernel())] {
            let r = run(suite, TheoremId::LagrangianAbelianExtension, a, TheoremInputs::with_k(label, k));
            pass &= r.passed();
            parts.push(format!("{a} {}", if r.passed() { "ok" } else { "FAILED" }));
            reports.push(summary(&r));
        }
        let r = run(
            suite,
            TheoremId::CommutativeContainment,
            "kS3",
            TheoremInputs::with_k("kA3", subgroup("kS3", "A3")),
        );
        pass &= r.passed();
        parts.push(format!("containment (kS3, kA3) {}", if r.passed() { "ok" } else { "FAILED" }));
        reports.push(summary(&r));
        (pass, parts.join(", "), json!(reports))
    })
}

fn c12_left_kernels(suite: &mut Suite) -> Outcome {
    criterion(12, "left kernel inclusions on both sides", "exact", None, || {
        let mut pass = true;
        let mut parts = Vec::new();
        let mut reports = Vec::new();
        let runs = [
            (TheoremId::LeftKernelOfNormalSubalgebra, "kS3", TheoremInputs::with_k("kA3", subgroup("kS3", "A3"))),
            (TheoremId::LeftKernelOfDualQuotient, "k^S3", TheoremInputs::with_l("k^(S3/A3)", quotient_a3())),
            (TheoremId::LeftKernelOfDualQuotient, "k^S3", TheoremInputs::with_l("k^S3", full("k^S3"))),
        ];
        for (id, a, inputs) in runs {
            let r = run(suite, id, a, inputs);
            pass &= r.passed();
            let dims: Vec<String> = r.dimensions.iter().map(|(k, v)| format!("{k} = {v}")).collect();
            parts.push(format!("{id} on {a}: {}", dims.join(", ")));
            reports.push(summary(&r));
        }
        (pass, parts.join("; "), json!(reports))
    })
}

/// Criteria 1 to 12 on fresh contexts.
fn suite_run() -> Vec<Outcome> {
    let mut suite = Suite::new();
    vec![
        c01_axioms(&mut suite),
        c02_wedderburn(&mut suite),
        c03_prop46(&mut suite),
        c04_smatrix(&mut suite),
        c05_muger(&mut suite),
        c06_thm12(&mut suite),
        c07_thm11(&mut suite),
        c08_kernels(&mut suite),
        c09_brauer(&mut suite),
        c10_lattice(&mut suite),
        c11_lagrangian(&mut suite),
        c12_left_kernels(&mut suite),
    ]
}

fn report_bytes(outcomes: &[Outcome]) -> String {
    let v: Vec<Value> = outcomes
        .iter()
        .map(|o| json!({ "id": o.id, "pass": o.pass, "detail": o.detail, "report": o.report }))
        .collect();
    serde_json::to_string_pretty(&v).unwrap()
}

fn main() {
    let first = suite_run();
    let start = Instant::now();
    let second = suite_run();
    let (a, b) = (report_bytes(&first), report_bytes(&second));
    let determinism = Outcome {
        id: 13,
        title: "determinism",
        pass: a == b,
        detail: format!("two full runs, {} report bytes each, identical: {}", a.len(), a == b),
        tolerance: "byte-identical",
        report: Value::Null,
        elapsed: start.elapsed(),
        budget: None,
    };
    let mut failed = Vec::new();
    for o in first.iter().chain(std::iter::once(&determinism)) {
        println!("{}", o.line());
        if !o.pass {
            failed.push(o.id);
        }
    }
    if !failed.is_empty() {
        eprintln!("criteria failed: {failed:?}");
        std::process::exit(1);
    }
    println!("all 13 criteria pass");
}
