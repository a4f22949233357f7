//! Mechanical verification of centralizer identities in `Rep(D(A))`.
//!
//! Each verifier computes the two sides of an identity along separate code
//! paths (S-matrix centralizers on one side; modules, kernels, integrals or
//! idempotents on the other), checks the hypotheses first, and never reports
//! a pass when a hypothesis fails.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::context::DoubleContext;
use super::modules::{dual_side_module, module_on_k, restrict_to_submodule};
use crate::error::{Error, Result};
use crate::hopf::{adjoint_module, classify_subspace, dual_quotient_subalgebra, quotient, HopfAlgebra};
use crate::linalg::{scale_vec, Subspace, Vector};
use crate::repthy::{
    coideal_integral, decompose, generated_subcategory, grouplikes, hopf_kernel, left_kernel, rep_trivial_on,
    FusionSubcategory, Representation,
};
use crate::scalars::CycScalar;

/// The identities the suite can verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// `D(K, L)' = D(L, K)` for a commuting pair of normal Hopf subalgebras.
    CommutingPairCentralizer,
    /// `D(K)' = ⟨K⟩` for a normal Hopf subalgebra `K`.
    KernelCategoryCentralizer,
    /// `Rep(HKer(d)*)' = ⟨χ_j | E_j(d) ≠ 0⟩` for every `d ∈ Irr(D(A)*)`.
    HopfKernelCentralizer,
    /// `Rep(D//N)' = ⟨χ_j | E_j(Λ_N) ≠ 0⟩` for normal Hopf subalgebras `N` of `D(A)`.
    QuotientCategoryCentralizer,
    /// Each grouplike `g` of `D(A)` singles out one `E_g`, proportional to `F_g`.
    GrouplikeIdempotent,
    /// `D((A//L)*)' = ⟨(A//L)*⟩`.
    DualSideCentralizer,
    /// `(A//K)* ⋈ LKer_A(K) ⊆ LKer_{D(A)}(K)`.
    LeftKernelOfNormalSubalgebra,
    /// `LKer_{A*}((A//L)*) ⋈ L ⊆ LKer_{D(A)}((A//L)*)`.
    LeftKernelOfDualQuotient,
    /// `D(K)' ⊆ D(K)` for a commutative normal Hopf subalgebra `K`.
    CommutativeContainment,
    /// `D(k^G, k^G)` is Lagrangian for an abelian extension `k^G → A → kF`.
    LagrangianAbelianExtension,
    /// `FPdim(K)·FPdim(K') = FPdim(Rep(D(A)))` for every fusion subcategory.
    DimensionProduct,
    /// `(K ∨ L)' = K' ∩ L'` and `(K ∩ L)' = K' ∨ L'` for every pair.
    DeMorgan,
    /// `K'' = K` for every fusion subcategory.
    DoubleCentralizer,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        TheoremId::CommutingPairCentralizer,
        TheoremId::KernelCategoryCentralizer,
        TheoremId::HopfKernelCentralizer,
        TheoremId::QuotientCategoryCentralizer,
        TheoremId::GrouplikeIdempotent,
        TheoremId::DualSideCentralizer,
        TheoremId::LeftKernelOfNormalSubalgebra,
        TheoremId::LeftKernelOfDualQuotient,
        TheoremId::CommutativeContainment,
        TheoremId::LagrangianAbelianExtension,
        TheoremId::DimensionProduct,
        TheoremId::DeMorgan,
        TheoremId::DoubleCentralizer,
    ];

    /// The stable identifier used on the command line and in reports.
    pub fn id(self) -> &'static str {
        match self {
            TheoremId::CommutingPairCentralizer => "thm1.1",
            TheoremId::KernelCategoryCentralizer => "thm1.2",
            TheoremId::HopfKernelCentralizer => "thm4.8",
            TheoremId::QuotientCategoryCentralizer => "cor4.10",
            TheoremId::GrouplikeIdempotent => "grouplike4.14",
            TheoremId::DualSideCentralizer => "cor5.5",
            TheoremId::LeftKernelOfNormalSubalgebra => "prop5.3",
            TheoremId::LeftKernelOfDualQuotient => "prop5.6",
            TheoremId::CommutativeContainment => "cor5.9",
            TheoremId::LagrangianAbelianExtension => "thm5.10",
            TheoremId::DimensionProduct => "eq2.5",
            TheoremId::DeMorgan => "eq2.6",
            TheoremId::DoubleCentralizer => "double_centralizer",
        }
    }

    /// The identity being checked, in words.
    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::CommutingPairCentralizer => "D(K,L)' = D(L,K)",
            TheoremId::KernelCategoryCentralizer => "D(K)' = <K>",
            TheoremId::HopfKernelCentralizer => "Rep(HKer(d)*)' = <chi_j : E_j(d) != 0>",
            TheoremId::QuotientCategoryCentralizer => "Rep(D//N)' = <chi_j : E_j(Lambda_N) != 0>",
            TheoremId::GrouplikeIdempotent => "Rep(HKer(g)*)' = <chi_g>, E_g proportional to F_g",
            TheoremId::DualSideCentralizer => "D((A//L)*)' = <(A//L)*>",
            TheoremId::LeftKernelOfNormalSubalgebra => "(A//K)* x LKer_A(K) inside LKer_D(K)",
            TheoremId::LeftKernelOfDualQuotient => "LKer_A*((A//L)*) x L inside LKer_D((A//L)*)",
            TheoremId::CommutativeContainment => "D(K)' inside D(K)",
            TheoremId::LagrangianAbelianExtension => "D(k^G,k^G) is Lagrangian",
            TheoremId::DimensionProduct => "FPdim(K) FPdim(K') = FPdim(C)",
            TheoremId::DeMorgan => "(K v L)' = K' ^ L' and (K ^ L)' = K' v L'",
            TheoremId::DoubleCentralizer => "K'' = K",
        }
    }

    /// Whether the verifier requires a subspace `K` of `A`, and whether it requires `L`.
    /// The quotient-category check accepts an optional `K`.
    pub fn inputs(self) -> (bool, bool) {
        match self {
            TheoremId::CommutingPairCentralizer => (true, true),
            TheoremId::KernelCategoryCentralizer
            | TheoremId::LeftKernelOfNormalSubalgebra
            | TheoremId::CommutativeContainment
            | TheoremId::LagrangianAbelianExtension => (true, false),
            TheoremId::DualSideCentralizer | TheoremId::LeftKernelOfDualQuotient => (false, true),
            _ => (false, false),
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<TheoremId> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::parse("theorem id", format!("unknown theorem `{s}`")))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

/// Subspaces of `A` a verifier may need. `L` defaults to `K` where a pair is expected.
#[derive(Clone, Debug, Default)]
pub struct TheoremInputs {
    pub k: Option<(String, Subspace)>,
    pub l: Option<(String, Subspace)>,
}

impl TheoremInputs {
    pub fn none() -> TheoremInputs {
        TheoremInputs::default()
    }

    pub fn with_k(label: impl Into<String>, k: Subspace) -> TheoremInputs {
        TheoremInputs {
            k: Some((label.into(), k)),
            l: None,
        }
    }

    pub fn with_l(label: impl Into<String>, l: Subspace) -> TheoremInputs {
        TheoremInputs {
            k: None,
            l: Some((label.into(), l)),
        }
    }

    pub fn with_pair(k_label: impl Into<String>, k: Subspace, l_label: impl Into<String>, l: Subspace) -> TheoremInputs {
        TheoremInputs {
            k: Some((k_label.into(), k)),
            l: Some((l_label.into(), l)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

/// One compared instance of the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case {
    pub label: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub theorem: TheoremId,
    pub statement: String,
    pub algebra: String,
    pub inputs: BTreeMap<String, String>,
    pub hypotheses: Vec<Hypothesis>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs_indices: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs_indices: Option<Vec<usize>>,
    pub fpdims: BTreeMap<String, u64>,
    pub dimensions: BTreeMap<String, usize>,
    pub cases: Vec<Case>,
    pub verdict: Verdict,
}

impl Report {
    fn new(ctx: &DoubleContext, id: TheoremId) -> Report {
        Report {
            theorem: id,
            statement: id.statement().to_string(),
            algebra: ctx.base.name().to_string(),
            inputs: BTreeMap::new(),
            hypotheses: Vec::new(),
            lhs_indices: None,
            rhs_indices: None,
            fpdims: BTreeMap::new(),
            dimensions: BTreeMap::new(),
            cases: Vec::new(),
            verdict: Verdict::NotApplicable,
        }
    }

    fn hypothesis(&mut self, name: &str, holds: bool, detail: impl Into<String>) -> bool {
        self.hypotheses.push(Hypothesis {
            name: name.to_string(),
            holds,
            detail: detail.into(),
        });
        holds
    }

    fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(|h| h.holds)
    }

    fn case(&mut self, label: impl Into<String>, holds: bool) {
        self.cases.push(Case {
            label: label.into(),
            holds,
            lhs: None,
            rhs: None,
            detail: String::new(),
        });
    }

    fn compare(&mut self, label: impl Into<String>, lhs: &FusionSubcategory, rhs: &FusionSubcategory) {
        self.cases.push(Case {
            label: label.into(),
            holds: lhs == rhs,
            lhs: Some(lhs.indices().to_vec()),
            rhs: Some(rhs.indices().to_vec()),
            detail: String::new(),
        });
    }

    fn sides(&mut self, ctx: &DoubleContext, lhs: &FusionSubcategory, rhs: &FusionSubcategory) {
        self.lhs_indices = Some(lhs.indices().to_vec());
        self.rhs_indices = Some(rhs.indices().to_vec());
        self.fpdims.insert("lhs".into(), lhs.fpdim(&ctx.dec));
        self.fpdims.insert("rhs".into(), rhs.fpdim(&ctx.dec));
    }

    fn finish(mut self) -> Report {
        self.verdict = if !self.hypotheses_hold() {
            Verdict::NotApplicable
        } else if !self.cases.is_empty() && self.cases.iter().all(|c| c.holds) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Runs the verifier for `id` on the double in `ctx`.
///
/// Hypothesis failures yield a [`Verdict::NotApplicable`] report; missing
/// inputs and computational failures are errors.
pub fn verify_theorem(ctx: &DoubleContext, id: TheoremId, inputs: &TheoremInputs) -> Result<Report> {
    let mut report = Report::new(ctx, id);
    let (needs_k, needs_l) = id.inputs();
    let k = if needs_k {
        let (label, k) = inputs
            .k
            .as_ref()
            .ok_or_else(|| Error::Precondition(format!("{id} requires a subspace K")))?;
        report.inputs.insert("K".into(), label.clone());
        report.dimensions.insert("K".into(), k.dim());
        Some(check_ambient(ctx, k)?)
    } else {
        None
    };
    let l = if needs_l {
        let (label, l) = inputs
            .l
            .as_ref()
            .or(inputs.k.as_ref())
            .ok_or_else(|| Error::Precondition(format!("{id} requires a subspace L")))?;
        report.inputs.insert("L".into(), label.clone());
        report.dimensions.insert("L".into(), l.dim());
        Some(check_ambient(ctx, l)?)
    } else {
        None
    };
    match id {
        TheoremId::CommutingPairCentralizer => commuting_pair(ctx, &mut report, k.unwrap(), l.unwrap())?,
        TheoremId::KernelCategoryCentralizer => kernel_category(ctx, &mut report, k.unwrap())?,
        TheoremId::HopfKernelCentralizer => hopf_kernel_centralizer(ctx, &mut report)?,
        TheoremId::QuotientCategoryCentralizer => {
            let k = match &inputs.k {
                Some((label, k)) => {
                    report.inputs.insert("K".into(), label.clone());
                    report.dimensions.insert("K".into(), k.dim());
                    Some(check_ambient(ctx, k)?)
                }
                None => None,
            };
            quotient_category(ctx, &mut report, k)?
        }
        TheoremId::GrouplikeIdempotent => grouplike_idempotent(ctx, &mut report)?,
        TheoremId::DualSideCentralizer => dual_side(ctx, &mut report, l.unwrap())?,
        TheoremId::LeftKernelOfNormalSubalgebra => left_kernel_normal(ctx, &mut report, k.unwrap())?,
        TheoremId::LeftKernelOfDualQuotient => left_kernel_dual(ctx, &mut report, l.unwrap())?,
        TheoremId::CommutativeContainment => commutative_containment(ctx, &mut report, k.unwrap())?,
        TheoremId::LagrangianAbelianExtension => lagrangian(ctx, &mut report, k.unwrap())?,
        TheoremId::DimensionProduct => dimension_product(ctx, &mut report)?,
        TheoremId::DeMorgan => de_morgan(ctx, &mut report)?,
        TheoremId::DoubleCentralizer => double_centralizer(ctx, &mut report)?,
    }
    Ok(report.finish())
}

fn check_ambient<'a>(ctx: &DoubleContext, w: &'a Subspace) -> Result<&'a Subspace> {
    if w.ambient() != ctx.base.dim() {
        return Err(Error::DimensionMismatch(format!(
            "subspace lives in dimension {} but A has dimension {}",
            w.ambient(),
            ctx.base.dim()
        )));
    }
    Ok(w)
}

fn normal_hypothesis(report: &mut Report, h: &HopfAlgebra, w: &Subspace, name: &str) -> bool {
    let flags = classify_subspace(h, w);
    report.hypothesis(
        &format!("{name} is a normal Hopf subalgebra of {}", h.name()),
        flags.normal_hopf_subalgebra,
        format!(
            "dim {}; hopf subalgebra {}, ad-stable {}",
            w.dim(),
            flags.hopf_subalgebra,
            flags.normal_left_coideal_subalgebra
        ),
    )
}

fn commute_elementwise(h: &HopfAlgebra, x: &Subspace, y: &Subspace) -> bool {
    x.basis()
        .iter()
        .all(|a| y.basis().iter().all(|b| h.mul(a, b) == h.mul(b, a)))
}

/// Irreducible characters of `N*` for a Hopf subalgebra `N ⊆ h`, as elements of `h`.
fn dual_irreducibles_in(h: &HopfAlgebra, n: &Subspace) -> Result<Vec<Vector>> {
    let sub = h.sub_hopf(n)?;
    let dec = decompose(&sub.dual())?;
    Ok(dec.characters.iter().map(|c| n.combine(c)).collect())
}

/// `{j : χ_j ∈ HKer}`, the simples of `Rep(HKer*)`.
fn simples_in_kernel(ctx: &DoubleContext, kernel: &Subspace) -> FusionSubcategory {
    FusionSubcategory::from_indices((0..ctx.rank()).filter(|&j| kernel.contains(&ctx.dec.characters[j])).collect())
}

fn nonzero_e(ctx: &DoubleContext, x: &[CycScalar]) -> Vec<usize> {
    (0..ctx.rank()).filter(|&j| !ctx.evaluate(j, x).is_zero()).collect()
}

fn kernel_category(ctx: &DoubleContext, report: &mut Report, k: &Subspace) -> Result<()> {
    let a = &ctx.base;
    if !normal_hypothesis(report, a, k, "K") {
        return Ok(());
    }
    // LHS: centralizer of D(K) through the S-matrix
    let dk = ctx.d_of(&ctx.include_a_space(k))?;
    let lhs = ctx.centralizer(&dk)?;
    // RHS: fusion subcategory generated by the module K
    let m = module_on_k(a, ctx.d(), k)?;
    let rhs = generated_subcategory(&m, &ctx.dec, ctx.rules()?);
    report.sides(ctx, &lhs, &rhs);
    report.fpdims.insert("D(K)".into(), dk.fpdim(&ctx.dec));
    report.compare("centralizer of D(K) equals the subcategory generated by K", &lhs, &rhs);
    report.case(
        "FPdim D(K) · FPdim D(K)' = dim D(A)",
        dk.fpdim(&ctx.dec) * lhs.fpdim(&ctx.dec) == ctx.global_dim(),
    );
    // third path: simples detected by E_j on Irr(K*)
    let mut seeds = Vec::new();
    for d in dual_irreducibles_in(a, k)? {
        seeds.extend(nonzero_e(ctx, &super::include_a(a, &d)));
    }
    let via_e = ctx.closure(&seeds)?;
    report.compare("simples with E_j(d) != 0 for some d in Irr(K*) generate the same subcategory", &via_e, &rhs);
    Ok(())
}

fn commuting_pair(ctx: &DoubleContext, report: &mut Report, k: &Subspace, l: &Subspace) -> Result<()> {
    let a = &ctx.base;
    let n = a.dim();
    let ok_k = normal_hypothesis(report, a, k, "K");
    let ok_l = normal_hypothesis(report, a, l, "L");
    if !(ok_k && ok_l) {
        return Ok(());
    }
    report.hypothesis("[K, L] = 0", commute_elementwise(a, k, l), "products compared on basis pairs");
    let qk = dual_quotient_subalgebra(a, k);
    let ql = dual_quotient_subalgebra(a, l);
    report.hypothesis(
        "[(A//K)*, (A//L)*] = 0",
        commute_elementwise(&a.dual(), &qk, &ql),
        format!("dims {} and {}", qk.dim(), ql.dim()),
    );
    let b_kl = ctx.b_of(k, l);
    let b_lk = ctx.b_of(l, k);
    report.dimensions.insert("B(K,L)".into(), b_kl.dim());
    report.dimensions.insert("B(L,K)".into(), b_lk.dim());
    let flags_kl = classify_subspace(ctx.d(), &b_kl);
    let flags_lk = classify_subspace(ctx.d(), &b_lk);
    report.hypothesis(
        "B(K, L) is a normal Hopf subalgebra of D(A)",
        flags_kl.normal_hopf_subalgebra,
        format!("dim {}", b_kl.dim()),
    );
    report.hypothesis(
        "B(L, K) is a normal Hopf subalgebra of D(A)",
        flags_lk.normal_hopf_subalgebra,
        format!("dim {}", b_lk.dim()),
    );
    if !report.hypotheses_hold() {
        return Ok(());
    }
    let d_kl = rep_trivial_on(ctx.d(), &b_kl, &ctx.dec)?;
    let lhs = ctx.centralizer(&d_kl)?;
    let rhs = rep_trivial_on(ctx.d(), &b_lk, &ctx.dec)?;
    report.sides(ctx, &lhs, &rhs);
    report.fpdims.insert("D(K,L)".into(), d_kl.fpdim(&ctx.dec));
    report.compare("centralizer of D(K,L) equals D(L,K)", &lhs, &rhs);
    let expected = (n * l.dim() / k.dim()) as u64;
    report.fpdims.insert("expected".into(), expected);
    report.case(
        format!("FPdim of the centralizer equals dim A · dim L / dim K = {expected}"),
        lhs.fpdim(&ctx.dec) == expected && (n * l.dim()) % k.dim() == 0,
    );
    Ok(())
}

fn hopf_kernel_centralizer(ctx: &DoubleContext, report: &mut Report) -> Result<()> {
    let dstar = ctx.d().dual();
    let dual_dec = ctx.dual_dec()?;
    report.dimensions.insert("Irr(D*)".into(), dual_dec.rank());
    for (idx, d) in dual_dec.characters.iter().enumerate() {
        let values: Vec<CycScalar> = (0..ctx.rank()).map(|j| ctx.evaluate(j, d)).collect();
        let nonneg = values.iter().all(|v| v.as_rat().is_some_and(|r| r.is_integer() && !r.is_negative()));
        let sum = values.iter().fold(CycScalar::zero(), |acc, v| &acc + v);
        report.case(
            format!("d{idx}: E_j(d) are nonnegative integers summing to eps(d)"),
            nonneg && sum == ctx.d().eps(d),
        );
        let m = Representation::isotypic(&dstar, dual_dec, idx);
        let kernel = hopf_kernel(&dstar, &m, &ctx.dec)?;
        let lhs = ctx.centralizer(&simples_in_kernel(ctx, &kernel))?;
        let seeds: Vec<usize> = (0..ctx.rank()).filter(|&j| !values[j].is_zero()).collect();
        let rhs = ctx.closure(&seeds)?;
        report.compare(format!("d{idx}: centralizer of Rep(HKer(d)*) equals <chi_j : E_j(d) != 0>"), &lhs, &rhs);
    }
    Ok(())
}

fn quotient_category(ctx: &DoubleContext, report: &mut Report, k: Option<&Subspace>) -> Result<()> {
    let d = ctx.d();
    let dim = d.dim();
    let mut candidates = vec![
        ("k1".to_string(), Subspace::span(dim, std::slice::from_ref(d.unit()))),
        ("D(A)".to_string(), Subspace::full(dim)),
    ];
    if let Some(k) = k {
        let b = ctx.b_of(k, k);
        let flags = classify_subspace(d, &b);
        report.hypothesis(
            "B(K, K) is a normal Hopf subalgebra of D(A)",
            flags.normal_hopf_subalgebra,
            format!("dim {}", b.dim()),
        );
        if !flags.normal_hopf_subalgebra {
            return Ok(());
        }
        candidates.push(("B(K,K)".to_string(), b));
        let inc = ctx.include_a_space(k);
        if classify_subspace(d, &inc).normal_hopf_subalgebra {
            candidates.push(("eps x K".to_string(), inc));
        }
    }
    for (label, nsub) in candidates {
        report.dimensions.insert(label.clone(), nsub.dim());
        let lambda = coideal_integral(d, &nsub)?;
        let lhs = ctx.centralizer(&rep_trivial_on(d, &nsub, &ctx.dec)?)?;
        let rhs = ctx.closure(&nonzero_e(ctx, &lambda))?;
        report.compare(format!("{label}: centralizer of Rep(D//N) equals <chi_j : E_j(Lambda_N) != 0>"), &lhs, &rhs);
        let irr = dual_irreducibles_in(d, &nsub)?;
        let mut seeds = Vec::new();
        for x in &irr {
            seeds.extend(nonzero_e(ctx, x));
        }
        let join = ctx.closure(&seeds)?;
        report.compare(format!("{label}: the join over Irr(N*) agrees"), &join, &rhs);
        let mut average = crate::linalg::zero_vec(dim);
        for x in &irr {
            crate::linalg::axpy(&mut average, &d.eps(x), x);
        }
        let average = scale_vec(&CycScalar::frac(1, nsub.dim() as i64), &average);
        report.case(format!("{label}: Lambda_N = sum eps(x) x / dim N over Irr(N*)"), average == lambda);
    }
    Ok(())
}

fn grouplike_idempotent(ctx: &DoubleContext, report: &mut Report) -> Result<()> {
    let d = ctx.d();
    let dstar = d.dual();
    let dual_dec = ctx.dual_dec()?;
    let gs = grouplikes(d, dual_dec)?;
    report.dimensions.insert("grouplikes".into(), gs.len());
    for (idx, g) in dual_dec.characters.iter().enumerate() {
        if !gs.contains(g) {
            continue;
        }
        let label = d.describe(g);
        let support = nonzero_e(ctx, g);
        report.case(format!("g = {label}: exactly one E_j(g) is nonzero"), support.len() == 1);
        if support.len() != 1 {
            continue;
        }
        let jg = support[0];
        let m = Representation::isotypic(&dstar, dual_dec, idx);
        let kernel = hopf_kernel(&dstar, &m, &ctx.dec)?;
        let lhs = ctx.centralizer(&simples_in_kernel(ctx, &kernel))?;
        let rhs = ctx.closure(&[jg])?;
        report.compare(format!("g = {label}: centralizer of Rep(HKer(g)*) equals <chi_g>"), &lhs, &rhs);
        // F_g = Σ_i χ_i(S g) χ_i
        let sg = d.antipode(g);
        let mut f = crate::linalg::zero_vec(d.dim());
        for i in 0..ctx.rank() {
            crate::linalg::axpy(&mut f, &ctx.dec.eval(i, &sg), &ctx.dec.characters[i]);
        }
        let e = &ctx.e_functionals[jg];
        report.case(format!("g = {label}: E_g is a nonzero multiple of F_g"), proportional(e, &f));
    }
    Ok(())
}

/// `x = c·y` for some nonzero scalar `c`, with `x, y ≠ 0`.
fn proportional(x: &[CycScalar], y: &[CycScalar]) -> bool {
    let Some(t) = y.iter().position(|c| !c.is_zero()) else {
        return false;
    };
    if x[t].is_zero() {
        return false;
    }
    let c = &x[t] / &y[t];
    x.iter().zip(y).all(|(a, b)| *a == &c * b)
}

fn dual_side(ctx: &DoubleContext, report: &mut Report, l: &Subspace) -> Result<()> {
    let a = &ctx.base;
    if !normal_hypothesis(report, a, l, "L") {
        return Ok(());
    }
    let q = dual_quotient_subalgebra(a, l);
    report.dimensions.insert("(A//L)*".into(), q.dim());
    if !normal_hypothesis(report, &a.dual(), &q, "(A//L)*") {
        return Ok(());
    }
    let dq = ctx.d_of(&ctx.include_dual_space(&q))?;
    let lhs = ctx.centralizer(&dq)?;
    let (m, conv) = dual_side_module(a, ctx.d())?;
    report.inputs.insert("dual side action".into(), format!("{conv:?}"));
    let sub = restrict_to_submodule(&m, &q)?;
    let rhs = generated_subcategory(&sub, &ctx.dec, ctx.rules()?);
    report.sides(ctx, &lhs, &rhs);
    report.compare("centralizer of D((A//L)*) equals the subcategory generated by (A//L)*", &lhs, &rhs);
    report.fpdims.insert("D((A//L)*)".into(), dq.fpdim(&ctx.dec));
    report.case(
        "FPdim D((A//L)*) · FPdim D((A//L)*)' = dim D(A)",
        dq.fpdim(&ctx.dec) * lhs.fpdim(&ctx.dec) == ctx.global_dim(),
    );
    Ok(())
}

fn left_kernel_normal(ctx: &DoubleContext, report: &mut Report, k: &Subspace) -> Result<()> {
    let a = &ctx.base;
    if !normal_hypothesis(report, a, k, "K") {
        return Ok(());
    }
    let m = module_on_k(a, ctx.d(), k)?;
    let lker_d = left_kernel(ctx.d(), &m);
    let lker_a = left_kernel(a, &adjoint_module(a, k)?);
    let claimed = super::bowtie_span(&dual_quotient_subalgebra(a, k), &lker_a);
    report.dimensions.insert("LKer_D(K)".into(), lker_d.dim());
    report.dimensions.insert("LKer_A(K)".into(), lker_a.dim());
    report.dimensions.insert("(A//K)* x LKer_A(K)".into(), claimed.dim());
    report.case("(A//K)* x LKer_A(K) is contained in LKer_D(K)", claimed.is_subspace_of(&lker_d));
    Ok(())
}

fn left_kernel_dual(ctx: &DoubleContext, report: &mut Report, l: &Subspace) -> Result<()> {
    let a = &ctx.base;
    if !normal_hypothesis(report, a, l, "L") {
        return Ok(());
    }
    let ad = a.dual();
    let q = dual_quotient_subalgebra(a, l);
    if !normal_hypothesis(report, &ad, &q, "(A//L)*") {
        return Ok(());
    }
    let (m, conv) = dual_side_module(a, ctx.d())?;
    report.inputs.insert("dual side action".into(), format!("{conv:?}"));
    let sub = restrict_to_submodule(&m, &q)?;
    let lker_d = left_kernel(ctx.d(), &sub);
    let lker_dual = left_kernel(&ad, &adjoint_module(&ad, &q)?);
    let claimed = super::bowtie_span(&lker_dual, l);
    report.dimensions.insert("LKer_D((A//L)*)".into(), lker_d.dim());
    report.dimensions.insert("LKer_A*((A//L)*)".into(), lker_dual.dim());
    report.dimensions.insert("LKer_A*((A//L)*) x L".into(), claimed.dim());
    report.case("LKer_A*((A//L)*) x L is contained in LKer_D((A//L)*)", claimed.is_subspace_of(&lker_d));
    Ok(())
}

fn commutative_containment(ctx: &DoubleContext, report: &mut Report, k: &Subspace) -> Result<()> {
    let a = &ctx.base;
    let normal = normal_hypothesis(report, a, k, "K");
    report.hypothesis("K is commutative", commute_elementwise(a, k, k), format!("dim {}", k.dim()));
    if !normal || !report.hypotheses_hold() {
        return Ok(());
    }
    let dk = ctx.d_of(&ctx.include_a_space(k))?;
    let lhs = ctx.centralizer(&dk)?;
    report.sides(ctx, &lhs, &dk);
    report.cases.push(Case {
        label: "centralizer of D(K) is contained in D(K)".into(),
        holds: lhs.is_subcategory_of(&dk),
        lhs: Some(lhs.indices().to_vec()),
        rhs: Some(dk.indices().to_vec()),
        detail: String::new(),
    });
    Ok(())
}

fn lagrangian(ctx: &DoubleContext, report: &mut Report, k: &Subspace) -> Result<()> {
    let a = &ctx.base;
    let d = ctx.d();
    if !normal_hypothesis(report, a, k, "K") {
        return Ok(());
    }
    report.hypothesis("K is commutative", commute_elementwise(a, k, k), format!("dim {}", k.dim()));
    let (q, _) = quotient(a, k)?;
    report.hypothesis(
        "A//K is cocommutative",
        q.is_cocommutative(),
        format!("dim {}", q.dim()),
    );
    if !report.hypotheses_hold() {
        return Ok(());
    }
    let b = ctx.b_of(k, k);
    report.dimensions.insert("B(K,K)".into(), b.dim());
    if !report.hypothesis(
        "B(K, K) is a normal Hopf subalgebra of D(A)",
        classify_subspace(d, &b).normal_hopf_subalgebra,
        format!("dim {}", b.dim()),
    ) {
        return Ok(());
    }
    let e = rep_trivial_on(d, &b, &ctx.dec)?;
    let ep = ctx.centralizer(&e)?;
    report.sides(ctx, &ep, &e);
    report.compare("D(K,K) is its own centralizer", &ep, &e);
    report.case(
        format!("FPdim D(K,K) = dim A = {}", a.dim()),
        e.fpdim(&ctx.dec) == a.dim() as u64,
    );
    report.case("theta = 1 on every simple of D(K,K)", ctx.isotropic_part(&e));
    let (_, pi) = quotient(d, &b)?;
    report.case("the Drinfeld element maps to 1 in D(A)//B(K,K)", pi.mul_vec(&ctx.u) == pi.mul_vec(d.unit()));
    Ok(())
}

fn lattice_subcategories(ctx: &DoubleContext, report: &mut Report) -> Result<Vec<FusionSubcategory>> {
    let lattice = ctx.lattice()?;
    report.dimensions.insert("subcategories".into(), lattice.subcategories.len());
    report.inputs.insert(
        "enumeration".into(),
        if lattice.exhaustive { "every subset of simples" } else { "joins of singly generated subcategories" }.into(),
    );
    report.fpdims.insert("FPdim(C)".into(), ctx.global_dim());
    Ok(lattice.subcategories.clone())
}

fn dimension_product(ctx: &DoubleContext, report: &mut Report) -> Result<()> {
    for k in lattice_subcategories(ctx, report)? {
        let kp = ctx.centralizer(&k)?;
        let product = k.fpdim(&ctx.dec) * kp.fpdim(&ctx.dec);
        report.cases.push(Case {
            label: format!("FPdim {:?} · FPdim {:?} = {product}", k.indices(), kp.indices()),
            holds: product == ctx.global_dim(),
            lhs: Some(k.indices().to_vec()),
            rhs: Some(kp.indices().to_vec()),
            detail: String::new(),
        });
    }
    Ok(())
}

fn de_morgan(ctx: &DoubleContext, report: &mut Report) -> Result<()> {
    let subs = lattice_subcategories(ctx, report)?;
    let rules = ctx.rules()?;
    let primes: Vec<FusionSubcategory> = subs.iter().map(|k| ctx.centralizer(k)).collect::<Result<_>>()?;
    let mut checked = 0usize;
    for (i, x) in subs.iter().enumerate() {
        for (j, y) in subs.iter().enumerate().skip(i) {
            let join_prime = ctx.centralizer(&x.join(y, &ctx.dec, rules))?;
            let meet_of_primes = primes[i].intersect(&primes[j]);
            let meet_prime = ctx.centralizer(&x.intersect(y))?;
            let join_of_primes = primes[i].join(&primes[j], &ctx.dec, rules);
            checked += 1;
            if join_prime != meet_of_primes {
                report.compare(format!("(K{i} v K{j})' = K{i}' ^ K{j}'"), &join_prime, &meet_of_primes);
            }
            if meet_prime != join_of_primes {
                report.compare(format!("(K{i} ^ K{j})' = K{i}' v K{j}'"), &meet_prime, &join_of_primes);
            }
        }
    }
    let failures = report.cases.len();
    report.case(format!("both identities on all {checked} unordered pairs"), failures == 0);
    Ok(())
}

fn double_centralizer(ctx: &DoubleContext, report: &mut Report) -> Result<()> {
    for k in lattice_subcategories(ctx, report)? {
        let kpp = ctx.centralizer(&ctx.centralizer(&k)?)?;
        report.compare(format!("{:?}'' = {:?}", k.indices(), k.indices()), &kpp, &k);
    }
    Ok(())
}
