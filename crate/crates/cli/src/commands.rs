//! One function per subcommand, each producing JSON, text and (where tabular) CSV.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde_json::{json, Value};

use hopfcalc::double::{
    drinfeld_double, fourier_check, module_on_k, verify_theorem, DoubleContext, Report, TheoremId, TheoremInputs,
    Verdict,
};
use hopfcalc::examples::Strictness;
use hopfcalc::hopf::{adjoint_module, classify_subspace, integral, verify_axioms, AxiomReport, HopfAlgebra};
use hopfcalc::repthy::{
    decompose, enumerate_fusion_subcategories, fusion_rules, generated_subcategory, hopf_kernel,
    lattice_identities, left_kernel, normal_coideal_lattice, rep_trivial_on, FusionRules, FusionSubcategory,
    IrrDecomposition, Representation,
};
use hopfcalc::scalars::CycScalar;
use hopfcalc::{Error, Result};

use crate::select::{self, Input};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    Input,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::NotApplicable => 2,
            Status::Input => 3,
        }
    }

    fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

pub struct Outcome {
    pub status: Status,
    pub json: Value,
    pub text: String,
    pub csv: Option<String>,
}

pub fn error_status(e: &Error) -> Status {
    match e {
        Error::Parse { .. } | Error::Io(_) | Error::Precondition(_) | Error::DimensionMismatch(_) => Status::Input,
        _ => Status::Fail,
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse { .. } => "parse",
        Error::Io(_) => "io",
        Error::Precondition(_) => "precondition",
        Error::DimensionMismatch(_) => "dimension_mismatch",
        Error::NotSemisimple(_) => "not_semisimple",
        Error::ConductorOverflow { .. } => "conductor_overflow",
        Error::SplitFailure(_) => "split_failure",
        Error::BoundExceeded(_) => "bound_exceeded",
        _ => "internal",
    }
}

fn short(c: &CycScalar) -> String {
    c.to_short_string()
}

fn short_row(v: &[CycScalar]) -> Vec<String> {
    v.iter().map(short).collect()
}

fn list(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn axiom_json(h: &HopfAlgebra, r: &AxiomReport) -> Value {
    json!({
        "algebra": h.name(),
        "dim": h.dim(),
        "valid": r.is_valid(),
        "generator_reduced": r.generator_reduced,
        "failures": r.failures,
    })
}

fn axiom_text(out: &mut String, h: &HopfAlgebra, r: &AxiomReport) {
    let _ = writeln!(out, "{} (dim {}): axioms {}", h.name(), h.dim(), pass_fail(r.is_valid()));
    for f in &r.failures {
        let _ = writeln!(out, "  {} fails at basis indices {:?}", f.identity, f.witness);
    }
}

pub fn axioms(path: &Path, with_double: bool) -> Result<Outcome> {
    let input = select::load(path, Strictness::Trust)?;
    let h = &input.algebra;
    let report = verify_axioms(h);
    let mut text = String::new();
    axiom_text(&mut text, h, &report);
    let mut value = axiom_json(h, &report);
    let mut ok = report.is_valid();
    if with_double && ok {
        let d = drinfeld_double(h)?;
        let dr = verify_axioms(&d.hopf);
        let rr = d.verify_r();
        axiom_text(&mut text, &d.hopf, &dr);
        let _ = writeln!(text, "{}: R-matrix {}", d.hopf.name(), pass_fail(rr.is_valid()));
        value["double"] = axiom_json(&d.hopf, &dr);
        value["double"]["r_matrix"] = json!(rr);
        ok = dr.is_valid() && rr.is_valid();
    }
    Ok(Outcome {
        status: Status::from_bool(ok),
        json: value,
        text,
        csv: None,
    })
}

pub fn irr(path: &Path, dual: bool) -> Result<Outcome> {
    let input = select::load(path, Strictness::Verify)?;
    let h = if dual { input.algebra.dual() } else { input.algebra.clone() };
    let dec = decompose(&h)?;
    let labels = h.labels().to_vec();
    let table: Vec<Vec<String>> = dec.characters.iter().map(|c| short_row(c)).collect();
    let mut csv = format!("simple,degree,dual,{}\n", labels.join(","));
    let mut text = format!(
        "{}: {} simples, degrees {:?}, conductor {}\n",
        h.name(),
        dec.rank(),
        dec.degrees,
        dec.conductor
    );
    for (j, row) in table.iter().enumerate() {
        let _ = writeln!(csv, "{j},{},{},{}", dec.degrees[j], dec.dual_map[j], row.join(","));
        let _ = writeln!(text, "  chi_{j} (deg {}, dual {}): {}", dec.degrees[j], dec.dual_map[j], row.join(", "));
    }
    Ok(Outcome {
        status: Status::Pass,
        json: json!({
            "algebra": h.name(),
            "conductor": dec.conductor,
            "labels": labels,
            "degrees": dec.degrees,
            "dual_map": dec.dual_map,
            "characters": table,
        }),
        text,
        csv: Some(csv),
    })
}

fn context(input: &Input) -> Result<DoubleContext> {
    DoubleContext::new(&input.algebra)
}

pub fn double(path: &Path) -> Result<Outcome> {
    let input = select::load(path, Strictness::Verify)?;
    let ctx = context(&input)?;
    let s_report = ctx.s.check(128);
    let modular = ctx.modular_report()?;
    let fourier = fourier_check(&ctx.base, ctx.d(), &ctx.dec)?;
    let twist: Vec<String> = ctx.twist.iter().map(short).collect();
    let ok = ctx.axioms.is_valid() && ctx.r_report.is_valid() && s_report.is_valid() && modular.is_valid() && fourier.is_valid();
    let mut text = String::new();
    let _ = writeln!(text, "{} (dim {}), {} simples", ctx.d().name(), ctx.d().dim(), ctx.rank());
    let _ = writeln!(text, "  antipode convention: {:?}", ctx.double.antipode_convention);
    let _ = writeln!(text, "  axioms: {}", pass_fail(ctx.axioms.is_valid()));
    let _ = writeln!(text, "  R-matrix: {}", pass_fail(ctx.r_report.is_valid()));
    let _ = writeln!(text, "  degrees: {:?}", ctx.dec.degrees);
    let _ = writeln!(text, "  twist ({:?}): {}", ctx.twist_convention, twist.join(", "));
    let _ = writeln!(text, "  S-matrix checks: {}", pass_fail(s_report.is_valid()));
    let _ = writeln!(text, "  E_j and phi identities: {}", pass_fail(modular.is_valid()));
    let _ = writeln!(text, "  balancing holds for: {}", modular.balancing.join("; "));
    let _ = writeln!(text, "  Fourier transform: {}", pass_fail(fourier.is_valid()));
    Ok(Outcome {
        status: Status::from_bool(ok),
        json: json!({
            "algebra": ctx.base.name(),
            "double": ctx.d().name(),
            "dim": ctx.d().dim(),
            "rank": ctx.rank(),
            "antipode_convention": format!("{:?}", ctx.double.antipode_convention),
            "axioms": ctx.axioms,
            "r_matrix": ctx.r_report,
            "degrees": ctx.dec.degrees,
            "dual_map": ctx.dec.dual_map,
            "twist": twist,
            "twist_convention": ctx.twist_convention,
            "smatrix": s_report,
            "modular": modular,
            "fourier": fourier,
            "valid": ok,
        }),
        text,
        csv: None,
    })
}

pub fn smatrix(path: &Path) -> Result<Outcome> {
    let input = select::load(path, Strictness::Verify)?;
    let ctx = context(&input)?;
    let report = ctx.s.check(128);
    let csv = ctx.s.to_csv();
    let entries: Vec<Vec<String>> = (0..ctx.rank())
        .map(|i| (0..ctx.rank()).map(|j| short(ctx.s.get(i, j))).collect())
        .collect();
    Ok(Outcome {
        status: Status::from_bool(report.is_valid()),
        json: json!({
            "algebra": ctx.base.name(),
            "rank": ctx.rank(),
            "degrees": ctx.dec.degrees,
            "dual_map": ctx.dec.dual_map,
            "entries": entries,
            "checks": report,
        }),
        text: csv.clone(),
        csv: Some(csv),
    })
}

fn category_json(ctx: &DoubleContext, c: &FusionSubcategory) -> Value {
    json!({ "simples": c.indices(), "fpdim": c.fpdim(&ctx.dec) })
}

pub fn centralizer(path: &Path, k: Option<&str>, simples: Option<&str>) -> Result<Outcome> {
    let input = select::load(path, Strictness::Verify)?;
    let ctx = context(&input)?;
    let (label, sub) = match (k, simples) {
        (Some(sel), _) => {
            let w = select::subalgebra(&input, sel)?;
            (format!("D({sel})"), ctx.d_of(&ctx.include_a_space(&w))?)
        }
        (None, Some(list)) => {
            let seed = select::simples(list, ctx.rank())?;
            (format!("<{list}>"), ctx.closure(&seed)?)
        }
        (None, None) => return Err(Error::parse("arguments", "either --K or --simples is required")),
    };
    let cent = ctx.centralizer(&sub)?;
    let back = ctx.centralizer(&cent)?;
    let product = sub.fpdim(&ctx.dec) * cent.fpdim(&ctx.dec);
    let ok = back == sub && product == ctx.global_dim();
    let mut text = String::new();
    let _ = writeln!(text, "{label} = {} (FPdim {})", list(sub.indices()), sub.fpdim(&ctx.dec));
    let _ = writeln!(text, "{label}' = {} (FPdim {})", list(cent.indices()), cent.fpdim(&ctx.dec));
    let _ = writeln!(text, "FPdim product {product} = dim D(A) {}: {}", ctx.global_dim(), pass_fail(product == ctx.global_dim()));
    let _ = writeln!(text, "double centralizer: {}", pass_fail(back == sub));
    let csv = format!(
        "side,simples,fpdim\nsubcategory,{},{}\ncentralizer,{},{}\n",
        join_space(sub.indices()),
        sub.fpdim(&ctx.dec),
        join_space(cent.indices()),
        cent.fpdim(&ctx.dec)
    );
    Ok(Outcome {
        status: Status::from_bool(ok),
        json: json!({
            "algebra": ctx.base.name(),
            "input": label,
            "subcategory": category_json(&ctx, &sub),
            "centralizer": category_json(&ctx, &cent),
            "fpdim_product": product,
            "global_dim": ctx.global_dim(),
            "double_centralizer_holds": back == sub,
        }),
        text,
        csv: Some(csv),
    })
}

fn join_space(v: &[usize]) -> String {
    v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
}

fn base_rules(h: &HopfAlgebra, dec: &IrrDecomposition) -> Result<FusionRules> {
    fusion_rules(h, dec, &integral(h)?)
}

pub fn kernels(path: &Path, module: &str, double: bool) -> Result<Outcome> {
    let input = select::load(path, Strictness::Verify)?;
    let (kind, arg) = module.split_once(':').unwrap_or((module, ""));
    let over_double = double || kind == "coideal";
    let ctx = if over_double { Some(context(&input)?) } else { None };
    let (h, dec, rules, dual_dec): (HopfAlgebra, IrrDecomposition, FusionRules, IrrDecomposition) = match &ctx {
        Some(c) => (c.d().clone(), c.dec.clone(), c.rules()?.clone(), c.dual_dec()?.clone()),
        None => {
            let a = input.algebra.clone();
            let dec = decompose(&a)?;
            let rules = base_rules(&a, &dec)?;
            let dual_dec = decompose(&a.dual())?;
            (a, dec, rules, dual_dec)
        }
    };
    let m: Representation = match kind {
        "simple" => {
            let j = select::simples(arg, dec.rank())?;
            let [j] = j[..] else {
                return Err(Error::parse("--module", "simple:<j> takes one index"));
            };
            Representation::isotypic(&h, &dec, j)
        }
        "regular" => Representation::regular(&h),
        "adjoint" if !over_double => adjoint_module(&h, &select::subalgebra(&input, arg)?)?,
        "coideal" => {
            let c = ctx.as_ref().expect("double context");
            module_on_k(&c.base, c.d(), &select::subalgebra(&input, arg)?)?
        }
        _ => {
            return Err(Error::parse(
                "--module",
                "expected simple:<j>, regular, adjoint:<selector> (over A) or coideal:<selector>",
            ))
        }
    };
    let lker = left_kernel(&h, &m);
    let hker = hopf_kernel(&h, &m, &dual_dec)?;
    let flags = classify_subspace(&h, &lker);
    let generated = generated_subcategory(&m, &dec, &rules);
    let trivial = rep_trivial_on(&h, &lker, &dec)?;
    let hker_trivial = rep_trivial_on(&h, &hker, &dec)?;
    let brauer = generated == trivial;
    let mut text = String::new();
    let _ = writeln!(text, "module {module} (dim {}) over {} (dim {})", m.dim(), h.name(), h.dim());
    let _ = writeln!(text, "  LKer: dim {}, normal left coideal subalgebra {}", lker.dim(), flags.normal_left_coideal_subalgebra);
    let _ = writeln!(text, "  HKer: dim {}", hker.dim());
    let _ = writeln!(text, "  <M> = {}", list(generated.indices()));
    let _ = writeln!(text, "  Rep(H//LKer(M)) = {}", list(trivial.indices()));
    let _ = writeln!(text, "  Rep(H//HKer(M)) = {}", list(hker_trivial.indices()));
    let _ = writeln!(text, "  Brauer closure: {}", pass_fail(brauer));
    Ok(Outcome {
        status: Status::from_bool(brauer),
        json: json!({
            "algebra": h.name(),
            "module": module,
            "module_dim": m.dim(),
            "left_kernel": { "dim": lker.dim(), "flags": flags, "trivial_on": trivial.indices() },
            "hopf_kernel": { "dim": hker.dim(), "trivial_on": hker_trivial.indices() },
            "generated": generated.indices(),
            "brauer_holds": brauer,
        }),
        text,
        csv: None,
    })
}

pub fn lattice(path: &Path, base: bool, coideals: bool) -> Result<Outcome> {
    let input = select::load(path, Strictness::Verify)?;
    let ctx = if base { None } else { Some(context(&input)?) };
    let (h, dec, rules, lat) = match &ctx {
        Some(c) => (c.d().clone(), c.dec.clone(), c.rules()?.clone(), c.lattice()?.clone()),
        None => {
            let a = input.algebra.clone();
            let dec = decompose(&a)?;
            let rules = base_rules(&a, &dec)?;
            let lat = enumerate_fusion_subcategories(&dec, &rules)?;
            (a, dec, rules, lat)
        }
    };
    let entries = if coideals {
        Some(normal_coideal_lattice(&h, &dec, &lat)?)
    } else {
        None
    };
    let mut ok = true;
    let mut rows = Vec::new();
    let mut csv = String::from("index,simples,fpdim,centralizer,centralizer_fpdim,coideal_dim\n");
    let mut text = format!(
        "{}: {} fusion subcategories ({})\n",
        h.name(),
        lat.subcategories.len(),
        if lat.exhaustive { "exhaustive" } else { "joins of singleton closures" }
    );
    let cents: Vec<Option<FusionSubcategory>> = lat
        .subcategories
        .iter()
        .map(|c| ctx.as_ref().map(|x| x.centralizer(c)).transpose())
        .collect::<Result<_>>()?;
    for (idx, c) in lat.subcategories.iter().enumerate() {
        let fp = c.fpdim(&dec);
        let coideal_dim = entries.as_ref().map(|e| e[idx].coideal.dim());
        let mut row = json!({ "simples": c.indices(), "fpdim": fp });
        let mut line = format!("  {idx:>3}  {}  FPdim {fp}", list(c.indices()));
        let (mut cent_cell, mut cent_fp_cell) = (String::new(), String::new());
        if let (Some(x), Some(cent)) = (&ctx, &cents[idx]) {
            let cfp = cent.fpdim(&dec);
            let product_ok = fp * cfp == x.global_dim();
            let back_ok = x.centralizer(cent)? == *c;
            ok &= product_ok && back_ok;
            row["centralizer"] = json!(cent.indices());
            row["centralizer_fpdim"] = json!(cfp);
            row["fpdim_product_holds"] = json!(product_ok);
            row["double_centralizer_holds"] = json!(back_ok);
            let _ = write!(line, "  centralizer {} FPdim {cfp}", list(cent.indices()));
            cent_cell = join_space(cent.indices());
            cent_fp_cell = cfp.to_string();
        }
        if let Some(d) = coideal_dim {
            row["coideal_dim"] = json!(d);
            let _ = write!(line, "  coideal dim {d}");
        }
        let _ = writeln!(
            csv,
            "{idx},{},{fp},{cent_cell},{cent_fp_cell},{}",
            join_space(c.indices()),
            coideal_dim.map(|d| d.to_string()).unwrap_or_default()
        );
        text.push_str(&line);
        text.push('\n');
        rows.push(row);
    }
    let mut value = json!({
        "algebra": h.name(),
        "exhaustive": lat.exhaustive,
        "subcategories": rows,
    });
    if ctx.is_some() {
        let mut pairs = 0usize;
        let mut failures = Vec::new();
        for i in 0..lat.subcategories.len() {
            for j in i..lat.subcategories.len() {
                let (a, b) = (&lat.subcategories[i], &lat.subcategories[j]);
                let (ca, cb) = (cents[i].as_ref().expect("centralizer"), cents[j].as_ref().expect("centralizer"));
                let join_ok = ctx.as_ref().expect("context").centralizer(&a.join(b, &dec, &rules))? == ca.intersect(cb);
                let meet_ok = ctx.as_ref().expect("context").centralizer(&a.intersect(b))? == ca.join(cb, &dec, &rules);
                pairs += 1;
                if !(join_ok && meet_ok) {
                    failures.push((i, j));
                }
            }
        }
        ok &= failures.is_empty();
        let _ = writeln!(text, "De Morgan identities on {pairs} pairs: {}", pass_fail(failures.is_empty()));
        value["de_morgan"] = json!({ "pairs": pairs, "failures": failures });
    }
    if let Some(e) = &entries {
        let report = lattice_identities(&h, &dec, &rules, e)?;
        ok &= report.holds();
        let _ = writeln!(text, "normal left coideal lattice identities: {}", pass_fail(report.holds()));
        value["coideal_identities"] = json!(report);
    }
    value["valid"] = json!(ok);
    Ok(Outcome {
        status: Status::from_bool(ok),
        json: value,
        text,
        csv: Some(csv),
    })
}

fn report_text(r: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}: {}", r.theorem, r.statement);
    let _ = writeln!(out, "algebra: {}", r.algebra);
    for (k, v) in &r.inputs {
        let _ = writeln!(out, "input {k}: {v}");
    }
    if !r.hypotheses.is_empty() {
        let _ = writeln!(out, "hypotheses:");
        for h in &r.hypotheses {
            let mark = if h.holds { "holds" } else { "FAILS" };
            let _ = writeln!(out, "  [{mark}] {} ({})", h.name, h.detail);
        }
    }
    if let (Some(l), Some(rh)) = (&r.lhs_indices, &r.rhs_indices) {
        let _ = writeln!(out, "lhs: {}", list(l));
        let _ = writeln!(out, "rhs: {}", list(rh));
    }
    for (k, v) in &r.fpdims {
        let _ = writeln!(out, "FPdim {k}: {v}");
    }
    for (k, v) in &r.dimensions {
        let _ = writeln!(out, "dim {k}: {v}");
    }
    if !r.cases.is_empty() {
        let _ = writeln!(out, "cases:");
        for c in &r.cases {
            let _ = writeln!(out, "  [{}] {}", pass_fail(c.holds), c.label);
        }
    }
    let verdict = match r.verdict {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
        Verdict::NotApplicable => "NOT APPLICABLE",
    };
    let _ = writeln!(out, "verdict: {verdict}");
    out
}

pub fn check(theorem: &str, path: &Path, k: Option<&str>, l: Option<&str>) -> Result<Outcome> {
    let id = TheoremId::from_str(theorem)?;
    let input = select::load(path, Strictness::Verify)?;
    let resolve = |sel: Option<&str>| -> Result<Option<(String, hopfcalc::linalg::Subspace)>> {
        sel.map(|s| Ok((s.to_string(), select::subalgebra(&input, s)?))).transpose()
    };
    let inputs = TheoremInputs {
        k: resolve(k)?,
        l: resolve(l)?,
    };
    let (needs_k, needs_l) = id.inputs();
    if needs_k && inputs.k.is_none() {
        return Err(Error::parse("--K", format!("{id} requires --K")));
    }
    if needs_l && inputs.l.is_none() && inputs.k.is_none() {
        return Err(Error::parse("--L", format!("{id} requires --L")));
    }
    let ctx = context(&input)?;
    let report = verify_theorem(&ctx, id, &inputs)?;
    let status = match report.verdict {
        Verdict::Pass => Status::Pass,
        Verdict::Fail => Status::Fail,
        Verdict::NotApplicable => Status::NotApplicable,
    };
    let mut csv = String::from("kind,label,holds\n");
    for h in &report.hypotheses {
        let _ = writeln!(csv, "hypothesis,\"{}\",{}", h.name.replace('"', "'"), h.holds);
    }
    for c in &report.cases {
        let _ = writeln!(csv, "case,\"{}\",{}", c.label.replace('"', "'"), c.holds);
    }
    Ok(Outcome {
        status,
        text: report_text(&report),
        json: serde_json::to_value(&report).expect("report serializes"),
        csv: Some(csv),
    })
}
