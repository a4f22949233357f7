//! Everything computed once per double: decomposition, `φ`, S-matrix, `E_j`, twist.

use std::sync::OnceLock;

use serde::Serialize;

use super::smatrix::{centralizer, SMatrix};
use super::{bowtie, drinfeld_double, include_a, include_dual, QuasitriangularHopf, RMatrixReport};
use crate::error::{Error, Result};
use crate::hopf::{classify_subspace, verify_axioms, AxiomReport, HopfAlgebra};
use crate::linalg::{dot, Matrix, Subspace, Vector};
use crate::repthy::{
    decompose, enumerate_fusion_subcategories, fusion_closure, fusion_rules, generated_subcategory, is_semisimple,
    left_kernel, rep_trivial_on, FusionRules, Representation, FusionSubcategory, IrrDecomposition, Lattice,
};
use crate::scalars::CycScalar;

/// Which element produced the twist values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TwistConvention {
    /// `θ_j = χ_j(u)/deg_j` for the Drinfeld element `u`.
    DrinfeldElement,
    /// `θ_j = χ_j(u⁻¹)/deg_j`.
    InverseDrinfeldElement,
}

/// The double of a semisimple Hopf algebra together with its modular data.
///
/// Immutable after construction; the decomposition of `D(A)*`, the fusion
/// rules and the subcategory lattice are computed on first use.
pub struct DoubleContext {
    pub base: HopfAlgebra,
    pub double: QuasitriangularHopf,
    pub axioms: AxiomReport,
    pub r_report: RMatrixReport,
    pub dec: IrrDecomposition,
    /// Column `t` is `φ(b_t^*)`.
    pub phi: Matrix,
    pub phi_inv: Matrix,
    pub s: SMatrix,
    /// `E_j = φ⁻¹(e_j)`, as functionals on `D(A)`.
    pub e_functionals: Vec<Vector>,
    pub u: Vector,
    pub twist: Vec<CycScalar>,
    pub twist_convention: TwistConvention,
    dual_dec: OnceLock<Result<IrrDecomposition>>,
    rules: OnceLock<Result<FusionRules>>,
    lattice: OnceLock<Result<Lattice>>,
}

impl std::fmt::Debug for DoubleContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DoubleContext({})", self.double.hopf.name())
    }
}

impl DoubleContext {
    /// Builds `D(A)` and its modular data, failing if any structural check fails.
    pub fn new(base: &HopfAlgebra) -> Result<DoubleContext> {
        if !is_semisimple(base) {
            return Err(Error::NotSemisimple(base.name().to_string()));
        }
        let double = drinfeld_double(base)?;
        let d = &double.hopf;
        let axioms = verify_axioms(d);
        if let Some(f) = axioms.failures.first() {
            return Err(Error::InternalConsistency(format!(
                "{} fails the {} axiom at {:?}",
                d.name(),
                f.identity,
                f.witness
            )));
        }
        let r_report = double.verify_r();
        if !r_report.is_valid() {
            return Err(Error::InternalConsistency(format!("R-matrix axioms fail: {r_report:?}")));
        }
        let dec = decompose(d)?;
        let phi = double.phi_matrix();
        let phi_inv = phi
            .inverse()
            .map_err(|_| Error::InternalConsistency(format!("{} is not factorizable", d.name())))?;

        let s_rank = dec.rank();
        let dim = d.dim();
        let duals: Vec<Vector> = dec
            .characters
            .iter()
            .map(|chi| (0..dim).map(|i| dot(chi, d.antipode_basis(i))).collect())
            .collect();
        let images: Vec<Vector> = duals.iter().map(|f| phi.mul_vec(f)).collect();
        let mut entries = Matrix::zeros(s_rank, s_rank);
        for i in 0..s_rank {
            for j in 0..s_rank {
                entries[(i, j)] = dec.eval(i, &images[j]);
            }
        }
        let s = SMatrix {
            entries,
            degrees: dec.degrees.clone(),
            dual_map: dec.dual_map.clone(),
        };
        if s.entries.rank() != s_rank {
            return Err(Error::InternalConsistency("S-matrix of a factorizable double is singular".into()));
        }
        let e_functionals: Vec<Vector> = dec.idempotents.iter().map(|e| phi_inv.mul_vec(e)).collect();

        let u = double.drinfeld_element();
        let (twist, twist_convention) = twist_values(d, &dec, &u)?;

        Ok(DoubleContext {
            base: base.clone(),
            double,
            axioms,
            r_report,
            dec,
            phi,
            phi_inv,
            s,
            e_functionals,
            u,
            twist,
            twist_convention,
            dual_dec: OnceLock::new(),
            rules: OnceLock::new(),
            lattice: OnceLock::new(),
        })
    }

    pub fn d(&self) -> &HopfAlgebra {
        &self.double.hopf
    }

    pub fn rank(&self) -> usize {
        self.dec.rank()
    }

    /// `dim D(A) = (dim A)²`, the FP dimension of `Rep(D(A))`.
    pub fn global_dim(&self) -> u64 {
        self.d().dim() as u64
    }

    /// Irreducible characters of `D(A)*`, realized as elements of `D(A)`.
    pub fn dual_dec(&self) -> Result<&IrrDecomposition> {
        self.dual_dec
            .get_or_init(|| decompose(&self.d().dual()))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn rules(&self) -> Result<&FusionRules> {
        self.rules
            .get_or_init(|| {
                let lambda = crate::hopf::integral(self.d())?;
                fusion_rules(self.d(), &self.dec, &lambda)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn lattice(&self) -> Result<&Lattice> {
        self.lattice
            .get_or_init(|| {
                let rules = self.rules()?;
                enumerate_fusion_subcategories(&self.dec, rules)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `E_j(d)`.
    pub fn evaluate(&self, j: usize, d: &[CycScalar]) -> CycScalar {
        dot(&self.e_functionals[j], d)
    }

    /// `φ(f)`.
    pub fn phi_of(&self, f: &[CycScalar]) -> Vector {
        self.phi.mul_vec(f)
    }

    /// The Müger centralizer, checked to be closed under fusion.
    pub fn centralizer(&self, k: &FusionSubcategory) -> Result<FusionSubcategory> {
        let c = centralizer(k, &self.s);
        if !c.is_closed(&self.dec, self.rules()?) {
            return Err(Error::InternalConsistency(format!(
                "centralizer {:?} is not a fusion subcategory",
                c.indices()
            )));
        }
        Ok(c)
    }

    pub fn closure(&self, seed: &[usize]) -> Result<FusionSubcategory> {
        Ok(fusion_closure(seed, &self.dec, self.rules()?))
    }

    /// `ε ⋈ K` inside `D(A)`.
    pub fn include_a_space(&self, k: &Subspace) -> Subspace {
        let vecs: Vec<Vector> = k.basis().iter().map(|x| include_a(&self.base, x)).collect();
        Subspace::span(self.d().dim(), &vecs)
    }

    /// `K ⋈ 1` inside `D(A)`, for `K ⊆ A*` in dual coordinates.
    pub fn include_dual_space(&self, k: &Subspace) -> Subspace {
        let vecs: Vec<Vector> = k.basis().iter().map(|f| include_dual(&self.base, f)).collect();
        Subspace::span(self.d().dim(), &vecs)
    }

    /// `Rep(D(A)//K)`: simples on which the subspace `K ⊆ D(A)` acts trivially.
    pub fn d_of(&self, k: &Subspace) -> Result<FusionSubcategory> {
        let flags = classify_subspace(self.d(), k);
        if !(flags.hopf_subalgebra || flags.normal_left_coideal_subalgebra) {
            return Err(Error::Precondition(
                "subspace of the double is neither a Hopf subalgebra nor a normal left coideal subalgebra".into(),
            ));
        }
        rep_trivial_on(self.d(), k, &self.dec)
    }

    /// `B(K, L) = (A//K)* ⋈ L`.
    pub fn b_of(&self, k: &Subspace, l: &Subspace) -> Subspace {
        let dq = crate::hopf::dual_quotient_subalgebra(&self.base, k);
        super::bowtie_span(&dq, l)
    }

    /// Simples whose twist is 1.
    pub fn isotropic_part(&self, k: &FusionSubcategory) -> bool {
        k.indices().iter().all(|&j| self.twist[j].is_one())
    }

    /// `(⟨M⟩, Rep(D(A)//LKer(M)))`, computed independently: the first by fusion
    /// closure of the constituents, the second by the triviality test on the left kernel.
    pub fn brauer_pair(&self, m: &Representation) -> Result<(FusionSubcategory, FusionSubcategory)> {
        let generated = generated_subcategory(m, &self.dec, self.rules()?);
        let kernel = left_kernel(self.d(), m);
        Ok((generated, rep_trivial_on(self.d(), &kernel, &self.dec)?))
    }

    /// `f ⋈ a`.
    pub fn element(&self, f: &[CycScalar], a: &[CycScalar]) -> Vector {
        bowtie(f, a)
    }
}

/// Identities relating `φ`, the functionals `E_j`, the S-matrix and the twist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModularReport {
    /// `E_j(d)` for `d ∈ Irr(D(A)*)`, rows indexed by `d`.
    pub e_table: Vec<Vec<String>>,
    /// Every `E_j(d)` is a nonnegative integer and `Σ_j E_j(d) = ε(d)`.
    pub e_table_valid: bool,
    /// `Σ_j E_j = ε`.
    pub e_sum_is_counit: bool,
    /// `φ(ε) = 1`.
    pub phi_counit_is_unit: bool,
    /// `φ(χ_j)` is central for every simple `j`.
    pub phi_characters_central: bool,
    /// `χ_{i*} = Σ_j s_ij/deg_j E_j`.
    pub characters_reconstructed: bool,
    /// Balancing conventions under which `s_ij = θ_i^a θ_j^a Σ_k N_{i'j}^k θ_k^b deg_k` holds.
    pub balancing: Vec<String>,
}

impl ModularReport {
    pub fn is_valid(&self) -> bool {
        self.e_table_valid
            && self.e_sum_is_counit
            && self.phi_counit_is_unit
            && self.phi_characters_central
            && self.characters_reconstructed
    }
}

impl DoubleContext {
    /// `E_j(d)` for every `d ∈ Irr(D(A)*)`.
    pub fn e_table(&self) -> Result<Vec<Vec<CycScalar>>> {
        let dual_dec = self.dual_dec()?;
        Ok(dual_dec
            .characters
            .iter()
            .map(|d| (0..self.rank()).map(|j| self.evaluate(j, d)).collect())
            .collect())
    }

    pub fn modular_report(&self) -> Result<ModularReport> {
        let d = self.d();
        let dim = d.dim();
        let rank = self.rank();
        let dual_dec = self.dual_dec()?;
        let table = self.e_table()?;
        let e_table_valid = table.iter().zip(&dual_dec.characters).all(|(row, x)| {
            let nonneg = row
                .iter()
                .all(|v| v.as_integer().is_some_and(|i| i >= 0));
            let sum = row.iter().fold(CycScalar::zero(), |acc, v| &acc + v);
            nonneg && sum == d.eps(x)
        });
        let mut e_sum = vec![CycScalar::zero(); dim];
        for e in &self.e_functionals {
            e_sum = crate::linalg::add_vec(&e_sum, e);
        }
        let e_sum_is_counit = &e_sum == d.counit();
        let phi_counit_is_unit = &self.phi_of(d.counit()) == d.unit();
        let phi_characters_central = self.dec.characters.iter().all(|chi| {
            let z = self.phi_of(chi);
            d.generators().iter().all(|&g| d.mul_right_basis(&z, g) == d.mul_left_basis(g, &z))
        });
        let characters_reconstructed = (0..rank).all(|i| {
            let mut acc = vec![CycScalar::zero(); dim];
            for j in 0..rank {
                let c = self.s.get(i, j) * &CycScalar::frac(1, self.dec.degrees[j] as i64);
                crate::linalg::axpy(&mut acc, &c, &self.e_functionals[j]);
            }
            acc == self.dec.characters[self.dec.dual_map[i]]
        });
        let balancing = self.balancing_conventions()?;
        Ok(ModularReport {
            e_table: table
                .iter()
                .map(|row| row.iter().map(|v| v.to_string()).collect())
                .collect(),
            e_table_valid,
            e_sum_is_counit,
            phi_counit_is_unit,
            phi_characters_central,
            characters_reconstructed,
            balancing,
        })
    }

    fn balancing_conventions(&self) -> Result<Vec<String>> {
        let rules = self.rules()?;
        let rank = self.rank();
        let inv: Vec<CycScalar> = self.twist.iter().map(|t| t.inv()).collect::<Result<_>>()?;
        let mut out = Vec::new();
        for (outer_name, outer, inner_name, inner) in [
            ("θ⁻¹", &inv, "θ", &self.twist),
            ("θ", &self.twist, "θ⁻¹", &inv),
        ] {
            for dual_first in [false, true] {
                let holds = (0..rank).all(|i| {
                    (0..rank).all(|j| {
                        let first = if dual_first { self.dec.dual_map[i] } else { i };
                        let mut acc = CycScalar::zero();
                        for k in 0..rank {
                            let n = rules.get(first, j, k);
                            if n > 0 {
                                let c = CycScalar::from_int((n * self.dec.degrees[k] as u64) as i64);
                                acc.add_mul(&c, &inner[k]);
                            }
                        }
                        &(&outer[i] * &outer[j]) * &acc == *self.s.get(i, j)
                    })
                });
                if holds {
                    let first = if dual_first { "i*" } else { "i" };
                    out.push(format!("a = {outer_name}, b = {inner_name}, N_{{{first} j}}"));
                }
            }
        }
        Ok(out)
    }
}

/// `θ_j = χ_j(u)/deg_j`, checked to be a scalar action on each block and
/// validated by `θ_unit = 1` and `θ_{j*} = θ_j`; falls back to `u⁻¹`.
fn twist_values(d: &HopfAlgebra, dec: &IrrDecomposition, u: &[CycScalar]) -> Result<(Vec<CycScalar>, TwistConvention)> {
    let attempt = |x: &[CycScalar]| -> Option<Vec<CycScalar>> {
        let mut theta = Vec::with_capacity(dec.rank());
        for j in 0..dec.rank() {
            let t = &dec.eval(j, x) * &CycScalar::frac(1, dec.degrees[j] as i64);
            let ue = d.mul(x, &dec.idempotents[j]);
            let te: Vector = dec.idempotents[j].iter().map(|c| c * &t).collect();
            if ue != te {
                return None;
            }
            theta.push(t);
        }
        let valid = theta[0].is_one() && (0..dec.rank()).all(|j| theta[dec.dual_map[j]] == theta[j]);
        valid.then_some(theta)
    };
    if let Some(t) = attempt(u) {
        return Ok((t, TwistConvention::DrinfeldElement));
    }
    let lu = d.left_mult_matrix(u);
    if let Some(inv) = lu.solve(d.unit()) {
        if let Some(t) = attempt(&inv) {
            return Ok((t, TwistConvention::InverseDrinfeldElement));
        }
    }
    Err(Error::InternalConsistency(
        "neither u nor u⁻¹ acts on the simples by a valid twist".into(),
    ))
}
