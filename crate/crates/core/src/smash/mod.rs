//! Deformations of a Hopf algebra by a partial action on the base field.
//!
//! For a partial action λ of H on k, H_λ = {λ(h₁)h₂ : h ∈ H} is a subalgebra
//! of H, isomorphic to the partial smash product ⟨k#H⟩. This module builds
//! both, decides when H_λ is a Hopf subalgebra (λ(h₁)h₂ = λ(h₁)h₂λ(h₃) for all
//! h), and checks explicit Hopf morphism witnesses such as (T_n^k)_λ ≅ T_n.

mod echelon;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

pub use echelon::Echelon;

use crate::catalog::{self, CatalogError, DiagramEdge};
use crate::exactfield::{lcm_order, Cyclo, CyclotomicField};
use crate::groups::{group_algebra, lambda_n, FiniteGroup, GroupError, Subgroup};
use crate::hopfcore::{tensor_hopf, HopfAlgebra, HopfError, Tensor, Vector};
use crate::partial::{PartialAction, PartialError};

#[derive(Debug, Error)]
pub enum SmashError {
    #[error(transparent)]
    Partial(#[from] PartialError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Catalog(#[from] Box<CatalogError>),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("H_λ is not a subalgebra: {0}")]
    NotClosed(String),
    #[error("not a Hopf morphism: {law} fails at {element}")]
    NotAMorphism { law: String, element: String },
    #[error("expected {expected} generator images, got {got}")]
    WrongImageCount { expected: usize, got: usize },
    #[error("smash product and H_λ disagree: {0}")]
    SmashMismatch(String),
}

impl From<CatalogError> for SmashError {
    fn from(e: CatalogError) -> Self {
        SmashError::Catalog(Box::new(e))
    }
}

/// λ(h₁)h₂ for h = v.
pub fn project(h: &HopfAlgebra, lambda: &PartialAction, v: &Vector) -> Vector {
    let mut out = Vector::zero();
    for ((i, j), c) in h.comultiply(v).iter() {
        out.add_term(*j, &(c * lambda.value(*i)));
    }
    out
}

/// A subalgebra of H given by a reduced row echelon basis.
#[derive(Clone, Debug)]
pub struct SubalgebraBasis {
    echelon: Echelon<usize>,
}

impl SubalgebraBasis {
    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }
    pub fn vectors(&self) -> Vec<Vector> {
        self.echelon.rows().cloned().collect()
    }
    pub fn contains(&self, v: &Vector) -> bool {
        self.echelon.contains(v)
    }
    pub fn coordinates(&self, h: &HopfAlgebra, v: &Vector) -> Option<Vec<Cyclo>> {
        self.echelon.coordinates(v, &h.zero_scalar())
    }
    pub fn labels(&self, h: &HopfAlgebra) -> Vec<String> {
        self.echelon.rows().map(|v| h.format_vector(v)).collect()
    }
    /// Structure constants of the product of H restricted to the basis.
    pub fn structure_constants(&self, h: &HopfAlgebra) -> Result<Vec<Vec<Vec<Cyclo>>>, SmashError> {
        let vs = self.vectors();
        vs.iter()
            .map(|a| {
                vs.iter()
                    .map(|b| {
                        let p = h.multiply(a, b);
                        self.coordinates(h, &p)
                            .ok_or_else(|| SmashError::NotClosed(format!("({}) · ({})", h.format_vector(a), h.format_vector(b))))
                    })
                    .collect()
            })
            .collect()
    }
}

/// H_λ = span{λ(b₁)b₂ : b basis}, checked to contain 1 and be closed under products.
pub fn compute_h_lambda(h: &HopfAlgebra, lambda: &PartialAction) -> Result<SubalgebraBasis, SmashError> {
    let projections: Vec<Vector> = (0..h.dim()).map(|b| project(h, lambda, &h.basis_vector(b))).collect();
    let s = SubalgebraBasis { echelon: Echelon::from_vectors(&projections) };
    if !s.contains(h.unit()) {
        return Err(SmashError::NotClosed("1 ∉ H_λ".into()));
    }
    s.structure_constants(h)?;
    Ok(s)
}

/// ⟨k#H⟩ on the projections 1#λ(h₁)h₂, with (1#u)(1#v) = 1#λ(u₁)u₂v,
/// written in the same basis as H_λ.
#[derive(Clone, Debug, Serialize)]
pub struct SmashAlgebra {
    pub dim: usize,
    pub labels: Vec<String>,
    pub unit: Vec<String>,
    /// `mult[a][b]` = coordinates of basis a times basis b.
    pub mult: Vec<Vec<Vec<String>>>,
    #[serde(skip)]
    constants: Vec<Vec<Vec<Cyclo>>>,
    #[serde(skip)]
    unit_coordinates: Vec<Cyclo>,
}

impl SmashAlgebra {
    pub fn structure_constants(&self) -> &[Vec<Vec<Cyclo>>] {
        &self.constants
    }
    pub fn unit_coordinates(&self) -> &[Cyclo] {
        &self.unit_coordinates
    }

    /// Associativity and two-sided unit in coordinates.
    pub fn is_unital_associative(&self, field: &CyclotomicField) -> bool {
        let d = self.dim;
        let mul = |a: &[Cyclo], b: &[Cyclo]| -> Vec<Cyclo> {
            let mut out = vec![field.zero(); d];
            for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                    let xy = x * y;
                    for (k, c) in self.constants[i][j].iter().enumerate() {
                        out[k] = &out[k] + &(&xy * c);
                    }
                }
            }
            out
        };
        let e = |i: usize| -> Vec<Cyclo> { (0..d).map(|k| if k == i { field.one() } else { field.zero() }).collect() };
        (0..d).all(|i| mul(&self.unit_coordinates, &e(i)) == e(i) && mul(&e(i), &self.unit_coordinates) == e(i))
            && (0..d).all(|i| {
                (0..d).all(|j| (0..d).all(|k| mul(&mul(&e(i), &e(j)), &e(k)) == mul(&e(i), &mul(&e(j), &e(k)))))
            })
    }
}

/// The partial smash product ⟨k#H⟩ = (k#H)(1#1).
pub fn smash_product(h: &HopfAlgebra, lambda: &PartialAction) -> Result<SmashAlgebra, SmashError> {
    let projections: Vec<Vector> = (0..h.dim()).map(|b| project(h, lambda, &h.basis_vector(b))).collect();
    let span = Echelon::from_vectors(&projections);
    let basis: Vec<Vector> = span.rows().cloned().collect();
    let zero = h.zero_scalar();
    let coords = |v: &Vector| span.coordinates(v, &zero).ok_or_else(|| SmashError::SmashMismatch(format!("{} outside the span", h.format_vector(v))));
    let smash_mul = |u: &Vector, v: &Vector| -> Vector {
        let mut out = Vector::zero();
        for ((i, j), c) in h.comultiply(u).iter() {
            let coeff = c * lambda.value(*i);
            if !coeff.is_zero() {
                out.add_scaled(&coeff, &h.multiply(&h.basis_vector(*j), v));
            }
        }
        out
    };
    let constants = basis
        .iter()
        .map(|u| basis.iter().map(|v| coords(&smash_mul(u, v))).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    let unit_coordinates = coords(&project(h, lambda, h.unit()))?;
    let show = |v: &[Cyclo]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
    Ok(SmashAlgebra {
        dim: basis.len(),
        labels: basis.iter().map(|v| h.format_vector(v)).collect(),
        unit: show(&unit_coordinates),
        mult: constants.iter().map(|row| row.iter().map(|c| show(c)).collect()).collect(),
        constants,
        unit_coordinates,
    })
}

/// φ(1#λ(h₁)h₂) = λ(h₁)h₂ identifies ⟨k#H⟩ with H_λ: both are written in the
/// same echelon basis, so the structure constants must coincide.
pub fn check_phi_equivalence(h: &HopfAlgebra, lambda: &PartialAction) -> Result<bool, SmashError> {
    let s = compute_h_lambda(h, lambda)?;
    let a = smash_product(h, lambda)?;
    let unit = s.coordinates(h, h.unit()).expect("unit lies in H_λ");
    Ok(a.dim == s.dim()
        && a.structure_constants() == s.structure_constants(h)?.as_slice()
        && a.unit_coordinates() == unit.as_slice()
        && a.is_unital_associative(h.field()))
}

/// Outcome of an identity checked on every basis element.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Witness {
    pub element: String,
    pub lhs: String,
    pub rhs: String,
}

fn scan(h: &HopfAlgebra, mut sides: impl FnMut(usize) -> (Vector, Vector)) -> Verdict {
    for b in 0..h.dim() {
        let (l, r) = sides(b);
        if l != r {
            return Verdict {
                holds: false,
                witness: Some(Witness { element: h.label(b).to_string(), lhs: h.format_vector(&l), rhs: h.format_vector(&r) }),
            };
        }
    }
    Verdict { holds: true, witness: None }
}

/// λ(h₁)h₂ = λ(h₁)h₂λ(h₃) on every basis element.
pub fn check_carac(h: &HopfAlgebra, lambda: &PartialAction) -> Verdict {
    scan(h, |b| {
        let v = h.basis_vector(b);
        let lhs = project(h, lambda, &v);
        let mut rhs = Vector::zero();
        for ((i, j, k), c) in h.comultiply_twice(&v).iter() {
            rhs.add_term(*j, &(&(c * lambda.value(*i)) * lambda.value(*k)));
        }
        (lhs, rhs)
    })
}

/// λ(h₁)h₂ = h₁λ(h₂) on every basis element.
pub fn check_strong(h: &HopfAlgebra, lambda: &PartialAction) -> Verdict {
    scan(h, |b| {
        let v = h.basis_vector(b);
        let lhs = project(h, lambda, &v);
        let mut rhs = Vector::zero();
        for ((i, j), c) in h.comultiply(&v).iter() {
            rhs.add_term(*i, &(c * lambda.value(*j)));
        }
        (lhs, rhs)
    })
}

/// Δ(S) ⊆ S ⊗ S, decided in the tensor square.
pub fn check_coproduct_closure(h: &HopfAlgebra, s: &SubalgebraBasis) -> bool {
    let vs = s.vectors();
    let mut square: Echelon<(usize, usize)> = Echelon::new();
    for a in &vs {
        for b in &vs {
            let mut t = Tensor::zero();
            for (i, x) in a.iter() {
                for (j, y) in b.iter() {
                    t.add_term((*i, *j), &(x * y));
                }
            }
            square.insert(&t);
        }
    }
    vs.iter().all(|v| square.contains(&h.comultiply(v)))
}

/// λ and ε agree on S.
pub fn check_restriction_lemma(h: &HopfAlgebra, lambda: &PartialAction, s: &SubalgebraBasis) -> Verdict {
    for v in s.vectors() {
        let l = lambda.apply(h, &v);
        let e = h.counit(&v);
        if l != e {
            return Verdict {
                holds: false,
                witness: Some(Witness { element: h.format_vector(&v), lhs: l.to_string(), rhs: e.to_string() }),
            };
        }
    }
    Verdict { holds: true, witness: None }
}

/// A skew-primitive x ∈ P_{g,h} with λ(g) ≠ λ(h).
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SkewInstance {
    pub element: String,
    pub g: String,
    pub h: String,
    pub lambda_g: String,
    pub lambda_h: String,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SkewCorollaryReport {
    pub instances: Vec<SkewInstance>,
    pub carac: bool,
    /// No instance, or carac fails as the corollary predicts.
    pub consistent: bool,
}

/// Basis skew-primitives with λ(g) ≠ λ(h) force H_λ not to be a Hopf subalgebra.
pub fn check_skew_corollaries(h: &HopfAlgebra, lambda: &PartialAction) -> SkewCorollaryReport {
    let instances: Vec<SkewInstance> = h
        .skew_primitives()
        .into_iter()
        .filter(|sp| lambda.value(sp.g) != lambda.value(sp.h))
        .map(|sp| SkewInstance {
            element: h.label(sp.x).to_string(),
            g: h.label(sp.g).to_string(),
            h: h.label(sp.h).to_string(),
            lambda_g: lambda.value(sp.g).to_string(),
            lambda_h: lambda.value(sp.h).to_string(),
        })
        .collect();
    let carac = check_carac(h, lambda).holds;
    let consistent = instances.is_empty() || !carac;
    SkewCorollaryReport { instances, carac, consistent }
}

/// λ_H ⊗ λ_L on H ⊗ L, whose basis is b_i ⊗ c_j at index i·dim L + j
/// (the layout of [`tensor_hopf`]).
pub fn tensor_partial_action(
    h: &HopfAlgebra,
    lambda_h: &PartialAction,
    l: &HopfAlgebra,
    lambda_l: &PartialAction,
    hl: &HopfAlgebra,
) -> Result<PartialAction, SmashError> {
    if hl.dim() != h.dim() * l.dim() {
        return Err(HopfError::DimensionMismatch { expected: h.dim() * l.dim(), got: hl.dim() }.into());
    }
    let f = hl.field();
    let mut values = Vec::with_capacity(hl.dim());
    for a in lambda_h.values() {
        for b in lambda_l.values() {
            let a = a.embed(f).map_err(HopfError::from)?;
            let b = b.embed(f).map_err(HopfError::from)?;
            values.push(&a * &b);
        }
    }
    Ok(PartialAction::new(hl, values)?)
}

/// A checked linear map defined on generators and extended multiplicatively.
#[derive(Clone, Debug)]
pub struct HopfMorphism {
    /// Image of every source basis element.
    pub basis_images: Vec<Vector>,
    pub injective: bool,
    pub bijective: bool,
}

fn morphism_failure(law: &str, element: String) -> SmashError {
    SmashError::NotAMorphism { law: law.to_string(), element }
}

/// Check that the map sending source generator i to `images[i]` (vectors of
/// `target`) extends to a Hopf algebra morphism. The source is first moved to
/// the target's field.
pub fn verify_hopf_morphism(source: &HopfAlgebra, target: &HopfAlgebra, images: &[Vector]) -> Result<HopfMorphism, SmashError> {
    if images.len() != source.generators().len() {
        return Err(SmashError::WrongImageCount { expected: source.generators().len(), got: images.len() });
    }
    let order = lcm_order(source.field().order(), target.field().order());
    if order != target.field().order() {
        return Err(morphism_failure("field", format!("Q(zeta{}) does not embed in the target field", source.field().order())));
    }
    let source = source.with_field(target.field())?;
    let phi: Vec<Vector> = source
        .basis_words()
        .iter()
        .map(|w| w.iter().fold(target.unit().clone(), |acc, &g| target.multiply(&acc, &images[g])))
        .collect();
    let map = |v: &Vector| -> Vector {
        let mut out = Vector::zero();
        for (i, c) in v.iter() {
            out.add_scaled(c, &phi[*i]);
        }
        out
    };
    // generators must go where the images say
    for (k, (name, v)) in source.generators().iter().enumerate() {
        if map(v) != images[k] {
            return Err(morphism_failure("generator", name.clone()));
        }
    }
    if map(source.unit()) != *target.unit() {
        return Err(morphism_failure("unit", "1".into()));
    }
    let n = source.dim();
    for i in 0..n {
        for j in 0..n {
            if map(source.mult_basis(i, j)) != target.multiply(&phi[i], &phi[j]) {
                return Err(morphism_failure("multiplication", format!("{}·{}", source.label(i), source.label(j))));
            }
        }
    }
    for i in 0..n {
        let mut lhs = Tensor::zero();
        for ((a, b), c) in source.comultiply(&source.basis_vector(i)).iter() {
            for (p, x) in phi[*a].iter() {
                for (q, y) in phi[*b].iter() {
                    lhs.add_term((*p, *q), &(&(c * x) * y));
                }
            }
        }
        if lhs != target.comultiply(&phi[i]) {
            return Err(morphism_failure("comultiplication", source.label(i).to_string()));
        }
        if target.counit(&phi[i]) != *source.counit_basis(i) {
            return Err(morphism_failure("counit", source.label(i).to_string()));
        }
        if target.antipode(&phi[i]) != map(source.antipode_basis(i)) {
            return Err(morphism_failure("antipode", source.label(i).to_string()));
        }
    }
    let rank = Echelon::from_vectors(&phi).rank();
    Ok(HopfMorphism { injective: rank == n, bijective: rank == n && n == target.dim(), basis_images: phi })
}

/// Witness that `target` ≅ H_λ: a morphism target → H that is injective with image H_λ.
pub fn verify_deformation_witness(
    h: &HopfAlgebra,
    s: &SubalgebraBasis,
    target: &HopfAlgebra,
    images: &[Vector],
) -> Result<HopfMorphism, SmashError> {
    let m = verify_hopf_morphism(target, h, images)?;
    if !m.injective {
        return Err(morphism_failure("injectivity", target.name().to_string()));
    }
    if m.basis_images.len() != s.dim() || !m.basis_images.iter().all(|v| s.contains(v)) {
        return Err(morphism_failure("image equals H_λ", format!("dim {} vs {}", m.basis_images.len(), s.dim())));
    }
    Ok(m)
}

/// Read generator images given as words of `h`, in the target's generator order.
pub fn parse_images(h: &HopfAlgebra, target: &HopfAlgebra, images: &[(String, String)]) -> Result<Vec<Vector>, SmashError> {
    target
        .generators()
        .iter()
        .map(|(name, _)| {
            let (_, word) = images
                .iter()
                .find(|(g, _)| g == name)
                .ok_or_else(|| morphism_failure("generator image", format!("no image for {name}")))?;
            Ok(h.element(word)?)
        })
        .collect()
}

/// λ(g^i x^j) = δ_{j,0} δ_N(g^i) on T_n^k(ω), N = ⟨g^k⟩.
pub fn taft_lambda(n: u32, k: u32) -> Result<(HopfAlgebra, PartialAction), SmashError> {
    let t = catalog::taft(n, k)?;
    let gl = t.group_likes()?;
    let gk = gl.group.parse_element(&format!("g^{k}"))?;
    let sub = gl.group.generated_by(&[gk]);
    let f = t.field();
    let values = (0..t.dim())
        .map(|b| match gl.element_of(b) {
            Some(g) if sub.contains(g) => f.one(),
            _ => f.zero(),
        })
        .collect();
    let lambda = PartialAction::new(&t, values)?;
    Ok((t, lambda))
}

/// (T_n^k(ω))_λ ≅ T_n(ω^k) via h ↦ g^k, y ↦ x.
pub fn taft_witness(n: u32, k: u32) -> Result<(SubalgebraBasis, HopfMorphism), SmashError> {
    let (t, lambda) = taft_lambda(n, k)?;
    let s = compute_h_lambda(&t, &lambda)?;
    let small = catalog::taft(n, 1)?;
    let gk = if k == 1 { "g".to_string() } else { format!("g^{k}") };
    let images = parse_images(&t, &small, &[("g".into(), gk), ("x".into(), "x".into())])?;
    let m = verify_deformation_witness(&t, &s, &small, &images)?;
    Ok((s, m))
}

/// L = H ⊗ kG with λ = ε_H ⊗ λ_{1}: L_λ = H ⊗ 1 ≅ H.
#[derive(Clone, Debug)]
pub struct UniversalityWitness {
    pub l: HopfAlgebra,
    pub lambda: PartialAction,
    pub h_lambda: SubalgebraBasis,
    pub carac: bool,
    pub morphism: HopfMorphism,
}

pub fn lambda_hopf_witness_construction(h: &HopfAlgebra, g: &FiniteGroup) -> Result<UniversalityWitness, SmashError> {
    let kg = group_algebra(g, h.field())?;
    let taken: Vec<&str> = h.generators().iter().map(|(s, _)| s.as_str()).collect();
    let mut fresh = ["u", "v", "w", "s", "t", "r"].into_iter().filter(|c| !taken.contains(c));
    let renames: Vec<(String, String)> = kg
        .generators()
        .iter()
        .map(|(s, _)| (s.clone(), fresh.next().expect("enough fresh names").to_string()))
        .collect();
    let rename: Vec<(&str, &str)> = renames.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let l = tensor_hopf(h, &kg, &rename)?;
    let trivial = g.generated_by(&[]);
    let lambda_g = PartialAction::new(&kg, lambda_n(g, &trivial, kg.field()))?;
    let lambda = tensor_partial_action(h, &PartialAction::counit(h), &kg, &lambda_g, &l)?;
    let s = compute_h_lambda(&l, &lambda)?;
    let carac = check_carac(&l, &lambda).holds;
    let images: Vec<Vector> = l.generators()[..h.generators().len()].iter().map(|(_, v)| v.clone()).collect();
    let morphism = verify_deformation_witness(&l, &s, h, &images)?;
    Ok(UniversalityWitness { l, lambda, h_lambda: s, carac, morphism })
}

/// A verified target of a deformation.
#[derive(Clone, Debug, Serialize)]
pub struct TargetWitness {
    pub algebra: String,
    pub images: Vec<(String, String)>,
    pub injective: bool,
    pub onto_h_lambda: bool,
}

/// Everything known about one deformation H_λ.
#[derive(Clone, Debug, Serialize)]
pub struct SmashReport {
    pub algebra: String,
    pub subgroup: Option<String>,
    pub parameter_point: BTreeMap<String, String>,
    pub lambda: Vec<(String, String)>,
    pub dim: usize,
    pub basis: Vec<String>,
    pub carac: Verdict,
    pub strong: Verdict,
    pub coproduct_closure: bool,
    pub restriction_lemma: Verdict,
    pub skew_corollary: SkewCorollaryReport,
    pub smash_matches_h_lambda: bool,
    pub target: Option<TargetWitness>,
}

impl SmashReport {
    /// Internal consistency: carac ⇔ closure, strong ⇒ carac, lemma, corollary, φ.
    pub fn is_consistent(&self) -> bool {
        self.carac.holds == self.coproduct_closure
            && (!self.strong.holds || self.carac.holds)
            && self.restriction_lemma.holds
            && self.skew_corollary.consistent
            && self.smash_matches_h_lambda
    }
}

pub fn smash_report(
    h: &HopfAlgebra,
    lambda: &PartialAction,
    subgroup: Option<&Subgroup>,
    parameter_point: BTreeMap<String, String>,
    target: Option<(&HopfAlgebra, &[(String, String)])>,
) -> Result<SmashReport, SmashError> {
    let s = compute_h_lambda(h, lambda)?;
    let gl = h.group_likes().ok();
    let target = match target {
        None => None,
        Some((b, images)) => {
            let vs = parse_images(h, b, images)?;
            let m = verify_hopf_morphism(b, h, &vs)?;
            let onto = m.injective && m.basis_images.len() == s.dim() && m.basis_images.iter().all(|v| s.contains(v));
            Some(TargetWitness { algebra: b.name().to_string(), images: images.to_vec(), injective: m.injective, onto_h_lambda: onto })
        }
    };
    Ok(SmashReport {
        algebra: h.name().to_string(),
        subgroup: match (subgroup, &gl) {
            (Some(n), Some(gl)) => Some(n.display(&gl.group)),
            _ => None,
        },
        parameter_point,
        lambda: (0..h.dim()).map(|i| (h.label(i).to_string(), lambda.value(i).to_string())).collect(),
        dim: s.dim(),
        basis: s.labels(h),
        carac: check_carac(h, lambda),
        strong: check_strong(h, lambda),
        coproduct_closure: check_coproduct_closure(h, &s),
        restriction_lemma: check_restriction_lemma(h, lambda, &s),
        skew_corollary: check_skew_corollaries(h, lambda),
        smash_matches_h_lambda: check_phi_equivalence(h, lambda)?,
        target,
    })
}

/// Result of checking one diagram edge.
#[derive(Clone, Debug, Serialize)]
pub struct EdgeReport {
    pub edge: DiagramEdge,
    pub dim: usize,
    pub carac: bool,
    pub verified: bool,
    pub error: Option<String>,
}

/// Take the tabulated λ for the edge's subgroup at the default point, build
/// H_λ and check the morphism witness onto the target.
pub fn verify_edge(edge: &DiagramEdge) -> Result<EdgeReport, SmashError> {
    let h = catalog::get_algebra(&edge.source)?;
    let table = catalog::load_table(&edge.source)?;
    let gl = h.group_likes()?;
    let words: Vec<&str> = edge.subgroup.iter().map(String::as_str).collect();
    let n = gl.group.subgroup_from_words(&words)?;
    let row = catalog::find_row(&h, &table, &n)?
        .ok_or_else(|| CatalogError::Data { file: edge.source.clone(), message: format!("no row for {}", n.display(&gl.group)) })?;
    let point = row.default_point()?;
    let lambda = PartialAction::new(&h, row.values_at(&point))?;
    let s = compute_h_lambda(&h, &lambda)?;
    let carac = check_carac(&h, &lambda).holds;
    let target = catalog::get_algebra(&edge.target)?;
    let outcome = parse_images(&h, &target, &edge.images).and_then(|imgs| verify_deformation_witness(&h, &s, &target, &imgs));
    Ok(EdgeReport {
        edge: edge.clone(),
        dim: s.dim(),
        carac,
        verified: outcome.is_ok() && carac,
        error: outcome.err().map(|e| e.to_string()),
    })
}

/// A field able to hold both algebras' scalars.
pub fn common_field(a: &HopfAlgebra, b: &HopfAlgebra) -> Result<CyclotomicField, SmashError> {
    Ok(CyclotomicField::new(lcm_order(a.field().order(), b.field().order())).map_err(HopfError::from)?)
}

#[cfg(test)]
mod tests;
