//! Partial actions of a Hopf algebra H on its base field.
//!
//! A partial action is a functional λ with λ(1) = 1 and
//! λ(h)λ(k) = λ(h₁)λ(h₂k). They are found subgroup by subgroup: fixing the
//! set N of group-likes where λ is 1, the values on N-translates are
//! identified and only a reduced set of equations has to be solved.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::exactfield::{Cyclo, CyclotomicField};
use crate::groups::{enumerate_subgroups, GroupError, Subgroup};
use crate::hopfcore::{GroupLikes, HopfAlgebra, HopfError, Vector};
use crate::polysolve::{
    extract_families, groebner, ideal_contains, ideal_equal, intersect, is_unit_ideal, MonomialOrder, MultiPoly,
    PolyError, PolyRing, Ring, SolutionFamily, SolveConfig,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PartialError {
    #[error("not a partial action: {0}")]
    NotAPartialAction(String),
    #[error("{group} · {element} is not a multiple of a basis element")]
    NotPermutation { group: String, element: String },
    #[error("expected {expected} values, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// λ(a)λ(b) − Σ λ(a₁)λ(a₂b) on basis elements a, b.
pub fn partial_defect(h: &HopfAlgebra, lambda: &[Cyclo], a: usize, b: usize) -> Cyclo {
    let ev = |v: &Vector| evaluate(h, lambda, v);
    let mut acc = &lambda[a] * &lambda[b];
    for (c, i, j) in h.comult_basis(a) {
        acc = &acc - &(&(c * &lambda[*i]) * &ev(h.mult_basis(*j, b)));
    }
    acc
}

/// λ(a)λ(b) − Σ λ(a₁b)λ(a₂).
pub fn symmetric_defect(h: &HopfAlgebra, lambda: &[Cyclo], a: usize, b: usize) -> Cyclo {
    let ev = |v: &Vector| evaluate(h, lambda, v);
    let mut acc = &lambda[a] * &lambda[b];
    for (c, i, j) in h.comult_basis(a) {
        acc = &acc - &(&(c * &ev(h.mult_basis(*i, b))) * &lambda[*j]);
    }
    acc
}

/// λ applied to a vector.
pub fn evaluate(h: &HopfAlgebra, lambda: &[Cyclo], v: &Vector) -> Cyclo {
    v.iter().fold(h.zero_scalar(), |acc, (i, c)| &acc + &(c * &lambda[*i]))
}

pub fn is_partial_action(h: &HopfAlgebra, lambda: &[Cyclo]) -> bool {
    lambda.len() == h.dim()
        && evaluate(h, lambda, h.unit()).is_one()
        && (0..h.dim()).all(|a| (0..h.dim()).all(|b| partial_defect(h, lambda, a, b).is_zero()))
}

pub fn is_symmetric(h: &HopfAlgebra, lambda: &[Cyclo]) -> Result<bool, PartialError> {
    if !is_partial_action(h, lambda) {
        return Err(PartialError::NotAPartialAction("symmetry is only defined for partial actions".into()));
    }
    Ok((0..h.dim()).all(|a| (0..h.dim()).all(|b| symmetric_defect(h, lambda, a, b).is_zero())))
}

/// (λ ∗ μ)(b) = Σ λ(b₁)μ(b₂).
pub fn convolution(h: &HopfAlgebra, lambda: &[Cyclo], mu: &[Cyclo]) -> Vec<Cyclo> {
    (0..h.dim())
        .map(|b| {
            h.comult_basis(b).iter().fold(h.zero_scalar(), |acc, (c, i, j)| &acc + &(&(c * &lambda[*i]) * &mu[*j]))
        })
        .collect()
}

/// A verified partial action.
#[derive(Clone, Debug, PartialEq)]
pub struct PartialAction {
    values: Vec<Cyclo>,
}

impl PartialAction {
    pub fn new(h: &HopfAlgebra, values: Vec<Cyclo>) -> Result<Self, PartialError> {
        if values.len() != h.dim() {
            return Err(PartialError::WrongLength { expected: h.dim(), got: values.len() });
        }
        let values = values.iter().map(|v| v.embed(h.field())).collect::<Result<Vec<_>, _>>().map_err(HopfError::from)?;
        if !is_partial_action(h, &values) {
            return Err(PartialError::NotAPartialAction(describe_failure(h, &values)));
        }
        Ok(PartialAction { values })
    }
    pub fn counit(h: &HopfAlgebra) -> Self {
        PartialAction { values: (0..h.dim()).map(|i| h.counit_basis(i).clone()).collect() }
    }
    pub fn values(&self) -> &[Cyclo] {
        &self.values
    }
    pub fn value(&self, i: usize) -> &Cyclo {
        &self.values[i]
    }
    pub fn apply(&self, h: &HopfAlgebra, v: &Vector) -> Cyclo {
        evaluate(h, &self.values, v)
    }
    /// The subgroup of group-likes where λ is 1.
    pub fn initial_condition(&self, gl: &GroupLikes) -> Subgroup {
        let members: Vec<usize> = gl.group.elements().filter(|&g| self.values[gl.basis_index(g)].is_one()).collect();
        gl.group.generated_by(&members)
    }
}

fn describe_failure(h: &HopfAlgebra, lambda: &[Cyclo]) -> String {
    if lambda.len() != h.dim() {
        return format!("expected {} values, got {}", h.dim(), lambda.len());
    }
    if !evaluate(h, lambda, h.unit()).is_one() {
        return "λ(1) ≠ 1".into();
    }
    for a in 0..h.dim() {
        for b in 0..h.dim() {
            let d = partial_defect(h, lambda, a, b);
            if !d.is_zero() {
                return format!("defect {d} at ({}, {})", h.label(a), h.label(b));
            }
        }
    }
    "none".into()
}

/// Bookkeeping for one subgroup N: classes of non-group-like basis elements
/// under left multiplication by N, chosen representatives, and the skew
/// primitives that need no equations.
#[derive(Clone, Debug)]
pub struct Transversal {
    pub subgroup: Subgroup,
    pub group_likes: GroupLikes,
    /// Basis indices of the non-group-like basis elements.
    pub non_group_like: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
    /// For each basis element b outside G(H): (r, c) with Λ(b) = c · Λ(r), r its representative.
    pub rep_of: BTreeMap<usize, (usize, Cyclo)>,
    pub representatives: Vec<usize>,
    pub non_representatives: Vec<usize>,
    /// Representatives lying in some P_{t,s} with t ∈ N and s ∉ N.
    pub skew_in_n: Vec<usize>,
    /// The elements u that index the reduced equations.
    pub reduced: Vec<usize>,
}

pub fn build_transversal(h: &HopfAlgebra, n: &Subgroup) -> Result<Transversal, PartialError> {
    let gl = h.group_likes()?;
    let is_gl = |i: usize| gl.element_of(i).is_some();
    let non_group_like: Vec<usize> = (0..h.dim()).filter(|&i| !is_gl(i)).collect();
    let mut rep_of: BTreeMap<usize, (usize, Cyclo)> = BTreeMap::new();
    let mut classes = Vec::new();
    let mut representatives = Vec::new();
    for &b in &non_group_like {
        if rep_of.contains_key(&b) {
            continue;
        }
        representatives.push(b);
        let mut class = vec![b];
        rep_of.insert(b, (b, h.one()));
        for &g in n.members() {
            let gv = h.multiply(&h.basis_vector(gl.basis_index(g)), &h.basis_vector(b));
            let (y, c) = h.as_scaled_basis(&gv).ok_or_else(|| PartialError::NotPermutation {
                group: gl.group.label(g).to_string(),
                element: h.label(b).to_string(),
            })?;
            // g·b = c·y and λ(g·b) = λ(b), so Λ(y) = Λ(b)/c
            if let std::collections::btree_map::Entry::Vacant(e) = rep_of.entry(y) {
                e.insert((b, c.inverse().map_err(HopfError::from)?));
                class.push(y);
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    let non_representatives: Vec<usize> = non_group_like.iter().copied().filter(|b| !representatives.contains(b)).collect();
    let skew = h.skew_primitives();
    let in_n = |basis: usize| gl.element_of(basis).map(|g| n.contains(g)).unwrap_or(false);
    let skew_in_n: Vec<usize> = representatives
        .iter()
        .copied()
        .filter(|&r| skew.iter().any(|s| s.x == r && in_n(s.g) && !in_n(s.h)))
        .collect();
    let reduced = representatives.iter().copied().filter(|r| !skew_in_n.contains(r)).collect();
    Ok(Transversal {
        subgroup: n.clone(),
        group_likes: gl,
        non_group_like,
        classes,
        rep_of,
        representatives,
        non_representatives,
        skew_in_n,
        reduced,
    })
}

/// The N-reduced system: unknowns are the representatives; `lambda[b]` is Λ(b)
/// after the initial N-condition is imposed.
#[derive(Clone, Debug)]
pub struct ReducedSystem {
    pub transversal: Transversal,
    pub ring: Ring,
    pub unknowns: Vec<usize>,
    pub lambda: Vec<MultiPoly>,
    pub equations: Vec<MultiPoly>,
}

fn unknown_name(i: usize) -> String {
    format!("X{i}")
}

fn lambda_poly(lambda: &[MultiPoly], v: &Vector, ring: &Ring) -> MultiPoly {
    let mut acc = MultiPoly::zero(ring);
    for (i, c) in v.iter() {
        acc = &acc + &lambda[*i].scale(c);
    }
    acc
}

/// Λ(u)Λ(v) − Σ Λ(u₁)Λ(u₂v).
fn equation(h: &HopfAlgebra, lambda: &[MultiPoly], ring: &Ring, u: usize, v: usize) -> MultiPoly {
    let mut eq = &lambda[u] * &lambda[v];
    for (c, i, j) in h.comult_basis(u) {
        let rhs = lambda_poly(lambda, h.mult_basis(*j, v), ring);
        eq = &eq - &(&lambda[*i] * &rhs).scale(c);
    }
    eq
}

pub fn build_reduced_system(h: &HopfAlgebra, n: &Subgroup) -> Result<ReducedSystem, PartialError> {
    let t = build_transversal(h, n)?;
    let unknowns = t.representatives.clone();
    let ring = PolyRing::new(h.field().clone(), unknowns.iter().map(|&i| unknown_name(i)).collect(), MonomialOrder::DegRevLex);
    let lambda: Vec<MultiPoly> = (0..h.dim())
        .map(|b| match t.group_likes.element_of(b) {
            Some(g) if n.contains(g) => MultiPoly::one(&ring),
            Some(_) => MultiPoly::zero(&ring),
            None => {
                let (r, c) = &t.rep_of[&b];
                let k = unknowns.iter().position(|u| u == r).expect("representative");
                MultiPoly::var(&ring, k).scale(c)
            }
        })
        .collect();
    let equations = t
        .reduced
        .iter()
        .flat_map(|&u| (0..h.dim()).map(move |v| (u, v)))
        .map(|(u, v)| equation(h, &lambda, &ring, u, v))
        .collect();
    Ok(ReducedSystem { transversal: t, ring, unknowns, lambda, equations })
}

/// One parametric family of partial actions with a fixed initial condition.
/// The family's unknowns are the basis labels of H.
#[derive(Clone, Debug)]
pub struct PartialActionFamily {
    pub subgroup: Subgroup,
    pub subgroup_labels: Vec<String>,
    pub family: SolutionFamily,
}

impl PartialActionFamily {
    /// λ at a parameter point.
    pub fn values_at(&self, point: &[Cyclo]) -> Vec<Cyclo> {
        self.family.specialize(point)
    }

    /// Parameters take 1, 2, 3, … unless a constraint pins them down.
    pub fn default_point(&self) -> Result<Vec<Cyclo>, PartialError> {
        Ok(self.family.default_point()?)
    }

    /// Λ for every basis element as polynomials in the parameters.
    pub fn lambda_polys(&self) -> &[MultiPoly] {
        self.family.assignments()
    }

    /// Λ on an arbitrary element of H.
    pub fn lambda_of(&self, v: &Vector) -> MultiPoly {
        lambda_poly(self.family.assignments(), v, self.family.param_ring())
    }

    /// Every partial-action equation vanishes modulo the constraints.
    pub fn verify_symbolic(&self, h: &HopfAlgebra) -> bool {
        let ring = self.family.param_ring().clone();
        let lam = self.family.assignments();
        let gb = self.family.constraints();
        if !ideal_contains(gb, &(&lambda_poly(lam, h.unit(), &ring) - &MultiPoly::one(&ring))) {
            return false;
        }
        (0..h.dim()).all(|a| (0..h.dim()).all(|b| ideal_contains(gb, &equation(h, lam, &ring, a, b))))
    }

    /// Symmetry decided over the whole family when possible.
    pub fn symmetry(&self, h: &HopfAlgebra) -> Symmetry {
        let ring = self.family.param_ring().clone();
        let lam = self.family.assignments();
        let gb = self.family.constraints();
        let mut defects = Vec::new();
        for a in 0..h.dim() {
            for b in 0..h.dim() {
                let mut d = &lam[a] * &lam[b];
                for (c, i, j) in h.comult_basis(a) {
                    d = &d - &(&lambda_poly(lam, h.mult_basis(*i, b), &ring) * &lam[*j]).scale(c);
                }
                if !ideal_contains(gb, &d) {
                    defects.push(d);
                }
            }
        }
        if defects.is_empty() {
            return Symmetry::Symmetric;
        }
        let mut all = gb.to_vec();
        all.extend(defects);
        if is_unit_ideal(&groebner(&all)) {
            Symmetry::NotSymmetric
        } else {
            Symmetry::ParameterDependent
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Symmetry {
    Symmetric,
    NotSymmetric,
    ParameterDependent,
}

fn lift(h: &HopfAlgebra, sys: &ReducedSystem, fam: &SolutionFamily) -> Result<PartialActionFamily, PartialError> {
    let assignments = sys.lambda.iter().map(|p| fam.substitute(p)).collect::<Result<Vec<_>, _>>()?;
    let n = &sys.transversal.subgroup;
    Ok(PartialActionFamily {
        subgroup: n.clone(),
        subgroup_labels: n.labels(&sys.transversal.group_likes.group),
        family: SolutionFamily::new(
            h.labels().to_vec(),
            fam.param_ring().clone(),
            assignments,
            fam.constraints().to_vec(),
        ),
    })
}

/// All partial actions with initial condition N.
pub fn solve_partial_actions(h: &HopfAlgebra, n: &Subgroup, config: &SolveConfig) -> Result<Vec<PartialActionFamily>, PartialError> {
    let sys = build_reduced_system(h, n)?;
    let fams = extract_families(&sys.ring, &sys.equations, config)?;
    fams.iter().map(|f| lift(h, &sys, f)).collect()
}

/// Subgroups of G(H) in enumeration order, each with its families.
pub fn enumerate_all_partial_actions(
    h: &HopfAlgebra,
    config: &SolveConfig,
) -> Result<Vec<(Subgroup, Vec<PartialActionFamily>)>, PartialError> {
    let gl = h.group_likes()?;
    enumerate_subgroups(&gl.group)?
        .into_iter()
        .map(|n| {
            let fams = solve_partial_actions(h, &n, config)?;
            Ok((n, fams))
        })
        .collect()
}

/// Solve the full system λ(1) = 1, λ(a)λ(b) = λ(a₁)λ(a₂b) over all basis pairs,
/// with only the group-like values fixed by N. No class identification and
/// no reduction is used.
pub fn solve_full_system(h: &HopfAlgebra, n: &Subgroup, config: &SolveConfig) -> Result<Vec<PartialActionFamily>, PartialError> {
    let gl = h.group_likes()?;
    let ring = PolyRing::new(h.field().clone(), (0..h.dim()).map(unknown_name).collect(), MonomialOrder::DegRevLex);
    let lambda: Vec<MultiPoly> = (0..h.dim()).map(|i| MultiPoly::var(&ring, i)).collect();
    let mut eqs = vec![&lambda_poly(&lambda, h.unit(), &ring) - &MultiPoly::one(&ring)];
    for g in gl.group.elements() {
        let x = &lambda[gl.basis_index(g)];
        eqs.push(if n.contains(g) { x - &MultiPoly::one(&ring) } else { x.clone() });
    }
    for a in 0..h.dim() {
        for b in 0..h.dim() {
            eqs.push(equation(h, &lambda, &ring, a, b));
        }
    }
    let fams = extract_families(&ring, &eqs, config)?;
    Ok(fams
        .into_iter()
        .map(|f| PartialActionFamily {
            subgroup: n.clone(),
            subgroup_labels: n.labels(&gl.group),
            family: SolutionFamily::new(h.labels().to_vec(), f.param_ring().clone(), f.assignments().to_vec(), f.constraints().to_vec()),
        })
        .collect())
}

/// Solve λ(1) = 1, λ(a)λ(b) = λ(a₁)λ(a₂b) with no initial condition at all.
/// Used for algebras without group-like basis elements, such as (kG)*.
pub fn solve_unrestricted(h: &HopfAlgebra, config: &SolveConfig) -> Result<Vec<SolutionFamily>, PartialError> {
    let ring = PolyRing::new(h.field().clone(), (0..h.dim()).map(unknown_name).collect(), MonomialOrder::DegRevLex);
    let lambda: Vec<MultiPoly> = (0..h.dim()).map(|i| MultiPoly::var(&ring, i)).collect();
    let mut eqs = vec![&lambda_poly(&lambda, h.unit(), &ring) - &MultiPoly::one(&ring)];
    for a in 0..h.dim() {
        for b in 0..h.dim() {
            eqs.push(equation(h, &lambda, &ring, a, b));
        }
    }
    let fams = extract_families(&ring, &eqs, config)?;
    Ok(fams
        .into_iter()
        .map(|f| SolutionFamily::new(h.labels().to_vec(), f.param_ring().clone(), f.assignments().to_vec(), f.constraints().to_vec()))
        .collect())
}

/// Ideal of the union of the families' varieties, in the ring whose variables
/// are `unknowns` (a subset of the family unknowns).
pub fn total_variety(fams: &[&SolutionFamily], ring: &Ring) -> Result<Vec<MultiPoly>, PartialError> {
    let names = ring.vars().to_vec();
    let mut acc: Option<Vec<MultiPoly>> = None;
    for f in fams {
        let f = f.select_unknowns(&names).ok_or(PolyError::RingMismatch)?;
        let ideal = f.implicit_ideal(ring);
        acc = Some(match acc {
            None => ideal,
            Some(prev) => intersect(&prev, &ideal, ring),
        });
    }
    Ok(acc.unwrap_or_else(|| vec![MultiPoly::one(ring)]))
}

/// True if both lists of families cover the same set of partial actions.
/// Only the non-group-like basis elements are compared, since callers group
/// families by initial condition; without a group-like basis every basis
/// element is compared.
pub fn same_variety(h: &HopfAlgebra, a: &[&SolutionFamily], b: &[&SolutionFamily]) -> Result<bool, PartialError> {
    let names: Vec<String> = match h.group_likes() {
        Ok(gl) => (0..h.dim()).filter(|&i| gl.element_of(i).is_none()).map(|i| h.label(i).to_string()).collect(),
        Err(HopfError::NoGroupLikeBasis) => h.labels().to_vec(),
        Err(e) => return Err(e.into()),
    };
    same_variety_on(h, &names, a, b)
}

/// Equality of the total varieties projected to the unknowns `names`.
pub fn same_variety_on(h: &HopfAlgebra, names: &[String], a: &[&SolutionFamily], b: &[&SolutionFamily]) -> Result<bool, PartialError> {
    let field = a.iter().chain(b).map(|f| f.field().order()).fold(h.field().order(), crate::exactfield::lcm_order);
    let field = CyclotomicField::new(field).map_err(HopfError::from)?;
    let ring = PolyRing::new(field, names.to_vec(), MonomialOrder::DegRevLex);
    let ia = total_variety(a, &ring)?;
    let ib = total_variety(b, &ring)?;
    Ok(ideal_equal(&ia, &ib)?)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct PropertyReport {
    pub checked: Vec<String>,
    pub failures: Vec<String>,
}

impl PropertyReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// The structural properties every partial action must have: values on
/// group-likes, the initial-condition subgroup, and the behaviour on
/// skew-primitive basis elements.
pub fn check_property_suite(h: &HopfAlgebra, lambda: &[Cyclo]) -> Result<PropertyReport, PartialError> {
    if !is_partial_action(h, lambda) {
        return Err(PartialError::NotAPartialAction(describe_failure(h, lambda)));
    }
    let gl = h.group_likes()?;
    let grp = &gl.group;
    let mut rep = PropertyReport::default();
    let lam = |b: usize| lambda[b].clone();
    let lam_v = |v: &Vector| evaluate(h, lambda, v);
    let lg = |g: usize| lam(gl.basis_index(g));
    let bv = |b: usize| h.basis_vector(b);
    let gv = |g: usize| bv(gl.basis_index(g));
    let check = |rep: &mut PropertyReport, name: &str, ok: bool, witness: String| {
        if !rep.checked.iter().any(|c| c == name) {
            rep.checked.push(name.to_string());
        }
        if !ok {
            rep.failures.push(format!("{name}: {witness}"));
        }
    };

    for g in grp.elements() {
        let v = lg(g);
        check(&mut rep, "group-like values in {0,1}", v.is_zero() || v.is_one(), grp.label(g).into());
    }
    let n: Vec<usize> = grp.elements().filter(|&g| lg(g).is_one()).collect();
    check(&mut rep, "initial condition is a subgroup", grp.is_subgroup(&n), format!("{n:?}"));
    for g in grp.elements() {
        let p = grp.element_order(g);
        if lg(g).is_zero() && is_prime(p) {
            for i in 1..p {
                check(&mut rep, "prime-order vanishing", lg(grp.pow(g, i as i64)).is_zero(), format!("{}^{i}", grp.label(g)));
            }
        }
    }
    // (a) λ(g) = 1 ⇒ λ(gu) = λ(u)
    for g in grp.elements().filter(|&g| lg(g).is_one()) {
        for u in 0..h.dim() {
            check(&mut rep, "(a) translation by N", lam_v(&h.multiply(&gv(g), &bv(u))) == lam(u), format!("{} {}", grp.label(g), h.label(u)));
        }
    }
    for s in h.skew_primitives() {
        let (x, g, t) = (s.x, gl.element_of(s.g).expect("group-like"), gl.element_of(s.h).expect("group-like"));
        let w = format!("{} in P({},{})", h.label(x), grp.label(g), grp.label(t));
        let (lgv, ltv) = (lg(g), lg(t));
        if lgv == ltv {
            check(&mut rep, "(b) equal ends vanish", lam(x).is_zero(), w.clone());
        }
        if lam(x).is_zero() && ltv.is_one() {
            for u in 0..h.dim() {
                check(&mut rep, "(c) right multiples vanish", lam_v(&h.multiply(&bv(x), &bv(u))).is_zero(), format!("{w}, u = {}", h.label(u)));
            }
        }
        if lgv.is_one() && ltv.is_zero() {
            let v = lam_v(&h.multiply(&bv(x), &gv(grp.inv(t))));
            check(&mut rep, "(d) sign under t⁻¹", v == -lam(x), w.clone());
        }
        if lgv.is_zero() && ltv.is_one() {
            let v = lam_v(&h.multiply(&bv(x), &gv(grp.inv(g))));
            check(&mut rep, "(e) sign under g⁻¹", v == -lam(x), w.clone());
        }
        if grp.mul(g, t) == grp.mul(t, g) {
            let one = h.one();
            if lgv.is_one() && ltv.is_zero() {
                for i in 0..grp.element_order(t) as i64 {
                    let ok = lam_v(&h.multiply(&gv(grp.pow(t, i)), &bv(x))).is_zero()
                        || &lg(grp.pow(t, i)) + &lg(grp.pow(t, i + 1)) == one;
                    check(&mut rep, "(f) powers of t", ok, format!("{w}, i = {i}"));
                }
            }
            if lgv.is_zero() && ltv.is_one() {
                for i in 0..grp.element_order(g) as i64 {
                    let ok = lam_v(&h.multiply(&gv(grp.pow(g, i)), &bv(x))).is_zero()
                        || &lg(grp.pow(g, i)) + &lg(grp.pow(g, i + 1)) == one;
                    check(&mut rep, "(g) powers of g", ok, format!("{w}, i = {i}"));
                }
            }
            if lgv.is_zero() && ltv.is_zero() {
                let gt_inv = grp.inv(grp.mul(g, t));
                check(&mut rep, "(h) both ends outside N", lam_v(&h.multiply(&gv(gt_inv), &bv(x))).is_zero(), w.clone());
            }
        }
    }
    let conv = convolution(h, lambda, lambda);
    check(&mut rep, "convolution idempotent", conv == lambda, String::new());
    Ok(rep)
}

#[cfg(test)]
mod tests;
