//! Finite-dimensional Hopf algebras by structure constants.
//!
//! A [`HopfAlgebra`] stores multiplication, unit, comultiplication, counit and
//! antipode on a fixed basis, together with named generators so that elements
//! can be written as words (`g^2x`, `gh - 1`). Pointed algebras are usually
//! built from a [`PointedPresentation`].

mod presentation;
mod sparse;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::exactfield::{Cyclo, CyclotomicField, FieldError, Rational};
use crate::expr::{self, Evaluator, ExprError, Mode};
use crate::groups::{FiniteGroup, GroupElem, GroupError};
use crate::polysolve::PolyError;

pub use presentation::{CrossRelation, PointedPresentation, PresentationSpec, SkewGenerator};
pub use sparse::{Sparse, Tensor, Tensor3, Vector};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HopfError {
    #[error("Hopf axioms fail for {}: {}", .0.algebra, .0.summary())]
    AxiomFailure(Box<AxiomReport>),
    #[error("presentation is not confluent: {0}")]
    NonConfluentPresentation(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("no relation rewrites {0}{1}")]
    MissingCrossRelation(String, String),
    #[error("not a character: {0}")]
    InvalidCharacter(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("`{0}` is not a group-like basis element")]
    NotGroupLike(String),
    #[error("group-like basis elements are not closed under multiplication")]
    GroupLikesNotClosed,
    #[error("the basis contains no group-like elements")]
    NoGroupLikeBasis,
    #[error("bad element `{0}`: {1}")]
    BadElement(String, String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl From<ExprError> for HopfError {
    fn from(e: ExprError) -> Self {
        HopfError::Poly(PolyError::Expr(e))
    }
}

/// Raw structure constants, as accepted by [`HopfAlgebra::from_structure`].
#[derive(Clone, Debug)]
pub struct StructureData {
    pub name: String,
    pub field: CyclotomicField,
    pub labels: Vec<String>,
    /// `mult[i][j]` = b_i · b_j.
    pub mult: Vec<Vec<Vector>>,
    pub unit: Vector,
    /// Δ(b_i) = Σ c · b_j ⊗ b_k, as `(c, j, k)`.
    pub comult: Vec<Vec<(Cyclo, usize, usize)>>,
    pub counit: Vec<Cyclo>,
    /// S(b_i).
    pub antipode: Vec<Vector>,
    /// Named algebra generators (used to read words such as `g^2x`).
    pub generators: Vec<(String, Vector)>,
    /// Each basis element as a product of generators (indices into `generators`).
    pub basis_words: Vec<Vec<usize>>,
    /// Named scalars (such as `q`) that words and tables may refer to.
    pub constants: HashMap<String, Cyclo>,
}

#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    data: StructureData,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomFailure {
    pub law: String,
    pub witness: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct AxiomReport {
    pub algebra: String,
    pub dimension: usize,
    pub checked: Vec<String>,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
    pub fn failed_laws(&self) -> Vec<&str> {
        let mut v: Vec<&str> = self.failures.iter().map(|f| f.law.as_str()).collect();
        v.dedup();
        v
    }
    fn summary(&self) -> String {
        self.failures.iter().take(3).map(|f| format!("{} at {}", f.law, f.witness)).collect::<Vec<_>>().join("; ")
    }
}

/// A skew-primitive basis element x ∈ P_{g,h}: Δ(x) = x⊗g + h⊗x.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkewPrimitive {
    pub x: usize,
    pub g: usize,
    pub h: usize,
}

/// The group-like basis elements and the group they form.
#[derive(Clone, Debug)]
pub struct GroupLikes {
    /// Basis index of each group element.
    pub indices: Vec<usize>,
    pub group: FiniteGroup,
}

impl GroupLikes {
    pub fn element_of(&self, basis_index: usize) -> Option<GroupElem> {
        self.indices.iter().position(|&i| i == basis_index)
    }
    pub fn basis_index(&self, g: GroupElem) -> usize {
        self.indices[g]
    }
}

const MAX_WITNESSES_PER_LAW: usize = 4;

impl HopfAlgebra {
    /// Validate structure constants against the Hopf axioms.
    pub fn from_structure(data: StructureData) -> Result<Self, HopfError> {
        let n = data.labels.len();
        for (what, got) in [
            ("mult", data.mult.len()),
            ("comult", data.comult.len()),
            ("counit", data.counit.len()),
            ("antipode", data.antipode.len()),
            ("basis_words", data.basis_words.len()),
        ] {
            if got != n {
                let _ = what;
                return Err(HopfError::DimensionMismatch { expected: n, got });
            }
        }
        let h = HopfAlgebra { data };
        let report = h.check_hopf_axioms();
        if !report.is_ok() {
            return Err(HopfError::AxiomFailure(Box::new(report)));
        }
        h.check_basis_words()?;
        Ok(h)
    }

    /// Construct without checking axioms (for deliberately broken fixtures).
    pub fn from_structure_unchecked(data: StructureData) -> Self {
        HopfAlgebra { data }
    }

    fn check_basis_words(&self) -> Result<(), HopfError> {
        for (i, w) in self.data.basis_words.iter().enumerate() {
            let v = self.word_value(w);
            if v != self.basis_vector(i) {
                return Err(HopfError::BadElement(self.data.labels[i].clone(), "basis word does not evaluate to it".into()));
            }
        }
        Ok(())
    }

    fn word_value(&self, w: &[usize]) -> Vector {
        let mut acc = self.data.unit.clone();
        for &g in w {
            acc = self.multiply(&acc, &self.data.generators[g].1);
        }
        acc
    }

    pub fn structure(&self) -> &StructureData {
        &self.data
    }
    pub fn name(&self) -> &str {
        &self.data.name
    }
    pub fn with_name(mut self, name: &str) -> Self {
        self.data.name = name.to_string();
        self
    }
    pub fn dim(&self) -> usize {
        self.data.labels.len()
    }
    pub fn field(&self) -> &CyclotomicField {
        &self.data.field
    }
    pub fn labels(&self) -> &[String] {
        &self.data.labels
    }
    pub fn label(&self, i: usize) -> &str {
        &self.data.labels[i]
    }
    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.data.labels.iter().position(|l| l == label)
    }
    pub fn generators(&self) -> &[(String, Vector)] {
        &self.data.generators
    }
    pub fn basis_words(&self) -> &[Vec<usize>] {
        &self.data.basis_words
    }
    pub fn constants(&self) -> &HashMap<String, Cyclo> {
        &self.data.constants
    }
    pub fn one(&self) -> Cyclo {
        self.data.field.one()
    }
    pub fn zero_scalar(&self) -> Cyclo {
        self.data.field.zero()
    }
    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::basis(i, &self.one())
    }
    pub fn unit(&self) -> &Vector {
        &self.data.unit
    }
    pub fn mult_basis(&self, i: usize, j: usize) -> &Vector {
        &self.data.mult[i][j]
    }
    pub fn comult_basis(&self, i: usize) -> &[(Cyclo, usize, usize)] {
        &self.data.comult[i]
    }
    pub fn counit_basis(&self, i: usize) -> &Cyclo {
        &self.data.counit[i]
    }
    pub fn antipode_basis(&self, i: usize) -> &Vector {
        &self.data.antipode[i]
    }

    pub fn multiply(&self, a: &Vector, b: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (i, ca) in a.iter() {
            for (j, cb) in b.iter() {
                out.add_scaled(&(ca * cb), &self.data.mult[*i][*j]);
            }
        }
        out
    }

    pub fn comultiply(&self, a: &Vector) -> Tensor {
        let mut out = Tensor::zero();
        for (i, c) in a.iter() {
            for (d, j, k) in &self.data.comult[*i] {
                out.add_term((*j, *k), &(c * d));
            }
        }
        out
    }

    pub fn counit(&self, a: &Vector) -> Cyclo {
        let mut acc = self.zero_scalar();
        for (i, c) in a.iter() {
            acc = &acc + &(c * &self.data.counit[*i]);
        }
        acc
    }

    pub fn antipode(&self, a: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (i, c) in a.iter() {
            out.add_scaled(c, &self.data.antipode[*i]);
        }
        out
    }

    /// Product in H⊗H.
    pub fn multiply_tensor(&self, a: &Tensor, b: &Tensor) -> Tensor {
        let mut out = Tensor::zero();
        for ((i, j), ca) in a.iter() {
            for ((k, l), cb) in b.iter() {
                let left = &self.data.mult[*i][*k];
                let right = &self.data.mult[*j][*l];
                let c = ca * cb;
                for (p, x) in left.iter() {
                    for (q, y) in right.iter() {
                        out.add_term((*p, *q), &(&c * &(x * y)));
                    }
                }
            }
        }
        out
    }

    /// (Δ⊗id)Δ(a).
    pub fn comultiply_twice(&self, a: &Vector) -> Tensor3 {
        let mut out = Tensor3::zero();
        for ((i, j), c) in self.comultiply(a).iter() {
            for (d, k, l) in &self.data.comult[*i] {
                out.add_term((*k, *l, *j), &(c * d));
            }
        }
        out
    }

    /// Read an element written in the generators, e.g. `g^2x - 1/2 gh`.
    pub fn element(&self, src: &str) -> Result<Vector, HopfError> {
        let e = expr::parse(src, Mode::Word)?;
        AlgebraEval { h: self }.eval(&e).map_err(|err| HopfError::BadElement(src.to_string(), err.to_string()))
    }

    /// If `v` is c·b_i, return (i, c).
    pub fn as_scaled_basis(&self, v: &Vector) -> Option<(usize, Cyclo)> {
        let mut it = v.iter();
        let (i, c) = it.next()?;
        if it.next().is_some() {
            None
        } else {
            Some((*i, c.clone()))
        }
    }

    /// Run every Hopf-algebra law on all basis elements (pairs and triples where needed).
    pub fn check_hopf_axioms(&self) -> AxiomReport {
        let n = self.dim();
        let one = self.one();
        let mut rep = AxiomReport { algebra: self.name().to_string(), dimension: n, ..Default::default() };
        let fail = |rep: &mut AxiomReport, law: &str, witness: String| {
            if rep.failures.iter().filter(|f| f.law == law).count() < MAX_WITNESSES_PER_LAW {
                rep.failures.push(AxiomFailure { law: law.to_string(), witness });
            }
        };
        let b = |i: usize| self.basis_vector(i);
        let lab = |i: usize| self.label(i).to_string();

        rep.checked.push("associativity".into());
        for i in 0..n {
            for j in 0..n {
                let ij = &self.data.mult[i][j];
                for k in 0..n {
                    let lhs = self.multiply(ij, &b(k));
                    let rhs = self.multiply(&b(i), &self.data.mult[j][k]);
                    if lhs != rhs {
                        fail(&mut rep, "associativity", format!("({},{},{})", lab(i), lab(j), lab(k)));
                    }
                }
            }
        }
        rep.checked.push("unit".into());
        for i in 0..n {
            if self.multiply(&self.data.unit, &b(i)) != b(i) || self.multiply(&b(i), &self.data.unit) != b(i) {
                fail(&mut rep, "unit", lab(i));
            }
        }
        rep.checked.push("coassociativity".into());
        for i in 0..n {
            let mut left = Tensor3::zero();
            let mut right = Tensor3::zero();
            for (c, j, k) in &self.data.comult[i] {
                for (d, p, q) in &self.data.comult[*j] {
                    left.add_term((*p, *q, *k), &(c * d));
                }
                for (d, p, q) in &self.data.comult[*k] {
                    right.add_term((*j, *p, *q), &(c * d));
                }
            }
            if left != right {
                fail(&mut rep, "coassociativity", lab(i));
            }
        }
        rep.checked.push("counit".into());
        for i in 0..n {
            let mut l = Vector::zero();
            let mut r = Vector::zero();
            for (c, j, k) in &self.data.comult[i] {
                l.add_term(*k, &(c * &self.data.counit[*j]));
                r.add_term(*j, &(c * &self.data.counit[*k]));
            }
            if l != b(i) || r != b(i) {
                fail(&mut rep, "counit", lab(i));
            }
        }
        rep.checked.push("comultiplication is multiplicative".into());
        let unit_t = {
            let mut t = Tensor::zero();
            for (i, c) in self.data.unit.iter() {
                for (j, d) in self.data.unit.iter() {
                    t.add_term((*i, *j), &(c * d));
                }
            }
            t
        };
        if self.comultiply(&self.data.unit) != unit_t {
            fail(&mut rep, "comultiplication is multiplicative", "1".into());
        }
        let deltas: Vec<Tensor> = (0..n).map(|i| self.comultiply(&b(i))).collect();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.comultiply(&self.data.mult[i][j]);
                let rhs = self.multiply_tensor(&deltas[i], &deltas[j]);
                if lhs != rhs {
                    fail(&mut rep, "comultiplication is multiplicative", format!("({},{})", lab(i), lab(j)));
                }
            }
        }
        rep.checked.push("counit is multiplicative".into());
        if self.counit(&self.data.unit) != one {
            fail(&mut rep, "counit is multiplicative", "1".into());
        }
        for i in 0..n {
            for j in 0..n {
                if self.counit(&self.data.mult[i][j]) != &self.data.counit[i] * &self.data.counit[j] {
                    fail(&mut rep, "counit is multiplicative", format!("({},{})", lab(i), lab(j)));
                }
            }
        }
        rep.checked.push("antipode".into());
        for i in 0..n {
            let mut l = Vector::zero();
            let mut r = Vector::zero();
            for (c, j, k) in &self.data.comult[i] {
                l.add_scaled(c, &self.multiply(&self.data.antipode[*j], &b(*k)));
                r.add_scaled(c, &self.multiply(&b(*j), &self.data.antipode[*k]));
            }
            let e = self.data.unit.scale(&self.data.counit[i]);
            if l != e || r != e {
                fail(&mut rep, "antipode", lab(i));
            }
        }
        rep
    }

    /// Same algebra over a larger cyclotomic field ℚ(ζ_M), m | M.
    pub fn with_field(&self, target: &CyclotomicField) -> Result<HopfAlgebra, HopfError> {
        if target == self.field() {
            return Ok(self.clone());
        }
        let e = |c: &Cyclo| c.embed(target);
        let ev = |v: &Vector| v.embed(target);
        let d = &self.data;
        Ok(HopfAlgebra {
            data: StructureData {
                name: d.name.clone(),
                field: target.clone(),
                labels: d.labels.clone(),
                mult: d.mult.iter().map(|r| r.iter().map(ev).collect::<Result<Vec<_>, _>>()).collect::<Result<_, _>>()?,
                unit: ev(&d.unit)?,
                comult: d
                    .comult
                    .iter()
                    .map(|t| t.iter().map(|(c, j, k)| Ok((e(c)?, *j, *k))).collect::<Result<Vec<_>, FieldError>>())
                    .collect::<Result<_, _>>()?,
                counit: d.counit.iter().map(e).collect::<Result<_, _>>()?,
                antipode: d.antipode.iter().map(ev).collect::<Result<_, _>>()?,
                generators: d.generators.iter().map(|(s, v)| Ok((s.clone(), ev(v)?))).collect::<Result<_, FieldError>>()?,
                basis_words: d.basis_words.clone(),
                constants: d.constants.iter().map(|(k, v)| Ok((k.clone(), e(v)?))).collect::<Result<_, FieldError>>()?,
            },
        })
    }

    /// Basis elements b with Δ(b) = b⊗b and ε(b) = 1, with their group structure.
    pub fn group_likes(&self) -> Result<GroupLikes, HopfError> {
        let indices: Vec<usize> = (0..self.dim())
            .filter(|&i| {
                let d = &self.data.comult[i];
                d.len() == 1 && d[0].0.is_one() && d[0].1 == i && d[0].2 == i && self.data.counit[i].is_one()
            })
            .collect();
        if indices.is_empty() {
            return Err(HopfError::NoGroupLikeBasis);
        }
        let pos = |i: usize| indices.iter().position(|&k| k == i);
        let mut table = vec![vec![0; indices.len()]; indices.len()];
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                let (k, c) = self.as_scaled_basis(&self.data.mult[i][j]).ok_or(HopfError::GroupLikesNotClosed)?;
                if !c.is_one() {
                    return Err(HopfError::GroupLikesNotClosed);
                }
                table[a][b] = pos(k).ok_or(HopfError::GroupLikesNotClosed)?;
            }
        }
        // prefer the algebra's own group-like generators
        let mut gens: Vec<(String, usize)> = Vec::new();
        for (name, v) in &self.data.generators {
            if let Some((k, c)) = self.as_scaled_basis(v) {
                if c.is_one() {
                    if let Some(p) = pos(k) {
                        gens.push((name.clone(), p));
                    }
                }
            }
        }
        let labels: Vec<String> = indices.iter().map(|&i| self.label(i).to_string()).collect();
        let group = match FiniteGroup::from_table(labels.clone(), table.clone(), gens) {
            Ok(g) => g,
            Err(_) => {
                let all = labels.iter().cloned().zip(0..labels.len()).collect();
                FiniteGroup::from_table(labels, table, all)?
            }
        };
        Ok(GroupLikes { indices, group })
    }

    /// All basis elements x with Δ(x) = x⊗g + h⊗x for group-like basis elements g, h.
    pub fn skew_primitives(&self) -> Vec<SkewPrimitive> {
        let gl: Vec<usize> = match self.group_likes() {
            Ok(g) => g.indices,
            Err(_) => return Vec::new(),
        };
        let mut out = Vec::new();
        for x in 0..self.dim() {
            if gl.contains(&x) {
                continue;
            }
            let d = &self.data.comult[x];
            if d.len() != 2 || !d.iter().all(|(c, _, _)| c.is_one()) {
                continue;
            }
            let right = d.iter().find(|(_, j, k)| *j == x && gl.contains(k)).map(|t| t.2);
            let left = d.iter().find(|(_, j, k)| *k == x && gl.contains(j)).map(|t| t.1);
            if let (Some(g), Some(h)) = (right, left) {
                out.push(SkewPrimitive { x, g, h });
            }
        }
        out
    }

    /// Export as structure-constant JSON.
    pub fn to_json(&self) -> serde_json::Value {
        let d = &self.data;
        let vec_json = |v: &Vector| -> serde_json::Value {
            v.iter().map(|(i, c)| serde_json::json!([d.labels[*i], c.to_string()])).collect()
        };
        serde_json::json!({
            "name": d.name,
            "field_order": d.field.order(),
            "basis": d.labels,
            "unit": vec_json(&d.unit),
            "mult": (0..self.dim()).flat_map(|i| (0..self.dim()).map(move |j| (i, j)))
                .filter(|&(i, j)| !d.mult[i][j].is_zero())
                .map(|(i, j)| serde_json::json!([d.labels[i], d.labels[j], vec_json(&d.mult[i][j])]))
                .collect::<Vec<_>>(),
            "comult": d.comult.iter().enumerate().map(|(i, t)| serde_json::json!([
                d.labels[i],
                t.iter().map(|(c, j, k)| serde_json::json!([c.to_string(), d.labels[*j], d.labels[*k]])).collect::<Vec<_>>()
            ])).collect::<Vec<_>>(),
            "counit": d.counit.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "antipode": d.antipode.iter().map(vec_json).collect::<Vec<_>>(),
        })
    }

    pub fn format_vector(&self, v: &Vector) -> String {
        format_combination(v.iter().map(|(i, c)| (self.label(*i).to_string(), c.clone())))
    }

    pub fn format_tensor(&self, t: &Tensor) -> String {
        format_combination(t.iter().map(|((i, j), c)| (format!("{}⊗{}", self.label(*i), self.label(*j)), c.clone())))
    }
}

/// Text form of a linear combination, e.g. `x⊗1 + (1 + zeta4)*gx⊗x`.
pub fn format_combination(terms: impl Iterator<Item = (String, Cyclo)>) -> String {
    let mut out = String::new();
    for (name, c) in terms {
        let term = match c.as_rational() {
            _ if name != "1" => None,
            Some(r) => Some(r.to_string()),
            None => Some(format!("({c})")),
        };
        if let Some(t) = term {
            if !out.is_empty() {
                out.push_str(" + ");
            }
            out.push_str(&t);
            continue;
        }
        let coeff = match c.as_rational() {
            Some(r) if r == &Rational::from_integer(1.into()) => String::new(),
            Some(r) if r == &Rational::from_integer((-1).into()) => "-".into(),
            Some(r) => format!("{r}*"),
            None => format!("({c})*"),
        };
        if !out.is_empty() {
            out.push_str(" + ");
        }
        out.push_str(&coeff);
        out.push_str(&name);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

struct AlgebraEval<'a> {
    h: &'a HopfAlgebra,
}

impl Evaluator for AlgebraEval<'_> {
    type Value = Vector;
    fn number(&self, r: &Rational) -> Result<Vector, ExprError> {
        Ok(self.h.unit().scale(&self.h.field().from_rational(r.clone())))
    }
    fn ident(&self, name: &str) -> Result<Vector, ExprError> {
        if let Some((_, v)) = self.h.generators().iter().find(|(s, _)| s == name) {
            return Ok(v.clone());
        }
        if let Some(c) = self.h.constants().get(name) {
            return Ok(self.h.unit().scale(c));
        }
        Err(ExprError::Unknown(name.to_string()))
    }
    fn add(&self, a: &Vector, b: &Vector) -> Result<Vector, ExprError> {
        let mut s = a.clone();
        s.add_scaled(&self.h.one(), b);
        Ok(s)
    }
    fn neg(&self, a: &Vector) -> Result<Vector, ExprError> {
        Ok(a.scale(&-self.h.one()))
    }
    fn mul(&self, a: &Vector, b: &Vector) -> Result<Vector, ExprError> {
        Ok(self.h.multiply(a, b))
    }
    fn div(&self, a: &Vector, b: &Vector) -> Result<Vector, ExprError> {
        let unit = self.h.unit();
        let (i, c) = self.h.as_scaled_basis(b).ok_or_else(|| ExprError::Eval("division by a non-scalar".into()))?;
        if unit.iter().count() != 1 || unit.get(&i).is_none() {
            return Err(ExprError::Eval("division by a non-scalar".into()));
        }
        let k = c.try_div(unit.get(&i).unwrap()).map_err(|e| ExprError::Eval(e.to_string()))?;
        Ok(a.scale(&k.inverse().map_err(|e| ExprError::Eval(e.to_string()))?))
    }
}

fn combine_labels(a: &str, b: &str) -> String {
    match (a, b) {
        ("1", _) => b.to_string(),
        (_, "1") => a.to_string(),
        _ => format!("{a}{b}"),
    }
}

/// H ⊗ L with componentwise structure. Generators of `l` may be renamed to
/// avoid clashes (`rename` maps old name to new name).
pub fn tensor_hopf(h: &HopfAlgebra, l: &HopfAlgebra, rename: &[(&str, &str)]) -> Result<HopfAlgebra, HopfError> {
    let order = crate::exactfield::lcm_order(h.field().order(), l.field().order());
    let field = CyclotomicField::new(order)?;
    let h = h.with_field(&field)?;
    let l = l.with_field(&field)?;
    let (dh, dl) = (h.dim(), l.dim());
    let idx = |i: usize, j: usize| i * dl + j;
    let tensor_vec = |a: &Vector, b: &Vector| -> Vector {
        let mut out = Vector::zero();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                out.add_term(idx(*i, *j), &(x * y));
            }
        }
        out
    };
    let mut labels = Vec::with_capacity(dh * dl);
    let mut mult = Vec::with_capacity(dh * dl);
    let mut comult = Vec::with_capacity(dh * dl);
    let mut counit = Vec::with_capacity(dh * dl);
    let mut antipode = Vec::with_capacity(dh * dl);
    let mut basis_words = Vec::with_capacity(dh * dl);
    let ngh = h.generators().len();
    for i in 0..dh {
        for j in 0..dl {
            labels.push(combine_labels(h.label(i), l.label(j)));
            let row: Vec<Vector> = (0..dh)
                .flat_map(|k| (0..dl).map(move |m| (k, m)))
                .map(|(k, m)| tensor_vec(h.mult_basis(i, k), l.mult_basis(j, m)))
                .collect();
            mult.push(row);
            let mut terms = Vec::new();
            for (c, a, b) in h.comult_basis(i) {
                for (d, p, q) in l.comult_basis(j) {
                    terms.push((c * d, idx(*a, *p), idx(*b, *q)));
                }
            }
            comult.push(terms);
            counit.push(h.counit_basis(i) * l.counit_basis(j));
            antipode.push(tensor_vec(h.antipode_basis(i), l.antipode_basis(j)));
            let mut w = h.basis_words()[i].clone();
            w.extend(l.basis_words()[j].iter().map(|g| g + ngh));
            basis_words.push(w);
        }
    }
    let mut generators: Vec<(String, Vector)> =
        h.generators().iter().map(|(s, v)| (s.clone(), tensor_vec(v, l.unit()))).collect();
    for (s, v) in l.generators() {
        let name = rename.iter().find(|(a, _)| a == s).map(|(_, b)| b.to_string()).unwrap_or_else(|| s.clone());
        if generators.iter().any(|(t, _)| *t == name) {
            return Err(HopfError::UnknownGenerator(format!("{name} (name clash in tensor product)")));
        }
        generators.push((name, tensor_vec(h.unit(), v)));
    }
    let mut constants = h.constants().clone();
    for (k, v) in l.constants() {
        constants.entry(k.clone()).or_insert_with(|| v.clone());
    }
    // relabel using the (possibly renamed) generator names of l
    if !rename.is_empty() {
        for (i, lab) in labels.iter_mut().enumerate() {
            let word = &basis_words[i];
            *lab = word_label(word, &generators);
        }
    }
    HopfAlgebra::from_structure(StructureData {
        name: format!("{}⊗{}", h.name(), l.name()),
        field,
        labels,
        mult,
        unit: tensor_vec(h.unit(), l.unit()),
        comult,
        counit,
        antipode,
        generators,
        basis_words,
        constants,
    })
}

fn word_label(word: &[usize], gens: &[(String, Vector)]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        out.push_str(&gens[word[i]].0);
        if j - i > 1 {
            out.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    out
}

/// Gaussian binomial coefficient (n choose k)_q by the q-Pascal rule
/// (n choose k)_q = (n-1 choose k-1)_q + q^k (n-1 choose k)_q.
pub fn qbinomial(n: u32, k: u32, q: &Cyclo) -> Cyclo {
    let f = q.field();
    if k > n {
        return f.zero();
    }
    let mut row: Vec<Cyclo> = vec![f.one()];
    for m in 1..=n {
        let mut next = vec![f.zero(); m as usize + 1];
        for j in 0..=m as usize {
            let a = if j >= 1 { row[j - 1].clone() } else { f.zero() };
            let b = if j < m as usize { &q.pow(j as i64).unwrap() * &row[j] } else { f.zero() };
            next[j] = &a + &b;
        }
        row = next;
    }
    row[k as usize].clone()
}

impl fmt::Display for HopfAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {}, over Q(zeta{}))", self.name(), self.dim(), self.field().order())
    }
}

#[cfg(test)]
mod tests;
