//! Pointed Hopf algebras generated by a finite abelian group and skew-primitives.
//!
//! Elements are normalised to g · x_1^{e_1} ⋯ x_r^{e_r} by rewriting: the
//! group part is pushed left with x g = χ(g) g x, out-of-order pairs are
//! swapped with x_j x_i = q x_i x_j + c, and x_k^{n_k} is replaced by its
//! power relation.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::{HopfAlgebra, HopfError, StructureData, Tensor, Vector};
use crate::exactfield::{Cyclo, CyclotomicField, Rational};
use crate::expr::{self, Evaluator, ExprError, Mode};
use crate::groups::{FiniteGroup, GroupElem};
use crate::polysolve::{parse_scalar, zeta_constant};

/// A skew-primitive generator x with Δ(x) = x⊗g + h⊗x, x a = χ(a) a x and x^n = power.
#[derive(Clone, Debug)]
pub struct SkewGenerator {
    pub name: String,
    pub g: GroupElem,
    pub h: GroupElem,
    /// χ on every group element.
    pub chi: Vec<Cyclo>,
    pub nilpotency: u32,
    /// x^n as an element of kG.
    pub power: Vector,
}

/// x_later x_earlier = q x_earlier x_later + rhs, rhs ∈ kG.
#[derive(Clone, Debug)]
pub struct CrossRelation {
    pub later: usize,
    pub earlier: usize,
    pub q: Cyclo,
    pub rhs: Vector,
}

#[derive(Clone, Debug)]
pub struct PointedPresentation {
    pub name: String,
    pub group: FiniteGroup,
    pub field: CyclotomicField,
    pub constants: HashMap<String, Cyclo>,
    pub generators: Vec<SkewGenerator>,
    pub cross: Vec<CrossRelation>,
}

type Word = Vec<u8>;
type Term = (Cyclo, GroupElem, Word);
type Normal = HashMap<(GroupElem, Vec<u32>), Cyclo>;

#[derive(Clone, Copy, Debug)]
enum Step {
    Cross(usize),
    Power(usize),
}

struct GroupAlgebraEval<'a> {
    p: &'a PointedPresentation,
}

impl Evaluator for GroupAlgebraEval<'_> {
    type Value = Vector;
    fn number(&self, r: &Rational) -> Result<Vector, ExprError> {
        Ok(Vector::basis(self.p.group.identity(), &self.p.field.from_rational(r.clone())))
    }
    fn ident(&self, name: &str) -> Result<Vector, ExprError> {
        if let Some((_, e)) = self.p.group.generators().iter().find(|(s, _)| s == name) {
            return Ok(Vector::basis(*e, &self.p.field.one()));
        }
        let c = self
            .p
            .constants
            .get(name)
            .cloned()
            .or_else(|| zeta_constant(&self.p.field, name))
            .ok_or_else(|| ExprError::Unknown(name.to_string()))?;
        Ok(Vector::basis(self.p.group.identity(), &c))
    }
    fn add(&self, a: &Vector, b: &Vector) -> Result<Vector, ExprError> {
        let mut s = a.clone();
        s.add_scaled(&self.p.field.one(), b);
        Ok(s)
    }
    fn neg(&self, a: &Vector) -> Result<Vector, ExprError> {
        Ok(a.scale(&-self.p.field.one()))
    }
    fn mul(&self, a: &Vector, b: &Vector) -> Result<Vector, ExprError> {
        let mut out = Vector::zero();
        for (x, c) in a.iter() {
            for (y, d) in b.iter() {
                out.add_term(self.p.group.mul(*x, *y), &(c * d));
            }
        }
        Ok(out)
    }
    fn div(&self, a: &Vector, b: &Vector) -> Result<Vector, ExprError> {
        let id = self.p.group.identity();
        match (b.len(), b.get(&id)) {
            (1, Some(c)) => Ok(a.scale(&c.inverse().map_err(|e| ExprError::Eval(e.to_string()))?)),
            _ => Err(ExprError::Eval("division by a non-scalar".into())),
        }
    }
}

impl PointedPresentation {
    pub fn new(name: &str, group: FiniteGroup, field: CyclotomicField) -> Self {
        PointedPresentation {
            name: name.to_string(),
            group,
            field,
            constants: HashMap::new(),
            generators: Vec::new(),
            cross: Vec::new(),
        }
    }

    pub fn scalar(&self, src: &str) -> Result<Cyclo, HopfError> {
        Ok(parse_scalar(&self.field, src, &self.constants)?)
    }

    /// Read an element of kG such as `g^2 - 1`.
    pub fn group_element(&self, src: &str) -> Result<Vector, HopfError> {
        let e = expr::parse(src, Mode::Word)?;
        GroupAlgebraEval { p: self }.eval(&e).map_err(|err| HopfError::BadElement(src.to_string(), err.to_string()))
    }

    pub fn constant(mut self, name: &str, value: &str) -> Result<Self, HopfError> {
        let v = self.scalar(value)?;
        self.constants.insert(name.to_string(), v);
        Ok(self)
    }

    fn generator_index(&self, name: &str) -> Result<usize, HopfError> {
        self.generators.iter().position(|x| x.name == name).ok_or_else(|| HopfError::UnknownGenerator(name.to_string()))
    }

    /// Add x with Δ(x) = x⊗g + h⊗x where `in_p = (g, h)`; χ is given on the
    /// group generators, `power` is x^n ∈ kG.
    pub fn skew(
        mut self,
        name: &str,
        in_p: (&str, &str),
        chi: &[(&str, &str)],
        nilpotency: u32,
        power: &str,
    ) -> Result<Self, HopfError> {
        let g = self.group.parse_element(in_p.0)?;
        let h = self.group.parse_element(in_p.1)?;
        let mut on_gens = Vec::new();
        for (gname, _) in self.group.generators() {
            let (_, v) = chi
                .iter()
                .find(|(s, _)| s == gname)
                .ok_or_else(|| HopfError::InvalidCharacter(format!("{name}: no value on {gname}")))?;
            on_gens.push(self.scalar(v)?);
        }
        let chi_all: Vec<Cyclo> = self
            .group
            .elements()
            .map(|a| self.group.word(a).iter().fold(self.field.one(), |acc, &k| &acc * &on_gens[k]))
            .collect();
        for a in self.group.elements() {
            for b in self.group.elements() {
                if chi_all[self.group.mul(a, b)] != &chi_all[a] * &chi_all[b] {
                    return Err(HopfError::InvalidCharacter(format!("{name}: not multiplicative")));
                }
            }
        }
        let power = self.group_element(power)?;
        if nilpotency < 2 {
            return Err(HopfError::BadElement(name.to_string(), "nilpotency order must be at least 2".into()));
        }
        self.generators.push(SkewGenerator { name: name.to_string(), g, h, chi: chi_all, nilpotency, power });
        Ok(self)
    }

    /// x_later x_earlier = q x_earlier x_later + rhs.
    pub fn cross(mut self, later: &str, earlier: &str, q: &str, rhs: &str) -> Result<Self, HopfError> {
        let j = self.generator_index(later)?;
        let i = self.generator_index(earlier)?;
        if j <= i {
            return Err(HopfError::MissingCrossRelation(later.to_string(), earlier.to_string()));
        }
        let q = self.scalar(q)?;
        let rhs = self.group_element(rhs)?;
        self.cross.retain(|c| !(c.later == j && c.earlier == i));
        self.cross.push(CrossRelation { later: j, earlier: i, q, rhs });
        Ok(self)
    }

    /// Rewrite, check confluence, assemble the structure constants and validate the Hopf axioms.
    pub fn build(&self) -> Result<HopfAlgebra, HopfError> {
        let engine = Engine::new(self)?;
        engine.check_confluence()?;
        engine.assemble()
    }
}

struct Engine<'a> {
    p: &'a PointedPresentation,
    cross: HashMap<(u8, u8), &'a CrossRelation>,
}

impl<'a> Engine<'a> {
    fn new(p: &'a PointedPresentation) -> Result<Self, HopfError> {
        let mut cross = HashMap::new();
        for c in &p.cross {
            cross.insert((c.later as u8, c.earlier as u8), c);
        }
        for j in 0..p.generators.len() {
            for i in 0..j {
                if !cross.contains_key(&(j as u8, i as u8)) {
                    return Err(HopfError::MissingCrossRelation(p.generators[j].name.clone(), p.generators[i].name.clone()));
                }
            }
        }
        Ok(Engine { p, cross })
    }

    fn one(&self) -> Cyclo {
        self.p.field.one()
    }

    /// χ_w(a) = ∏ χ_{w_t}(a), so that w a = χ_w(a) a w.
    fn chi_word(&self, w: &[u8], a: GroupElem) -> Cyclo {
        w.iter().fold(self.one(), |acc, &k| &acc * &self.p.generators[k as usize].chi[a])
    }

    fn find_step(&self, w: &[u8]) -> Option<Step> {
        for p in 0..w.len() {
            if p + 1 < w.len() && w[p] > w[p + 1] {
                return Some(Step::Cross(p));
            }
            let n = self.p.generators[w[p] as usize].nilpotency as usize;
            if p + n <= w.len() && w[p..p + n].iter().all(|&k| k == w[p]) {
                return Some(Step::Power(p));
            }
        }
        None
    }

    /// c · a · prefix · (Σ d_b b) · suffix, with the group part moved left.
    fn splice(&self, c: &Cyclo, a: GroupElem, prefix: &[u8], rhs: &Vector, suffix: &[u8], out: &mut Vec<Term>) {
        for (b, d) in rhs.iter() {
            let coeff = &(c * d) * &self.chi_word(prefix, *b);
            let mut w = prefix.to_vec();
            w.extend_from_slice(suffix);
            out.push((coeff, self.p.group.mul(a, *b), w));
        }
    }

    fn apply(&self, (c, a, w): &Term, step: Step) -> Vec<Term> {
        let mut out = Vec::new();
        match step {
            Step::Cross(p) => {
                let rel = self.cross[&(w[p], w[p + 1])];
                let mut swapped = w.clone();
                swapped.swap(p, p + 1);
                out.push((c * &rel.q, *a, swapped));
                self.splice(c, *a, &w[..p], &rel.rhs, &w[p + 2..], &mut out);
            }
            Step::Power(p) => {
                let g = &self.p.generators[w[p] as usize];
                let n = g.nilpotency as usize;
                self.splice(c, *a, &w[..p], &g.power, &w[p + n..], &mut out);
            }
        }
        out
    }

    fn normalize(&self, terms: Vec<Term>) -> Normal {
        let r = self.p.generators.len();
        let mut out: Normal = HashMap::new();
        let mut stack = terms;
        while let Some(t) = stack.pop() {
            if t.0.is_zero() {
                continue;
            }
            match self.find_step(&t.2) {
                Some(step) => stack.extend(self.apply(&t, step)),
                None => {
                    let mut exps = vec![0u32; r];
                    for &k in &t.2 {
                        exps[k as usize] += 1;
                    }
                    let e = out.entry((t.1, exps)).or_insert_with(|| self.p.field.zero());
                    *e = &*e + &t.0;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn describe(&self, w: &[u8]) -> String {
        w.iter().map(|&k| self.p.generators[k as usize].name.as_str()).collect()
    }

    /// Every overlap of two rules must resolve to the same normal form.
    fn check_confluence(&self) -> Result<(), HopfError> {
        let r = self.p.generators.len();
        let n = |k: usize| self.p.generators[k].nilpotency as usize;
        let id = self.p.group.identity();
        let mut overlaps: Vec<(Word, Step, Step)> = Vec::new();
        for k in 0..r {
            for j in 0..k {
                for i in 0..j {
                    overlaps.push((vec![k as u8, j as u8, i as u8], Step::Cross(0), Step::Cross(1)));
                }
            }
        }
        for j in 0..r {
            for i in 0..j {
                let mut w = vec![j as u8];
                w.extend(std::iter::repeat_n(i as u8, n(i)));
                overlaps.push((w, Step::Cross(0), Step::Power(1)));
                let mut w: Word = std::iter::repeat_n(j as u8, n(j)).collect();
                w.push(i as u8);
                overlaps.push((w, Step::Power(0), Step::Cross(n(j) - 1)));
            }
        }
        for k in 0..r {
            let w: Word = std::iter::repeat_n(k as u8, n(k) + 1).collect();
            overlaps.push((w, Step::Power(0), Step::Power(1)));
        }
        for (w, s1, s2) in overlaps {
            let t = (self.one(), id, w.clone());
            if self.normalize(self.apply(&t, s1)) != self.normalize(self.apply(&t, s2)) {
                return Err(HopfError::NonConfluentPresentation(format!("overlap {}", self.describe(&w))));
            }
        }
        // relations must be compatible with x a = χ(a) a x
        let mut relation_words: Vec<Word> = Vec::new();
        for j in 0..r {
            for i in 0..j {
                relation_words.push(vec![j as u8, i as u8]);
            }
        }
        for k in 0..r {
            relation_words.push(std::iter::repeat_n(k as u8, n(k)).collect());
        }
        for w in relation_words {
            let step = self.find_step(&w).expect("relation word is reducible");
            for (_, a) in self.p.group.generators() {
                let a = *a;
                let lhs = self.normalize(vec![(self.chi_word(&w, a), a, w.clone())]);
                let rhs_terms: Vec<Term> = self
                    .apply(&(self.one(), id, w.clone()), step)
                    .into_iter()
                    .map(|(c, b, v)| (&c * &self.chi_word(&v, a), self.p.group.mul(b, a), v))
                    .collect();
                if lhs != self.normalize(rhs_terms) {
                    return Err(HopfError::NonConfluentPresentation(format!(
                        "relation {} against {}",
                        self.describe(&w),
                        self.p.group.label(a)
                    )));
                }
            }
        }
        Ok(())
    }

    fn assemble(&self) -> Result<HopfAlgebra, HopfError> {
        let p = self.p;
        let group = &p.group;
        let r = p.generators.len();
        let one = self.one();

        // PBW basis: (degree, group element, exponents descending)
        let mut exps_all: Vec<Vec<u32>> = vec![vec![]];
        for g in &p.generators {
            exps_all = exps_all
                .into_iter()
                .flat_map(|e| {
                    (0..g.nilpotency).map(move |k| {
                        let mut e = e.clone();
                        e.push(k);
                        e
                    })
                })
                .collect();
        }
        let mut keys: Vec<(GroupElem, Vec<u32>)> =
            exps_all.iter().flat_map(|e| group.elements().map(move |a| (a, e.clone()))).collect();
        keys.sort_by(|(a, e), (b, f)| {
            let de: u32 = e.iter().sum();
            let df: u32 = f.iter().sum();
            de.cmp(&df).then(a.cmp(b)).then(f.cmp(e))
        });
        let index: HashMap<(GroupElem, Vec<u32>), usize> = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let word_of = |e: &[u32]| -> Word {
            e.iter().enumerate().flat_map(|(k, &m)| std::iter::repeat_n(k as u8, m as usize)).collect()
        };
        let to_vector = |nf: Normal| -> Vector {
            let mut v = Vector::zero();
            for (k, c) in nf {
                v.add_term(index[&k], &c);
            }
            v
        };
        let labels: Vec<String> = keys
            .iter()
            .map(|(a, e)| {
                let mut s = String::new();
                if *a != group.identity() || e.iter().all(|&m| m == 0) {
                    s.push_str(group.label(*a));
                }
                for (k, &m) in e.iter().enumerate() {
                    match m {
                        0 => {}
                        1 => s.push_str(&p.generators[k].name),
                        _ => s.push_str(&format!("{}^{}", p.generators[k].name, m)),
                    }
                }
                s
            })
            .collect();

        let mult: Vec<Vec<Vector>> = keys
            .iter()
            .map(|(a, e)| {
                let w1 = word_of(e);
                keys.iter()
                    .map(|(b, f)| {
                        let mut w = w1.clone();
                        w.extend(word_of(f));
                        to_vector(self.normalize(vec![(self.chi_word(&w1, *b), group.mul(*a, *b), w)]))
                    })
                    .collect()
            })
            .collect();

        let ngroup = group.generators().len();
        let basis_of = |a: GroupElem, e: Vec<u32>| index[&(a, e)];
        let zero_exps = vec![0u32; r];
        let mut generators: Vec<(String, Vector)> = group
            .generators()
            .iter()
            .map(|(s, a)| (s.clone(), Vector::basis(basis_of(*a, zero_exps.clone()), &one)))
            .collect();
        for (k, g) in p.generators.iter().enumerate() {
            let mut e = zero_exps.clone();
            e[k] = 1;
            generators.push((g.name.clone(), Vector::basis(basis_of(group.identity(), e), &one)));
        }
        let basis_words: Vec<Vec<usize>> = keys
            .iter()
            .map(|(a, e)| {
                let mut w: Vec<usize> = group.word(*a).to_vec();
                w.extend(word_of(e).into_iter().map(|k| k as usize + ngroup));
                w
            })
            .collect();

        let n = keys.len();
        let unit = Vector::basis(basis_of(group.identity(), zero_exps.clone()), &one);
        let draft = HopfAlgebra::from_structure_unchecked(StructureData {
            name: p.name.clone(),
            field: p.field.clone(),
            labels: labels.clone(),
            mult,
            unit: unit.clone(),
            comult: vec![Vec::new(); n],
            counit: vec![p.field.zero(); n],
            antipode: vec![Vector::zero(); n],
            generators: generators.clone(),
            basis_words: basis_words.clone(),
            constants: p.constants.clone(),
        });
        let gi = |a: GroupElem| basis_of(a, zero_exps.clone());

        // Δ, ε, S on generators, extended (anti)multiplicatively along basis words
        let mut gen_delta: Vec<Tensor> = Vec::new();
        let mut gen_eps: Vec<Cyclo> = Vec::new();
        let mut gen_s: Vec<Vector> = Vec::new();
        for (_, a) in group.generators() {
            gen_delta.push(Tensor::basis((gi(*a), gi(*a)), &one));
            gen_eps.push(one.clone());
            gen_s.push(Vector::basis(gi(group.inv(*a)), &one));
        }
        for (k, g) in p.generators.iter().enumerate() {
            let x = generators[ngroup + k].1.clone();
            let xi = *x.iter().next().unwrap().0;
            let mut d = Tensor::zero();
            d.add_term((xi, gi(g.g)), &one);
            d.add_term((gi(g.h), xi), &one);
            gen_delta.push(d);
            gen_eps.push(p.field.zero());
            let hinv = Vector::basis(gi(group.inv(g.h)), &one);
            let ginv = Vector::basis(gi(group.inv(g.g)), &one);
            gen_s.push(draft.multiply(&draft.multiply(&hinv, &x), &ginv).scale(&-one.clone()));
        }
        let u = gi(group.identity());
        let unit_t = Tensor::basis((u, u), &one);
        let mut comult = Vec::with_capacity(n);
        let mut counit = Vec::with_capacity(n);
        let mut antipode = Vec::with_capacity(n);
        for w in &basis_words {
            let mut d = unit_t.clone();
            let mut e = one.clone();
            let mut s = unit.clone();
            for &k in w {
                d = draft.multiply_tensor(&d, &gen_delta[k]);
                e = &e * &gen_eps[k];
                s = draft.multiply(&gen_s[k], &s);
            }
            comult.push(d.iter().map(|((i, j), c)| (c.clone(), *i, *j)).collect());
            counit.push(e);
            antipode.push(s);
        }
        let mut data = draft.structure().clone();
        data.comult = comult;
        data.counit = counit;
        data.antipode = antipode;
        HopfAlgebra::from_structure(data)
    }
}

/// JSON form of a presentation, as read by `check-axioms --presentation`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PresentationSpec {
    pub name: String,
    pub group: GroupSpec,
    pub field_order: u32,
    #[serde(default)]
    pub constants: BTreeMap<String, String>,
    pub generators: Vec<GeneratorSpec>,
    #[serde(default)]
    pub cross: Vec<CrossSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Named(String),
    Abelian { orders: Vec<u32>, names: Vec<String> },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub name: String,
    /// (g, h) with Δ(x) = x⊗g + h⊗x.
    pub in_p: (String, String),
    pub chi: BTreeMap<String, String>,
    pub nilpotency: u32,
    #[serde(default = "zero_string")]
    pub power: String,
}

fn zero_string() -> String {
    "0".into()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CrossSpec {
    pub later: String,
    pub earlier: String,
    pub q: String,
    #[serde(default = "zero_string")]
    pub rhs: String,
}

impl PresentationSpec {
    pub fn to_presentation(&self) -> Result<PointedPresentation, HopfError> {
        let group = match &self.group {
            GroupSpec::Named(s) => FiniteGroup::named(s)?,
            GroupSpec::Abelian { orders, names } => {
                let names: Vec<&str> = names.iter().map(String::as_str).collect();
                FiniteGroup::abelian(orders, &names)?
            }
        };
        let mut p = PointedPresentation::new(&self.name, group, CyclotomicField::new(self.field_order)?);
        for (k, v) in &self.constants {
            p = p.constant(k, v)?;
        }
        for g in &self.generators {
            let chi: Vec<(&str, &str)> = g.chi.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
            p = p.skew(&g.name, (&g.in_p.0, &g.in_p.1), &chi, g.nilpotency, &g.power)?;
        }
        for c in &self.cross {
            p = p.cross(&c.later, &c.earlier, &c.q, &c.rhs)?;
        }
        Ok(p)
    }

    pub fn build(&self) -> Result<HopfAlgebra, HopfError> {
        self.to_presentation()?.build()
    }
}
