//! Multivariate polynomials over ℚ(ζ_m), stored as sorted term lists.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed};

use super::PolyError;
use crate::exactfield::{Cyclo, CyclotomicField};

pub type Exponents = Vec<u16>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    /// Two blocks: the first `k` variables, then the rest; degrevlex inside each.
    /// Eliminates the first block.
    Block(usize),
}

fn degree(a: &[u16]) -> u32 {
    a.iter().map(|&e| e as u32).sum()
}

fn degrevlex(a: &[u16], b: &[u16]) -> Ordering {
    let (da, db) = (degree(a), degree(b));
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u16], b: &[u16]) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Block(k) => degrevlex(&a[..k], &b[..k]).then_with(|| degrevlex(&a[k..], &b[k..])),
        }
    }
}

/// Polynomial ring ℚ(ζ_m)[vars] with a fixed monomial order.
#[derive(Debug)]
pub struct PolyRing {
    field: CyclotomicField,
    vars: Vec<String>,
    order: MonomialOrder,
}

pub type Ring = Arc<PolyRing>;

impl PolyRing {
    pub fn new(field: CyclotomicField, vars: Vec<String>, order: MonomialOrder) -> Ring {
        Arc::new(PolyRing { field, vars, order })
    }
    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }
    pub fn vars(&self) -> &[String] {
        &self.vars
    }
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }
    pub fn order(&self) -> MonomialOrder {
        self.order
    }
    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.vars == other.vars && self.order == other.order
    }
}

pub fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Clone)]
pub struct MultiPoly {
    ring: Ring,
    /// Strictly decreasing in the ring's monomial order; no zero coefficients.
    terms: Vec<(Exponents, Cyclo)>,
}

impl MultiPoly {
    pub fn zero(ring: &Ring) -> Self {
        MultiPoly { ring: ring.clone(), terms: Vec::new() }
    }
    pub fn constant(ring: &Ring, c: Cyclo) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((vec![0; ring.nvars()], c));
        }
        p
    }
    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, ring.field().one())
    }
    pub fn var(ring: &Ring, i: usize) -> Self {
        let mut e = vec![0; ring.nvars()];
        e[i] = 1;
        MultiPoly { ring: ring.clone(), terms: vec![(e, ring.field().one())] }
    }
    pub fn monomial(ring: &Ring, exps: Exponents, c: Cyclo) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((exps, c));
        }
        p
    }
    /// Collect arbitrary terms (merging duplicates, dropping zeros).
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Exponents, Cyclo)>) -> Self {
        let mut acc: HashMap<Exponents, Cyclo> = HashMap::new();
        for (e, c) in terms {
            match acc.get_mut(&e) {
                Some(v) => *v = &*v + &c,
                None => {
                    acc.insert(e, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let ord = ring.order();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        MultiPoly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }
    pub fn terms(&self) -> &[(Exponents, Cyclo)] {
        &self.terms
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.iter().all(|&x| x == 0))
    }
    /// The constant value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Cyclo> {
        if self.is_zero() {
            Some(self.ring.field().zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }
    pub fn leading(&self) -> Option<(&Exponents, &Cyclo)> {
        self.terms.first().map(|(e, c)| (e, c))
    }
    pub fn lm(&self) -> &Exponents {
        &self.terms[0].0
    }
    pub fn lc(&self) -> &Cyclo {
        &self.terms[0].1
    }
    /// Everything but the leading term.
    pub fn tail(&self) -> MultiPoly {
        MultiPoly { ring: self.ring.clone(), terms: self.terms.get(1..).unwrap_or(&[]).to_vec() }
    }
    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(e, _)| degree(e)).max().unwrap_or(0)
    }
    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    /// Which variables occur.
    pub fn support(&self) -> Vec<bool> {
        let mut s = vec![false; self.ring.nvars()];
        for (e, _) in &self.terms {
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    s[i] = true;
                }
            }
        }
        s
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(e, _)| e[var]).max().unwrap_or(0)
    }

    fn assert_ring(&self, other: &MultiPoly) {
        assert!(same_ring(&self.ring, &other.ring), "polynomial ring mismatch");
    }

    pub fn check_ring(&self, other: &MultiPoly) -> Result<(), PolyError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    fn merge(&self, other: &MultiPoly, negate: bool) -> MultiPoly {
        self.assert_ring(other);
        let ord = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &other.terms[j];
            match ord.cmp(ea, eb) {
                Ordering::Greater => {
                    out.push((ea.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((eb.clone(), if negate { -cb } else { cb.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        out.push((ea.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for (e, c) in &other.terms[j..] {
            out.push((e.clone(), if negate { -c } else { c.clone() }));
        }
        MultiPoly { ring: self.ring.clone(), terms: out }
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }
    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }
    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_ring(other)?;
        Ok(self * other)
    }

    pub fn scale(&self, c: &Cyclo) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        MultiPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    /// self · c·x^shift (order is preserved by multiplication with a monomial).
    pub fn mul_term(&self, shift: &[u16], c: &Cyclo) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, x)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), x * c))
            .collect();
        MultiPoly { ring: self.ring.clone(), terms }
    }

    /// self − c·x^shift·g, merging directly.
    pub fn sub_mul_term(&self, shift: &[u16], c: &Cyclo, g: &MultiPoly) -> MultiPoly {
        self.merge(&g.mul_term(shift, c), true)
    }

    pub fn monic(&self) -> MultiPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) if lc.is_one() => self.clone(),
            Some((_, lc)) => self.scale(&lc.inverse().expect("nonzero leading coefficient")),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient by the variable `var`, if every term is divisible by it.
    pub fn divide_by_var(&self, var: usize) -> Option<MultiPoly> {
        if self.is_zero() || self.terms.iter().any(|(e, _)| e[var] == 0) {
            return None;
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e[var] -= 1;
                (e, c.clone())
            })
            .collect();
        Some(MultiPoly { ring: self.ring.clone(), terms })
    }

    /// Replace variable `i` by `images[i]` (all in `target`).
    pub fn compose(&self, target: &Ring, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.ring.nvars());
        let mut cache: HashMap<(usize, u16), MultiPoly> = HashMap::new();
        let mut out = MultiPoly::zero(target);
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let p = cache.entry((i, k)).or_insert_with(|| images[i].pow(k as u32)).clone();
                t = &t * &p;
            }
            out = &out + &t;
        }
        out
    }

    /// Rename variables: variable `i` becomes variable `map[i]` of `target`.
    pub fn map_vars(&self, target: &Ring, map: &[usize]) -> MultiPoly {
        let n = target.nvars();
        MultiPoly::from_terms(
            target,
            self.terms.iter().map(|(e, c)| {
                let mut f = vec![0u16; n];
                for (i, &k) in e.iter().enumerate() {
                    if k > 0 {
                        f[map[i]] += k;
                    }
                }
                (f, c.clone())
            }),
        )
    }

    /// Substitute `value` for variable `var`.
    pub fn substitute(&self, var: usize, value: &MultiPoly) -> MultiPoly {
        if self.degree_in(var) == 0 {
            return self.clone();
        }
        let images: Vec<MultiPoly> = (0..self.ring.nvars())
            .map(|i| if i == var { value.clone() } else { MultiPoly::var(&self.ring, i) })
            .collect();
        self.compose(&self.ring, &images)
    }

    pub fn evaluate(&self, point: &[Cyclo]) -> Cyclo {
        let mut acc = self.ring.field().zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t = &t * &point[i];
                }
            }
            acc = &acc + &t;
        }
        acc
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}
impl Eq for MultiPoly {}

impl std::ops::Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.merge(rhs, false)
    }
}
impl std::ops::Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.merge(rhs, true)
    }
}
impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}
impl std::ops::Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.assert_ring(rhs);
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        if rhs.terms.len() == 1 {
            return self.mul_term(&rhs.terms[0].0, &rhs.terms[0].1);
        }
        if self.terms.len() == 1 {
            return rhs.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                terms.push((ea.iter().zip(eb).map(|(a, b)| a + b).collect(), ca * cb));
            }
        }
        MultiPoly::from_terms(&self.ring, terms)
    }
}

pub(crate) fn fmt_monomial(vars: &[String], e: &[u16]) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(vars[i].clone()),
            _ => parts.push(format!("{}^{}", vars[i], k)),
        }
    }
    parts.join("*")
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let mono = fmt_monomial(&self.ring.vars, e);
            // sign handling only when the coefficient is rational
            let (neg, body) = match c.as_rational() {
                Some(r) => {
                    let a = r.abs();
                    let body = if mono.is_empty() {
                        a.to_string()
                    } else if a.is_one() {
                        mono.clone()
                    } else {
                        format!("{a}*{mono}")
                    };
                    (r.is_negative(), body)
                }
                None => {
                    let body = if mono.is_empty() { format!("({c})") } else { format!("({c})*{mono}") };
                    (false, body)
                }
            };
            match (idx, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
